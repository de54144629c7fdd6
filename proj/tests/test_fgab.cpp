#include <doctest.h>

#include "clasper/fgab.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace clasper;

namespace {

Mat from_rows(std::vector<std::vector<Int>> rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

bool is_identity(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void check_snf(const Mat& a) {
    SmithResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    // integer two-sided inverses certify unimodularity
    CHECK(is_identity(s.u * s.uinv));
    CHECK(is_identity(s.uinv * s.u));
    CHECK(is_identity(s.v * s.vinv));
    CHECK(is_identity(s.vinv * s.v));
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
        CHECK(s.diag[i] >= 0);
        if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
    }
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the documented examples") {
    Mat a = from_rows({{2, 0}, {0, 3}});
    SmithResult s = smith_normal_form(a);
    CHECK(s.diag == std::vector<Int>{1, 6});
    check_snf(a);

    Mat zero = from_rows({{0, 0}, {0, 0}});
    SmithResult sz = smith_normal_form(zero);
    CHECK(sz.d == zero);
    CHECK(is_identity(sz.u));
    CHECK(is_identity(sz.v));

    Mat id3 = Mat::identity(3);
    SmithResult si = smith_normal_form(id3);
    CHECK(si.d == id3);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
        Mat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Int(rng() % 21) - 10;
        check_snf(a);
    }
    // wide coefficient range and rank-deficient shapes
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t m = 1 + rng() % 6, n = 1 + rng() % 6;
        Mat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = (Int(rng() % 2000001) - 1000000) * Int(rng() % 3 ? 1 : 0);
        check_snf(a);
    }
    check_snf(Mat(0, 4));
    check_snf(Mat(4, 0));
    check_snf(Mat(0, 0));
    check_snf(Mat(1, 5));
    Mat tall(5, 1);
    for (std::size_t i = 0; i < 5; ++i) tall.at(i, 0) = Int(6 * (i + 1));
    check_snf(tall);
}

TEST_CASE("linear solving and kernels") {
    Mat a = from_rows({{2, 4}, {1, 3}});
    auto x = solve_linear(a, {2, 2});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<Int>{2, 2});
    CHECK_FALSE(solve_linear(from_rows({{2}}), {1}).has_value());

    auto kernel = kernel_lattice(from_rows({{1, 2, 3}}));
    CHECK(kernel.size() == 2);
    for (const auto& v : kernel)
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("groups reject invalid orders and reduce elements canonically") {
    CHECK_THROWS_AS(FgAbelianGroup({Int(1)}), ClasperError);
    CHECK_THROWS_AS(FgAbelianGroup({Int(-2)}), ClasperError);
    FgAbelianGroup g({4, 0});
    GroupElement x = g.element({7, -3});
    CHECK(x.coeffs() == std::vector<Int>{3, -3});
    CHECK(x + x == g.element({6, -6}));
    CHECK((x * 4).coeffs() == std::vector<Int>{0, -12});
    CHECK(g.group_order() == 0);
    CHECK(FgAbelianGroup({3, 5}).group_order() == 15);
    CHECK(FgAbelianGroup({4, 6, 0}).torsion_exponent() == 12);
}

TEST_CASE("group presentations give invariant-factor form") {
    auto p = group_from_presentation(2, from_rows({{2, 0}}));
    CHECK(p.group.orders() == std::vector<Int>{2, 0});

    auto killed = group_from_presentation(1, from_rows({{1}}));
    CHECK(killed.group.orders().empty());

    auto free3 = group_from_presentation(3, Mat(0, 3));
    CHECK(free3.group.orders() == std::vector<Int>{0, 0, 0});

    // projection respects the relations
    FgAbelianGroup free_group(std::vector<Int>{0, 0});
    CHECK(p.projection.apply(free_group.element({2, 0})).is_zero());
    CHECK_FALSE(p.projection.apply(free_group.element({1, 0})).is_zero());
}

TEST_CASE("invariant factors canonicalize order lists") {
    CHECK(invariant_factors(FgAbelianGroup({4, 3})) == std::vector<Int>{12});
    CHECK(invariant_factors(FgAbelianGroup({2, 6})) == std::vector<Int>{2, 6});
    CHECK(invariant_factors(FgAbelianGroup({2, 2, 3})) == std::vector<Int>{2, 6});
    CHECK(invariant_factors(FgAbelianGroup({0, 2})) == std::vector<Int>{2, 0});
}

TEST_CASE("dual groups follow the pairing convention") {
    FgAbelianGroup h({2, 0});
    DualGroup dual = dual_group(h, 4);
    CHECK(dual.group().orders() == std::vector<Int>{2, 4});
    CHECK(pair(dual, dual.basis_element(0), h.basis_element(0)) == 2);
    CHECK(pair(dual, dual.basis_element(1), h.basis_element(1)) == 1);
    CHECK(pair(dual, dual.basis_element(0), h.basis_element(1)) == 0);

    CHECK(dual_group(FgAbelianGroup({3}), 2).group().group_order() == 1);
    CHECK(dual_group(h, 1).group().group_order() == 1);

    // n = 0 reads as integer duals: unit 1 on free generators, 0 on torsion
    DualGroup dz = dual_group(h, 0);
    CHECK(pair(dz, dz.basis_element(1), h.basis_element(1)) == 1);
    CHECK(pair(dz, dz.basis_element(0), h.basis_element(0)) == 0);
    CHECK(pair(dual, dual.zero(), h.basis_element(0)) == 0);
}

TEST_CASE("pairing is bilinear") {
    std::mt19937_64 rng(7);
    FgAbelianGroup h({4, 6, 0});
    for (Int n : {Int(0), Int(2), Int(12)}) {
        DualGroup dual = dual_group(h, n);
        for (int trial = 0; trial < 40; ++trial) {
            auto rand_elt = [&](const FgAbelianGroup& g) {
                std::vector<Int> c;
                for (std::size_t i = 0; i < g.rank(); ++i) c.push_back(Int(rng() % 13) - 6);
                return g.element(std::move(c));
            };
            GroupElement y = rand_elt(dual.group()), yp = rand_elt(dual.group());
            GroupElement x = rand_elt(h), xp = rand_elt(h);
            CHECK(pair(dual, y + yp, x) == mod_reduce(pair(dual, y, x) + pair(dual, yp, x), n));
            CHECK(pair(dual, y, x + xp) == mod_reduce(pair(dual, y, x) + pair(dual, y, xp), n));
        }
    }
}

TEST_CASE("tensor reductions") {
    CHECK(tensor_mod(FgAbelianGroup({0}), 2).group.orders() == std::vector<Int>{2});
    CHECK(tensor_mod(FgAbelianGroup({3}), 2).group.orders().empty());
    CHECK(tensor_mod(FgAbelianGroup({4, 0}), 2).group.orders() == std::vector<Int>{2, 2});
    auto t = tensor_mod(FgAbelianGroup({3, 4}), 2);
    CHECK(t.reduction.apply(FgAbelianGroup({3, 4}).element({1, 1})) ==
          t.group.element({1}));
}

TEST_CASE("homomorphism inverses certify isomorphisms") {
    FgAbelianGroup a({2, 4}), b({4, 2});
    Homomorphism swap(a, b, {b.element({0, 1}), b.element({1, 0})});
    REQUIRE(swap.is_isomorphism());
    auto inv = swap.inverse();
    CHECK(inv->compose_after(swap) == Homomorphism::identity(a));

    Homomorphism doubling(a, a, {a.element({0, 0}), a.element({0, 2})});
    CHECK_FALSE(doubling.is_isomorphism());

    FgAbelianGroup z({0});
    Homomorphism neg(z, z, {z.element({-1})});
    CHECK(neg.is_isomorphism());
    Homomorphism twice(z, z, {z.element({2})});
    CHECK_FALSE(twice.is_isomorphism());
}

TEST_CASE("isomorphism enumeration on the documented examples") {
    CHECK(enumerate_isomorphisms(FgAbelianGroup({2, 2}), FgAbelianGroup({4})).empty());
    CHECK(enumerate_isomorphisms(FgAbelianGroup({2, 2}), FgAbelianGroup({2, 2})).size() == 6);
    CHECK(enumerate_isomorphisms(FgAbelianGroup({5}), FgAbelianGroup({5})).size() == 4);
    CHECK_THROWS_AS(enumerate_isomorphisms(FgAbelianGroup({0}), FgAbelianGroup({0})),
                    InfiniteGroupError);
}

namespace {

// Independent brute force: every image tuple, kept when it is a well-defined
// bijective homomorphism.
std::size_t brute_force_iso_count(const FgAbelianGroup& h, const FgAbelianGroup& hp) {
    std::vector<GroupElement> elements = all_elements(hp);
    std::vector<std::size_t> cursor(h.rank(), 0);
    std::size_t count = 0;
    for (;;) {
        std::vector<GroupElement> images;
        for (std::size_t i = 0; i < h.rank(); ++i) images.push_back(elements[cursor[i]]);
        Homomorphism f(h, hp, images);
        if (f.is_well_defined() && f.is_isomorphism()) ++count;
        std::size_t i = h.rank();
        while (i-- > 0) {
            if (++cursor[i] < elements.size()) break;
            cursor[i] = 0;
        }
        bool wrapped = true;
        for (std::size_t j = 0; j < h.rank(); ++j)
            if (cursor[j] != 0) wrapped = false;
        if (wrapped) break;
        if (h.rank() == 0) break;
    }
    return count;
}

}  // namespace

TEST_CASE("isomorphism streams match brute force and contain inverses") {
    std::vector<std::vector<Int>> types = {{2},    {3},    {4},       {2, 2},  {2, 4},
                                           {3, 3}, {8},    {2, 2, 2}, {4, 4},  {2, 2, 3},
                                           {2, 16}, {25},  {2, 2, 8}, {2, 2, 2, 2}};
    for (const auto& type : types) {
        FgAbelianGroup h(type);
        auto isos = enumerate_isomorphisms(h, h);
        CHECK(isos.size() == brute_force_iso_count(h, h));
        std::set<std::vector<std::vector<Int>>> table;
        for (const auto& f : isos) {
            std::vector<std::vector<Int>> key;
            for (const auto& im : f.images()) key.push_back(im.coeffs());
            table.insert(key);
        }
        for (const auto& f : isos) {
            auto inv = f.inverse();
            REQUIRE(inv.has_value());
            std::vector<std::vector<Int>> key;
            for (const auto& im : inv->images()) key.push_back(im.coeffs());
            CHECK(table.count(key) == 1);  // two-sided inverse among the outputs
        }
        // deterministic lexicographic order
        std::vector<std::vector<std::vector<Int>>> keys;
        for (const auto& f : isos) {
            std::vector<std::vector<Int>> key;
            for (const auto& im : f.images()) key.push_back(im.coeffs());
            keys.push_back(key);
        }
        CHECK(std::is_sorted(keys.begin(), keys.end()));
    }
}

TEST_CASE("abelian group types enumerate all isomorphism classes") {
    auto types = abelian_group_types(8);
    CHECK(types.size() == 11);  // 1+1+1+2+1+1+1+3
    std::set<std::vector<Int>> canonical;
    for (const auto& t : types) canonical.insert(invariant_factors(FgAbelianGroup(t)));
    CHECK(canonical.size() == types.size());  // pairwise non-isomorphic
}

TEST_CASE("dual homomorphisms transpose through the pairing") {
    // <psi^(n)(y'), x> = <y', psi(x)> for all generators
    FgAbelianGroup h({2, 4}), hp({4, 2});
    Homomorphism psi(h, hp, {hp.element({0, 1}), hp.element({1, 0})});
    for (Int n : {Int(2), Int(4), Int(0)}) {
        Homomorphism rho = dual_hom(psi, n);
        DualGroup dual_h = dual_group(h, n), dual_hp = dual_group(hp, n);
        for (std::size_t b = 0; b < hp.rank(); ++b)
            for (std::size_t j = 0; j < h.rank(); ++j) {
                Int lhs = pair(dual_h, rho.apply(dual_hp.basis_element(b)), h.basis_element(j));
                Int rhs = pair(dual_hp, dual_hp.basis_element(b), psi.apply(h.basis_element(j)));
                CHECK(lhs == rhs);
            }
    }
}
