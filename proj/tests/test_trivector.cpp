#include <doctest.h>

#include "clasper/trivector.hpp"

#include <random>

using namespace clasper;

namespace {

Int det3(const std::array<std::array<Int, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GroupElement random_element(const FgAbelianGroup& g, std::mt19937_64& rng) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < g.rank(); ++i) c.push_back(Int(rng() % 9) - 4);
    return g.element(std::move(c));
}

}  // namespace

TEST_CASE("wedge is trilinear and alternating") {
    FgAbelianGroup z3({0, 0, 0});
    Trivector basic = wedge(z3.basis_element(0), z3.basis_element(1), z3.basis_element(2));
    CHECK(basic.coeff({0, 1, 2}) == 1);
    CHECK(basic.coeffs().size() == 1);

    CHECK(wedge(z3.basis_element(0), z3.basis_element(0), z3.basis_element(1)).is_zero());

    Trivector expanded = wedge(z3.element({1, 1, 0}), z3.basis_element(1), z3.basis_element(2));
    CHECK(expanded == basic);

    Trivector swapped = wedge(z3.basis_element(1), z3.basis_element(0), z3.basis_element(2));
    CHECK(swapped == basic * Int(-1));
}

TEST_CASE("pairing on the documented examples") {
    FgAbelianGroup z23({2, 2, 2});
    DualGroup dual = dual_group(z23, 2);
    Trivector y = wedge(dual.basis_element(0), dual.basis_element(1), dual.basis_element(2));
    Trivector x = wedge(z23.basis_element(0), z23.basis_element(1), z23.basis_element(2));
    CHECK(pairing_n(y, x, 2) == 1);
    CHECK(pairing_n(y, Trivector{TrivectorSpace(z23)}, 2) == 0);

    FgAbelianGroup h({2, 2, 4});
    DualGroup dual4 = dual_group(h, 4);
    Trivector y4 = wedge(dual4.basis_element(0), dual4.basis_element(1), dual4.basis_element(2));
    Trivector x4 = wedge(h.basis_element(0), h.basis_element(1), h.basis_element(2));
    CHECK(pairing_n(y4, x4, 4) == 0);  // det diag(2,2,1) = 4 = 0 mod 4
}

TEST_CASE("pairing equals the determinant of generator pairings") {
    std::mt19937_64 rng(11);
    for (const auto& orders :
         std::vector<std::vector<Int>>{{2, 4, 8}, {3, 6, 0}, {2, 2, 2, 4}, {0, 0, 0}}) {
        FgAbelianGroup h{orders};
        for (Int n : {Int(0), Int(2), Int(4), Int(6)}) {
            DualGroup dual = dual_group(h, n);
            for (int trial = 0; trial < 25; ++trial) {
                std::array<GroupElement, 3> ys{random_element(dual.group(), rng),
                                               random_element(dual.group(), rng),
                                               random_element(dual.group(), rng)};
                std::array<GroupElement, 3> xs{random_element(h, rng), random_element(h, rng),
                                               random_element(h, rng)};
                std::array<std::array<Int, 3>, 3> m;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) m[i][j] = pair(dual, ys[i], xs[j]);
                Int via_det = mod_reduce(det3(m), n);
                Int via_basis = pairing_n(wedge(ys[0], ys[1], ys[2]),
                                          wedge(xs[0], xs[1], xs[2]), n);
                CHECK(via_basis == via_det);
            }
        }
    }
}

TEST_CASE("pairing is linear and antisymmetric in the functional slots") {
    std::mt19937_64 rng(13);
    FgAbelianGroup h({2, 4, 6});
    for (Int n : {Int(2), Int(4), Int(12)}) {
        DualGroup dual = dual_group(h, n);
        for (int trial = 0; trial < 30; ++trial) {
            GroupElement y1 = random_element(dual.group(), rng);
            GroupElement y2 = random_element(dual.group(), rng);
            GroupElement y3 = random_element(dual.group(), rng);
            GroupElement y1b = random_element(dual.group(), rng);
            Trivector x{TrivectorSpace(h)};
            for (const auto& t : TrivectorSpace(h).basis_triples())
                x.add_term(t[0], t[1], t[2], Int(rng() % 5));
            Int lhs = pairing_n(wedge(y1 + y1b, y2, y3), x, n);
            Int rhs = mod_reduce(
                pairing_n(wedge(y1, y2, y3), x, n) + pairing_n(wedge(y1b, y2, y3), x, n), n);
            CHECK(lhs == rhs);
            Int swapped = pairing_n(wedge(y2, y1, y3), x, n);
            CHECK(mod_reduce(swapped + pairing_n(wedge(y1, y2, y3), x, n), n) == 0);
        }
    }
}

TEST_CASE("basis coefficient formula") {
    CHECK(basis_coefficient(4, 2, 2, 4) == 2);
    CHECK(basis_coefficient(2, 2, 2, 2) == 1);
    // fully degenerate case: the coefficient is 1 and the consistency
    // identity below pins it (1 * m/gcd = pairing = 1)
    for (Int m : {Int(2), Int(3), Int(8)}) CHECK(basis_coefficient(m, m, m, m) == 1);
    CHECK_THROWS_AS(basis_coefficient(0, 2, 2, 2), ClasperError);
}

TEST_CASE("basis coefficient consistency identity, exhaustively") {
    // coefficient * m/gcd(m, n_i, n_j, n_k) = <e_i* ^ e_j* ^ e_k*, e_i ^ e_j ^ e_k>  (mod m)
    std::vector<Int> pool{0, 2, 3, 4, 6, 8, 12};
    for (Int m = 1; m <= 24; ++m)
        for (const Int& ni : pool)
            for (const Int& nj : pool)
                for (const Int& nk : pool) {
                    FgAbelianGroup g({ni, nj, nk});
                    DualGroup dual = dual_group(g, m);
                    Trivector y = wedge(dual.basis_element(0), dual.basis_element(1),
                                        dual.basis_element(2));
                    Trivector x = wedge(g.basis_element(0), g.basis_element(1),
                                        g.basis_element(2));
                    Int g3 = gcd(m, gcd(ni, gcd(nj, nk)));
                    Int lhs = mod_reduce(basis_coefficient(m, ni, nj, nk) * (m / g3), m);
                    CHECK(lhs == pairing_n(y, x, m));
                }
}

TEST_CASE("nonzero detection on the documented examples") {
    FgAbelianGroup z23({2, 2, 2});
    Trivector zero{TrivectorSpace(z23)};
    CHECK_FALSE(detect_nonzero(zero).has_value());

    Trivector x = wedge(z23.basis_element(0), z23.basis_element(1), z23.basis_element(2));
    CHECK(detect_nonzero(x) == Int(2));

    FgAbelianGroup h({2, 2, 4});
    Trivector x2 = wedge(h.basis_element(0), h.basis_element(1), h.basis_element(2));
    CHECK(detect_nonzero(x2) == Int(2));

    FgAbelianGroup free_group({0, 0, 0});
    CHECK_THROWS_AS(detect_nonzero(Trivector{TrivectorSpace(free_group)}), InfiniteGroupError);
}

TEST_CASE("exterior cube of homomorphisms") {
    FgAbelianGroup z3({0, 0, 0});
    Trivector basic = wedge(z3.basis_element(0), z3.basis_element(1), z3.basis_element(2));

    CHECK(exterior_cube_hom(Homomorphism::identity(z3), basic) == basic);

    auto t = tensor_mod(z3, 2);
    Trivector reduced = exterior_cube_hom(t.reduction, basic);
    CHECK(reduced.coeff({0, 1, 2}) == 1);

    Homomorphism swap(z3, z3,
                      {z3.basis_element(1), z3.basis_element(0), z3.basis_element(2)});
    CHECK(exterior_cube_hom(swap, basic) == basic * Int(-1));
}

TEST_CASE("exterior cube is functorial") {
    std::mt19937_64 rng(17);
    FgAbelianGroup a({4, 2, 0}), b({2, 2, 2}), c({2, 2});
    auto reduction_ab = [&] {
        // a -> b: reduce mod 2 coordinatewise
        std::vector<GroupElement> images;
        for (std::size_t i = 0; i < a.rank(); ++i) images.push_back(b.basis_element(i));
        return Homomorphism(a, b, images);
    }();
    Homomorphism fold(b, c, {c.basis_element(0), c.basis_element(1), c.element({1, 1})});
    Homomorphism composite = fold.compose_after(reduction_ab);
    for (int trial = 0; trial < 20; ++trial) {
        Trivector x{TrivectorSpace(a)};
        for (const auto& t : TrivectorSpace(a).basis_triples())
            x.add_term(t[0], t[1], t[2], Int(rng() % 5) - 2);
        CHECK(exterior_cube_hom(composite, x) ==
              exterior_cube_hom(fold, exterior_cube_hom(reduction_ab, x)));
    }
}
