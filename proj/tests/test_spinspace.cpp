#include <doctest.h>

#include "clasper/spinspace.hpp"

#include <random>

using namespace clasper;

namespace {

AffineFn random_affine(const SpinSpace& s, std::mt19937_64& rng) {
    std::vector<Int> slope(s.homology().rank());
    for (std::size_t i : s.even_indices()) slope[i] = rng() % 2;
    return AffineFn(s, static_cast<int>(rng() % 2), std::move(slope));
}

}  // namespace

TEST_CASE("spin spaces pick out the even and zero order generators") {
    SpinSpace s(FgAbelianGroup({2, 3, 4, 0}));
    CHECK(s.dim() == 3);
    CHECK(s.even_indices() == std::vector<std::size_t>{0, 2, 3});
    CHECK(s.count() == 8);
    CHECK_FALSE(s.bit_position(1).has_value());
    CHECK(*s.bit_position(2) == 1);
    CHECK(SpinSpace(FgAbelianGroup(std::vector<Int>{})).count() == 1);
}

TEST_CASE("kappa on the documented examples") {
    SpinSpace s(FgAbelianGroup({0}));
    CHECK(kappa(AffineFn::one(s)).is_zero());
    AffineFn coord = AffineFn::coordinate(s, 0);
    CHECK(kappa(coord) == s.mod2_module().basis_element(0));

    std::mt19937_64 rng(2);
    SpinSpace s2(FgAbelianGroup({2, 3, 4}));
    for (int trial = 0; trial < 20; ++trial) {
        AffineFn f = random_affine(s2, rng), g = random_affine(s2, rng);
        CHECK(kappa(f + g) == kappa(f) + kappa(g));
        // the defining identity f(sigma0 + y) = f(sigma0) + <y, kappa(f)>
        for (SpinOffset y = 0; y < s2.count(); ++y) {
            int pairing = 0;
            for (std::size_t b = 0; b < s2.dim(); ++b)
                if ((y >> b) & 1)
                    pairing ^= static_cast<int>(kappa(f).coeffs()[s2.even_indices()[b]] & 1);
            CHECK(f.eval(y) == (f.eval(0) ^ pairing));
        }
    }
    // coordinate functions of odd-order generators vanish
    CHECK(AffineFn::coordinate(s2, 1) == AffineFn::zero(s2));
}

TEST_CASE("cubic products expand correctly") {
    SpinSpace s(FgAbelianGroup({0, 0, 0}));
    AffineFn one = AffineFn::one(s);
    AffineFn e1 = AffineFn::coordinate(s, 0), e2 = AffineFn::coordinate(s, 1),
             e3 = AffineFn::coordinate(s, 2);

    CubicFn c1 = cubic_product(one, one, one);
    CHECK(c1.monomials() == std::set<std::vector<std::size_t>>{{}});

    CubicFn c123 = cubic_product(e1, e2, e3);
    CHECK(c123.monomials() == std::set<std::vector<std::size_t>>{{0, 1, 2}});

    CubicFn c112 = cubic_product(e1, e1, e2);
    CHECK(c112.monomials() == std::set<std::vector<std::size_t>>{{0, 1}});

    // pointwise agreement over the whole spin space, for random triples
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        AffineFn f1 = random_affine(s, rng), f2 = random_affine(s, rng),
                 f3 = random_affine(s, rng);
        CubicFn prod = cubic_product(f1, f2, f3);
        for (SpinOffset y = 0; y < s.count(); ++y)
            CHECK(prod.eval(y) == (f1.eval(y) & f2.eval(y) & f3.eval(y)));
    }
}

TEST_CASE("third derivative on the documented examples") {
    SpinSpace s(FgAbelianGroup({0, 0, 0}));
    std::mt19937_64 rng(6);

    // degree <= 1 cancels
    for (int trial = 0; trial < 10; ++trial) {
        AffineFn f = random_affine(s, rng);
        CubicFn as_cubic(s);
        if (f.constant()) as_cubic.toggle({});
        for (std::size_t i : s.even_indices())
            if (f.slope_bits()[i] == 1) as_cubic.toggle({i});
        CHECK(d3(as_cubic).is_zero());
    }

    CubicFn mono(s);
    mono.toggle({0, 1, 2});
    Trivector expected{TrivectorSpace(s.mod2_module())};
    expected.add_term(0, 1, 2, 1);
    CHECK(d3(mono) == expected);

    // d3(f1 f2 f3) = kappa(f1) ^ kappa(f2) ^ kappa(f3), any base point
    SpinSpace s2(FgAbelianGroup({2, 3, 4, 0}));
    for (int trial = 0; trial < 60; ++trial) {
        AffineFn f1 = random_affine(s2, rng), f2 = random_affine(s2, rng),
                 f3 = random_affine(s2, rng);
        CubicFn prod = cubic_product(f1, f2, f3);
        Trivector expected2 = wedge(kappa(f1), kappa(f2), kappa(f3));
        for (SpinOffset base = 0; base < s2.count(); ++base)
            CHECK(d3(prod, base) == expected2);
    }
}

TEST_CASE("pull-back composition and decomposition") {
    SpinSpace s(FgAbelianGroup({4, 3, 0}));
    PullbackP p(s);
    CHECK(p.pair().group.orders() == std::vector<Int>{2, 4, 3, 0});
    CHECK(p.pair().s == p.pair().group.basis_element(0));

    GroupElement x = s.homology().element({3, 2, 5});
    AffineFn f(s, 1, {3, 2, 5});  // slope reduces to x mod 2
    GroupElement composed = p.compose(x, f);
    auto [x2, f2] = p.decompose(composed);
    CHECK(x2 == x);
    CHECK(f2 == f);

    // a mismatched slope violates the pull-back constraint
    AffineFn bad(s, 0, {1, 0, 0});
    CHECK_THROWS_AS(p.compose(s.homology().zero(), bad), ConstraintViolationError);

    // universality: each compatible pair arises from exactly one element
    SpinSpace small(FgAbelianGroup({2, 3}));
    PullbackP ps(small);
    std::set<std::pair<std::vector<Int>, std::pair<int, std::vector<Int>>>> seen;
    for (const GroupElement& e : all_elements(ps.pair().group)) {
        auto [h, fn] = ps.decompose(e);
        CHECK(kappa(fn) == small.mod2_reduction().apply(h));
        seen.insert({h.coeffs(), {fn.constant(), fn.slope_bits()}});
    }
    CHECK(Int(seen.size()) == ps.pair().group.group_order());
}

TEST_CASE("gamma and its section on the documented examples") {
    SpinSpace s(FgAbelianGroup({0}));
    AffineFunctionGroup ag(s);
    const FgAbelianGroup& a = ag.pair().group;
    YGroupStructure yg = y_group(ag.pair());

    // |Y(A(S,Z2), 1)| = |C(S, Z2)| = 4 for one free generator
    CHECK(yg.quotient().group_order() == 4);
    CHECK(cubic_monomial_basis(s).size() == 2);

    GroupElement one = a.basis_element(0);
    CubicFn c = gamma_terms(ag, {YTerm{1, one, one, one}});
    CHECK(c.monomials() == std::set<std::vector<std::size_t>>{{}});

    SpinSpace s2(FgAbelianGroup({0, 0}));
    AffineFunctionGroup ag2(s2);
    CubicFn pair_mono(s2);
    pair_mono.toggle({0, 1});
    auto terms = epsilon_cubic(ag2, pair_mono);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].a1 == ag2.pair().group.basis_element(1));
    CHECK(terms[0].a2 == ag2.pair().group.basis_element(2));
    CHECK(terms[0].a3 == ag2.pair().group.basis_element(0));  // the constant 1
    CHECK(gamma_terms(ag2, terms) == pair_mono);
}

TEST_CASE("the pull-back map and its section on the documented examples") {
    SpinSpace s(FgAbelianGroup({0, 0, 0}));
    PullbackP p(s);
    const FgAbelianGroup& pg = p.pair().group;

    GroupElement one = pg.basis_element(0);
    WImage w = w_map_terms(p, {YTerm{1, one, one, one}});
    CHECK(w.wedge_part.is_zero());
    CHECK(w.cubic_part.monomials() == std::set<std::vector<std::size_t>>{{}});

    WImage w3 = w_map_terms(
        p, {YTerm{1, pg.basis_element(1), pg.basis_element(2), pg.basis_element(3)}});
    CHECK(w3.wedge_part.coeff({0, 1, 2}) == 1);
    CHECK(w3.cubic_part.monomials() == std::set<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(in_pullback(s, w3));

    WImage single{Trivector{TrivectorSpace(s.homology())}, CubicFn(s)};
    single.cubic_part.toggle({0});
    CHECK(w_map_terms(p, epsilon_tri(p, single)) == single);

    // an incompatible pair is rejected
    WImage bad{Trivector{TrivectorSpace(s.homology())}, CubicFn(s)};
    bad.cubic_part.toggle({0, 1, 2});
    CHECK_FALSE(in_pullback(s, bad));
    CHECK_THROWS_AS(epsilon_tri(p, bad), ConstraintViolationError);
}

TEST_CASE("pull-back target factors computed from the kernel lattice") {
    // spot checks against directly assembled basis orders
    SpinSpace s0(FgAbelianGroup(std::vector<Int>{}));
    CHECK(pullback_target_factors(s0) == std::vector<Int>{2});

    SpinSpace s1(FgAbelianGroup({0}));
    CHECK(pullback_target_factors(s1) == std::vector<Int>{2, 2});

    SpinSpace s2(FgAbelianGroup({0, 0, 0}));
    // basis: (0,1), 3 x (0, e-bar), 3 x (0, pair), 1 x (wedge, triple) of order 0
    auto factors = pullback_target_factors(s2);
    CHECK(factors == invariant_factors(FgAbelianGroup({2, 2, 2, 2, 2, 2, 2, 0})));
}
