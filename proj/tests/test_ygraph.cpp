#include <doctest.h>

#include "clasper/trivector.hpp"
#include "clasper/ygraph.hpp"

#include <random>

using namespace clasper;

namespace {

GroupElement random_element(const FgAbelianGroup& g, std::mt19937_64& rng) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const Int& n = g.orders()[i];
        c.push_back(n == 0 ? Int(rng() % 7) - 3 : Int(rng() % static_cast<unsigned long long>(n)));
    }
    return g.element(std::move(c));
}

// First nonzero element of order two, if any.
std::optional<GroupElement> first_involution(const FgAbelianGroup& g) {
    for (const GroupElement& x : all_elements(g))
        if (!x.is_zero() && (x * 2).is_zero()) return x;
    return std::nullopt;
}

}  // namespace

TEST_CASE("Y-group structure on the documented examples") {
    FgAbelianGroup z3({0, 0, 0});
    YGroupStructure free3 = y_group(SpecialPair(z3, z3.zero()));
    CHECK(free3.quotient().orders() == std::vector<Int>{0});

    FgAbelianGroup z2({2});
    YGroupStructure torsion = y_group(SpecialPair(z2, z2.basis_element(0)));
    CHECK(torsion.quotient().orders() == std::vector<Int>{2});
    // generated by Y[s, s, s]
    GroupElement s = z2.basis_element(0);
    CHECK_FALSE(torsion.normal_form({YTerm{1, s, s, s}}).is_zero());

    FgAbelianGroup trivial(std::vector<Int>{});
    CHECK(y_group(SpecialPair(trivial, trivial.zero())).quotient().orders().empty());
}

TEST_CASE("special elements must have order at most two") {
    FgAbelianGroup z4({4});
    CHECK_THROWS_AS(SpecialPair(z4, z4.basis_element(0)), ClasperError);
    CHECK_NOTHROW(SpecialPair(z4, z4.element({2})));
}

TEST_CASE("normal forms implement multilinearity and the slide") {
    FgAbelianGroup z3({0, 0, 0});
    YGroupStructure yg = y_group(SpecialPair(z3, z3.zero()));
    GroupElement e1 = z3.basis_element(0), e2 = z3.basis_element(1), e3 = z3.basis_element(2);

    CHECK(yg.normal_form({YTerm{1, e1, e1, e2}}).is_zero());
    CHECK(yg.normal_form({YTerm{1, z3.element({1, 1, 0}), e2, e3}}) ==
          yg.normal_form({YTerm{1, e1, e2, e3}}));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        GroupElement a = random_element(z3, rng), b = random_element(z3, rng),
                     c = random_element(z3, rng);
        CHECK(yg.normal_form({YTerm{1, a, b, c}, YTerm{1, b, a, c}}).is_zero());
        // cyclic invariance of the generator notation
        CHECK(yg.normal_form({YTerm{1, a, b, c}, YTerm{-1, b, c, a}}).is_zero());
        CHECK(yg.normal_form({YTerm{1, a, b, c}, YTerm{-1, c, a, b}}).is_zero());
    }
}

TEST_CASE("the finitely many relations generate the full slide") {
    // nf(Y[a,a,b] - Y[s,a,b]) = 0 for all a, b, on a spread of pairs (A, s)
    std::vector<std::vector<Int>> types = {{2, 2}, {4}, {2, 4}, {3, 2}, {2, 2, 2}, {8}, {9}};
    for (const auto& type : types) {
        FgAbelianGroup a(type);
        std::vector<GroupElement> specials{a.zero()};
        if (auto s = first_involution(a)) specials.push_back(*s);
        for (const GroupElement& s : specials) {
            YGroupStructure yg = y_group(SpecialPair(a, s));
            for (const GroupElement& x : all_elements(a))
                for (const GroupElement& b : all_elements(a))
                    CHECK(yg.normal_form({YTerm{1, x, x, b}, YTerm{-1, s, x, b}}).is_zero());
        }
    }
}

TEST_CASE("Y of a pair with zero special element matches the exterior cube") {
    // same invariant factors, and the wedge map is a bijection on normal
    // forms: all order lists with <= 4 entries from {0,2,3,4}, a zero entry
    // only below rank four
    std::vector<std::vector<Int>> types{{}};
    {
        const std::vector<Int> pool{0, 2, 3, 4};
        std::vector<std::vector<Int>> frontier{{}};
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::vector<Int>> next;
            for (const auto& base : frontier)
                for (const Int& n : pool) {
                    if (!base.empty() && n < base.back()) continue;
                    bool has_zero = n == 0 || (!base.empty() && base.front() == 0);
                    if (len == 4 && has_zero) continue;
                    std::vector<Int> grown = base;
                    grown.push_back(n);
                    next.push_back(grown);
                }
            types.insert(types.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
    }
    for (const auto& type : types) {
        FgAbelianGroup h(type);
        YGroupStructure yg = y_group(SpecialPair(h, h.zero()));
        TrivectorSpace l3(h);
        std::vector<Int> pruned;
        for (const auto& t : l3.basis_triples())
            if (l3.basis_order(t) != 1) pruned.push_back(l3.basis_order(t));
        CHECK(yg.quotient().orders() == invariant_factors(FgAbelianGroup(pruned)));

        // wedge image of each quotient generator, then back through Y-terms
        for (std::size_t j = 0; j < yg.quotient().rank(); ++j) {
            std::vector<Int> lifted = yg.lift(j);
            Trivector w{l3};
            for (std::size_t g = 0; g < lifted.size(); ++g) {
                if (lifted[g] == 0) continue;
                const auto& gen = yg.generators()[g];
                w = w + wedge(h.basis_element(gen[0]), h.basis_element(gen[1]),
                              h.basis_element(gen[2])) *
                            lifted[g];
            }
            std::vector<YTerm> back;
            for (const auto& [t, c] : w.coeffs())
                back.push_back(YTerm{1, h.basis_element(t[0]) * c, h.basis_element(t[1]),
                                     h.basis_element(t[2])});
            CHECK(yg.normal_form(back) == yg.quotient().basis_element(j));
        }
        // and the other composition, on the wedge basis
        for (const auto& t : l3.basis_triples()) {
            if (l3.basis_order(t) == 1) continue;
            GroupElement nf = yg.normal_form({YTerm{
                1, h.basis_element(t[0]), h.basis_element(t[1]), h.basis_element(t[2])}});
            Trivector w{l3};
            for (std::size_t j = 0; j < yg.quotient().rank(); ++j) {
                if (nf.coeffs()[j] == 0) continue;
                std::vector<Int> lifted = yg.lift(j);
                for (std::size_t g = 0; g < lifted.size(); ++g) {
                    if (lifted[g] == 0) continue;
                    const auto& gen = yg.generators()[g];
                    w = w + wedge(h.basis_element(gen[0]), h.basis_element(gen[1]),
                                  h.basis_element(gen[2])) *
                                (lifted[g] * nf.coeffs()[j]);
                }
            }
            Trivector expected{l3};
            expected.add_term(t[0], t[1], t[2], 1);
            CHECK(w == expected);
        }
    }
}

TEST_CASE("Y is functorial") {
    FgAbelianGroup a({4, 2}), b({2, 2}), c({2});
    // reduction mod 2 on the first factor, identity on the second
    Homomorphism f(a, b, {b.basis_element(0), b.basis_element(1)});
    // fold both generators onto the single one
    Homomorphism g(b, c, {c.basis_element(0), c.basis_element(0)});

    SpecialPair pa(a, a.zero()), pb(b, b.zero()), pc(c, c.zero());
    YGroupStructure ya = y_group(pa), yb = y_group(pb), yc = y_group(pc);
    YMorphism yf = y_of_morphism(ya, yb, f);
    YMorphism yg_ = y_of_morphism(yb, yc, g);
    YMorphism ygf = y_of_morphism(ya, yc, g.compose_after(f));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        GroupElement nf = ya.normal_form({YTerm{1, random_element(a, rng),
                                                random_element(a, rng), random_element(a, rng)}});
        CHECK(ygf.apply(nf) == yg_.apply(yf.apply(nf)));
    }

    // identity morphism induces the identity map; zero goes to zero
    YMorphism yid = y_of_morphism(ya, ya, Homomorphism::identity(a));
    for (int trial = 0; trial < 10; ++trial) {
        GroupElement nf = ya.normal_form({YTerm{1, random_element(a, rng),
                                                random_element(a, rng), random_element(a, rng)}});
        CHECK(yid.apply(nf) == nf);
    }
    CHECK(yf.apply(ya.quotient().zero()).is_zero());

    // a reduction acts by reducing every color
    for (int trial = 0; trial < 10; ++trial) {
        GroupElement x1 = random_element(a, rng), x2 = random_element(a, rng),
                     x3 = random_element(a, rng);
        GroupElement lhs = yf.apply(ya.normal_form({YTerm{1, x1, x2, x3}}));
        GroupElement rhs =
            yb.normal_form({YTerm{1, f.apply(x1), f.apply(x2), f.apply(x3)}});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Y is functorial on random morphisms") {
    std::mt19937_64 rng(19);
    FgAbelianGroup a({4, 2}), b({2, 2, 4}), c({8, 2});
    auto random_hom = [&](const FgAbelianGroup& src, const FgAbelianGroup& dst) {
        std::vector<GroupElement> all = all_elements(dst);
        std::vector<GroupElement> images;
        for (std::size_t i = 0; i < src.rank(); ++i) {
            std::vector<GroupElement> candidates;
            for (const GroupElement& x : all)
                if ((x * src.orders()[i]).is_zero()) candidates.push_back(x);
            images.push_back(candidates[rng() % candidates.size()]);
        }
        return Homomorphism(src, dst, std::move(images));
    };
    SpecialPair pa(a, a.zero()), pb(b, b.zero()), pc(c, c.zero());
    YGroupStructure ya = y_group(pa), yb = y_group(pb), yc = y_group(pc);
    for (int trial = 0; trial < 8; ++trial) {
        Homomorphism f = random_hom(a, b), g = random_hom(b, c);
        YMorphism yf = y_of_morphism(ya, yb, f);
        YMorphism yg_ = y_of_morphism(yb, yc, g);
        YMorphism ygf = y_of_morphism(ya, yc, g.compose_after(f));
        for (int inner = 0; inner < 10; ++inner) {
            GroupElement nf = ya.normal_form(
                {YTerm{1, random_element(a, rng), random_element(a, rng),
                       random_element(a, rng)}});
            CHECK(ygf.apply(nf) == yg_.apply(yf.apply(nf)));
        }
    }
}

TEST_CASE("Y morphisms must respect the special element") {
    FgAbelianGroup a({2}), b({2});
    SpecialPair pa(a, a.basis_element(0)), pb(b, b.zero());
    YGroupStructure ya = y_group(pa), yb = y_group(pb);
    CHECK_THROWS_AS(y_of_morphism(ya, yb, Homomorphism::identity(a)),
                    SpecialElementMismatchError);
}
