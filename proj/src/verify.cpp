#include "clasper/verify.hpp"

#include "clasper/util.hpp"

#include <algorithm>
#include <sstream>

namespace clasper {

namespace {

std::string orders_str(const std::vector<Int>& orders) {
    std::ostringstream ss;
    ss << "[";
    for (std::size_t i = 0; i < orders.size(); ++i) ss << (i ? "," : "") << orders[i];
    ss << "]";
    return ss.str();
}

}  // namespace

VerifyReport verify_lemma_trivectors(const Int& max_order) {
    VerifyReport report;
    std::size_t groups = 0;
    unsigned long long vectors = 0;
    for (const auto& type : abelian_group_types(max_order)) {
        ++groups;
        FgAbelianGroup h(type);
        TrivectorSpace space(h);
        std::vector<IndexTriple> triples = space.basis_triples();
        std::vector<Int> radices;
        unsigned long long total = 1;
        for (const auto& t : triples) {
            radices.push_back(space.basis_order(t));
            total *= static_cast<unsigned long long>(radices.back());
        }
        vectors += total;
        std::vector<std::string> failures(worker_count());
        parallel_for(static_cast<std::size_t>(total), [&](std::size_t begin, std::size_t end) {
            std::size_t slot = triples.empty() ? 0 : (begin * worker_count()) / total;
            for (std::size_t linear = begin; linear < end; ++linear) {
                Trivector x{space};
                std::size_t rest = linear;
                bool expect_nonzero = false;
                for (std::size_t d = 0; d < triples.size(); ++d) {
                    auto radix = static_cast<std::size_t>(radices[d]);
                    std::size_t digit = rest % radix;
                    rest /= radix;
                    if (digit != 0) {
                        expect_nonzero = true;
                        x.add_term(triples[d][0], triples[d][1], triples[d][2], Int(digit));
                    }
                }
                auto detected = detect_nonzero(x);
                bool bad = detected.has_value() != expect_nonzero;
                if (!bad && detected && h.torsion_exponent() % *detected != 0) bad = true;
                if (bad && failures[slot].empty()) {
                    std::ostringstream ss;
                    ss << "H = " << orders_str(type) << ", vector index " << linear
                       << ": detection " << (detected ? "hit " + detected->str() : "missed")
                       << " but vector is " << (expect_nonzero ? "nonzero" : "zero");
                    failures[slot] = ss.str();
                }
            }
        });
        for (const auto& f : failures)
            if (!f.empty()) report.fail(f);
    }
    report.note("scanned " + std::to_string(groups) + " group types, " +
                std::to_string(vectors) + " trivectors, bound |H| <= " + max_order.str());
    return report;
}

std::vector<std::vector<Int>> small_spin_family(std::size_t max_generators) {
    const std::vector<Int> pool{0, 2, 3, 4};
    std::vector<std::vector<Int>> out{{}};
    std::vector<std::vector<Int>> frontier{{}};
    for (std::size_t len = 1; len <= max_generators; ++len) {
        std::vector<std::vector<Int>> next;
        for (const auto& base : frontier)
            for (const Int& n : pool) {
                if (!base.empty() && n < base.back()) continue;  // multisets only
                std::vector<Int> grown = base;
                grown.push_back(n);
                if (std::count(grown.begin(), grown.end(), Int(0)) > 1) continue;
                next.push_back(grown);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

VerifyReport verify_lemma_cubic(std::size_t max_generators) {
    VerifyReport report;
    std::size_t checked = 0;
    for (const auto& orders : small_spin_family(max_generators)) {
        FgAbelianGroup h(orders);
        SpinSpace space(h);
        AffineFunctionGroup ag(space);
        YGroupStructure yg = y_group(ag.pair());
        std::string tag = "H = " + orders_str(orders);
        ++checked;

        // invariant factors of Y(A(S,Z2), 1) vs the cubic-function basis
        auto monomials = cubic_monomial_basis(space);
        std::vector<Int> expected(monomials.size(), Int(2));
        if (yg.quotient().orders() != invariant_factors(FgAbelianGroup(expected))) {
            report.fail(tag + ": Y-group factors " + orders_str(yg.quotient().orders()) +
                        " differ from cubic-function factors " + orders_str(expected));
            continue;
        }
        // gamma o epsilon = id on every basis monomial, and 2 epsilon = 0
        for (const auto& mono : monomials) {
            CubicFn c(space);
            c.toggle(mono);
            auto terms = epsilon_cubic(ag, c);
            if (!(gamma_terms(ag, terms) == c)) {
                report.fail(tag + ": gamma(epsilon(monomial)) != monomial");
                break;
            }
            if (!(yg.normal_form(terms) * 2).is_zero()) {
                report.fail(tag + ": epsilon image not 2-torsion");
                break;
            }
        }
        // epsilon o gamma = id on the Y-group basis
        for (std::size_t j = 0; j < yg.quotient().rank(); ++j) {
            GroupElement elt = yg.quotient().basis_element(j);
            CubicFn c = gamma(ag, yg, elt);
            if (yg.normal_form(epsilon_cubic(ag, c)) != elt) {
                report.fail(tag + ": epsilon(gamma(basis)) != basis at " + std::to_string(j));
                break;
            }
        }
        // gamma factors through normal forms (exhaustive single terms)
        std::vector<GroupElement> colors = all_elements(ag.pair().group);
        auto gamma_consistent = [&] {
            for (const auto& a : colors)
                for (const auto& b : colors)
                    for (const auto& c : colors) {
                        YTerm term{1, a, b, c};
                        if (!(gamma_terms(ag, {term}) ==
                              gamma(ag, yg, yg.normal_form({term}))))
                            return false;
                    }
            return true;
        };
        if (!gamma_consistent())
            report.fail(tag + ": gamma is not constant on normal-form classes");
    }
    report.note("verified cubic-function isomorphism on " + std::to_string(checked) +
                " homology shapes");
    return report;
}

VerifyReport verify_lemma_tri(std::size_t max_generators) {
    VerifyReport report;
    std::size_t checked = 0;
    std::mt19937_64 rng(0x7121u);
    for (const auto& orders : small_spin_family(max_generators)) {
        FgAbelianGroup h(orders);
        SpinSpace space(h);
        PullbackP p(space);
        YGroupStructure yg = y_group(p.pair());
        std::string tag = "H = " + orders_str(orders);
        ++checked;

        if (yg.quotient().orders() != pullback_target_factors(space)) {
            report.fail(tag + ": Y(P) factors " + orders_str(yg.quotient().orders()) +
                        " differ from pull-back factors " +
                        orders_str(pullback_target_factors(space)));
            continue;
        }

        // W o epsilon = id on every pull-back basis element
        TrivectorSpace l3h(h);
        std::vector<std::pair<WImage, Int>> basis;  // element, order
        {
            WImage w{Trivector{l3h}, CubicFn(space)};
            w.cubic_part.toggle({});
            basis.push_back({w, 2});
            for (const auto& mono : cubic_monomial_basis(space)) {
                if (mono.empty() || mono.size() == 3) continue;
                WImage wm{Trivector{l3h}, CubicFn(space)};
                wm.cubic_part.toggle(mono);
                basis.push_back({wm, 2});
            }
            for (const auto& t : l3h.basis_triples()) {
                WImage wt{Trivector{l3h}, CubicFn(space)};
                wt.wedge_part.add_term(t[0], t[1], t[2], 1);
                wt.cubic_part.toggle({t[0], t[1], t[2]});  // drops when not pruned
                basis.push_back({wt, l3h.basis_order(t)});
            }
        }
        for (const auto& [w, order] : basis) {
            auto terms = epsilon_tri(p, w);
            if (!(w_map_terms(p, terms) == w)) {
                report.fail(tag + ": W(epsilon(basis)) != basis");
                break;
            }
            if (order > 0 && !(yg.normal_form(terms) * order).is_zero()) {
                report.fail(tag + ": epsilon image order mismatch");
                break;
            }
        }
        // epsilon o W = id on the Y(P) basis
        for (std::size_t j = 0; j < yg.quotient().rank(); ++j) {
            GroupElement elt = yg.quotient().basis_element(j);
            WImage w = w_map(p, yg, elt);
            if (yg.normal_form(epsilon_tri(p, w)) != elt) {
                report.fail(tag + ": epsilon(W(basis)) != basis at " + std::to_string(j));
                break;
            }
        }
        // W factors through normal forms (random single terms)
        for (int rep = 0; rep < 200; ++rep) {
            auto terms = random_y_terms(p, 1, rng);
            if (!(w_map_terms(p, terms) == w_map(p, yg, yg.normal_form(terms)))) {
                report.fail(tag + ": W is not constant on normal-form classes");
                break;
            }
        }
    }
    report.note("verified pull-back isomorphism on " + std::to_string(checked) +
                " homology shapes");
    return report;
}

VerifyReport verify_square(std::size_t trials, std::uint64_t seed) {
    VerifyReport report;
    const std::vector<std::vector<Int>> shapes{{}, {2}, {0, 0, 0}, {2, 4}, {2, 0}};
    for (std::size_t si = 0; si < shapes.size(); ++si) {
        std::mt19937_64 rng(seed + 977u * si);
        const auto& orders = shapes[si];
        std::size_t bad = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            InvariantRecord r = random_record(orders, rng);
            PullbackP p(r.spin);
            auto terms = random_y_terms(p, 1 + rng() % 3, rng);
            if (!check_square(r, p, terms)) ++bad;
        }
        if (bad)
            report.fail("shape " + orders_str(orders) + ": " + std::to_string(bad) + "/" +
                        std::to_string(trials) + " squares failed to commute");
        else
            report.note("shape " + orders_str(orders) + ": " + std::to_string(trials) +
                        " squares commute");
    }
    return report;
}

InvariantRecord random_record(const std::vector<Int>& orders, std::mt19937_64& rng) {
    InvariantRecord r;
    r.group = FgAbelianGroup(orders);
    r.spin = SpinSpace(r.group);
    r.moduli = default_moduli(r.group);

    const auto torsion = r.group.torsion_indices();
    const std::size_t t = torsion.size();
    r.linking.values.assign(t, std::vector<QmodZ>(t));
    for (std::size_t i = 0; i < t; ++i) {
        const Int& n = r.group.orders()[torsion[i]];
        Int unit;
        do {
            unit = Int(rng() % static_cast<unsigned long long>(n));
        } while (gcd(unit, n) != 1);
        r.linking.values[i][i] = QmodZ(unit, n);
    }

    for (SpinOffset s = 0; s < r.spin.count(); ++s) {
        QuadFn q;
        for (std::size_t i = 0; i < t; ++i) {
            const Int& n = r.group.orders()[torsion[i]];
            Int c = Int(rng() % static_cast<unsigned long long>(n));
            if (n % 2 == 0)
                q.gen_values.push_back(QmodZ(2 * c + 1, 2 * n));
            else
                q.gen_values.push_back(QmodZ(c, n));
        }
        r.quadratic.push_back(std::move(q));
    }

    for (const Int& n : r.moduli) r.cup[n] = {};
    TrivectorSpace space(r.group);
    std::size_t bumps = rng() % 4;
    for (std::size_t b = 0; b < bumps; ++b) {
        Trivector x{space};
        for (const auto& tr : space.basis_triples()) {
            Int order = space.basis_order(tr);
            Int c = order == 0 ? Int(rng() % 7) - 3
                               : Int(rng() % static_cast<unsigned long long>(order));
            x.add_term(tr[0], tr[1], tr[2], c);
        }
        for (const Int& n : r.moduli) {
            DualGroup dual = dual_group(r.group, n);
            CupTable& table = r.cup.at(n);
            for (const auto& [tr, c] : x.coeffs()) {
                Int val = c * dual.pairing_unit(tr[0]) * dual.pairing_unit(tr[1]) *
                          dual.pairing_unit(tr[2]);
                Int next = mod_reduce(table[tr] + val, n);
                if (next == 0)
                    table.erase(tr);
                else
                    table[tr] = next;
            }
        }
    }

    for (SpinOffset s = 0; s < r.spin.count(); ++s) r.rochlin.push_back(rng() % 16);

    auto violations = validate_record(r);
    if (!violations.empty())
        throw ClasperError("random record generator produced an invalid record: " +
                           violations.front());
    return r;
}

std::vector<YTerm> random_y_terms(const PullbackP& p, std::size_t count, std::mt19937_64& rng) {
    const FgAbelianGroup& g = p.pair().group;
    std::vector<YTerm> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto color = [&] {
            std::vector<Int> c(g.rank());
            for (std::size_t j = 0; j < g.rank(); ++j) {
                const Int& n = g.orders()[j];
                c[j] = n == 0 ? Int(rng() % 7) - 3
                              : Int(rng() % static_cast<unsigned long long>(n));
            }
            return g.element(std::move(c));
        };
        out.push_back(YTerm{rng() % 2 ? 1 : -1, color(), color(), color()});
    }
    return out;
}

FormalYGraph random_graph(const PullbackP& p, std::mt19937_64& rng) {
    YTerm t = random_y_terms(p, 1, rng).front();
    return FormalYGraph(p, t.sign, {t.a1, t.a2, t.a3});
}

std::vector<FormalYGraph> random_trivial_graphs(const PullbackP& p, std::size_t units,
                                                std::mt19937_64& rng) {
    std::vector<FormalYGraph> out;
    for (std::size_t u = 0; u < units; ++u) {
        YTerm t = random_y_terms(p, 1, rng).front();
        switch (rng() % 3) {
            case 0:  // a null leaf models a clasper of degree at least two
                out.push_back(FormalYGraph(p, t.sign, {t.a1, t.a2, p.pair().group.zero()}));
                break;
            case 1:  // cancelling pair
                out.push_back(FormalYGraph(p, 1, {t.a1, t.a2, t.a3}));
                out.push_back(FormalYGraph(p, -1, {t.a1, t.a2, t.a3}));
                break;
            default:  // slide-relation pair Y[a,a,b] - Y[s,a,b]
                out.push_back(FormalYGraph(p, 1, {t.a1, t.a1, t.a2}));
                out.push_back(FormalYGraph(p, -1, {p.pair().s, t.a1, t.a2}));
                break;
        }
    }
    return out;
}

InvariantRecord relabel_spin(const InvariantRecord& r, SpinOffset t) {
    InvariantRecord out = r;
    for (SpinOffset s = 0; s < r.spin.count(); ++s) {
        out.rochlin[s] = r.rochlin[s ^ t];
        out.quadratic[s] = r.quadratic[s ^ t];
    }
    return out;
}

}  // namespace clasper
