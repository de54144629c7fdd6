#include "clasper/surgery.hpp"

namespace clasper {

FormalYGraph::FormalYGraph(const PullbackP& p, int sign_, std::array<GroupElement, 3> leaves_)
    : sign(sign_), leaves(std::move(leaves_)) {
    if (sign != 1 && sign != -1) throw ClasperError("surgery sign must be +1 or -1");
    for (const GroupElement& leaf : leaves)
        if (leaf.group() != p.pair().group)
            throw GroupMismatchError("leaf is not an element of the pull-back group");
}

InvariantRecord apply_y_surgery(const InvariantRecord& r, const PullbackP& p,
                                const FormalYGraph& g) {
    if (p.space() != r.spin) throw GroupMismatchError("graph leaves live over a different record");
    std::array<GroupElement, 3> leaves = g.leaves;
    if (g.sign < 0) std::swap(leaves[0], leaves[1]);

    auto [h1, f1] = p.decompose(leaves[0]);
    auto [h2, f2] = p.decompose(leaves[1]);
    auto [h3, f3] = p.decompose(leaves[2]);
    Trivector x = wedge(h1, h2, h3);

    InvariantRecord out = r;
    for (const Int& n : r.moduli) {
        DualGroup dual = dual_group(r.group, n);
        CupTable& table = out.cup.at(n);
        for (const auto& [t, c] : x.coeffs()) {
            Int delta = c * dual.pairing_unit(t[0]) * dual.pairing_unit(t[1]) *
                        dual.pairing_unit(t[2]);
            Int next = mod_reduce(table[t] + delta, n);
            if (next == 0)
                table.erase(t);
            else
                table[t] = next;
        }
    }
    for (SpinOffset s = 0; s < r.spin.count(); ++s) {
        int prod = f1.eval(s) & f2.eval(s) & f3.eval(s);
        out.rochlin[s] = (out.rochlin[s] + 8 * prod) % 16;
    }
    return out;
}

InvariantRecord surgery_S(const InvariantRecord& r, const PullbackP& p,
                          const std::vector<FormalYGraph>& graphs) {
    InvariantRecord out = r;
    for (const FormalYGraph& g : graphs) out = apply_y_surgery(out, p, g);
    return out;
}

BElement map_E(const InvariantRecord& base, const InvariantRecord& other,
               const Homomorphism& psi, SpinOffset offset) {
    if (psi.source() != base.group || psi.target() != other.group)
        throw GroupMismatchError("comparison map needs psi: H -> H'");
    if (base.moduli != other.moduli)
        throw ModulusMismatchError("records configured with different modulus sets");
    auto psi_inverse = psi.inverse();
    if (!psi_inverse) throw ClasperError("comparison map needs an isomorphism");
    // precondition: the records share the linking pairing through psi
    const auto torsion = base.group.torsion_indices();
    const auto torsion_other = other.group.torsion_indices();
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = 0; j < torsion.size(); ++j) {
            GroupElement xi = psi.apply(base.group.basis_element(torsion[i]));
            GroupElement xj = psi.apply(base.group.basis_element(torsion[j]));
            std::vector<Int> ci, cj;
            for (std::size_t a : torsion_other) {
                ci.push_back(xi.coeffs()[a]);
                cj.push_back(xj.coeffs()[a]);
            }
            if (other.linking.eval(ci, cj) != base.linking.values[i][j])
                throw ClasperError("comparison map precondition: linking not preserved by psi");
        }

    BElement out = b_zero(base);
    const std::size_t rk = base.group.rank();
    for (const Int& n : base.moduli) {
        Homomorphism rho = dual_hom(*psi_inverse, n);  // dual(H, n) -> dual(H', n)
        CupTable& table = out.tables.at(n);
        for (std::size_t a = 0; a < rk; ++a)
            for (std::size_t b = a; b < rk; ++b)
                for (std::size_t c = b; c < rk; ++c) {
                    Int u_other = cup_eval(other, n, rho.images()[a], rho.images()[b],
                                           rho.images()[c]);
                    Int delta = mod_reduce(u_other - cup_entry(base, n, a, b, c), n);
                    if (delta != 0) table[{a, b, c}] = delta;
                }
    }
    // Rochlin part: value R'(sigma0' + y') - R(sigma0 + offset + psi^(2) y')
    // stored at sigma0 + offset + psi^(2) y'.
    Homomorphism psi2 = dual_hom(psi, 2);  // dual(H', 2) -> dual(H, 2)
    const SpinSpace& sp_other = other.spin;
    const SpinSpace& sp_base = base.spin;
    for (SpinOffset yp = 0; yp < sp_other.count(); ++yp) {
        // y' as an element of dual(H', 2)
        std::vector<Int> coeffs(other.group.rank());
        for (std::size_t b = 0; b < sp_other.dim(); ++b)
            if ((yp >> b) & 1) coeffs[sp_other.even_indices()[b]] = 1;
        GroupElement image = psi2.apply(psi2.source().element(std::move(coeffs)));
        SpinOffset at = offset;
        for (std::size_t b = 0; b < sp_base.dim(); ++b)
            if (mod_reduce(image.coeffs()[sp_base.even_indices()[b]], 2) == 1)
                at ^= SpinOffset(1) << b;
        out.rochlin[at] = ((other.rochlin[yp] - base.rochlin[at]) % 16 + 16) % 16;
    }
    return out;
}

BElement map_N(const InvariantRecord& shape, const WImage& w) {
    if (!in_pullback(shape.spin, w))
        throw ConstraintViolationError("argument of the embedding is not in the pull-back");
    BElement out = b_zero(shape);
    for (const Int& n : shape.moduli) {
        DualGroup dual = dual_group(shape.group, n);
        CupTable& table = out.tables.at(n);
        for (const auto& [t, c] : w.wedge_part.coeffs()) {
            Int val = mod_reduce(c * dual.pairing_unit(t[0]) * dual.pairing_unit(t[1]) *
                                     dual.pairing_unit(t[2]),
                                 n);
            if (val != 0) table[t] = val;
        }
    }
    for (SpinOffset s = 0; s < shape.spin.count(); ++s)
        out.rochlin[s] = 8 * w.cubic_part.eval(s);
    return out;
}

bool check_square(const InvariantRecord& base, const PullbackP& p,
                  const std::vector<YTerm>& terms) {
    std::vector<FormalYGraph> graphs;
    for (const YTerm& t : terms)
        graphs.push_back(FormalYGraph(p, t.sign, {t.a1, t.a2, t.a3}));
    InvariantRecord surgered = surgery_S(base, p, graphs);
    BElement lhs = map_E(base, surgered, Homomorphism::identity(base.group), 0);
    BElement rhs = map_N(base, w_map_terms(p, terms));
    return lhs == rhs;
}

}  // namespace clasper
