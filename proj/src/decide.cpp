#include "clasper/decide.hpp"

#include <algorithm>

namespace clasper {

std::string mode_name(DecideMode mode) {
    switch (mode) {
        case DecideMode::y1_spin: return "y1-spin";
        case DecideMode::y2_spin: return "y2-spin";
        default: return "y2";
    }
}

namespace {

FgAbelianGroup torsion_subgroup(const FgAbelianGroup& g) {
    std::vector<Int> orders;
    for (std::size_t i : g.torsion_indices()) orders.push_back(g.orders()[i]);
    return FgAbelianGroup(std::move(orders));
}

// psi restricted to torsion, in torsion coordinates of the target.
std::vector<Int> torsion_image(const InvariantRecord& rp, const GroupElement& image) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < image.coeffs().size(); ++i) {
        if (rp.group.orders()[i] > 0)
            out.push_back(image.coeffs()[i]);
        else if (image.coeffs()[i] != 0)
            throw ClasperError("isomorphism maps a torsion element outside the torsion part");
    }
    return out;
}

GroupElement embed_torsion(const InvariantRecord& r, const GroupElement& x) {
    std::vector<Int> c(r.group.rank());
    const auto torsion = r.group.torsion_indices();
    for (std::size_t i = 0; i < torsion.size(); ++i) c[torsion[i]] = x.coeffs()[i];
    return r.group.element(std::move(c));
}

// Spin offset of r reached from offset y' of rp through psi^(2).
SpinOffset transport_offset(const InvariantRecord& r, const InvariantRecord& rp,
                            const Homomorphism& psi2, SpinOffset yp) {
    GroupElement image = psi2.apply(offset_as_mod2(rp.spin, yp));
    return mod2_as_offset(r.spin, image);
}

bool quad_agree(const InvariantRecord& r, const InvariantRecord& rp, SpinOffset sigma,
                SpinOffset sigma_prime, const Homomorphism& psi) {
    FgAbelianGroup tg = torsion_subgroup(r.group);
    ElementRange range(tg);
    while (auto x = range.next()) {
        GroupElement image = psi.apply(embed_torsion(r, *x));
        QmodZ lhs = quad_value(rp.linking, rp.quadratic[sigma_prime], torsion_image(rp, image));
        QmodZ rhs = quad_value(r.linking, r.quadratic[sigma], x->coeffs());
        if (lhs != rhs) return false;
    }
    return true;
}

bool cup_agree(const InvariantRecord& r, const InvariantRecord& rp, const Homomorphism& psi) {
    if (r.moduli != rp.moduli)
        throw ModulusMismatchError("records configured with different modulus sets");
    const std::size_t rk = rp.group.rank();
    for (const Int& n : r.moduli) {
        Homomorphism rho = dual_hom(psi, n);  // dual(H', n) -> dual(H, n)
        for (std::size_t a = 0; a < rk; ++a)
            for (std::size_t b = a; b < rk; ++b)
                for (std::size_t c = b; c < rk; ++c) {
                    Int lhs = cup_entry(rp, n, a, b, c);
                    Int rhs = cup_eval(r, n, rho.images()[a], rho.images()[b], rho.images()[c]);
                    if (lhs != rhs) return false;
                }
    }
    return true;
}

bool linking_agree(const InvariantRecord& r, const InvariantRecord& rp,
                   const Homomorphism& psi) {
    const auto torsion = r.group.torsion_indices();
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = i; j < torsion.size(); ++j) {
            GroupElement xi = psi.apply(r.group.basis_element(torsion[i]));
            GroupElement xj = psi.apply(r.group.basis_element(torsion[j]));
            QmodZ lhs = rp.linking.eval(torsion_image(rp, xi), torsion_image(rp, xj));
            if (lhs != r.linking.values[i][j]) return false;
        }
    return true;
}

}  // namespace

bool check_y1_spin(const InvariantRecord& r, const InvariantRecord& rp, SpinOffset sigma,
                   SpinOffset sigma_prime, const Homomorphism& psi) {
    if (!psi.inverse()) throw ClasperError("check needs an isomorphism");
    return quad_agree(r, rp, sigma, sigma_prime, psi);
}

bool check_y2_spin(const InvariantRecord& r, const InvariantRecord& rp, SpinOffset sigma,
                   SpinOffset sigma_prime, const Homomorphism& psi) {
    if (!psi.inverse()) throw ClasperError("check needs an isomorphism");
    if (!quad_agree(r, rp, sigma, sigma_prime, psi)) return false;  // (a)
    if (!cup_agree(r, rp, psi)) return false;                       // (b)
    Homomorphism psi2 = dual_hom(psi, 2);                           // (c)
    for (SpinOffset yp = 0; yp < rp.spin.count(); ++yp) {
        SpinOffset at = sigma ^ transport_offset(r, rp, psi2, yp);
        if (rp.rochlin[sigma_prime ^ yp] != r.rochlin[at]) return false;
    }
    return true;
}

bool check_y2_plain(const InvariantRecord& r, const InvariantRecord& rp,
                    const Homomorphism& psi, SpinOffset offset) {
    if (!psi.inverse()) throw ClasperError("check needs an isomorphism");
    if (!linking_agree(r, rp, psi)) return false;  // (a)
    if (!cup_agree(r, rp, psi)) return false;      // (b)
    Homomorphism psi2 = dual_hom(psi, 2);
    for (SpinOffset sp = 0; sp < rp.spin.count(); ++sp) {
        SpinOffset at = offset ^ transport_offset(r, rp, psi2, sp);
        if (rp.rochlin[sp] != r.rochlin[at]) return false;  // (c)
        if (!quad_agree(r, rp, at, sp, psi)) return false;  // (d)
    }
    return true;
}

namespace {

bool passes(const InvariantRecord& r, const InvariantRecord& rp, DecideMode mode,
            SpinOffset sigma, SpinOffset sigma_prime, const Homomorphism& psi,
            SpinOffset offset) {
    switch (mode) {
        case DecideMode::y1_spin: return check_y1_spin(r, rp, sigma, sigma_prime, psi);
        case DecideMode::y2_spin: return check_y2_spin(r, rp, sigma, sigma_prime, psi);
        default: return check_y2_plain(r, rp, psi, offset);
    }
}

// Smallest offset whose affine bijection satisfies (c) and (d), after the
// offset-independent conditions (a) and (b) have passed.
std::optional<SpinOffset> find_plain_offset(const InvariantRecord& r, const InvariantRecord& rp,
                                            const Homomorphism& psi) {
    if (!linking_agree(r, rp, psi)) return std::nullopt;
    if (!cup_agree(r, rp, psi)) return std::nullopt;
    Homomorphism psi2 = dual_hom(psi, 2);
    std::vector<SpinOffset> transported(rp.spin.count());
    for (SpinOffset sp = 0; sp < rp.spin.count(); ++sp)
        transported[sp] = transport_offset(r, rp, psi2, sp);
    for (SpinOffset off = 0; off < r.spin.count(); ++off) {
        bool good = true;
        for (SpinOffset sp = 0; sp < rp.spin.count() && good; ++sp) {
            SpinOffset at = off ^ transported[sp];
            if (rp.rochlin[sp] != r.rochlin[at] || !quad_agree(r, rp, at, sp, psi))
                good = false;
        }
        if (good) return off;
    }
    return std::nullopt;
}

std::optional<Certificate> search_candidate(const InvariantRecord& r, const InvariantRecord& rp,
                                            DecideMode mode, SpinOffset sigma,
                                            SpinOffset sigma_prime, const Homomorphism& psi) {
    Certificate cert;
    cert.mode = mode;
    cert.psi = psi;
    cert.sigma = sigma;
    cert.sigma_prime = sigma_prime;
    cert.moduli_checked = mode == DecideMode::y1_spin ? std::vector<Int>{} : r.moduli;
    if (mode == DecideMode::y2_plain) {
        if (auto off = find_plain_offset(r, rp, psi)) {
            cert.offset = *off;
            return cert;
        }
        return std::nullopt;
    }
    if (passes(r, rp, mode, sigma, sigma_prime, psi, 0)) return cert;
    return std::nullopt;
}

}  // namespace

Decision decide(const InvariantRecord& r, const InvariantRecord& rp, DecideMode mode,
                SpinOffset sigma, SpinOffset sigma_prime,
                const std::vector<Homomorphism>& candidates) {
    // screens: failures refute equivalence outright (the Rochlin and cup
    // screens are necessary for degree 2 only; degree-1 moves change both)
    if (invariant_factors(r.group) != invariant_factors(rp.group))
        return {Verdict::NotEquivalent, std::nullopt, "homology groups not isomorphic"};
    if (mode != DecideMode::y1_spin) {
        std::vector<int> a = r.rochlin, b = rp.rochlin;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {Verdict::NotEquivalent, std::nullopt, "Rochlin multiset mismatch"};
        if (r.moduli != rp.moduli)
            throw ModulusMismatchError("records configured with different modulus sets");
        for (const Int& n : r.moduli) {
            bool zero = r.cup.at(n).empty(), zero_p = rp.cup.at(n).empty();
            if (zero != zero_p)
                return {Verdict::NotEquivalent, std::nullopt,
                        "cup form zero/nonzero profile differs at modulus " + n.str()};
        }
    }

    if (r.group.is_finite()) {
        IsomorphismStream stream(r.group, rp.group);
        bool any = false;
        while (auto psi = stream.next()) {
            any = true;
            if (auto cert = search_candidate(r, rp, mode, sigma, sigma_prime, *psi))
                return {Verdict::Equivalent, cert, "certificate found"};
        }
        return {Verdict::NotEquivalent, std::nullopt,
                any ? "no isomorphism satisfies the conditions"
                    : "homology groups not isomorphic"};
    }

    // infinite homology: identity (when available) plus user candidates
    std::vector<Homomorphism> tried;
    if (r.group == rp.group) tried.push_back(Homomorphism::identity(r.group));
    for (const Homomorphism& h : candidates) tried.push_back(h);
    if (tried.empty())
        throw InfiniteSearchSpaceError(
            "homology has free part and no candidate isomorphisms were supplied");
    for (const Homomorphism& psi : tried) {
        if (psi.source() != r.group || psi.target() != rp.group) continue;
        if (!psi.inverse()) continue;
        if (auto cert = search_candidate(r, rp, mode, sigma, sigma_prime, psi))
            return {Verdict::Equivalent, cert, "certificate found"};
    }
    return {Verdict::Unknown, std::nullopt,
            "free part: candidate isomorphisms exhausted without a certificate"};
}

bool replay_certificate(const InvariantRecord& r, const InvariantRecord& rp,
                        const Certificate& cert) {
    switch (cert.mode) {
        case DecideMode::y1_spin:
            return check_y1_spin(r, rp, cert.sigma, cert.sigma_prime, cert.psi);
        case DecideMode::y2_spin:
            return check_y2_spin(r, rp, cert.sigma, cert.sigma_prime, cert.psi);
        default:
            return check_y2_plain(r, rp, cert.psi, cert.offset);
    }
}

Certificate invert_certificate(const Certificate& cert, const InvariantRecord& r,
                               const InvariantRecord& rp) {
    auto inv = cert.psi.inverse();
    if (!inv) throw ClasperError("certificate psi is not invertible");
    Certificate out = cert;
    out.psi = *inv;
    out.sigma = cert.sigma_prime;
    out.sigma_prime = cert.sigma;
    if (cert.mode == DecideMode::y2_plain) {
        Homomorphism inv2 = dual_hom(*inv, 2);  // dual(H, 2) -> dual(H', 2)
        GroupElement image = inv2.apply(offset_as_mod2(r.spin, cert.offset));
        out.offset = mod2_as_offset(rp.spin, image);
    }
    return out;
}

}  // namespace clasper
