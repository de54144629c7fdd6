#include "clasper/trivector.hpp"

#include <algorithm>

namespace clasper {

Int TrivectorSpace::basis_order(const IndexTriple& t) const {
    const auto& n = base_.orders();
    return gcd(n[t[0]], gcd(n[t[1]], n[t[2]]));
}

std::vector<IndexTriple> TrivectorSpace::basis_triples() const {
    std::vector<IndexTriple> out;
    const std::size_t r = base_.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) out.push_back({i, j, k});
    return out;
}

Int Trivector::coeff(const IndexTriple& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void Trivector::add_term(std::size_t a, std::size_t b, std::size_t c, const Int& coeff) {
    if (a == b || b == c || a == c) return;
    int sign = 1;
    std::size_t i = a, j = b, k = c;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    IndexTriple t{i, j, k};
    Int next = mod_reduce(coeffs_[t] + sign * coeff, space_.basis_order(t));
    if (next == 0)
        coeffs_.erase(t);
    else
        coeffs_[t] = next;
}

Trivector Trivector::operator+(const Trivector& other) const {
    if (space_ != other.space_) throw GroupMismatchError("adding trivectors over different groups");
    Trivector out = *this;
    for (const auto& [t, c] : other.coeffs_) out.add_term(t[0], t[1], t[2], c);
    return out;
}

Trivector Trivector::operator-(const Trivector& other) const {
    return *this + (other * Int(-1));
}

Trivector Trivector::operator*(const Int& scalar) const {
    Trivector out(space_);
    for (const auto& [t, c] : coeffs_) out.add_term(t[0], t[1], t[2], c * scalar);
    return out;
}

Trivector wedge(const GroupElement& x1, const GroupElement& x2, const GroupElement& x3) {
    if (x1.group() != x2.group() || x2.group() != x3.group())
        throw GroupMismatchError("wedge arguments live in different groups");
    Trivector out{TrivectorSpace(x1.group())};
    const std::size_t r = x1.group().rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (x1.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (x2.coeffs()[j] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) {
                if (x3.coeffs()[k] == 0) continue;
                out.add_term(i, j, k, x1.coeffs()[i] * x2.coeffs()[j] * x3.coeffs()[k]);
            }
        }
    }
    return out;
}

Int pairing_n(const Trivector& y, const Trivector& x, const Int& n) {
    const FgAbelianGroup& base = x.space().base();
    DualGroup dual = dual_group(base, n);
    if (y.space().base() != dual.group())
        throw ModulusMismatchError("functional trivector is not over the matching dual group");
    // Only triples on the same index set pair nontrivially, and there the
    // determinant of generator pairings is the product of the three units.
    Int acc = 0;
    for (const auto& [t, yc] : y.coeffs()) {
        Int xc = x.coeff(t);
        if (xc == 0) continue;
        acc += yc * xc * dual.pairing_unit(t[0]) * dual.pairing_unit(t[1]) *
               dual.pairing_unit(t[2]);
    }
    return mod_reduce(acc, n);
}

Int basis_coefficient(const Int& m, const Int& ni, const Int& nj, const Int& nk) {
    if (m <= 0) throw ClasperError("basis_coefficient needs a positive modulus");
    Int g = gcd(m, gcd(ni, gcd(nj, nk)));
    return m * m * g / (gcd(m, ni) * gcd(m, nj) * gcd(m, nk));
}

std::optional<Int> detect_nonzero(const Trivector& x) {
    const FgAbelianGroup& base = x.space().base();
    if (!base.is_finite()) throw InfiniteGroupError("detection oracle needs a finite group");
    if (x.is_zero()) return std::nullopt;
    Int exponent = base.torsion_exponent();
    for (const Int& n : divisors(exponent)) {
        if (n == 1) continue;
        DualGroup dual = dual_group(base, n);
        for (const auto& [t, c] : x.coeffs()) {
            Int val = c * dual.pairing_unit(t[0]) * dual.pairing_unit(t[1]) *
                      dual.pairing_unit(t[2]);
            if (mod_reduce(val, n) != 0) return n;
        }
    }
    return std::nullopt;
}

Trivector exterior_cube_hom(const Homomorphism& psi, const Trivector& x) {
    if (x.space().base() != psi.source())
        throw GroupMismatchError("trivector not over the homomorphism source");
    Trivector out{TrivectorSpace(psi.target())};
    for (const auto& [t, c] : x.coeffs()) {
        Trivector image = wedge(psi.images()[t[0]], psi.images()[t[1]], psi.images()[t[2]]);
        out = out + image * c;
    }
    return out;
}

}  // namespace clasper
