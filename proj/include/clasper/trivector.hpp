#pragma once

#include "clasper/fgab.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace clasper {

using IndexTriple = std::array<std::size_t, 3>;

// Exterior cube L^3 H with the canonical basis
//   { e_i ^ e_j ^ e_k  of order gcd(n_i, n_j, n_k) : i < j < k }.
class TrivectorSpace {
public:
    TrivectorSpace() = default;
    explicit TrivectorSpace(FgAbelianGroup base) : base_(std::move(base)) {}

    const FgAbelianGroup& base() const { return base_; }
    // gcd(n_i, n_j, n_k) for a strictly increasing triple.
    Int basis_order(const IndexTriple& t) const;
    std::vector<IndexTriple> basis_triples() const;

    bool operator==(const TrivectorSpace& other) const = default;

private:
    FgAbelianGroup base_;
};

// Element of L^3 H, sparse over the canonical basis, coefficients reduced
// mod the basis orders (zero entries dropped).
class Trivector {
public:
    Trivector() = default;
    explicit Trivector(TrivectorSpace space) : space_(std::move(space)) {}

    const TrivectorSpace& space() const { return space_; }
    const std::map<IndexTriple, Int>& coeffs() const { return coeffs_; }
    Int coeff(const IndexTriple& t) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Adds c * (e_a ^ e_b ^ e_c) for an arbitrary index triple, sorting and
    // tracking the sign; repeated indices contribute nothing.
    void add_term(std::size_t a, std::size_t b, std::size_t c, const Int& coeff);

    Trivector operator+(const Trivector& other) const;
    Trivector operator-(const Trivector& other) const;
    Trivector operator*(const Int& scalar) const;
    bool operator==(const Trivector& other) const = default;

private:
    TrivectorSpace space_;
    std::map<IndexTriple, Int> coeffs_;
};

// Trilinear alternating wedge of three group elements.
Trivector wedge(const GroupElement& x1, const GroupElement& x2, const GroupElement& x3);

// Pairing <y, X>^(n) of a trivector over dual_group(H, n) with a trivector
// over H: the determinant det(<y_i, x_j>) extended bilinearly over basis
// expansions, valued in Z_n (in Z when n = 0).
Int pairing_n(const Trivector& y, const Trivector& x, const Int& n);

// Coefficient of the basis functional in the map X -> <-, X>^(m):
//   m^2 gcd(m, n_i, n_j, n_k) / (gcd(m, n_i) gcd(m, n_j) gcd(m, n_k)).
// Rejects m = 0.
Int basis_coefficient(const Int& m, const Int& ni, const Int& nj, const Int& nk);

// Smallest modulus n > 1 dividing exp(H) with <-, X>^(n) != 0, or nullopt
// when X = 0. Requires the base group finite.
std::optional<Int> detect_nonzero(const Trivector& x);

// L^3 psi: basis trivector e_i^e_j^e_k -> psi(e_i)^psi(e_j)^psi(e_k),
// extended linearly.
Trivector exterior_cube_hom(const Homomorphism& psi, const Trivector& x);

}  // namespace clasper
