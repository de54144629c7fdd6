#pragma once

#include "clasper/ints.hpp"
#include "clasper/smith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace clasper {

class GroupElement;

// Finitely generated abelian group presented by a basis: one generator e_i
// per listed order n_i >= 0, where n_i = 0 means an infinite cyclic factor.
// Order-1 entries are rejected (trivial factors are pruned at construction
// sites, never stored).
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    explicit FgAbelianGroup(std::vector<Int> orders);

    // Index-aligned coefficient module: order-1 slots are allowed and their
    // coefficients are frozen at 0. Used for duals and mod-n reductions where
    // generator indices must line up with a base group.
    static FgAbelianGroup aligned(std::vector<Int> orders);

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    bool is_finite() const;
    // |H| for finite groups, 0 when the group is infinite.
    Int group_order() const;
    // lcm of the finite orders (exponent of the torsion part); 1 if free.
    Int torsion_exponent() const;
    // Generator indices with finite (torsion) order.
    std::vector<std::size_t> torsion_indices() const;

    GroupElement zero() const;
    GroupElement basis_element(std::size_t i) const;
    GroupElement element(std::vector<Int> coeffs) const;

    bool operator==(const FgAbelianGroup& other) const = default;

private:
    std::vector<Int> orders_;
};

// Element of an FgAbelianGroup in canonical form: coefficient c_i reduced to
// 0 <= c_i < n_i whenever n_i > 0. Two elements are equal iff their reduced
// coefficient vectors are equal.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(FgAbelianGroup group, std::vector<Int> coeffs);

    const FgAbelianGroup& group() const { return group_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement operator*(const Int& scalar) const;
    bool operator==(const GroupElement& other) const = default;
    bool operator<(const GroupElement& other) const;  // lex on coefficients

private:
    FgAbelianGroup group_;
    std::vector<Int> coeffs_;
};

// Group homomorphism given by the images of the source generators.
class Homomorphism {
public:
    Homomorphism() = default;
    Homomorphism(FgAbelianGroup source, FgAbelianGroup target,
                 std::vector<GroupElement> images);

    static Homomorphism identity(const FgAbelianGroup& g);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const std::vector<GroupElement>& images() const { return images_; }

    // n_i * image(e_i) = 0 in the target for every generator.
    bool is_well_defined() const;
    GroupElement apply(const GroupElement& x) const;
    Homomorphism compose_after(const Homomorphism& first) const;  // this o first
    // Two-sided inverse when this is an isomorphism, nullopt otherwise.
    std::optional<Homomorphism> inverse() const;
    bool is_isomorphism() const;

    bool operator==(const Homomorphism& other) const = default;

private:
    FgAbelianGroup source_, target_;
    std::vector<GroupElement> images_;  // one per source generator
};

// Formal dual H^(n) = Hom(H, Z_n) with the convention
//   <e_i*, e_j> = delta_ij * n / gcd(n, n_i)  in Z_n,
// generator e_i* of order gcd(n, n_i). For n = 0 the pairing is read over Z:
// the unit is 1 on infinite-order generators and 0 on torsion ones.
class DualGroup {
public:
    DualGroup() = default;
    DualGroup(FgAbelianGroup base, Int modulus);

    const FgAbelianGroup& base() const { return base_; }
    const Int& modulus() const { return modulus_; }
    // The dual as a group in its own right (orders gcd(n, n_i), unpruned so
    // indices line up with the base generators; order-1 slots are frozen at 0).
    const FgAbelianGroup& group() const { return dual_; }

    // <e_i*, e_i> for the i-th generator.
    Int pairing_unit(std::size_t i) const;
    GroupElement zero() const { return dual_.zero(); }
    GroupElement basis_element(std::size_t i) const { return dual_.basis_element(i); }

    bool operator==(const DualGroup& other) const = default;

private:
    FgAbelianGroup base_;
    Int modulus_;
    FgAbelianGroup dual_;
};

// <e_i*, e_i> = n / gcd(n, order) in Z_n; for n = 0: 1 on free generators,
// 0 on torsion ones (the formal value for Z-duals).
Int pairing_unit(const Int& modulus, const Int& gen_order);

// --- operations -------------------------------------------------------------

// Smith normal form: U * mat * V = D, U and V unimodular, diagonal d_1 | d_2 |
// ..., all d_k >= 0. See smith.hpp for the extended result.
SmithResult smith_normal_form(const Mat& mat);

// Cokernel of the relation matrix (rows are relations over `generators`
// columns) in invariant-factor form, plus the projection from the free group
// on the generators. Trivial factors are pruned.
struct PresentedGroup {
    FgAbelianGroup group;
    Homomorphism projection;           // Z^generators -> group
    std::vector<std::size_t> kept;     // surviving coordinate rows of U
    Mat u, uinv;                       // SNF row transform and its inverse
    // Lift of the j-th quotient generator to the free group (column of uinv).
    std::vector<Int> lift(std::size_t j) const;
};
PresentedGroup group_from_presentation(std::size_t generators, const Mat& relations);

// Canonical invariant factors (d_1 | d_2 | ..., then 0s for the free part).
std::vector<Int> invariant_factors(const FgAbelianGroup& g);

DualGroup dual_group(const FgAbelianGroup& h, const Int& n);

// Bilinear pairing <y, x> in Z_n for y in dual_group(H, n), x in H.
Int pair(const DualGroup& dual, const GroupElement& y, const GroupElement& x);

// H_(n) = H tensor Z_n together with the reduction homomorphism H -> H_(n).
// Trivial factors are pruned; the reduction matrix records which generators
// survive.
struct TensorMod {
    FgAbelianGroup group;
    Homomorphism reduction;
};
TensorMod tensor_mod(const FgAbelianGroup& h, const Int& n);

// Index-aligned variant (orders gcd(n, n_i), order-1 slots kept) plus the
// reduction homomorphism onto it.
TensorMod tensor_mod_aligned(const FgAbelianGroup& h, const Int& n);

// The dual map psi^(n): dual(H', n) -> dual(H, n) induced by psi: H -> H'
// (post-composition with psi under the pairing convention).
Homomorphism dual_hom(const Homomorphism& psi, const Int& n);

// Lazy stream of all isomorphisms H -> H' between finite groups, in
// lexicographic order of the image matrices.
class IsomorphismStream {
public:
    IsomorphismStream(FgAbelianGroup source, FgAbelianGroup target);
    std::optional<Homomorphism> next();

private:
    FgAbelianGroup source_, target_;
    std::vector<std::vector<GroupElement>> candidates_;  // per source generator
    std::vector<std::size_t> cursor_;
    bool done_ = false;
    bool first_ = true;
    bool advance();
};

std::vector<Homomorphism> enumerate_isomorphisms(const FgAbelianGroup& h,
                                                 const FgAbelianGroup& hp);

// --- element and type enumeration (exhaustive checks, oracles) --------------

// Visits every element of a finite group, lexicographically by coefficients.
class ElementRange {
public:
    explicit ElementRange(FgAbelianGroup group);
    std::optional<GroupElement> next();

private:
    FgAbelianGroup group_;
    std::vector<Int> cursor_;
    bool done_ = false;
    bool first_ = true;
};

std::vector<GroupElement> all_elements(const FgAbelianGroup& g);

// Order lists for every isomorphism type of finite abelian group with
// 1 <= |H| <= max_order (prime-power factor form, e.g. 12 -> [4,3], [2,2,3]).
std::vector<std::vector<Int>> abelian_group_types(const Int& max_order);

// Subgroup of H' generated by the given elements (H' finite).
std::vector<GroupElement> subgroup_generated(const FgAbelianGroup& hp,
                                             const std::vector<GroupElement>& gens);

}  // namespace clasper
