#pragma once

#include "clasper/fgab.hpp"
#include "clasper/trivector.hpp"
#include "clasper/ygraph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace clasper {

// Offset from the base point, one bit per Z2-coordinate of the spin space.
using SpinOffset = std::uint64_t;

// The space of spin structures attached to a homology group H: an affine
// Z2-space over H^(2), of dimension d = #{generators with even or zero
// order}, with a distinguished base point at offset 0.
class SpinSpace {
public:
    SpinSpace() = default;
    explicit SpinSpace(FgAbelianGroup homology);

    const FgAbelianGroup& homology() const { return homology_; }
    std::size_t dim() const { return even_idx_.size(); }
    SpinOffset count() const { return SpinOffset(1) << dim(); }
    const std::vector<std::size_t>& even_indices() const { return even_idx_; }
    // Bit position of a generator index, when the generator has even or
    // zero order.
    std::optional<std::size_t> bit_position(std::size_t gen) const;

    // The mod-2 coefficient module H_(2), index-aligned with H.
    const FgAbelianGroup& mod2_module() const { return mod2_.group; }
    const Homomorphism& mod2_reduction() const { return mod2_.reduction; }

    bool operator==(const SpinSpace& other) const {
        return homology_ == other.homology_;
    }

private:
    FgAbelianGroup homology_;
    std::vector<std::size_t> even_idx_;
    std::vector<std::optional<std::size_t>> positions_;
    TensorMod mod2_;
};

// Z2-valued affine function on a spin space: value at the base point plus a
// slope in H_(2); f(sigma0 + y) = c + <y, slope>.
class AffineFn {
public:
    AffineFn() = default;
    AffineFn(SpinSpace space, int constant, std::vector<Int> slope_bits);

    const SpinSpace& space() const { return space_; }
    int constant() const { return constant_; }
    const std::vector<Int>& slope_bits() const { return slope_bits_; }

    static AffineFn zero(const SpinSpace& s);
    static AffineFn one(const SpinSpace& s);                    // constant 1
    static AffineFn coordinate(const SpinSpace& s, std::size_t gen);  // e-bar_i

    int eval(SpinOffset offset) const;
    AffineFn operator+(const AffineFn& other) const;
    bool operator==(const AffineFn& other) const = default;

private:
    SpinSpace space_;
    int constant_ = 0;
    std::vector<Int> slope_bits_;  // one bit per generator, 0 at odd orders
};

// kappa(f): the slope, as an element of the mod-2 module.
GroupElement kappa(const AffineFn& f);

// Z2-valued cubic function: a Z2-sum of monomials in the coordinate
// functions e-bar_i, of degree at most 3 (the empty monomial is the
// constant function 1).
class CubicFn {
public:
    CubicFn() = default;
    explicit CubicFn(SpinSpace space) : space_(std::move(space)) {}

    const SpinSpace& space() const { return space_; }
    const std::set<std::vector<std::size_t>>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }

    // Toggles a monomial (mod-2 coefficient); indices must have even or zero
    // order, be strictly increasing, and number at most 3.
    void toggle(std::vector<std::size_t> monomial);

    int eval(SpinOffset offset) const;
    CubicFn operator+(const CubicFn& other) const;
    bool operator==(const CubicFn& other) const = default;

private:
    SpinSpace space_;
    std::set<std::vector<std::size_t>> monomials_;
};

// Pointwise product of three affine functions, expanded in the cubic
// monomial basis (coordinate functions are idempotent over Z2).
CubicFn cubic_product(const AffineFn& f1, const AffineFn& f2, const AffineFn& f3);

// Formal third derivative: the eight-point alternating sum over a cube of
// offsets, identified with a trivector over H_(2) through the mod-2 duality
// pairing. Independent of the base offset.
Trivector d3(const CubicFn& f, SpinOffset base = 0);

// A(S, Z2) with special element 1: the affine functions as an abelian group
// with basis {1} u {e-bar_i : even or zero order}, all factors Z2.
class AffineFunctionGroup {
public:
    AffineFunctionGroup() = default;
    explicit AffineFunctionGroup(SpinSpace space);

    const SpinSpace& space() const { return space_; }
    const SpecialPair& pair() const { return pair_; }

    AffineFn to_affine(const GroupElement& a) const;
    GroupElement from_affine(const AffineFn& f) const;

private:
    SpinSpace space_;
    SpecialPair pair_;
};

// The pull-back P = H x_{H_(2)} A(S, Z2): pairs (x, f) with x tensor 1 =
// kappa(f), special element (0, 1). Basis {(0,1)} u {(e_i, e-bar_i)}, so the
// underlying group is Z2 + H.
class PullbackP {
public:
    PullbackP() = default;
    explicit PullbackP(SpinSpace space);

    const SpinSpace& space() const { return space_; }
    const SpecialPair& pair() const { return pair_; }

    // (x, f) -> coefficients; throws ConstraintViolationError unless
    // x tensor 1 = kappa(f).
    GroupElement compose(const GroupElement& x, const AffineFn& f) const;
    std::pair<GroupElement, AffineFn> decompose(const GroupElement& p) const;

private:
    SpinSpace space_;
    SpecialPair pair_;
};

// --- the two section isomorphisms -------------------------------------------

// gamma: Y(A(S,Z2), 1) -> C(S, Z2), Y[f1,f2,f3] -> f1 f2 f3.
CubicFn gamma_terms(const AffineFunctionGroup& ag, const std::vector<YTerm>& terms);
CubicFn gamma(const AffineFunctionGroup& ag, const YGroupStructure& yg,
              const GroupElement& normal_form);
// Section with gamma o epsilon = id, built on the monomial basis.
std::vector<YTerm> epsilon_cubic(const AffineFunctionGroup& ag, const CubicFn& c);

// The pull-back L^3 H x_{L^3 H_(2)} C(S, Z2) that Y(P) maps onto.
struct WImage {
    Trivector wedge_part;  // over H
    CubicFn cubic_part;    // over S

    bool operator==(const WImage& other) const = default;
};

// Membership in the pull-back: d3(cubic part) equals the mod-2 reduction of
// the wedge part.
bool in_pullback(const SpinSpace& space, const WImage& w);

// W: Y(P) -> pull-back, Y[(x1,f1),(x2,f2),(x3,f3)] -> (x1^x2^x3, f1 f2 f3).
WImage w_map_terms(const PullbackP& p, const std::vector<YTerm>& terms);
WImage w_map(const PullbackP& p, const YGroupStructure& yg, const GroupElement& normal_form);
// Section with W o epsilon = id; throws ConstraintViolationError when the
// argument is not in the pull-back.
std::vector<YTerm> epsilon_tri(const PullbackP& p, const WImage& target);

// Invariant factors of the pull-back target, computed independently from a
// kernel lattice (not from the basis the sections use).
std::vector<Int> pullback_target_factors(const SpinSpace& space);

// Deterministic coordinate list for the cubic monomial basis.
std::vector<std::vector<std::size_t>> cubic_monomial_basis(const SpinSpace& space);

// A spin offset as an element of the mod-2 coefficient module (which is also
// the coefficient module of dual(H, 2)), and back.
GroupElement offset_as_mod2(const SpinSpace& s, SpinOffset y);
SpinOffset mod2_as_offset(const SpinSpace& s, const GroupElement& v);

}  // namespace clasper
