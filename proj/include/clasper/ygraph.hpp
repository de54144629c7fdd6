#pragma once

#include "clasper/fgab.hpp"
#include "clasper/smith.hpp"

#include <array>
#include <map>
#include <vector>

namespace clasper {

// Abelian group with a special element of order at most 2.
struct SpecialPair {
    FgAbelianGroup group;
    GroupElement s;

    SpecialPair() = default;
    SpecialPair(FgAbelianGroup g, GroupElement special);
    bool operator==(const SpecialPair& other) const = default;
};

// Signed Y-shaped generator with cyclically ordered colors; notation is
// invariant under cyclic permutation of the colors.
struct YTerm {
    int sign = 1;  // +1 or -1
    GroupElement a1, a2, a3;
};

// The group Y(A, s): free abelian group on color triples modulo
// multilinearity and the slide relation Y[a,a,b] = Y[s,a,b], presented
// finitely on basis-indexed generators and reduced by Smith normal form.
//
// Generators are cyclic classes of ordered index triples (canonical
// representative: lexicographically least rotation). Imposed relations:
// generator orders, basis slide instances, and pairwise-polarized slide
// instances; antisymmetry is never imposed and must emerge in the quotient.
class YGroupStructure {
public:
    explicit YGroupStructure(SpecialPair pair);

    const SpecialPair& pair() const { return pair_; }
    const FgAbelianGroup& quotient() const { return presented_.group; }
    const std::vector<std::array<std::size_t, 3>>& generators() const { return gens_; }

    // Canonical generator index of the cyclic class of (i, j, k).
    std::size_t generator_index(std::size_t i, std::size_t j, std::size_t k) const;

    // Multilinear expansion of a sum of Y-terms into generator coordinates.
    std::vector<Int> expand(const std::vector<YTerm>& terms) const;

    // Normal form: expansion followed by reduction to quotient coordinates.
    GroupElement normal_form(const std::vector<YTerm>& terms) const;
    GroupElement project(const std::vector<Int>& gen_vector) const;

    // Lift of the j-th quotient generator to a generator combination.
    std::vector<Int> lift(std::size_t j) const { return presented_.lift(j); }

    bool operator==(const YGroupStructure& other) const {
        return pair_ == other.pair_;
    }

private:
    SpecialPair pair_;
    std::vector<std::array<std::size_t, 3>> gens_;
    std::map<std::array<std::size_t, 3>, std::size_t> gen_index_;
    PresentedGroup presented_;
};

YGroupStructure y_group(const SpecialPair& pair);

GroupElement normal_form(const YGroupStructure& st, const std::vector<YTerm>& terms);

// The homomorphism Y(f): Y(A, s) -> Y(A', s') induced on normal forms by a
// morphism f of pairs (requires f(s) = s').
class YMorphism {
public:
    YMorphism(const YGroupStructure& source, const YGroupStructure& target,
              const Homomorphism& f);

    GroupElement apply(const GroupElement& nf) const;
    const Mat& matrix() const { return matrix_; }

private:
    FgAbelianGroup src_quotient_, dst_quotient_;
    Mat matrix_;  // dst quotient coords x src quotient coords
};

YMorphism y_of_morphism(const YGroupStructure& source, const YGroupStructure& target,
                        const Homomorphism& f);

}  // namespace clasper
