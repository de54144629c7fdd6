#pragma once

#include "clasper/invariants.hpp"
#include "clasper/spinspace.hpp"
#include "clasper/ygraph.hpp"

#include <array>
#include <vector>

namespace clasper {

// Formal Y-surgery instruction: three ordered leaves in the pull-back P
// (class in H plus leaf function on the spin structures) and a sign. A
// negative sign is realized by transposing the first two leaves before
// application.
struct FormalYGraph {
    int sign = 1;
    std::array<GroupElement, 3> leaves;  // elements of the pull-back group

    FormalYGraph() = default;
    FormalYGraph(const PullbackP& p, int sign, std::array<GroupElement, 3> leaves);

    YTerm as_term() const { return YTerm{sign, leaves[0], leaves[1], leaves[2]}; }
};

// One Y-surgery: homology, linking pairing and quadratic functions are
// untouched; every configured cup form gains the pairing with the leaf-class
// wedge; every Rochlin value gains 8 times the product of the leaf functions.
InvariantRecord apply_y_surgery(const InvariantRecord& r, const PullbackP& p,
                                const FormalYGraph& g);

// Sequential application; the deltas commute, so the order is irrelevant.
InvariantRecord surgery_S(const InvariantRecord& r, const PullbackP& p,
                          const std::vector<FormalYGraph>& graphs);

// The comparison map into B(H, S): trilinear part
//   u'_(n)((psi^(n))^{-1} y_1, ...) - u_(n)(y_1, y_2, y_3)
// on the dual basis of H, Rochlin part R'(sigma' + y') - R(sigma + psi^(2) y')
// at sigma + psi^(2) y', with sigma = base point + offset.
BElement map_E(const InvariantRecord& base, const InvariantRecord& other,
               const Homomorphism& psi, SpinOffset offset);

// The embedding of the pull-back into B(H, S):
//   (X, f) -> ((<-, X>^(n))_n, 8 f).
BElement map_N(const InvariantRecord& shape, const WImage& w);

// Commutativity of the comparison square: surgering by X and comparing with
// the identity equals the pull-back image of X under the embedding.
bool check_square(const InvariantRecord& base, const PullbackP& p,
                  const std::vector<YTerm>& terms);

}  // namespace clasper
