#pragma once

#include "clasper/invariants.hpp"
#include "clasper/surgery.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace clasper {

// Outcome of one verification oracle: pass/fail plus human-readable lines.
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> lines;

    void note(std::string line) { lines.push_back(std::move(line)); }
    void fail(std::string line) {
        ok = false;
        lines.push_back("FAIL: " + std::move(line));
    }
};

// Exhaustive detection oracle: over every finite abelian group with
// |H| <= max_order and every trivector X, some modulus dividing exp(H)
// detects X iff X != 0.
VerifyReport verify_lemma_trivectors(const Int& max_order);

// Cubic-function isomorphism oracle: over the small spin family, the Y-group
// of the affine functions matches the cubic functions, with both section
// identities.
VerifyReport verify_lemma_cubic(std::size_t max_generators);

// Pull-back isomorphism oracle: over the same family, the Y-group of the
// pull-back matches the wedge/cubic pull-back, with both section identities.
VerifyReport verify_lemma_tri(std::size_t max_generators);

// Randomized commutative-square oracle over the fixed homology shapes.
VerifyReport verify_square(std::size_t trials, std::uint64_t seed = 0x5eed5eedULL);

// Order lists with at most max_generators entries from {0, 2, 3, 4}, at most
// one 0 (the family both section oracles quantify over).
std::vector<std::vector<Int>> small_spin_family(std::size_t max_generators);

// Deterministic randomized data for oracles and tests. Generated records
// always validate.
InvariantRecord random_record(const std::vector<Int>& orders, std::mt19937_64& rng);
std::vector<YTerm> random_y_terms(const PullbackP& p, std::size_t count, std::mt19937_64& rng);
FormalYGraph random_graph(const PullbackP& p, std::mt19937_64& rng);

// Surgery lists that are trivial at degree 2: zero-leaf graphs (the model of
// degree->=2 claspers), cancelling +-pairs, and slide-relation pairs.
std::vector<FormalYGraph> random_trivial_graphs(const PullbackP& p, std::size_t units,
                                                std::mt19937_64& rng);

// The same record presented from a translated base spin structure.
InvariantRecord relabel_spin(const InvariantRecord& r, SpinOffset t);

}  // namespace clasper
