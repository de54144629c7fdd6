#pragma once

#include "clasper/invariants.hpp"
#include "clasper/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clasper {

enum class DecideMode { y1_spin, y2_spin, y2_plain };

std::string mode_name(DecideMode mode);

// Witness of equivalence: the isomorphism psi, and for the plain mode the
// offset pinning the affine bijection between the spin spaces (the image of
// the base point). Replaying the certificate re-verifies every condition.
struct Certificate {
    DecideMode mode = DecideMode::y2_plain;
    Homomorphism psi;
    SpinOffset offset = 0;        // plain mode only
    SpinOffset sigma = 0;         // spin modes: chosen spin structures
    SpinOffset sigma_prime = 0;
    std::vector<Int> moduli_checked;
};

enum class Verdict { Equivalent, NotEquivalent, Unknown };

struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;
    std::string reason;
};

// Condition of the degree-1 characterization: the chosen linking quadratic
// functions agree through psi on every torsion element.
bool check_y1_spin(const InvariantRecord& r, const InvariantRecord& rp, SpinOffset sigma,
                   SpinOffset sigma_prime, const Homomorphism& psi);

// Degree-2 spin characterization: (a) quadratic functions agree through psi,
// (b) cup forms agree through the dual maps on every configured modulus,
// (c) Rochlin functions agree affinely through psi^(2).
bool check_y2_spin(const InvariantRecord& r, const InvariantRecord& rp, SpinOffset sigma,
                   SpinOffset sigma_prime, const Homomorphism& psi);

// Degree-2 plain characterization: (a) linking preserved, (b) cup forms
// agree, (c) Rochlin agrees through the affine bijection pinned by `offset`,
// (d) the quadratic functions correspond under that bijection.
bool check_y2_plain(const InvariantRecord& r, const InvariantRecord& rp,
                    const Homomorphism& psi, SpinOffset offset);

// Full decision procedure. Cheap screens (isomorphism type, Rochlin value
// multiset, zero/nonzero cup profile) run first and their failure refutes
// equivalence even for infinite homology. The search is exhaustive for
// finite homology (lexicographically first certificate); for infinite
// homology the identity (when the order lists match) and any user-supplied
// candidates are tried, and otherwise the result is Unknown.
Decision decide(const InvariantRecord& r, const InvariantRecord& rp, DecideMode mode,
                SpinOffset sigma = 0, SpinOffset sigma_prime = 0,
                const std::vector<Homomorphism>& candidates = {});

// Re-verifies a certificate against a pair of records.
bool replay_certificate(const InvariantRecord& r, const InvariantRecord& rp,
                        const Certificate& cert);

// The certificate witnessing the reverse equivalence (psi inverted, offset
// transported through the inverse dual map).
Certificate invert_certificate(const Certificate& cert, const InvariantRecord& r,
                               const InvariantRecord& rp);

}  // namespace clasper
