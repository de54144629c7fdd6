#pragma once

#include "clasper/decide.hpp"
#include "clasper/invariants.hpp"
#include "clasper/surgery.hpp"

#include <string>
#include <vector>

namespace clasper {

// Spin offsets as bitstrings: character position b holds the Z2-coordinate
// of the b-th even-or-zero-order generator (ascending generator index). The
// trivial spin space uses the empty string.
std::string offset_to_bits(const SpinSpace& s, SpinOffset offset);
SpinOffset bits_to_offset(const SpinSpace& s, const std::string& bits);

// Canonical UTF-8 JSON serialization: sorted keys, reduced fractions, fixed
// index order, zero cup entries omitted. Semantically equal records produce
// byte-identical documents.
std::string serialize_record(const InvariantRecord& r);
InvariantRecord parse_record(const std::string& text);

// Graph files: a JSON array of {"sign": +-1, "leaves": [[h],[c, slope]] x 3};
// the pull-back constraint is validated on load.
std::vector<FormalYGraph> parse_graphs(const std::string& text, const PullbackP& p);

std::string serialize_certificate(const Certificate& cert, const InvariantRecord& r,
                                  const InvariantRecord& rp);

// Candidate files: a JSON array of matrices, each a list of generator-image
// coefficient columns in the target group.
std::vector<Homomorphism> parse_candidates(const std::string& text, const FgAbelianGroup& src,
                                           const FgAbelianGroup& dst);

}  // namespace clasper
