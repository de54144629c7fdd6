#pragma once

#include "clasper/fgab.hpp"
#include "clasper/spinspace.hpp"
#include "clasper/trivector.hpp"

#include <map>
#include <string>
#include <vector>

namespace clasper {

// Exact element of Q/Z in canonical form: a/b with 0 <= a < b, gcd(a,b) = 1.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}
    QmodZ(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    QmodZ operator+(const QmodZ& other) const;
    QmodZ operator-(const QmodZ& other) const;
    QmodZ operator*(const Int& scalar) const;
    bool operator==(const QmodZ& other) const = default;
    bool operator<(const QmodZ& other) const;

    std::string str() const;  // "a/b"
    static QmodZ parse(const std::string& text);

private:
    Int num_, den_;
};

// Nondegenerate symmetric bilinear pairing on the torsion generators,
// valued in Q/Z.
struct LinkingPairing {
    std::vector<std::vector<QmodZ>> values;  // t x t, symmetric

    QmodZ eval(const std::vector<Int>& x, const std::vector<Int>& y) const;
    bool operator==(const LinkingPairing& other) const = default;
};

// Quadratic function over a linking pairing, stored by its generator values.
struct QuadFn {
    std::vector<QmodZ> gen_values;  // one per torsion generator
    bool operator==(const QuadFn& other) const = default;
};

// q(x) for a torsion element given by coefficients over the torsion
// generators, expanded through q(x+y) = q(x) + q(y) + lambda(x, y).
QmodZ quad_value(const LinkingPairing& lambda, const QuadFn& q, const std::vector<Int>& x);

// Sparse table of a skew trilinear form on dual-basis triples i <= j <= k
// (0-based generator indices); omitted entries are 0.
using CupTable = std::map<IndexTriple, Int>;

// The quintuplet record of one manifold: homology, spin-structure space,
// linking pairing, linking quadratic functions (one per spin structure),
// triple-cup forms (one table per configured modulus), and the Rochlin
// function (Z16-valued, one entry per spin structure).
struct InvariantRecord {
    FgAbelianGroup group;
    SpinSpace spin;
    LinkingPairing linking;
    std::vector<QuadFn> quadratic;   // indexed by spin offset
    std::map<Int, CupTable> cup;     // keyed by modulus, 0 = integer coefficients
    std::vector<int> rochlin;        // indexed by spin offset, values mod 16
    std::vector<Int> moduli;         // configured modulus set, sorted ascending

    bool operator==(const InvariantRecord& other) const = default;
};

// Default configured modulus set: {0, 2} plus the divisors > 1 of the
// exponent of the torsion part.
std::vector<Int> default_moduli(const FgAbelianGroup& g);

// Trilinear evaluation of a stored cup table at three dual elements
// (coefficients over the dual basis of H^(n)).
Int cup_eval(const InvariantRecord& r, const Int& n, const GroupElement& y1,
             const GroupElement& y2, const GroupElement& y3);

// Entry of the full skew table at an arbitrary ordered index triple.
Int cup_entry(const InvariantRecord& r, const Int& n, std::size_t a, std::size_t b,
              std::size_t c);

// Empty iff the record satisfies every structural constraint; each violation
// names the failing constraint and a witness.
std::vector<std::string> validate_record(const InvariantRecord& r);

// Element of B(H, S): one trilinear delta table per configured modulus plus
// a Z16-valued function on the spin structures.
struct BElement {
    std::vector<Int> moduli;
    std::map<Int, CupTable> tables;
    std::vector<int> rochlin;  // indexed by spin offset, values mod 16

    bool is_zero() const;
    bool operator==(const BElement& other) const = default;
};

BElement b_zero(const InvariantRecord& shape);
BElement b_add(const BElement& x, const BElement& y);
BElement b_subtract(const BElement& x, const BElement& y);

}  // namespace clasper
