#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace clasper {

// Exact arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

struct ClasperError : std::runtime_error {
    explicit ClasperError(const std::string& what) : std::runtime_error(what) {}
};

struct GroupMismatchError : ClasperError {
    using ClasperError::ClasperError;
};
struct InfiniteGroupError : ClasperError {
    using ClasperError::ClasperError;
};
struct SpecialElementMismatchError : ClasperError {
    using ClasperError::ClasperError;
};
struct ConstraintViolationError : ClasperError {
    using ClasperError::ClasperError;
};
struct ModulusMismatchError : ClasperError {
    using ClasperError::ClasperError;
};
struct InfiniteSearchSpaceError : ClasperError {
    using ClasperError::ClasperError;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// gcd over a list, with gcd() = 0 and gcd(0, x) = x.
inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

// Non-negative residue of a mod n; for n = 0 returns a unchanged (Z_0 = Z).
inline Int mod_reduce(const Int& a, const Int& n) {
    if (n == 0) return a;
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Ascending list of the positive divisors of n > 0.
std::vector<Int> divisors(const Int& n);

std::string to_string(const Int& x);

}  // namespace clasper
