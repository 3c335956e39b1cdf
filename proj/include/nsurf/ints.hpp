#pragma once

// Exact integer arithmetic used throughout the library.
//
// All coordinate vectors, matrix entries and homology computations use
// arbitrary-precision integers so that enumeration and Smith normal form
// never overflow, no matter how unbalanced the intermediate combinations
// get.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsurf {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Greatest common divisor of all entries (0 if the vector is zero).
inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1) break;
    }
    return g;
}

/// Divide a non-zero vector by the gcd of its entries, making it the
/// canonical primitive representative of its ray.
inline void make_primitive(IntVec& v) {
    Int g = vec_gcd(v);
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
}

/// Lexicographic comparison, used for the deterministic orderings that the
/// golden tests rely on.
inline bool lex_less(const IntVec& a, const IntVec& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

/// Checked narrowing for JSON export: JSON readers cannot be relied on to
/// round-trip integers beyond 64 bits.
inline std::int64_t to_int64(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x < lo || x > hi)
        throw std::domain_error("integer too large for 64-bit export: " + x.str());
    return static_cast<std::int64_t>(x);
}

}  // namespace nsurf
