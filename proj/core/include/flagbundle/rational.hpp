#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Boost 1.74 rational compared against a plain integer recurses forever under
// C++20 rewritten comparisons. Exact non-template overloads win overload
// resolution and are found by ADL from any namespace.
namespace boost {
#define FLAGBUNDLE_MIXED_EQ(T)                                                   \
    inline bool operator==(const rational<std::int64_t>& a, T b) {              \
        return a.denominator() == 1 && a.numerator() == b;                       \
    }                                                                            \
    inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; } \
    inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); } \
    inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }
FLAGBUNDLE_MIXED_EQ(int)
FLAGBUNDLE_MIXED_EQ(long)
FLAGBUNDLE_MIXED_EQ(long long)
#undef FLAGBUNDLE_MIXED_EQ
}  // namespace boost

namespace flagbundle {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// "3", "-1/2".
inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace flagbundle
