#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rene {

/// Arbitrary-precision signed integer, canonical sign/magnitude storage.
/// The representation is boost::multiprecision; this alias is the only place
/// the artifact names the backing implementation.
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& v) { return v.sign(); }

inline BigInt abs_of(const BigInt& v) { return boost::multiprecision::abs(v); }

/// Nonnegative gcd; gcd(0, 0) == 0.
inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace rene
