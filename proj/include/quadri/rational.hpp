#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quadri {

// Exact coefficient arithmetic. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we rely on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace quadri
