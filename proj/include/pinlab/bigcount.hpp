#ifndef PINLAB_BIGCOUNT_HPP
#define PINLAB_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pinlab {

/// Exact arbitrary-precision count. All enumeration results in this library
/// are exact integers; nothing is ever rounded through floating point.
using BigCount = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k). Zero when k < 0 or k > n; C(n, 0) = 1 for
/// n >= 0. Negative n is rejected (the extended definition is not needed
/// anywhere in this library).
BigCount binomial(long n, long k);

/// n! for n >= 0.
BigCount factorial(long n);

/// 2^e for e >= 0.
BigCount pow2(long e);

} // namespace pinlab

#endif
