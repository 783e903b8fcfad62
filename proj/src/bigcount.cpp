#include "pinlab/bigcount.hpp"

#include <stdexcept>

namespace pinlab {

BigCount binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigCount r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

BigCount factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative n");
    BigCount r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigCount pow2(long e) {
    if (e < 0)
        throw std::domain_error("pow2: negative exponent");
    return BigCount(1) << e;
}

} // namespace pinlab
