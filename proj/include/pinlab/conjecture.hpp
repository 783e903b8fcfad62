#ifndef PINLAB_CONJECTURE_HPP
#define PINLAB_CONJECTURE_HPP

#include <vector>

#include "pinlab/bigcount.hpp"
#include "pinlab/report.hpp"

namespace pinlab {

/// The triangle T(n,0) = T(n,n) = 1, T(n,k) = 2 T(n-1,k-1) + T(n-1,k),
/// built row by row. Rows already built are kept, so repeated queries
/// against one instance are cheap; independent instances recompute from
/// scratch.
class Triangle {
public:
    /// Row n as the n+1 entries T(n,0..n).
    const std::vector<BigCount>& row(int n);

    /// T(n,k); throws std::domain_error unless 0 <= k <= n.
    BigCount at(int n, int k);

private:
    std::vector<std::vector<BigCount>> rows_;
};

/// One-shot T(n,k) through a fresh Triangle.
BigCount triangle_T(int n, int k);

/// Tests |APS^B_n| = T(n, floor((n-1)/2)) for every 2 <= n <= n_max. The
/// report carries both values per n; it never asserts, so a counterexample
/// surfaces as a MISMATCH row instead of stopping the run.
VerificationReport check_conjecture(int n_max);

} // namespace pinlab

#endif
