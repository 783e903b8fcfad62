#ifndef PINLAB_VERIFY_HPP
#define PINLAB_VERIFY_HPP

#include <vector>

#include "pinlab/oracle.hpp"
#include "pinlab/report.hpp"
#include "pinlab/signed_set.hpp"

namespace pinlab {

/// All signed subsets of ±[n] (3^n of them), the decider's query domain.
std::vector<SignedSet> all_signed_subsets(int n);

/// Cross-checks, for each 3 <= n <= max_n and each of types A, B, D:
///   - the exhaustive family equals the set accepted by the decider,
///   - the generator stream reproduces the same family without repeats,
///   - the stream length equals the closed-form count, and
///   - witness multiplicities sum to the group order.
/// Mismatches are reported with the first differing set, never suppressed.
VerificationReport run_triple_agreement(int max_n, const OracleConfig& config = {});

} // namespace pinlab

#endif
