#ifndef PINLAB_ORACLE_HPP
#define PINLAB_ORACLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pinlab/admissibility.hpp"
#include "pinlab/bigcount.hpp"
#include "pinlab/rational.hpp"
#include "pinlab/signed_set.hpp"

namespace pinlab {

/// Limits and parallelism for the exhaustive searches. Caps are
/// configuration, not constants: rank 9 in type B means ~1.86e8 elements.
struct OracleConfig {
    int max_n_signed = 9;    // cap for types B and D
    int max_n_unsigned = 11; // cap for type A
    int max_ground = 9;      // cap for arbitrary ground sets
    int threads = 0;         // 0 = hardware concurrency
};

/// Everything an exhaustive sweep of one ambient group learns: the exact
/// admissible family with witness multiplicities, plus the group size.
struct OracleResult {
    AmbientSpec ambient;
    std::map<SignedSet, std::uint64_t> families; // pinnacle set -> witness count
    BigCount total_perms;

    /// Sorted text dump, one "SET<TAB>count" line per family member.
    std::string dump() const;
};

/// Iterates every element of the ambient group exactly once, collecting
/// pinnacle sets and witness counts. Internally parallel over disjoint
/// leading-value prefixes; the result is independent of the split. Throws
/// std::domain_error with an element-count estimate when n exceeds the cap.
OracleResult brute_aps(AmbientSpec ambient, const OracleConfig& config = {});

/// Number of elements of the ambient group whose pinnacle set is exactly S;
/// zero iff S is not admissible there.
BigCount brute_count_witnesses(const SignedSet& s, AmbientSpec ambient,
                               const OracleConfig& config = {});

/// Pinnacle sets over all |X|! arrangements of an arbitrary ground set.
std::set<std::vector<Rational>> brute_aps_generic(const OrderedGround& x,
                                                  const OracleConfig& config = {});

} // namespace pinlab

#endif
