#ifndef PINLAB_ENUMERATION_HPP
#define PINLAB_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pinlab/admissibility.hpp"
#include "pinlab/bigcount.hpp"
#include "pinlab/signed_set.hpp"

namespace pinlab {

/// Number of type-A admissible pinnacle sets of [n] with cardinality at
/// most d: C(n-1, d) on d <= floor((n-1)/2); beyond that the count
/// saturates at the full family size, so d is clamped.
BigCount p_table(int n, int d);

/// |APS_n| for the symmetric group: C(n-1, floor((n-1)/2)). Requires n >= 2.
BigCount count_A(int n);

/// |APS^B_n| = sum_k C(n,k) * C(n-1-k, floor((n-1)/2)-k). Requires n >= 2.
BigCount count_B(int n);

/// |APS^B_n \ APS^D_n|: zero for even n, C(2k-1, k) for n = 2k+1.
BigCount count_B_minus_D(int n);

/// |APS^D_n| = count_B(n) - count_B_minus_D(n). Requires n >= 2.
BigCount count_D(int n);

/// Number of all-positive type-B admissible sets: the partial row sum
/// of binomials C(n, i) for i <= floor((n-1)/2). Requires n >= 2.
BigCount count_plus(int n);

/// count_plus(n) - count_A(n); closed forms 4^k - C(2k,k) for n = 2k+1 and
/// 2^(2k-1) - C(2k,k) for n = 2k. Requires n >= 2.
BigCount count_plus_minus_A(int n);

/// Which subfamily a stream yields.
enum class Family { All, BNotD, Plus, PlusNotA };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// Lazy, deterministic stream of admissible pinnacle sets.
///
/// Generation order: sets are built as pairs (P, N) of their positive and
/// negative parts and emitted in colexicographic pair order, i.e. sorted by
/// the key (|N|, N, |P|, P), where each part is compared by size first and
/// then lexicographically on its increasing value sequence. All-positive
/// sets therefore stream first, ordered by size then lexicographically.
///
/// Families Plus and PlusNotA, and kind A, require the B/ambient context
/// noted in the constructor; incompatible combinations throw
/// std::invalid_argument.
class AdmissibleStream {
public:
    AdmissibleStream(AmbientSpec ambient, Family family);

    /// Next set, or nullopt when exhausted.
    std::optional<SignedSet> next();

private:
    bool advance_pair();     // moves to the next raw (P, N) candidate
    bool pair_qualifies();   // characterization + family/kind filters

    AmbientSpec ambient_;
    Family family_;
    int bound_;                  // floor((n-1)/2)
    bool positives_only_;        // N is pinned to the empty set
    bool done_ = false;
    bool first_ = true;
    std::vector<int> neg_;       // current N, increasing (e.g. -5 < -2)
    std::vector<int> pos_;       // current P, increasing
    std::vector<int> pos_universe_; // [n] \ -N, increasing
};

/// Collects the whole stream; convenient for tests and small n.
std::vector<SignedSet> enumerate_all(AmbientSpec ambient, Family family);

/// Streams every set through `fn`; stops early if `fn` returns false.
void enumerate_for_each(AmbientSpec ambient, Family family,
                        const std::function<bool(const SignedSet&)>& fn);

} // namespace pinlab

#endif
