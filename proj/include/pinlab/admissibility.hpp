#ifndef PINLAB_ADMISSIBILITY_HPP
#define PINLAB_ADMISSIBILITY_HPP

#include <vector>

#include "pinlab/rational.hpp"
#include "pinlab/signed_permutation.hpp"
#include "pinlab/signed_set.hpp"

namespace pinlab {

/// The ambient permutation class a query is asked against: rank n together
/// with the group kind.
struct AmbientSpec {
    int n = 1;
    GroupKind kind = GroupKind::B;
};

/// Decides whether S can be the pinnacle set of some arrangement of the
/// ground set X, by the rank criterion: writing S = {s_1 < ... < s_k}, the
/// i-th smallest proposed pinnacle must have at least 2i strictly smaller
/// elements in X. Throws std::invalid_argument if S is not a subset of X.
bool aps_generic_contains(const OrderedGround& x, const std::vector<Rational>& s);

/// Rank criterion specialized to signed-integer grounds. `ground` must be
/// strictly increasing; `s` must be a strictly increasing subset of it.
bool aps_contains_int(const std::vector<int>& ground, const std::vector<int>& s);

/// Decides admissibility of S as a pinnacle set in the ambient class.
/// Inadmissible sets (including out-of-range values) answer false rather
/// than erroring: a query is a question, not a contract violation.
bool is_admissible(const SignedSet& s, AmbientSpec ambient);

/// For odd n = 2k+1, decides whether S is admissible in type B but not in
/// type D: |S| = k, |N| and k share parity, N alone is B-admissible, and P
/// consists of the k-|N| smallest positive values outside -N. Returns false
/// when S is not B-admissible. Throws std::domain_error for even n.
bool in_B_not_D(const SignedSet& s, int n);

/// Builds the canonical witness permutation for an admissible set: the
/// non-pinnacle values (all negatives outside ±S for type B, the unused
/// positives for type A) interleaved in increasing order with the pinnacles
/// in increasing order. For type D the last entry's sign is dropped when
/// the type-B word has an odd number of negatives. Throws std::domain_error
/// if S is not admissible in the ambient class.
SignedPermutation canonical_witness(const SignedSet& s, AmbientSpec ambient);

/// The bijection between type-A admissible sets and the all-negative
/// type-B admissible sets: t -> t - (n+1) elementwise.
SignedSet shift_neg(const SignedSet& t, int n);

/// Inverse of shift_neg: s -> s + (n+1) elementwise.
SignedSet shift_pos(const SignedSet& s, int n);

/// Least n such that S is admissible in the rank-n hyperoctahedral group;
/// 1 for the empty set, and never more than 2*max|s| + 1.
int min_ambient_n(const SignedSet& s);

} // namespace pinlab

#endif
