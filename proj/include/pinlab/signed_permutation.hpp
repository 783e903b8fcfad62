#ifndef PINLAB_SIGNED_PERMUTATION_HPP
#define PINLAB_SIGNED_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pinlab/signed_set.hpp"

namespace pinlab {

/// Which permutation class a query is about: the symmetric group (A), the
/// hyperoctahedral group of all signed permutations (B), or its index-two
/// subgroup with an even number of negative entries (D).
enum class GroupKind { A, B, D };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(std::string_view text);

/// A signed permutation in one-line notation: w(1)..w(n), nonzero entries
/// whose absolute values are exactly 1..n. Only the positive positions are
/// stored; w(-i) = -w(i) is derived on demand.
class SignedPermutation {
public:
    /// Validates the one-line word. Throws std::invalid_argument naming the
    /// offending position on zero entries, duplicate absolute values, or
    /// absolute values not forming 1..n.
    explicit SignedPermutation(std::vector<int> entries);

    /// Parses whitespace- or comma-separated integers, e.g. "-7 -4 -6 1 -5 2 -3".
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// w(i) for i in ±[n] (1-indexed; negative i yields -w(-i)).
    int operator()(int i) const;

    const std::vector<int>& entries() const { return entries_; }

    /// Space-separated one-line notation.
    std::string to_string() const;

    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> entries_;
};

/// Class membership: A iff every entry is positive, D iff the number of
/// negative entries is even, B always.
bool is_member(const SignedPermutation& w, GroupKind kind);

/// Interior indices i (2 <= i <= n-1) with w(i-1) < w(i) > w(i+1), ascending.
std::vector<int> peak_indices(const SignedPermutation& w);

/// Interior indices i with w(i-1) > w(i) < w(i+1), ascending.
std::vector<int> valley_indices(const SignedPermutation& w);

/// The values held at peak indices.
SignedSet pinnacle_set(const SignedPermutation& w);

/// The values held at valley indices.
SignedSet vale_set(const SignedPermutation& w);

/// Negates the final entry. Defined when w(n-1) compares the same way
/// against w(n) and -w(n) (equivalently |w(n-1)| > |w(n)|), in which case
/// the pinnacle set is unchanged and membership in the type-D subgroup
/// toggles. Throws std::domain_error on a mixed comparison. A length-1 word
/// has no comparison to preserve and is always flippable.
SignedPermutation flip_last(const SignedPermutation& w);

} // namespace pinlab

#endif
