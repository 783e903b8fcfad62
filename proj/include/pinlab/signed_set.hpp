#ifndef PINLAB_SIGNED_SET_HPP
#define PINLAB_SIGNED_SET_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinlab {

/// A finite set of nonzero integers that never contains a value together
/// with its negation. Values are kept strictly increasing.
///
/// This is the universal carrier for pinnacle sets: the pinnacle values of
/// any signed permutation form such a set, as do vale values.
class SignedSet {
public:
    SignedSet() = default;

    /// Builds the set from arbitrary values. Sorts them and rejects zeros,
    /// duplicates, and pairs {x, -x}.
    explicit SignedSet(std::vector<int> values);

    /// Parses "{a,b,c}" or bare "a,b,c"; "{}" and "" denote the empty set.
    static SignedSet parse(std::string_view text);

    bool empty() const { return values_.empty(); }
    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    bool contains(int v) const;

    bool all_positive() const;
    bool all_negative() const;

    /// Renders as "{-4,1,2}"; the empty set is "{}".
    std::string to_string() const;

    bool operator==(const SignedSet&) const = default;

    /// Lexicographic on the increasing value sequence. This is the order
    /// used for std::map keys and for oracle dumps.
    bool operator<(const SignedSet& other) const;

private:
    std::vector<int> values_; // strictly increasing, nonzero, no {x,-x} pair
};

/// Splits S into its positive part P and negative part N, S = P disjoint-union N.
std::pair<SignedSet, SignedSet> split_PN(const SignedSet& s);

} // namespace pinlab

#endif
