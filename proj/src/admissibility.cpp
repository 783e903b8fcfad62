#include "pinlab/admissibility.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pinlab {

namespace {

// Rank criterion over an abstract "number of ground elements strictly below
// the i-th smallest member of S" function.
template <typename RankFn>
bool rank_criterion(int set_size, RankFn below) {
    for (int i = 1; i <= set_size; ++i)
        if (below(i) < 2 * i)
            return false;
    return true;
}

} // namespace

bool aps_generic_contains(const OrderedGround& x, const std::vector<Rational>& s) {
    std::vector<Rational> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("aps_generic_contains: duplicate value " +
                                        sorted[i].to_string());
    for (const Rational& v : sorted)
        if (!x.contains(v))
            throw std::invalid_argument("aps_generic_contains: " + v.to_string() +
                                        " is not in the ground set");
    return rank_criterion(static_cast<int>(sorted.size()),
                          [&](int i) { return x.rank(sorted[i - 1]); });
}

bool aps_contains_int(const std::vector<int>& ground, const std::vector<int>& s) {
    return rank_criterion(static_cast<int>(s.size()), [&](int i) {
        return static_cast<int>(std::lower_bound(ground.begin(), ground.end(),
                                                 s[i - 1]) -
                                ground.begin());
    });
}

namespace {

// The type-B characterization: |P|+|N| <= (n-1)/2, P inside [n], N inside
// -([n]\P), and N admissible over the ground -([n]\P). The rank of the i-th
// smallest negative pinnacle v in that ground is |{x in [n]\P : x > |v|}|.
bool admissible_B(const SignedSet& s, int n) {
    if (2 * s.size() > n - 1)
        return false;
    const auto [p, nn] = split_PN(s);
    for (int v : p.values())
        if (v > n)
            return false;
    for (int v : nn.values())
        if (-v > n)
            return false;
    const auto& neg = nn.values(); // increasing, e.g. -7 < -4
    for (int i = 1; i <= nn.size(); ++i) {
        const int a = -neg[i - 1]; // absolute value
        int below = n - a;         // positives above a
        for (int q : p.values())
            if (q > a)
                --below;
        if (below < 2 * i)
            return false;
    }
    return true;
}

bool admissible_A(const SignedSet& s, int n) {
    if (!s.all_positive())
        return false;
    const auto& vals = s.values();
    if (!vals.empty() && vals.back() > n)
        return false;
    // rank of v in [n] is v-1, so the criterion reads v > 2i
    for (int i = 1; i <= s.size(); ++i)
        if (vals[i - 1] <= 2 * i)
            return false;
    return true;
}

} // namespace

bool is_admissible(const SignedSet& s, AmbientSpec ambient) {
    if (ambient.n < 1)
        return false;
    switch (ambient.kind) {
    case GroupKind::A:
        return admissible_A(s, ambient.n);
    case GroupKind::B:
        return admissible_B(s, ambient.n);
    case GroupKind::D:
        if (!admissible_B(s, ambient.n))
            return false;
        return ambient.n % 2 == 0 || !in_B_not_D(s, ambient.n);
    }
    return false;
}

bool in_B_not_D(const SignedSet& s, int n) {
    if (n % 2 == 0)
        throw std::domain_error("in_B_not_D: n must be odd");
    if (n == 1)
        return false; // both families are {{}}: the lone entry can always flip
    if (!is_admissible(s, {n, GroupKind::B}))
        return false;
    const int k = (n - 1) / 2;
    if (s.size() != k)
        return false;
    const auto [p, nn] = split_PN(s);
    if ((nn.size() + k) % 2 != 0)
        return false;
    if (!is_admissible(nn, {n, GroupKind::B}))
        return false;
    // P must be the k-|N| smallest positives outside -N.
    std::vector<int> smallest;
    for (int v = 1; v <= n && static_cast<int>(smallest.size()) < k - nn.size(); ++v)
        if (!nn.contains(-v))
            smallest.push_back(v);
    return p.values() == smallest;
}

namespace {

SignedPermutation interleave_witness(const std::vector<int>& pinnacles,
                                     const std::vector<int>& rest) {
    std::vector<int> word;
    word.reserve(pinnacles.size() + rest.size());
    std::size_t r = 0;
    for (std::size_t i = 0; i < pinnacles.size(); ++i) {
        word.push_back(rest[r++]);
        word.push_back(pinnacles[i]);
    }
    for (; r < rest.size(); ++r)
        word.push_back(rest[r]);
    return SignedPermutation(std::move(word));
}

} // namespace

SignedPermutation canonical_witness(const SignedSet& s, AmbientSpec ambient) {
    if (!is_admissible(s, ambient))
        throw std::domain_error("canonical_witness: " + s.to_string() +
                                " is not admissible in type " +
                                to_string(ambient.kind) + " at n = " +
                                std::to_string(ambient.n));
    const int n = ambient.n;
    const auto& vals = s.values();

    if (ambient.kind == GroupKind::A) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!s.contains(v))
                rest.push_back(v);
        return interleave_witness(vals, rest);
    }

    // Type B: the non-pinnacles are all of -[n] except -|s| for s in S.
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int v : vals)
        used[std::abs(v)] = true;
    std::vector<int> rest;
    for (int a = n; a >= 1; --a) // -n < -(n-1) < ... : increasing order
        if (!used[a])
            rest.push_back(-a);
    SignedPermutation w = interleave_witness(vals, rest);

    if (ambient.kind == GroupKind::D && !is_member(w, GroupKind::D)) {
        std::vector<int> entries = w.entries();
        entries.back() = std::abs(entries.back());
        w = SignedPermutation(std::move(entries));
    }
    return w;
}

SignedSet shift_neg(const SignedSet& t, int n) {
    if (!t.all_positive())
        throw std::invalid_argument("shift_neg: set must be all-positive");
    if (!t.empty() && t.values().back() > n)
        throw std::invalid_argument("shift_neg: set must lie inside [n]");
    std::vector<int> out;
    for (int v : t.values())
        out.push_back(v - (n + 1));
    return SignedSet(std::move(out));
}

SignedSet shift_pos(const SignedSet& s, int n) {
    if (!s.all_negative())
        throw std::invalid_argument("shift_pos: set must be all-negative");
    if (!s.empty() && -s.values().front() > n)
        throw std::invalid_argument("shift_pos: set must lie inside -[n]");
    std::vector<int> out;
    for (int v : s.values())
        out.push_back(v + n + 1);
    return SignedSet(std::move(out));
}

int min_ambient_n(const SignedSet& s) {
    if (s.empty())
        return 1;
    int max_abs = 0;
    for (int v : s.values())
        max_abs = std::max(max_abs, std::abs(v));
    int n = std::max(2 * s.size() + 1, max_abs);
    while (!is_admissible(s, {n, GroupKind::B}))
        ++n; // terminates: admissible at 2*max_abs + 1
    return n;
}

} // namespace pinlab
