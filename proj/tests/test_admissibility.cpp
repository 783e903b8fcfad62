#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "pinlab/admissibility.hpp"
#include "pinlab/enumeration.hpp"
#include "pinlab/oracle.hpp"
#include "pinlab/verify.hpp"

using namespace pinlab;

namespace {

// Exhaustion over a small hyperoctahedral group, independent of the oracle
// module's encoding tricks: plain next_permutation plus a sign-mask loop.
template <typename Fn>
void for_each_signed_perm(int n, Fn fn) {
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i)
        word[i] = i + 1;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> entries(word);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    entries[i] = -entries[i];
            fn(SignedPermutation(std::move(entries)));
        }
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Rational> rationals(std::initializer_list<Rational> vs) {
    return std::vector<Rational>(vs);
}

} // namespace

TEST_SUITE("admissibility") {

TEST_CASE("generic ground sets: rank criterion") {
    const auto x = OrderedGround::parse("-2, 3.14159, 4, 5, 100");
    CHECK(aps_generic_contains(x, rationals({4, 100})));
    CHECK(aps_generic_contains(x, {}));
    CHECK_FALSE(aps_generic_contains(x, rationals({Rational::parse("3.14159")})));

    // the full admissible family of this ground set has exactly 6 members
    const auto family = brute_aps_generic(x);
    CHECK(family.size() == 6);

    const auto five = OrderedGround::parse("1,2,3,4,5");
    CHECK_FALSE(aps_generic_contains(five, rationals({3, 4})));
    CHECK(aps_generic_contains(five, rationals({3, 5})));

    CHECK_THROWS_AS(aps_generic_contains(five, rationals({7})),
                    std::invalid_argument);
}

TEST_CASE("rank criterion agrees with exhaustion on every small ground") {
    const std::vector<OrderedGround> grounds = {
        OrderedGround::parse("1,2,3,4,5,6,7"),
        OrderedGround::parse("-2, 3.14159, 4, 5, 100"),
        OrderedGround::parse("-7,-6,-5,-4,-3,-2,-1"),
        OrderedGround::parse("-3/2, -1/7, 0, 2/3, 22/7, 100000"),
        OrderedGround::parse("0.001, 0.01, 0.1, 1, 10"),
        OrderedGround{},
    };
    for (const auto& x : grounds) {
        REQUIRE(x.size() <= 7);
        const auto family = brute_aps_generic(x);
        const int m = x.size();
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<Rational> subset;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1)
                    subset.push_back(x.values()[i]);
            CHECK(aps_generic_contains(x, subset) ==
                  (family.count(subset) > 0));
        }
    }
}

TEST_CASE("family size depends only on the ground-set size") {
    const auto exotic = OrderedGround::parse("-3/2, -1/7, 0, 2/3, 22/7");
    CHECK(brute_aps_generic(exotic).size() ==
          brute_aps_generic(OrderedGround::parse("1,2,3,4,5")).size());
    for (int m = 1; m <= 7; ++m) {
        std::vector<Rational> shifted;
        for (int i = 0; i < m; ++i)
            shifted.push_back(Rational(2 * i - 5, 3));
        std::vector<Rational> canonical;
        for (int i = 1; i <= m; ++i)
            canonical.push_back(Rational(i));
        CHECK(brute_aps_generic(OrderedGround(shifted)).size() ==
              brute_aps_generic(OrderedGround(canonical)).size());
    }
}

TEST_CASE("is_admissible: the paper's showcase sets") {
    const auto s1 = SignedSet::parse("{-4,1,2}");
    CHECK(is_admissible(s1, {7, GroupKind::B}));
    CHECK_FALSE(is_admissible(s1, {7, GroupKind::D}));

    const auto s2 = SignedSet::parse("{3,4,7}");
    CHECK(is_admissible(s2, {7, GroupKind::B}));
    for (int n = 1; n <= 12; ++n)
        CHECK_FALSE(is_admissible(s2, {n, GroupKind::A}));

    CHECK(is_admissible(SignedSet::parse("{1,2}"), {5, GroupKind::B}));
    CHECK(is_admissible(SignedSet{}, {3, GroupKind::D}));

    // out-of-range values are an inadmissible query, not an error
    CHECK_FALSE(is_admissible(SignedSet::parse("{9}"), {5, GroupKind::B}));
    CHECK_FALSE(is_admissible(SignedSet::parse("{-9}"), {5, GroupKind::B}));
}

TEST_CASE("in_B_not_D") {
    CHECK(in_B_not_D(SignedSet::parse("{-1}"), 3));
    CHECK(in_B_not_D(SignedSet::parse("{-4,1,2}"), 7));
    CHECK_FALSE(in_B_not_D(SignedSet::parse("{3,4,7}"), 7)); // parity fails
    CHECK_FALSE(in_B_not_D(SignedSet::parse("{-1}"), 1));
    CHECK_FALSE(in_B_not_D(SignedSet::parse("{9}"), 3)); // not even admissible
    CHECK_THROWS_AS(in_B_not_D(SignedSet::parse("{-1}"), 4), std::domain_error);
}

TEST_CASE("canonical witnesses from the definition") {
    CHECK(canonical_witness(SignedSet::parse("{-4,1,2}"), {7, GroupKind::B}) ==
          SignedPermutation::parse("-7 -4 -6 1 -5 2 -3"));
    CHECK(canonical_witness(SignedSet::parse("{1,3}"), {5, GroupKind::B}) ==
          SignedPermutation::parse("-5 1 -4 3 -2"));
    CHECK(canonical_witness(SignedSet::parse("{3,6,7,10}"), {10, GroupKind::A}) ==
          SignedPermutation::parse("1 3 2 6 4 7 5 10 8 9"));
    CHECK(canonical_witness(SignedSet::parse("{1}"), {4, GroupKind::D}) ==
          SignedPermutation::parse("-4 1 -3 2"));
    // ascending interleave, not the figure's variant word
    CHECK(canonical_witness(SignedSet::parse("{3,4,7}"), {7, GroupKind::B}) ==
          SignedPermutation::parse("-6 3 -5 4 -2 7 -1"));

    CHECK_THROWS_AS(canonical_witness(SignedSet::parse("{-4,1,2}"),
                                      {7, GroupKind::D}),
                    std::domain_error);
    CHECK_THROWS_AS(canonical_witness(SignedSet::parse("{1,2}"),
                                      {5, GroupKind::A}),
                    std::domain_error);
}

TEST_CASE("witness soundness across every admissible set, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (GroupKind kind : {GroupKind::A, GroupKind::B, GroupKind::D}) {
            for (const auto& s : enumerate_all({n, kind}, Family::All)) {
                const auto w = canonical_witness(s, {n, kind});
                CHECK(pinnacle_set(w) == s);
                CHECK(is_member(w, kind));
            }
        }
    }
}

TEST_CASE("shift bijection between type A and all-negative type B") {
    CHECK(shift_neg(SignedSet::parse("{3,6,7,10}"), 10) ==
          SignedSet::parse("{-8,-5,-4,-1}"));
    CHECK(shift_neg(SignedSet{}, 4).empty());
    CHECK(shift_pos(SignedSet::parse("{-8,-5,-4,-1}"), 10) ==
          SignedSet::parse("{3,6,7,10}"));
    CHECK_THROWS_AS(shift_neg(SignedSet::parse("{-1}"), 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(shift_pos(SignedSet::parse("{1}"), 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(shift_neg(SignedSet::parse("{7}"), 5),
                    std::invalid_argument);

    for (int n = 2; n <= 8; ++n) {
        std::set<SignedSet> image;
        for (const auto& t : enumerate_all({n, GroupKind::A}, Family::All)) {
            const auto shifted = shift_neg(t, n);
            CHECK(shift_pos(shifted, n) == t); // mutually inverse
            image.insert(shifted);
        }
        std::set<SignedSet> negatives;
        for (const auto& s : enumerate_all({n, GroupKind::B}, Family::All))
            if (s.all_negative())
                negatives.insert(s);
        CHECK(image == negatives);
    }
}

TEST_CASE("min_ambient_n") {
    CHECK(min_ambient_n(SignedSet{}) == 1);
    CHECK(min_ambient_n(SignedSet::parse("{1,2}")) == 5);
    CHECK(min_ambient_n(SignedSet::parse("{-4,1,2}")) == 7);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> vals;
        for (int a = 1; a <= 6; ++a) {
            const auto r = rng() % 3;
            if (r == 1)
                vals.push_back(a);
            else if (r == 2)
                vals.push_back(-a);
        }
        const SignedSet s(std::move(vals));
        const int n = min_ambient_n(s);
        CHECK(is_admissible(s, {n, GroupKind::B}));
        if (n > 1)
            CHECK_FALSE(is_admissible(s, {n - 1, GroupKind::B}));
        int max_abs = 0;
        for (int v : s.values())
            max_abs = std::max(max_abs, std::abs(v));
        CHECK(n <= 2 * max_abs + 1);
    }
}

TEST_CASE("size bound and all-positive corollary") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& s : all_signed_subsets(n))
            for (GroupKind kind : {GroupKind::A, GroupKind::B, GroupKind::D})
                if (is_admissible(s, {n, kind}))
                    CHECK(2 * s.size() <= n - 1);

    for (int n = 1; n <= 10; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (2 * std::popcount(mask) > n - 1)
                continue;
            std::vector<int> vals;
            for (int v = 1; v <= n; ++v)
                if (mask >> (v - 1) & 1)
                    vals.push_back(v);
            CHECK(is_admissible(SignedSet(std::move(vals)), {n, GroupKind::B}));
        }
    }
}

TEST_CASE("deciders match exhaustion for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (GroupKind kind : {GroupKind::A, GroupKind::B, GroupKind::D}) {
            const auto oracle = brute_aps({n, kind});
            for (const auto& s : all_signed_subsets(n))
                CHECK(is_admissible(s, {n, kind}) ==
                      (oracle.families.count(s) > 0));
        }
    }
}

TEST_CASE("witnesses of B-not-D sets have all-negative non-pinnacles") {
    for (int n : {5, 7}) {
        std::set<SignedSet> b_not_d;
        for (const auto& s : enumerate_all({n, GroupKind::B}, Family::BNotD))
            b_not_d.insert(s);
        for_each_signed_perm(n, [&](const SignedPermutation& w) {
            if (!b_not_d.count(pinnacle_set(w)))
                return;
            const auto peaks = peak_indices(w);
            for (int i = 1; i <= n; ++i)
                if (std::find(peaks.begin(), peaks.end(), i) == peaks.end())
                    CHECK(w(i) < 0);
        });
    }
}

} // TEST_SUITE
