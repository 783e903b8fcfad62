#include <doctest.h>

#include <algorithm>
#include <random>

#include "pinlab/signed_permutation.hpp"
#include "pinlab/signed_set.hpp"

using namespace pinlab;

namespace {

SignedPermutation random_signed_perm(int n, std::mt19937& rng) {
    std::vector<int> entries(n);
    for (int i = 0; i < n; ++i)
        entries[i] = i + 1;
    std::shuffle(entries.begin(), entries.end(), rng);
    for (int& v : entries)
        if (rng() & 1)
            v = -v;
    return SignedPermutation(std::move(entries));
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("parsing one-line notation") {
    const auto w = SignedPermutation::parse("2 3 7 1 5 6 4 8");
    CHECK(w.size() == 8);
    CHECK(w(3) == 7);
    CHECK(w(-3) == -7);

    const auto b = SignedPermutation::parse("-7 -4 -6 1 -5 2 -3");
    CHECK(b.size() == 7);
    CHECK(is_member(b, GroupKind::B));

    CHECK(SignedPermutation::parse("1,2,3") == SignedPermutation::parse("1 2 3"));

    CHECK_THROWS_WITH_AS(SignedPermutation::parse("1 0 2"),
                         doctest::Contains("position 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(SignedPermutation::parse("1 x 3"),
                         doctest::Contains("not an integer"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(SignedPermutation::parse("1 -1 2"),
                         doctest::Contains("repeated"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(SignedPermutation::parse("1 3"),
                         doctest::Contains("exceeds"), std::invalid_argument);
    CHECK_THROWS(SignedPermutation::parse(""));
}

TEST_CASE("class membership") {
    CHECK(is_member(SignedPermutation::parse("2 3 7 1 5 6 4 8"), GroupKind::A));
    const auto w = SignedPermutation::parse("-7 -4 -6 1 -5 2 -3");
    CHECK(is_member(w, GroupKind::B));
    CHECK_FALSE(is_member(w, GroupKind::A));
    CHECK_FALSE(is_member(w, GroupKind::D)); // five negatives
    CHECK(is_member(SignedPermutation::parse("-2 -1 3"), GroupKind::D));
}

TEST_CASE("pinnacles, peaks, valleys, vales") {
    const auto w = SignedPermutation::parse("2 3 7 1 5 6 4 8");
    CHECK(pinnacle_set(w) == SignedSet::parse("{6,7}"));
    CHECK(peak_indices(w) == std::vector<int>{3, 6});
    CHECK(valley_indices(w) == std::vector<int>{4, 7});
    CHECK(vale_set(w) == SignedSet::parse("{1,4}"));

    CHECK(pinnacle_set(SignedPermutation::parse("-7 -4 -6 1 -5 2 -3")) ==
          SignedSet::parse("{-4,1,2}"));
    CHECK(pinnacle_set(SignedPermutation::parse("-6 3 -5 4 -1 7 -2")) ==
          SignedSet::parse("{3,4,7}"));

    CHECK(pinnacle_set(SignedPermutation::parse("1 2 3")).empty());
    CHECK(vale_set(SignedPermutation::parse("1 2 3")).empty());
    CHECK(pinnacle_set(SignedPermutation::parse("1")).empty());
    CHECK(pinnacle_set(SignedPermutation::parse("2 1")).empty());
}

TEST_CASE("flip_last") {
    const auto flipped = flip_last(SignedPermutation::parse("-3 -2 -1"));
    CHECK(flipped == SignedPermutation::parse("-3 -2 1"));
    CHECK(pinnacle_set(flipped).empty());

    const auto w = SignedPermutation::parse("-4 1 -3 -2");
    const auto v = flip_last(w);
    CHECK(v == SignedPermutation::parse("-4 1 -3 2"));
    CHECK(pinnacle_set(v) == pinnacle_set(w));
    CHECK(pinnacle_set(v) == SignedSet::parse("{1}"));
    CHECK(is_member(w, GroupKind::D) != is_member(v, GroupKind::D));

    // mixed comparison: 2 < 3 but 2 > -3
    CHECK_THROWS_AS(flip_last(SignedPermutation::parse("-1 2 -3")),
                    std::domain_error);

    // -3 compares below both 2 and -2, so this flip is legal
    const auto u = SignedPermutation::parse("1 -3 2");
    CHECK(flip_last(u) == SignedPermutation::parse("1 -3 -2"));
    CHECK(pinnacle_set(flip_last(u)) == pinnacle_set(u));

    // a single letter has no comparison to preserve
    CHECK(flip_last(SignedPermutation::parse("1")) ==
          SignedPermutation::parse("-1"));
}

TEST_CASE("flip_last property over random words") {
    std::mt19937 rng(20230201);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto w = random_signed_perm(n, rng);
        const int a = w(n - 1), b = w(n);
        if (std::abs(a) > std::abs(b)) {
            const auto v = flip_last(w);
            CHECK(pinnacle_set(v) == pinnacle_set(w));
            CHECK(is_member(w, GroupKind::D) != is_member(v, GroupKind::D));
        } else {
            CHECK_THROWS_AS(flip_last(w), std::domain_error);
        }
    }
}

TEST_CASE("split_PN") {
    const auto [p1, n1] = split_PN(SignedSet::parse("{-4,1,2}"));
    CHECK(p1 == SignedSet::parse("{1,2}"));
    CHECK(n1 == SignedSet::parse("{-4}"));

    const auto [p2, n2] = split_PN(SignedSet{});
    CHECK(p2.empty());
    CHECK(n2.empty());

    const auto [p3, n3] = split_PN(SignedSet::parse("{-8,-5,-4,-1}"));
    CHECK(p3.empty());
    CHECK(n3 == SignedSet::parse("{-8,-5,-4,-1}"));
}

TEST_CASE("signed set invariants and text form") {
    CHECK_THROWS_AS(SignedSet({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SignedSet({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SignedSet({3, -3}), std::invalid_argument);

    CHECK(SignedSet::parse("{}").empty());
    CHECK(SignedSet::parse("").empty());
    CHECK(SignedSet::parse(" -4, 2 ,1 ") == SignedSet({1, 2, -4}));
    CHECK(SignedSet({2, -4, 1}).to_string() == "{-4,1,2}");
    CHECK(SignedSet{}.to_string() == "{}");
    CHECK_THROWS(SignedSet::parse("{1,,2}"));
    CHECK_THROWS(SignedSet::parse("{1,a}"));
}

TEST_CASE("pinnacles and vales are disjoint, and few") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto w = random_signed_perm(n, rng);
        const auto pins = pinnacle_set(w);
        const auto vales = vale_set(w);
        for (int v : pins.values())
            CHECK_FALSE(vales.contains(v));
        CHECK(pins.size() <= (n - 1) / 2);
        CHECK(peak_indices(w).size() == static_cast<std::size_t>(pins.size()));
    }
}

TEST_CASE("unsigned pinnacles never include 1 or 2") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> word(n);
        for (int i = 0; i < n; ++i)
            word[i] = i + 1;
        do {
            const auto pins = pinnacle_set(SignedPermutation(word));
            if (!pins.empty())
                CHECK(pins.values().front() >= 3);
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

} // TEST_SUITE
