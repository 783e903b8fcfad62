#include "pinlab/signed_permutation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pinlab {

std::string to_string(GroupKind k) {
    switch (k) {
    case GroupKind::A: return "A";
    case GroupKind::B: return "B";
    case GroupKind::D: return "D";
    }
    return "?";
}

GroupKind parse_group_kind(std::string_view text) {
    if (text == "A" || text == "a") return GroupKind::A;
    if (text == "B" || text == "b") return GroupKind::B;
    if (text == "D" || text == "d") return GroupKind::D;
    throw std::invalid_argument("unknown group kind '" + std::string(text) +
                                "' (expected A, B or D)");
}

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0)
        throw std::invalid_argument("permutation: empty word");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        const int v = entries_[i];
        if (v == 0)
            throw std::invalid_argument("permutation: zero entry at position " +
                                        std::to_string(i + 1));
        const int a = std::abs(v);
        if (a > n)
            throw std::invalid_argument("permutation: |" + std::to_string(v) +
                                        "| at position " + std::to_string(i + 1) +
                                        " exceeds length " + std::to_string(n));
        if (seen[a])
            throw std::invalid_argument("permutation: absolute value " +
                                        std::to_string(a) +
                                        " repeated at position " +
                                        std::to_string(i + 1));
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::string s(text);
    for (char& c : s)
        if (c == ',')
            c = ' ';
    std::istringstream in(s);
    std::vector<int> entries;
    std::string tok;
    int position = 0;
    while (in >> tok) {
        ++position;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation: token '" + tok +
                                        "' at position " + std::to_string(position) +
                                        " is not an integer");
        }
        if (pos != tok.size())
            throw std::invalid_argument("permutation: token '" + tok +
                                        "' at position " + std::to_string(position) +
                                        " is not an integer");
        entries.push_back(v);
    }
    return SignedPermutation(std::move(entries));
}

int SignedPermutation::operator()(int i) const {
    const int n = size();
    if (i == 0 || std::abs(i) > n)
        throw std::out_of_range("permutation: index " + std::to_string(i) +
                                " outside ±[" + std::to_string(n) + "]");
    return i > 0 ? entries_[i - 1] : -entries_[-i - 1];
}

std::string SignedPermutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

bool is_member(const SignedPermutation& w, GroupKind kind) {
    switch (kind) {
    case GroupKind::B:
        return true;
    case GroupKind::A:
        return std::all_of(w.entries().begin(), w.entries().end(),
                           [](int v) { return v > 0; });
    case GroupKind::D: {
        auto negatives = std::count_if(w.entries().begin(), w.entries().end(),
                                       [](int v) { return v < 0; });
        return negatives % 2 == 0;
    }
    }
    return false;
}

std::vector<int> peak_indices(const SignedPermutation& w) {
    std::vector<int> out;
    const auto& e = w.entries();
    for (int i = 1; i + 1 < static_cast<int>(e.size()); ++i)
        if (e[i - 1] < e[i] && e[i] > e[i + 1])
            out.push_back(i + 1);
    return out;
}

std::vector<int> valley_indices(const SignedPermutation& w) {
    std::vector<int> out;
    const auto& e = w.entries();
    for (int i = 1; i + 1 < static_cast<int>(e.size()); ++i)
        if (e[i - 1] > e[i] && e[i] < e[i + 1])
            out.push_back(i + 1);
    return out;
}

SignedSet pinnacle_set(const SignedPermutation& w) {
    std::vector<int> vals;
    for (int i : peak_indices(w))
        vals.push_back(w(i));
    return SignedSet(std::move(vals));
}

SignedSet vale_set(const SignedPermutation& w) {
    std::vector<int> vals;
    for (int i : valley_indices(w))
        vals.push_back(w(i));
    return SignedSet(std::move(vals));
}

SignedPermutation flip_last(const SignedPermutation& w) {
    const int n = w.size();
    std::vector<int> entries = w.entries();
    if (n >= 2) {
        const int a = entries[n - 2];
        const int b = entries[n - 1];
        const bool above = a > b && a > -b;
        const bool below = a < b && a < -b;
        if (!above && !below)
            throw std::domain_error(
                "flip_last: w(n-1) = " + std::to_string(a) +
                " compares differently against " + std::to_string(b) + " and " +
                std::to_string(-b) + "; flipping would alter the final comparison");
    }
    entries[n - 1] = -entries[n - 1];
    return SignedPermutation(std::move(entries));
}

} // namespace pinlab
