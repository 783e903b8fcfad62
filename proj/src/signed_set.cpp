#include "pinlab/signed_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pinlab {

SignedSet::SignedSet(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0)
            throw std::invalid_argument("SignedSet: zero is not allowed");
        if (i > 0 && values_[i] == values_[i - 1])
            throw std::invalid_argument("SignedSet: duplicate value " +
                                        std::to_string(values_[i]));
    }
    for (int v : values_) {
        if (v > 0 && std::binary_search(values_.begin(), values_.end(), -v))
            throw std::invalid_argument("SignedSet: contains both " +
                                        std::to_string(v) + " and " +
                                        std::to_string(-v));
    }
}

SignedSet SignedSet::parse(std::string_view text) {
    std::string s(text);
    // strip optional braces
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        return SignedSet{};
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}')
            throw std::invalid_argument("SignedSet: unbalanced braces in '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("SignedSet: empty element in '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("SignedSet: '" + tok + "' is not an integer");
        }
        if (pos != tok.size())
            throw std::invalid_argument("SignedSet: '" + tok + "' is not an integer");
        vals.push_back(v);
    }
    return SignedSet(std::move(vals));
}

bool SignedSet::contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool SignedSet::all_positive() const {
    return values_.empty() || values_.front() > 0;
}

bool SignedSet::all_negative() const {
    return values_.empty() || values_.back() < 0;
}

std::string SignedSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values_[i]);
    }
    out += '}';
    return out;
}

bool SignedSet::operator<(const SignedSet& other) const {
    return std::lexicographical_compare(values_.begin(), values_.end(),
                                        other.values_.begin(), other.values_.end());
}

std::pair<SignedSet, SignedSet> split_PN(const SignedSet& s) {
    std::vector<int> pos, neg;
    for (int v : s.values())
        (v > 0 ? pos : neg).push_back(v);
    return {SignedSet(std::move(pos)), SignedSet(std::move(neg))};
}

} // namespace pinlab
