#include "pinlab/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pinlab {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw std::invalid_argument("rational: empty token");
    s = s.substr(b, e - b + 1);

    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("rational: cannot parse '" + s + "'");
    };

    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i >= s.size())
        throw bad();

    auto read_digits = [&](std::size_t& pos) -> std::string {
        std::string d;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
            d += s[pos++];
        return d;
    };

    const std::string ipart = read_digits(i);
    std::int64_t num = 0, den = 1;
    constexpr std::int64_t LIMIT = 1000000000000000000LL; // 1e18 guard

    auto append_digit = [&](std::int64_t& acc, char c) {
        if (acc > LIMIT / 10)
            throw std::invalid_argument("rational: '" + s + "' has too many digits");
        acc = acc * 10 + (c - '0');
    };

    for (char c : ipart)
        append_digit(num, c);

    if (i < s.size() && s[i] == '.') {
        ++i;
        const std::string fpart = read_digits(i);
        if (ipart.empty() && fpart.empty())
            throw bad();
        for (char c : fpart) {
            append_digit(num, c);
            if (den > LIMIT / 10)
                throw std::invalid_argument("rational: '" + s + "' has too many digits");
            den *= 10;
        }
    } else if (i < s.size() && s[i] == '/') {
        ++i;
        if (ipart.empty())
            throw bad();
        bool dneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            dneg = s[i] == '-';
            ++i;
        }
        const std::string dpart = read_digits(i);
        if (dpart.empty())
            throw bad();
        den = 0;
        for (char c : dpart)
            append_digit(den, c);
        if (dneg)
            den = -den;
    } else if (ipart.empty()) {
        throw bad();
    }

    if (i != s.size())
        throw bad();
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool Rational::operator<(const Rational& other) const {
    using wide = __int128;
    return static_cast<wide>(num) * other.den < static_cast<wide>(other.num) * den;
}

OrderedGround::OrderedGround(std::vector<Rational> values)
    : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1])
            throw std::invalid_argument("ground set: duplicate value " +
                                        values_[i].to_string());
}

OrderedGround OrderedGround::parse(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        return OrderedGround{};
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}')
            throw std::invalid_argument("ground set: unbalanced braces in '" + s + "'");
        s = s.substr(1, s.size() - 2);
        auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos)
            return OrderedGround{};
    }
    std::vector<Rational> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        vals.push_back(Rational::parse(tok));
    return OrderedGround(std::move(vals));
}

bool OrderedGround::contains(const Rational& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

int OrderedGround::rank(const Rational& v) const {
    return static_cast<int>(
        std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
}

std::string OrderedGround::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ',';
        out += values_[i].to_string();
    }
    out += '}';
    return out;
}

} // namespace pinlab
