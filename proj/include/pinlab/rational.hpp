#ifndef PINLAB_RATIONAL_HPP
#define PINLAB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pinlab {

/// Exact rational number, always in lowest terms with positive denominator.
/// Only the order of ground-set values matters downstream, so int64
/// numerators/denominators with 128-bit cross-multiplied comparisons are
/// plenty.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d); // normalizes; throws on d == 0
    Rational(int n) : Rational(static_cast<std::int64_t>(n), 1) {}

    /// Parses an integer ("-2"), a decimal ("3.14159"), or a fraction ("22/7").
    static Rational parse(std::string_view text);

    std::string to_string() const;

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const { return *this == other || *this < other; }
    bool operator>(const Rational& other) const { return other < *this; }
};

/// A finite totally ordered ground set of distinct exact rationals, kept
/// strictly increasing. May be empty.
class OrderedGround {
public:
    OrderedGround() = default;

    /// Sorts and rejects duplicates.
    explicit OrderedGround(std::vector<Rational> values);

    /// Parses comma-separated values, e.g. "-2, 3.14159, 4, 5, 100".
    static OrderedGround parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<Rational>& values() const { return values_; }
    bool contains(const Rational& v) const;

    /// Number of elements strictly below v.
    int rank(const Rational& v) const;

    std::string to_string() const;

private:
    std::vector<Rational> values_;
};

} // namespace pinlab

#endif
