#include "pinlab/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pinlab {

BigCount p_table(int n, int d) {
    if (n < 1)
        throw std::domain_error("p_table: n must be >= 1");
    if (d < 0)
        throw std::domain_error("p_table: d must be >= 0");
    const int cap = (n - 1) / 2;
    return binomial(n - 1, std::min(d, cap));
}

BigCount count_A(int n) {
    if (n < 2)
        throw std::domain_error("count_A: n must be >= 2");
    return binomial(n - 1, (n - 1) / 2);
}

BigCount count_B(int n) {
    if (n < 2)
        throw std::domain_error("count_B: n must be >= 2");
    const int m = (n - 1) / 2;
    BigCount total = 0;
    for (int k = 0; k <= m; ++k)
        total += binomial(n, k) * binomial(n - 1 - k, m - k);
    return total;
}

BigCount count_B_minus_D(int n) {
    if (n < 1)
        throw std::domain_error("count_B_minus_D: n must be >= 1");
    if (n % 2 == 0 || n == 1)
        return 0;
    const int k = (n - 1) / 2;
    return binomial(2 * k - 1, k);
}

BigCount count_D(int n) {
    if (n < 2)
        throw std::domain_error("count_D: n must be >= 2");
    return count_B(n) - count_B_minus_D(n);
}

BigCount count_plus(int n) {
    if (n < 2)
        throw std::domain_error("count_plus: n must be >= 2");
    const int m = (n - 1) / 2;
    BigCount total = 0;
    for (int i = 0; i <= m; ++i)
        total += binomial(n, i);
    return total;
}

BigCount count_plus_minus_A(int n) {
    if (n < 2)
        throw std::domain_error("count_plus_minus_A: n must be >= 2");
    return count_plus(n) - count_A(n);
}

std::string_view to_string(Family f) {
    switch (f) {
    case Family::All: return "all";
    case Family::BNotD: return "b-not-d";
    case Family::Plus: return "plus";
    case Family::PlusNotA: return "plus-not-a";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    std::string t;
    for (char c : text)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)) == '_'
                                   ? '-'
                                   : std::tolower(static_cast<unsigned char>(c)));
    if (t == "all")
        return Family::All;
    if (t == "b-not-d" || t == "b-d" || t == "bnotd")
        return Family::BNotD;
    if (t == "plus" || t == "+")
        return Family::Plus;
    if (t == "plus-not-a" || t == "plus-a" || t == "plusnota")
        return Family::PlusNotA;
    throw std::invalid_argument("unknown family '" + std::string(text) +
                                "' (expected all, b-not-d, plus or plus-not-a)");
}

namespace {

// Lexicographic successor of a fixed-size index combination over [0, m).
bool next_combination(std::vector<int>& idx, int m) {
    const int r = static_cast<int>(idx.size());
    for (int j = r - 1; j >= 0; --j) {
        if (idx[j] < m - r + j) {
            ++idx[j];
            for (int l = j + 1; l < r; ++l)
                idx[l] = idx[l - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int r) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    return idx;
}

} // namespace

AdmissibleStream::AdmissibleStream(AmbientSpec ambient, Family family)
    : ambient_(ambient), family_(family), bound_((ambient.n - 1) / 2) {
    if (ambient_.n < 1)
        throw std::invalid_argument("enumerate: n must be >= 1");
    if (family_ != Family::All && ambient_.kind != GroupKind::B)
        throw std::invalid_argument("enumerate: family '" +
                                    std::string(to_string(family_)) +
                                    "' requires the type-B ambient");
    positives_only_ = ambient_.kind == GroupKind::A || family_ == Family::Plus ||
                      family_ == Family::PlusNotA;
    if (family_ == Family::BNotD && ambient_.n % 2 == 0)
        done_ = true; // APS^B = APS^D at even rank: empty stream
}

bool AdmissibleStream::advance_pair() {
    const int n = ambient_.n;

    auto rebuild_universe = [&]() {
        std::vector<bool> excluded(static_cast<std::size_t>(n) + 1, false);
        for (int v : neg_)
            excluded[-v] = true;
        pos_universe_.clear();
        for (int v = 1; v <= n; ++v)
            if (!excluded[v])
                pos_universe_.push_back(v);
    };

    if (first_) {
        first_ = false;
        neg_.clear();
        rebuild_universe();
        pos_.clear();
        return true;
    }

    const int m = static_cast<int>(pos_universe_.size());
    const int pos_cap = std::min(bound_ - static_cast<int>(neg_.size()), m);

    // advance P within the current N
    std::vector<int> pidx(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i)
        pidx[i] = static_cast<int>(std::lower_bound(pos_universe_.begin(),
                                                    pos_universe_.end(), pos_[i]) -
                                   pos_universe_.begin());
    bool advanced = next_combination(pidx, m);
    if (!advanced && static_cast<int>(pidx.size()) < pos_cap) {
        pidx = first_combination(static_cast<int>(pidx.size()) + 1);
        advanced = true;
    }
    if (advanced) {
        pos_.resize(pidx.size());
        for (std::size_t i = 0; i < pidx.size(); ++i)
            pos_[i] = pos_universe_[pidx[i]];
        return true;
    }

    // advance N
    const int neg_cap = positives_only_ ? 0 : std::min(bound_, n);
    std::vector<int> nidx(neg_.size());
    for (std::size_t i = 0; i < neg_.size(); ++i)
        nidx[i] = neg_[i] + n; // value -n+j sits at index j
    advanced = next_combination(nidx, n);
    if (!advanced && static_cast<int>(nidx.size()) < neg_cap) {
        nidx = first_combination(static_cast<int>(nidx.size()) + 1);
        advanced = true;
    }
    if (!advanced)
        return false;
    neg_.resize(nidx.size());
    for (std::size_t i = 0; i < nidx.size(); ++i)
        neg_[i] = nidx[i] - n;
    rebuild_universe();
    pos_.clear();
    return true;
}

bool AdmissibleStream::pair_qualifies() {
    const int n = ambient_.n;

    // Rank criterion for N over the ground -([n] \ P).
    for (int i = 1; i <= static_cast<int>(neg_.size()); ++i) {
        const int a = -neg_[i - 1];
        int below = n - a;
        for (int q : pos_)
            if (q > a)
                --below;
        if (below < 2 * i)
            return false;
    }

    auto type_a_ok = [&]() {
        for (int i = 1; i <= static_cast<int>(pos_.size()); ++i)
            if (pos_[i - 1] <= 2 * i)
                return false;
        return true;
    };

    if (ambient_.kind == GroupKind::A)
        return type_a_ok();

    switch (family_) {
    case Family::All:
        if (ambient_.kind == GroupKind::D && n % 2 == 1) {
            std::vector<int> vals(neg_);
            vals.insert(vals.end(), pos_.begin(), pos_.end());
            return !in_B_not_D(SignedSet(std::move(vals)), n);
        }
        return true;
    case Family::BNotD: {
        std::vector<int> vals(neg_);
        vals.insert(vals.end(), pos_.begin(), pos_.end());
        return in_B_not_D(SignedSet(std::move(vals)), n);
    }
    case Family::Plus:
        return true;
    case Family::PlusNotA:
        return !type_a_ok();
    }
    return false;
}

std::optional<SignedSet> AdmissibleStream::next() {
    while (!done_) {
        if (!advance_pair()) {
            done_ = true;
            break;
        }
        if (pair_qualifies()) {
            std::vector<int> vals(neg_);
            vals.insert(vals.end(), pos_.begin(), pos_.end());
            return SignedSet(std::move(vals));
        }
    }
    return std::nullopt;
}

std::vector<SignedSet> enumerate_all(AmbientSpec ambient, Family family) {
    std::vector<SignedSet> out;
    AdmissibleStream stream(ambient, family);
    while (auto s = stream.next())
        out.push_back(std::move(*s));
    return out;
}

void enumerate_for_each(AmbientSpec ambient, Family family,
                        const std::function<bool(const SignedSet&)>& fn) {
    AdmissibleStream stream(ambient, family);
    while (auto s = stream.next())
        if (!fn(*s))
            return;
}

} // namespace pinlab
