#include "pinlab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace pinlab {

namespace {

// A pinnacle set fits one machine word: bit v-1 for a positive value v,
// bit 32+|v|-1 for a negative one. Plenty for any rank an exhaustive sweep
// can reach.
constexpr int MAX_ORACLE_N = 20;

std::uint64_t encode_value(int v) {
    return v > 0 ? (std::uint64_t{1} << (v - 1))
                 : (std::uint64_t{1} << (32 + (-v) - 1));
}

SignedSet decode_key(std::uint64_t key) {
    std::vector<int> vals;
    for (int b = 0; b < 32; ++b)
        if (key & (std::uint64_t{1} << b))
            vals.push_back(b + 1);
    for (int b = 32; b < 64; ++b)
        if (key & (std::uint64_t{1} << b))
            vals.push_back(-(b - 32 + 1));
    return SignedSet(std::move(vals));
}

using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

// Sweeps all group elements whose first letter has absolute value
// `first_abs`, accumulating pinnacle-set multiplicities.
void sweep_block(int n, int first_abs, GroupKind kind, CountMap& acc) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int v = 1; v <= n; ++v)
        if (v != first_abs)
            rest.push_back(v);

    std::vector<int> word(n);
    word[0] = first_abs;
    int signed_vals[MAX_ORACLE_N];

    do {
        std::copy(rest.begin(), rest.end(), word.begin() + 1);

        if (kind == GroupKind::A) {
            std::uint64_t key = 0;
            for (int i = 1; i + 1 < n; ++i)
                if (word[i - 1] < word[i] && word[i] > word[i + 1])
                    key |= encode_value(word[i]);
            ++acc[key];
            continue;
        }

        const std::uint32_t mask_end = std::uint32_t{1} << n;
        for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
            if (kind == GroupKind::D && (std::popcount(mask) & 1))
                continue;
            for (int i = 0; i < n; ++i)
                signed_vals[i] = (mask >> i) & 1 ? -word[i] : word[i];
            std::uint64_t key = 0;
            for (int i = 1; i + 1 < n; ++i)
                if (signed_vals[i - 1] < signed_vals[i] &&
                    signed_vals[i] > signed_vals[i + 1])
                    key |= encode_value(signed_vals[i]);
            ++acc[key];
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
}

BigCount group_size(AmbientSpec ambient) {
    switch (ambient.kind) {
    case GroupKind::A: return factorial(ambient.n);
    case GroupKind::B: return factorial(ambient.n) * pow2(ambient.n);
    case GroupKind::D: return factorial(ambient.n) * pow2(ambient.n - 1);
    }
    return 0;
}

void check_cap(AmbientSpec ambient, const OracleConfig& config) {
    const int cap = ambient.kind == GroupKind::A ? config.max_n_unsigned
                                                 : config.max_n_signed;
    if (ambient.n > MAX_ORACLE_N)
        throw std::domain_error("oracle: n = " + std::to_string(ambient.n) +
                                " exceeds the hard limit " +
                                std::to_string(MAX_ORACLE_N));
    if (ambient.n > cap)
        throw std::domain_error(
            "oracle: n = " + std::to_string(ambient.n) + " exceeds the cap " +
            std::to_string(cap) + " for type " + to_string(ambient.kind) +
            " (would enumerate " + group_size(ambient).str() + " elements)");
}

} // namespace

OracleResult brute_aps(AmbientSpec ambient, const OracleConfig& config) {
    if (ambient.n < 1)
        throw std::domain_error("oracle: n must be >= 1");
    check_cap(ambient, config);

    const int n = ambient.n;
    int nthreads = config.threads > 0
                       ? config.threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::clamp(nthreads, 1, n);

    std::vector<CountMap> partial(nthreads);
    std::atomic<int> next_block{0};

    auto worker = [&](int t) {
        int b;
        while ((b = next_block.fetch_add(1)) < n)
            sweep_block(n, b + 1, ambient.kind, partial[t]);
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    CountMap merged;
    for (auto& m : partial)
        for (const auto& [key, cnt] : m)
            merged[key] += cnt;

    OracleResult result;
    result.ambient = ambient;
    result.total_perms = group_size(ambient);
    for (const auto& [key, cnt] : merged)
        result.families.emplace(decode_key(key), cnt);
    return result;
}

BigCount brute_count_witnesses(const SignedSet& s, AmbientSpec ambient,
                               const OracleConfig& config) {
    const OracleResult result = brute_aps(ambient, config);
    auto it = result.families.find(s);
    return it == result.families.end() ? BigCount(0) : BigCount(it->second);
}

std::set<std::vector<Rational>> brute_aps_generic(const OrderedGround& x,
                                                  const OracleConfig& config) {
    if (x.size() > config.max_ground)
        throw std::domain_error("oracle: ground set of size " +
                                std::to_string(x.size()) + " exceeds the cap " +
                                std::to_string(config.max_ground) + " (" +
                                factorial(x.size()).str() + " orderings)");
    const int m = x.size();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i)
        idx[i] = i;

    std::set<std::vector<Rational>> out;
    if (m == 0) {
        out.insert({});
        return out;
    }
    do {
        std::vector<Rational> pins;
        for (int i = 1; i + 1 < m; ++i) {
            const Rational& a = x.values()[idx[i - 1]];
            const Rational& b = x.values()[idx[i]];
            const Rational& c = x.values()[idx[i + 1]];
            if (a < b && c < b)
                pins.push_back(b);
        }
        std::sort(pins.begin(), pins.end());
        out.insert(std::move(pins));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::string OracleResult::dump() const {
    std::string out;
    for (const auto& [set, cnt] : families) {
        out += set.to_string();
        out += '\t';
        out += std::to_string(cnt);
        out += '\n';
    }
    return out;
}

} // namespace pinlab
