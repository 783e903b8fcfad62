#include "pinlab/verify.hpp"

#include <set>
#include <stdexcept>

#include "pinlab/admissibility.hpp"
#include "pinlab/enumeration.hpp"

namespace pinlab {

std::vector<SignedSet> all_signed_subsets(int n) {
    if (n < 0 || n > 19)
        throw std::domain_error("all_signed_subsets: n out of range");
    std::vector<SignedSet> out;
    std::vector<int> digits(n, 0); // per absolute value: 0 absent, 1 pos, 2 neg
    for (;;) {
        std::vector<int> vals;
        for (int a = 1; a <= n; ++a) {
            if (digits[a - 1] == 1)
                vals.push_back(a);
            else if (digits[a - 1] == 2)
                vals.push_back(-a);
        }
        out.push_back(SignedSet(std::move(vals)));
        int i = 0;
        while (i < n && digits[i] == 2)
            digits[i++] = 0;
        if (i == n)
            break;
        ++digits[i];
    }
    return out;
}

namespace {

// Renders a family as "<size> sets"; a difference against `other` is
// appended so that equal strings mean equal families.
std::string describe(const std::set<SignedSet>& fam,
                     const std::set<SignedSet>& other) {
    std::string out = std::to_string(fam.size()) + " sets";
    for (const SignedSet& s : fam)
        if (!other.count(s)) {
            out += "; extra " + s.to_string();
            break;
        }
    return out;
}

BigCount closed_form(int n, GroupKind kind) {
    switch (kind) {
    case GroupKind::A: return count_A(n);
    case GroupKind::B: return count_B(n);
    case GroupKind::D: return count_D(n);
    }
    return 0;
}

} // namespace

VerificationReport run_triple_agreement(int max_n, const OracleConfig& config) {
    if (max_n < 3)
        throw std::domain_error("run_triple_agreement: max_n must be >= 3");
    VerificationReport report;
    const std::vector<GroupKind> kinds{GroupKind::A, GroupKind::B, GroupKind::D};

    for (int n = 3; n <= max_n; ++n) {
        const std::vector<SignedSet> domain = all_signed_subsets(n);
        for (GroupKind kind : kinds) {
            const AmbientSpec ambient{n, kind};
            const std::string tag =
                "n=" + std::to_string(n) + " type " + to_string(kind);

            const OracleResult oracle = brute_aps(ambient, config);
            std::set<SignedSet> brute_family;
            BigCount witness_sum = 0;
            for (const auto& [s, cnt] : oracle.families) {
                brute_family.insert(s);
                witness_sum += cnt;
            }

            std::set<SignedSet> decided;
            for (const SignedSet& s : domain)
                if (is_admissible(s, ambient))
                    decided.insert(s);

            std::set<SignedSet> streamed;
            long long stream_len = 0;
            bool repeats = false;
            enumerate_for_each(ambient, Family::All, [&](const SignedSet& s) {
                ++stream_len;
                repeats |= !streamed.insert(s).second;
                return true;
            });

            report.add(tag + ": decider vs oracle", describe(decided, brute_family),
                       describe(brute_family, decided));
            report.add(tag + ": stream vs oracle", describe(streamed, brute_family),
                       describe(brute_family, streamed));
            report.add(tag + ": stream repeats", repeats ? "repeat" : "none",
                       "none");
            report.add(tag + ": stream length vs closed form",
                       std::to_string(stream_len), closed_form(n, kind).str());
            report.add(tag + ": witness total vs group order", witness_sum.str(),
                       oracle.total_perms.str());
        }
    }
    return report;
}

} // namespace pinlab
