#include "pinlab/report.hpp"

#include <algorithm>

namespace pinlab {

bool VerificationReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const Row& r) { return r.ok; });
}

void VerificationReport::add(std::string label, std::string lhs, std::string rhs) {
    const bool ok = lhs == rhs;
    rows.push_back({std::move(label), std::move(lhs), std::move(rhs), ok});
}

std::string VerificationReport::render_text() const {
    std::string out;
    for (const Row& r : rows) {
        out += r.label;
        out += ": ";
        out += r.lhs;
        out += r.ok ? " == " : " != ";
        out += r.rhs;
        out += r.ok ? "  ok" : "  MISMATCH";
        out += '\n';
    }
    out += all_ok() ? "verdict: all checks passed\n" : "verdict: MISMATCH\n";
    return out;
}

std::string VerificationReport::render_csv() const {
    std::string out = "label,lhs,rhs,ok\n";
    for (const Row& r : rows) {
        out += r.label;
        out += ',';
        out += r.lhs;
        out += ',';
        out += r.rhs;
        out += ',';
        out += r.ok ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace pinlab
