#ifndef PINLAB_REPORT_HPP
#define PINLAB_REPORT_HPP

#include <string>
#include <vector>

namespace pinlab {

/// Structured outcome of a cross-check run: one row per comparison, with
/// both sides rendered so a mismatch is reported rather than suppressed.
struct VerificationReport {
    struct Row {
        std::string label;
        std::string lhs;
        std::string rhs;
        bool ok = false;
    };

    std::vector<Row> rows;

    bool all_ok() const;
    void add(std::string label, std::string lhs, std::string rhs);

    /// "label: lhs == rhs -> ok|MISMATCH" lines plus a verdict line.
    std::string render_text() const;

    /// "label,lhs,rhs,ok" lines with a header.
    std::string render_csv() const;
};

} // namespace pinlab

#endif
