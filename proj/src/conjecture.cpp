#include "pinlab/conjecture.hpp"

#include <stdexcept>

#include "pinlab/enumeration.hpp"

namespace pinlab {

const std::vector<BigCount>& Triangle::row(int n) {
    if (n < 0)
        throw std::domain_error("triangle: negative row");
    while (static_cast<int>(rows_.size()) <= n) {
        const int m = static_cast<int>(rows_.size());
        std::vector<BigCount> row(m + 1);
        row[0] = 1;
        row[m] = 1;
        for (int k = 1; k < m; ++k)
            row[k] = 2 * rows_[m - 1][k - 1] + rows_[m - 1][k];
        rows_.push_back(std::move(row));
    }
    return rows_[n];
}

BigCount Triangle::at(int n, int k) {
    if (k < 0 || k > n)
        throw std::domain_error("triangle: k = " + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + "]");
    return row(n)[k];
}

BigCount triangle_T(int n, int k) {
    Triangle t;
    return t.at(n, k);
}

VerificationReport check_conjecture(int n_max) {
    if (n_max < 2)
        throw std::domain_error("check_conjecture: n_max must be >= 2");
    VerificationReport report;
    Triangle t;
    for (int n = 2; n <= n_max; ++n) {
        report.add("n=" + std::to_string(n), count_B(n).str(),
                   t.at(n, (n - 1) / 2).str());
    }
    return report;
}

} // namespace pinlab
