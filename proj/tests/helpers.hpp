#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "gz/gz.hpp"

namespace gztest {

inline double entry_distance(const gz::HermitianMatrix& a, const gz::HermitianMatrix& b) {
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline double entry_distance(const gz::SkewSymmetricMatrix& a, const gz::SkewSymmetricMatrix& b) {
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline double spectrum_distance(const gz::Spectrum& a, const gz::Spectrum& b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double pattern_distance(const gz::GZPattern& p, const gz::GZPattern& q) {
    REQUIRE(p.rows.size() == q.rows.size());
    double d = 0.0;
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        REQUIRE(p.rows[r].size() == q.rows[r].size());
        for (std::size_t i = 0; i < p.rows[r].size(); ++i) d = std::max(d, std::abs(p.rows[r][i] - q.rows[r][i]));
    }
    return d;
}

inline gz::HermitianMatrix hermitian_from_rows(const std::vector<std::vector<gz::cd>>& rows) {
    const int n = static_cast<int>(rows.size());
    gz::CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return gz::HermitianMatrix(std::move(m));
}

inline gz::SkewSymmetricMatrix skew_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    gz::RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return gz::SkewSymmetricMatrix(std::move(m));
}

} // namespace gztest
