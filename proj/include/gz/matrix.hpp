#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/errors.hpp"

namespace gz {

using cd = std::complex<double>;

enum class GroupKind { U, SO };

inline std::string to_string(GroupKind g) { return g == GroupKind::U ? "U" : "SO"; }

inline GroupKind group_from_string(const std::string& s) {
    if (s == "U" || s == "u") return GroupKind::U;
    if (s == "SO" || s == "so") return GroupKind::SO;
    throw ArgumentError("unknown group '" + s + "' (expected U or SO)");
}

// ---------------------------------------------------------------------------
// Dense rectangular matrices, complex and real. Row-major, no view types;
// everything at desk scale is a value.
// ---------------------------------------------------------------------------

class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    CMat adjoint() const {
        CMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    double frobenius() const {
        double s = 0.0;
        for (const cd& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    CMat& operator+=(const CMat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    CMat& operator*=(cd s) {
        for (cd& z : a_) z *= s;
        return *this;
    }

    friend CMat operator+(CMat x, const CMat& y) { return x += y; }
    friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
    friend CMat operator*(cd s, CMat x) { return x *= s; }

    friend CMat operator*(const CMat& x, const CMat& y) {
        CMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const cd xik = x(i, k);
                if (xik == cd{}) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

class RMat {
public:
    RMat() = default;
    RMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RMat identity(int n) {
        RMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const double& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RMat transpose() const {
        RMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    double frobenius() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    RMat& operator+=(const RMat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RMat& operator-=(const RMat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    RMat& operator*=(double s) {
        for (double& x : a_) x *= s;
        return *this;
    }

    friend RMat operator+(RMat x, const RMat& y) { return x += y; }
    friend RMat operator-(RMat x, const RMat& y) { return x -= y; }
    friend RMat operator*(double s, RMat x) { return x *= s; }

    friend RMat operator*(const RMat& x, const RMat& y) {
        RMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const double xik = x(i, k);
                if (xik == 0.0) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }
inline RMat commutator(const RMat& x, const RMat& y) { return x * y - y * x; }

inline cd trace(const CMat& m) {
    cd t = 0.0;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}
inline double trace(const RMat& m) {
    double t = 0.0;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// ---------------------------------------------------------------------------
// Domain types. Points of u(n)* are Hermitian matrices, points of so(n)* are
// real skew-symmetric matrices (trace pairing identification). Constructors
// repair roundoff-level symmetry defects; parsers validate against explicit
// tolerances and reject bad input.
// ---------------------------------------------------------------------------

constexpr double kHermiticityTol = 1e-12;

class HermitianMatrix {
public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(int n) : m_(n, n) {}

    /// Wraps a square complex matrix, symmetrizing away roundoff. Intended for
    /// internally produced data; external input goes through from_json.
    explicit HermitianMatrix(CMat m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw ArgumentError("hermitian matrix must be square");
        symmetrize();
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        HermitianMatrix h(static_cast<int>(d.size()));
        for (int i = 0; i < h.size(); ++i) h.m_(i, i) = d[static_cast<std::size_t>(i)];
        return h;
    }

    int size() const { return m_.rows(); }

    cd& operator()(int i, int j) { return m_(i, j); }
    const cd& operator()(int i, int j) const { return m_(i, j); }

    const CMat& mat() const { return m_; }

    double frobenius() const { return m_.frobenius(); }

    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) m = std::max(m, std::abs(m_(i, j)));
        return m;
    }

    void symmetrize() {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            m_(i, i) = cd(m_(i, i).real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                cd v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
                m_(i, j) = v;
                m_(j, i) = std::conj(v);
            }
        }
    }

    /// Largest hermiticity defect |a_ij - conj(a_ji)|, including |Im a_ii|.
    double hermiticity_defect() const {
        double d = 0.0;
        const int n = size();
        for (int i = 0; i < n; ++i) {
            d = std::max(d, std::abs(m_(i, i).imag()));
            for (int j = i + 1; j < n; ++j) d = std::max(d, std::abs(m_(i, j) - std::conj(m_(j, i))));
        }
        return d;
    }

private:
    CMat m_;
};

class SkewSymmetricMatrix {
public:
    SkewSymmetricMatrix() = default;

    explicit SkewSymmetricMatrix(int n) : m_(n, n) {}

    explicit SkewSymmetricMatrix(RMat m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw ArgumentError("skew matrix must be square");
        skew_symmetrize();
    }

    /// Block-diagonal canonical form with 2x2 rotation generators for the given
    /// moduli; for odd n a trailing zero row/column.
    static SkewSymmetricMatrix canonical(const std::vector<double>& moduli, int n) {
        if (static_cast<int>(moduli.size()) != n / 2)
            throw ArgumentError("canonical skew form needs floor(n/2) moduli");
        SkewSymmetricMatrix s(n);
        for (int p = 0; p < n / 2; ++p) {
            s.m_(2 * p, 2 * p + 1) = moduli[static_cast<std::size_t>(p)];
            s.m_(2 * p + 1, 2 * p) = -moduli[static_cast<std::size_t>(p)];
        }
        return s;
    }

    int size() const { return m_.rows(); }

    double& operator()(int i, int j) { return m_(i, j); }
    const double& operator()(int i, int j) const { return m_(i, j); }

    const RMat& mat() const { return m_; }

    double frobenius() const { return m_.frobenius(); }

    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) m = std::max(m, std::abs(m_(i, j)));
        return m;
    }

    void skew_symmetrize() {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            m_(i, i) = 0.0;
            for (int j = i + 1; j < n; ++j) {
                double v = 0.5 * (m_(i, j) - m_(j, i));
                m_(i, j) = v;
                m_(j, i) = -v;
            }
        }
    }

    double skewness_defect() const {
        double d = 0.0;
        const int n = size();
        for (int i = 0; i < n; ++i) {
            d = std::max(d, std::abs(m_(i, i)));
            for (int j = i + 1; j < n; ++j) d = std::max(d, std::abs(m_(i, j) + m_(j, i)));
        }
        return d;
    }

private:
    RMat m_;
};

/// Top-left k x k block. Realizes the moment map of the embedded subgroup at
/// level k under the trace-pairing identification.
inline HermitianMatrix principal_submatrix(const HermitianMatrix& a, int k) {
    if (k < 1 || k > a.size()) throw ArgumentError("principal_submatrix: k out of range");
    CMat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = a(i, j);
    return HermitianMatrix(std::move(m));
}

inline SkewSymmetricMatrix principal_submatrix(const SkewSymmetricMatrix& a, int k) {
    if (k < 1 || k > a.size()) throw ArgumentError("principal_submatrix: k out of range");
    RMat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = a(i, j);
    return SkewSymmetricMatrix(std::move(m));
}

/// Real eigenvalue list, sorted descending on construction.
class Spectrum {
public:
    Spectrum() = default;

    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        std::stable_sort(values_.begin(), values_.end(), [](double x, double y) { return x > y; });
    }

    const std::vector<double>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.values_ == b.values_; }

private:
    std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// JSON wire format:
//   {"kind":"hermitian","n":2,"re":[[...],[...]],"im":[[...],[...]]}
//   {"kind":"skew","n":2,"re":[[...],[...]]}
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const HermitianMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<double>> re(static_cast<std::size_t>(n)), im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        re[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        im[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            re[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).real();
            im[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).imag();
        }
    }
    return nlohmann::json{{"kind", "hermitian"}, {"n", n}, {"re", re}, {"im", im}};
}

inline nlohmann::json to_json(const SkewSymmetricMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<double>> re(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        re[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) re[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    }
    return nlohmann::json{{"kind", "skew"}, {"n", n}, {"re", re}};
}

namespace detail {

inline std::vector<std::vector<double>> parse_grid(const nlohmann::json& j, const char* key, int n) {
    if (!j.contains(key)) throw ValidationError(std::string("matrix JSON missing '") + key + "'");
    auto grid = j.at(key).get<std::vector<std::vector<double>>>();
    if (static_cast<int>(grid.size()) != n) throw ValidationError(std::string("'") + key + "' has wrong row count");
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n) throw ValidationError(std::string("'") + key + "' has a wrong-length row");
    return grid;
}

} // namespace detail

inline HermitianMatrix hermitian_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "hermitian") throw ValidationError("expected kind 'hermitian'");
    const int n = j.value("n", 0);
    if (n < 1) throw ValidationError("matrix size must be positive");
    auto re = detail::parse_grid(j, "re", n);
    auto im = j.contains("im") ? detail::parse_grid(j, "im", n)
                               : std::vector<std::vector<double>>(static_cast<std::size_t>(n),
                                                                  std::vector<double>(static_cast<std::size_t>(n), 0.0));
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            m(i, jj) = cd(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)],
                          im[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
    // Validate before repairing.
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        defect = std::max(defect, std::abs(m(i, i).imag()));
        for (int jj = i + 1; jj < n; ++jj) defect = std::max(defect, std::abs(m(i, jj) - std::conj(m(jj, i))));
    }
    if (defect > kHermiticityTol)
        throw ValidationError("hermiticity violated: defect " + std::to_string(defect));
    return HermitianMatrix(std::move(m));
}

inline SkewSymmetricMatrix skew_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "skew") throw ValidationError("expected kind 'skew'");
    const int n = j.value("n", 0);
    if (n < 1) throw ValidationError("matrix size must be positive");
    auto re = detail::parse_grid(j, "re", n);
    RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) m(i, jj) = re[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 0.0) throw ValidationError("skew matrix diagonal must be exactly zero");
        for (int jj = i + 1; jj < n; ++jj)
            if (std::abs(m(i, jj) + m(jj, i)) > kHermiticityTol)
                throw ValidationError("skew symmetry violated at (" + std::to_string(i) + "," + std::to_string(jj) + ")");
    }
    return SkewSymmetricMatrix(std::move(m));
}

} // namespace gz
