#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gz/field.hpp"
#include "gz/matrix.hpp"

namespace gz {

/// Record of a Hamiltonian (Lax-form) flow: states, times, the conserved
/// Hamiltonian values and the largest spectral deviation along the trace.
template <class M>
struct FlowTrace {
    std::vector<double> times;
    std::vector<M> states;
    std::vector<double> f_values;
    std::string hamiltonian_label;
    double spectrum_drift = 0.0;
};

namespace detail {

inline Spectrum flow_spectrum(const HermitianMatrix& a) { return spectrum_desc(a); }
inline Spectrum flow_spectrum(const SkewSymmetricMatrix& a) { return skew_spectrum(a); }

inline void repair(HermitianMatrix& a) { a.symmetrize(); }
inline void repair(SkewSymmetricMatrix& a) { a.skew_symmetrize(); }

} // namespace detail

/// Fixed-step RK4 integration of the Lax equation dA/dt = i[grad f(A), A]
/// (commutator without the i on so(n)*). The final step is shortened to land
/// exactly on t_end. The commutator form is isospectral, so spectrum_drift
/// measures pure integration error: O(dt^4) per unit time, far below the
/// 1e-7 * (1 + |A0|) budget at the default dt. Degeneracy errors from
/// eigenvalue gradients are re-thrown with the failure time attached.
template <class M>
FlowTrace<M> lax_flow(const ScalarField<M>& f, const M& a0, double t_end, double dt,
                      double fd_step = kDefaultFdStep) {
    if (dt <= 0.0) throw ArgumentError("lax_flow: dt must be positive");
    if (t_end < 0.0) throw ArgumentError("lax_flow: t_end must be nonnegative");

    const auto rhs = [&](const M& a) { return Ambient<M>::ham_dir(gradient(f, a, fd_step), a); };

    FlowTrace<M> trace;
    trace.hamiltonian_label = f.label;
    const Spectrum s0 = detail::flow_spectrum(a0);

    M a = a0;
    double t = 0.0;
    trace.times.push_back(t);
    trace.states.push_back(a);
    trace.f_values.push_back(f.eval(a));

    while (t < t_end) {
        const double h = std::min(dt, t_end - t);
        try {
            const M k1 = rhs(a);
            const M k2 = rhs(detail::axpy(a, h / 2.0, k1));
            const M k3 = rhs(detail::axpy(a, h / 2.0, k2));
            const M k4 = rhs(detail::axpy(a, h, k3));
            auto acc = k1.mat();
            acc += k4.mat();
            auto mid = k2.mat();
            mid += k3.mat();
            mid *= 2.0;
            acc += mid;
            acc *= h / 6.0;
            acc += a.mat();
            a = M(std::move(acc));
            detail::repair(a);
        } catch (const DegeneracyError& e) {
            throw DegeneracyError("lax_flow of '" + f.label + "' hit a degeneracy at t=" + std::to_string(t) + ": " +
                                      e.what(),
                                  e.gap);
        }
        t += h;
        trace.times.push_back(t);
        trace.states.push_back(a);
        trace.f_values.push_back(f.eval(a));

        const Spectrum st = detail::flow_spectrum(a);
        double dev = 0.0;
        for (int i = 0; i < s0.size(); ++i) dev = std::max(dev, std::abs(st[i] - s0[i]));
        trace.spectrum_drift = std::max(trace.spectrum_drift, dev);
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Serialization. CSV columns: t, flattened entries (re/im pairs for
// hermitian, plain entries for skew), f. JSON mirrors the struct.
// ---------------------------------------------------------------------------

namespace detail {

inline void csv_header(std::ostream& os, const HermitianMatrix& a) {
    os << "t";
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) os << ",re_" << i << "_" << j << ",im_" << i << "_" << j;
    os << ",f\n";
}

inline void csv_header(std::ostream& os, const SkewSymmetricMatrix& a) {
    os << "t";
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) os << ",a_" << i << "_" << j;
    os << ",f\n";
}

inline void csv_row_entries(std::ostream& os, const HermitianMatrix& a) {
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) os << "," << a(i, j).real() << "," << a(i, j).imag();
}

inline void csv_row_entries(std::ostream& os, const SkewSymmetricMatrix& a) {
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) os << "," << a(i, j);
}

} // namespace detail

template <class M>
void write_csv(std::ostream& os, const FlowTrace<M>& trace) {
    if (trace.states.empty()) return;
    os.precision(17);
    detail::csv_header(os, trace.states.front());
    for (std::size_t r = 0; r < trace.states.size(); ++r) {
        os << trace.times[r];
        detail::csv_row_entries(os, trace.states[r]);
        os << "," << trace.f_values[r] << "\n";
    }
}

template <class M>
nlohmann::json to_json(const FlowTrace<M>& trace) {
    nlohmann::json states = nlohmann::json::array();
    for (const M& s : trace.states) states.push_back(to_json(s));
    return nlohmann::json{{"hamiltonian", trace.hamiltonian_label},
                          {"times", trace.times},
                          {"states", states},
                          {"f_values", trace.f_values},
                          {"spectrum_drift", trace.spectrum_drift}};
}

} // namespace gz
