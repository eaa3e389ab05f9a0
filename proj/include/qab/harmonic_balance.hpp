#pragma once

// Frequency-domain fundamental model: impedance/admittance matrices, port
// phasors, powers, and instantaneous fundamental currents.
//
// Phasor convention (fixed artifact-wide): sine reference with amplitude
// scaling, i.e. a phasor P represents |P| sin(w t + arg P), so average
// power is (1/2) Re(V I*). Bridge voltage fundamentals are
// v_hat[i] = (4 V_i / pi) e^{-j delta_i pi}.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "qab/circuit.hpp"
#include "qab/config.hpp"

namespace qab {

using Complex = std::complex<double>;
using Matrix7cd = Eigen::Matrix<Complex, 7, 7>;
using Matrix4cd = Eigen::Matrix<Complex, 4, 4>;

/// Z = j w_s A_L + A_R.
inline Matrix7cd impedance_matrix(const CircuitMatrices& mats, double f_sw) {
    const double w = 2.0 * std::numbers::pi * f_sw;
    return Complex(0.0, w) * mats.a_l + mats.a_r.cast<Complex>();
}

/// Y_f = Z^-1.
inline Matrix7cd admittance_matrix(const Matrix7cd& z) {
    return z.inverse();
}

/// 4x4 port admittance: rows {1,3,4,6} of Y_f (the port-current states
/// I11, I22, I31, I42) restricted to columns 1..4 (the bridge voltages).
struct PortAdmittance {
    Matrix4cd y;
};

inline PortAdmittance port_admittance(const Matrix7cd& y_f) {
    static constexpr int kPortRow[4] = {0, 2, 3, 5};
    PortAdmittance pa;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) pa.y(i, j) = y_f(kPortRow[i], j);
    return pa;
}

/// v_hat[i] = (4 V_i / pi) e^{-j delta_i pi}.
inline std::array<Complex, 4> port_voltage_phasors(const QabConfig& cfg) {
    std::array<Complex, 4> v;
    for (int i = 0; i < 4; ++i) {
        const double amp = 4.0 * cfg.v_dc[i] / std::numbers::pi;
        v[i] = std::polar(amp, -cfg.delta[i] * std::numbers::pi);
    }
    return v;
}

/// Complex fundamental amplitudes of the four port voltages and currents
/// plus the full 7-dimensional branch-current phasor set.
struct PortPhasors {
    std::array<Complex, 4> v_hat; // volts
    std::array<Complex, 4> i_hat; // amperes, i_hat = y * v_hat
    std::array<Complex, 7> x_hat; // amperes, x_hat = Y_f * [v_hat 0 0 0]
};

inline PortPhasors port_current_phasors(const PortAdmittance& y,
                                        const std::array<Complex, 4>& v_hat,
                                        const Matrix7cd& y_f) {
    PortPhasors ph;
    ph.v_hat = v_hat;
    Eigen::Matrix<Complex, 7, 1> u = Eigen::Matrix<Complex, 7, 1>::Zero();
    for (int j = 0; j < 4; ++j) u(j) = v_hat[j];
    const Eigen::Matrix<Complex, 7, 1> x = y_f * u;
    for (int k = 0; k < 7; ++k) ph.x_hat[k] = x(k);
    Eigen::Matrix<Complex, 4, 1> v;
    for (int j = 0; j < 4; ++j) v(j) = v_hat[j];
    const Eigen::Matrix<Complex, 4, 1> i = y.y * v;
    for (int j = 0; j < 4; ++j) ph.i_hat[j] = i(j);
    return ph;
}

/// Phasors of the eight winding currents [I11 I12 I21 I22 I31 I32 I41 I42]
/// reconstructed from the state phasors via the link KCL
/// (I12 = I21 + I5, I41 = I32 + I5).
inline std::array<Complex, 8> winding_current_phasors(const PortPhasors& ph) {
    const auto& x = ph.x_hat;
    return {x[0], x[1] + x[6], x[1], x[2], x[3], x[4], x[4] + x[6], x[5]};
}

/// Per-port active/reactive powers, source-to-source transfer power,
/// copper loss, and fundamental current amplitudes. Active powers are
/// injection-positive (power from bridge into the AC network), so loads
/// carry negative p and p1+p2+p3+p4 equals the copper loss.
struct PowerReport {
    std::array<double, 4> p{};      // watts
    std::array<double, 4> q{};      // vars
    std::array<double, 4> i_peak{}; // amperes
    double p13 = 0.0;               // watts
    double p_copper = 0.0;          // watts
};

/// Transfer power between the two source ports:
/// p13 = (8 V1 V3 / pi^2) [G13 cos(phi3 - phi1) + B13 sin(phi3 - phi1)].
inline double source_transfer_power(const QabConfig& cfg, const PortAdmittance& y) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double dphi = (cfg.delta[2] - cfg.delta[0]) * std::numbers::pi;
    const Complex y13 = y.y(0, 2);
    return 8.0 * cfg.v_dc[0] * cfg.v_dc[2] / pi2 *
           (y13.real() * std::cos(dphi) + y13.imag() * std::sin(dphi));
}

inline PowerReport port_powers(const QabConfig& cfg, const PortAdmittance& y,
                               const PortPhasors& ph) {
    PowerReport rep;
    for (int i = 0; i < 4; ++i) {
        const Complex s = 0.5 * ph.v_hat[i] * std::conj(ph.i_hat[i]);
        rep.p[i] = s.real();
        rep.q[i] = s.imag();
        rep.i_peak[i] = std::abs(ph.i_hat[i]);
    }
    const auto iw = winding_current_phasors(ph);
    const double rw[8] = {cfg.r_wind[0][0], cfg.r_wind[0][1], cfg.r_wind[1][0],
                          cfg.r_wind[1][1], cfg.r_wind[2][0], cfg.r_wind[2][1],
                          cfg.r_wind[3][0], cfg.r_wind[3][1]};
    double copper = 0.0;
    for (int w = 0; w < 8; ++w) copper += 0.5 * rw[w] * std::norm(iw[w]);
    rep.p_copper = copper;
    rep.p13 = source_transfer_power(cfg, y);
    return rep;
}

/// Instantaneous fundamental current of port i:
/// I_i(t) = (4/pi) sum_j Y_ij V_j sin(w t + phi_yij - phi_vj).
inline double instantaneous_port_current(const QabConfig& cfg, const PortAdmittance& y,
                                         int port, double t) {
    const double w = cfg.omega();
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        const Complex yij = y.y(port - 1, j);
        sum += std::abs(yij) * cfg.v_dc[j] *
               std::sin(w * t + std::arg(yij) - cfg.delta[j] * std::numbers::pi);
    }
    return 4.0 / std::numbers::pi * sum;
}

/// One full frequency-domain evaluation of a configuration.
struct HbSolution {
    CircuitMatrices mats;
    Matrix7cd y_f;
    PortAdmittance y;
    PortPhasors phasors;
    PowerReport report;
};

inline HbSolution analyze(const QabConfig& cfg) {
    HbSolution sol;
    sol.mats = assemble_matrices(cfg);
    sol.y_f = admittance_matrix(impedance_matrix(sol.mats, cfg.f_sw));
    sol.y = port_admittance(sol.y_f);
    sol.phasors = port_current_phasors(sol.y, port_voltage_phasors(cfg), sol.y_f);
    sol.report = port_powers(cfg, sol.y, sol.phasors);
    return sol;
}

} // namespace qab
