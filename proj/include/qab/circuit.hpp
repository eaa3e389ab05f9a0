#pragma once

// Assembly of the 7x7 state-space matrices of the QAB equivalent circuit.
//
// State ordering: x = [I11, I21, I22, I31, I32, I42, I5].
// Each transformer is a referred two-winding T-model (series winding
// impedances around a shunt magnetizing inductance). The link-side windings
// of transformers 1 and 2 meet at one AC-link node, those of transformers
// 3 and 4 at another, and I5 is the current in the tie between the two
// nodes, so I12 = I21 + I5 and I41 = I32 + I5 by KCL. Every port current
// (I11, I22, I31, I42) is referenced flowing out of its bridge into the
// network; with that convention mean(v_i * i_i) > 0 means the port injects
// power.
//
// Row order: bridge KVLs for ports 1-4, the two magnetizing loops
// (T1-link-T2 and T3-link-T4), and the link loop equating the node voltage
// computed through the T2 branch with the one computed through the T4
// branch.

#include <Eigen/Dense>

#include "qab/config.hpp"
#include "qab/errors.hpp"

namespace qab {

using Matrix7d = Eigen::Matrix<double, 7, 7>;
using Vector7d = Eigen::Matrix<double, 7, 1>;

/// Inductance / resistance matrices of the state equation
/// a_l * dx/dt + a_r * x = u, plus the derived a = -a_l^-1 a_r and
/// b = a_l^-1 of dx/dt = a x + b u.
struct CircuitMatrices {
    Matrix7d a_l; // henries
    Matrix7d a_r; // ohms
    Matrix7d a;   // 1/seconds
    Matrix7d b;   // 1/henries
};

inline CircuitMatrices assemble_matrices(const QabConfig& cfg) {
    const double l11 = cfg.l_leak[0][0], l12 = cfg.l_leak[0][1];
    const double l21 = cfg.l_leak[1][0], l22 = cfg.l_leak[1][1];
    const double l31 = cfg.l_leak[2][0], l32 = cfg.l_leak[2][1];
    const double l41 = cfg.l_leak[3][0], l42 = cfg.l_leak[3][1];
    const double r11 = cfg.r_wind[0][0], r12 = cfg.r_wind[0][1];
    const double r21 = cfg.r_wind[1][0], r22 = cfg.r_wind[1][1];
    const double r31 = cfg.r_wind[2][0], r32 = cfg.r_wind[2][1];
    const double r41 = cfg.r_wind[3][0], r42 = cfg.r_wind[3][1];
    const double lm1 = cfg.l_mag[0], lm2 = cfg.l_mag[1];
    const double lm3 = cfg.l_mag[2], lm4 = cfg.l_mag[3];

    CircuitMatrices m;
    m.a_l.setZero();
    m.a_r.setZero();

    // Bridge 1: v1 = (r11 + s l11) I11 + s lm1 (I11 - I21 - I5)
    m.a_l(0, 0) = l11 + lm1;
    m.a_l(0, 1) = -lm1;
    m.a_l(0, 6) = -lm1;
    m.a_r(0, 0) = r11;

    // Bridge 2: v2 = (r22 + s l22) I22 + s lm2 (I21 + I22)
    m.a_l(1, 1) = lm2;
    m.a_l(1, 2) = lm2 + l22;
    m.a_r(1, 2) = r22;

    // Bridge 3: v3 = (r31 + s l31) I31 + s lm3 (I31 - I32)
    m.a_l(2, 3) = l31 + lm3;
    m.a_l(2, 4) = -lm3;
    m.a_r(2, 3) = r31;

    // Bridge 4: v4 = (r42 + s l42) I42 + s lm4 (I32 + I5 + I42)
    m.a_l(3, 4) = lm4;
    m.a_l(3, 5) = lm4 + l42;
    m.a_l(3, 6) = lm4;
    m.a_r(3, 5) = r42;

    // Loop T1 magnetizing -> winding 12 -> link -> winding 21 -> T2 magnetizing
    m.a_l(4, 0) = lm1;
    m.a_l(4, 1) = -(l12 + lm1 + lm2 + l21);
    m.a_l(4, 2) = -lm2;
    m.a_l(4, 6) = -(lm1 + l12);
    m.a_r(4, 1) = -(r12 + r21);
    m.a_r(4, 6) = -r12;

    // Loop T3 magnetizing -> winding 32 -> link -> winding 41 -> T4 magnetizing
    m.a_l(5, 3) = lm3;
    m.a_l(5, 4) = -(lm3 + lm4 + l32 + l41);
    m.a_l(5, 5) = -lm4;
    m.a_l(5, 6) = -(lm4 + l41);
    m.a_r(5, 4) = -(r32 + r41);
    m.a_r(5, 6) = -r41;

    // Link loop: node voltage via the T2 branch equals the one via the
    // T4 branch (with I41 = I32 + I5 eliminated).
    m.a_l(6, 1) = -(lm2 + l21);
    m.a_l(6, 2) = -lm2;
    m.a_l(6, 4) = lm4 + l41;
    m.a_l(6, 5) = lm4;
    m.a_l(6, 6) = lm4 + l41;
    m.a_r(6, 1) = -r21;
    m.a_r(6, 4) = r41;
    m.a_r(6, 6) = r41;

    Eigen::JacobiSVD<Matrix7d> svd(m.a_l);
    const double smin = svd.singularValues()(6);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > 1e12)
        throw SingularInductanceMatrix("a_l condition number exceeds 1e12");

    m.b = m.a_l.inverse();
    m.a = -m.b * m.a_r;
    return m;
}

} // namespace qab
