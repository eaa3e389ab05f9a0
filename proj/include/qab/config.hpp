#pragma once

// Converter description: physical and modulation parameters, validation,
// and the DC conversion-ratio helpers.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qab/errors.hpp"

namespace qab {

/// Default magnetizing inductance, henries, used when a config omits lm1..lm4.
inline constexpr double kDefaultMagnetizing = 1.0e-3;

/// Full parameter set of the quad-active-bridge converter.
///
/// All transformer values are referred to the primary side. Winding index
/// convention: winding 1 of transformers 1 and 3 and winding 2 of
/// transformers 2 and 4 face the bridges; the opposite windings face the
/// shared AC link. Phase-shift ratios delta[i] are fractions of pi.
struct QabConfig {
    std::array<double, 4> v_dc{};                    // V1..V4, volts
    std::array<double, 4> delta{};                   // phase-shift ratios, each in [-1, 1]
    std::array<std::array<double, 2>, 4> l_leak{};   // l_leak[i][w]: Li1, Li2, henries
    std::array<double, 4> l_mag{kDefaultMagnetizing, kDefaultMagnetizing,
                                kDefaultMagnetizing, kDefaultMagnetizing};
    std::array<std::array<double, 2>, 4> r_wind{};   // r_wind[i][w]: Ri1, Ri2, ohms
    std::array<double, 4> turns{1.0, 1.0, 1.0, 1.0}; // n1..n4
    double f_sw = 0.0;                               // switching frequency, hertz

    double omega() const { return 2.0 * std::numbers::pi * f_sw; }
    double period() const { return 1.0 / f_sw; }
    double half_period() const { return 0.5 / f_sw; }
};

enum class ConfigViolation {
    NonPositiveInductance,
    NegativeResistance,
    PhaseShiftOutOfRange,
    NonPositiveFrequency,
    NegativeVoltage,
    NonPositiveTurnsRatio,
};

struct ValidationIssue {
    ConfigViolation code;
    std::string message;
};

/// Checks every invariant of the configuration. Empty result means valid.
inline std::vector<ValidationIssue> validate_config(const QabConfig& cfg) {
    std::vector<ValidationIssue> issues;
    auto fail = [&](ConfigViolation code, std::string msg) {
        issues.push_back({code, std::move(msg)});
    };
    for (int i = 0; i < 4; ++i) {
        for (int w = 0; w < 2; ++w) {
            if (!(cfg.l_leak[i][w] > 0.0))
                fail(ConfigViolation::NonPositiveInductance,
                     "l" + std::to_string(i + 1) + std::to_string(w + 1) + " must be > 0");
            if (cfg.r_wind[i][w] < 0.0)
                fail(ConfigViolation::NegativeResistance,
                     "r" + std::to_string(i + 1) + std::to_string(w + 1) + " must be >= 0");
        }
        if (!(cfg.l_mag[i] > 0.0))
            fail(ConfigViolation::NonPositiveInductance,
                 "lm" + std::to_string(i + 1) + " must be > 0");
        if (std::abs(cfg.delta[i]) > 1.0)
            fail(ConfigViolation::PhaseShiftOutOfRange,
                 "delta" + std::to_string(i + 1) + " must be in [-1, 1]");
        if (cfg.v_dc[i] < 0.0)
            fail(ConfigViolation::NegativeVoltage,
                 "v" + std::to_string(i + 1) + " must be >= 0");
        if (!(cfg.turns[i] > 0.0))
            fail(ConfigViolation::NonPositiveTurnsRatio,
                 "n" + std::to_string(i + 1) + " must be > 0");
    }
    if (!(cfg.f_sw > 0.0))
        fail(ConfigViolation::NonPositiveFrequency, "fs must be > 0");
    return issues;
}

/// Returns the config unchanged if valid, otherwise throws ConfigError
/// listing every violation.
inline QabConfig validated(QabConfig cfg) {
    auto issues = validate_config(cfg);
    if (!issues.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& issue : issues) msg += "\n  " + issue.message;
        throw ConfigError(msg);
    }
    return cfg;
}

/// Refers a raw secondary-side inductance or resistance to the primary
/// side (multiplies by n^2). Never applied implicitly by this library.
inline double refer_to_primary(double secondary_value, double turns_ratio) {
    return secondary_value * turns_ratio * turns_ratio;
}

/// DC voltage conversion ratio of port i relative to the reference port:
/// m_i = (n1 * V_i) / (n_i * V1). With equal turns ratios this is V_i/V1.
inline double conversion_ratio(const QabConfig& cfg, int port) {
    if (cfg.v_dc[0] == 0.0)
        throw DivisionByZero("conversion_ratio: V1 is zero");
    const int i = port - 1;
    return (cfg.turns[0] * cfg.v_dc[i]) / (cfg.turns[i] * cfg.v_dc[0]);
}

} // namespace qab
