#pragma once

// Single-phase-shift square-wave bridge voltages and the switching-event
// timeline. Waveforms are right-continuous: a transition instant belongs
// to the new polarity.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "qab/circuit.hpp"
#include "qab/config.hpp"

namespace qab {

namespace detail {
/// Wraps t into [0, period).
inline double wrap_time(double t, double period) {
    double r = std::fmod(t, period);
    if (r < 0.0) r += period;
    return r;
}
} // namespace detail

/// Square-wave output voltage of bridge `port` (1..4) at time t:
/// +V for ((t - delta*T/2) mod T) in [0, T/2), else -V. The fundamental is
/// (4V/pi) sin(w t - delta*pi).
inline double bridge_voltage(const QabConfig& cfg, int port, double t) {
    const int i = port - 1;
    const double T = cfg.period();
    const double phase = detail::wrap_time(t - cfg.delta[i] * cfg.half_period(), T);
    return phase < cfg.half_period() ? cfg.v_dc[i] : -cfg.v_dc[i];
}

/// u(t) = [v1 v2 v3 v4 0 0 0]^T.
inline Vector7d input_vector(const QabConfig& cfg, double t) {
    Vector7d u = Vector7d::Zero();
    for (int port = 1; port <= 4; ++port) u(port - 1) = bridge_voltage(cfg, port, t);
    return u;
}

struct SwitchingEvent {
    double time = 0.0;                              // within [0, T)
    std::vector<std::pair<int, int>> transitions;   // (port, polarity after)
};

struct SwitchingTimeline {
    std::vector<SwitchingEvent> events; // sorted by time, coincident merged
};

/// Events at t = (delta_i*T/2 mod T) and (delta_i*T/2 + T/2 mod T) for each
/// port. Coincident times are merged into one event carrying every port
/// transition that fires there.
inline SwitchingTimeline switching_events(const QabConfig& cfg) {
    const double T = cfg.period();
    const double Th = cfg.half_period();
    std::vector<std::pair<double, std::pair<int, int>>> raw;
    for (int port = 1; port <= 4; ++port) {
        const double base = cfg.delta[port - 1] * Th;
        raw.push_back({detail::wrap_time(base, T), {port, +1}});
        raw.push_back({detail::wrap_time(base + Th, T), {port, -1}});
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    SwitchingTimeline timeline;
    const double coincidence = 1e-15 * T;
    for (const auto& [t, tr] : raw) {
        if (!timeline.events.empty() &&
            t - timeline.events.back().time <= coincidence) {
            timeline.events.back().transitions.push_back(tr);
        } else {
            timeline.events.push_back({t, {tr}});
        }
    }
    return timeline;
}

} // namespace qab
