#pragma once

#include <optional>

namespace hicm {

/// How a new run of failed-contact steps anchors the response curve when a
/// node was partially recovered: Continuous resumes the drop from the current
/// level, Literal restarts the curve from the baseline.
enum class RestartMode { Continuous, Literal };

/// Parameters of the exponential habituation/recovery curves.
struct HabituationParams {
  double alpha;          // recovery rate, > 0
  double tau;            // time constant, > 0
  double stimulus;       // exposure per contacted step, > 0
  double baseline;       // initial responsiveness y0
  RestartMode restart_mode;

  HabituationParams(double alpha_ = 1.05, double tau_ = 1.0, double stimulus_ = 1.0,
                    double baseline_ = 1.0, RestartMode mode = RestartMode::Continuous);

  /// Lower bound of the responsiveness factor: max(0, y0 - S/alpha).
  double floor() const;
};

enum class Phase { Neutral, Increasing, Recovering };

/// Per-node responsiveness bookkeeping. `factor` multiplies the base
/// propagation probability; `count` is the (possibly fractional) position on
/// the current phase's curve; `recovery_floor` is the level the last drop
/// sequence reached before recovery began.
struct HabituationState {
  double factor = 1.0;
  Phase phase = Phase::Neutral;
  double count = 0.0;
  double recovery_floor = 1.0;
};

/// One failed-contact step: moves the state onto the decreasing curve
///   y(n) = y0 - (S/alpha) * (1 - exp(-alpha*n/tau))
/// at the continuity-preserving count (or n=1 under Literal restart).
/// The factor is clamped to [floor, baseline].
HabituationState habituate_step(const HabituationState& state, const HabituationParams& params);

/// One rest step: moves the state onto the recovering curve
///   y(n) = y0 - (y0 - y1) * exp(-alpha*n/tau)
/// where y1 is the level reached before recovery began. A fully recovered
/// state (factor >= baseline) is returned as Neutral.
HabituationState recover_step(const HabituationState& state, const HabituationParams& params);

/// Inverts the decreasing curve: the real-valued count n* at which it equals
/// `factor`. Returns nullopt when factor is at or below the asymptote
/// (saturated; callers hold the factor there).
std::optional<double> pseudo_count(double factor, const HabituationParams& params);

/// PP_t = PP * H(v, t).
inline double effective_probability(double base_pp, const HabituationState& state) {
  return base_pp * state.factor;
}

}  // namespace hicm
