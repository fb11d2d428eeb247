#include "hicm/habituation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hicm {

HabituationParams::HabituationParams(double alpha_, double tau_, double stimulus_,
                                     double baseline_, RestartMode mode)
    : alpha(alpha_), tau(tau_), stimulus(stimulus_), baseline(baseline_), restart_mode(mode) {
  if (alpha <= 0.0) throw std::invalid_argument("HabituationParams: alpha must be > 0");
  if (tau <= 0.0) throw std::invalid_argument("HabituationParams: tau must be > 0");
  if (stimulus <= 0.0) throw std::invalid_argument("HabituationParams: stimulus must be > 0");
  if (stimulus / alpha > baseline)
    throw std::invalid_argument("HabituationParams: stimulus/alpha exceeds baseline");
}

double HabituationParams::floor() const {
  return std::max(0.0, baseline - stimulus / alpha);
}

namespace {

double drop_curve(double n, const HabituationParams& p) {
  return p.baseline - (p.stimulus / p.alpha) * (1.0 - std::exp(-p.alpha * n / p.tau));
}

}  // namespace

HabituationState habituate_step(const HabituationState& state, const HabituationParams& params) {
  double n;
  switch (state.phase) {
    case Phase::Neutral:
      n = 1.0;
      break;
    case Phase::Increasing:
      n = state.count + 1.0;
      break;
    case Phase::Recovering:
      if (params.restart_mode == RestartMode::Literal) {
        n = 1.0;
      } else {
        auto anchor = pseudo_count(state.factor, params);
        if (!anchor) {
          // saturated: hold at the asymptote
          HabituationState out = state;
          out.phase = Phase::Increasing;
          out.count = state.count + 1.0;
          out.factor = params.floor();
          return out;
        }
        n = *anchor + 1.0;
      }
      break;
  }
  HabituationState out;
  out.phase = Phase::Increasing;
  out.count = n;
  out.factor = std::clamp(drop_curve(n, params), params.floor(), params.baseline);
  out.recovery_floor = out.factor;
  return out;
}

HabituationState recover_step(const HabituationState& state, const HabituationParams& params) {
  if (state.factor >= params.baseline)
    return HabituationState{params.baseline, Phase::Neutral, 0.0, params.baseline};
  double y1, n;
  if (state.phase == Phase::Recovering) {
    y1 = state.recovery_floor;
    n = state.count + 1.0;
  } else {
    y1 = state.factor;
    n = 1.0;
  }
  HabituationState out;
  out.phase = Phase::Recovering;
  out.count = n;
  out.recovery_floor = y1;
  out.factor =
      std::clamp(params.baseline - (params.baseline - y1) * std::exp(-params.alpha * n / params.tau),
                 y1, params.baseline);
  return out;
}

std::optional<double> pseudo_count(double factor, const HabituationParams& params) {
  double arg = 1.0 - params.alpha * (params.baseline - factor) / params.stimulus;
  if (arg <= 0.0) return std::nullopt;
  return -(params.tau / params.alpha) * std::log(arg);
}

}  // namespace hicm
