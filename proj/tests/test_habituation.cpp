#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hicm/habituation.hpp"
#include "hicm/rng.hpp"

using namespace hicm;

namespace {

// Closed-form reference, written out independently of the implementation.
double drop_reference(double n, double alpha, double tau, double s = 1.0, double y0 = 1.0) {
  return y0 - (s / alpha) * (1.0 - std::exp(-alpha * n / tau));
}

const HabituationParams kTau1{1.05, 1.0};
const HabituationParams kTau20{1.05, 20.0};

}  // namespace

TEST_CASE("habituate_step: closed-form table") {
  HabituationState s0;
  HabituationState s1 = habituate_step(s0, kTau1);
  CHECK(s1.phase == Phase::Increasing);
  CHECK(std::abs(s1.factor - 0.38089309439157653) < 1e-9);

  HabituationState s2 = habituate_step(s1, kTau1);
  CHECK(std::abs(s2.factor - 0.16424421738379230) < 1e-9);

  HabituationState slow = habituate_step(HabituationState{}, kTau20);
  CHECK(std::abs(slow.factor - 0.95128982957695360) < 1e-9);

  // asymptote: 1 - 1/1.05
  HabituationState s = s0;
  for (int i = 0; i < 200; ++i) s = habituate_step(s, kTau1);
  CHECK(std::abs(s.factor - 0.047619047619047619) < 1e-9);
}

TEST_CASE("recover_step: closed-form table") {
  HabituationState trough;
  trough = habituate_step(trough, kTau1);  // 0.3808931...
  HabituationState r1 = recover_step(trough, kTau1);
  CHECK(r1.phase == Phase::Recovering);
  CHECK(std::abs(r1.factor - 0.78335112299221577) < 1e-9);
  CHECK(r1.recovery_floor == doctest::Approx(trough.factor));

  // n = 0 boundary: the recovery curve starts at y1
  CHECK(std::abs(drop_reference(0.0, 1.05, 1.0) - 1.0) < 1e-15);

  // full recovery limit
  HabituationState s = trough;
  for (int i = 0; i < 2000; ++i) s = recover_step(s, kTau1);
  CHECK(s.factor == doctest::Approx(1.0).epsilon(1e-9));

  // fully recovered input is a no-op returning Neutral
  HabituationState fresh = recover_step(HabituationState{}, kTau1);
  CHECK(fresh.phase == Phase::Neutral);
  CHECK(fresh.factor == 1.0);
}

TEST_CASE("pseudo_count inverts the drop curve") {
  CHECK(*pseudo_count(1.0, kTau1) == doctest::Approx(0.0));
  CHECK(*pseudo_count(0.38089309439157653, kTau1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(*pseudo_count(0.16424421738379230, kTau1) == doctest::Approx(2.0).epsilon(1e-9));
  // at/below the asymptote: saturated
  CHECK_FALSE(pseudo_count(0.0476190476, kTau1).has_value());
}

TEST_CASE("pseudo_count round-trip within 1e-12") {
  Rng rng(7);
  const double floor = kTau1.floor();
  for (int i = 0; i < 2000; ++i) {
    double f = floor + (1.0 - floor) * (0.001 + 0.999 * rng.next_double());
    auto n = pseudo_count(f, kTau1);
    REQUIRE(n.has_value());
    CHECK(std::abs(drop_reference(*n, 1.05, 1.0) - f) < 1e-12);
  }
}

TEST_CASE("effective_probability") {
  HabituationState fresh;
  CHECK(effective_probability(0.5, fresh) == 0.5);
  HabituationState h = habituate_step(fresh, kTau1);
  CHECK(std::abs(effective_probability(0.5, h) - 0.19044654719578826) < 1e-9);
  CHECK(effective_probability(0.0, h) == 0.0);
}

TEST_CASE("factor stays within [floor, 1] under any schedule") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    double alpha = 0.5 + rng.next_double() * 2.0;
    HabituationParams p(alpha, 0.5 + rng.next_double() * 20.0,
                        alpha * (0.2 + 0.8 * rng.next_double()));
    HabituationState s;
    for (int step = 0; step < 100; ++step) {
      s = (rng.next_u64() & 1) ? habituate_step(s, p)
                               : (s.factor < 1.0 ? recover_step(s, p) : s);
      REQUIRE(s.factor >= p.floor() - 1e-12);
      REQUIRE(s.factor <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("habituate decreases, recover increases") {
  HabituationState s;
  double prev = s.factor;
  for (int i = 0; i < 20; ++i) {
    s = habituate_step(s, kTau20);
    CHECK(s.factor < prev);
    prev = s.factor;
  }
  for (int i = 0; i < 20; ++i) {
    s = recover_step(s, kTau20);
    CHECK(s.factor > prev);
    CHECK(s.factor < 1.0);
    prev = s.factor;
  }
}

TEST_CASE("tau -> infinity leaves the factor at baseline") {
  HabituationParams p(1.05, 1e9);
  HabituationState s;
  for (int i = 0; i < 10; ++i) s = habituate_step(s, p);
  CHECK(std::abs(s.factor - 1.0) < 1e-6);
}

TEST_CASE("drop, rest, drop reproduces partial recovery shape") {
  // two failed contacts, one rest step, two more failed contacts
  HabituationState s;
  s = habituate_step(s, kTau1);
  double after_first_drop = s.factor;
  s = habituate_step(s, kTau1);
  double trough = s.factor;
  s = recover_step(s, kTau1);
  double after_rest = s.factor;
  CHECK(after_rest > trough);
  CHECK(after_rest < 1.0);
  s = habituate_step(s, kTau1);
  CHECK(s.factor < after_rest);
  double second_drop = s.factor;
  s = habituate_step(s, kTau1);
  CHECK(s.factor < second_drop);
  CHECK(after_first_drop > trough);
}

TEST_CASE("literal restart mode drops from the baseline curve") {
  HabituationParams literal(1.05, 1.0, 1.0, 1.0, RestartMode::Literal);
  HabituationState s;
  s = habituate_step(s, literal);
  s = habituate_step(s, literal);
  s = recover_step(s, literal);
  HabituationState next = habituate_step(s, literal);
  // restarts at n = 1 regardless of the partially recovered level
  CHECK(next.factor == doctest::Approx(0.38089309439157653));

  HabituationParams continuous(1.05, 1.0);
  HabituationState c;
  c = habituate_step(c, continuous);
  c = habituate_step(c, continuous);
  c = recover_step(c, continuous);
  HabituationState cnext = habituate_step(c, continuous);
  CHECK(cnext.factor < c.factor);  // continues from the recovered level
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HabituationParams(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(HabituationParams(1.05, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HabituationParams(0.5, 1.0, 1.0), std::invalid_argument);  // S/alpha > y0
}
