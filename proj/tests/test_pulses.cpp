#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dstirap/pulses.hpp"
#include "test_common.hpp"

using namespace dstirap;

TEST_SUITE("pulses") {

TEST_CASE("pump envelope") {
  const PulsePair p{10.0, 10.0, 7.0};
  CHECK(pump_envelope(7.0, p) == doctest::Approx(10.0));
  CHECK(pump_envelope(17.0, p) == doctest::Approx(3.678794).epsilon(1e-6));
  CHECK(pump_envelope(-13.0, p) == doctest::Approx(0.183156).epsilon(1e-5));
}

TEST_CASE("stokes envelope mirrors the pump") {
  const PulsePair p{10.0, 10.0, 10.0};
  CHECK(stokes_envelope(-10.0, p) == doctest::Approx(10.0));
  CHECK(stokes_envelope(0.0, p) == doctest::Approx(10.0 * std::exp(-1.0)));
  for (int i = 0; i < 100; ++i) {
    const PulsePair r{test::uniform(0, 20), test::uniform(1, 20), test::uniform(-30, 30)};
    const double t = test::uniform(-80, 80);
    CHECK(stokes_envelope(t, r) == pump_envelope(-t, r));
    CHECK(stokes_envelope(t, r) >= 0.0);
    CHECK(pump_envelope(t, r) >= 0.0);
  }
}

TEST_CASE("mixing angle") {
  CHECK(mixing_angle(0.0, 5.0) == 0.0);
  CHECK(mixing_angle(5.0, 5.0) == doctest::Approx(std::numbers::pi / 4));
  CHECK(mixing_angle(5.0, 0.0) == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("mixing angle falls back to the analytic ratio when envelopes underflow") {
  const PulsePair p{10.0, 1.0, 0.5};
  // At t = 40 both envelopes are exactly zero in double precision.
  REQUIRE(pump_envelope(40.0, p) == 0.0);
  REQUIRE(stokes_envelope(40.0, p) == 0.0);
  CHECK(mixing_angle(40.0, p) == doctest::Approx(std::numbers::pi / 2));
  CHECK(mixing_angle(-40.0, p) == doctest::Approx(0.0));
  // Continuous with the envelope-based value where that is still defined.
  CHECK(mixing_angle(26.0, p) == doctest::Approx(mixing_angle(40.0, p)));
  // No field at all still gives a smooth angle.
  const PulsePair dark{0.0, 10.0, 10.0};
  CHECK(mixing_angle(0.0, dark) == doctest::Approx(std::numbers::pi / 4));
  CHECK(mixing_angle(2.5, dark) == doctest::Approx(std::atan(std::exp(1.0))));
}

TEST_CASE("mixing angle rate") {
  const PulsePair p{10.0, 10.0, 10.0};
  CHECK(mixing_angle_rate(0.0, p) == doctest::Approx(0.2));
  CHECK(mixing_angle_rate(1e6, p) == 0.0);
  CHECK(mixing_angle_rate(-1e6, p) == 0.0);
  const PulsePair coincident{10.0, 10.0, 0.0};
  for (double t : {-30.0, 0.0, 12.5})
    CHECK(mixing_angle_rate(t, coincident) == 0.0);
}

TEST_CASE("mixing angle rate matches a central difference") {
  const double h = 1e-2;
  for (int i = 0; i < 200; ++i) {
    const PulsePair p{test::uniform(1, 20), test::uniform(2, 15), test::uniform(-20, 20)};
    const double t = test::uniform(-3, 3) * p.pulse_width;
    const double fd = (mixing_angle(t + h, p) - mixing_angle(t - h, p)) / (2 * h);
    const double exact = mixing_angle_rate(t, p);
    // Truncation error h^2/6 theta''' with theta''' ~ (4 tau/T^2)^2 theta'.
    const double k = 4 * p.delay / (p.pulse_width * p.pulse_width);
    CHECK(std::abs(fd - exact) <= h * h * k * k * std::abs(exact) + 1e-12);
  }
}

TEST_CASE("effective Rabi frequency") {
  CHECK(effective_rabi(3.0, 4.0) == doctest::Approx(5.0));
  CHECK(effective_rabi(0.0, 0.0) == 0.0);
  const PulsePair p{10.0, 10.0, 10.0};
  CHECK(effective_rabi(0.0, p) == doctest::Approx(5.202601).epsilon(1e-6));
  for (int i = 0; i < 100; ++i) {
    const PulsePair r{test::uniform(0, 20), test::uniform(1, 20), test::uniform(-30, 30)};
    const double t = test::uniform(-60, 60);
    const double P = pump_envelope(t, r), S = stokes_envelope(t, r);
    const double W = effective_rabi(t, r);
    CHECK(W * W == doctest::Approx(P * P + S * S).epsilon(1e-12));
  }
}

TEST_CASE("mixing angle is monotone in the sign of the delay") {
  for (double delay : {-15.0, -3.0, 4.0, 10.0}) {
    const PulsePair p{10.0, 10.0, delay};
    double prev = mixing_angle(-200.0, p);
    for (int i = -1999; i <= 2000; ++i) {
      const double theta = mixing_angle(0.1 * i, p);
      if (delay > 0)
        CHECK(theta >= prev);
      else
        CHECK(theta <= prev);
      prev = theta;
    }
  }
}

TEST_CASE("closed form tan(theta) = exp(4 tau t / T^2)") {
  const PulsePair p{10.0, 10.0, -10.0};
  for (double t : {-20.0, -1.0, 0.0, 0.3, 17.0})
    CHECK(std::tan(mixing_angle(t, p)) ==
          doctest::Approx(std::exp(4 * p.delay * t / 100.0)).epsilon(1e-12));
}

} // TEST_SUITE
