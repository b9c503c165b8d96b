#pragma once

// Time-dependent Schroedinger propagation, i dpsi/dt = H(t) psi (hbar = 1).
//
// Two independent routes:
//   propagate         adaptive Dormand-Prince 8(5,3) with local error control
//   propagate_oracle  piecewise-constant midpoint matrix exponentials
//
// Both accept any callable `double -> Eigen::Matrix<complex, N, N>`; the
// dimension is taken from its return type.  The norm is never corrected
// during integration, it is only measured.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "dstirap/detail/dop853_tableau.hpp"
#include "dstirap/hamiltonian.hpp"
#include "dstirap/units.hpp"

namespace dstirap {

struct QuantumState {
  Eigen::VectorXcd amplitudes;
  BasisTag basis = BasisTag::Bare;

  /// |1> in the bare basis.
  static QuantumState ground();
  static QuantumState basis_state(BasisTag basis, Eigen::Index index);

  Eigen::Index dimension() const { return amplitudes.size(); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
};

/// Time-ordered samples of one propagation.  theta and omega_eff are only
/// filled by the config-level drivers in simulation.hpp.
struct Trajectory {
  BasisTag basis = BasisTag::Bare;
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  std::vector<Eigen::VectorXd> populations;
  std::vector<double> theta;
  std::vector<double> omega_eff;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

struct PropagatorOptions {
  double rtol = Tolerances{}.rtol;
  double atol = Tolerances{}.atol;
  double norm_tol = Tolerances{}.norm_tol;
  std::size_t samples = 1025; ///< uniform output grid, endpoints included
  bool record_steps = false;  ///< also store every accepted internal step
  std::size_t max_steps = 20'000'000;

  static PropagatorOptions from(const Tolerances& tol) {
    PropagatorOptions o;
    o.rtol = tol.rtol;
    o.atol = tol.atol;
    o.norm_tol = tol.norm_tol;
    return o;
  }
};

class IntegrationError : public std::runtime_error {
public:
  IntegrationError(const std::string& what, double time)
      : std::runtime_error(what + " at t=" + std::to_string(time)),
        time_(time) {}
  double time() const { return time_; }

private:
  double time_;
};

struct PropagationResult {
  QuantumState final_state;
  Trajectory trajectory;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_norm_drift = 0.0;
};

namespace detail {

template <typename Source>
using HamiltonianOf = std::decay_t<std::invoke_result_t<Source&, double>>;

template <typename Matrix>
using StateOf = Eigen::Matrix<std::complex<double>, Matrix::RowsAtCompileTime, 1>;

template <typename Matrix>
void check_dimension(const QuantumState& psi0) {
  static_assert(Matrix::RowsAtCompileTime != Eigen::Dynamic,
                "Hamiltonian source must return a fixed-size matrix");
  if (psi0.dimension() != Matrix::RowsAtCompileTime)
    throw std::invalid_argument("state dimension " +
                                std::to_string(psi0.dimension()) +
                                " does not match Hamiltonian dimension " +
                                std::to_string(Matrix::RowsAtCompileTime));
}

inline std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline void record(Trajectory& traj, double t, const Eigen::VectorXcd& psi) {
  traj.times.push_back(t);
  traj.states.push_back(psi);
  traj.populations.push_back(psi.cwiseAbs2());
}

} // namespace detail

template <typename Source>
PropagationResult propagate(Source&& hamiltonian, const QuantumState& psi0,
                            TimeSpan span, const PropagatorOptions& options = {}) {
  using Matrix = detail::HamiltonianOf<Source>;
  using State = detail::StateOf<Matrix>;
  namespace tab = detail::dop853;
  constexpr std::complex<double> minus_i(0.0, -1.0);

  detail::check_dimension<Matrix>(psi0);
  if (!(std::isfinite(span.start) && std::isfinite(span.end)) ||
      !(span.start < span.end))
    throw std::invalid_argument("propagation span must be finite with start < end");
  if (options.samples < 2)
    throw std::invalid_argument("need at least two trajectory samples");
  if (std::abs(psi0.norm_squared() - 1.0) > options.norm_tol)
    throw std::invalid_argument("initial state is not normalised");

  auto rhs = [&](double t, const State& y) -> State {
    return minus_i * (hamiltonian(t) * y);
  };

  PropagationResult result;
  Trajectory& traj = result.trajectory;
  traj.basis = psi0.basis;

  const double length = span.length();
  const double min_step = 1e-13 * std::max(1.0, std::abs(span.start) + std::abs(span.end));
  const std::size_t n_samples = options.samples;
  auto grid_time = [&](std::size_t k) {
    return k + 1 == n_samples
               ? span.end
               : span.start + length * static_cast<double>(k) /
                                  static_cast<double>(n_samples - 1);
  };

  auto check_norm = [&](double t, const State& y) {
    const double drift = std::abs(y.squaredNorm() - 1.0);
    result.max_norm_drift = std::max(result.max_norm_drift, drift);
    if (!(drift <= options.norm_tol))
      throw IntegrationError("norm drift " + detail::scientific(drift) +
                                 " exceeds tolerance " +
                                 detail::scientific(options.norm_tol),
                             t);
  };

  State y = psi0.amplitudes;
  double t = span.start;
  detail::record(traj, t, y);

  std::array<State, tab::kStages> k;
  k[0] = rhs(t, y);
  double h = std::min(length / static_cast<double>(n_samples - 1),
                      0.1 / std::max(1.0, hamiltonian(t).cwiseAbs().maxCoeff()));

  constexpr double safety = 0.9;
  constexpr double min_factor = 0.2;
  constexpr double max_factor = 10.0;
  constexpr double exponent = -1.0 / 8.0;

  for (std::size_t next = 1; next < n_samples; ++next) {
    const double target = grid_time(next);
    while (t < target) {
      bool last = false;
      double step = h;
      // Stretch onto the grid point rather than leave a sliver behind.
      if (t + 1.01 * step >= target) {
        step = target - t;
        last = true;
      }
      if (!last && step < min_step)
        throw IntegrationError("step size underflow", t);
      if (++result.accepted_steps + result.rejected_steps > options.max_steps)
        throw IntegrationError("step budget exhausted", t);

      for (int s = 1; s < tab::kStages; ++s) {
        State acc = State::Zero();
        for (int j = 0; j < s; ++j)
          if (tab::a[s][j] != 0.0)
            acc += tab::a[s][j] * k[j];
        k[s] = rhs(t + tab::c[s] * step, y + step * acc);
      }
      State incr = State::Zero();
      State err5 = State::Zero();
      State err3 = State::Zero();
      for (int s = 0; s < tab::kStages; ++s) {
        incr += tab::b[s] * k[s];
        err5 += tab::e5[s] * k[s];
        err3 += tab::e3[s] * k[s];
      }
      const State y_new = y + step * incr;

      double e5n = 0.0, e3n = 0.0;
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double scale =
            options.atol + options.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        e5n += std::norm(err5[i]) / (scale * scale);
        e3n += std::norm(err3[i]) / (scale * scale);
      }
      double err = 0.0;
      if (e5n > 0.0 || e3n > 0.0)
        err = step * e5n / std::sqrt((e5n + 0.01 * e3n) * static_cast<double>(y.size()));

      if (!std::isfinite(err))
        throw IntegrationError("non-finite error estimate", t);

      if (err <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k[0] = rhs(t, y);
        const double factor =
            err == 0.0 ? max_factor
                       : std::min(max_factor, safety * std::pow(err, exponent));
        // A step clipped at a grid point says nothing about the step size
        // the solution would allow; keep the previous proposal then.
        if (!last || factor < 1.0)
          h = step * std::max(factor, min_factor);
        if (options.record_steps && !last)
          detail::record(traj, t, y);
        if (!last)
          check_norm(t, y);
      } else {
        --result.accepted_steps;
        ++result.rejected_steps;
        h = step * std::max(min_factor, safety * std::pow(err, exponent));
      }
    }
    check_norm(t, y);
    detail::record(traj, t, y);
  }

  result.final_state = QuantumState{y, psi0.basis};
  return result;
}

/// Product of exact exponentials exp(-i H(t_mid) dt) over `steps` equal
/// substeps.  Second order in dt and exact for constant H.
template <typename Source>
QuantumState propagate_oracle(Source&& hamiltonian, const QuantumState& psi0,
                              TimeSpan span, std::size_t steps) {
  using Matrix = detail::HamiltonianOf<Source>;
  using State = detail::StateOf<Matrix>;
  detail::check_dimension<Matrix>(psi0);
  if (steps < 1)
    throw std::invalid_argument("oracle needs at least one step");

  const double dt = span.length() / static_cast<double>(steps);
  Eigen::SelfAdjointEigenSolver<Matrix> solver;
  State y = psi0.amplitudes;
  for (std::size_t n = 0; n < steps; ++n) {
    const double mid = span.start + (static_cast<double>(n) + 0.5) * dt;
    solver.compute(hamiltonian(mid));
    const auto& v = solver.eigenvectors();
    State coeffs = v.adjoint() * y;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      coeffs[i] *= std::polar(1.0, -solver.eigenvalues()[i] * dt);
    y = v * coeffs;
  }
  return QuantumState{y, psi0.basis};
}

} // namespace dstirap
