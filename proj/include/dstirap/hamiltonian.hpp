#pragma once

// Three representations of the lambda-system Hamiltonian in recoil units.
//
// Bare basis (|1>, |2>, |3>), after the gauge transformation:
//
//       | 2q        Wp/2          0   |
//   H = | Wp/2   -(1+detuning)   Ws/2 |
//       | 0         Ws/2        -2q   |
//
// Dark/bright basis (|D>, |2>, |B>) is reached with the real rotation
//
//       | cos th   0   -sin th |
//   U = |   0      1      0    |      psi_db = U psi_bare
//       | sin th   0    cos th |
//
// and the Landau-Zener reduction keeps only the (|B>, |2>) block.

#include <complex>

#include <Eigen/Core>

#include "dstirap/units.hpp"

namespace dstirap {

using Complex = std::complex<double>;
using HermitianMatrix3 = Eigen::Matrix3cd;
using HermitianMatrix2 = Eigen::Matrix2cd;

enum class BasisTag {
  Bare,        ///< |1>, |2>, |3>
  DarkBright,  ///< |D>, |2>, |B>
  LandauZener, ///< |B>, |2>
};

const char* to_string(BasisTag basis);

HermitianMatrix3 bare_hamiltonian(double t, const SimulationConfig& config);

/// Dark/bright block form. With include_nonadiabatic the rotating-frame term
/// i (dU/dt) U^T is added, making propagation in this frame exactly
/// equivalent to the bare frame.
HermitianMatrix3 darkbright_hamiltonian(double t, const SimulationConfig& config,
                                        bool include_nonadiabatic);

/// diag(1 + detuning - 2q cos 2th, 0) with Weff/2 off the diagonal.
HermitianMatrix2 lz_hamiltonian(double t, const SimulationConfig& config);

/// U(theta) mapping bare amplitudes onto (D, 2, B).
Eigen::Matrix3d basis_rotation(double theta);

/// dU/dt = theta' dU/dtheta.
Eigen::Matrix3d basis_rotation_rate(double theta, double theta_rate);

/// The extra term of the moving frame: i (dU/dt) U^T.
HermitianMatrix3 rotating_frame_term(double t, const SimulationConfig& config);

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 0.0) {
  if (!m.allFinite())
    return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace dstirap
