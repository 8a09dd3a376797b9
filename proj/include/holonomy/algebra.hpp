#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace holonomy {

using complexd = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;
using Vector3d = Eigen::Vector3d;

// Below this level spacing the eigenbasis direction is numerically
// meaningless and the solvers report a degenerate spectrum instead.
inline constexpr double kGapTol = 1e-9;

inline constexpr double kHermitianTol = 1e-12;  // entrywise |M - M^dag|
inline constexpr double kUnitaryTol = 1e-10;    // entrywise |U^dag U - I|

enum class Axis { x, y, z };

const Matrix2c& pauli(Axis axis);

/// v . sigma
Matrix2c pauli_dot(const Vector3d& v);

bool is_hermitian(const Matrix2c& m, double tol = kHermitianTol);
bool is_unitary(const Matrix2c& m, double tol = kUnitaryTol);

// The unique real decomposition H = scalar*I + axis . sigma of a Hermitian
// 2x2 matrix. Every closed-form routine below is built on it.
struct PauliDecomposition {
  double scalar;
  Vector3d axis;
};

/// Throws NonHermitianInput.
PauliDecomposition pauli_decompose(const Matrix2c& h);

/// e^{-i s H} in closed form: with H = c*I + h.sigma,
/// e^{-isH} = e^{-isc} (cos(s|h|) I - i sin(s|h|) h_unit.sigma).
/// Unitary by construction; throws NonHermitianInput.
Matrix2c expm_i_hermitian(const Matrix2c& h, double s);

struct HermitianEigs {
  double e1 = 0.0;  // e1 >= e2
  double e2 = 0.0;
  // Bloch vector of the e1 eigenprojector, P1 = (I + bloch.sigma)/2.
  // Empty when the spectrum is degenerate within gap_tol.
  std::optional<Vector3d> bloch;
  bool degenerate() const { return !bloch.has_value(); }
};

/// Closed-form spectral decomposition H = e1*P1 + e2*P2.
HermitianEigs eig_hermitian_2x2(const Matrix2c& h, double gap_tol = kGapTol);

struct UnitaryEigs {
  double theta1 = 0.0;  // eigenphases in (-pi, pi], theta1 >= theta2
  double theta2 = 0.0;
  // Bloch vector of the theta1 eigenprojector; empty when the two phases
  // coincide on the circle within gap_tol.
  std::optional<Vector3d> bloch;
  bool degenerate() const { return !bloch.has_value(); }
};

/// Closed-form decomposition U = e^{i theta1} P1 + e^{i theta2} P2.
UnitaryEigs eig_unitary_2x2(const Matrix2c& u, double gap_tol = kGapTol);

/// Maps an angle to (-pi, pi].
double wrap_phase(double t);

}  // namespace holonomy
