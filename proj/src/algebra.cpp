#include "holonomy/algebra.hpp"

#include "holonomy/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace holonomy {

namespace {

constexpr complexd kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

std::string matrix_report(const char* what, const Matrix2c& m, double dev) {
  std::ostringstream os;
  os << what << " (deviation " << dev << "): [[" << m(0, 0) << ", " << m(0, 1)
     << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
  return os.str();
}

}  // namespace

const Matrix2c& pauli(Axis axis) {
  static const Matrix2c sx = (Matrix2c() << 0, 1, 1, 0).finished();
  static const Matrix2c sy =
      (Matrix2c() << 0, complexd(0, -1), complexd(0, 1), 0).finished();
  static const Matrix2c sz = (Matrix2c() << 1, 0, 0, -1).finished();
  switch (axis) {
    case Axis::x:
      return sx;
    case Axis::y:
      return sy;
    default:
      return sz;
  }
}

Matrix2c pauli_dot(const Vector3d& v) {
  Matrix2c m;
  m(0, 0) = v.z();
  m(0, 1) = complexd(v.x(), -v.y());
  m(1, 0) = complexd(v.x(), v.y());
  m(1, 1) = -v.z();
  return m;
}

bool is_hermitian(const Matrix2c& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix2c& m, double tol) {
  return (m.adjoint() * m - Matrix2c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

PauliDecomposition pauli_decompose(const Matrix2c& h) {
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol) {
    throw NonHermitianInput(matrix_report("matrix is not Hermitian", h, dev));
  }
  PauliDecomposition d;
  d.scalar = 0.5 * h.trace().real();
  // Entrywise extraction of h_k = Tr(H sigma_k)/2 for H = [[a, b], [b*, d]].
  d.axis = Vector3d(h(1, 0).real(), h(1, 0).imag(),
                    0.5 * (h(0, 0).real() - h(1, 1).real()));
  return d;
}

Matrix2c expm_i_hermitian(const Matrix2c& h, double s) {
  const PauliDecomposition d = pauli_decompose(h);
  const double r = d.axis.norm();
  const complexd phase = std::exp(complexd(0.0, -s * d.scalar));
  if (r == 0.0) {
    return phase * Matrix2c::Identity();
  }
  const double angle = s * r;
  return phase * (std::cos(angle) * Matrix2c::Identity() -
                  kI * std::sin(angle) * pauli_dot(d.axis / r));
}

HermitianEigs eig_hermitian_2x2(const Matrix2c& h, double gap_tol) {
  const PauliDecomposition d = pauli_decompose(h);
  const double r = d.axis.norm();
  HermitianEigs out;
  out.e1 = d.scalar + r;
  out.e2 = d.scalar - r;
  if (2.0 * r >= gap_tol) {
    out.bloch = d.axis / r;
  }
  return out;
}

double wrap_phase(double t) {
  double w = std::remainder(t, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) {
    w += 2.0 * kPi;
  }
  return w;
}

UnitaryEigs eig_unitary_2x2(const Matrix2c& u, double gap_tol) {
  const double dev =
      (u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (dev > kUnitaryTol) {
    throw NonUnitaryInput(matrix_report("matrix is not unitary", u, dev));
  }

  // Split off the overall phase: U = e^{i phi} V with V in SU(2), so
  // V = cos(t) I - i sin(t) n.sigma with real t and unit n.
  const double phi = 0.5 * std::arg(u.determinant());
  const Matrix2c v = std::exp(complexd(0.0, -phi)) * u;
  const double c = 0.5 * v.trace().real();
  Vector3d w;
  for (int k = 0; k < 3; ++k) {
    w[k] = 0.5 * (kI * (v * pauli(static_cast<Axis>(k))).trace()).real();
  }
  const double r = w.norm();
  const double t = std::atan2(r, c);  // [0, pi]

  const double theta_plus_axis = wrap_phase(phi - t);   // projector along +n
  const double theta_minus_axis = wrap_phase(phi + t);  // projector along -n

  UnitaryEigs out;
  const double circle_gap = std::min(2.0 * t, 2.0 * kPi - 2.0 * t);
  if (r < 1e-15 || circle_gap < gap_tol) {
    out.theta1 = std::max(theta_plus_axis, theta_minus_axis);
    out.theta2 = std::min(theta_plus_axis, theta_minus_axis);
    return out;
  }
  const Vector3d n = w / r;
  if (theta_plus_axis >= theta_minus_axis) {
    out.theta1 = theta_plus_axis;
    out.theta2 = theta_minus_axis;
    out.bloch = n;
  } else {
    out.theta1 = theta_minus_axis;
    out.theta2 = theta_plus_axis;
    out.bloch = -n;
  }
  return out;
}

}  // namespace holonomy
