#include "holonomy/bloch.hpp"

#include "holonomy/errors.hpp"

#include <cmath>
#include <sstream>

namespace holonomy {

namespace {

constexpr double kMinNorm = 1e-6;

Vector3d unit_or_throw(const Vector3d& a, const char* who) {
  const double n = a.norm();
  if (n < kMinNorm) {
    std::ostringstream os;
    os << who << ": vector norm " << n << " is below " << kMinNorm;
    throw ZeroVector(os.str());
  }
  // Already-unit vectors pass through bit-exactly (canonicalization must be
  // a fixed point).
  return std::abs(n - 1.0) <= 1e-12 ? a : Vector3d(a / n);
}

}  // namespace

Director Director::from(const Vector3d& a) {
  Vector3d r = unit_or_throw(a, "Director::from");
  for (int k = 0; k < 3; ++k) {
    if (std::abs(r[k]) >= kDirectorZeroTol) {
      if (r[k] < 0.0) {
        r = -r;
      }
      break;
    }
  }
  Director d;
  d.rep_ = r;
  return d;
}

double director_distance(const Director& a, const Director& b) {
  return std::min((a.rep() - b.rep()).norm(), (a.rep() + b.rep()).norm());
}

bool director_equal(const Director& a, const Director& b, double tol) {
  return director_distance(a, b) <= tol;
}

Director covering_projection(const BlochVector& a) { return Director::from(a); }

ProjectorPair projectors_from_bloch(const BlochVector& a) {
  const Vector3d u = unit_or_throw(a, "projectors_from_bloch");
  ProjectorPair pair;
  pair.p1 = 0.5 * (Matrix2c::Identity() + pauli_dot(u));
  pair.p2 = Matrix2c::Identity() - pair.p1;
  return pair;
}

BlochVector bloch_from_projector(const Matrix2c& p) {
  constexpr double tol = 1e-9;
  const double herm_dev = (p - p.adjoint()).cwiseAbs().maxCoeff();
  const double idem_dev = (p * p - p).cwiseAbs().maxCoeff();
  const double trace_dev = std::abs(p.trace() - complexd(1.0, 0.0));
  if (herm_dev > tol || idem_dev > tol || trace_dev > tol) {
    std::ostringstream os;
    os << "bloch_from_projector: not a rank-1 projector (hermiticity "
       << herm_dev << ", idempotency " << idem_dev << ", trace " << trace_dev
       << ")";
    throw NotAProjector(os.str());
  }
  BlochVector a;
  for (int k = 0; k < 3; ++k) {
    a[k] = (p * pauli(static_cast<Axis>(k))).trace().real();
  }
  return a;
}

Matrix2c hamiltonian_from_spectrum(double e1, double e2,
                                   const BlochVector& a) {
  const ProjectorPair pair = projectors_from_bloch(a);
  return e1 * pair.p1 + e2 * pair.p2;
}

Vector2c state_from_bloch(const BlochVector& a) {
  const Vector3d u = unit_or_throw(a, "state_from_bloch");
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  Vector2c psi;
  psi(0) = std::cos(0.5 * theta);
  psi(1) = std::exp(complexd(0.0, phi)) * std::sin(0.5 * theta);
  return psi;
}

BlochVector bloch_from_state(const Vector2c& psi) {
  const double n = psi.norm();
  if (n < kMinNorm) {
    throw ZeroVector("bloch_from_state: state norm below 1e-6");
  }
  const Vector2c u = psi / n;
  BlochVector a;
  for (int k = 0; k < 3; ++k) {
    a[k] = (u.adjoint() * pauli(static_cast<Axis>(k)) * u)(0, 0).real();
  }
  return a;
}

}  // namespace holonomy
