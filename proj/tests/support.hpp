// Shared helpers for the unit and acceptance suites: seeded generators and
// implementation-independent oracles.
#pragma once

#include "holonomy/lift.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using holonomy::BlochVector;
using holonomy::Director;
using holonomy::DirectorPath;
using holonomy::Matrix2c;
using holonomy::Vector3d;
using holonomy::complexd;

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Vector3d random_unit_vector(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector3d v;
  do {
    v = Vector3d(n(gen), n(gen), n(gen));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

inline Matrix2c random_hermitian(std::mt19937_64& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix2c h;
  h(0, 0) = u(gen);
  h(1, 1) = u(gen);
  const complexd off(u(gen), u(gen));
  h(0, 1) = std::conj(off);
  h(1, 0) = off;
  return h;
}

// Truncated-series oracle for e^{-i s H}, independent of the closed form.
inline Matrix2c taylor_expm_minus_i(const Matrix2c& h, double s,
                                    int terms = 20) {
  Matrix2c sum = Matrix2c::Identity();
  Matrix2c term = Matrix2c::Identity();
  const Matrix2c step = complexd(0.0, -s) * h;
  for (int k = 1; k <= terms; ++k) {
    term = term * step / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

// Characteristic-polynomial (quadratic formula) eigenvalue oracle for a
// Hermitian 2x2 matrix: roots of x^2 - tr x + det.
inline std::pair<double, double> quadratic_eig_oracle(const Matrix2c& h) {
  const double tr = h.trace().real();
  const double det = h.determinant().real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

// Small circle of directors of angular radius `radius` around the axis
// `center`, based at its own first sample; contractible in RP^2.
inline DirectorPath small_circle_path(const Vector3d& center, double radius,
                                      int n_samples) {
  const Vector3d c = center.normalized();
  Vector3d u = std::abs(c.z()) < 0.9 ? c.cross(Vector3d::UnitZ()).normalized()
                                     : c.cross(Vector3d::UnitX()).normalized();
  const Vector3d w = c.cross(u);
  DirectorPath path;
  for (int i = 0; i < n_samples; ++i) {
    const double s = 2.0 * kPi * i / (n_samples - 1);
    const Vector3d a = std::cos(radius) * c +
                       std::sin(radius) * (std::cos(s) * u + std::sin(s) * w);
    path.samples.push_back(holonomy::covering_projection(a));
    path.params.push_back(s);
  }
  path.closed = true;
  return path;
}

// Contractible loop based exactly at `base`: base + rho*((cos s - 1) u +
// sin(s) w) renormalized, so the basepoint is hit exactly at s = 0, 2pi.
inline DirectorPath based_e_cycle(const Vector3d& base, double rho,
                                  int n_samples) {
  const Vector3d b = base.normalized();
  Vector3d u = std::abs(b.z()) < 0.9 ? b.cross(Vector3d::UnitZ()).normalized()
                                     : b.cross(Vector3d::UnitX()).normalized();
  const Vector3d w = b.cross(u);
  DirectorPath path;
  for (int i = 0; i < n_samples; ++i) {
    const double s = 2.0 * kPi * i / (n_samples - 1);
    const Vector3d a =
        (b + rho * ((std::cos(s) - 1.0) * u + std::sin(s) * w)).normalized();
    path.samples.push_back(holonomy::covering_projection(a));
    path.params.push_back(s);
  }
  path.closed = true;
  return path;
}

// Random smooth closed perturbation of a closed director path: a low-order
// Fourier vector field in the path parameter, windowed by sin^2(s/2) so the
// basepoint stays fixed, scaled to `amplitude` at the largest sample.
inline DirectorPath perturb_closed_path(const DirectorPath& p,
                                        double amplitude,
                                        std::mt19937_64& gen) {
  const std::size_t n = p.samples.size();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double ac[3][3];
  double bc[3][3];
  for (auto& row : ac) {
    for (double& v : row) {
      v = u(gen);
    }
  }
  for (auto& row : bc) {
    for (double& v : row) {
      v = u(gen);
    }
  }

  std::vector<Vector3d> delta(n);
  double max_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = 2.0 * kPi * static_cast<double>(i) /
                     static_cast<double>(n - 1);
    Vector3d d = Vector3d::Zero();
    for (int c = 0; c < 3; ++c) {
      for (int m = 0; m < 3; ++m) {
        d[c] += ac[c][m] * std::cos((m + 1) * s) +
                bc[c][m] * std::sin((m + 1) * s);
      }
    }
    const double window = std::sin(0.5 * s) * std::sin(0.5 * s);
    delta[i] = window * d;
    max_norm = std::max(max_norm, delta[i].norm());
  }
  const double scale = max_norm > 0.0 ? amplitude / max_norm : 0.0;

  DirectorPath out;
  out.params = p.params;
  out.closed = p.closed;
  out.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.samples.push_back(
        holonomy::covering_projection(p.samples[i].rep() + scale * delta[i]));
  }
  return out;
}

}  // namespace testsupport
