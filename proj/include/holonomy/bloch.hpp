#pragma once

#include "holonomy/algebra.hpp"

namespace holonomy {

// Unit 3-vector labelling one sheet of the eigenprojector double cover:
// P = (I + a.sigma)/2 lives on the sphere S^2.
using BlochVector = Vector3d;

// Director/endpoint equality tolerance. Sampled cycles close only
// approximately; this sits far above accumulated float drift and far below
// the distance 2 between antipodal sheets.
inline constexpr double kClosureTol = 1e-6;

// Components below this are treated as zero when scanning for the canonical
// sign of a director representative.
inline constexpr double kDirectorZeroTol = 1e-12;

// Headless unit vector {a, -a}: a point of the real projective plane RP^2.
// Stored through a canonical representative whose first component above
// kDirectorZeroTol (x, y, z scan order) is strictly positive, so equal
// directors hash and compare consistently.
class Director {
 public:
  /// Canonicalizes any nonzero vector; throws ZeroVector below 1e-6 norm.
  static Director from(const Vector3d& a);

  const Vector3d& rep() const { return rep_; }

 private:
  Director() = default;
  Vector3d rep_;
};

/// min(|n - m|, |n + m|) over the representatives.
double director_distance(const Director& a, const Director& b);
bool director_equal(const Director& a, const Director& b,
                    double tol = kClosureTol);

/// The 2-to-1 covering projection S^2 -> RP^2 identifying antipodes.
Director covering_projection(const BlochVector& a);

// Ordered eigenprojector pair: idempotent, mutually orthogonal, p1 + p2 = I
// exactly (p2 is constructed as the complement).
struct ProjectorPair {
  Matrix2c p1, p2;
};

/// P1 = (I + a.sigma)/2, P2 = I - P1. Renormalizes a; throws ZeroVector.
ProjectorPair projectors_from_bloch(const BlochVector& a);

/// a_k = Tr(P sigma_k). Throws NotAProjector unless P is Hermitian,
/// idempotent and trace-1 within 1e-9.
BlochVector bloch_from_projector(const Matrix2c& p);

/// H = e1*P1(a) + e2*P2(a). Throws ZeroVector.
Matrix2c hamiltonian_from_spectrum(double e1, double e2, const BlochVector& a);

/// Normalized state with <sigma> = a (the +1 eigenvector of a.sigma).
Vector2c state_from_bloch(const BlochVector& a);

/// <sigma> of psi (normalized internally).
BlochVector bloch_from_state(const Vector2c& psi);

}  // namespace holonomy
