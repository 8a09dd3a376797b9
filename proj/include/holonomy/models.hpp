#pragma once

#include "holonomy/lift.hpp"

#include <optional>
#include <utility>

namespace holonomy {

enum class ModelKind { floquet_map, crossing, perturbed };
enum class Branch { upper, lower };

// The three bundled two-level systems, all 2pi-periodic in the cycle
// parameter lambda:
//
//   floquet_map  U(lambda) = e^{-i H0} e^{-i lambda |v><v|}, a periodically
//                kicked map; defaults H0 = (pi/2) sigma_y, |v><v| =
//                (I + sigma_x)/2.
//   crossing     H(lambda) = [(1+cos lambda) sigma_y + sin(lambda) sigma_z]/4,
//                with an exact level crossing at lambda = pi.
//   perturbed    H(lambda) + (epsilon/2) sigma_x, which opens the crossing
//                into an avoided crossing of width epsilon.
class ParametricModel {
 public:
  static ParametricModel crossing();
  static ParametricModel perturbed(double epsilon = 0.1);
  static ParametricModel floquet_map();
  /// Custom kick-map constants; kick_projector must be a rank-1 projector.
  static ParametricModel floquet_map(const Matrix2c& h0,
                                     const Matrix2c& kick_projector);

  ModelKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  double period() const;  // 2pi for all three kinds
  const Matrix2c& h0() const { return h0_; }
  const Matrix2c& kick() const { return kick_; }

 private:
  ParametricModel() = default;
  ModelKind kind_ = ModelKind::crossing;
  double epsilon_ = 0.0;
  Matrix2c h0_ = Matrix2c::Zero();
  Matrix2c kick_ = Matrix2c::Zero();
};

/// The model operator at lambda: unitary for floquet_map, Hermitian for the
/// other two.
Matrix2c operator_at(const ParametricModel& m, double lambda);

/// a(lambda) = cos(lambda/2) e_y + sin(lambda/2) e_z: the smooth Bloch-vector
/// continuation of the crossing model, defined through the degeneracy.
/// Anti-periodic: a(lambda + 2pi) = -a(lambda).
BlochVector analytic_bloch_crossing(double lambda);

/// Continued branch energies (cos(lambda/2)/2, -cos(lambda/2)/2) of the
/// crossing model; the levels exchange over one period.
std::pair<double, double> energies_crossing(double lambda);

/// a(lambda) = cos(lambda/2) e_y - sin(lambda/2) e_z: eigen-Bloch vector of
/// the default kick map.
BlochVector analytic_bloch_floquet(double lambda);

/// Bloch vector of the upper/lower level at lambda. "Upper" is the larger
/// energy (or eigenphase) branch; for the crossing model the smooth analytic
/// continuation is used so the result is defined at the crossing too.
BlochVector branch_bloch(const ParametricModel& m, double lambda, Branch b);

struct SpectrumSample {
  double lambda = 0.0;
  double value1 = 0.0;  // energies, or eigenphases for the map
  double value2 = 0.0;
  std::optional<Director> director;  // empty at spectral degeneracies
};

/// Levels and eigen-director at lambda. The crossing model reports the
/// continued branches (value1 = -value2), matching its smooth Bloch vector.
SpectrumSample spectrum_sample(const ParametricModel& m, double lambda);

/// Uniformly sampled eigen-director path over [lambda_start, lambda_end],
/// closed when the span is a whole number of periods. The crossing model
/// uses the analytic continuation (the eigensolver is blind at lambda = pi);
/// the other kinds throw DegeneracyOnPath naming the offending lambda.
DirectorPath director_path(const ParametricModel& m, double lambda_start,
                           double lambda_end, int n_samples);

}  // namespace holonomy
