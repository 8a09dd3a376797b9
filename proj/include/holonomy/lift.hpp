#pragma once

#include "holonomy/bloch.hpp"

#include <cstddef>
#include <vector>

namespace holonomy {

// Continuation rejects a step whose adjacent directors have overlap
// |a_prev . n_rep| below this: near orthogonality the sheet choice is
// unreliable, so the caller must refine the sampling instead.
inline constexpr double kStepCap = 0.1;

// Sampled closed or open curve in RP^2, the base space of the double cover.
struct DirectorPath {
  std::vector<Director> samples;
  std::vector<double> params;  // cycle parameter per sample
  bool closed = false;
};

// Lift of a director path to the sphere: one sheet chosen by continuity.
struct BlochPath {
  std::vector<Vector3d> samples;
  std::vector<double> params;
};

enum class Permutation { identity, swap };
enum class HomotopyClass { e_class, gamma_class };

const char* to_string(Permutation p);
const char* to_string(HomotopyClass c);

// pi_1(RP^2) has exactly two elements, so for two levels the permutation and
// the homotopy class determine each other: swap <=> gamma_class.
struct HolonomyResult {
  Permutation permutation = Permutation::identity;
  HomotopyClass homotopy_class = HomotopyClass::e_class;
  // Distance from the lift endpoint to the nearer of {a0, -a0}.
  double endpoint_defect = 0.0;
  // Worst |a_i . a_{i+1}| along the lift (continuity safety margin).
  double min_adjacent_overlap = 1.0;
  std::size_t sample_count = 0;
};

/// Unique-path-lifting continuation from a0: each step picks the sign of the
/// next representative that maximizes overlap with the previous sample.
/// Throws StartMismatch if a0 does not project onto the first director, and
/// StepTooLarge when a step falls under kStepCap.
BlochPath lift_path(const DirectorPath& path, const BlochVector& a0);

/// Lifts a closed path and classifies the endpoint against {a0, -a0} within
/// kClosureTol. Throws NotClosed, StepTooLarge, or EndpointUnresolved when
/// the endpoint is near neither sheet (numerical drift; defect reported).
HolonomyResult classify_holonomy(const DirectorPath& path, const BlochVector& a0);

/// Joins two paths, deduplicating the junction sample; the closed flag is
/// recomputed from the joined endpoints. Throws EndpointMismatch.
DirectorPath concatenate(const DirectorPath& p1, const DirectorPath& p2);

}  // namespace holonomy
