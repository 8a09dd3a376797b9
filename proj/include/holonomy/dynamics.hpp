#pragma once

#include "holonomy/models.hpp"

#include <functional>
#include <vector>

namespace holonomy {

// Sweep profile lambda(t) over one full cycle: continuous, non-decreasing,
// lambda(0) = 0 and lambda(T) = 2pi. The diabatic window multiplies the
// sweep rate by rate_multiplier inside |lambda - pi| < half_width, with the
// total time budget honoured exactly.
class SweepSchedule {
 public:
  enum class Kind { uniform, diabatic_window };

  static SweepSchedule uniform(double total_time);
  static SweepSchedule diabatic_window(double total_time, double half_width,
                                       double rate_multiplier);
  /// Convenience: fixes the rates directly and derives the total time.
  static SweepSchedule diabatic_window_from_rates(double outside_rate,
                                                  double inside_rate,
                                                  double half_width);

  double lambda_at(double t) const;

  Kind kind() const { return kind_; }
  double total_time() const { return total_time_; }
  double half_width() const { return half_width_; }
  double rate_multiplier() const { return rate_multiplier_; }
  double outside_rate() const { return outside_rate_; }
  double inside_rate() const { return outside_rate_ * rate_multiplier_; }

 private:
  SweepSchedule() = default;
  Kind kind_ = Kind::uniform;
  double total_time_ = 0.0;
  double half_width_ = 0.0;
  double rate_multiplier_ = 1.0;
  double outside_rate_ = 0.0;
  double window_entry_time_ = 0.0;
  double window_exit_time_ = 0.0;
};

struct EvolutionRecord {
  std::vector<double> times;
  std::vector<double> lambdas;
  std::vector<Vector2c> states;  // normalized
  // Tr(rho P_ref) against a designated projector family; filled by
  // fidelity_trace, empty until then.
  std::vector<double> projector_fidelities;
  // max | ||psi|| - 1 | observed over every integration step.
  double max_norm_drift = 0.0;
};

using HamiltonianFn = std::function<Matrix2c(double)>;

/// Core integrator for i dpsi/dt = H(t) psi (hbar = 1): per-step exact
/// exponential of the midpoint Hamiltonian,
///   psi_{k+1} = expm_i_hermitian(H(t_k + h/2), h) psi_k,
/// so each step is unitary to machine precision. Records every
/// record_stride-th step plus the first and last. Throws StepTooCoarse when
/// ||H|| * h >= 0.1 at any step.
EvolutionRecord evolve_time_dependent(const HamiltonianFn& h_of_t,
                                      double total_time, const Vector2c& psi0,
                                      double dt, int record_stride = 1);

/// Continuous evolution of a Hamiltonian model (crossing or perturbed)
/// driven through schedule.lambda_at; the record carries lambda(t).
EvolutionRecord evolve_continuous(const ParametricModel& m,
                                  const SweepSchedule& schedule,
                                  const Vector2c& psi0, double dt,
                                  int record_stride = 1);

/// Kicked evolution psi_{n+1} = U(lambda_n) psi_n for the floquet_map model.
/// The record associates state n with lambda_sequence[n] (the final state
/// with the extrapolated grid point, exact for uniform ramps).
EvolutionRecord evolve_kicked(const ParametricModel& m,
                              const std::vector<double>& lambda_sequence,
                              const Vector2c& psi0, int record_stride = 1);

/// Standard two-level diabatic transition estimate for the avoided crossing:
/// exp(-pi epsilon^2 / (2 vbar)) with vbar = sweep_rate/2, the linearized
/// rate of the unperturbed level splitting d(E1-E2)/dt at lambda = pi
/// (|d(E1-E2)/dlambda| = 1/2 there). An estimate for picking sweep regimes,
/// not an exact result. Throws NonPositiveInput.
double landau_zener_probability(double epsilon, double sweep_rate);

/// Pointwise Tr(rho(t) P_ref) with rho = |psi><psi|, matching record samples
/// to the reference path by nearest lambda. Throws GridMismatch when a
/// record sample falls outside the reference grid coverage.
std::vector<double> fidelity_trace(const EvolutionRecord& record,
                                   const BlochPath& reference);

}  // namespace holonomy
