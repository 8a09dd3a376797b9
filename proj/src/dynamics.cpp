#include "holonomy/dynamics.hpp"

#include "holonomy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace holonomy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vector2c normalized_state(const Vector2c& psi) {
  const double n = psi.norm();
  if (n < 1e-6) {
    throw std::invalid_argument("evolution: initial state has near-zero norm");
  }
  return psi / n;
}

}  // namespace

SweepSchedule SweepSchedule::uniform(double total_time) {
  if (total_time <= 0.0) {
    throw NonPositiveInput("SweepSchedule::uniform: total_time must be > 0");
  }
  SweepSchedule s;
  s.kind_ = Kind::uniform;
  s.total_time_ = total_time;
  s.outside_rate_ = kTwoPi / total_time;
  s.rate_multiplier_ = 1.0;
  return s;
}

SweepSchedule SweepSchedule::diabatic_window(double total_time,
                                             double half_width,
                                             double rate_multiplier) {
  if (total_time <= 0.0 || rate_multiplier <= 0.0) {
    throw NonPositiveInput(
        "SweepSchedule::diabatic_window: total_time and rate_multiplier must "
        "be > 0");
  }
  if (half_width <= 0.0 || half_width >= kPi) {
    throw NonPositiveInput(
        "SweepSchedule::diabatic_window: half_width must lie in (0, pi)");
  }
  SweepSchedule s;
  s.kind_ = Kind::diabatic_window;
  s.total_time_ = total_time;
  s.half_width_ = half_width;
  s.rate_multiplier_ = rate_multiplier;
  // Time budget: (2pi - 2w) at the outside rate plus 2w at r times it.
  s.outside_rate_ =
      ((kTwoPi - 2.0 * half_width) + 2.0 * half_width / rate_multiplier) /
      total_time;
  s.window_entry_time_ = (kPi - half_width) / s.outside_rate_;
  s.window_exit_time_ =
      s.window_entry_time_ +
      2.0 * half_width / (rate_multiplier * s.outside_rate_);
  return s;
}

SweepSchedule SweepSchedule::diabatic_window_from_rates(double outside_rate,
                                                        double inside_rate,
                                                        double half_width) {
  if (outside_rate <= 0.0 || inside_rate <= 0.0) {
    throw NonPositiveInput(
        "SweepSchedule::diabatic_window_from_rates: rates must be > 0");
  }
  const double total_time = (kTwoPi - 2.0 * half_width) / outside_rate +
                            2.0 * half_width / inside_rate;
  return diabatic_window(total_time, half_width, inside_rate / outside_rate);
}

double SweepSchedule::lambda_at(double t) const {
  if (t <= 0.0) {
    return 0.0;
  }
  if (t >= total_time_) {
    return kTwoPi;
  }
  if (kind_ == Kind::uniform) {
    return kTwoPi * (t / total_time_);
  }
  if (t <= window_entry_time_) {
    return outside_rate_ * t;
  }
  if (t <= window_exit_time_) {
    return (kPi - half_width_) +
           rate_multiplier_ * outside_rate_ * (t - window_entry_time_);
  }
  return (kPi + half_width_) + outside_rate_ * (t - window_exit_time_);
}

EvolutionRecord evolve_time_dependent(const HamiltonianFn& h_of_t,
                                      double total_time, const Vector2c& psi0,
                                      double dt, int record_stride) {
  if (total_time <= 0.0 || dt <= 0.0) {
    throw NonPositiveInput(
        "evolve_time_dependent: total_time and dt must be > 0");
  }
  if (record_stride < 1) {
    record_stride = 1;
  }
  const auto n_steps =
      static_cast<std::size_t>(std::ceil(total_time / dt - 1e-12));
  const double h = total_time / static_cast<double>(n_steps);

  EvolutionRecord rec;
  rec.times.reserve(n_steps / record_stride + 2);
  rec.states.reserve(n_steps / record_stride + 2);

  Vector2c psi = normalized_state(psi0);
  rec.times.push_back(0.0);
  rec.states.push_back(psi);

  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * h;
    const Matrix2c ham = h_of_t(t_mid);
    const PauliDecomposition d = pauli_decompose(ham);
    const double spectral_norm = std::abs(d.scalar) + d.axis.norm();
    if (spectral_norm * h >= 0.1) {
      std::ostringstream os;
      os << "evolve_time_dependent: ||H||*dt = " << spectral_norm * h
         << " >= 0.1 at t = " << t_mid << "; reduce dt";
      throw StepTooCoarse(os.str());
    }
    psi = expm_i_hermitian(ham, h) * psi;
    rec.max_norm_drift =
        std::max(rec.max_norm_drift, std::abs(psi.norm() - 1.0));
    const bool last = (k + 1 == n_steps);
    if (last || (k + 1) % static_cast<std::size_t>(record_stride) == 0) {
      rec.times.push_back(static_cast<double>(k + 1) * h);
      rec.states.push_back(psi);
    }
  }
  return rec;
}

EvolutionRecord evolve_continuous(const ParametricModel& m,
                                  const SweepSchedule& schedule,
                                  const Vector2c& psi0, double dt,
                                  int record_stride) {
  if (m.kind() == ModelKind::floquet_map) {
    throw std::invalid_argument(
        "evolve_continuous: the kicked map evolves via evolve_kicked");
  }
  EvolutionRecord rec = evolve_time_dependent(
      [&](double t) { return operator_at(m, schedule.lambda_at(t)); },
      schedule.total_time(), psi0, dt, record_stride);
  rec.lambdas.reserve(rec.times.size());
  for (const double t : rec.times) {
    rec.lambdas.push_back(schedule.lambda_at(t));
  }
  return rec;
}

EvolutionRecord evolve_kicked(const ParametricModel& m,
                              const std::vector<double>& lambda_sequence,
                              const Vector2c& psi0, int record_stride) {
  if (m.kind() != ModelKind::floquet_map) {
    throw std::invalid_argument("evolve_kicked: model must be a kicked map");
  }
  if (lambda_sequence.empty()) {
    throw std::invalid_argument("evolve_kicked: empty kick sequence");
  }
  if (record_stride < 1) {
    record_stride = 1;
  }
  const std::size_t n = lambda_sequence.size();

  EvolutionRecord rec;
  Vector2c psi = normalized_state(psi0);
  rec.times.push_back(0.0);
  rec.lambdas.push_back(lambda_sequence.front());
  rec.states.push_back(psi);

  for (std::size_t k = 0; k < n; ++k) {
    psi = operator_at(m, lambda_sequence[k]) * psi;
    rec.max_norm_drift =
        std::max(rec.max_norm_drift, std::abs(psi.norm() - 1.0));
    const bool last = (k + 1 == n);
    if (last || (k + 1) % static_cast<std::size_t>(record_stride) == 0) {
      rec.times.push_back(static_cast<double>(k + 1));
      if (last) {
        // Extrapolated grid point; exact for a uniform ramp.
        rec.lambdas.push_back(n >= 2 ? 2.0 * lambda_sequence[n - 1] -
                                           lambda_sequence[n - 2]
                                     : lambda_sequence.back());
      } else {
        rec.lambdas.push_back(lambda_sequence[k + 1]);
      }
      rec.states.push_back(psi);
    }
  }
  return rec;
}

double landau_zener_probability(double epsilon, double sweep_rate) {
  if (epsilon <= 0.0 || sweep_rate <= 0.0) {
    throw NonPositiveInput(
        "landau_zener_probability: epsilon and sweep_rate must be > 0");
  }
  const double vbar = 0.5 * sweep_rate;  // |d(E1-E2)/dlambda| = 1/2 at pi
  return std::exp(-kPi * epsilon * epsilon / (2.0 * vbar));
}

std::vector<double> fidelity_trace(const EvolutionRecord& record,
                                   const BlochPath& reference) {
  if (record.states.size() != record.lambdas.size() || record.states.empty()) {
    throw GridMismatch(
        "fidelity_trace: record lacks a lambda per state sample");
  }
  if (reference.samples.size() != reference.params.size() ||
      reference.samples.empty()) {
    throw GridMismatch("fidelity_trace: empty or inconsistent reference path");
  }
  double max_spacing = 0.0;
  for (std::size_t i = 1; i < reference.params.size(); ++i) {
    const double d = reference.params[i] - reference.params[i - 1];
    if (d < 0.0) {
      throw GridMismatch(
          "fidelity_trace: reference params must be non-decreasing");
    }
    max_spacing = std::max(max_spacing, d);
  }
  const double coverage_tol = 0.5 * max_spacing + 1e-9;

  std::vector<double> out;
  out.reserve(record.states.size());
  for (std::size_t i = 0; i < record.states.size(); ++i) {
    const double lambda = record.lambdas[i];
    const auto it = std::lower_bound(reference.params.begin(),
                                     reference.params.end(), lambda);
    std::size_t j = static_cast<std::size_t>(it - reference.params.begin());
    if (j == reference.params.size()) {
      j -= 1;
    } else if (j > 0 && lambda - reference.params[j - 1] <
                            reference.params[j] - lambda) {
      j -= 1;
    }
    if (std::abs(lambda - reference.params[j]) > coverage_tol) {
      std::ostringstream os;
      os << "fidelity_trace: record lambda " << lambda
         << " is outside the reference grid coverage (nearest "
         << reference.params[j] << ")";
      throw GridMismatch(os.str());
    }
    // Tr(rho P) = (1 + a_ref . <sigma>)/2.
    const BlochVector b = bloch_from_state(record.states[i]);
    out.push_back(0.5 * (1.0 + reference.samples[j].dot(b)));
  }
  return out;
}

}  // namespace holonomy
