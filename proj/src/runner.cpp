#include "holonomy/runner.hpp"

#include "holonomy/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace holonomy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

Branch branch_from_string(const std::string& s) {
  return s == "lower" ? Branch::lower : Branch::upper;
}

int auto_stride(double total_steps, int configured) {
  if (configured > 0) {
    return configured;
  }
  return std::max(1, static_cast<int>(total_steps / 2000.0));
}

SweepSchedule schedule_from_config(const ScenarioConfig& c) {
  if (c.schedule.kind == "uniform") {
    return SweepSchedule::uniform(c.schedule.total_time);
  }
  return SweepSchedule::diabatic_window(c.schedule.total_time,
                                        c.schedule.window_half_width,
                                        c.schedule.rate_multiplier);
}

void require_full_cycle(const ScenarioConfig& c) {
  if (std::abs(c.cycle.lambda_start) > 1e-12 ||
      std::abs(c.cycle.lambda_end - kTwoPi) > 1e-12) {
    throw ConfigError(
        "simulate: the schedule drives one full cycle, so cycle must be "
        "[0, 2pi]");
  }
}

void finish_verdict(SimulateReport& rep, const BlochVector& a0) {
  const BlochVector bf = bloch_from_state(rep.record.states.back());
  rep.fidelity_start_branch = 0.5 * (1.0 + bf.dot(a0));
  rep.fidelity_opposite_branch = 0.5 * (1.0 - bf.dot(a0));
  rep.verdict = rep.fidelity_opposite_branch > rep.fidelity_start_branch
                    ? Permutation::swap
                    : Permutation::identity;
  rep.final_reference_fidelity = rep.record.projector_fidelities.back();
  rep.max_norm_drift = rep.record.max_norm_drift;
}

SweepRow sweep_row(const ScenarioConfig& base, SweepAxis axis, double value);

}  // namespace

ParametricModel model_from_config(const ScenarioConfig& c) {
  if (c.model.kind == "crossing") {
    return ParametricModel::crossing();
  }
  if (c.model.kind == "perturbed") {
    return ParametricModel::perturbed(c.model.epsilon);
  }
  if (c.model.kind == "floquet_map") {
    const Vector3d h0_axis(c.model.h0_axis[0], c.model.h0_axis[1],
                           c.model.h0_axis[2]);
    const Vector3d kick_axis(c.model.kick_axis[0], c.model.kick_axis[1],
                             c.model.kick_axis[2]);
    return ParametricModel::floquet_map(
        c.model.h0_scale * pauli_dot(h0_axis.normalized()),
        0.5 * (Matrix2c::Identity() + pauli_dot(kick_axis.normalized())));
  }
  throw ConfigError("unknown model.kind: " + c.model.kind);
}

ClassifyReport run_classify(const ScenarioConfig& c) {
  validate(c);
  const ParametricModel model = model_from_config(c);
  DirectorPath path = director_path(model, c.cycle.lambda_start,
                                    c.cycle.lambda_end, c.cycle.samples);
  if (!path.closed) {
    throw ConfigError(
        "classify: lambda range must span a whole number of model periods");
  }
  const BlochVector a0 = branch_bloch(model, c.cycle.lambda_start,
                                      branch_from_string(c.initial_branch));
  ClassifyReport rep;
  rep.result = classify_holonomy(path, a0);
  rep.path = std::move(path);
  return rep;
}

SimulateReport run_simulate(const ScenarioConfig& c) {
  validate(c);
  const ParametricModel model = model_from_config(c);
  const Branch branch = branch_from_string(c.initial_branch);
  SimulateReport rep;

  if (model.kind() == ModelKind::floquet_map) {
    const double l0 = c.cycle.lambda_start;
    const double l1 = c.cycle.lambda_end;
    if (std::abs(std::remainder(l1 - l0, model.period())) > 1e-9) {
      throw ConfigError(
          "simulate: lambda range must span a whole number of model periods");
    }
    const int n = c.schedule.kicks;
    std::vector<double> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      seq[static_cast<std::size_t>(i)] = l0 + (l1 - l0) * i / n;
    }
    const BlochVector a0 = branch_bloch(model, l0, branch);
    rep.record = evolve_kicked(model, seq, state_from_bloch(a0),
                               auto_stride(n, c.output.record_stride));
    const BlochPath ref =
        lift_path(director_path(model, l0, l1, c.cycle.samples), a0);
    rep.record.projector_fidelities = fidelity_trace(rep.record, ref);
    rep.reference_family = "continued kick-map eigenprojector branch";
    finish_verdict(rep, a0);
    return rep;
  }

  require_full_cycle(c);
  const SweepSchedule schedule = schedule_from_config(c);
  const BlochVector a0 = branch_bloch(model, 0.0, branch);
  const double total_steps = schedule.total_time() / c.schedule.dt;
  rep.record =
      evolve_continuous(model, schedule, state_from_bloch(a0), c.schedule.dt,
                        auto_stride(total_steps, c.output.record_stride));
  rep.diabatic_schedule =
      schedule.kind() == SweepSchedule::Kind::diabatic_window;

  DirectorPath ref_path;
  BlochVector ref_a0;
  if (model.kind() == ModelKind::perturbed && rep.diabatic_schedule) {
    // A fast window makes the state cross diabatically, mimicking the smooth
    // eigenprojector branch of the unperturbed crossing Hamiltonian.
    ref_path = director_path(ParametricModel::crossing(), 0.0, kTwoPi,
                             c.cycle.samples);
    const Vector3d candidate = analytic_bloch_crossing(0.0);
    ref_a0 = a0.dot(candidate) >= 0.0 ? candidate : Vector3d(-candidate);
    rep.reference_family = "continued unperturbed crossing branch";
  } else {
    ref_path = director_path(model, 0.0, kTwoPi, c.cycle.samples);
    ref_a0 = a0;
    rep.reference_family = model.kind() == ModelKind::crossing
                               ? "continued crossing eigenprojector branch"
                               : "continued perturbed eigenprojector branch";
  }
  rep.record.projector_fidelities =
      fidelity_trace(rep.record, lift_path(ref_path, ref_a0));
  finish_verdict(rep, a0);
  return rep;
}

std::vector<SpectrumSample> spectrum_scan(const ScenarioConfig& c) {
  validate(c);
  const ParametricModel model = model_from_config(c);
  std::vector<SpectrumSample> rows;
  rows.reserve(static_cast<std::size_t>(c.cycle.samples));
  const double span = c.cycle.lambda_end - c.cycle.lambda_start;
  for (int i = 0; i < c.cycle.samples; ++i) {
    const double lambda =
        c.cycle.lambda_start + span * i / (c.cycle.samples - 1);
    rows.push_back(spectrum_sample(model, lambda));
  }
  return rows;
}

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "epsilon") {
    return SweepAxis::epsilon;
  }
  if (s == "rate") {
    return SweepAxis::rate;
  }
  if (s == "samples") {
    return SweepAxis::samples;
  }
  throw ConfigError("sweep axis must be epsilon, rate or samples, got: " + s);
}

int sweep_thread_cap(std::size_t grid_size) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HOLONOMY_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw ConfigError("HOLONOMY_LAB_THREADS must be a positive integer");
    }
    cap = static_cast<unsigned>(v);
  }
  return static_cast<int>(std::min<std::size_t>(cap, grid_size));
}

namespace {

SweepRow sweep_row(const ScenarioConfig& base, SweepAxis axis, double value) {
  SweepRow row;
  row.value = value;
  switch (axis) {
    case SweepAxis::epsilon: {
      ScenarioConfig cfg = base;
      cfg.model.epsilon = value;
      const SimulateReport rep = run_simulate(cfg);
      row.verdict = rep.verdict;
      row.final_fidelity = rep.final_reference_fidelity;
      row.lz_estimate = landau_zener_probability(
          value, schedule_from_config(cfg).inside_rate());
      row.endpoint_defect = kNaN;
      return row;
    }
    case SweepAxis::rate: {
      ScenarioConfig cfg = base;
      const SweepSchedule ref = schedule_from_config(base);
      const SweepSchedule sched = SweepSchedule::diabatic_window_from_rates(
          ref.outside_rate(), value, ref.half_width());
      cfg.schedule.total_time = sched.total_time();
      cfg.schedule.rate_multiplier = sched.rate_multiplier();
      const SimulateReport rep = run_simulate(cfg);
      row.verdict = rep.verdict;
      row.final_fidelity = rep.final_reference_fidelity;
      row.lz_estimate = landau_zener_probability(cfg.model.epsilon, value);
      row.endpoint_defect = kNaN;
      return row;
    }
    case SweepAxis::samples:
    default: {
      const auto n = static_cast<int>(std::llround(value));
      if (n < 2 || std::abs(value - n) > 1e-9) {
        throw ConfigError(
            "sweep: samples axis values must be whole numbers >= 2");
      }
      ScenarioConfig cfg = base;
      cfg.cycle.samples = n;
      const ClassifyReport rep = run_classify(cfg);
      row.verdict = rep.result.permutation;
      row.final_fidelity = kNaN;
      row.lz_estimate = kNaN;
      row.endpoint_defect = rep.result.endpoint_defect;
      return row;
    }
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& c, SweepAxis axis,
                                const std::vector<double>& grid) {
  validate(c);
  if (grid.size() < 2) {
    throw ConfigError("sweep: need at least 2 grid points");
  }
  if (axis == SweepAxis::epsilon || axis == SweepAxis::rate) {
    if (c.model.kind != "perturbed") {
      throw ConfigError("sweep: epsilon/rate axes require model.kind = "
                        "perturbed");
    }
    if (c.schedule.kind != "diabatic_window") {
      throw ConfigError(
          "sweep: epsilon/rate axes require a diabatic_window schedule");
    }
  }

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) {
        return;
      }
      try {
        rows[i] = sweep_row(c, axis, grid[i]);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    }
  };

  const int n_threads = sweep_thread_cap(grid.size());
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
  return rows;
}

Table classify_table(const ClassifyReport& r) {
  Table t;
  t.name = "classify_report";
  t.columns = {"permutation", "homotopy_class", "endpoint_defect",
               "min_adjacent_overlap", "samples"};
  t.rows.push_back({std::string(to_string(r.result.permutation)),
                    std::string(to_string(r.result.homotopy_class)),
                    r.result.endpoint_defect, r.result.min_adjacent_overlap,
                    static_cast<std::int64_t>(r.result.sample_count)});
  return t;
}

Table path_table(const DirectorPath& p) {
  Table t;
  t.name = "director_path";
  t.columns = {"lambda", "n_x", "n_y", "n_z"};
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    const Vector3d& n = p.samples[i].rep();
    t.rows.push_back({p.params[i], n.x(), n.y(), n.z()});
  }
  return t;
}

Table simulate_summary_table(const SimulateReport& r) {
  Table t;
  t.name = "summary";
  t.columns = {"verdict",
               "schedule",
               "reference_family",
               "final_reference_fidelity",
               "fidelity_start_branch",
               "fidelity_opposite_branch",
               "max_norm_drift"};
  t.rows.push_back(
      {std::string(to_string(r.verdict)),
       std::string(r.diabatic_schedule ? "diabatic_window" : "uniform"),
       r.reference_family, r.final_reference_fidelity,
       r.fidelity_start_branch, r.fidelity_opposite_branch,
       r.max_norm_drift});
  return t;
}

Table timeseries_table(const EvolutionRecord& rec) {
  Table t;
  t.name = "timeseries";
  t.columns = {"t",       "lambda",  "re_psi0", "im_psi0",
               "re_psi1", "im_psi1", "fidelity"};
  for (std::size_t i = 0; i < rec.states.size(); ++i) {
    const Vector2c& s = rec.states[i];
    const double fid = i < rec.projector_fidelities.size()
                           ? rec.projector_fidelities[i]
                           : kNaN;
    t.rows.push_back({rec.times[i], rec.lambdas[i], s(0).real(), s(0).imag(),
                      s(1).real(), s(1).imag(), fid});
  }
  return t;
}

Table spectrum_table(const ParametricModel& m,
                     const std::vector<SpectrumSample>& rows) {
  Table t;
  t.name = "spectrum";
  t.columns = m.kind() == ModelKind::floquet_map
                  ? std::vector<std::string>{"lambda", "theta1", "theta2"}
                  : std::vector<std::string>{"lambda", "e1", "e2"};
  for (const auto& s : rows) {
    t.rows.push_back({s.lambda, s.value1, s.value2});
  }
  return t;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table t;
  t.name = "sweep";
  t.columns = {"value", "verdict", "final_fidelity", "lz_estimate",
               "endpoint_defect"};
  for (const auto& r : rows) {
    t.rows.push_back({r.value, std::string(to_string(r.verdict)),
                      r.final_fidelity, r.lz_estimate, r.endpoint_defect});
  }
  return t;
}

}  // namespace holonomy
