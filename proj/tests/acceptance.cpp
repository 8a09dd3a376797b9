// Acceptance suite: runs every acceptance criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion (raw measured values included).
// Exits nonzero if any criterion fails. argv[1] is the CLI binary, used by
// the determinism criterion.

#include "holonomy/dynamics.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/runner.hpp"

#include "support.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace holonomy;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = testsupport::kPi;
constexpr double kTwoPi = 2.0 * testsupport::kPi;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw Failure(what);
  }
}

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Shared across criteria 5 and 8 (the longest bundled run).
std::optional<SimulateReport> adiabatic_run;

const SimulateReport& run_adiabatic() {
  if (!adiabatic_run.has_value()) {
    ScenarioConfig c;
    c.model.kind = "perturbed";
    c.model.epsilon = 0.1;
    c.schedule.kind = "uniform";
    c.schedule.total_time = 2000.0;
    c.schedule.dt = 0.01;
    adiabatic_run = run_simulate(c);
  }
  return *adiabatic_run;
}

// Window fixed by the transition estimate: the inside rate puts the estimate
// just above 0.95 and the window spans the transition zone of that rate.
ScenarioConfig diabatic_config() {
  ScenarioConfig c;
  c.model.kind = "perturbed";
  c.model.epsilon = 0.03;
  c.schedule.kind = "diabatic_window";
  c.schedule.total_time = 1727.0;
  c.schedule.window_half_width = 0.45;
  c.schedule.rate_multiplier = 22.0;
  return c;
}

ScenarioConfig sweep_base_config() {
  ScenarioConfig c;
  c.model.kind = "perturbed";
  c.model.epsilon = 0.1;
  c.schedule.kind = "diabatic_window";
  c.schedule.total_time = 1825.0;
  c.schedule.window_half_width = 0.3;
  c.schedule.rate_multiplier = 32.0;
  return c;
}

// ---------------------------------------------------------------------------

std::string criterion_1_projector_identities() {
  auto gen = testsupport::rng(101);
  double worst_structure = 0.0;
  double worst_roundtrip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vector3d a = testsupport::random_unit_vector(gen);
    const ProjectorPair p = projectors_from_bloch(a);
    worst_structure = std::max({worst_structure,
                                max_abs(p.p1 * p.p1 - p.p1),
                                max_abs(p.p2 * p.p2 - p.p2),
                                max_abs(p.p1 * p.p2),
                                max_abs(p.p1 + p.p2 - Matrix2c::Identity())});
    worst_roundtrip = std::max(worst_roundtrip,
                               (bloch_from_projector(p.p1) - a).norm());
  }
  require(worst_structure <= 1e-12,
          "projector structure deviation " + fmt(worst_structure));
  require(worst_roundtrip <= 1e-11,
          "bloch round-trip deviation " + fmt(worst_roundtrip));
  return "structure<=" + fmt(worst_structure) +
         ", roundtrip<=" + fmt(worst_roundtrip);
}

std::string criterion_2_crossing_spectrum() {
  const ParametricModel m = ParametricModel::crossing();
  auto gen = testsupport::rng(102);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  double worst = 0.0;
  int tested = 0;
  while (tested < 1000) {
    const double lambda = u(gen);
    if (std::abs(lambda - kPi) < 1e-3) {
      continue;  // stay off the crossing
    }
    ++tested;
    const auto [e1, e2] = energies_crossing(lambda);
    const HermitianEigs eig = eig_hermitian_2x2(operator_at(m, lambda));
    const double direct = std::max(std::abs(e1 - eig.e1),
                                   std::abs(e2 - eig.e2));
    const double swapped = std::max(std::abs(e1 - eig.e2),
                                    std::abs(e2 - eig.e1));
    worst = std::max(worst, std::min(direct, swapped));
  }
  require(worst <= 1e-11, "branch mismatch " + fmt(worst));

  const HermitianEigs at_pi = eig_hermitian_2x2(operator_at(m, kPi));
  const double gap = at_pi.e1 - at_pi.e2;
  require(gap < 1e-12, "crossing gap " + fmt(gap));
  return "branch dev<=" + fmt(worst) + ", gap(pi)=" + fmt(gap);
}

std::string criterion_3_open_lift() {
  const DirectorPath once =
      director_path(ParametricModel::crossing(), 0.0, kTwoPi, 401);
  const BlochPath lifted = lift_path(once, Vector3d(0, 1, 0));
  const double end_dev = (lifted.samples.back() - Vector3d(0, -1, 0)).norm();
  require(end_dev <= 1e-6, "lift endpoint deviation " + fmt(end_dev));

  const HolonomyResult h1 = classify_holonomy(once, Vector3d(0, 1, 0));
  require(h1.permutation == Permutation::swap, "single cycle must swap");

  const DirectorPath twice =
      director_path(ParametricModel::crossing(), 0.0, 2.0 * kTwoPi, 801);
  const HolonomyResult h2 = classify_holonomy(twice, Vector3d(0, 1, 0));
  require(h2.permutation == Permutation::identity,
          "doubled cycle must be the identity");
  require(h2.endpoint_defect <= 1e-6,
          "doubled-cycle defect " + fmt(h2.endpoint_defect));
  return "endpoint dev=" + fmt(end_dev) +
         ", doubled defect=" + fmt(h2.endpoint_defect);
}

std::string criterion_4_kick_map() {
  const ParametricModel m = ParametricModel::floquet_map();
  double worst = 0.0;
  for (int i = 0; i < 401; ++i) {
    const double lambda = kTwoPi * i / 400.0;
    const UnitaryEigs eig = eig_unitary_2x2(operator_at(m, lambda));
    require(!eig.degenerate(), "unexpected quasi-energy degeneracy");
    worst = std::max(
        worst,
        director_distance(covering_projection(*eig.bloch),
                          covering_projection(analytic_bloch_floquet(lambda))));
  }
  require(worst <= 1e-8, "eigen-director deviation " + fmt(worst));

  ScenarioConfig c;
  c.model.kind = "floquet_map";
  const ClassifyReport cls = run_classify(c);
  require(cls.result.permutation == Permutation::swap,
          "kick-map cycle must classify as swap");

  const SimulateReport sim = run_simulate(c);  // 10^4 kicks by default
  require(sim.fidelity_opposite_branch >= 0.99,
          "kicked final fidelity vs opposite projector " +
              fmt(sim.fidelity_opposite_branch));
  require(sim.verdict == Permutation::swap, "kicked run must swap");
  return "director dev<=" + fmt(worst) +
         ", kicked opposite fidelity=" + fmt(sim.fidelity_opposite_branch);
}

std::string criterion_5_adiabatic_identity() {
  const SimulateReport& rep = run_adiabatic();
  require(rep.verdict == Permutation::identity,
          "adiabatic sweep must keep its branch");
  require(rep.final_reference_fidelity >= 0.99,
          "adiabatic tracking fidelity " + fmt(rep.final_reference_fidelity));
  return "fidelity=" + fmt(rep.final_reference_fidelity) +
         ", start-branch fidelity=" + fmt(rep.fidelity_start_branch);
}

std::string criterion_6_diabatic_swap() {
  const ScenarioConfig c = diabatic_config();
  const SweepSchedule sched = SweepSchedule::diabatic_window(
      c.schedule.total_time, c.schedule.window_half_width,
      c.schedule.rate_multiplier);
  const double lz =
      landau_zener_probability(c.model.epsilon, sched.inside_rate());
  require(lz > 0.95, "window not fast enough: estimate " + fmt(lz));

  const SimulateReport rep = run_simulate(c);
  require(rep.final_reference_fidelity >= 0.9,
          "diabatic fidelity vs unperturbed branch " +
              fmt(rep.final_reference_fidelity));
  require(rep.verdict == Permutation::swap, "diabatic run must swap");
  return "lz=" + fmt(lz) +
         ", fidelity=" + fmt(rep.final_reference_fidelity);
}

std::string criterion_7_homotopy_robustness() {
  auto gen = testsupport::rng(107);
  const DirectorPath gamma =
      director_path(ParametricModel::crossing(), 0.0, kTwoPi, 401);
  const DirectorPath e_cycle =
      testsupport::based_e_cycle(Vector3d(0, 1, 0), 0.15, 401);
  const Vector3d a0(0, 1, 0);
  for (int i = 0; i < 100; ++i) {
    const DirectorPath g =
        testsupport::perturb_closed_path(gamma, 0.049, gen);
    require(classify_holonomy(g, a0).permutation == Permutation::swap,
            "perturbed gamma cycle changed verdict at trial " +
                std::to_string(i));
    const DirectorPath e =
        testsupport::perturb_closed_path(e_cycle, 0.049, gen);
    require(classify_holonomy(e, a0).permutation == Permutation::identity,
            "perturbed e cycle changed verdict at trial " +
                std::to_string(i));
  }
  return "200 perturbed cycles, all verdicts unchanged";
}

std::string criterion_8_integrator_quality() {
  const SimulateReport& rep = run_adiabatic();
  require(rep.max_norm_drift <= 1e-9,
          "norm drift " + fmt(rep.max_norm_drift));

  const ParametricModel m = ParametricModel::perturbed(0.1);
  const SweepSchedule sched = SweepSchedule::uniform(20.0);
  const Vector2c psi0 =
      state_from_bloch(branch_bloch(m, 0.0, Branch::upper));
  const auto final_state = [&](double dt) {
    return evolve_continuous(m, sched, psi0, dt, 1 << 20).states.back();
  };
  const Vector2c reference = final_state(0.0025);
  const double err_coarse = (final_state(0.02) - reference).norm();
  const double err_fine = (final_state(0.01) - reference).norm();
  const double ratio = err_coarse / err_fine;
  require(ratio >= 2.5 && ratio <= 6.0,
          "convergence ratio per dt halving " + fmt(ratio));
  return "norm drift=" + fmt(rep.max_norm_drift) +
         ", convergence ratio=" + fmt(ratio);
}

std::string criterion_9_determinism(const char* bin) {
  // Every bundled scenario, emitted twice through the library pipeline.
  std::vector<std::pair<std::string, std::function<std::string()>>> runs;

  const auto classify_bytes = [](ScenarioConfig c) {
    return [c] {
      const ClassifyReport rep = run_classify(c);
      return table_to_csv(classify_table(rep), config_hash(c)) +
             table_to_csv(path_table(rep.path), config_hash(c));
    };
  };
  const auto simulate_bytes = [](ScenarioConfig c) {
    return [c] {
      const SimulateReport rep = run_simulate(c);
      return table_to_csv(timeseries_table(rep.record), config_hash(c)) +
             table_to_csv(simulate_summary_table(rep), config_hash(c));
    };
  };
  const auto spectrum_bytes = [](ScenarioConfig c) {
    return [c] {
      return table_to_csv(
          spectrum_table(model_from_config(c), spectrum_scan(c)),
          config_hash(c));
    };
  };
  const auto sweep_bytes = [](ScenarioConfig c, SweepAxis axis) {
    return [c, axis] {
      const auto rows = run_sweep(c, axis, c.sweep.values);
      return table_to_csv(sweep_table(rows), config_hash(c));
    };
  };

  ScenarioConfig crossing;
  runs.emplace_back("classify crossing", classify_bytes(crossing));
  ScenarioConfig doubled = crossing;
  doubled.cycle.lambda_end = 2.0 * kTwoPi;
  doubled.cycle.samples = 801;
  runs.emplace_back("classify doubled", classify_bytes(doubled));
  ScenarioConfig perturbed = crossing;
  perturbed.model.kind = "perturbed";
  runs.emplace_back("classify perturbed", classify_bytes(perturbed));
  ScenarioConfig floquet = crossing;
  floquet.model.kind = "floquet_map";
  runs.emplace_back("classify floquet", classify_bytes(floquet));

  runs.emplace_back("simulate crossing", simulate_bytes(crossing));
  ScenarioConfig adiabatic = perturbed;
  runs.emplace_back("simulate adiabatic", simulate_bytes(adiabatic));
  runs.emplace_back("simulate diabatic", simulate_bytes(diabatic_config()));
  runs.emplace_back("simulate kicked", simulate_bytes(floquet));

  runs.emplace_back("spectrum crossing", spectrum_bytes(crossing));
  runs.emplace_back("spectrum perturbed", spectrum_bytes(perturbed));
  runs.emplace_back("spectrum floquet", spectrum_bytes(floquet));

  ScenarioConfig eps_sweep = sweep_base_config();
  eps_sweep.sweep.axis = "epsilon";
  eps_sweep.sweep.values = default_sweep_values("epsilon");
  runs.emplace_back("sweep epsilon", sweep_bytes(eps_sweep,
                                                 SweepAxis::epsilon));
  ScenarioConfig rate_sweep = sweep_base_config();
  rate_sweep.sweep.axis = "rate";
  rate_sweep.sweep.values = default_sweep_values("rate");
  runs.emplace_back("sweep rate", sweep_bytes(rate_sweep, SweepAxis::rate));
  ScenarioConfig samples_sweep = crossing;
  samples_sweep.sweep.axis = "samples";
  samples_sweep.sweep.values = default_sweep_values("samples");
  runs.emplace_back("sweep samples",
                    sweep_bytes(samples_sweep, SweepAxis::samples));

  for (const auto& [name, render] : runs) {
    const std::string first = render();
    const std::string second = render();
    require(first == second, name + ": repeated run bytes differ");
    require(!first.empty(), name + ": no output produced");
  }

  // And through the actual binary: same config both times (the output
  // directory is part of the hashed config, so reruns share it).
  require(bin != nullptr, "CLI binary path missing (argv[1])");
  const fs::path work = "acceptance_out";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string quoted = std::string("\"") + bin + "\"";
  const std::string cmd = quoted + " classify --emit-path --out " +
                          (work / "r").string() + " > /dev/null";
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const auto run_once = [&] {
    const int status = std::system(cmd.c_str());
    require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "CLI classify run failed");
  };
  run_once();
  const std::string report1 = slurp(work / "r" / "classify_report.csv");
  const std::string path1 = slurp(work / "r" / "director_path.csv");
  require(!report1.empty() && !path1.empty(), "missing CLI output files");
  run_once();
  require(report1 == slurp(work / "r" / "classify_report.csv"),
          "CLI reruns differ in classify_report.csv");
  require(path1 == slurp(work / "r" / "director_path.csv"),
          "CLI reruns differ in director_path.csv");
  fs::remove_all(work);
  return std::to_string(runs.size()) + " scenarios byte-stable (+ CLI rerun)";
}

}  // namespace

int main(int argc, char** argv) {
  const char* bin = argc > 1 ? argv[1] : nullptr;

  const std::vector<std::pair<std::string, std::function<std::string()>>>
      criteria = {
          {"1. eigenprojector identities and round-trip",
           criterion_1_projector_identities},
          {"2. crossing-model spectrum and exact degeneracy",
           criterion_2_crossing_spectrum},
          {"3. open lift: swap once, identity when doubled",
           criterion_3_open_lift},
          {"4. kick-map eigen-directors, classification, slow kicks",
           criterion_4_kick_map},
          {"5. avoided crossing: adiabatic sweep keeps the identity",
           criterion_5_adiabatic_identity},
          {"6. diabatic window recovers the swap",
           criterion_6_diabatic_swap},
          {"7. verdicts invariant under smooth closed perturbations",
           criterion_7_homotopy_robustness},
          {"8. integrator norm drift and convergence order",
           criterion_8_integrator_quality},
          {"9. byte-identical repeated runs",
           [bin] { return criterion_9_determinism(bin); }},
      };

  int failures = 0;
  for (const auto& [name, body] : criteria) {
    try {
      const std::string detail = body();
      std::cout << "PASS  " << name;
      if (!detail.empty()) {
        std::cout << "  [" << detail << "]";
      }
      std::cout << "\n";
    } catch (const std::exception& e) {
      std::cout << "FAIL  " << name << "  [" << e.what() << "]\n";
      ++failures;
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
