#pragma once

#include "holonomy/config.hpp"
#include "holonomy/dynamics.hpp"
#include "holonomy/emit.hpp"

namespace holonomy {

ParametricModel model_from_config(const ScenarioConfig& c);

struct ClassifyReport {
  HolonomyResult result;
  DirectorPath path;
};

/// Classifies the configured cycle. Requires a closed lambda range (whole
/// number of model periods); throws ConfigError otherwise.
ClassifyReport run_classify(const ScenarioConfig& c);

struct SimulateReport {
  Permutation verdict = Permutation::identity;
  bool diabatic_schedule = false;
  // Which projector family projector_fidelities tracks.
  std::string reference_family;
  double final_reference_fidelity = 0.0;
  double fidelity_start_branch = 0.0;     // vs the lambda-start branch
  double fidelity_opposite_branch = 0.0;  // vs its antipode
  double max_norm_drift = 0.0;
  EvolutionRecord record;
};

/// Evolves the configured scenario dynamically over one full cycle and
/// reports the permutation the final state projector realizes. Hamiltonian
/// models integrate the schedule; the kicked map applies a uniform ramp of
/// `kicks` applications. Fidelity is tracked against the continued
/// eigenprojector family (for a diabatic window on the perturbed model: the
/// unperturbed smooth branch it mimics).
SimulateReport run_simulate(const ScenarioConfig& c);

std::vector<SpectrumSample> spectrum_scan(const ScenarioConfig& c);

enum class SweepAxis { epsilon, rate, samples };
SweepAxis sweep_axis_from_string(const std::string& s);

struct SweepRow {
  double value = 0.0;
  Permutation verdict = Permutation::identity;
  double final_fidelity = 0.0;    // NaN for the samples axis
  double lz_estimate = 0.0;       // NaN for the samples axis
  double endpoint_defect = 0.0;   // NaN for the dynamic axes
};

/// Runs one scenario per grid value, concurrently up to the
/// HOLONOMY_LAB_THREADS cap, results ordered by grid index.
std::vector<SweepRow> run_sweep(const ScenarioConfig& c, SweepAxis axis,
                                const std::vector<double>& grid);

/// Concurrency cap for sweeps: min(grid size, HOLONOMY_LAB_THREADS if set,
/// hardware concurrency otherwise).
int sweep_thread_cap(std::size_t grid_size);

// Plot-ready tables.
Table classify_table(const ClassifyReport& r);
Table path_table(const DirectorPath& p);
Table simulate_summary_table(const SimulateReport& r);
Table timeseries_table(const EvolutionRecord& rec);
Table spectrum_table(const ParametricModel& m,
                     const std::vector<SpectrumSample>& rows);
Table sweep_table(const std::vector<SweepRow>& rows);

}  // namespace holonomy
