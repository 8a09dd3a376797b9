#include "holonomy/models.hpp"

#include "holonomy/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace holonomy {

namespace {

constexpr double kPi = std::numbers::pi;

void require_rank1_projector(const Matrix2c& p) {
  const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  const double idem = (p * p - p).cwiseAbs().maxCoeff();
  const double tr = std::abs(p.trace() - complexd(1.0, 0.0));
  if (herm > 1e-12 || idem > 1e-12 || tr > 1e-12) {
    throw std::invalid_argument(
        "floquet_map: kick operator must be a rank-1 projector");
  }
}

}  // namespace

ParametricModel ParametricModel::crossing() {
  ParametricModel m;
  m.kind_ = ModelKind::crossing;
  return m;
}

ParametricModel ParametricModel::perturbed(double epsilon) {
  if (epsilon <= 0.0) {
    throw NonPositiveInput("perturbed model requires epsilon > 0");
  }
  ParametricModel m;
  m.kind_ = ModelKind::perturbed;
  m.epsilon_ = epsilon;
  return m;
}

ParametricModel ParametricModel::floquet_map() {
  return floquet_map(0.5 * kPi * pauli(Axis::y),
                     0.5 * (Matrix2c::Identity() + pauli(Axis::x)));
}

ParametricModel ParametricModel::floquet_map(const Matrix2c& h0,
                                             const Matrix2c& kick_projector) {
  if (!is_hermitian(h0)) {
    throw NonHermitianInput("floquet_map: H0 must be Hermitian");
  }
  require_rank1_projector(kick_projector);
  ParametricModel m;
  m.kind_ = ModelKind::floquet_map;
  m.h0_ = h0;
  m.kick_ = kick_projector;
  return m;
}

double ParametricModel::period() const { return 2.0 * kPi; }

Matrix2c operator_at(const ParametricModel& m, double lambda) {
  switch (m.kind()) {
    case ModelKind::crossing:
      return 0.25 * ((1.0 + std::cos(lambda)) * pauli(Axis::y) +
                     std::sin(lambda) * pauli(Axis::z));
    case ModelKind::perturbed:
      return operator_at(ParametricModel::crossing(), lambda) +
             0.5 * m.epsilon() * pauli(Axis::x);
    case ModelKind::floquet_map:
    default:
      return expm_i_hermitian(m.h0(), 1.0) *
             expm_i_hermitian(m.kick(), lambda);
  }
}

BlochVector analytic_bloch_crossing(double lambda) {
  return BlochVector(0.0, std::cos(0.5 * lambda), std::sin(0.5 * lambda));
}

std::pair<double, double> energies_crossing(double lambda) {
  const double e = 0.5 * std::cos(0.5 * lambda);
  return {e, -e};
}

BlochVector analytic_bloch_floquet(double lambda) {
  return BlochVector(0.0, std::cos(0.5 * lambda), -std::sin(0.5 * lambda));
}

BlochVector branch_bloch(const ParametricModel& m, double lambda, Branch b) {
  const double sign = (b == Branch::upper) ? 1.0 : -1.0;
  switch (m.kind()) {
    case ModelKind::crossing: {
      // Smooth continuation: +a carries energy cos(lambda/2)/2, which is the
      // upper level only while that is non-negative.
      const Vector3d a = analytic_bloch_crossing(lambda);
      const double branch_sign = std::cos(0.5 * lambda) >= 0.0 ? 1.0 : -1.0;
      return sign * branch_sign * a;
    }
    case ModelKind::perturbed: {
      const HermitianEigs eig = eig_hermitian_2x2(operator_at(m, lambda));
      if (eig.degenerate()) {  // only reachable for epsilon below gap_tol
        std::ostringstream os;
        os << "branch_bloch: spectrum degenerate at lambda = " << lambda;
        throw DegeneracyOnPath(os.str());
      }
      return sign * (*eig.bloch);
    }
    case ModelKind::floquet_map:
    default: {
      const UnitaryEigs eig = eig_unitary_2x2(operator_at(m, lambda));
      if (eig.degenerate()) {
        std::ostringstream os;
        os << "branch_bloch: eigenphases degenerate at lambda = " << lambda;
        throw DegeneracyOnPath(os.str());
      }
      return sign * (*eig.bloch);
    }
  }
}

SpectrumSample spectrum_sample(const ParametricModel& m, double lambda) {
  SpectrumSample s;
  s.lambda = lambda;
  switch (m.kind()) {
    case ModelKind::crossing: {
      const auto [e1, e2] = energies_crossing(lambda);
      s.value1 = e1;
      s.value2 = e2;
      s.director = covering_projection(analytic_bloch_crossing(lambda));
      break;
    }
    case ModelKind::perturbed: {
      const HermitianEigs eig = eig_hermitian_2x2(operator_at(m, lambda));
      s.value1 = eig.e1;
      s.value2 = eig.e2;
      if (!eig.degenerate()) {
        s.director = covering_projection(*eig.bloch);
      }
      break;
    }
    case ModelKind::floquet_map:
    default: {
      const UnitaryEigs eig = eig_unitary_2x2(operator_at(m, lambda));
      s.value1 = eig.theta1;
      s.value2 = eig.theta2;
      if (!eig.degenerate()) {
        s.director = covering_projection(*eig.bloch);
      }
      break;
    }
  }
  return s;
}

DirectorPath director_path(const ParametricModel& m, double lambda_start,
                           double lambda_end, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("director_path: need at least 2 samples");
  }
  DirectorPath path;
  path.samples.reserve(static_cast<std::size_t>(n_samples));
  path.params.reserve(static_cast<std::size_t>(n_samples));
  const double span = lambda_end - lambda_start;
  for (int i = 0; i < n_samples; ++i) {
    const double lambda = lambda_start + span * i / (n_samples - 1);
    if (m.kind() == ModelKind::crossing) {
      path.samples.push_back(
          covering_projection(analytic_bloch_crossing(lambda)));
    } else {
      const SpectrumSample s = spectrum_sample(m, lambda);
      if (!s.director.has_value()) {
        std::ostringstream os;
        os << "director_path: spectral degeneracy at lambda = " << lambda;
        throw DegeneracyOnPath(os.str());
      }
      path.samples.push_back(*s.director);
    }
    path.params.push_back(lambda);
  }
  path.closed = std::abs(std::remainder(span, m.period())) <= 1e-9 &&
                director_equal(path.samples.front(), path.samples.back());
  return path;
}

}  // namespace holonomy
