#include "holonomy/lift.hpp"

#include "holonomy/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace holonomy {

const char* to_string(Permutation p) {
  return p == Permutation::identity ? "identity" : "swap";
}

const char* to_string(HomotopyClass c) {
  return c == HomotopyClass::e_class ? "e_class" : "gamma_class";
}

BlochPath lift_path(const DirectorPath& path, const BlochVector& a0) {
  if (path.samples.empty()) {
    throw std::invalid_argument("lift_path: empty director path");
  }
  const double n0 = a0.norm();
  if (std::abs(n0 - 1.0) > 1e-6) {
    throw StartMismatch("lift_path: a0 is not a unit vector");
  }
  const Vector3d start = a0 / n0;
  if (director_distance(covering_projection(start), path.samples.front()) >
      kClosureTol) {
    throw StartMismatch(
        "lift_path: covering_projection(a0) does not match the first "
        "director of the path");
  }

  BlochPath out;
  out.params = path.params;
  out.samples.reserve(path.samples.size());
  out.samples.push_back(start);
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    const Vector3d& rep = path.samples[i].rep();
    const double overlap = out.samples.back().dot(rep);
    if (std::abs(overlap) < kStepCap) {
      std::ostringstream os;
      os << "lift_path: adjacent directors nearly orthogonal at sample " << i;
      if (i < path.params.size()) {
        os << " (param " << path.params[i] << ")";
      }
      os << ": |overlap| = " << std::abs(overlap)
         << " < " << kStepCap << "; refine the sampling";
      throw StepTooLarge(os.str());
    }
    out.samples.push_back(overlap >= 0.0 ? rep : Vector3d(-rep));
  }
  return out;
}

HolonomyResult classify_holonomy(const DirectorPath& path, const BlochVector& a0) {
  if (!path.closed) {
    throw NotClosed("classify_holonomy: path is not flagged closed");
  }
  if (!director_equal(path.samples.front(), path.samples.back())) {
    throw NotClosed(
        "classify_holonomy: closed flag set but first/last directors differ beyond "
        "closure tolerance");
  }

  const BlochPath lifted = lift_path(path, a0);

  HolonomyResult res;
  res.sample_count = lifted.samples.size();
  for (std::size_t i = 1; i < lifted.samples.size(); ++i) {
    const double overlap =
        std::abs(lifted.samples[i - 1].dot(lifted.samples[i]));
    res.min_adjacent_overlap = std::min(res.min_adjacent_overlap, overlap);
  }

  const Vector3d& start = lifted.samples.front();
  const Vector3d& end = lifted.samples.back();
  const double d_same = (end - start).norm();
  const double d_opposite = (end + start).norm();
  res.endpoint_defect = std::min(d_same, d_opposite);

  if (d_same <= kClosureTol) {
    res.permutation = Permutation::identity;
    res.homotopy_class = HomotopyClass::e_class;
  } else if (d_opposite <= kClosureTol) {
    res.permutation = Permutation::swap;
    res.homotopy_class = HomotopyClass::gamma_class;
  } else {
    std::ostringstream os;
    os << "classify_holonomy: lift endpoint resolves to neither +a0 nor -a0 "
          "(distance to +a0 = "
       << d_same << ", to -a0 = " << d_opposite << ")";
    throw EndpointUnresolved(os.str());
  }
  return res;
}

DirectorPath concatenate(const DirectorPath& p1, const DirectorPath& p2) {
  if (p1.samples.empty() || p2.samples.empty()) {
    throw std::invalid_argument("concatenate: empty director path");
  }
  if (!director_equal(p1.samples.back(), p2.samples.front())) {
    throw EndpointMismatch(
        "concatenate: first path ends away from the second path's start");
  }
  DirectorPath out = p1;
  const double shift = p1.params.back() - p2.params.front();
  for (std::size_t i = 1; i < p2.samples.size(); ++i) {
    out.samples.push_back(p2.samples[i]);
    out.params.push_back(p2.params[i] + shift);
  }
  out.closed = director_equal(out.samples.front(), out.samples.back());
  return out;
}

}  // namespace holonomy
