#include "lhm/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "lhm/steady_state.hpp"

namespace lhm {

void SweepSpec::validate(std::size_t point_cap) const {
  if (!std::isfinite(delta1_min) || !std::isfinite(delta1_max) || !(delta1_min < delta1_max)) {
    raise(ErrorKind::ValidationError, "sweep requires finite delta1_min < delta1_max");
  }
  if (points < 2) raise(ErrorKind::ValidationError, "sweep requires points >= 2");
  if (points > point_cap) {
    raise(ErrorKind::ValidationError,
          "sweep points " + std::to_string(points) + " exceed cap " + std::to_string(point_cap));
  }
  params.validate();
  medium.validate();
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  const double span = delta1_max - delta1_min;
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = delta1_min + span * (static_cast<double>(i) / last);
  }
  g.back() = delta1_max;
  return g;
}

namespace detail {

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
  unsigned n = requested;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  if (work_items < n) n = static_cast<unsigned>(std::max<std::size_t>(work_items, 1));
  return n;
}

}  // namespace detail

unsigned threads_from_environment() {
  const char* raw = std::getenv("LHM_SIM_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) return 0;
  return value;
}

CoherenceCurve coherence_sweep(const SystemParams& params, std::span<const double> delta1_grid,
                               const ExecutionOptions& exec) {
  CoherenceCurve out{params, std::vector<CoherencePoint>(delta1_grid.size())};
  detail::parallel_for(delta1_grid.size(), exec.threads, [&](std::size_t i) {
    CoherencePoint& pt = out.points[i];
    pt.delta1 = delta1_grid[i];
    SystemParams p = params;
    p.delta1 = delta1_grid[i];
    try {
      const SteadyStateResult ss = steady_state_linear(p);
      pt.rho12 = ss.rho.at(1, 2);
      pt.rho24 = ss.rho.at(2, 4);
    } catch (const Error& e) {
      pt.error = e.kind();
    }
  });
  return out;
}

ResponseCurve responses_from_coherences(const CoherenceCurve& coherences, const MediumParams& medium,
                                        Branch branch) {
  ResponseCurve curve;
  curve.points.reserve(coherences.points.size());
  SystemParams p = coherences.params;
  for (const CoherencePoint& c : coherences.points) {
    CurvePoint pt;
    pt.delta1 = c.delta1;
    if (c.error) {
      pt.error = c.error;
    } else {
      p.delta1 = c.delta1;
      try {
        pt.response = response_from_coherences(c.rho12, c.rho24, p, medium, branch);
      } catch (const Error& e) {
        pt.error = e.kind();
      }
    }
    curve.points.push_back(pt);
  }
  return curve;
}

ResponseCurve sweep(const SweepSpec& spec, const ExecutionOptions& exec) {
  spec.validate();
  const std::vector<double> grid = spec.grid();
  return responses_from_coherences(coherence_sweep(spec.params, grid, exec), spec.medium, spec.branch);
}

std::vector<PhasePoint> phase_scan(const SystemParams& params, const MediumParams& medium,
                                   std::span<const double> phi3_values, double delta1, Branch branch) {
  if (phi3_values.empty()) raise(ErrorKind::ValidationError, "phase scan needs at least one phase");
  params.validate();
  medium.validate();
  std::vector<PhasePoint> out;
  out.reserve(phi3_values.size());
  for (double phi : phi3_values) {
    PhasePoint pt;
    pt.phi3 = phi;
    SystemParams p = params;
    p.phi3 = phi;
    p.delta1 = delta1;
    try {
      pt.response = respond(p, medium, branch);
    } catch (const Error& e) {
      pt.error = e.kind();
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace lhm
