#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lhm/em_response.hpp"
#include "lhm/errors.hpp"
#include "lhm/params.hpp"

namespace lhm {

inline constexpr std::size_t kDefaultPointCap = 1'000'000;
inline constexpr std::size_t kDefaultSweepPoints = 3001;

struct SweepSpec {
  double delta1_min = -150.0;
  double delta1_max = 150.0;
  std::size_t points = kDefaultSweepPoints;
  SystemParams params;  // delta1 is overwritten per point
  MediumParams medium;
  Branch branch = Branch::Paper;

  void validate(std::size_t point_cap = kDefaultPointCap) const;
  // Uniform grid; the last point is exactly delta1_max.
  std::vector<double> grid() const;
};

// One sweep point: either a response or the error kind that made it undefined.
struct CurvePoint {
  double delta1 = 0.0;
  std::optional<MediumResponse> response;
  std::optional<ErrorKind> error;

  bool defined() const { return response.has_value(); }
  bool operator==(const CurvePoint&) const = default;
};

struct ResponseCurve {
  std::vector<CurvePoint> points;

  bool operator==(const ResponseCurve&) const = default;
};

// Steady-state coherences along a detuning grid. The medium-independent part
// of a sweep; calibration reuses it for every candidate dipole pair.
struct CoherencePoint {
  double delta1 = 0.0;
  cplx rho12;
  cplx rho24;
  std::optional<ErrorKind> error;
};

struct CoherenceCurve {
  SystemParams params;  // delta1 unused
  std::vector<CoherencePoint> points;
};

struct ExecutionOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Reads LHM_SIM_THREADS; unset, empty or unparsable means 0 (auto).
unsigned threads_from_environment();

CoherenceCurve coherence_sweep(const SystemParams& params, std::span<const double> delta1_grid,
                               const ExecutionOptions& exec = {});

ResponseCurve responses_from_coherences(const CoherenceCurve& coherences, const MediumParams& medium,
                                        Branch branch);

// Per-point failures become undefined markers; the sweep never aborts on them.
ResponseCurve sweep(const SweepSpec& spec, const ExecutionOptions& exec = {});

struct PhasePoint {
  double phi3 = 0.0;
  std::optional<MediumResponse> response;
  std::optional<ErrorKind> error;
};

// Responses at a fixed probe detuning across coupling phases.
std::vector<PhasePoint> phase_scan(const SystemParams& params, const MediumParams& medium,
                                   std::span<const double> phi3_values, double delta1,
                                   Branch branch = Branch::Paper);

namespace detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Output placement
// is the caller's job; completion order never matters.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn);

unsigned resolve_threads(unsigned requested, std::size_t work_items);

}  // namespace detail

}  // namespace lhm

#include "lhm/detail/parallel_for.hpp"
