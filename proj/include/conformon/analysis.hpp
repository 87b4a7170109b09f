#pragma once

#include <span>
#include <vector>

#include "conformon/wave_field.hpp"

namespace conformon::analysis {

// Fraction of the peak amplitude tolerated at the grid edges before the
// localization moments are considered meaningless.
inline constexpr double kEdgeLeakFraction = 1e-3;

// Time series of diagnostics recorded while a field evolves.
struct EvolutionReport {
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<double> centers;
  std::vector<double> widths;
  std::vector<double> fidelities;
  bool boundary_leak_warning = false;
  double max_edge_abs = 0.0;
};

// Raw density moments with no validity guards; a zero field reports
// center = width = 0. Meant for bulk recording where the caller tracks
// leak status separately.
struct FieldMoments {
  double norm = 0.0;
  double center = 0.0;
  double width = 0.0;
};
FieldMoments field_moments(const WaveField& field);

// Integral of |psi|^2 over the periodic grid (rectangle rule).
double field_norm(const WaveField& field);

// First moment of |psi|^2. Throws on a zero field or when the edge
// amplitude exceeds kEdgeLeakFraction of the peak.
double localization_center(const WaveField& field);

// Root central second moment of |psi|^2, same preconditions as
// localization_center.
double localization_width(const WaveField& field);

// Overlap |<a,b>|^2 / (|a|^2 |b|^2), clamped to [0, 1]. The fields must
// share grid size and coordinate range.
double fidelity(const WaveField& a, const WaveField& b);

// Least-squares slope of center(t); needs at least two distinct times.
double envelope_velocity(std::span<const double> times,
                         std::span<const double> centers);
double envelope_velocity(const EvolutionReport& report);

}  // namespace conformon::analysis
