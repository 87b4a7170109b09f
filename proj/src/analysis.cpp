#include "conformon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace conformon::analysis {

FieldMoments field_moments(const WaveField& field) {
  const double h = field.spacing();
  double norm = 0.0, first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double d = std::norm(field.values[i]);
    const double s1 = field.coord(i);
    norm += d;
    first += s1 * d;
    second += s1 * s1 * d;
  }
  FieldMoments m;
  m.norm = norm * h;
  if (norm > 0.0) {
    m.center = first / norm;
    const double var = second / norm - m.center * m.center;
    m.width = std::sqrt(std::max(var, 0.0));
  }
  return m;
}

namespace {

void require_localizable(const WaveField& field) {
  double peak = 0.0;
  for (const auto& v : field.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0)
    throw std::invalid_argument("localization moments undefined for a zero field");
  const double edge = std::max(std::abs(field.values.front()),
                               std::abs(field.values.back()));
  if (edge > kEdgeLeakFraction * peak)
    throw std::runtime_error(
        "localization moments unreliable: field amplitude at the grid edge "
        "exceeds the leak threshold");
}

}  // namespace

double field_norm(const WaveField& field) {
  double acc = 0.0;
  for (const auto& v : field.values) acc += std::norm(v);
  return acc * field.spacing();
}

double localization_center(const WaveField& field) {
  require_localizable(field);
  return field_moments(field).center;
}

double localization_width(const WaveField& field) {
  require_localizable(field);
  return field_moments(field).width;
}

double fidelity(const WaveField& a, const WaveField& b) {
  if (a.size() != b.size() || a.s1_min != b.s1_min || a.s1_max != b.s1_max)
    throw std::invalid_argument("fidelity: fields must share the same grid");
  std::complex<double> inner = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    inner += std::conj(a.values[i]) * b.values[i];
    na += std::norm(a.values[i]);
    nb += std::norm(b.values[i]);
  }
  if (na <= 0.0 || nb <= 0.0)
    throw std::invalid_argument("fidelity undefined for a zero field");
  return std::clamp(std::norm(inner) / (na * nb), 0.0, 1.0);
}

double envelope_velocity(std::span<const double> times,
                         std::span<const double> centers) {
  if (times.size() != centers.size())
    throw std::invalid_argument("envelope_velocity: mismatched sample counts");
  if (times.size() < 2)
    throw std::invalid_argument("envelope_velocity: need at least two samples");

  const double n = static_cast<double>(times.size());
  double t_mean = 0.0, c_mean = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    t_mean += times[i];
    c_mean += centers[i];
  }
  t_mean /= n;
  c_mean /= n;

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double dt = times[i] - t_mean;
    num += dt * (centers[i] - c_mean);
    den += dt * dt;
  }
  if (den == 0.0)
    throw std::invalid_argument("envelope_velocity: all sample times coincide");
  return num / den;
}

double envelope_velocity(const EvolutionReport& report) {
  return envelope_velocity(std::span<const double>(report.times),
                           std::span<const double>(report.centers));
}

}  // namespace conformon::analysis
