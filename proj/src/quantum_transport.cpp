#include "conformon/quantum_transport.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "conformon/numeric.hpp"

namespace conformon::quantum {

DimensionlessConvention::ScaledPoint DimensionlessConvention::to_scaled(
    const LabPoint& p) const {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("DimensionlessConvention: hbar and mass must be positive");
  return {p.s / std::sqrt(2.0), hbar / (4.0 * mass) * p.t};
}

DimensionlessConvention::LabPoint DimensionlessConvention::to_lab(
    const ScaledPoint& p) const {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("DimensionlessConvention: hbar and mass must be positive");
  return {std::sqrt(2.0) * p.s1, 4.0 * mass / hbar * p.u};
}

double DimensionlessConvention::potential_prefactor() const {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("DimensionlessConvention: hbar and mass must be positive");
  return hbar * hbar / (2.0 * mass);
}

double effective_potential(double k, double tau0, double prefactor) {
  if (!(prefactor > 0.0))
    throw std::invalid_argument("effective_potential: prefactor must be positive");
  return prefactor * (-0.25 * k * k + 0.5 * tau0 * tau0);
}

WaveField gauge_transform(const WaveField& psi, double tau0, double u,
                          GaugeDirection direction) {
  const double angle = -tau0 * tau0 * u;
  const auto factor = std::polar(1.0, direction == GaugeDirection::Forward
                                          ? angle
                                          : -angle);
  WaveField out = psi;
  for (auto& v : out.values) v *= factor;
  return out;
}

std::complex<double> analytic_breather(double alpha, double s1, double u) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("analytic_breather: alpha must be >= 0");
  const double root = std::sqrt(alpha);
  return 2.0 * root * sech(root * s1) * std::polar(1.0, alpha * u);
}

SolitonParams soliton_parameters(double alpha, double v) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("soliton_parameters: alpha must be >= 0");
  SolitonParams p;
  p.alpha = alpha;
  p.v = v;
  p.lambda = v / 2.0;
  p.mu = alpha - p.lambda * p.lambda;
  return p;
}

std::complex<double> analytic_envelope_soliton(const SolitonParams& p,
                                               double s1, double u) {
  const double root = std::sqrt(p.alpha);
  const double envelope = 2.0 * root * sech(root * (s1 - p.v * u));
  return envelope * std::polar(1.0, p.lambda * s1 + p.mu * u);
}

double carrier_velocity(const SolitonParams& p) {
  if (p.v == 0.0)
    throw std::invalid_argument("carrier_velocity: undefined at v = 0");
  return (p.v * p.v - 4.0 * p.alpha) / (2.0 * p.v);
}

double carrier_velocity_product(const SolitonParams& p) {
  return p.v * (p.v - 2.0 * carrier_velocity(p));
}

std::complex<double> analytic_gauged_soliton(const SolitonParams& p,
                                             double tau0, double s1,
                                             double u) {
  return analytic_envelope_soliton(p, s1, u) *
         std::polar(1.0, -tau0 * tau0 * u);
}

double kovalevskaya_curvature(double alpha, double v, double s1, double u) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("kovalevskaya_curvature: alpha must be >= 0");
  const double root = std::sqrt(alpha);
  return 2.0 * root * sech(root * (s1 - v * u));
}

namespace {

// FFTW plan creation and destruction share a global planner, so both are
// serialized; execution on distinct plans is safe concurrently.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Spectral1D {
 public:
  explicit Spectral1D(std::size_t n) : n_(n) {
    buf_ = fftw_alloc_complex(n);
    if (!buf_) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_FORWARD,
                            FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }

  Spectral1D(const Spectral1D&) = delete;
  Spectral1D& operator=(const Spectral1D&) = delete;

  ~Spectral1D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(buf_);
  }

  void forward(std::vector<std::complex<double>>& v) {
    std::memcpy(buf_, v.data(), n_ * sizeof(fftw_complex));
    fftw_execute(fwd_);
    std::memcpy(v.data(), buf_, n_ * sizeof(fftw_complex));
  }

  void inverse(std::vector<std::complex<double>>& v) {
    std::memcpy(buf_, v.data(), n_ * sizeof(fftw_complex));
    fftw_execute(inv_);
    std::memcpy(v.data(), buf_, n_ * sizeof(fftw_complex));
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& z : v) z *= scale;
  }

 private:
  std::size_t n_;
  fftw_complex* buf_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

double edge_amplitude(const WaveField& f) {
  return std::max(std::abs(f.values.front()), std::abs(f.values.back()));
}

// Common Strang loop: half potential, full kinetic, half potential. The
// potential substep is supplied as a callable applying the phase for
// duration du/2 with the midpoint time of that half step.
template <typename HalfPotential>
EvolutionResult run_split(const WaveField& psi0, double du,
                          std::size_t n_steps, const EvolveOptions& options,
                          HalfPotential&& half_potential) {
  psi0.validate();
  if (!(du > 0.0)) throw std::invalid_argument("evolution step du must be positive");
  if (options.record_every == 0)
    throw std::invalid_argument("record_every must be at least 1");
  if (edge_amplitude(psi0) >= kInitialEdgeLevel)
    throw std::invalid_argument(
        "initial field is not negligible at the grid boundary; widen the domain");

  WaveField field = psi0;
  const std::size_t n = field.size();
  analysis::EvolutionReport report;
  report.max_edge_abs = edge_amplitude(field);

  // exp(-i q^2 du) per wavenumber, q = 2 pi m / L with signed mode index m.
  std::vector<std::complex<double>> kinetic(n);
  const double q0 = 2.0 * kPi / field.length();
  for (std::size_t j = 0; j < n; ++j) {
    const double m = (j < n / 2) ? static_cast<double>(j)
                                 : static_cast<double>(j) - static_cast<double>(n);
    const double q = q0 * m;
    kinetic[j] = std::polar(1.0, -q * q * du);
  }

  Spectral1D fft(n);

  const auto record = [&](double u) {
    const analysis::FieldMoments m = analysis::field_moments(field);
    report.times.push_back(u);
    report.norms.push_back(m.norm);
    report.centers.push_back(m.center);
    report.widths.push_back(m.width);
    if (options.oracle) {
      const WaveField ref = sample_field(
          n, field.s1_min, field.s1_max,
          [&](double s1) { return options.oracle(s1, u); });
      report.fidelities.push_back(analysis::fidelity(field, ref));
    }
    if (options.on_record) options.on_record(field, u);
  };

  record(0.0);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double u_prev = static_cast<double>(i - 1) * du;
    half_potential(field, u_prev + 0.25 * du);
    fft.forward(field.values);
    for (std::size_t j = 0; j < n; ++j) field.values[j] *= kinetic[j];
    fft.inverse(field.values);
    half_potential(field, u_prev + 0.75 * du);

    const double edge = edge_amplitude(field);
    report.max_edge_abs = std::max(report.max_edge_abs, edge);
    if (edge > kLeakWarnLevel) report.boundary_leak_warning = true;

    if (i % options.record_every == 0 || i == n_steps)
      record(static_cast<double>(i) * du);
  }
  return {std::move(field), std::move(report)};
}

}  // namespace

EvolutionResult evolve_linear(const WaveField& psi0,
                              const CurvatureProfile& potential_source,
                              double du, std::size_t n_steps,
                              const EvolveOptions& options) {
  if (!potential_source.time_dependent()) {
    // Static potential: the half-step phase factor is the same for every
    // substep, so freeze it once.
    std::vector<std::complex<double>> phase(psi0.size());
    for (std::size_t i = 0; i < psi0.size(); ++i) {
      const double k = potential_source(psi0.coord(i));
      phase[i] = std::polar(1.0, 0.5 * k * k * 0.5 * du);
    }
    return run_split(psi0, du, n_steps, options,
                     [&phase](WaveField& f, double) {
                       for (std::size_t i = 0; i < f.size(); ++i)
                         f.values[i] *= phase[i];
                     });
  }
  return run_split(psi0, du, n_steps, options,
                   [&potential_source, du](WaveField& f, double u_mid) {
                     for (std::size_t i = 0; i < f.size(); ++i) {
                       const double k = potential_source(f.coord(i), u_mid);
                       f.values[i] *= std::polar(1.0, 0.5 * k * k * 0.5 * du);
                     }
                   });
}

EvolutionResult evolve_cnlse(const WaveField& psi0, double du,
                             std::size_t n_steps,
                             const EvolveOptions& options) {
  return run_split(psi0, du, n_steps, options,
                   [du](WaveField& f, double) {
                     for (auto& v : f.values) {
                       const double density = std::norm(v);
                       v *= std::polar(1.0, 0.5 * density * 0.5 * du);
                     }
                   });
}

double cnlse_linear_equivalence(double alpha, double v, double u_final,
                                const EvolutionGrid& grid,
                                std::optional<double> potential_velocity) {
  if (!(u_final > 0.0))
    throw std::invalid_argument("cnlse_linear_equivalence: u_final must be positive");
  if (!(grid.du > 0.0))
    throw std::invalid_argument("cnlse_linear_equivalence: du must be positive");

  const SolitonParams p = soliton_parameters(alpha, v);
  const WaveField psi0 = sample_field(
      grid.n, grid.s1_min, grid.s1_max,
      [&](double s1) { return analytic_envelope_soliton(p, s1, 0.0); });

  const auto n_steps = static_cast<std::size_t>(std::llround(u_final / grid.du));
  if (n_steps == 0)
    throw std::invalid_argument("cnlse_linear_equivalence: u_final shorter than one step");

  const double vp = potential_velocity.value_or(v);
  const CurvatureProfile profile = CurvatureProfile::kovalevskaya(alpha, vp);

  auto [linear_final, linear_report] = evolve_linear(psi0, profile, grid.du, n_steps);
  auto [cubic_final, cubic_report] = evolve_cnlse(psi0, grid.du, n_steps);
  return analysis::fidelity(linear_final, cubic_final);
}

}  // namespace conformon::quantum
