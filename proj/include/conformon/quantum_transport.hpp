#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "conformon/analysis.hpp"
#include "conformon/curvature_profile.hpp"
#include "conformon/wave_field.hpp"

namespace conformon::quantum {

// Edge amplitude past which a run is flagged as leaking into the periodic
// boundary, and the stricter bound required of the initial state.
inline constexpr double kLeakWarnLevel = 1e-6;
inline constexpr double kInitialEdgeLevel = 1e-8;

// The working variables are s1 = s/sqrt(2) and u = (hbar/4m) t. Physical
// constants enter only through these conversions and the potential
// prefactor hbar^2/2m.
struct DimensionlessConvention {
  double hbar = 1.0;
  double mass = 1.0;

  struct LabPoint {
    double s;
    double t;
  };
  struct ScaledPoint {
    double s1;
    double u;
  };

  ScaledPoint to_scaled(const LabPoint& p) const;
  LabPoint to_lab(const ScaledPoint& p) const;
  double potential_prefactor() const;
};

// prefactor * (-k^2/4 + tau0^2/2); pass prefactor = 1 for dimensionless work.
double effective_potential(double k, double tau0, double prefactor);

enum class GaugeDirection { Forward, Inverse };

// Multiplies the field by exp(-i tau0^2 u) (Forward) or its conjugate.
WaveField gauge_transform(const WaveField& psi, double tau0, double u,
                          GaugeDirection direction);

// 2 sqrt(alpha) sech(sqrt(alpha) s1) exp(i alpha u).
std::complex<double> analytic_breather(double alpha, double s1, double u);

struct SolitonParams {
  double alpha = 0.0;
  double v = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
};

// lambda = v/2, mu = alpha - v^2/4.
SolitonParams soliton_parameters(double alpha, double v);

// 2 sqrt(alpha) sech[sqrt(alpha)(s1 - v u)] exp i[lambda s1 + mu u].
std::complex<double> analytic_envelope_soliton(const SolitonParams& p,
                                               double s1, double u);

// -mu/lambda = (v^2 - 4 alpha)/(2v); requires v != 0.
double carrier_velocity(const SolitonParams& p);

// v (v - 2 Vc), which equals 4 alpha identically.
double carrier_velocity_product(const SolitonParams& p);

// Envelope soliton times the gauge factor exp(-i tau0^2 u).
std::complex<double> analytic_gauged_soliton(const SolitonParams& p,
                                             double tau0, double s1, double u);

// Traveling curvature wave 2 sqrt(alpha) sech[sqrt(alpha)(s1 - v u)].
double kovalevskaya_curvature(double alpha, double v, double s1, double u);

struct EvolveOptions {
  std::size_t record_every = 100;
  // Closed-form reference sampled on the grid at each recorded time; when
  // set, a fidelity per record lands in the report.
  std::function<std::complex<double>(double s1, double u)> oracle;
  // Sink invoked with each recorded field, for snapshot writers.
  std::function<void(const WaveField&, double u)> on_record;
};

using EvolutionResult = std::pair<WaveField, analysis::EvolutionReport>;

// Strang-split spectral integration of
//   i psi_u + psi_{s1 s1} + (k^2/2) psi = 0
// with k(s1, u) from the profile, evaluated at substep midpoints when the
// profile is time dependent.
EvolutionResult evolve_linear(const WaveField& psi0,
                              const CurvatureProfile& potential_source,
                              double du, std::size_t n_steps,
                              const EvolveOptions& options = {});

// Same splitting for i psi_u + psi_{s1 s1} + (|psi|^2/2) psi = 0; the
// nonlinear substep is an exact phase rotation.
EvolutionResult evolve_cnlse(const WaveField& psi0, double du,
                             std::size_t n_steps,
                             const EvolveOptions& options = {});

struct EvolutionGrid {
  std::size_t n = 1024;
  double s1_min = -40.0;
  double s1_max = 40.0;
  double du = 1e-3;
};

// Runs the cubic solver and the linear solver (traveling sech-squared
// potential moving at potential_velocity, default v) from the same soliton
// initial state and returns the terminal fidelity between the two fields.
double cnlse_linear_equivalence(double alpha, double v, double u_final,
                                const EvolutionGrid& grid,
                                std::optional<double> potential_velocity = {});

}  // namespace conformon::quantum
