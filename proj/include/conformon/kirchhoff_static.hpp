#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace conformon::kirchhoff {

inline constexpr double kParamTol = 1e-12;

// Material/geometric constants of the rod. b is always derived from (a, sigma)
// via b = 2a / ((1+sigma)(1+a)); phi must be a multiple of pi/2.
// The model introduction restricts a to (0, 1], but the special solution
// branches require negative a, so the range is not enforced here.
struct RodParams {
  double a = 0.0;
  double sigma = 0.0;
  double b = 0.0;
  double c2 = 0.0;    // tension constant
  double tau0 = 0.0;  // constant torsion
  double phi = 0.0;   // multiple of pi/2
};

// Force components in the material frame. The torque components are implied
// by m = k1 d1 + a k2 d2 + b k3 d3 and are not stored.
struct ForceTorqueState {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
};

// b = 2a / ((1+sigma)(1+a)); throws when the denominator vanishes.
double derive_b(double a, double sigma);

// Validates phi (multiple of pi/2) and fills b from (a, sigma).
RodParams make_rod_params(double a, double sigma, double c2, double tau0, double phi);

// Material parameters of the two analyzed branches.
// phi = pi/2: b = 2 and a = -(1+sigma)/sigma.
// phi = pi:   b = 2a, solved by a = -sigma/(1+sigma) (nontrivial root).
RodParams solve_case_phi(double phi, double sigma, double c2 = 0.0, double tau0 = 0.0);

// The value the source text states for the phi = pi branch, a = -1/(1+sigma).
// It does not satisfy b(a, sigma) = 2a except at sigma = 1; kept for
// side-by-side reporting.
double stated_case_a_phi_pi(double sigma);

// k(s1) = 2 sqrt(alpha) sech(sqrt(alpha) s1) with alpha = C2 - tau0^2.
double sech_curvature(double alpha, double s1);

// dk/ds1 of the profile above: -2 alpha sech(x) tanh(x), x = sqrt(alpha) s1.
double sech_curvature_slope(double alpha, double s1);

// alpha = C2 - tau0^2; rejects C2 <= tau0^2 (real curvature needs C2 > tau0^2)
// unless allow_zero and C2 == tau0^2.
double sech_alpha_from_tension(double c2, double tau0, bool allow_zero = false);

// C2 = k0^2/4 + tau0^2 linking maximum curvature and torsion to the tension.
double tension_torsion_constraint(double k0, double tau0);

// g = (a k_s, (a-b) tau0 k, a(-k^2/2 + C2)) for the phi = pi branch.
ForceTorqueState static_force_field(const RodParams& params, double k, double k_s);

// Central-difference evaluation of k_ss + k^3/2 - (C2 - tau0^2) k at interior
// samples (aligned with input samples 1 .. n-2).
std::vector<double> curvature_ode_residual(std::span<const double> k, double c2,
                                           double tau0, double step);

struct StaticResiduals {
  // r[j][i] is equation j+1 evaluated at input sample first_index + i.
  std::size_t first_index = 0;
  std::array<std::vector<double>, 6> r;

  std::array<double, 6> max_abs() const;
  std::array<double, 6> l2() const;
};

struct ForceSamples {
  std::vector<double> g1, g2, g3;
};

// Finite-difference residuals of the six static equations. When g is not
// supplied it is built from static_force_field with a central-difference k_s.
// phi_s is treated as 0, so k3 = tau.
StaticResiduals static_system_residual(const RodParams& params,
                                       std::span<const double> k,
                                       std::span<const double> tau,
                                       std::span<const double> phi,
                                       double step,
                                       const std::optional<ForceSamples>& g = std::nullopt);

}  // namespace conformon::kirchhoff
