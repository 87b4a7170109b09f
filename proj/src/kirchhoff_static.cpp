#include "conformon/kirchhoff_static.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conformon/numeric.hpp"

namespace conformon::kirchhoff {

double derive_b(double a, double sigma) {
  const double denom = (1.0 + sigma) * (1.0 + a);
  if (denom == 0.0 || !std::isfinite(denom))
    throw std::invalid_argument("derive_b: singular denominator, a = -1 or sigma = -1");
  return 2.0 * a / denom;
}

RodParams make_rod_params(double a, double sigma, double c2, double tau0, double phi) {
  if (std::abs(std::remainder(phi, kPi / 2.0)) > kParamTol)
    throw std::invalid_argument("RodParams: phi must be a multiple of pi/2");
  RodParams p;
  p.a = a;
  p.sigma = sigma;
  p.b = derive_b(a, sigma);
  p.c2 = c2;
  p.tau0 = tau0;
  p.phi = phi;
  return p;
}

namespace {

bool phi_matches(double phi, double target) {
  return std::abs(std::remainder(phi - target, 2.0 * kPi)) <= kParamTol;
}

}  // namespace

RodParams solve_case_phi(double phi, double sigma, double c2, double tau0) {
  if (phi_matches(phi, kPi / 2.0)) {
    if (sigma == 0.0)
      throw std::invalid_argument("solve_case_phi: sigma = 0 makes the phi = pi/2 case singular");
    return make_rod_params(-(1.0 + sigma) / sigma, sigma, c2, tau0, phi);
  }
  if (phi_matches(phi, kPi)) {
    if (sigma == -1.0)
      throw std::invalid_argument("solve_case_phi: sigma = -1 is singular");
    if (sigma == 0.0)
      throw std::invalid_argument("solve_case_phi: phi = pi has no nontrivial root at sigma = 0");
    return make_rod_params(-sigma / (1.0 + sigma), sigma, c2, tau0, phi);
  }
  throw std::invalid_argument("solve_case_phi: phi must be pi/2 or pi (mod 2 pi)");
}

double stated_case_a_phi_pi(double sigma) { return -1.0 / (1.0 + sigma); }

double sech_curvature(double alpha, double s1) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("sech_curvature: alpha must be >= 0");
  const double root = std::sqrt(alpha);
  return 2.0 * root * sech(root * s1);
}

double sech_curvature_slope(double alpha, double s1) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("sech_curvature_slope: alpha must be >= 0");
  const double x = std::sqrt(alpha) * s1;
  return -2.0 * alpha * sech(x) * std::tanh(x);
}

double sech_alpha_from_tension(double c2, double tau0, bool allow_zero) {
  const double alpha = c2 - tau0 * tau0;
  if (alpha > 0.0) return alpha;
  if (alpha == 0.0 && allow_zero) return 0.0;
  throw std::invalid_argument("sech solution requires C2 > tau0^2, got C2 = " +
                              std::to_string(c2) + ", tau0 = " + std::to_string(tau0));
}

double tension_torsion_constraint(double k0, double tau0) {
  if (!(k0 >= 0.0))
    throw std::invalid_argument("tension_torsion_constraint: k0 must be >= 0");
  return k0 * k0 / 4.0 + tau0 * tau0;
}

ForceTorqueState static_force_field(const RodParams& params, double k, double k_s) {
  return {params.a * k_s, (params.a - params.b) * params.tau0 * k,
          params.a * (-0.5 * k * k + params.c2)};
}

std::vector<double> curvature_ode_residual(std::span<const double> k, double c2,
                                           double tau0, double step) {
  if (k.size() < 5)
    throw std::invalid_argument("curvature_ode_residual: need at least 5 samples");
  if (!(step > 0.0))
    throw std::invalid_argument("curvature_ode_residual: step must be positive");
  const double alpha = c2 - tau0 * tau0;
  const double h2 = step * step;
  std::vector<double> r;
  r.reserve(k.size() - 2);
  for (std::size_t i = 1; i + 1 < k.size(); ++i) {
    const double kss = (k[i + 1] - 2.0 * k[i] + k[i - 1]) / h2;
    r.push_back(kss + 0.5 * k[i] * k[i] * k[i] - alpha * k[i]);
  }
  return r;
}

std::array<double, 6> StaticResiduals::max_abs() const {
  std::array<double, 6> m{};
  for (std::size_t j = 0; j < 6; ++j)
    for (double v : r[j]) m[j] = std::max(m[j], std::abs(v));
  return m;
}

std::array<double, 6> StaticResiduals::l2() const {
  std::array<double, 6> m{};
  for (std::size_t j = 0; j < 6; ++j) {
    double acc = 0.0;
    for (double v : r[j]) acc += v * v;
    m[j] = std::sqrt(acc);
  }
  return m;
}

StaticResiduals static_system_residual(const RodParams& params,
                                       std::span<const double> k,
                                       std::span<const double> tau,
                                       std::span<const double> phi,
                                       double step,
                                       const std::optional<ForceSamples>& g) {
  const std::size_t n = k.size();
  if (tau.size() != n || phi.size() != n)
    throw std::invalid_argument("static_system_residual: inconsistent array lengths");
  if (g && (g->g1.size() != n || g->g2.size() != n || g->g3.size() != n))
    throw std::invalid_argument("static_system_residual: inconsistent force array lengths");
  if (!(step > 0.0))
    throw std::invalid_argument("static_system_residual: step must be positive");

  std::vector<double> k1(n), k2(n), k3(n);
  for (std::size_t i = 0; i < n; ++i) {
    k1[i] = k[i] * std::sin(phi[i]);
    k2[i] = k[i] * std::cos(phi[i]);
    k3[i] = tau[i];
  }

  // With supplied forces the residual stencil spans one sample each side;
  // internally built forces need k_s first, costing one more.
  std::vector<double> g1(n), g2(n), g3(n);
  std::size_t first = 1;
  if (g) {
    g1 = g->g1;
    g2 = g->g2;
    g3 = g->g3;
  } else {
    first = 2;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double ks = (k[i + 1] - k[i - 1]) / (2.0 * step);
      const ForceTorqueState f = static_force_field(params, k[i], ks);
      g1[i] = f.g1;
      g2[i] = f.g2;
      g3[i] = f.g3;
    }
  }

  if (n < 2 * first + 1)
    throw std::invalid_argument("static_system_residual: too few samples");

  const double a = params.a;
  const double b = params.b;
  StaticResiduals out;
  out.first_index = first;
  const std::size_t count = n - 2 * first;
  for (auto& v : out.r) v.reserve(count);

  for (std::size_t i = first; i + first < n; ++i) {
    const double g1s = (g1[i + 1] - g1[i - 1]) / (2.0 * step);
    const double g2s = (g2[i + 1] - g2[i - 1]) / (2.0 * step);
    const double g3s = (g3[i + 1] - g3[i - 1]) / (2.0 * step);
    const double k1s = (k1[i + 1] - k1[i - 1]) / (2.0 * step);
    const double k2s = (k2[i + 1] - k2[i - 1]) / (2.0 * step);
    const double k3s = (k3[i + 1] - k3[i - 1]) / (2.0 * step);

    out.r[0].push_back(g1s + k2[i] * g3[i] - k3[i] * g2[i]);
    out.r[1].push_back(g2s + k3[i] * g1[i] - k1[i] * g3[i]);
    out.r[2].push_back(g3s + k1[i] * g2[i] - k2[i] * g1[i]);
    out.r[3].push_back(g2[i] - k1s - (b - a) * k2[i] * k3[i]);
    out.r[4].push_back(g1[i] + a * k2s - (b - 1.0) * k1[i] * k3[i]);
    out.r[5].push_back(b * k3s + (a - 1.0) * k1[i] * k2[i]);
  }
  return out;
}

}  // namespace conformon::kirchhoff
