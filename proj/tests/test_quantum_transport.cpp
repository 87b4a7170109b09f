#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "conformon/analysis.hpp"
#include "conformon/curvature_profile.hpp"
#include "conformon/kirchhoff_static.hpp"
#include "conformon/numeric.hpp"
#include "conformon/quantum_transport.hpp"
#include "conformon/wave_field.hpp"
#include "oracle_helpers.hpp"

using conformon::CurvatureProfile;
using conformon::WaveField;
using conformon::sample_field;
namespace an = conformon::analysis;
namespace qt = conformon::quantum;

namespace {

using Cx = std::complex<double>;

WaveField breather_field(double alpha, std::size_t n = 1024,
                         double half_width = 40.0) {
  return sample_field(n, -half_width, half_width, [&](double s1) {
    return qt::analytic_breather(alpha, s1, 0.0);
  });
}

// iD_u psi + psi_ss + W psi evaluated with a 4th order stencil in s1 and a
// central difference in u; closed-form solutions must null it.
double max_pde_residual(const std::function<Cx(double, double)>& psi,
                        const std::function<double(double)>& potential,
                        double u0, double s_lo, double s_hi) {
  const double h = 0.01;
  const double e = 1e-5;
  double worst = 0.0;
  for (double s = s_lo; s <= s_hi; s += h) {
    const Cx du = (psi(s, u0 + e) - psi(s, u0 - e)) / (2.0 * e);
    const Cx dss = (-psi(s + 2.0 * h, u0) + 16.0 * psi(s + h, u0) -
                    30.0 * psi(s, u0) + 16.0 * psi(s - h, u0) -
                    psi(s - 2.0 * h, u0)) /
                   (12.0 * h * h);
    const Cx r = Cx(0.0, 1.0) * du + dss + potential(s) * psi(s, u0);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace

TEST_SUITE("quantum_transport") {

TEST_CASE("unit conversions round trip") {
  const qt::DimensionlessConvention conv{1.0, 1.0};
  const auto scaled = conv.to_scaled({std::sqrt(2.0), 4.0});
  CHECK(scaled.s1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(scaled.u == doctest::Approx(1.0).epsilon(1e-14));

  const qt::DimensionlessConvention heavy{2.0, 0.5};
  CHECK(heavy.potential_prefactor() == doctest::Approx(4.0).epsilon(1e-14));

  for (double s : {-3.0, 0.0, 1.7}) {
    for (double t : {0.0, 0.4, 9.0}) {
      const auto back = heavy.to_lab(heavy.to_scaled({s, t}));
      CHECK(back.s == doctest::Approx(s).epsilon(1e-12));
      CHECK(back.t == doctest::Approx(t).epsilon(1e-12));
    }
  }

  const qt::DimensionlessConvention bad{0.0, 1.0};
  CHECK_THROWS_AS(bad.to_scaled({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(bad.potential_prefactor(), std::invalid_argument);
}

TEST_CASE("effective potential") {
  CHECK(qt::effective_potential(0.0, 0.0, 1.0) == 0.0);
  CHECK(qt::effective_potential(2.0, 0.0, 1.0) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(qt::effective_potential(2.0, std::sqrt(2.0), 1.0) ==
        doctest::Approx(0.0));
  CHECK(qt::effective_potential(1.0, 1.0, 4.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(qt::effective_potential(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(qt::effective_potential(1.0, 0.0, -2.0), std::invalid_argument);
}

TEST_CASE("gauge transform") {
  const WaveField psi = breather_field(1.0, 64, 10.0);

  const WaveField same = qt::gauge_transform(psi, 0.0, 3.0,
                                             qt::GaugeDirection::Forward);
  for (std::size_t i = 0; i < psi.size(); ++i)
    CHECK(std::abs(same.values[i] - psi.values[i]) < 1e-15);

  const WaveField turned = qt::gauge_transform(psi, 1.0, conformon::kPi,
                                               qt::GaugeDirection::Forward);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    CHECK(std::abs(turned.values[i] + psi.values[i]) < 1e-12);
    CHECK(std::abs(turned.values[i]) ==
          doctest::Approx(std::abs(psi.values[i])).epsilon(1e-12));
  }

  const WaveField there = qt::gauge_transform(psi, 0.7, 1.3,
                                              qt::GaugeDirection::Forward);
  const WaveField back = qt::gauge_transform(there, 0.7, 1.3,
                                             qt::GaugeDirection::Inverse);
  for (std::size_t i = 0; i < psi.size(); ++i)
    CHECK(std::abs(back.values[i] - psi.values[i]) < 1e-14);
}

TEST_CASE("standing envelope closed form") {
  const Cx at_origin = qt::analytic_breather(1.0, 0.0, 0.0);
  CHECK(at_origin.real() == 2.0);
  CHECK(at_origin.imag() == 0.0);

  for (double u : {0.0, 0.3, 2.0, 11.0})
    CHECK(std::abs(qt::analytic_breather(1.0, 0.7, u)) ==
          doctest::Approx(std::abs(qt::analytic_breather(1.0, 0.7, 0.0)))
              .epsilon(1e-12));

  // independent quadrature of the squared modulus: 8 sqrt(alpha)
  for (double alpha : {1.0, 4.0}) {
    const double mass = oracle::simpson(
        [&](double s1) { return std::norm(qt::analytic_breather(alpha, s1, 0.5)); },
        -40.0, 40.0, 8000);
    CHECK(mass == doctest::Approx(8.0 * std::sqrt(alpha)).epsilon(1e-6));
  }

  CHECK_THROWS_AS(qt::analytic_breather(-1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("soliton parameters") {
  const auto p1 = qt::soliton_parameters(1.0, 2.0);
  CHECK(p1.lambda == 1.0);
  CHECK(p1.mu == 0.0);

  const auto p0 = qt::soliton_parameters(1.0, 0.0);
  CHECK(p0.lambda == 0.0);
  CHECK(p0.mu == 1.0);

  const auto p4 = qt::soliton_parameters(1.0, 4.0);
  CHECK(p4.lambda == 2.0);
  CHECK(p4.mu == -3.0);

  CHECK_THROWS_AS(qt::soliton_parameters(-0.5, 1.0), std::invalid_argument);
}

TEST_CASE("traveling envelope closed form") {
  const auto still = qt::soliton_parameters(1.0, 0.0);
  for (double s1 : {-2.0, 0.0, 0.9}) {
    for (double u : {0.0, 0.7}) {
      CHECK(std::abs(qt::analytic_envelope_soliton(still, s1, u) -
                     qt::analytic_breather(1.0, s1, u)) < 1e-14);
    }
  }

  const auto moving = qt::soliton_parameters(1.0, 2.0);
  const Cx probe = qt::analytic_envelope_soliton(moving, 2.0, 1.0);
  CHECK(probe.real() == doctest::Approx(2.0 * std::cos(2.0)).epsilon(1e-12));
  CHECK(probe.imag() == doctest::Approx(2.0 * std::sin(2.0)).epsilon(1e-12));

  // the peak rides at s1 = v u with fixed height 2 sqrt(alpha)
  const auto fast = qt::soliton_parameters(2.25, 0.5);
  for (double u : {0.0, 2.0, 6.0})
    CHECK(std::abs(qt::analytic_envelope_soliton(fast, 0.5 * u, u)) ==
          doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("carrier velocity") {
  CHECK(qt::carrier_velocity(qt::soliton_parameters(1.0, 2.0)) == 0.0);
  CHECK(qt::carrier_velocity(qt::soliton_parameters(1.0, 1.0)) ==
        doctest::Approx(-1.5).epsilon(1e-14));
  CHECK_THROWS_AS(qt::carrier_velocity(qt::soliton_parameters(1.0, 0.0)),
                  std::invalid_argument);

  std::mt19937_64 rng(0x2c9277b5ULL);
  std::uniform_real_distribution<double> draw_alpha(1e-3, 20.0);
  std::uniform_real_distribution<double> draw_speed(0.05, 10.0);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 100; ++i) {
    const double alpha = draw_alpha(rng);
    const double v = flip(rng) ? draw_speed(rng) : -draw_speed(rng);
    const auto p = qt::soliton_parameters(alpha, v);
    const double product = qt::carrier_velocity_product(p);
    CHECK(std::abs(product - 4.0 * alpha) <= 1e-12 * std::max(1.0, 4.0 * alpha));
  }
}

TEST_CASE("gauged soliton") {
  const auto p = qt::soliton_parameters(1.0, 2.0);
  for (double s1 : {-1.0, 0.4}) {
    for (double u : {0.0, 0.9}) {
      CHECK(std::abs(qt::analytic_gauged_soliton(p, 0.0, s1, u) -
                     qt::analytic_envelope_soliton(p, s1, u)) < 1e-15);
      CHECK(std::abs(qt::analytic_gauged_soliton(p, 0.8, s1, u)) ==
            doctest::Approx(std::abs(qt::analytic_envelope_soliton(p, s1, u)))
                .epsilon(1e-12));
    }
  }

  const Cx pinned = qt::analytic_gauged_soliton(p, 1.0, 0.0, 1.0);
  const double mag = 2.0 / std::cosh(2.0);
  CHECK(pinned.real() == doctest::Approx(mag * std::cos(1.0)).epsilon(1e-12));
  CHECK(pinned.imag() == doctest::Approx(-mag * std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("gauged soliton phase bookkeeping") {
  // alpha = 2, tau0 = 1 so the tension constant is c2 = 3, with v = 1
  const double alpha = 2.0, tau0 = 1.0, v = 1.0, s1 = 1.0, u = 2.0;
  const double c2 = alpha + tau0 * tau0;
  const auto p = qt::soliton_parameters(alpha, v);

  const Cx gauged = qt::analytic_gauged_soliton(p, tau0, s1, u);

  // phase assembled from first principles:
  // (v/2) s1 + (c2 - 2 tau0^2 - v^2/4) u
  const double consistent_arg =
      0.5 * v * s1 + (c2 - 2.0 * tau0 * tau0 - 0.25 * v * v) * u;
  CHECK(consistent_arg == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::arg(gauged) == doctest::Approx(consistent_arg).epsilon(1e-12));

  // the once-stated variant v s1 + (c2 - 2 tau0^2 - v^2) u disagrees here
  const double stated_arg = v * s1 + (c2 - 2.0 * tau0 * tau0 - v * v) * u;
  CHECK(stated_arg == doctest::Approx(1.0).epsilon(1e-14));
  const Cx stated = std::abs(gauged) * std::polar(1.0, stated_arg);
  CHECK(std::abs(gauged - stated) > 0.1);
}

TEST_CASE("traveling curvature wave") {
  CHECK(qt::kovalevskaya_curvature(1.0, 3.0, 3.0, 1.0) == 2.0);
  CHECK(qt::kovalevskaya_curvature(4.0, 1.0, 0.0, 0.5) ==
        doctest::Approx(4.0 / std::cosh(1.0)).epsilon(1e-12));
  for (double s1 : {-2.0, 0.0, 1.5})
    CHECK(qt::kovalevskaya_curvature(1.7, 0.9, s1, 0.0) ==
          doctest::Approx(conformon::kirchhoff::sech_curvature(1.7, s1))
              .epsilon(1e-15));
  CHECK_THROWS_AS(qt::kovalevskaya_curvature(-1.0, 0.0, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("closed forms satisfy their evolution equations") {
  SUBCASE("standing envelope under the cubic equation") {
    const double u0 = 0.4;
    const auto psi = [](double s1, double u) {
      return qt::analytic_breather(1.0, s1, u);
    };
    const auto w = [&](double s1) { return 0.5 * std::norm(psi(s1, u0)); };
    CHECK(max_pde_residual(psi, w, u0, -5.0, 5.0) < 1e-6);
  }

  SUBCASE("traveling envelope under the cubic equation") {
    const auto p = qt::soliton_parameters(1.0, 1.0);
    const double u0 = 0.3;
    const auto psi = [&](double s1, double u) {
      return qt::analytic_envelope_soliton(p, s1, u);
    };
    const auto w = [&](double s1) { return 0.5 * std::norm(psi(s1, u0)); };
    CHECK(max_pde_residual(psi, w, u0, -5.0, 5.0) < 1e-6);
  }

  SUBCASE("traveling envelope under the linear equation") {
    const auto p = qt::soliton_parameters(1.0, 1.0);
    const double u0 = 0.3;
    const auto psi = [&](double s1, double u) {
      return qt::analytic_envelope_soliton(p, s1, u);
    };
    const auto w = [&](double s1) {
      const double k = qt::kovalevskaya_curvature(1.0, 1.0, s1, u0);
      return 0.5 * k * k;
    };
    CHECK(max_pde_residual(psi, w, u0, -5.0, 5.0) < 1e-6);
  }

  SUBCASE("gauged soliton under the linear equation with torsion") {
    const auto p = qt::soliton_parameters(1.0, 1.0);
    const double tau0 = 0.8, u0 = 0.3;
    const auto psi = [&](double s1, double u) {
      return qt::analytic_gauged_soliton(p, tau0, s1, u);
    };
    // potential term written through the effective well to tie the two
    const auto w = [&](double s1) {
      const double k = qt::kovalevskaya_curvature(1.0, 1.0, s1, u0);
      return -2.0 * qt::effective_potential(k, tau0, 1.0);
    };
    CHECK(max_pde_residual(psi, w, u0, -5.0, 5.0) < 1e-6);
  }
}

TEST_CASE("free dispersion of a gaussian") {
  const WaveField psi0 = sample_field(1024, -40.0, 40.0, [](double s1) {
    return Cx(std::exp(-0.5 * s1 * s1), 0.0);
  });
  const auto [final_field, report] =
      qt::evolve_linear(psi0, CurvatureProfile::zero(), 1e-3, 1000);

  CHECK(report.times.front() == 0.0);
  CHECK(report.times.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(report.norms.back() / report.norms.front() - 1.0) < 1e-10);

  // |psi|^2 width grows by sqrt(1 + 4 u^2) under pure dispersion
  CHECK(report.widths.back() / report.widths.front() ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(std::abs(report.centers.back()) < 1e-9);
  CHECK_FALSE(report.boundary_leak_warning);
}

TEST_CASE("standing envelope is stationary in the matching well") {
  const WaveField psi0 = breather_field(1.0);
  qt::EvolveOptions opt;
  opt.oracle = [](double s1, double u) {
    return qt::analytic_breather(1.0, s1, u);
  };
  const auto [final_field, report] =
      qt::evolve_linear(psi0, CurvatureProfile::sech_profile(1.0), 1e-3, 1000, opt);

  REQUIRE(report.fidelities.size() == report.times.size());
  for (double f : report.fidelities) CHECK(f >= 0.999);
  CHECK(std::abs(report.norms.back() / report.norms.front() - 1.0) < 1e-9);
  CHECK_FALSE(report.boundary_leak_warning);
}

TEST_CASE("soliton rides a traveling well") {
  const auto p = qt::soliton_parameters(1.0, 1.0);
  const WaveField psi0 = sample_field(1024, -40.0, 40.0, [&](double s1) {
    return qt::analytic_envelope_soliton(p, s1, 0.0);
  });
  qt::EvolveOptions opt;
  opt.oracle = [&](double s1, double u) {
    return qt::analytic_envelope_soliton(p, s1, u);
  };
  const auto [final_field, report] = qt::evolve_linear(
      psi0, CurvatureProfile::kovalevskaya(1.0, 1.0), 1e-3, 5000, opt);

  CHECK(report.centers.back() == doctest::Approx(5.0).epsilon(0.01));
  CHECK(report.fidelities.back() >= 0.999);
  CHECK(an::envelope_velocity(report) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("cubic solver") {
  SUBCASE("zero stays zero") {
    const WaveField zero = sample_field(256, -20.0, 20.0, [](double) {
      return Cx(0.0, 0.0);
    });
    const auto [final_field, report] = qt::evolve_cnlse(zero, 1e-3, 50);
    for (const auto& v : final_field.values) CHECK(std::abs(v) == 0.0);
    CHECK(report.norms.back() == 0.0);
  }

  SUBCASE("soliton self-trapping") {
    const auto p = qt::soliton_parameters(1.0, 1.0);
    const WaveField psi0 = sample_field(1024, -40.0, 40.0, [&](double s1) {
      return qt::analytic_envelope_soliton(p, s1, 0.0);
    });
    qt::EvolveOptions opt;
    opt.oracle = [&](double s1, double u) {
      return qt::analytic_envelope_soliton(p, s1, u);
    };
    const auto [final_field, report] = qt::evolve_cnlse(psi0, 1e-3, 5000, opt);

    CHECK(report.fidelities.back() >= 0.999);
    double peak = 0.0;
    for (const auto& v : final_field.values)
      peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(2.0).epsilon(0.01));
    CHECK(report.centers.back() == doctest::Approx(5.0).epsilon(0.01));
  }

  SUBCASE("standing envelope keeps its modulus") {
    const WaveField psi0 = breather_field(1.0);
    const auto [final_field, report] = qt::evolve_cnlse(psi0, 1e-3, 2000);
    double drift = 0.0;
    for (std::size_t i = 0; i < psi0.size(); ++i)
      drift = std::max(drift, std::abs(std::abs(final_field.values[i]) -
                                       std::abs(psi0.values[i])));
    CHECK(drift < 1e-3);
  }
}

TEST_CASE("cubic and linear runs agree on the self-consistent well") {
  const qt::EvolutionGrid grid;
  CHECK(qt::cnlse_linear_equivalence(1.0, 0.0, 1.0, grid) >= 0.999);

  // detuned well: drag the potential away from the standing state
  CHECK(qt::cnlse_linear_equivalence(1.0, 0.0, 2.0, grid, 0.5) < 0.99);
}

TEST_CASE("long run unitarity") {
  const WaveField psi0 = breather_field(1.0);
  qt::EvolveOptions opt;
  opt.record_every = 10000;
  const auto [final_field, report] =
      qt::evolve_linear(psi0, CurvatureProfile::sech_profile(1.0), 1e-3, 10000, opt);
  CHECK(std::abs(report.norms.back() / report.norms.front() - 1.0) < 1e-9);
}

TEST_CASE("fidelity is gauge covariant") {
  const WaveField a = breather_field(1.0, 256, 20.0);
  WaveField b = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    b.values[i] *= std::exp(Cx(0.0, 0.1 * b.coord(i)));

  const double before = an::fidelity(a, b);
  const WaveField ga = qt::gauge_transform(a, 0.9, 2.0, qt::GaugeDirection::Forward);
  const WaveField gb = qt::gauge_transform(b, 0.9, 2.0, qt::GaugeDirection::Forward);
  CHECK(an::fidelity(ga, gb) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("boundary handling") {
  SUBCASE("initial state must vanish at the edges") {
    const WaveField tight = breather_field(1.0, 64, 5.0);
    CHECK_THROWS_AS(qt::evolve_linear(tight, CurvatureProfile::zero(), 1e-3, 10),
                    std::invalid_argument);
  }

  SUBCASE("dispersing packet raises the leak flag") {
    const WaveField psi0 = sample_field(256, -10.0, 10.0, [](double s1) {
      return Cx(std::exp(-0.5 * s1 * s1), 0.0);
    });
    const auto [final_field, report] =
        qt::evolve_linear(psi0, CurvatureProfile::zero(), 1e-3, 2000);
    CHECK(report.boundary_leak_warning);
    CHECK(report.max_edge_abs > qt::kLeakWarnLevel);
  }

  SUBCASE("argument validation") {
    const WaveField psi0 = breather_field(1.0);
    CHECK_THROWS_AS(qt::evolve_linear(psi0, CurvatureProfile::zero(), 0.0, 10),
                    std::invalid_argument);
    qt::EvolveOptions opt;
    opt.record_every = 0;
    CHECK_THROWS_AS(qt::evolve_linear(psi0, CurvatureProfile::zero(), 1e-3, 10, opt),
                    std::invalid_argument);
    CHECK_THROWS_AS(qt::cnlse_linear_equivalence(1.0, 0.0, 0.0, {}),
                    std::invalid_argument);
  }
}

}  // TEST_SUITE
