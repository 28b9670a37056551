// End-to-end acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "ffhk/errors.hpp"
#include "ffhk/holomorphic.hpp"
#include "ffhk/lattice_sum.hpp"
#include "ffhk/local_model.hpp"
#include "ffhk/ooguri_vafa.hpp"
#include "ffhk/semiflat.hpp"
#include "ffhk/twistor.hpp"

using ffhk::BasePoint;
using ffhk::Chart;
using ffhk::Complex;
using ffhk::FiberPoint;
using ffhk::HarmonicInvariant;
using ffhk::ModelParams;
namespace lm = ffhk::local_model;
namespace sf = ffhk::semiflat;
namespace ov = ffhk::ooguri_vafa;
namespace tw = ffhk::twistor;

namespace {

int failures = 0;
int criterion = 0;

void report(const char* name, double residual, double tol, double elapsed_s,
            const char* note = "") {
  ++criterion;
  const bool ok = residual < tol;
  if (!ok) ++failures;
  std::printf("[%2d/14] %s  %-34s residual %.3e  (tol %.0e, %.1fs)%s%s\n", criterion,
              ok ? "PASS" : "FAIL", name, residual, tol, elapsed_s, note[0] ? "  " : "", note);
  std::fflush(stdout);
}

void report_flag(const char* name, bool ok, double elapsed_s, const char* note = "") {
  ++criterion;
  if (!ok) ++failures;
  std::printf("[%2d/14] %s  %-34s (%.1fs)%s%s\n", criterion, ok ? "PASS" : "FAIL", name,
              elapsed_s, note[0] ? "  " : "", note);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BasePoint random_base(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.1, 0.4), angle(-3.0, 3.0);
  const double r = radius(rng), a = angle(rng);
  return {r * std::cos(a), r * std::sin(a), Chart::Principal};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20260826);

  {  // 1: action-angle symplectic identity on a 20 x 20 x 10 grid, two invariants
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const std::vector<HarmonicInvariant> invs = {
        HarmonicInvariant{},
        HarmonicInvariant({Complex{0.1, 0.0}, Complex{0.0, 0.0}, Complex{0.05, 0.0}})};
    for (const HarmonicInvariant& s : invs) {
      for (int i = 0; i < 20; ++i) {
        const double r = 0.1 + 0.3 * i / 19.0;
        for (int j = 0; j < 20; ++j) {
          const double a = -3.0 + 6.0 * j / 19.0;
          const BasePoint c{r * std::cos(a), r * std::sin(a), Chart::Principal};
          for (int k = 0; k < 10; ++k) {
            const FiberPoint t{0.4 * std::cos(0.63 * k), 0.9 * std::sin(0.63 * k)};
            worst = std::max(worst, lm::symplectic_identity_residual(c, t, s));
          }
        }
      }
    }
    report("action_angle_identity", worst, 1e-8, seconds_since(t0));
  }

  {  // 2: the gluing compatibility gate is an iff
    const auto t0 = std::chrono::steady_clock::now();
    const Complex z1{0.25, 0.1}, z2{0.9, 0.3};
    const double good =
        lm::gluing_cr_residual(HarmonicInvariant({Complex{0.1, 0.05}}), z1, z2);
    const double bad =
        lm::gluing_cr_residual([](double x, double) { return x * x; }, z1, z2);
    report_flag("gluing_compatibility_iff", good < 1e-6 && bad >= 1e-2, seconds_since(t0));
  }

  {  // 3: quadratic form identities at 100 random points
    const auto t0 = std::chrono::steady_clock::now();
    const HarmonicInvariant s({Complex{0.1, -0.04}, Complex{0.02, 0.03}});
    const ModelParams params{1.0, 0.5};
    std::uniform_real_distribution<double> fib(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const BasePoint c = random_base(rng);
      const auto ids =
          sf::verify_quadratic_identities(c, {0.5 * fib(rng), 2.0 * fib(rng)}, s, params);
      worst = std::max({worst, std::abs(ids.wedge_square), std::abs(ids.wedge_omega),
                        std::abs(ids.wedge_omega_conj)});
    }
    report("semiflat_quadratic_identities", worst, 1e-10, seconds_since(t0));
  }

  {  // 4: positivity boundary at |c| = e^a for linear invariants a * c1
    const auto t0 = std::chrono::steady_clock::now();
    double worst_cells = 0.0;
    for (double a : {-1.0, -2.0}) {
      const HarmonicInvariant s({Complex{a, 0.0}}, 1.0);
      const ModelParams params{1.0, 1.0};
      const double lo = 0.05, hi = 0.45, cell = (hi - lo) / 199.0;
      double last_positive = lo;
      for (int k = 0; k < 200; ++k) {
        const double r = lo + cell * k;
        bool pos = false;
        try {
          pos = ffhk::sylvester_positive(
                    sf::semiflat_metric_matrix({r, 0.0, Chart::Principal}, {0.2, 0.3}, s,
                                               params))
                    .positive;
        } catch (const ffhk::DomainError&) {
        }
        if (pos) last_positive = r;
      }
      worst_cells = std::max(worst_cells, std::abs(last_positive - std::exp(a)) / cell);
    }
    report("positivity_boundary_one_cell", worst_cells, 1.0 + 1e-12, seconds_since(t0),
           "units: grid cells");
  }

  {  // 5: Poisson resummation of the potential, relative error
    const auto t0 = std::chrono::steady_clock::now();
    const HarmonicInvariant s({Complex{0.02, 0.01}}, 10.0);
    const ModelParams params{1.0, 10.0};
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double r = 0.05 * std::pow(3.0 / 0.05, i / 9.0);  // R|c| in [0.05, 3]
      for (int j = 0; j < 10; ++j) {
        const double ang = -3.0 + 6.0 * j / 9.0;
        const BasePoint c{r * std::cos(ang), r * std::sin(ang), Chart::Principal};
        for (int k = 0; k < 5; ++k) {
          const double te = 2.0 * M_PI * (k + 0.5) / 5.0;
          const auto f = ov::ov_potential({c, te, 0.0}, s, params);
          worst = std::max(worst, std::abs(f.V - (f.V_sf + f.V_inst)) / std::abs(f.V));
        }
      }
    }
    report("poisson_resummation", worst, 1e-8, seconds_since(t0));
  }

  {  // 6: closed form of the regularized lattice sum
    const auto t0 = std::chrono::steady_clock::now();
    report("lattice_sum_closed_form",
           std::abs(ffhk::regularized_theta_sum(0.0, 0.5) - 4.0 * std::log(2.0)), 1e-10,
           seconds_since(t0));
  }

  {  // 7: monopole equation dA = *dV at 50 random points
    const auto t0 = std::chrono::steady_clock::now();
    const HarmonicInvariant s({Complex{0.08, -0.03}});
    const ModelParams params{1.0, 0.5};
    std::uniform_real_distribution<double> te(0.3, 6.0);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      worst = std::max(worst,
                       ov::connection_residual({random_base(rng), te(rng), 0.0}, s, params));
    }
    report("monopole_equation", worst, 1e-6, seconds_since(t0));
  }

  {  // 8: omega0 equals the corrected action-angle symplectic form
    const auto t0 = std::chrono::steady_clock::now();
    const HarmonicInvariant s({Complex{0.1, 0.05}});
    const ModelParams params{1.0, 0.5};
    std::uniform_real_distribution<double> te(0.3, 6.0), tm(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      worst = std::max(
          worst, ov::omega0_residual({random_base(rng), te(rng), tm(rng)}, s, params));
    }
    report("symplectic_form_assembly", worst, 1e-6, seconds_since(t0));
  }

  {  // 9: six contour integrals against their Bessel series
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const double rvals[] = {0.5, 0.8, 1.3, 2.0};
    const double xvals[] = {0.1, 0.35, 0.8, 1.4, 2.0};  // R|c|
    for (double R : rvals) {
      const ModelParams params{R, 10.0};
      for (double x : xvals) {
        for (int k = 0; k < 5; ++k) {
          const double te = 0.4 + 1.1 * k;
          const BasePoint c{(x / R) * std::cos(0.7), (x / R) * std::sin(0.7),
                            Chart::Principal};
          worst = std::max(worst,
                           tw::contour_bessel_identities(c, te, params).max_residual);
        }
      }
    }
    report("contour_bessel_identities", worst, 1e-8, seconds_since(t0));
  }

  {  // 10: corrected twistor family, quadrature route vs series route
    const auto t0 = std::chrono::steady_clock::now();
    const HarmonicInvariant s({Complex{0.1, 0.0}});
    const ModelParams params{1.0, 0.5};
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const BasePoint c = random_base(rng);
      const Complex zeta =
          (0.55 + 0.02 * k) * std::exp(Complex{0.0, std::arg(c.c()) + 0.7 + 0.09 * k});
      const double te = 0.3 + 0.28 * k;
      const auto a = tw::corrected_twistor_form(c, te, s, params, zeta);
      const auto b = tw::corrected_twistor_form_chi(c, te, s, params, zeta);
      worst = std::max(worst, (a - b).max_abs());
    }
    report("darboux_factorization", worst, 1e-6, seconds_since(t0));
  }

  {  // 11: jump properties across the decay contour
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams params{1.0, 0.5};
    const BasePoint c_cps{0.45, 0.0, Chart::Principal};
    const ffhk::RayContour ray_cps = tw::contour_plus(c_cps);
    auto density_cps = [&](Complex t) {
      return std::exp(M_PI * params.R * (c_cps.c() / t + t * std::conj(c_cps.c())) +
                      Complex{0.0, 0.4});
    };
    double worst = 0.0;
    const double delta = 1e-4;
    for (double r : {0.6, 1.4}) {
      const Complex z = r * ray_cps.direction;
      const Complex up =
          tw::cps_solve(ray_cps, density_cps, z * std::exp(Complex{0.0, delta})).value;
      const Complex dn =
          tw::cps_solve(ray_cps, density_cps, z * std::exp(Complex{0.0, -delta})).value;
      worst = std::max(worst, std::abs((up - dn) - density_cps(z)));
    }
    const BasePoint c{0.22, 0.13, Chart::Principal};
    const ffhk::RayContour ray = tw::contour_plus(c);
    auto density = [&](Complex t) {
      return std::exp(M_PI * params.R * (c.c() / t + t * std::conj(c.c())) +
                      Complex{0.0, 0.4});
    };
    // the correction factor jumps by (1 - chi_e)^{-1}, sign frozen by the
    // Cauchy-integral oracle above
    ffhk::QuadratureControl qc;
    qc.enforce_margin = false;
    qc.h = 1e-3;
    const double te = 0.9;
    auto log_jump = [&](double r, double d) {
      const Complex up = tw::gmn_correction_exponent(
          c, te, params, r * ray.direction * std::exp(Complex{0.0, d}), qc);
      const Complex dn = tw::gmn_correction_exponent(
          c, te, params, r * ray.direction * std::exp(Complex{0.0, -d}), qc);
      return up - dn;
    };
    for (double r : {0.7, 1.3}) {
      const Complex lj = 2.0 * log_jump(r, 5e-3) - log_jump(r, 1e-2);
      const Complex chie = density(r * ray.direction) * std::exp(Complex{0.0, te - 0.4});
      worst = std::max(worst, std::abs(lj + std::log(1.0 - chie)));
    }
    report("contour_jump_properties", worst, 1e-5, seconds_since(t0));
  }

  std::vector<ffhk::TwistorMetric> extracted;
  {  // 12: extracted twistor metric vs the Gibbons-Hawking metric (x 2pi)
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0, laurent = 0.0;
    const double rvals[] = {0.5, 1.0, 2.0};
    int k = 0;
    for (const HarmonicInvariant& s :
         {HarmonicInvariant{}, HarmonicInvariant({Complex{0.1, 0.0}})}) {
      for (int i = 0; i < 5; ++i, ++k) {
        const ModelParams params{rvals[k % 3], 0.5};
        const double ang = -2.4 + 0.9 * k;
        const BasePoint c{(0.16 + 0.012 * k) * std::cos(ang),
                          (0.16 + 0.012 * k) * std::sin(ang), Chart::Principal};
        const double te = 0.5 + 0.5 * k;
        const auto tm = tw::extract_metric(c, te, s, params);
        const auto gh = ov::gibbons_hawking_metric({c, te, 0.0}, s, params);
        worst = std::max(worst,
                         (tm.metric_ov.g - 2.0 * M_PI * gh.g).cwiseAbs().maxCoeff());
        laurent = std::max(laurent, tm.laurent_residual);
        extracted.push_back(tm);
      }
    }
    const double combined = std::max(worst, laurent * 10.0);  // laurent tol is 1e-6
    report("metric_vs_gibbons_hawking", combined, 1e-5, seconds_since(t0));
  }

  {  // 13: quaternionic relations of the extracted triple
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& tm : extracted) {
      worst = std::max(worst, tm.extraction.j_squared_residual);
      const Complex vol = ffhk::wedge(tm.triple[0], tm.triple[0]).volume_coefficient();
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const Complex wij = ffhk::wedge(tm.triple[i], tm.triple[j]).volume_coefficient();
          worst = std::max(worst, std::abs(wij - (i == j ? vol : Complex{0.0, 0.0})));
        }
      }
    }
    report("hyperkahler_triple_relations", worst, 1e-6, seconds_since(t0));
  }

  {  // 14: the positivity margin and its failure mode
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams params{1.0, 0.5};
    const double margin = ov::positivity_margin(HarmonicInvariant{}, params);
    bool raised = false;
    try {
      ov::gibbons_hawking_metric({{1e-3, 0.0, Chart::Principal}, M_PI, 0.0},
                                 HarmonicInvariant({Complex{-2.0, 0.0}}), params);
    } catch (const ffhk::PositivityError&) {
      raised = true;
    }
    report_flag("positivity_margin_and_failure",
                std::abs(margin - 2.0 * std::log(2.0)) < 1e-6 && raised, seconds_since(t0));
  }

  if (failures == 0) {
    std::printf("ACCEPTANCE: all 14 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
  return 1;
}
