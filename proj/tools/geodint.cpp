/// @file geodint.cpp
/// @brief Command line front end: direct problem (Delta_lambda, s), inverse
///        problem (c from Delta_lambda), kappa coefficient table, member
///        profile sweeps, and direct access to the quadrature oracle.
///
/// Output contract: data on stdout, diagnostics on stderr. JSON for the
/// scalar problems (keys in fixed insertion order, values serialized by
/// shortest round-trip, so output is deterministic and locale-independent);
/// CSV for the tabular ones ('.' decimal separator, no grouping, at most 17
/// significant digits). Exit codes: 0 success, 2 domain violation (message
/// names the violated bound), 3 solver failure (no bracket, no convergence,
/// or quadrature subdivision limit).

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodint/inverse.hpp"
#include "geodint/kappa.hpp"
#include "geodint/model.hpp"
#include "geodint/quadrature.hpp"
#include "geodint/series.hpp"

namespace {

using geodint::Ellipsoid;
using geodint::GeodesicSpec;
using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

/// Shortest round-trip decimal form of v (<= 17 significant digits, '.'
/// separator by construction -- std::to_chars is locale-independent).
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json terms_json(const std::vector<double>& terms, double scale = 1.0) {
  json arr = json::array();
  for (double t : terms) arr.push_back(t * scale);
  return arr;
}

struct DirectArgs {
  double e = 0.0;
  double h = 0.0;
  double c = 0.0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double rho_e = 1.0;
  int order = geodint::kDefaultOrder;
  bool check = false;
  bool degrees = false;
};

void run_direct(const DirectArgs& a) {
  const Ellipsoid ell = geodint::make_ellipsoid(a.rho_e, a.e);
  const GeodesicSpec spec{a.h, a.c, a.tau0, a.tau1, a.order};
  const geodint::IntegralResult lam = geodint::longitude_integral(ell, spec);
  const geodint::IntegralResult dist = geodint::distance_integral(ell, spec);

  if (lam.convergence_warning || dist.convergence_warning) {
    std::cerr << "warning: last retained series order exceeds "
              << geodint::kWarnRatio
              << " of the leading one; increase --order or reduce --h\n";
  }

  json out;
  out["delta_lambda_rad"] = lam.value;
  if (a.degrees) out["delta_lambda_deg"] = lam.value * 180.0 / kPi;
  out["s"] = dist.value * a.rho_e;
  out["terms"] = terms_json(lam.terms);
  out["trunc_estimate"] = lam.trunc_estimate;
  out["s_terms"] = terms_json(dist.terms, a.rho_e);
  out["s_trunc_estimate"] = dist.trunc_estimate * a.rho_e;
  out["orders_used"] = lam.orders_used;

  if (a.check) {
    const double lam_q = geodint::quad_longitude(ell, spec);
    const double s_q = geodint::quad_distance(ell, spec);
    const double dl = std::fabs(lam.value - lam_q);
    const double ds = std::fabs(dist.value * a.rho_e - s_q);
    out["oracle_delta_lambda"] = dl;
    out["oracle_delta_s"] = ds;
    out["oracle_delta"] = std::max(dl, ds);
  }
  std::cout << out.dump(2) << "\n";
}

struct InverseArgs {
  double e = 0.0;
  double h = 0.0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double delta_lambda = 0.0;
  int order = geodint::kDefaultOrder;
  bool degrees = false;
};

void run_inverse(const InverseArgs& a) {
  const Ellipsoid ell = geodint::make_ellipsoid(1.0, a.e);
  geodint::InverseProblem prob;
  prob.target = a.degrees ? a.delta_lambda * kPi / 180.0 : a.delta_lambda;
  prob.tau0 = a.tau0;
  prob.tau1 = a.tau1;
  prob.h = a.h;
  prob.order = a.order;
  const geodint::InverseSolution sol = geodint::solve_c(prob, ell);

  json out;
  out["c"] = sol.c;
  out["iterations"] = sol.iterations;
  out["residual"] = sol.residual;
  std::cout << out.dump(2) << "\n";
}

void run_kappa(int smax) {
  const geodint::KappaTable table = geodint::kappa_table(smax);
  std::string line;
  for (int s = 0; s <= smax; ++s) {
    for (int k = 0; k <= s; ++k) {
      const geodint::Rational& r = table.at(s, k);
      line.clear();
      line += std::to_string(s);
      line += ',';
      line += std::to_string(k);
      line += ',';
      line += r.num().str();
      line += ',';
      line += r.den().str();
      line += '\n';
      std::cout << line;
    }
  }
}

struct ProfileArgs {
  double e = 0.0;
  std::vector<double> c_list = {0.1, 0.5, 0.9};
  std::vector<int> k_list = {0, 1, 2};
  double beta = -0.5;
  int tau_steps = 50;
  double margin = geodint::kDefaultMargin;
};

void run_profile(const ProfileArgs& a) {
  const double beta2_real = 2.0 * a.beta;
  const int beta2 = static_cast<int>(std::llround(beta2_real));
  if (std::fabs(beta2_real - beta2) > 1e-9) {
    throw geodint::UnsupportedIndexError(
        "profile: --beta must be an integer or half-integer");
  }
  if (a.tau_steps < 1) {
    throw geodint::DomainError(
        "domain error: violated bound tau-steps >= 1 (got " +
        std::to_string(a.tau_steps) + ")");
  }
  for (double c : a.c_list) {
    const geodint::FamilyContext ctx = geodint::make_context(a.e, c);
    const double tau_max = ctx.bp.b * (1.0 - a.margin);
    for (int k : a.k_list) {
      for (int i = 0; i < a.tau_steps; ++i) {
        const double tau =
            (a.tau_steps == 1) ? 0.0 : tau_max * i / (a.tau_steps - 1);
        const double value = geodint::member(beta2, k, tau, ctx);
        std::cout << fmt(c) << ',' << k << ',' << fmt(tau) << ',' << fmt(value)
                  << '\n';
      }
    }
  }
}

struct OracleArgs {
  double e = 0.0;
  double h = 0.0;
  double c = 0.0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double rho_e = 1.0;
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
  bool degrees = false;
};

void run_oracle(const OracleArgs& a) {
  const Ellipsoid ell = geodint::make_ellipsoid(a.rho_e, a.e);
  const GeodesicSpec spec{a.h, a.c, a.tau0, a.tau1, geodint::kDefaultOrder};
  geodint::Quadrature q;
  q.abs_tol = a.abs_tol;
  q.rel_tol = a.rel_tol;
  q.max_subdivisions = a.max_subdivisions;

  const double lam = geodint::quad_longitude(ell, spec, q);
  const double s = geodint::quad_distance(ell, spec, q);
  json out;
  out["delta_lambda_rad"] = lam;
  if (a.degrees) out["delta_lambda_deg"] = lam * 180.0 / kPi;
  out["s"] = s;
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "geodint: longitude and arc-length integrals of constant-altitude "
      "geodesics over an oblate ellipsoid, via altitude power series"};
  // The altitude option is spelled --h, which would collide with the default
  // -h short help flag; keep help reachable as --help only.  Must happen
  // before add_subcommand so the subcommands inherit the renamed flag.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  DirectArgs da;
  CLI::App* direct = app.add_subcommand(
      "direct", "Evaluate Delta_lambda and s between tau0 and tau1");
  direct->add_option("--e", da.e, "second eccentricity (0 < e < 1)")->required();
  direct->add_option("--h", da.h, "scaled altitude (altitude / rho_e)");
  direct->add_option("--c", da.c, "obliquity parameter (0 <= c < 1)")->required();
  direct->add_option("--tau0", da.tau0, "lower limit, tau = sin(latitude)")->required();
  direct->add_option("--tau1", da.tau1, "upper limit, tau = sin(latitude)")->required();
  direct->add_option("--rho-e", da.rho_e, "equatorial radius (scales s only)");
  direct->add_option("--order", da.order, "series truncation order");
  direct->add_flag("--check", da.check, "also run the quadrature oracle and report the discrepancy");
  direct->add_flag("--degrees", da.degrees, "additionally print Delta_lambda in degrees");
  direct->callback([&da] { run_direct(da); });

  InverseArgs ia;
  CLI::App* inverse = app.add_subcommand(
      "inverse", "Recover the obliquity c from a longitude change");
  inverse->add_option("--e", ia.e, "second eccentricity (0 < e < 1)")->required();
  inverse->add_option("--h", ia.h, "scaled altitude (altitude / rho_e)");
  inverse->add_option("--tau0", ia.tau0, "lower limit, tau = sin(latitude)")->required();
  inverse->add_option("--tau1", ia.tau1, "upper limit, tau = sin(latitude)")->required();
  inverse->add_option("--delta-lambda", ia.delta_lambda, "target longitude change (radians)")
      ->required();
  inverse->add_option("--order", ia.order, "series truncation order");
  inverse->add_flag("--degrees", ia.degrees, "interpret --delta-lambda in degrees");
  inverse->callback([&ia] { run_inverse(ia); });

  int smax = 9;
  CLI::App* kappa = app.add_subcommand(
      "kappa", "Emit the exact rational series coefficients as CSV (s,k,numerator,denominator)");
  kappa->add_option("--smax", smax, "largest series order s")->check(CLI::Range(0, 64));
  kappa->callback([&smax] { run_kappa(smax); });

  ProfileArgs pa;
  CLI::App* profile = app.add_subcommand(
      "profile", "Sweep one member I_{beta,k}(tau) as CSV (c,k,tau,value)");
  profile->add_option("--e", pa.e, "second eccentricity (0 < e < 1)")->required();
  profile->add_option("--c-list", pa.c_list, "obliquity values (default 0.1 0.5 0.9)");
  profile->add_option("--k-list", pa.k_list, "member indices k (default 0 1 2)");
  profile->add_option("--beta", pa.beta, "member exponent beta (integer or half-integer)");
  profile->add_option("--tau-steps", pa.tau_steps, "points per curve, from 0 to b(c)(1-margin)");
  profile->add_option("--margin", pa.margin, "branch-point guard band");
  profile->callback([&pa] { run_profile(pa); });

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Evaluate both integrals by adaptive quadrature of the raw integrands");
  oracle->add_option("--e", oa.e, "second eccentricity (0 < e < 1)")->required();
  oracle->add_option("--h", oa.h, "scaled altitude (altitude / rho_e)");
  oracle->add_option("--c", oa.c, "obliquity parameter (0 <= c < 1)")->required();
  oracle->add_option("--tau0", oa.tau0, "lower limit, tau = sin(latitude)")->required();
  oracle->add_option("--tau1", oa.tau1, "upper limit, tau = sin(latitude)")->required();
  oracle->add_option("--rho-e", oa.rho_e, "equatorial radius (scales s only)");
  oracle->add_option("--abs-tol", oa.abs_tol, "absolute tolerance");
  oracle->add_option("--rel-tol", oa.rel_tol, "relative tolerance");
  oracle->add_option("--max-subdivisions", oa.max_subdivisions, "panel limit");
  oracle->add_flag("--degrees", oa.degrees, "additionally print Delta_lambda in degrees");
  oracle->callback([&oa] { run_oracle(oa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const geodint::DomainError& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const geodint::UnsupportedIndexError& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const geodint::SolverError& err) {
    std::cerr << err.what() << "\n";
    return 3;
  } catch (const geodint::SubdivisionLimitError& err) {
    std::cerr << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
