#include <cmath>
#include <string>

#include <doctest.h>

#include "geodint/inverse.hpp"
#include "geodint/series.hpp"
#include "test_helpers.hpp"

using namespace geodint;

namespace {

/// Longitude at obliquity c for the standard test arc.
double forward(const Ellipsoid& ell, double c, double h, double tau0, double tau1) {
  GeodesicSpec spec;
  spec.c = c;
  spec.h = h;
  spec.tau0 = tau0;
  spec.tau1 = tau1;
  return longitude_integral(ell, spec).value;
}

}  // namespace

TEST_SUITE("inverse") {

TEST_CASE("round trips recover the generating obliquity") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  for (double c_star : {0.05, 0.5, 0.9}) {
    for (double h : {0.0, 1e-3}) {
      CAPTURE(c_star);
      CAPTURE(h);
      InverseProblem prob;
      prob.tau1 = 0.4;
      prob.h = h;
      prob.target = forward(ell, c_star, h, 0.0, 0.4);
      const InverseSolution sol = solve_c(prob, ell);
      CHECK(std::abs(sol.c - c_star) <= 1e-10);
      CHECK(sol.iterations <= 25);
      CHECK(sol.residual <= 1e-12);
    }
  }
}

TEST_CASE("descending arcs with negative targets work the same way") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  const double c_star = 0.4;
  InverseProblem prob;
  prob.tau0 = 0.4;
  prob.tau1 = 0.0;
  prob.h = 1e-3;
  prob.target = forward(ell, c_star, prob.h, 0.4, 0.0);
  REQUIRE(prob.target < 0.0);
  const InverseSolution sol = solve_c(prob, ell);
  CHECK(std::abs(sol.c - c_star) <= 1e-10);
}

TEST_CASE("zero target is answered without iterating") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  InverseProblem prob;
  prob.tau1 = 0.4;
  const InverseSolution sol = solve_c(prob, ell);
  CHECK(sol.c == 0.0);
  CHECK(sol.iterations == 0);
}

TEST_CASE("unreachable targets report a bracketing failure") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  InverseProblem prob;
  prob.tau1 = 0.4;
  // Twice the longitude attainable at the c ceiling cannot be bracketed.
  const double at_upper = forward(ell, 0.9, 0.0, 0.0, 0.4);
  prob.target = 2.0 * at_upper;
  try {
    solve_c(prob, ell);
    FAIL("expected SolverError");
  } catch (const SolverError& err) {
    CHECK(std::string(err.what()).find("no bracket") != std::string::npos);
  }
}

TEST_CASE("latitude spans that leave no admissible obliquity are rejected") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  InverseProblem prob;
  prob.tau1 = 0.96;  // 0.96/(1-margin) > 1: no c > 0 keeps tau inside b(c)
  prob.target = 0.3;
  CHECK_THROWS_AS(solve_c(prob, ell), DomainError);
}

TEST_CASE("solver honours a strict iteration budget") {
  const Ellipsoid ell = make_ellipsoid(1.0, 0.08182);
  InverseProblem prob;
  prob.tau1 = 0.4;
  prob.target = forward(ell, 0.7, 0.0, 0.0, 0.4);
  prob.max_iter = 2;  // too few for any tolerance this tight
  CHECK_THROWS_AS(solve_c(prob, ell), SolverError);
}

}  // TEST_SUITE
