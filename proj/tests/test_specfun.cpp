////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of besselkit                                            //
//                                                                            //
//  Copyright 2026 besselkit developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "doctest.h"

#include "besselkit/specfun.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#ifdef BK_HAVE_BOOST_MATH
#include <boost/math/special_functions/bessel.hpp>
#endif

#include "specfun_ref.inc"

using namespace besselkit;
using namespace besselkit::specfun;

namespace {

  double rel(double got, double ref) { return std::fabs(got - ref) / std::fmax(std::fabs(ref), 1e-300); }

  EvalResult call(const char* fn, double a, double b)
  {
    if (!std::strcmp(fn, "bessel_j")) return bessel_j(a, b);
    if (!std::strcmp(fn, "bessel_y")) return bessel_y(a, b);
    if (!std::strcmp(fn, "bessel_i")) return bessel_i(a, b);
    if (!std::strcmp(fn, "bessel_k")) return bessel_k(a, b);
    if (!std::strcmp(fn, "bessel_i_scaled")) return bessel_i_scaled(a, b);
    if (!std::strcmp(fn, "bessel_k_scaled")) return bessel_k_scaled(a, b);
    if (!std::strcmp(fn, "kelvin_ber")) return kelvin_ber(a, b);
    return kelvin_bei(a, b);
  }

}

TEST_CASE("Bessel and Kelvin kernels against the frozen reference table")
{
  int checked = 0;
  for (const auto& r : kRef2) {
    CAPTURE(r.fn);
    CAPTURE(r.a);
    CAPTURE(r.b);
    EvalResult e = call(r.fn, r.a, r.b);
    CHECK(e.converged);
    CHECK(rel(e.value, r.ref) <= 1e-12);
    // error estimate is an upper bound
    CHECK(std::fabs(e.value - r.ref) <= e.abs_err);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("gamma and log_gamma")
{
  struct G {
    double x, g, lg;
  };
  const G refs[] = {
      {0.5, 1.7724538509055160273, 0.57236494292470008707},
      {1, 1.0, 0.0},
      {5, 24.0, 3.1780538303479456196},
      {10.3, 716430.68906237640663, 13.482036786138358593},
      {171.2, 2.0285135805156115146e+307, 707.60092684767008566},
      {-0.5, -3.5449077018110320546, 1.2655121234846453965},
      {-2.7, -0.93108278483896396546, -0.071407085315645687684},
      {1e-05, 99999.422794225559493, 11.512919692895825626},
  };
  for (const auto& r : refs) {
    CAPTURE(r.x);
    CHECK(rel(specfun::gamma(r.x), r.g) <= 1e-13);
    CHECK(std::fabs(log_gamma(r.x) - r.lg) <= 1e-13 * std::fmax(1.0, std::fabs(r.lg)));
    CHECK(rel(rgamma(r.x), 1.0 / r.g) <= 1e-13);
  }
  CHECK_THROWS_AS(specfun::gamma(0.0), PoleError);
  CHECK_THROWS_AS(specfun::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-1.0), PoleError);
  CHECK(rgamma(-2.0) == 0.0);
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("Legendre duplication formula")
{
  for (double x : {0.3, 0.5, 1.0, 2.75, 7.1, 20.5, 60.0}) {
    CAPTURE(x);
    double lhs = log_gamma(x) + log_gamma(x + 0.5);
    double rhs = (1 - 2 * x) * std::log(2.0) + 0.5 * std::log(kPi) + log_gamma(2 * x);
    CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::fmax(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("sin_pi and cos_pi are exact at special points")
{
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(cos_pi(2.5) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(cos_pi(1.0) == -1.0);
  CHECK(std::fabs(sin_pi(0.25) - std::sqrt(0.5)) <= 1.2e-16);
}

TEST_CASE("Wronskian of J and Y")
{
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.5, 10.0}) {
    for (double x : {0.1, 1.0, 5.0, 20.0, 50.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      double w = bessel_j(nu + 1, x).value * bessel_y(nu, x).value - bessel_j(nu, x).value * bessel_y(nu + 1, x).value;
      CHECK(rel(w, 2 / (kPi * x)) <= 1e-12);
    }
  }
}

TEST_CASE("Wronskian of I and K")
{
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.5, 10.0}) {
    for (double x : {0.1, 1.0, 5.0, 20.0, 50.0, 400.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      double w = bessel_i_scaled(nu, x).value * bessel_k_scaled(nu + 1, x).value
               + bessel_i_scaled(nu + 1, x).value * bessel_k_scaled(nu, x).value;
      CHECK(rel(w, 1 / x) <= 1e-12);
    }
  }
}

TEST_CASE("integer-order reflection")
{
  for (int n : {1, 2, 3, 6}) {
    for (double x : {0.3, 2.0, 11.0}) {
      double sgn = n % 2 ? -1.0 : 1.0;
      CHECK(rel(bessel_j(-n, x).value, sgn * bessel_j(n, x).value) <= 1e-14);
      CHECK(rel(bessel_y(-n, x).value, sgn * bessel_y(n, x).value) <= 1e-14);
      CHECK(rel(bessel_i(-n, x).value, bessel_i(n, x).value) <= 1e-14);
      CHECK(rel(bessel_k(-n - 0.3, x).value, bessel_k(n + 0.3, x).value) <= 1e-15);
      CHECK(rel(kelvin_ber(-n, x).value, sgn * kelvin_ber(n, x).value) <= 1e-13);
      CHECK(rel(kelvin_bei(-n, x).value, sgn * kelvin_bei(n, x).value) <= 1e-13);
    }
  }
}

TEST_CASE("three-term recurrence")
{
  for (double nu : {0.5, 1.0, 3.3, 15.0}) {
    for (double x : {0.7, 4.0, 25.0}) {
      double j = bessel_j(nu - 1, x).value + bessel_j(nu + 1, x).value;
      CHECK(std::fabs(j - 2 * nu / x * bessel_j(nu, x).value) <= 1e-13 * (std::fabs(j) + 1e-3));
      double k = bessel_k(nu + 1, x).value - bessel_k(nu - 1, x).value;
      CHECK(rel(k, 2 * nu / x * bessel_k(nu, x).value) <= 1e-12);
    }
  }
}

TEST_CASE("algorithm switch points are continuous")
{
  // series/continued-fraction switch at x = 2 and the asymptotic switch
  for (double nu : {0.0, 0.4, 1.0}) {
    for (double x0 : {2.0, 30.0, 40.0}) {
      double h = 1e-7 * x0;
      double jm = bessel_j(nu, x0 - h).value, jp = bessel_j(nu, x0 + h).value;
      double dj = (bessel_j(nu - 1, x0).value - bessel_j(nu + 1, x0).value) / 2;
      CHECK(std::fabs(jp - jm - 2 * h * dj) <= 1e-14 + 1e-12 * h);
      double km = bessel_k_scaled(nu, x0 - h).value, kp = bessel_k_scaled(nu, x0 + h).value;
      CHECK(rel(kp, km) <= 1e-6);
    }
  }
}

TEST_CASE("scaled and unscaled modified Bessel functions agree")
{
  for (double nu : {0.0, 1.5, 7.0}) {
    for (double x : {0.2, 3.0, 60.0}) {
      CHECK(rel(bessel_i(nu, x).value, bessel_i_scaled(nu, x).value * std::exp(x)) <= 1e-15);
      CHECK(rel(bessel_k(nu, x).value, bessel_k_scaled(nu, x).value * std::exp(-x)) <= 1e-15);
    }
  }
}

TEST_CASE("Kelvin functions equal their 0F3 forms")
{
  for (double x = 0.25; x <= 20.0; x += 0.25) {
    CAPTURE(x);
    double z = -std::pow(x, 4) / 256;
    EvalResult f = hyp0f3(0.5, 0.5, 1, z);
    EvalResult g = hyp0f3(1.5, 1.5, 1, z);
    double ber = kelvin_ber(0, x).value, bei = kelvin_bei(0, x).value;
    double scale = std::exp(x / std::sqrt(2.0));
    CHECK(std::fabs(ber - f.value) <= 1e-13 * scale);
    CHECK(std::fabs(bei - x * x / 4 * g.value) <= 1e-13 * scale);
  }
  CHECK(kelvin_ber(0, 1).value == doctest::Approx(0.9843817812130868).epsilon(1e-15));
  CHECK(kelvin_bei(0, 1).value == doctest::Approx(0.2495660400366597).epsilon(1e-15));
}

TEST_CASE("hypergeometric series")
{
  struct H1 {
    double b, z, ref;
  };
  for (auto r : {H1{1, 0.5, 1.5660829297563505373}, H1{0.5, -3, -0.94844319584182776111},
                 H1{2.5, 10, 17.620004286080185053}, H1{1.5, -40, 0.0065337125917707650778},
                 H1{3, -0.01, 0.99667083055671263227}}) {
    EvalResult e = hyp0f1(r.b, r.z);
    CHECK(e.converged);
    CHECK(std::fabs(e.value - r.ref) <= e.abs_err);
    CHECK(rel(e.value, r.ref) <= 1e-10);
  }
  struct H3 {
    double b1, b2, b3, z, ref;
  };
  for (auto r : {H3{0.5, 0.5, 1, -0.00390625, 0.98438178121308688397}, H3{1.5, 1.5, 1, -39.0625, 2.2548183421562655293},
                 H3{1, 2, 3, 5, 1.9225753915727226109}, H3{1, 1.25, 1.75, -100, 17.262858178854380311},
                 H3{2, 0.75, 1.25, -2000, -28484.625818146396272}}) {
    EvalResult e = hyp0f3(r.b1, r.b2, r.b3, r.z);
    CHECK(e.converged);
    CHECK(rel(e.value, r.ref) <= 1e-12);
    CHECK(std::fabs(e.value - r.ref) <= e.abs_err);
  }
  struct H2 {
    double a, b, c, z, ref;
  };
  for (auto r : {H2{0.5, 1, 1.5, 0.25, 1.0986122886681096914}, H2{1, 1, 2, -0.9, 0.71317098463599419094},
                 H2{-3, 4, 1, 0.3, -0.44000000000000000666}, H2{0.3, 0.7, 2.5, 1.0, 1.1480180708837365613},
                 H2{1.5, 2, 3, -3, 0.22222222222222222222}, H2{2, 3, 4, 0.8, 9.2643994636628888557}}) {
    CAPTURE(r.z);
    EvalResult e = hyp2f1(r.a, r.b, r.c, r.z);
    CHECK(e.converged);
    CHECK(rel(e.value, r.ref) <= 1e-12);
  }
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.5, 1.5), DomainError);
  CHECK_THROWS_AS(hyp0f1(-2, 1.0), PoleError);
  CHECK_THROWS_AS(hyp0f3(1, 1, 1, -1e7), DomainError);
}

TEST_CASE("series budget exhaustion is reported, not hidden")
{
  SeriesOptions o;
  o.max_terms = 3;
  EvalResult e = hyp0f1(1.0, -30.0, o);
  CHECK_FALSE(e.converged);
  CHECK(e.terms == 3);
}

TEST_CASE("orthogonal polynomials")
{
  CHECK(laguerre(0, 0, 1) == 1.0);
  CHECK(rel(laguerre(5, 0, 2), 0.73333333333333333333) <= 1e-14);
  CHECK(rel(laguerre(7, 1.5, 3.2), 1.841552029503967831) <= 1e-13);
  CHECK(rel(laguerre(12, 0.5, 0.7), -0.30328829429060199157) <= 1e-13);
  CHECK(gegenbauer(0, 1, 0.3) == 1.0);
  CHECK(rel(gegenbauer(3, 0.5, 0.2), -0.28000000000000001332) <= 1e-14);
  CHECK(rel(gegenbauer(6, 1.5, -0.7), -3.1622845624999988823) <= 1e-13);
  CHECK(rel(gegenbauer(10, 2.25, 0.9), -34.229173467460143045) <= 1e-13);
}

TEST_CASE("domain and overflow errors")
{
  CHECK_THROWS_AS(bessel_j(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_y(0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_k(1, -2.0), DomainError);
  CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_j(2000, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(0, std::nan("")), DomainError);
  CHECK_THROWS_AS(bessel_i(0, 800.0), OverflowError);
  CHECK_NOTHROW(bessel_i_scaled(0, 800.0));
  CHECK_THROWS_AS(kelvin_ber(0, 150.0), DomainError);
  CHECK(bessel_j(0, 0.0).value == 1.0);
  CHECK(bessel_j(3, 0.0).value == 0.0);
}

#ifdef BK_HAVE_BOOST_MATH
TEST_CASE("cross-check against Boost.Math")
{
  namespace bm = boost::math;
  for (double nu : {-4.7, -1.5, 0.0, 0.25, 1.0, 3.5, 12.0, 45.0}) {
    for (double x : {0.01, 0.5, 1.99, 2.01, 7.3, 29.0, 31.0, 85.0, 500.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      double env = std::hypot(bessel_j(std::fabs(nu), x).value, bessel_y(std::fabs(nu), x).value);
      CHECK(std::fabs(bessel_j(nu, x).value - bm::cyl_bessel_j(nu, x)) <= 1e-11 * env);
      CHECK(std::fabs(bessel_y(nu, x).value - bm::cyl_neumann(nu, x)) <= 1e-11 * env);
      if (x < 600) CHECK(rel(bessel_k(nu, x).value, bm::cyl_bessel_k(nu, x)) <= 1e-12);
      if (nu >= 0 && x < 700) CHECK(rel(bessel_i(nu, x).value, bm::cyl_bessel_i(nu, x)) <= 1e-12);
    }
  }
}
#endif
