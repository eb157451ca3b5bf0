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

#include "besselkit/catalog.hpp"
#include "besselkit/specfun.hpp"

#include <cmath>
#include <set>

using namespace besselkit;
using namespace besselkit::catalog;

namespace {

  double rel(double got, double ref) { return std::fabs(got - ref) / std::fmax(std::fabs(ref), 1e-300); }

  bool route_is_quadrature(const std::string& r) { return r.rfind("quadrature", 0) == 0; }

}

TEST_CASE("manifest shape")
{
  const auto& m = list_identities();
  CHECK(m.size() >= 25);
  std::set<std::string> ids;
  std::set<std::string> hard;
  for (const auto& r : m) {
    CAPTURE(r.id);
    CHECK(ids.insert(r.id).second);
    CHECK_FALSE(r.statement.empty());
    CHECK_FALSE(r.anchor.empty());
    CHECK(r.lhs);
    CHECK(r.rhs);
    // the two sides go through different machinery
    CHECK(r.lhs_route != r.rhs_route);
    CHECK((route_is_quadrature(r.lhs_route) && route_is_quadrature(r.rhs_route)) == false);
    CHECK(r.space.default_grid.size() >= 3);
    CHECK_FALSE(r.space.hard_points.empty());
    for (const auto& h : r.space.hard_points) {
      bool found = false;
      for (const auto& p : r.space.default_grid) found = found || p == h;
      CHECK(found);
    }
    for (const auto& p : r.space.default_grid) CHECK_NOTHROW(check_point(r, p));
    if (r.difficulty == Difficulty::hard) hard.insert(r.id);
  }
  CHECK(hard == std::set<std::string>{"I-3.19", "I-3.21"});
  CHECK(find_identity("I-2.32").difficulty == Difficulty::easy);
  CHECK(find_identity("I-2.12").difficulty == Difficulty::oscillatory);
}

TEST_CASE("unknown ids and constraint violations")
{
  CHECK_THROWS_AS(find_identity("I-9.99"), UnknownIdError);
  CHECK_THROWS_AS(verify("I-9.99", {}, 1e-8, 1e-14), UnknownIdError);
  try {
    evaluate_sides("I-3.22", {{"a", 1.5}});
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("0 < a < 1") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate_sides("I-2.32", {{"nu", 0}, {"a", 1}, {"b", 1}}), ConstraintError);
  CHECK_THROWS_AS(evaluate_sides("I-2.32", {{"nu", 0}, {"a", 1}, {"b", 1}, {"p", 1}, {"q", 2}}), ConstraintError);
  // strict inequalities carry a margin
  CHECK_THROWS_AS(evaluate_sides("I-3.22", {{"a", 1 - 1e-8}}), ConstraintError);
  CHECK_THROWS_AS(evaluate_sides("I-3.19", {{"alpha", 1}, {"beta1", 1}, {"beta2", 1}, {"beta3", 1}, {"m", 1.5}}),
                  ConstraintError);
}

TEST_CASE("Weber's second exponential integral at a = b = 1")
{
  auto [l, r] = evaluate_sides("I-2.32", {{"nu", 0}, {"a", 1}, {"b", 1}, {"p", 1}});
  // exp(-1/2) I_0(1/2) / 2
  CHECK(rel(r.value, 0.32251763522457506) <= 1e-14);
  CHECK(rel(l.value, r.value) <= 1e-10);
}

TEST_CASE("four-Bessel integral at a = 1/2")
{
  auto [l, r] = evaluate_sides("I-3.22", {{"a", 0.5}});
  CHECK(rel(r.value, 0.0410864986355409) <= 1e-13);
  CHECK(rel(l.value, r.value) <= 1e-8);
}

TEST_CASE("grading rule")
{
  double ad, rd;
  EvalResult a{1.0, 0, true, 0}, b{1.0 + 1e-9, 0, true, 0};
  CHECK(grade(a, b, 1e-8, 1e-14, ad, rd) == Status::pass);
  CHECK(grade(a, b, 1e-10, 1e-14, ad, rd) == Status::fail);
  b.converged = false;
  CHECK(grade(a, b, 1e-8, 1e-14, ad, rd) == Status::inconclusive);
  // near zero the absolute floor applies
  EvalResult z1{1e-16, 0, true, 0}, z2{-2e-16, 0, true, 0};
  CHECK(grade(z1, z2, 1e-8, 1e-14, ad, rd) == Status::pass);
  CHECK(grade(z1, z2, 1e-8, 1e-17, ad, rd) == Status::fail);
}

TEST_CASE("default grids of selected identities pass")
{
  GridOptions o;
  o.jobs = 2;
  for (const char* id : {"I-2.32", "I-3.8", "I-2.12", "I-2.30", "I-2.35", "I-2.13", "I-K1", "I-K1a", "I-K1b"}) {
    CAPTURE(id);
    Report rep = verify_grid(id, std::nullopt, o);
    CHECK(rep.summary.fail == 0);
    CHECK(rep.summary.inconclusive == 0);
    CHECK(rep.summary.pass == find_identity(id).space.default_grid.size());
  }
}

TEST_CASE("grid ordering is deterministic and independent of the job count")
{
  GridOptions one, four;
  four.jobs = 4;
  Report a = verify_grid("I-2.30", std::nullopt, one);
  Report b = verify_grid("I-2.30", std::nullopt, four);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].point == b.entries[i].point);
    CHECK(a.entries[i].lhs.value == b.entries[i].lhs.value);
    CHECK(a.entries[i].rhs.value == b.entries[i].rhs.value);
    if (i) CHECK(point_less(a.entries[i - 1].point, a.entries[i].point));
  }
}

TEST_CASE("grid overrides")
{
  GridOptions o;
  CHECK_THROWS_AS(verify_grid("I-3.22", std::vector<ParamPoint>{}, o), DomainError);
  // a bad point becomes an inconclusive entry instead of aborting the run
  Report rep = verify_grid("I-3.22", std::vector<ParamPoint>{{{"a", 0.4}}, {{"a", 2.0}}}, o);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].status == Status::pass);
  CHECK(rep.entries[1].status == Status::inconclusive);
  CHECK(rep.entries[1].note.find("0 < a < 1") != std::string::npos);
}

TEST_CASE("budget exhaustion yields inconclusive, never pass or fail")
{
  GridOptions o;
  o.budget.max_terms = 2;
  Report rep = verify_grid("I-2.30", std::nullopt, o);
  CHECK(rep.summary.inconclusive > 0);
  CHECK(rep.summary.fail == 0);
  for (const auto& e : rep.entries)
    if (e.status == Status::inconclusive) CHECK(e.note.find("converge") != std::string::npos);

  GridOptions c;
  c.budget.max_cells = 3;
  rep = verify_grid("I-2.12", std::nullopt, c);
  CHECK(rep.summary.inconclusive == rep.entries.size());
}

TEST_CASE("tolerance override can force failures")
{
  GridOptions o;
  o.policy.override_rel_tol = 1e-18;
  Report rep = verify_grid("I-2.19", std::nullopt, o);
  CHECK(rep.summary.fail > 0);
}

TEST_CASE("recorded discrepancies carry the measured ratio")
{
  GridOptions o;
  Report rep = verify_grid("I-3.21", std::nullopt, o);
  CHECK(rep.summary.fail == 0);
  bool saw_ratio = false;
  for (const auto& e : rep.entries) {
    if (e.point.at("nu") == 0.5) CHECK(e.status == Status::pass);
    if (e.discrepancy_ratio) {
      saw_ratio = true;
      CHECK(e.status == Status::inconclusive);
      CHECK(rel(*e.discrepancy_ratio, e.lhs.value / e.rhs.value) <= 1e-15);
      CHECK(e.note.find("ratio") != std::string::npos);
    }
  }
  CHECK(saw_ratio);
}

TEST_CASE("reduction chains across identities")
{
  // triple product with beta3 = 0 is twice Weber's integral at p = alpha
  for (double al : {0.5, 1.0, 2.0}) {
    auto [l8, r8] = evaluate_sides("I-3.8", {{"alpha", al}, {"beta1", 0.7}, {"beta2", 1.3}, {"beta3", 0.0}});
    auto [l32, r32] = evaluate_sides("I-2.32", {{"nu", 0}, {"a", 0.7}, {"b", 1.3}, {"p", al}});
    CHECK(rel(r8.value, 2 * r32.value) <= 1e-12);
    CHECK(rel(l8.value, 2 * l32.value) <= 1e-9);
  }
  // the general Kelvin integral at nu = 0 and nu = 1 reproduces the even and odd cases
  auto [g0, gr0] = evaluate_sides("I-K1", {{"nu", 0}, {"theta", 0.6}, {"u", 1.3}});
  auto [e0, er0] = evaluate_sides("I-K1a", {{"n", 0}, {"theta", 0.6}, {"u", 1.3}});
  CHECK(rel(g0.value, e0.value) <= 1e-12);
  CHECK(rel(gr0.value, er0.value) <= 1e-15);
  auto [g1, gr1] = evaluate_sides("I-K1", {{"nu", 1}, {"theta", 0.6}, {"u", 1.3}});
  auto [o0, or0] = evaluate_sides("I-K1b", {{"n", 0}, {"theta", 0.6}, {"u", 1.3}});
  CHECK(rel(g1.value, o0.value) <= 1e-12);
  CHECK(rel(gr1.value, or0.value) <= 1e-15);
  // the conjugate-argument form is the product form at a b x^2 = 1, (a^2 + b^2) x^2 = u^2
  const double u = 2.2, sp = std::sqrt(u * u + 2), sm = std::sqrt(u * u - 2);
  auto [j37, q37] = evaluate_sides("I-2.37", {{"nu", 0.5}, {"a", (sp + sm) / 2}, {"b", (sp - sm) / 2}, {"x", 1}});
  auto [j38, q38] = evaluate_sides("I-2.38", {{"nu", 0.5}, {"u", u}});
  CHECK(rel(j37.value, j38.value) <= 1e-14);
  CHECK(rel(q37.value, q38.value) <= 1e-10);
}
