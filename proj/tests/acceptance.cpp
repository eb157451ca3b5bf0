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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "besselkit/catalog.hpp"
#include "besselkit/report.hpp"
#include "besselkit/series.hpp"
#include "besselkit/specfun.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace besselkit;
using namespace besselkit::catalog;
namespace sf = besselkit::specfun;

namespace {

  struct Outcome {
    bool ok = true;
    std::string detail;
  };

  int g_failed = 0;

  void criterion(int n, const char* what, double limit_s, const std::function<Outcome()>& body)
  {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = dt < limit_s;
    bool ok = o.ok && in_time;
    if (!ok) ++g_failed;
    std::printf("criterion %2d: %s  %s  [%s; %.2f s of %.0f s]\n", n, ok ? "PASS" : "FAIL", what, o.detail.c_str(), dt,
                limit_s);
    std::fflush(stdout);
  }

  double rel(double a, double b) { return std::fabs(a - b) / std::fmax(std::fabs(a), std::fabs(b)); }

  // Verifies id over grid at tol; every entry must pass.
  Outcome grid_check(const std::string& id, const std::vector<ParamPoint>& grid, double tol, unsigned jobs = 4)
  {
    GridOptions o;
    o.policy.override_rel_tol = tol;
    o.jobs = jobs;
    Report rep = verify_grid(id, grid, o);
    double worst = 0;
    for (const auto& e : rep.entries) worst = std::fmax(worst, e.rel_diff);
    std::ostringstream os;
    os << id << " " << rep.summary.pass << "/" << rep.entries.size() << " pass, worst rel " << std::scientific;
    os.precision(2);
    os << worst;
    return {rep.summary.pass == rep.entries.size(), os.str()};
  }

  Outcome both(Outcome a, const Outcome& b)
  {
    a.ok = a.ok && b.ok;
    a.detail += "; " + b.detail;
    return a;
  }

  std::vector<ParamPoint> grid_of(const std::string& id, const std::function<bool(const ParamPoint&)>& keep)
  {
    std::vector<ParamPoint> out;
    for (const auto& p : find_identity(id).space.default_grid)
      if (keep(p)) out.push_back(p);
    return out;
  }

  std::vector<ParamPoint> cart(const std::vector<std::pair<std::string, std::vector<double>>>& axes)
  {
    std::vector<ParamPoint> out{ParamPoint{}};
    for (const auto& [k, vals] : axes) {
      std::vector<ParamPoint> next;
      for (const auto& p : out)
        for (double v : vals) {
          ParamPoint q = p;
          q[k] = v;
          next.push_back(q);
        }
      out = next;
    }
    return out;
  }

}

int main()
{
  criterion(1, "Wronskians of J/Y and I/K at rel 1e-8", 1.0, [] {
    double worst = 0;
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.5})
      for (double x : {0.1, 1.0, 5.0, 20.0, 50.0}) {
        double wjy = sf::bessel_j(nu + 1, x).value * sf::bessel_y(nu, x).value
                   - sf::bessel_j(nu, x).value * sf::bessel_y(nu + 1, x).value;
        double wik = sf::bessel_i(nu, x).value * sf::bessel_k(nu + 1, x).value
                   + sf::bessel_i(nu + 1, x).value * sf::bessel_k(nu, x).value;
        worst = std::fmax(worst, rel(wjy, 2 / (kPi * x)));
        worst = std::fmax(worst, rel(wik, 1 / x));
      }
    char buf[64];
    std::snprintf(buf, sizeof buf, "50 checks, worst rel %.2e", worst);
    return Outcome{worst <= 1e-8, buf};
  });

  criterion(2, "Weber's second exponential integral at rel 1e-8", 10.0, [] {
    return grid_check("I-2.32", cart({{"nu", {0, 0.5, 1}}, {"a", {0.5, 1, 2}}, {"b", {0.5, 1, 2}}, {"p", {0.5, 1, 2}}}),
                      1e-8);
  });

  criterion(3, "triple-product series vs quadrature at rel 1e-7", 30.0, [] {
    return grid_check("I-3.8", cart({{"alpha", {0.5, 1, 2}}, {"beta1", {0.5, 1, 1.5}}, {"beta2", {0.5, 1, 1.5}},
                                     {"beta3", {0.5, 1, 1.5}}}),
                      1e-7);
  });

  criterion(4, "four-Bessel closed form, rel 1e-6 (a <= 0.7) and 1e-4 (a = 0.9)", 20.0, [] {
    return both(grid_check("I-3.22", {{{"a", 0.3}}, {{"a", 0.5}}, {{"a", 0.7}}}, 1e-6),
                grid_check("I-3.22", {{{"a", 0.9}}}, 1e-4));
  });

  criterion(5, "inverse Hankel transform giving K_mu, rel 1e-5", 60.0, [] {
    return grid_check("I-2.12", cart({{"mu", {0, 0.5, 1}}, {"nu", {0, 0.5, 1}}, {"t", {0.5, 1, 2}}}), 1e-5);
  });

  criterion(6, "Kelvin representations, all eight", 120.0, [] {
    auto ay = cart({{"a", {0.5, 1}}, {"y", {0.3, 1, 2}}});
    auto at = cart({{"a", {0.5, 1}}, {"t", {0.3, 1, 2}}});
    Outcome o = grid_check("I-2.15", ay, 1e-6);
    for (const char* id : {"I-2.16", "I-2.17", "I-2.18"}) o = both(o, grid_check(id, ay, 1e-6));
    for (const char* id : {"I-2.19", "I-2.20"}) o = both(o, grid_check(id, at, 1e-4));
    for (const char* id : {"I-2.21", "I-2.22"}) o = both(o, grid_check(id, at, 1e-5));
    return o;
  });

  criterion(7, "0F3 representations of the J product, rel 1e-6, b/a <= 0.9", 60.0, [] {
    auto ratio_ok = [](const ParamPoint& p) { return p.at("b") / p.at("a") <= 0.9 + 1e-12; };
    return both(grid_check("I-2.4", grid_of("I-2.4", ratio_ok), 1e-6),
                grid_check("I-2.37", grid_of("I-2.37", ratio_ok), 1e-6));
  });

  criterion(8, "general-m triple products at rel 1e-4, m = 0 chain to 1e-9", 60.0, [] {
    auto low_m = [](const ParamPoint& p) { return p.at("m") >= 1 && p.at("m") <= 2; };
    auto g19 = grid_of("I-3.19", low_m);
    g19.push_back({{"alpha", 1.5}, {"beta1", 0.8}, {"beta2", 1.2}, {"beta3", 0.6}, {"m", 2}});
    auto g20 = cart({{"alpha", {0.5, 1, 2}}, {"beta1", {0.5, 1}}, {"beta2", {1}}, {"m", {1, 2}}});
    Outcome o = both(grid_check("I-3.19", g19, 1e-4), grid_check("I-3.20", g20, 1e-4));
    double worst = 0;
    for (double al : {0.5, 1.0, 2.0})
      for (double b1 : {0.5, 1.0, 1.5})
        for (double b2 : {0.5, 1.0}) {
          double weber = std::exp(-(b1 - b2) * (b1 - b2) / (4 * al)) * sf::bessel_i_scaled(0, b1 * b2 / (2 * al)).value / al;
          worst = std::fmax(worst, rel(series::weber_triple_m({al, b1, b2, 0.7, 0}).value,
                                       series::weber_triple({al, b1, b2, 0.7, 0}).value));
          worst = std::fmax(worst, rel(series::weber_triple({al, b1, b2, 0.0, 0}).value, weber));
          worst = std::fmax(worst, rel(series::weber_j0jm_limit(al, b1, b2, 0).value, weber));
          auto r32 = evaluate_sides("I-2.32", {{"nu", 0}, {"a", b1}, {"b", b2}, {"p", al}}).second;
          worst = std::fmax(worst, rel(2 * r32.value, weber));
        }
    char buf[64];
    std::snprintf(buf, sizeof buf, "m=0 chain worst rel %.2e", worst);
    return both(o, Outcome{worst <= 1e-9, buf});
  });

  criterion(9, "Neumann and 0F1 product series at rel 1e-8", 5.0, [] {
    return both(grid_check("I-2.30", find_identity("I-2.30").space.default_grid, 1e-8),
                grid_check("I-2.35", find_identity("I-2.35").space.default_grid, 1e-8));
  });

  criterion(10, "full 'verify all' through the CLI, no fail entries", 300.0, [] {
    namespace fs = std::filesystem;
    fs::path out = fs::temp_directory_path() / ("besselkit_acceptance_" + std::to_string(::getpid()) + ".json");
    std::string cmd = std::string(BK_CLI_PATH) + " verify all --jobs 4 --json --out " + out.string() + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    Report rep = report::from_json(ss.str());
    const std::set<std::string> allowed{"I-2.11", "I-3.21"};
    bool ok = code == 0 && rep.summary.fail == 0 && !rep.entries.empty();
    std::size_t logged = 0;
    std::set<std::string> ids;
    for (const auto& e : rep.entries) {
      ids.insert(e.id);
      if (e.status == Status::inconclusive) {
        if (!allowed.count(e.id)) ok = false;
        // a converged disagreement must state the measured ratio
        if (std::isfinite(e.lhs.value) && std::isfinite(e.rhs.value) && !e.discrepancy_ratio) ok = false;
        if (e.discrepancy_ratio) ++logged;
      }
    }
    ok = ok && ids.size() == list_identities().size();
    std::ostringstream os;
    os << "exit " << code << ", " << rep.entries.size() << " entries over " << ids.size() << " ids: "
       << rep.summary.pass << " pass, " << rep.summary.fail << " fail, " << rep.summary.inconclusive
       << " inconclusive (" << logged << " with a logged discrepancy ratio)";
    return Outcome{ok, os.str()};
  });

  std::printf("%s: %d criterion(s) failed\n", g_failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", g_failed);
  return g_failed ? 1 : 0;
}
