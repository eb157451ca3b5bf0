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

#include "besselkit/specfun.hpp"

#include "besselkit/catalog.hpp"

#include "besselkit/quad.hpp"
#include "besselkit/series.hpp"
#include "besselkit/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <initializer_list>
#include <mutex>
#include <sstream>
#include <thread>

namespace besselkit::catalog {

  namespace sf = specfun;
  using P = const ParamPoint&;
  using C = const SideContext&;

  const char* to_string(Difficulty d)
  {
    switch (d) {
    case Difficulty::easy: return "easy";
    case Difficulty::oscillatory: return "oscillatory";
    case Difficulty::hard: return "hard";
    }
    return "?";
  }

  const char* to_string(Status s)
  {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    }
    return "?";
  }

  std::optional<Difficulty> parse_difficulty(const std::string& s)
  {
    if (s == "easy") return Difficulty::easy;
    if (s == "oscillatory") return Difficulty::oscillatory;
    if (s == "hard") return Difficulty::hard;
    return std::nullopt;
  }

  std::optional<Status> parse_status(const std::string& s)
  {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "inconclusive") return Status::inconclusive;
    return std::nullopt;
  }

  double TolerancePolicy::rel_tol_for(Difficulty d) const
  {
    if (override_rel_tol) return *override_rel_tol;
    switch (d) {
    case Difficulty::easy: return easy;
    case Difficulty::oscillatory: return oscillatory;
    case Difficulty::hard: return hard;
    }
    return easy;
  }

  void Report::recount()
  {
    summary.pass = summary.fail = summary.inconclusive = 0;
    for (const auto& e : entries) {
      if (e.status == Status::pass) ++summary.pass;
      else if (e.status == Status::fail) ++summary.fail;
      else ++summary.inconclusive;
    }
  }

  namespace {

    constexpr double kMargin = 1e-6;

    // ---- small helpers for the side evaluators ----

    double J(double nu, double x) { return sf::bessel_j(nu, x).value; }
    double Y(double nu, double x) { return sf::bessel_y(nu, x).value; }
    double Is(double nu, double x) { return sf::bessel_i_scaled(nu, x).value; }
    double Ks(double nu, double x) { return sf::bessel_k_scaled(nu, x).value; }
    double ber(double nu, double x) { return sf::kelvin_ber(nu, x).value; }
    double bei(double nu, double x) { return sf::kelvin_bei(nu, x).value; }
    double F03(double b1, double b2, double b3, double z) { return sf::hyp0f3(b1, b2, b3, z).value; }

    bool is_int(double v) { return v == std::nearbyint(v); }

    // Product of kernel values with first-order relative error propagation.
    struct Prod {
      double value = 1.0;
      double rel = 0.0;
      double abs_extra = 0.0;
      bool ok = true;
      std::uint64_t terms = 0;

      Prod& operator*=(double c)
      {
        value *= c;
        rel += 2 * kEps;
        return *this;
      }
      Prod& operator*=(const EvalResult& r)
      {
        if (r.value != 0.0)
          rel += r.abs_err / std::fabs(r.value);
        else
          abs_extra += r.abs_err * std::fabs(value);
        value *= r.value;
        ok = ok && r.converged;
        terms += r.terms;
        return *this;
      }
      EvalResult result() const
      {
        EvalResult e;
        e.value = value;
        e.abs_err = std::fabs(value) * (rel + 4 * kEps) + abs_extra;
        e.converged = ok && std::isfinite(value);
        e.terms = terms;
        return e;
      }
    };

    EvalResult scaled(EvalResult r, double c)
    {
      r.value *= c;
      r.abs_err = std::fabs(r.abs_err * c) + 2 * kEps * std::fabs(r.value);
      r.converged = r.converged && std::isfinite(r.value);
      return r;
    }

    EvalResult exact(double v)
    {
      EvalResult e;
      e.value = v;
      e.abs_err = 8 * kEps * std::fabs(v);
      e.converged = std::isfinite(v);
      return e;
    }

    quad::QuadOptions qopt(C c)
    {
      quad::QuadOptions o;
      o.rel_tol = c.quad_rel_tol;
      if (c.budget.max_cells) o.max_cells = c.budget.max_cells;
      return o;
    }

    std::size_t terms_or(C c, std::size_t dflt) { return c.budget.max_terms ? c.budget.max_terms : dflt; }

    EvalResult finite(std::function<double(double)> f, double a, double b, C c,
                      std::vector<quad::Singularity> hints = {})
    {
      quad::Integrand in;
      in.eval = std::move(f);
      in.hints = std::move(hints);
      return quad::integrate_finite(in, a, b, qopt(c));
    }

    EvalResult decaying(std::function<double(double)> f, double rate, C c, double max_panel = 0.0,
                        std::vector<quad::Singularity> hints = {})
    {
      quad::Integrand in;
      in.eval = std::move(f);
      in.hints = std::move(hints);
      in.decay.kind = quad::DecayKind::exponential;
      in.decay.rate = rate;
      in.max_panel = max_panel;
      return quad::integrate_semiinf_decaying(in, 0.0, qopt(c));
    }

    EvalResult oscillatory(std::function<double(double)> f, double period, double first_zero, C c,
                           std::vector<quad::Singularity> hints = {})
    {
      quad::Integrand in;
      in.eval = std::move(f);
      in.hints = std::move(hints);
      in.decay.kind = quad::DecayKind::oscillatory;
      in.decay.rate = period;
      in.max_panel = period;
      quad::OscillationDescriptor osc{period, first_zero};
      return quad::integrate_semiinf_oscillatory(in, 0.0, osc, qopt(c));
    }

    // First zero of J_nu(t y) in y, McMahon's leading term. Only the cell
    // alignment depends on it.
    double jzero(double nu, double t) { return std::fmax((nu / 2 + 0.75) * kPi, 1.0) / t; }

    // ---- parameter space helpers ----

    Constraint cons(std::string text, std::function<bool(P)> f) { return {std::move(text), std::move(f)}; }

    bool gt(double x, double y) { return x > y + kMargin; }
    bool lt(double x, double y) { return x < y - kMargin; }

    using Axis = std::pair<std::string, std::vector<double>>;

    std::vector<ParamPoint> cartesian(std::initializer_list<Axis> axes)
    {
      std::vector<ParamPoint> out{ParamPoint{}};
      for (const auto& [name, vals] : axes) {
        std::vector<ParamPoint> next;
        for (const auto& p : out)
          for (double v : vals) {
            ParamPoint q = p;
            q[name] = v;
            next.push_back(std::move(q));
          }
        out = std::move(next);
      }
      return out;
    }

    std::vector<ParamPoint> rows(const std::vector<std::string>& names,
                                 std::initializer_list<std::vector<double>> vals)
    {
      std::vector<ParamPoint> out;
      for (const auto& row : vals) {
        ParamPoint p;
        for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = row.at(i);
        out.push_back(std::move(p));
      }
      return out;
    }

    ParamPoint pt(const std::vector<std::string>& names, std::vector<double> vals)
    {
      ParamPoint p;
      for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = vals.at(i);
      return p;
    }

    // Appends hard points to the default grid when missing.
    void finish(IdentityRecord& r)
    {
      for (const auto& h : r.space.hard_points)
        if (std::find(r.space.default_grid.begin(), r.space.default_grid.end(), h)
            == r.space.default_grid.end())
          r.space.default_grid.push_back(h);
      std::sort(r.space.default_grid.begin(), r.space.default_grid.end(), point_less);
    }

    Constraint order_gt(const char* sym, double bound)
    {
      std::ostringstream os;
      os << sym << " > " << bound;
      return cons(os.str(), [s = std::string(sym), bound](P p) { return gt(p.at(s), bound); });
    }

    // ---- the manifest ----

    std::vector<IdentityRecord> build();

  }

  // ===========================================================================

  namespace {

    std::vector<IdentityRecord> build()
    {
      std::vector<IdentityRecord> v;
      auto add = [&v](IdentityRecord r) {
        finish(r);
        v.push_back(std::move(r));
      };

      const std::string Q_FIN = "quadrature:finite";
      const std::string Q_DEC = "quadrature:semi-infinite-decaying";
      const std::string Q_OSC = "quadrature:semi-infinite-oscillatory";
      const std::string CLOSED = "closed-form";

      auto gamma3 = [](double mu, double nu) {
        return sf::gamma(mu + 1) * sf::gamma(nu + 1) * sf::gamma(mu + nu + 1);
      };

      // I-2.1
      {
        IdentityRecord r;
        r.id = "I-2.1";
        r.anchor = "product J_mu(ax) J_nu(bx) as a double power series";
        r.statement = "Gamma(mu+1)Gamma(nu+1) J_mu(ax) J_nu(bx) = (ax/2)^mu (bx/2)^nu "
                      "sum_n (-1)^n (ax/2)^(2n)/(n! (mu+1)_n) 2F1(-n,-mu-n;nu+1;b^2/a^2)";
        r.lhs_route = CLOSED;
        r.rhs_route = "series";
        r.space.symbols = {"mu", "nu", "a", "b", "x"};
        r.space.constraints = {order_gt("mu", -1), order_gt("nu", -1),
                               cons("0 < b <= a", [](P p) { return gt(p.at("b"), 0) && p.at("b") <= p.at("a"); }),
                               cons("x >= 0", [](P p) { return p.at("x") >= 0; })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0, 1, 0.5, 1}, {1, 0, 2, 1, 0.7}, {0.5, 1.5, 1, 0.9, 3},
                                                      {2, 2, 2, 0.5, 5}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 0.5, 2, 1.8, 3})};
        r.lhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), x = p.at("x");
          Prod pr;
          pr *= sf::bessel_j(mu, p.at("a") * x);
          pr *= sf::bessel_j(nu, p.at("b") * x);
          return pr.result();
        };
        r.rhs = [](P p, C c) {
          return series::product_jj_gauss(p.at("mu"), p.at("nu"), p.at("a"), p.at("b"), p.at("x"),
                                          terms_or(c, 2000));
        };
        add(std::move(r));
      }

      // I-2.4
      {
        IdentityRecord r;
        r.id = "I-2.4";
        r.anchor = "J_mu J_nu product as a K_mu I_nu Laplace-type integral";
        r.statement = "Gamma(mu+1)Gamma(nu+1)Gamma(mu+nu+1) J_mu(ax) J_nu(bx) = 4 (ax/2)^mu (bx/2)^nu "
                      "(1-r^2)^(mu+nu+1) r^-nu int_0^inf t^(mu+nu+1) 0F3(mu+1,nu+1,mu+nu+1;-z^2 t^2) "
                      "K_mu(2t) I_nu(2rt) dt, r = b/a, z = (ax/2)(1-r^2)";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_DEC;
        r.space.symbols = {"mu", "nu", "a", "b", "x"};
        r.space.constraints = {cons("mu >= 0", [](P p) { return p.at("mu") >= 0; }), order_gt("nu", -1),
                               cons("0 < b < a", [](P p) { return gt(p.at("b"), 0) && lt(p.at("b"), p.at("a")); }),
                               cons("x > 0", [](P p) { return gt(p.at("x"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0, 1, 0.5, 1}, {0.5, 1, 2, 1, 0.7}, {1, 0.5, 1, 0.3, 2}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 0.5, 1, 0.9, 2})};
        r.lhs = [gamma3](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), x = p.at("x");
          Prod pr;
          pr *= gamma3(mu, nu);
          pr *= sf::bessel_j(mu, p.at("a") * x);
          pr *= sf::bessel_j(nu, p.at("b") * x);
          return pr.result();
        };
        r.rhs = [](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), b = p.at("b"), x = p.at("x");
          double q = b / a, z = a * x / 2 * (1 - q * q), z2 = z * z;
          auto f = [=](double t) {
            return std::pow(t, mu + nu + 1) * F03(mu + 1, nu + 1, mu + nu + 1, -z2 * t * t) * Ks(mu, 2 * t)
                 * Is(nu, 2 * q * t) * std::exp(-2 * (1 - q) * t);
          };
          double pre = 4 * std::pow(a * x / 2, mu) * std::pow(b * x / 2, nu) * std::pow(1 - q * q, mu + nu + 1)
                     * std::pow(q, -nu);
          return scaled(decaying(f, 2 * (1 - q), c), pre);
        };
        add(std::move(r));
      }

      // I-2.6
      {
        IdentityRecord r;
        r.id = "I-2.6";
        r.anchor = "Mellin transform of K_mu(2t) I_nu(2rt)";
        r.statement = "int_0^inf t^s K_mu(2t) I_nu(2rt) dt = r^nu/(4 Gamma(nu+1)) Gamma((mu+nu+s+1)/2) "
                      "Gamma((nu-mu+s+1)/2) 2F1((nu+mu+s+1)/2,(nu-mu+s+1)/2;nu+1;r^2), r = b/a";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"mu", "nu", "s", "a", "b"};
        r.space.constraints = {order_gt("nu", -1),
                               cons("nu + mu + s > -1", [](P p) { return gt(p.at("nu") + p.at("mu") + p.at("s"), -1); }),
                               cons("nu - mu + s > -1", [](P p) { return gt(p.at("nu") - p.at("mu") + p.at("s"), -1); }),
                               cons("0 < b < a", [](P p) { return gt(p.at("b"), 0) && lt(p.at("b"), p.at("a")); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0, 1, 1, 0.5}, {0.5, 1, 2, 1, 0.3}, {1, 0, 0.5, 2, 1}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0.5, 1, 1, 0.9})};
        r.lhs = [](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), s = p.at("s"), q = p.at("b") / p.at("a");
          auto f = [=](double t) {
            return std::pow(t, s) * Ks(mu, 2 * t) * Is(nu, 2 * q * t) * std::exp(-2 * (1 - q) * t);
          };
          return decaying(f, 2 * (1 - q), c);
        };
        r.rhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), s = p.at("s"), q = p.at("b") / p.at("a");
          Prod pr;
          pr *= std::pow(q, nu) / (4 * sf::gamma(nu + 1)) * sf::gamma((mu + nu + s + 1) / 2)
              * sf::gamma((nu - mu + s + 1) / 2);
          pr *= sf::hyp2f1((nu + mu + s + 1) / 2, (nu - mu + s + 1) / 2, nu + 1, q * q);
          return pr.result();
        };
        add(std::move(r));
      }

      // I-2.7
      {
        IdentityRecord r;
        r.id = "I-2.7";
        r.anchor = "discontinuous integral of Weber and Schafheitlin, b < a branch";
        r.statement = "int_0^inf x^-s J_mu(ax) J_nu(bx) dx = 2^-s b^nu a^(s-nu-1) Gamma((mu+nu-s+1)/2) / "
                      "(Gamma(nu+1) Gamma((mu-nu+s+1)/2)) 2F1((nu-mu-s+1)/2,(nu+mu-s+1)/2;nu+1;b^2/a^2)";
        r.lhs_route = Q_OSC;
        r.rhs_route = CLOSED;
        r.difficulty = Difficulty::oscillatory;
        r.space.symbols = {"mu", "nu", "s", "a", "b"};
        r.space.constraints = {order_gt("nu", -1),
                               cons("mu + nu - s > -1", [](P p) { return gt(p.at("mu") + p.at("nu") - p.at("s"), -1); }),
                               cons("s > 0", [](P p) { return gt(p.at("s"), 0); }),
                               cons("0 < b < a", [](P p) { return gt(p.at("b"), 0) && lt(p.at("b"), p.at("a")); })};
        r.space.default_grid = rows(r.space.symbols, {{1, 0, 0.5, 1, 0.5}, {2, 1, 1, 2, 1}, {0, 0, 0.5, 1, 0.8},
                                                      {0.5, 0.5, 0.75, 3, 2}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0, 0.25, 1, 0.8})};
        r.lhs = [](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), s = p.at("s"), a = p.at("a"), b = p.at("b");
          double period = kPi / (a - b);
          double z0 = std::fmod((1 + mu - nu) / 2 * period, period);
          if (z0 <= 0) z0 += period;
          double e0 = mu + nu - s;
          auto f = [=](double x) { return J(mu, a * x) * J(nu, b * x) / std::pow(x, mu + nu); };
          return oscillatory(f, period, z0, c, {{0.0, e0}});
        };
        r.rhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), s = p.at("s"), a = p.at("a"), b = p.at("b");
          Prod pr;
          pr *= std::pow(2.0, -s) * std::pow(b, nu) * std::pow(a, s - nu - 1) * sf::gamma((mu + nu - s + 1) / 2)
              * sf::rgamma(nu + 1) * sf::rgamma((mu - nu + s + 1) / 2);
          pr *= sf::hyp2f1((nu - mu - s + 1) / 2, (nu + mu - s + 1) / 2, nu + 1, b * b / (a * a));
          return pr.result();
        };
        add(std::move(r));
      }

      // I-2.9 and I-2.10 share the integrand shape.
      auto kj_integral = [](double mu, double nu, double y, double w, C c) {
        // int_0^inf t^(mu+nu+1) 0F3(mu+1,nu+1,mu+nu+1;-w t^2) K_mu(t) J_nu(yt) dt
        auto f = [=](double t) {
          return std::pow(t, mu + nu + 1) * F03(mu + 1, nu + 1, mu + nu + 1, -w * t * t) * Ks(mu, t) * std::exp(-t)
               * J(nu, y * t);
        };
        return decaying(f, 1.0, c, std::fmin(kPi / y, 4.0));
      };

      {
        IdentityRecord r;
        r.id = "I-2.9";
        r.anchor = "J_mu I_nu product from a K_mu J_nu integral, squared-scale form";
        r.statement = "Gamma(mu+1)Gamma(nu+1)Gamma(mu+nu+1) J_mu(a^2/4) I_nu(a^2 y/4) = (a^2/16)^(mu+nu) "
                      "(1+y^2)^(mu+nu+1) int_0^inf t^(mu+nu+1) 0F3(mu+1,nu+1,mu+nu+1;-a^4(1+y^2)^2 t^2/256) "
                      "K_mu(t) J_nu(yt) dt";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_DEC;
        r.space.symbols = {"mu", "nu", "a", "y"};
        r.space.constraints = {cons("mu >= 0", [](P p) { return p.at("mu") >= 0; }), order_gt("nu", -1),
                               cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("y > 0", [](P p) { return gt(p.at("y"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0, 1, 0.5}, {0.5, 1, 1.5, 1}, {1, 0.5, 1, 2}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0, 2, 1})};
        r.lhs = [gamma3](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), y = p.at("y");
          Prod pr;
          pr *= gamma3(mu, nu);
          pr *= sf::bessel_j(mu, a * a / 4);
          pr *= sf::bessel_i(nu, a * a * y / 4);
          return pr.result();
        };
        r.rhs = [kj_integral](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), y = p.at("y");
          double s = 1 + y * y;
          double w = std::pow(a, 4) * s * s / 256;
          return scaled(kj_integral(mu, nu, y, w, c), std::pow(a * a / 16, mu + nu) * std::pow(s, mu + nu + 1));
        };
        add(std::move(r));
      }

      {
        IdentityRecord r;
        r.id = "I-2.10";
        r.anchor = "J_mu I_nu product from a K_mu J_nu integral, rational-argument form";
        r.statement = "Gamma(mu+1)Gamma(nu+1)Gamma(mu+nu+1) J_mu(4a/(1+y^2)) I_nu(4ay/(1+y^2)) = (1+y^2) a^(mu+nu) "
                      "int_0^inf t^(mu+nu+1) 0F3(mu+1,nu+1,mu+nu+1;-a^2 t^2) K_mu(t) J_nu(yt) dt";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_DEC;
        r.space.symbols = {"mu", "nu", "a", "y"};
        r.space.constraints = {cons("mu >= 0", [](P p) { return p.at("mu") >= 0; }), order_gt("nu", -1),
                               cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("y > 0", [](P p) { return gt(p.at("y"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0, 0.2, 0.5}, {0.5, 1, 0.3, 1}, {1, 0, 0.25, 2}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0.5, 0.5, 0.5})};
        r.lhs = [gamma3](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), y = p.at("y");
          double s = 1 + y * y;
          Prod pr;
          pr *= gamma3(mu, nu);
          pr *= sf::bessel_j(mu, 4 * a / s);
          pr *= sf::bessel_i(nu, 4 * a * y / s);
          return pr.result();
        };
        r.rhs = [kj_integral](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), y = p.at("y");
          return scaled(kj_integral(mu, nu, y, a * a, c), (1 + y * y) * std::pow(a, mu + nu));
        };
        add(std::move(r));
      }

      // I-2.11
      {
        IdentityRecord r;
        r.id = "I-2.11";
        r.anchor = "inverse Hankel transform of the J_mu I_nu product";
        r.statement = "(at)^(mu+nu) 0F3(mu+1,nu+1,mu+nu+1;-a^2 t^2) K_mu(t) = Gamma(mu+1)Gamma(nu+1)Gamma(mu+nu+1) "
                      "int_0^inf y/(1+y^2) J_nu(ty) J_mu(4a/(1+y^2)) I_nu(4ay/(1+y^2)) dy";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_OSC;
        r.difficulty = Difficulty::oscillatory;
        r.discrepancy_logged = true;
        r.space.symbols = {"mu", "nu", "a", "t"};
        r.space.constraints = {cons("mu >= 0", [](P p) { return p.at("mu") >= 0; }),
                               cons("-1/2 < nu <= 1/2", [](P p) { return gt(p.at("nu"), -0.5) && p.at("nu") <= 0.5; }),
                               cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("t > 0", [](P p) { return gt(p.at("t"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, -0.25, 0.2, 1}, {0, 0, 0.2, 1}, {0, 0.5, 0.2, 1}, {0.5, 0, 0.3, 2}});
        r.space.hard_points = {pt(r.space.symbols, {0, -0.25, 0.3, 0.5})};
        r.lhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), t = p.at("t");
          Prod pr;
          pr *= std::pow(a * t, mu + nu);
          pr *= sf::hyp0f3(mu + 1, nu + 1, mu + nu + 1, -a * a * t * t);
          pr *= sf::bessel_k(mu, t);
          return pr.result();
        };
        r.rhs = [gamma3](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), t = p.at("t");
          auto f = [=](double y) {
            double s = 1 + y * y;
            return y / s * J(nu, t * y) * J(mu, 4 * a / s) * Is(nu, 4 * a * y / s) * std::exp(4 * a * y / s);
          };
          return scaled(oscillatory(f, kPi / t, jzero(nu, t), c), gamma3(mu, nu));
        };
        add(std::move(r));
      }

      // I-2.12
      {
        IdentityRecord r;
        r.id = "I-2.12";
        r.anchor = "Hankel transform of y^nu (1+y^2)^-(mu+nu+1)";
        r.statement = "(t/2)^(mu+nu) K_mu(t) = Gamma(mu+nu+1) int_0^inf y^(nu+1) (1+y^2)^-(mu+nu+1) J_nu(ty) dy";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_OSC;
        r.difficulty = Difficulty::oscillatory;
        r.space.symbols = {"mu", "nu", "t"};
        r.space.constraints = {cons("mu >= 0", [](P p) { return p.at("mu") >= 0; }), order_gt("nu", -1),
                               cons("t > 0", [](P p) { return gt(p.at("t"), 0); })};
        r.space.default_grid = cartesian({{"mu", {0, 0.5, 1}}, {"nu", {0, 0.5, 1}}, {"t", {0.5, 1, 2}}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0, 0.5})};
        r.lhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), t = p.at("t");
          Prod pr;
          pr *= std::pow(t / 2, mu + nu);
          pr *= sf::bessel_k(mu, t);
          return pr.result();
        };
        r.rhs = [](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), t = p.at("t");
          auto f = [=](double y) { return std::pow(y, nu + 1) * std::pow(1 + y * y, -(mu + nu + 1)) * J(nu, t * y); };
          return scaled(oscillatory(f, kPi / t, jzero(nu, t), c), sf::gamma(mu + nu + 1));
        };
        add(std::move(r));
      }

      // I-2.13, I-2.14
      {
        IdentityRecord r;
        r.id = "I-2.13";
        r.anchor = "ber as a 0F3";
        r.statement = "ber(x) = 0F3(1/2,1/2,1;-x^4/256)";
        r.lhs_route = "series:kelvin";
        r.rhs_route = "series:hypergeometric";
        r.space.symbols = {"x"};
        r.space.constraints = {cons("0 <= x <= 100", [](P p) { return p.at("x") >= 0 && p.at("x") <= 100; })};
        r.space.default_grid = rows(r.space.symbols, {{0.5}, {1}, {5}});
        r.space.hard_points = {pt(r.space.symbols, {10})};
        r.lhs = [](P p, C) { return sf::kelvin_ber(0, p.at("x")); };
        r.rhs = [](P p, C c) {
          SeriesOptions o;
          o.max_terms = terms_or(c, o.max_terms);
          return sf::hyp0f3(0.5, 0.5, 1, -std::pow(p.at("x"), 4) / 256, o);
        };
        add(r);

        r.id = "I-2.14";
        r.anchor = "bei as a 0F3";
        r.statement = "bei(x) = (x^2/4) 0F3(3/2,3/2,1;-x^4/256)";
        r.lhs = [](P p, C) { return sf::kelvin_bei(0, p.at("x")); };
        r.rhs = [](P p, C c) {
          double x = p.at("x");
          SeriesOptions o;
          o.max_terms = terms_or(c, o.max_terms);
          return scaled(sf::hyp0f3(1.5, 1.5, 1, -std::pow(x, 4) / 256, o), x * x / 4);
        };
        add(std::move(r));
      }

      // I-2.15 .. I-2.18: decaying Kelvin transforms.
      {
        auto base = [&](const char* id, const char* anchor, const char* stmt) {
          IdentityRecord r;
          r.id = id;
          r.anchor = anchor;
          r.statement = stmt;
          r.lhs_route = CLOSED;
          r.rhs_route = Q_DEC;
          r.space.symbols = {"a", "y"};
          r.space.constraints = {cons("0 < a <= 4", [](P p) { return gt(p.at("a"), 0) && p.at("a") <= 4; }),
                                 cons("y > 0", [](P p) { return gt(p.at("y"), 0); })};
          r.space.default_grid = cartesian({{"a", {0.5, 1}}, {"y", {0.3, 1, 2}}});
          r.space.hard_points = {pt(r.space.symbols, {1, 2})};
          return r;
        };
        auto kel = [](bool use_bei, double a, double y, double t) {
          double z = a * std::sqrt((1 + y * y) * t);
          return use_bei ? bei(0, z) : ber(0, z);
        };

        IdentityRecord r = base("I-2.15", "cosine transform of K_0(t) ber",
                                "(pi/2)(1+y^2)^-1/2 J_0(a^2/4) cosh(a^2 y/4) = "
                                "int_0^inf K_0(t) ber(a sqrt((1+y^2)t)) cos(yt) dt");
        r.lhs = [](P p, C) {
          double a = p.at("a"), y = p.at("y");
          Prod pr;
          pr *= kPi / 2 / std::sqrt(1 + y * y) * std::cosh(a * a * y / 4);
          pr *= sf::bessel_j(0, a * a / 4);
          return pr.result();
        };
        r.rhs = [kel](P p, C c) {
          double a = p.at("a"), y = p.at("y");
          auto f = [=](double t) { return Ks(0, t) * std::exp(-t) * kel(false, a, y, t) * std::cos(y * t); };
          return decaying(f, 1.0, c, std::fmin(kPi / y, 4.0));
        };
        add(std::move(r));

        r = base("I-2.16", "sine transform of K_0(t) bei",
                 "(pi/2)(1+y^2)^-1/2 J_0(a^2/4) sinh(a^2 y/4) = int_0^inf K_0(t) bei(a sqrt((1+y^2)t)) sin(yt) dt");
        r.lhs = [](P p, C) {
          double a = p.at("a"), y = p.at("y");
          Prod pr;
          pr *= kPi / 2 / std::sqrt(1 + y * y) * std::sinh(a * a * y / 4);
          pr *= sf::bessel_j(0, a * a / 4);
          return pr.result();
        };
        r.rhs = [kel](P p, C c) {
          double a = p.at("a"), y = p.at("y");
          auto f = [=](double t) { return Ks(0, t) * std::exp(-t) * kel(true, a, y, t) * std::sin(y * t); };
          return decaying(f, 1.0, c, std::fmin(kPi / y, 4.0));
        };
        add(std::move(r));

        r = base("I-2.17", "Hankel transform of exp(-t) ber",
                 "(1+y^2)^-1/2 I_0(a^2 y/4) cos(a^2/4) = int_0^inf exp(-t) ber(a sqrt((1+y^2)t)) J_0(yt) dt");
        r.lhs = [](P p, C) {
          double a = p.at("a"), y = p.at("y");
          Prod pr;
          pr *= std::cos(a * a / 4) / std::sqrt(1 + y * y);
          pr *= sf::bessel_i(0, a * a * y / 4);
          return pr.result();
        };
        r.rhs = [kel](P p, C c) {
          double a = p.at("a"), y = p.at("y");
          auto f = [=](double t) { return std::exp(-t) * kel(false, a, y, t) * J(0, y * t); };
          return decaying(f, 1.0, c, std::fmin(kPi / y, 4.0));
        };
        add(std::move(r));

        r = base("I-2.18", "Hankel transform of exp(-t) bei",
                 "(1+y^2)^-1/2 I_0(a^2 y/4) sin(a^2/4) = int_0^inf exp(-t) bei(a sqrt((1+y^2)t)) J_0(yt) dt");
        r.lhs = [](P p, C) {
          double a = p.at("a"), y = p.at("y");
          Prod pr;
          pr *= std::sin(a * a / 4) / std::sqrt(1 + y * y);
          pr *= sf::bessel_i(0, a * a * y / 4);
          return pr.result();
        };
        r.rhs = [kel](P p, C c) {
          double a = p.at("a"), y = p.at("y");
          auto f = [=](double t) { return std::exp(-t) * kel(true, a, y, t) * J(0, y * t); };
          return decaying(f, 1.0, c, std::fmin(kPi / y, 4.0));
        };
        add(std::move(r));
      }

      // I-2.19 .. I-2.22: the inverse transforms, oscillatory.
      {
        auto base = [&](const char* id, const char* anchor, const char* stmt) {
          IdentityRecord r;
          r.id = id;
          r.anchor = anchor;
          r.statement = stmt;
          r.lhs_route = CLOSED;
          r.rhs_route = Q_OSC;
          r.difficulty = Difficulty::oscillatory;
          r.space.symbols = {"a", "t"};
          r.space.constraints = {cons("0 < a <= 4", [](P p) { return gt(p.at("a"), 0) && p.at("a") <= 4; }),
                                 cons("t > 0", [](P p) { return gt(p.at("t"), 0); })};
          r.space.default_grid = cartesian({{"a", {0.5, 1}}, {"t", {0.3, 1, 2}}});
          r.space.hard_points = {pt(r.space.symbols, {1, 0.3})};
          return r;
        };
        auto g = [](double a, double y) { return a * a / (4 * (1 + y * y)); };

        IdentityRecord r = base("I-2.19", "inverse cosine transform giving K_0(t) ber",
                                "K_0(t) ber(a sqrt t) = int_0^inf (1+y^2)^-1/2 J_0(g) cosh(g y) cos(ty) dy, "
                                "g = a^2/(4(1+y^2))");
        r.lhs = [](P p, C) {
          double a = p.at("a"), t = p.at("t");
          Prod pr;
          pr *= sf::bessel_k(0, t);
          pr *= sf::kelvin_ber(0, a * std::sqrt(t));
          return pr.result();
        };
        r.rhs = [g](P p, C c) {
          double a = p.at("a"), t = p.at("t");
          auto f = [=](double y) {
            double gy = g(a, y);
            return J(0, gy) * std::cosh(gy * y) * std::cos(t * y) / std::sqrt(1 + y * y);
          };
          return oscillatory(f, kPi / t, kPi / (2 * t), c);
        };
        add(std::move(r));

        r = base("I-2.20", "inverse sine transform giving K_0(t) bei",
                 "K_0(t) bei(a sqrt t) = int_0^inf (1+y^2)^-1/2 J_0(g) sinh(g y) sin(ty) dy, g = a^2/(4(1+y^2))");
        r.lhs = [](P p, C) {
          double a = p.at("a"), t = p.at("t");
          Prod pr;
          pr *= sf::bessel_k(0, t);
          pr *= sf::kelvin_bei(0, a * std::sqrt(t));
          return pr.result();
        };
        r.rhs = [g](P p, C c) {
          double a = p.at("a"), t = p.at("t");
          auto f = [=](double y) {
            double gy = g(a, y);
            return J(0, gy) * std::sinh(gy * y) * std::sin(t * y) / std::sqrt(1 + y * y);
          };
          return oscillatory(f, kPi / t, kPi / t, c);
        };
        add(std::move(r));

        r = base("I-2.21", "inverse Hankel transform giving exp(-t) ber / t",
                 "exp(-t) ber(a sqrt t)/t = int_0^inf y (1+y^2)^-1/2 I_0(g y) cos(g) J_0(ty) dy, g = a^2/(4(1+y^2))");
        r.lhs = [](P p, C) {
          double a = p.at("a"), t = p.at("t");
          return scaled(sf::kelvin_ber(0, a * std::sqrt(t)), std::exp(-t) / t);
        };
        r.rhs = [g](P p, C c) {
          double a = p.at("a"), t = p.at("t");
          auto f = [=](double y) {
            double gy = g(a, y);
            return y / std::sqrt(1 + y * y) * sf::bessel_i(0, gy * y).value * std::cos(gy) * J(0, t * y);
          };
          return oscillatory(f, kPi / t, jzero(0, t), c);
        };
        add(std::move(r));

        r = base("I-2.22", "inverse Hankel transform giving exp(-t) bei / t",
                 "exp(-t) bei(a sqrt t)/t = int_0^inf y (1+y^2)^-1/2 I_0(g y) sin(g) J_0(ty) dy, g = a^2/(4(1+y^2))");
        r.lhs = [](P p, C) {
          double a = p.at("a"), t = p.at("t");
          return scaled(sf::kelvin_bei(0, a * std::sqrt(t)), std::exp(-t) / t);
        };
        r.rhs = [g](P p, C c) {
          double a = p.at("a"), t = p.at("t");
          auto f = [=](double y) {
            double gy = g(a, y);
            return y / std::sqrt(1 + y * y) * sf::bessel_i(0, gy * y).value * std::sin(gy) * J(0, t * y);
          };
          return oscillatory(f, kPi / t, jzero(0, t), c);
        };
        add(std::move(r));
      }

      // I-2.24
      {
        IdentityRecord r;
        r.id = "I-2.24";
        r.anchor = "Laplace transform of t^(2nu+1) 0F3";
        r.statement = "int_0^inf exp(-beta t) t^(2nu+1) 0F3(3/2,nu+1,nu+3/2;-alpha t^2) dt = "
                      "Gamma(2nu+2)/(4 sqrt(alpha)) beta^-(2nu+1) sin(4 sqrt(alpha)/beta)";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"nu", "alpha", "beta"};
        r.space.constraints = {order_gt("nu", -1), cons("alpha > 0", [](P p) { return gt(p.at("alpha"), 0); }),
                               cons("beta > 0", [](P p) { return gt(p.at("beta"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 1, 2}, {0.5, 0.3, 1}, {-0.5, 1, 3}, {1, 0.5, 1.5}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 2, 1})};
        r.lhs = [](P p, C c) {
          double nu = p.at("nu"), al = p.at("alpha"), be = p.at("beta");
          auto f = [=](double t) { return std::exp(-be * t) * F03(1.5, nu + 1, nu + 1.5, -al * t * t); };
          return decaying(f, be, c, 0.0, {{0.0, 2 * nu + 1}});
        };
        r.rhs = [](P p, C) {
          double nu = p.at("nu"), al = p.at("alpha"), be = p.at("beta");
          double sa = std::sqrt(al);
          return exact(sf::gamma(2 * nu + 2) / (4 * sa) * std::pow(be, -(2 * nu + 1)) * std::sin(4 * sa / be));
        };
        add(std::move(r));
      }

      // I-2.25, I-2.26: finite integrals with endpoint singularities.
      auto sine_kernel = [](double nu, double a, double b, double x, C c) {
        // int_-1^1 (1-u^2)^(nu-1/2) (a+bu)^-(2nu+1) sin((a^2-b^2) x/(a+bu)) du
        double d = (a * a - b * b) * x;
        auto f = [=](double u) {
          double w = a + b * u;
          return std::pow(w, -(2 * nu + 1)) * std::sin(d / w);
        };
        return finite(f, -1, 1, c, {{-1.0, nu - 0.5}, {1.0, nu - 0.5}});
      };

      {
        IdentityRecord r;
        r.id = "I-2.25";
        r.anchor = "sin(ax) J_nu(bx) as a finite integral";
        r.statement = "sin(ax) J_nu(bx) = (bx/2)^nu (a^2-b^2)^(nu+1/2) / (sqrt(pi) Gamma(nu+1/2)) "
                      "int_-1^1 (1-u^2)^(nu-1/2) (a+bu)^-(2nu+1) sin((a^2-b^2)x/(a+bu)) du";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_FIN;
        r.space.symbols = {"nu", "a", "b", "x"};
        r.space.constraints = {order_gt("nu", -0.5),
                               cons("0 < b < a", [](P p) { return gt(p.at("b"), 0) && lt(p.at("b"), p.at("a")); }),
                               cons("x > 0", [](P p) { return gt(p.at("x"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 2, 1, 1}, {0.5, 1, 0.5, 3}, {1.5, 3, 1, 0.7}});
        r.space.hard_points = {pt(r.space.symbols, {1, 1, 0.9, 2})};
        r.lhs = [](P p, C) {
          double nu = p.at("nu"), a = p.at("a"), b = p.at("b"), x = p.at("x");
          return scaled(sf::bessel_j(nu, b * x), std::sin(a * x));
        };
        r.rhs = [sine_kernel](P p, C c) {
          double nu = p.at("nu"), a = p.at("a"), b = p.at("b"), x = p.at("x");
          double pre = std::pow(b * x / 2, nu) * std::pow(a * a - b * b, nu + 0.5) / (std::sqrt(kPi) * sf::gamma(nu + 0.5));
          return scaled(sine_kernel(nu, a, b, x, c), pre);
        };
        add(std::move(r));
      }

      {
        IdentityRecord r;
        r.id = "I-2.26";
        r.anchor = "J_nu(pi y/2) as a finite integral";
        r.statement = "J_nu(pi y/2) = (pi y/4)^nu (1-y^2)^(nu+1/2) / (sqrt(pi) Gamma(nu+1/2)) "
                      "int_-1^1 (1-u^2)^(nu-1/2) (1+uy)^-(2nu+1) sin((pi/2)(1-y^2)/(1+uy)) du";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_FIN;
        r.space.symbols = {"nu", "y"};
        r.space.constraints = {order_gt("nu", -0.5),
                               cons("0 < y < 1", [](P p) { return gt(p.at("y"), 0) && lt(p.at("y"), 1); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 0.5}, {1, 0.9}, {0.5, 0.3}, {2, 0.7}});
        r.space.hard_points = {pt(r.space.symbols, {0, 0.95})};
        r.lhs = [](P p, C) { return sf::bessel_j(p.at("nu"), kPi * p.at("y") / 2); };
        r.rhs = [sine_kernel](P p, C c) {
          double nu = p.at("nu"), y = p.at("y");
          double pre = std::pow(kPi * y / 4, nu) * std::pow(1 - y * y, nu + 0.5) / (std::sqrt(kPi) * sf::gamma(nu + 0.5));
          // a = 1, b = y, x = pi/2 in the sine kernel
          return scaled(sine_kernel(nu, 1.0, y, kPi / 2, c), pre);
        };
        add(std::move(r));
      }

      // I-K1 family: exp(-x) I_nu(x sin theta) against order-2nu Kelvin functions.
      auto k1_integral = [](double nu, double th, double u, double cbei, double cber, C c) {
        double st = std::sin(th), z0 = 2 * std::cos(th) * std::sqrt(u);
        auto f = [=](double x) {
          double z = z0 * std::sqrt(x);
          double k = 0.0;
          if (cbei != 0) k += cbei * bei(2 * nu, z);
          if (cber != 0) k += cber * ber(2 * nu, z);
          return Is(nu, x * st) * std::exp(-x * (1 - st)) * k;
        };
        return decaying(f, 1 - st, c, 4.0);
      };
      auto k1_rhs = [](double nu, double th, double u) {
        Prod pr;
        pr *= std::sin(u) / std::cos(th);
        pr *= sf::bessel_j(nu, u * std::sin(th));
        return pr.result();
      };
      auto k1_space = [&](IdentityRecord& r, bool integer) {
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.constraints.push_back(
            cons("0 < theta < pi/2", [](P p) { return gt(p.at("theta"), 0) && lt(p.at("theta"), kPi / 2); }));
        r.space.constraints.push_back(cons("u > 0", [](P p) { return gt(p.at("u"), 0); }));
        if (integer)
          r.space.constraints.insert(r.space.constraints.begin(),
                                     cons("n in {0,1,2,3}", [](P p) {
                                       double n = p.at("n");
                                       return is_int(n) && n >= 0 && n <= 3;
                                     }));
      };

      {
        IdentityRecord r;
        r.id = "I-K1";
        r.anchor = "Laplace-type integral of I_nu against Kelvin functions of order 2nu";
        r.statement = "int_0^inf exp(-x) I_nu(x sin theta) [cos(3 pi nu/2) bei_2nu(z) - sin(3 pi nu/2) ber_2nu(z)] dx "
                      "= sec(theta) sin(u) J_nu(u sin theta), z = 2 cos(theta) sqrt(ux)";
        r.space.symbols = {"nu", "theta", "u"};
        r.space.constraints = {order_gt("nu", -0.5)};
        k1_space(r, false);
        r.space.default_grid = rows(r.space.symbols, {{0.5, 0.5, 1}, {1, 0.7, 2}, {0.3, 1.0, 0.5}, {1.5, 0.6, 1.2}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 1.2, 1})};
        r.lhs = [k1_integral](P p, C c) {
          double nu = p.at("nu");
          return k1_integral(nu, p.at("theta"), p.at("u"), sf::cos_pi(1.5 * nu), -sf::sin_pi(1.5 * nu), c);
        };
        r.rhs = [k1_rhs](P p, C) { return k1_rhs(p.at("nu"), p.at("theta"), p.at("u")); };
        add(std::move(r));
      }
      {
        IdentityRecord r;
        r.id = "I-K1a";
        r.anchor = "even-order case with bei";
        r.statement = "int_0^inf exp(-x) I_2n(x sin theta) bei_4n(2 cos(theta) sqrt(ux)) dx "
                      "= (-1)^n sec(theta) sin(u) J_2n(u sin theta)";
        r.space.symbols = {"n", "theta", "u"};
        k1_space(r, true);
        r.space.default_grid = rows(r.space.symbols, {{0, 0.5, 1}, {1, 0.7, 2}, {2, 0.4, 3}});
        r.space.hard_points = {pt(r.space.symbols, {1, 1.2, 1.5})};
        r.lhs = [k1_integral](P p, C c) { return k1_integral(2 * p.at("n"), p.at("theta"), p.at("u"), 1.0, 0.0, c); };
        r.rhs = [k1_rhs](P p, C) {
          double n = p.at("n");
          return scaled(k1_rhs(2 * n, p.at("theta"), p.at("u")), std::fmod(n, 2) == 0 ? 1.0 : -1.0);
        };
        add(std::move(r));
      }
      {
        IdentityRecord r;
        r.id = "I-K1b";
        r.anchor = "odd-order case with ber";
        r.statement = "int_0^inf exp(-x) I_(2n+1)(x sin theta) ber_(4n+2)(2 cos(theta) sqrt(ux)) dx "
                      "= (-1)^n sec(theta) sin(u) J_(2n+1)(u sin theta)";
        r.space.symbols = {"n", "theta", "u"};
        k1_space(r, true);
        r.space.default_grid = rows(r.space.symbols, {{0, 0.5, 1}, {1, 0.7, 2}, {2, 0.4, 3}});
        r.space.hard_points = {pt(r.space.symbols, {0, 1.2, 1.5})};
        r.lhs = [k1_integral](P p, C c) {
          return k1_integral(2 * p.at("n") + 1, p.at("theta"), p.at("u"), 0.0, 1.0, c);
        };
        r.rhs = [k1_rhs](P p, C) {
          double n = p.at("n");
          return scaled(k1_rhs(2 * n + 1, p.at("theta"), p.at("u")), std::fmod(n, 2) == 0 ? 1.0 : -1.0);
        };
        add(std::move(r));
      }

      // I-2.30
      {
        IdentityRecord r;
        r.id = "I-2.30";
        r.anchor = "Neumann series for J_nu(ax) J_nu(bx)";
        r.statement = "J_nu(ax) J_nu(bx) = sum_r (abx/(2c))^(nu+2r) / (r! Gamma(nu+r+1)) J_(nu+2r)(cx), c = sqrt(a^2+b^2)";
        r.lhs_route = CLOSED;
        r.rhs_route = "series";
        r.space.symbols = {"nu", "a", "b", "x"};
        r.space.constraints = {cons("nu >= 0", [](P p) { return p.at("nu") >= 0; }),
                               cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("b > 0", [](P p) { return gt(p.at("b"), 0); }),
                               cons("x >= 0", [](P p) { return p.at("x") >= 0; })};
        r.space.default_grid = cartesian({{"nu", {0, 0.5, 1, 2}}, {"a", {0.5, 1, 2}}, {"b", {0.5, 1, 2}}, {"x", {0.1, 1, 5}}});
        r.space.hard_points = {pt(r.space.symbols, {2, 2, 2, 5})};
        r.lhs = [](P p, C) {
          double nu = p.at("nu"), x = p.at("x");
          Prod pr;
          pr *= sf::bessel_j(nu, p.at("a") * x);
          pr *= sf::bessel_j(nu, p.at("b") * x);
          return pr.result();
        };
        r.rhs = [](P p, C c) {
          return series::product_jj_neumann(p.at("nu"), p.at("a"), p.at("b"), p.at("x"), terms_or(c, 500));
        };
        add(std::move(r));
      }

      // I-2.31
      {
        IdentityRecord r;
        r.id = "I-2.31";
        r.anchor = "Gaussian moment of J_(nu+2r)";
        r.statement = "int_0^inf exp(-p x^2) x^(nu+2r+1) J_(nu+2r)(cx) dx = c^(nu+2r) (2p)^-(nu+2r+1) exp(-c^2/(4p))";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"nu", "r", "p", "c"};
        r.space.constraints = {order_gt("nu", -1),
                               cons("r in {0,1,...,20}", [](P p) {
                                 double n = p.at("r");
                                 return is_int(n) && n >= 0 && n <= 20;
                               }),
                               cons("p > 0", [](P p) { return gt(p.at("p"), 0); }),
                               cons("c > 0", [](P p) { return gt(p.at("c"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 1, 1, 1}, {0.5, 2, 0.7, 1.5}, {1, 0, 2, 2}, {0, 3, 0.5, 1}});
        r.space.hard_points = {pt(r.space.symbols, {2, 2, 0.5, 3})};
        r.lhs = [](P p, C c) {
          double o = p.at("nu") + 2 * p.at("r"), q = p.at("p"), cc = p.at("c");
          auto f = [=](double x) { return std::exp(-q * x * x) * std::pow(x, o + 1) * J(o, cc * x); };
          return decaying(f, q, c);
        };
        r.rhs = [](P p, C) {
          double o = p.at("nu") + 2 * p.at("r"), q = p.at("p"), cc = p.at("c");
          return exact(std::pow(cc, o) * std::pow(2 * q, -(o + 1)) * std::exp(-cc * cc / (4 * q)));
        };
        add(std::move(r));
      }

      // I-2.32
      {
        IdentityRecord r;
        r.id = "I-2.32";
        r.anchor = "Weber's second exponential integral";
        r.statement = "int_0^inf x exp(-p x^2) J_nu(ax) J_nu(bx) dx = (1/(2p)) exp(-(a^2+b^2)/(4p)) I_nu(ab/(2p))";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"nu", "a", "b", "p"};
        r.space.constraints = {order_gt("nu", -1), cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("b > 0", [](P p) { return gt(p.at("b"), 0); }),
                               cons("p > 0", [](P p) { return gt(p.at("p"), 0); })};
        r.space.default_grid = cartesian({{"nu", {0, 0.5, 1}}, {"a", {0.5, 1, 2}}, {"b", {0.5, 1, 2}}, {"p", {1}}});
        r.space.hard_points = {pt(r.space.symbols, {1, 2, 2, 1})};
        r.lhs = [](P p, C c) {
          double nu = p.at("nu"), a = p.at("a"), b = p.at("b"), q = p.at("p");
          // s = x^2
          auto f = [=](double s) {
            double x = std::sqrt(s);
            return 0.5 * std::exp(-q * s) * J(nu, a * x) * J(nu, b * x);
          };
          return decaying(f, q, c, 4.0 / q);
        };
        r.rhs = [](P p, C) {
          double nu = p.at("nu"), a = p.at("a"), b = p.at("b"), q = p.at("p");
          double z = a * b / (2 * q);
          // exp(-(a^2+b^2)/4p) I_nu(z) = exp(-(a-b)^2/4p) Is_nu(z)
          return scaled(sf::bessel_i_scaled(nu, z), std::exp(-(a - b) * (a - b) / (4 * q)) / (2 * q));
        };
        add(std::move(r));
      }

      // I-2.35
      {
        IdentityRecord r;
        r.id = "I-2.35";
        r.anchor = "product formula for 0F1";
        r.statement = "0F1(c;x) 0F1(c;y) = sum_r (xy)^r / (r! (c)_r (c)_2r) 0F1(c+2r;x+y)";
        r.lhs_route = CLOSED;
        r.rhs_route = "series";
        r.space.symbols = {"c", "x", "y"};
        r.space.constraints = {cons("c > 0", [](P p) { return gt(p.at("c"), 0); })};
        r.space.default_grid = cartesian({{"c", {0.7, 1, 1.5}}, {"x", {-2, -0.25, 0.3}}, {"y", {-0.25, 0.2, 1.5}}});
        r.space.hard_points = {pt(r.space.symbols, {0.7, -2, 1.5})};
        r.lhs = [](P p, C) {
          Prod pr;
          pr *= sf::hyp0f1(p.at("c"), p.at("x"));
          pr *= sf::hyp0f1(p.at("c"), p.at("y"));
          return pr.result();
        };
        r.rhs = [](P p, C c) { return series::hyp0f1_product(p.at("c"), p.at("x"), p.at("y"), terms_or(c, 500)); };
        add(std::move(r));
      }

      // I-2.37, I-2.38
      auto jj_finite = [](double nu, double w, double v, C c) {
        // int_0^1 (1-t^2)^(nu-1/2) cos(w t) 0F3(nu+1,nu/2+1/4,nu/2+3/4; v (1-t^2)^2) dt
        auto f = [=](double t) {
          double s = 1 - t * t;
          return std::pow(1 + t, nu - 0.5) * std::cos(w * t) * F03(nu + 1, nu / 2 + 0.25, nu / 2 + 0.75, v * s * s);
        };
        return finite(f, 0, 1, c, {{1.0, nu - 0.5}});
      };

      {
        IdentityRecord r;
        r.id = "I-2.37";
        r.anchor = "J_nu(ax) J_nu(bx) as a cosine integral of 0F3";
        r.statement = "J_nu(ax) J_nu(bx) = 2 (abx^2)^nu / (pi Gamma(2nu+1)) int_0^1 (1-t^2)^(nu-1/2) "
                      "cos(xt sqrt(a^2+b^2)) 0F3(nu+1,nu/2+1/4,nu/2+3/4; a^2 b^2 x^4 (1-t^2)^2/64) dt";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_FIN;
        r.space.symbols = {"nu", "a", "b", "x"};
        r.space.constraints = {order_gt("nu", -0.5), cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("b > 0", [](P p) { return gt(p.at("b"), 0); }),
                               cons("x > 0", [](P p) { return gt(p.at("x"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{0, 1, 0.5, 1}, {1, 2, 1, 0.7}, {0.5, 1, 0.9, 2}, {2, 1, 0.9, 3}});
        r.space.hard_points = {pt(r.space.symbols, {0, 1, 0.9, 4})};
        r.lhs = [](P p, C) {
          double nu = p.at("nu"), x = p.at("x");
          Prod pr;
          pr *= sf::bessel_j(nu, p.at("a") * x);
          pr *= sf::bessel_j(nu, p.at("b") * x);
          return pr.result();
        };
        r.rhs = [jj_finite](P p, C c) {
          double nu = p.at("nu"), a = p.at("a"), b = p.at("b"), x = p.at("x");
          double abx2 = a * b * x * x;
          return scaled(jj_finite(nu, x * std::hypot(a, b), abx2 * abx2 / 64, c),
                        2 * std::pow(abx2, nu) / (kPi * sf::gamma(2 * nu + 1)));
        };
        add(std::move(r));
      }

      {
        IdentityRecord r;
        r.id = "I-2.38";
        r.anchor = "J_nu product at conjugate arguments as a cosine transform";
        r.statement = "J_nu((sqrt(u^2+2)+sqrt(u^2-2))/2) J_nu((sqrt(u^2+2)-sqrt(u^2-2))/2) = 2/(pi Gamma(2nu+1)) "
                      "int_0^1 (1-t^2)^(nu-1/2) cos(ut) 0F3(nu+1,nu/2+1/4,nu/2+3/4;(1-t^2)^2/64) dt";
        r.lhs_route = CLOSED;
        r.rhs_route = Q_FIN;
        r.space.symbols = {"nu", "u"};
        r.space.constraints = {order_gt("nu", -0.5),
                               cons("u >= sqrt(2)", [](P p) { return p.at("u") >= std::sqrt(2.0); })};
        r.space.default_grid = rows(r.space.symbols, {{1, 2}, {0.5, 3}, {2, 2.5}});
        r.space.hard_points = {pt(r.space.symbols, {0, 1.5})};
        r.lhs = [](P p, C) {
          double nu = p.at("nu"), u = p.at("u");
          double sp = std::sqrt(u * u + 2), sm = std::sqrt(u * u - 2);
          Prod pr;
          pr *= sf::bessel_j(nu, (sp + sm) / 2);
          pr *= sf::bessel_j(nu, (sp - sm) / 2);
          return pr.result();
        };
        r.rhs = [jj_finite](P p, C c) {
          double nu = p.at("nu"), u = p.at("u");
          return scaled(jj_finite(nu, u, 1.0 / 64, c), 2 / (kPi * sf::gamma(2 * nu + 1)));
        };
        add(std::move(r));
      }

      // I-2.39
      {
        IdentityRecord r;
        r.id = "I-2.39";
        r.anchor = "product of sines from I_1 + J_1";
        r.statement = "int_0^1 cos(ut sqrt((a^2+b^2)/(2ab))) [I_1(u sqrt(1-t^2)) + J_1(u sqrt(1-t^2))] (1-t^2)^-1/2 dt "
                      "= (2/u) sin(u sqrt(a/(2b))) sin(u sqrt(b/(2a)))";
        r.lhs_route = Q_FIN;
        r.rhs_route = CLOSED;
        r.space.symbols = {"a", "b", "u"};
        r.space.constraints = {cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("b > 0", [](P p) { return gt(p.at("b"), 0); }),
                               cons("u > 0", [](P p) { return gt(p.at("u"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{1, 0.5, 1}, {1, 1, 2}, {2, 0.7, 3}, {0.5, 2, 4}});
        r.space.hard_points = {pt(r.space.symbols, {1, 0.1, 2})};
        r.lhs = [](P p, C c) {
          double a = p.at("a"), b = p.at("b"), u = p.at("u");
          double w = u * std::sqrt((a * a + b * b) / (2 * a * b));
          // (I_1(z) + J_1(z)) / sqrt(1-t^2) = u (I_1(z) + J_1(z)) / z
          auto f = [=](double t) {
            double z = u * std::sqrt((1 - t) * (1 + t));
            if (z < 1e-150) return u * std::cos(w * t);
            return std::cos(w * t) * u * (sf::bessel_i(1, z).value + J(1, z)) / z;
          };
          return finite(f, 0, 1, c);
        };
        r.rhs = [](P p, C) {
          double a = p.at("a"), b = p.at("b"), u = p.at("u");
          return exact(2 / u * std::sin(u * std::sqrt(a / (2 * b))) * std::sin(u * std::sqrt(b / (2 * a))));
        };
        add(std::move(r));
      }

      // I-3.8, I-3.19, I-3.20: triple products under exp(-alpha x).
      auto triple_space = [](IdentityRecord& r) {
        r.space.constraints.push_back(cons("alpha > 0", [](P p) { return gt(p.at("alpha"), 0); }));
        r.space.constraints.push_back(cons("beta1 >= 0", [](P p) { return p.at("beta1") >= 0; }));
        r.space.constraints.push_back(cons("beta2 > 0", [](P p) { return gt(p.at("beta2"), 0); }));
      };

      {
        IdentityRecord r;
        r.id = "I-3.8";
        r.anchor = "Laplace transform of a triple J_0 product";
        r.statement = "int_0^inf exp(-alpha x) J_0(b1 sqrt x) J_0(b2 sqrt x) J_0(b3 sqrt x) dx = "
                      "(1/alpha) exp(-(b1^2+b2^2+b3^2)/(4 alpha)) sum_n (-1)^n eps_n I_n(b1b2/2alpha) "
                      "I_n(b1b3/2alpha) I_n(b2b3/2alpha)";
        r.lhs_route = Q_DEC;
        r.rhs_route = "series";
        r.space.symbols = {"alpha", "beta1", "beta2", "beta3"};
        triple_space(r);
        r.space.constraints.push_back(cons("beta3 >= 0", [](P p) { return p.at("beta3") >= 0; }));
        r.space.default_grid =
            cartesian({{"alpha", {0.5, 1, 2}}, {"beta1", {0.5, 1}}, {"beta2", {0.5, 1}}, {"beta3", {0.5, 1}}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 1, 1, 1})};
        r.lhs = [](P p, C c) {
          double al = p.at("alpha"), b1 = p.at("beta1"), b2 = p.at("beta2"), b3 = p.at("beta3");
          auto f = [=](double x) {
            double s = std::sqrt(x);
            return std::exp(-al * x) * J(0, b1 * s) * J(0, b2 * s) * J(0, b3 * s);
          };
          return decaying(f, al, c, 2.0);
        };
        r.rhs = [](P p, C c) {
          return series::weber_triple({p.at("alpha"), p.at("beta1"), p.at("beta2"), p.at("beta3"), 0},
                                      terms_or(c, 300));
        };
        add(std::move(r));
      }

      {
        IdentityRecord r;
        r.id = "I-3.19";
        r.anchor = "triple product J_0 J_m J_m by differentiation in a parameter";
        r.statement = "int_0^inf exp(-alpha x) J_0(b1 sqrt x) J_m(b2 sqrt x) J_m(b3 sqrt x) dx = "
                      "m-th derivative form of sum_n (-1)^n (n+m) (2m+n-1)!/n! I_(m+n) I_(m+n) I_(m+n) (series)";
        r.lhs_route = Q_DEC;
        r.rhs_route = "series";
        r.difficulty = Difficulty::hard;
        r.space.symbols = {"alpha", "beta1", "beta2", "beta3", "m"};
        triple_space(r);
        r.space.constraints.push_back(cons("beta3 > 0", [](P p) { return gt(p.at("beta3"), 0); }));
        r.space.constraints.push_back(cons("m in {1,2,3,4}", [](P p) {
          double m = p.at("m");
          return is_int(m) && m >= 1 && m <= 4;
        }));
        r.space.default_grid = rows(r.space.symbols, {{1, 1, 1, 1, 1}, {1, 0.5, 1, 1.5, 2}, {0.7, 1, 0.5, 1, 1},
                                                      {2, 1.5, 1, 0.5, 2}, {1, 0, 1, 1, 1}});
        r.space.hard_points = {pt(r.space.symbols, {1, 0.5, 1, 1.5, 3})};
        r.lhs = [](P p, C c) {
          double al = p.at("alpha"), b1 = p.at("beta1"), b2 = p.at("beta2"), b3 = p.at("beta3");
          double m = p.at("m");
          auto f = [=](double x) {
            double s = std::sqrt(x);
            return std::exp(-al * x) * J(0, b1 * s) * J(m, b2 * s) * J(m, b3 * s);
          };
          return decaying(f, al, c, 2.0);
        };
        r.rhs = [](P p, C c) {
          return series::weber_triple_m({p.at("alpha"), p.at("beta1"), p.at("beta2"), p.at("beta3"),
                                         static_cast<unsigned>(p.at("m"))},
                                        terms_or(c, 300));
        };
        add(std::move(r));
      }

      {
        IdentityRecord r;
        r.id = "I-3.20";
        r.anchor = "limiting form J_0 J_m x^(m/2)";
        r.statement = "int_0^inf exp(-alpha x) J_0(b1 sqrt x) J_m(b2 sqrt x) x^(m/2) dx = finite sum of m+1 "
                      "modified Bessel functions of b1 b2/(2 alpha)";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"alpha", "beta1", "beta2", "m"};
        triple_space(r);
        r.space.constraints.push_back(cons("m in {0,1,...,20}", [](P p) {
          double m = p.at("m");
          return is_int(m) && m >= 0 && m <= 20;
        }));
        r.space.default_grid = rows(r.space.symbols, {{1, 1, 1, 1}, {2, 0.5, 1, 3}, {1, 1, 1.5, 2}, {0.5, 1, 1, 0}});
        r.space.hard_points = {pt(r.space.symbols, {0.5, 1.5, 1.5, 2})};
        r.lhs = [](P p, C c) {
          double al = p.at("alpha"), b1 = p.at("beta1"), b2 = p.at("beta2"), m = p.at("m");
          auto f = [=](double x) {
            double s = std::sqrt(x);
            return std::exp(-al * x) * J(0, b1 * s) * J(m, b2 * s) * std::pow(s, m);
          };
          return decaying(f, al, c, 2.0);
        };
        r.rhs = [](P p, C) {
          return series::weber_j0jm_limit(p.at("alpha"), p.at("beta1"), p.at("beta2"),
                                          static_cast<unsigned>(p.at("m")));
        };
        add(std::move(r));
      }

      // I-3.21
      {
        IdentityRecord r;
        r.id = "I-3.21";
        r.anchor = "Laplace transform of 0F3(mu,nu,nu+1/2;-a^2 x^2)";
        r.statement = "int_0^inf exp(-beta x) 0F3(mu,nu,nu+1/2;-a^2 x^2) dx = "
                      "(2a)^(1-mu) Gamma(mu) Gamma(2nu) beta^(mu-2nu-1) J_(mu-1)(4a/beta)";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.difficulty = Difficulty::hard;
        r.discrepancy_logged = true;
        r.space.symbols = {"mu", "nu", "a", "beta"};
        r.space.constraints = {cons("mu > 0", [](P p) { return gt(p.at("mu"), 0); }),
                               cons("nu > 0", [](P p) { return gt(p.at("nu"), 0); }),
                               cons("a > 0", [](P p) { return gt(p.at("a"), 0); }),
                               cons("beta > 0", [](P p) { return gt(p.at("beta"), 0); })};
        r.space.default_grid = rows(r.space.symbols, {{1, 1, 0.5, 2}, {1.5, 0.75, 0.3, 1}, {2, 1, 0.5, 3}});
        r.space.hard_points = {pt(r.space.symbols, {1, 0.5, 0.4, 2})};
        r.lhs = [](P p, C c) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), be = p.at("beta");
          auto f = [=](double x) { return std::exp(-be * x) * F03(mu, nu, nu + 0.5, -a * a * x * x); };
          return decaying(f, be, c);
        };
        r.rhs = [](P p, C) {
          double mu = p.at("mu"), nu = p.at("nu"), a = p.at("a"), be = p.at("beta");
          Prod pr;
          pr *= std::pow(2 * a, 1 - mu) * sf::gamma(mu) * sf::gamma(2 * nu) * std::pow(be, mu - 2 * nu - 1);
          pr *= sf::bessel_j(mu - 1, 4 * a / be);
          return pr.result();
        };
        add(std::move(r));
      }

      // I-3.22
      {
        IdentityRecord r;
        r.id = "I-3.22";
        r.anchor = "integral of x J_1(ax) I_1(ax) Y_0(x) K_0(x)";
        r.statement = "int_0^inf x J_1(ax) I_1(ax) Y_0(x) K_0(x) dx = -(2 pi a^2)^-1 ln(1-a^4)";
        r.lhs_route = Q_DEC;
        r.rhs_route = CLOSED;
        r.space.symbols = {"a"};
        r.space.constraints = {cons("0 < a < 1", [](P p) { return gt(p.at("a"), 0) && lt(p.at("a"), 1); })};
        r.space.default_grid = rows(r.space.symbols, {{0.3}, {0.5}, {0.7}});
        r.space.hard_points = {pt(r.space.symbols, {0.9})};
        r.lhs = [](P p, C c) {
          double a = p.at("a");
          auto f = [=](double x) {
            return x * J(1, a * x) * Is(1, a * x) * Y(0, x) * Ks(0, x) * std::exp(-(1 - a) * x);
          };
          return decaying(f, 1 - a, c, kPi / 2);
        };
        r.rhs = [](P p, C) {
          double a = p.at("a"), a2 = a * a;
          return exact(-std::log1p(-a2 * a2) / (2 * kPi * a2));
        };
        add(std::move(r));
      }

      return v;
    }

    double side_tol(Difficulty d)
    {
      switch (d) {
      case Difficulty::easy: return 1e-11;
      case Difficulty::oscillatory: return 1e-8;
      case Difficulty::hard: return 1e-8;
      }
      return 1e-11;
    }

  }

  const std::vector<IdentityRecord>& list_identities()
  {
    static const std::vector<IdentityRecord> manifest = build();
    return manifest;
  }

  const IdentityRecord& find_identity(const std::string& id)
  {
    for (const auto& r : list_identities())
      if (r.id == id) return r;
    throw UnknownIdError("unknown identity id: " + id);
  }

  bool point_less(const ParamPoint& a, const ParamPoint& b)
  {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string format_point(const ParamPoint& p)
  {
    std::ostringstream os;
    os.precision(17);
    os << '{';
    bool first = true;
    for (const auto& [k, v] : p) {
      if (!first) os << ", ";
      first = false;
      os << k << '=' << v;
    }
    os << '}';
    return os.str();
  }

  void check_point(const IdentityRecord& rec, const ParamPoint& point)
  {
    for (const auto& s : rec.space.symbols) {
      auto it = point.find(s);
      if (it == point.end()) throw ConstraintError(rec.id + ": missing parameter '" + s + "'");
      if (!std::isfinite(it->second)) throw ConstraintError(rec.id + ": parameter '" + s + "' is not finite");
    }
    for (const auto& [k, v] : point)
      if (std::find(rec.space.symbols.begin(), rec.space.symbols.end(), k) == rec.space.symbols.end())
        throw ConstraintError(rec.id + ": unknown parameter '" + k + "'");
    for (const auto& c : rec.space.constraints)
      if (!c.holds(point)) throw ConstraintError(rec.id + ": constraint violated: " + c.text + " at " + format_point(point));
  }

  std::pair<EvalResult, EvalResult> evaluate_sides(const std::string& id, const ParamPoint& point,
                                                   const Budget& budget)
  {
    const auto& rec = find_identity(id);
    check_point(rec, point);
    SideContext ctx;
    ctx.quad_rel_tol = side_tol(rec.difficulty);
    ctx.budget = budget;
    return {rec.lhs(point, ctx), rec.rhs(point, ctx)};
  }

  Status grade(const EvalResult& lhs, const EvalResult& rhs, double rel_tol, double abs_floor, double& abs_diff,
               double& rel_diff)
  {
    abs_diff = std::fabs(lhs.value - rhs.value);
    double scale = std::fmax(std::fmax(std::fabs(lhs.value), std::fabs(rhs.value)), abs_floor);
    rel_diff = abs_diff / scale;
    if (!lhs.converged || !rhs.converged || !std::isfinite(lhs.value) || !std::isfinite(rhs.value))
      return Status::inconclusive;
    bool tiny = std::fmax(std::fabs(lhs.value), std::fabs(rhs.value)) < abs_floor;
    bool ok = tiny ? abs_diff <= abs_floor : rel_diff <= rel_tol;
    return ok ? Status::pass : Status::fail;
  }

  namespace {

    VerificationResult verify_rec(const IdentityRecord& rec, const ParamPoint& point, double rel_tol,
                                  double abs_floor, const Budget& budget)
    {
      VerificationResult out;
      out.id = rec.id;
      out.point = point;
      auto [l, r] = evaluate_sides(rec.id, point, budget);
      out.lhs = l;
      out.rhs = r;
      out.status = grade(l, r, rel_tol, abs_floor, out.abs_diff, out.rel_diff);
      if (out.status == Status::inconclusive) {
        if (!l.converged && !r.converged) out.note = "neither side converged";
        else if (!l.converged) out.note = "lhs did not converge";
        else if (!r.converged) out.note = "rhs did not converge";
        else out.note = "non-finite side value";
      } else if (out.status == Status::fail && rec.discrepancy_logged) {
        out.status = Status::inconclusive;
        out.discrepancy_ratio = l.value / r.value;
        std::ostringstream os;
        os.precision(10);
        os << "sides disagree; measured lhs/rhs ratio " << *out.discrepancy_ratio;
        out.note = os.str();
      }
      return out;
    }

    VerificationResult verify_point_safe(const IdentityRecord& rec, const ParamPoint& point,
                                         const GridOptions& opt)
    {
      double tol = opt.policy.rel_tol_for(rec.difficulty);
      try {
        return verify_rec(rec, point, tol, opt.policy.abs_floor, opt.budget);
      } catch (const std::exception& e) {
        VerificationResult out;
        out.id = rec.id;
        out.point = point;
        double nan = std::numeric_limits<double>::quiet_NaN();
        out.lhs = out.rhs = EvalResult{nan, nan, false, 0};
        out.abs_diff = out.rel_diff = nan;
        out.status = Status::inconclusive;
        out.note = std::string("evaluation error: ") + e.what();
        return out;
      }
    }

    using Task = std::pair<const IdentityRecord*, ParamPoint>;

    std::vector<VerificationResult> run_tasks(const std::vector<Task>& tasks, const GridOptions& opt)
    {
      std::vector<VerificationResult> out(tasks.size());
      unsigned jobs = std::max(1u, opt.jobs);
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
          out[i] = verify_point_safe(*tasks[i].first, tasks[i].second, opt);
      };
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      return out;
    }

    std::vector<ParamPoint> sorted(std::vector<ParamPoint> g)
    {
      std::sort(g.begin(), g.end(), point_less);
      return g;
    }

  }

  VerificationResult verify(const std::string& id, const ParamPoint& point, double rel_tol, double abs_floor,
                            const Budget& budget)
  {
    return verify_rec(find_identity(id), point, rel_tol, abs_floor, budget);
  }

  Report verify_grid(const std::string& id, const std::optional<std::vector<ParamPoint>>& grid,
                     const GridOptions& opt)
  {
    const auto& rec = find_identity(id);
    if (grid && grid->empty()) throw DomainError(id + ": empty grid");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Task> tasks;
    for (auto& p : sorted(grid ? *grid : rec.space.default_grid)) tasks.emplace_back(&rec, std::move(p));
    Report rep;
    rep.policy = opt.policy;
    rep.entries = run_tasks(tasks, opt);
    rep.recount();
    rep.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  Report verify_all(const GridOptions& opt)
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Task> tasks;
    for (const auto& rec : list_identities())
      for (const auto& p : rec.space.default_grid) tasks.emplace_back(&rec, p);
    Report rep;
    rep.policy = opt.policy;
    rep.entries = run_tasks(tasks, opt);
    rep.recount();
    rep.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

}
