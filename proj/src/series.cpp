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

#include "besselkit/series.hpp"
#include "besselkit/specfun.hpp"
#include "besselkit/summation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace besselkit::series {

  namespace sf = besselkit::specfun;

  namespace {

    constexpr double kKernelRel = 32.0 * kEps;

    SeriesOptions with_budget(std::size_t max_terms)
    {
      SeriesOptions o;
      o.max_terms = max_terms;
      return o;
    }

    // Terminating 2F1(-m, -mu-m; nu+1; r).
    double f21_terminating(unsigned m, double mu, double nu, double r)
    {
      double t = 1.0, s = 1.0;
      for (unsigned k = 0; k < m; ++k) {
        t *= (-static_cast<double>(m) + k) * (-mu - m + k) / ((nu + 1.0 + k) * (k + 1.0)) * r;
        s += t;
      }
      return s;
    }

    // Fornberg finite-difference weights for the m-th derivative at 0 on the
    // integer stencil offs.
    std::vector<double> fd_weights(const std::vector<double>& offs, int m)
    {
      const std::size_t n = offs.size();
      std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
      std::vector<std::vector<double>> prev = c;
      prev[0][0] = 1.0;
      double c1 = 1.0;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<std::vector<double>> cur(m + 1, std::vector<double>(n, 0.0));
        double c2 = 1.0;
        const int mn = std::min<int>(static_cast<int>(i), m);
        for (std::size_t j = 0; j < i; ++j) {
          const double c3 = offs[i] - offs[j];
          c2 *= c3;
          for (int k = 0; k <= mn; ++k)
            cur[k][j] = (offs[i] * prev[k][j] - (k > 0 ? k * prev[k - 1][j] : 0.0)) / c3;
        }
        for (int k = 0; k <= mn; ++k)
          cur[k][i] = c1 / c2 * ((k > 0 ? k * prev[k - 1][i - 1] : 0.0) - offs[i - 1] * prev[k][i - 1]);
        c1 = c2;
        prev = std::move(cur);
      }
      return prev[m];
    }

  }

  EvalResult product_jj_gauss(double mu, double nu, double a, double b, double x,
                              std::size_t max_terms)
  {
    if (!(b > 0.0 && b <= a))
      throw DomainError("product_jj_gauss: requires 0 < b <= a");
    if (!(mu > -1.0 && nu > -1.0))
      throw DomainError("product_jj_gauss: requires mu > -1 and nu > -1");
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError("product_jj_gauss: requires finite x >= 0");
    const double r = (b / a) * (b / a);
    const double hax = 0.5 * a * x;
    const double pref = (mu == 0.0 ? 1.0 : std::pow(hax, mu)) * (nu == 0.0 ? 1.0 : std::pow(0.5 * b * x, nu))
                        * sf::rgamma(mu + 1.0) * sf::rgamma(nu + 1.0);
    if (x == 0.0) {
      EvalResult z;
      z.value = pref;
      z.terms = 1;
      return z;
    }
    SeriesSummer s(with_budget(max_terms));
    double t = 1.0;
    const double q = -hax * hax;
    for (unsigned m = 0; !s.done() && !s.exhausted(); ++m) {
      if (m > 0)
        t *= q / (m * (mu + m));
      s.add(t * f21_terminating(m, mu, nu, r));
    }
    EvalResult res = s.result();
    res.abs_err = (res.abs_err + 16.0 * kEps * s.state().max_partial_abs) * std::fabs(pref);
    res.value *= pref;
    return res;
  }

  EvalResult product_jj_neumann(double nu, double a, double b, double x, std::size_t max_terms)
  {
    if (!(a > 0.0 && b > 0.0))
      throw DomainError("product_jj_neumann: requires a, b > 0");
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError("product_jj_neumann: requires finite x >= 0");
    if (x == 0.0 && nu < 0.0)
      throw DomainError("product_jj_neumann: x = 0 requires nu >= 0");
    const double c = std::hypot(a, b);
    const double w = a * b * x / (2.0 * c);
    const double xc = x * c;
    SeriesSummer s(with_budget(max_terms));
    double coef = (nu == 0.0 ? 1.0 : std::pow(w, nu)) * sf::rgamma(nu + 1.0);
    double kerr = 0.0;
    for (unsigned r = 0; !s.done() && !s.exhausted(); ++r) {
      if (r > 0)
        coef *= w * w / (r * (nu + r));
      const double order = nu + 2.0 * r;
      if (order > sf::kMaxOrder)
        break;
      const EvalResult j = sf::bessel_j(order, xc);
      s.add(coef * j.value);
      kerr += std::fabs(coef) * j.abs_err;
      if (coef == 0.0)
        break;
    }
    EvalResult res = s.result();
    if (coef == 0.0)
      res.converged = std::isfinite(res.value);
    res.abs_err += kerr;
    return res;
  }

  EvalResult hyp0f1_product(double c, double x, double y, std::size_t max_terms)
  {
    if (c <= 0.0 && c == std::floor(c))
      throw PoleError("hyp0f1_product: c at a nonpositive integer");
    SeriesSummer s(with_budget(max_terms));
    double coef = 1.0;
    double kerr = 0.0;
    bool inner_ok = true;
    const double xy = x * y;
    for (unsigned r = 0; !s.done() && !s.exhausted(); ++r) {
      if (r > 0)
        coef *= xy / (r * (c + r - 1.0) * (c + 2.0 * r - 2.0) * (c + 2.0 * r - 1.0));
      const EvalResult f = sf::hyp0f1(c + 2.0 * r, x + y);
      inner_ok = inner_ok && f.converged;
      s.add(coef * f.value);
      kerr += std::fabs(coef) * f.abs_err;
      if (coef == 0.0) {
        // x y = 0: only r = 0 survives.
        EvalResult res;
        res.value = s.sum();
        res.abs_err = kerr;
        res.converged = inner_ok;
        res.terms = r + 1;
        return res;
      }
    }
    EvalResult res = s.result();
    res.abs_err += kerr;
    res.converged = res.converged && inner_ok;
    return res;
  }

  EvalResult weber_triple(const TripleParams& p, std::size_t max_terms)
  {
    if (!(p.alpha > 0.0))
      throw DomainError("weber_triple: requires alpha > 0");
    if (!(p.beta1 >= 0.0 && p.beta2 >= 0.0 && p.beta3 >= 0.0)
        || !std::isfinite(p.beta1 + p.beta2 + p.beta3))
      throw DomainError("weber_triple: requires finite beta_i >= 0");
    if (p.m != 0)
      throw DomainError("weber_triple: requires m = 0");
    const double a2 = 2.0 * p.alpha;
    const double z12 = p.beta1 * p.beta2 / a2;
    const double z13 = p.beta1 * p.beta3 / a2;
    const double z23 = p.beta2 * p.beta3 / a2;
    const double b2 = p.beta1 * p.beta1 + p.beta2 * p.beta2 + p.beta3 * p.beta3;
    const double expo = -b2 / (4.0 * p.alpha) + z12 + z13 + z23;

    SeriesSummer s(with_budget(max_terms));
    double abs_sum = 0.0;
    for (unsigned n = 0; !s.done() && !s.exhausted(); ++n) {
      const double prod = sf::bessel_i_scaled(n, z12).value * sf::bessel_i_scaled(n, z13).value
                          * sf::bessel_i_scaled(n, z23).value;
      const double t = (n == 0 ? 1.0 : (n % 2 ? -2.0 : 2.0)) * prod;
      s.add(t);
      abs_sum += std::fabs(t);
    }
    EvalResult res = s.result();
    const double S = res.value;
    const double err = res.abs_err + kKernelRel * abs_sum;
    const double lscale = expo - std::log(p.alpha);
    res.value = (S == 0.0 ? 0.0 : std::copysign(std::exp(lscale + std::log(std::fabs(S))), S));
    res.abs_err = std::exp(lscale + std::log(err));
    res.converged = res.converged && std::isfinite(res.value);
    return res;
  }

  EvalResult weber_triple_m(const TripleParams& p, std::size_t max_terms)
  {
    if (p.m == 0)
      return weber_triple(p, max_terms);
    if (p.m > 4)
      throw DomainError("weber_triple_m: requires m <= 4");
    if (!(p.alpha > 0.0))
      throw DomainError("weber_triple_m: requires alpha > 0");
    if (!(p.beta2 > 0.0 && p.beta3 > 0.0 && p.beta1 >= 0.0) || !std::isfinite(p.beta1 + p.beta2 + p.beta3))
      throw DomainError("weber_triple_m: requires beta1 >= 0 and beta2, beta3 > 0");
    const unsigned m = p.m;
    const double al = p.alpha;
    const double z23 = p.beta2 * p.beta3 / (2.0 * al);
    const double shift = -(p.beta2 * p.beta2 + p.beta3 * p.beta3) / (4.0 * al);

    // Constant factors I_{m+n}(z23) (scaled) and (n+m)(2m+n-1)!/n!.
    bool series_ok = true;
    std::size_t terms_used = 0;
    auto g = [&](double x) -> double {
      const double sx = std::sqrt(std::max(x, 0.0) / al);
      const double u2 = p.beta2 * sx, u3 = p.beta3 * sx;
      SeriesSummer s(with_budget(max_terms));
      double fact = 1.0;  // (2m+n-1)!/n! / (2m-1)!
      for (unsigned n = 0; !s.done() && !s.exhausted(); ++n) {
        if (n > 0)
          fact *= (2.0 * m + n - 1.0) / n;
        const double prod = sf::bessel_i_scaled(m + n, u2).value * sf::bessel_i_scaled(m + n, u3).value
                            * sf::bessel_i_scaled(m + n, z23).value;
        s.add((n % 2 ? -1.0 : 1.0) * (n + m) * fact * prod);
      }
      series_ok = series_ok && s.done();
      terms_used = std::max<std::size_t>(terms_used, s.state().terms);
      return std::exp(-x + u2 + u3 + z23 + shift) * s.sum();
    };

    double fm1 = 1.0;  // (2m-1)!
    for (unsigned k = 2; k < 2 * m; ++k)
      fm1 *= k;
    double mfact = 1.0, m2fact = 1.0;
    for (unsigned k = 2; k <= m; ++k)
      mfact *= k;
    for (unsigned k = 2; k <= 2 * m; ++k)
      m2fact *= k;
    const double pref = std::pow(2.0, 2.0 * m + 1.0) * mfact / m2fact
                        * std::pow(al / (p.beta2 * p.beta3), m) / al * fm1;

    const double x0 = p.beta1 * p.beta1 / (4.0 * al);
    const double h = 0.05 * std::max(x0, 1.0);
    EvalResult d = derivative_m(g, x0, static_cast<int>(m), h);
    d.value *= pref;
    d.abs_err *= std::fabs(pref);
    d.converged = d.converged && series_ok;
    d.terms = terms_used;
    return d;
  }

  EvalResult weber_j0jm_limit(double alpha, double beta1, double beta2, unsigned m)
  {
    if (!(alpha > 0.0))
      throw DomainError("weber_j0jm_limit: requires alpha > 0");
    if (!(beta1 >= 0.0 && beta2 >= 0.0) || !std::isfinite(beta1 + beta2))
      throw DomainError("weber_j0jm_limit: requires finite beta1, beta2 >= 0");
    const double z = beta1 * beta2 / (2.0 * alpha);
    const double d = beta1 - beta2;
    const double expo = -d * d / (4.0 * alpha);
    // beta1^n beta2^(m-n) / (2 alpha)^m carries the (beta2/2alpha)^m (beta1/beta2)^n factor.
    SeriesSummer s;
    double binom = 1.0;
    double abs_sum = 0.0;
    for (unsigned n = 0; n <= m; ++n) {
      if (n > 0)
        binom *= static_cast<double>(m - n + 1) / n;
      double w = binom;
      for (unsigned k = 0; k < n; ++k)
        w *= beta1 / (2.0 * alpha);
      for (unsigned k = n; k < m; ++k)
        w *= beta2 / (2.0 * alpha);
      const double t = (n % 2 ? -1.0 : 1.0) * w * sf::bessel_i_scaled(n, z).value;
      s.add(t);
      abs_sum += std::fabs(t);
    }
    const double scale = std::exp(expo) / alpha;
    EvalResult res;
    res.value = scale * s.sum();
    res.abs_err = scale * (kKernelRel * abs_sum + 4.0 * kEps * s.state().max_partial_abs);
    res.converged = std::isfinite(res.value);
    res.terms = m + 1;
    return res;
  }

  EvalResult derivative_m(const std::function<double(double)>& f, double x0, int m, double h)
  {
    if (m < 1 || m > 4)
      throw DomainError("derivative_m: requires 1 <= m <= 4");
    if (!std::isfinite(x0))
      throw DomainError("derivative_m: x0 must be finite");
    if (!(h > 0.0))
      h = std::max(std::fabs(x0), 1.0) * std::pow(kEps, 1.0 / (m + 5));
    const bool one_sided = x0 < m * h;

    std::vector<double> offs;
    if (one_sided) {
      for (int k = 0; k <= m + 1; ++k)
        offs.push_back(k);
    } else {
      const int K = (m + 1) / 2;
      for (int k = -K; k <= K; ++k)
        offs.push_back(k);
    }
    const std::vector<double> w = fd_weights(offs, m);
    double wsum = 0.0;
    for (double v : w)
      wsum += std::fabs(v);

    double fmax = 0.0;
    auto diff = [&](double step) {
      double acc = 0.0;
      for (std::size_t i = 0; i < offs.size(); ++i) {
        if (w[i] == 0.0)
          continue;
        const double v = f(x0 + offs[i] * step);
        fmax = std::max(fmax, std::fabs(v));
        acc += w[i] * v;
      }
      return acc / std::pow(step, m);
    };
    const double d1 = diff(h), d2 = diff(0.5 * h), d4 = diff(0.25 * h);
    double a1, a2, fin;
    if (one_sided) {
      // Error series h^2, h^3, ...
      a1 = (4.0 * d2 - d1) / 3.0;
      a2 = (4.0 * d4 - d2) / 3.0;
      fin = (8.0 * a2 - a1) / 7.0;
    } else {
      // Error series h^2, h^4, ...
      a1 = (4.0 * d2 - d1) / 3.0;
      a2 = (4.0 * d4 - d2) / 3.0;
      fin = (16.0 * a2 - a1) / 15.0;
    }
    const double noise = 8.0 * kEps * fmax * wsum / std::pow(0.25 * h, m);
    const double err = std::fabs(fin - a2);
    EvalResult r;
    r.value = fin;
    r.abs_err = err + noise;
    r.converged = std::isfinite(fin) && (err <= std::max(1e-4 * std::fabs(fin), 100.0 * noise));
    r.terms = 3 * offs.size();
    return r;
  }

}
