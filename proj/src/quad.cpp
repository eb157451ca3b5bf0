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

#include "besselkit/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace besselkit::quad {

  namespace {

    // QUADPACK 21-point Kronrod nodes/weights and the embedded 10-point Gauss weights.
    constexpr double kXgk[11] = {
      0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
      0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
      0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
      0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
      0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
      0.0,
    };
    constexpr double kWgk[11] = {
      0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
      0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
      0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
      0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
      0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
      0.149445554002916905664936468389821,
    };
    constexpr double kWg[5] = {
      0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
      0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
      0.295524224714752870173892994651338,
    };

    bool is_integer(double x) { return x == std::floor(x); }

    // A piece of the integration range, possibly mapped so that the
    // algebraic factor at one end becomes smooth:
    //   left:  x = l + (r-l) s^p,  right: x = r - (r-l) s^p,  s in [0, 1]
    // with p = 2/(alpha+1).
    struct Segment {
      enum Mode { plain, left, right } mode = plain;
      double l = 0.0, r = 0.0;
      double alpha = 0.0, p = 1.0, pref = 1.0;
      int hint = -1;  // index of the hint absorbed by the mapping
      double lo() const { return mode == plain ? l : 0.0; }
      double hi() const { return mode == plain ? r : 1.0; }
    };

    class Evaluator {
    public:
      Evaluator(const Integrand& f) : m_f(f) {}

      double plain_factor(double x, int skip) const
      {
        double fac = 1.0;
        for (std::size_t i = 0; i < m_f.hints.size(); ++i) {
          const Singularity& h = m_f.hints[i];
          if (static_cast<int>(i) == skip || h.exponent == 0.0)
            continue;
          fac *= std::pow(std::fabs(x - h.point), h.exponent);
        }
        return fac;
      }

      double operator()(const Segment& seg, double s)
      {
        ++m_evals;
        if (seg.mode == Segment::plain)
          return m_f.eval(s) * plain_factor(s, -1);
        const double d = (seg.r - seg.l) * std::pow(s, seg.p);
        const double x = (seg.mode == Segment::left ? seg.l + d : seg.r - d);
        if (s == 0.0)
          return 0.0;
        return m_f.eval(x) * plain_factor(x, seg.hint) * seg.pref
               * std::pow(s, seg.p * seg.alpha + seg.p - 1.0);
      }

      std::uint64_t evals() const { return m_evals; }

    private:
      const Integrand& m_f;
      std::uint64_t m_evals = 0;
    };

    struct Interval {
      int seg = 0;
      double lo = 0.0, hi = 0.0;
      double result = 0.0, err = 0.0;
      bool roundoff = false;
      bool operator<(const Interval& o) const { return err < o.err; }
    };

    void gk21(Evaluator& ev, const Segment& seg, Interval& iv)
    {
      const double centr = 0.5 * (iv.lo + iv.hi);
      const double hlgth = 0.5 * (iv.hi - iv.lo);
      const double dhlgth = std::fabs(hlgth);
      double fv1[10], fv2[10];
      const double fc = ev(seg, centr);
      double resg = 0.0;
      double resk = kWgk[10] * fc;
      double resabs = std::fabs(resk);
      for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const double f1 = ev(seg, centr - absc);
        const double f2 = ev(seg, centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
      }
      for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const double f1 = ev(seg, centr - absc);
        const double f2 = ev(seg, centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
      }
      const double reskh = 0.5 * resk;
      double resasc = kWgk[10] * std::fabs(fc - reskh);
      for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
      iv.result = resk * hlgth;
      resabs *= dhlgth;
      resasc *= dhlgth;
      double abserr = std::fabs((resk - resg) * hlgth);
      if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
      iv.roundoff = false;
      if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        const double floor = 50.0 * kEps * resabs;
        if (abserr <= floor) {
          abserr = floor;
          iv.roundoff = true;
        }
      }
      iv.err = abserr;
    }

    std::vector<Segment> build_segments(const Integrand& f, double a, double b)
    {
      std::vector<double> pts{ a, b };
      for (const auto& h : f.hints) {
        if (!(h.exponent > -1.0) || !std::isfinite(h.exponent))
          throw DomainError("quad: singularity exponent must be > -1");
        if (h.point > a && h.point < b)
          pts.push_back(h.point);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

      auto singular_at = [&](double x) -> int {
        for (std::size_t i = 0; i < f.hints.size(); ++i)
          if (f.hints[i].point == x && !is_integer(f.hints[i].exponent))
            return static_cast<int>(i);
        return -1;
      };

      auto make_mapped = [&](double l, double r, Segment::Mode mode, int hint) {
        Segment s;
        s.mode = mode;
        s.l = l;
        s.r = r;
        s.hint = hint;
        s.alpha = f.hints[hint].exponent;
        s.p = 2.0 / (s.alpha + 1.0);
        s.pref = s.p * std::pow(r - l, s.alpha + 1.0);
        return s;
      };

      constexpr std::size_t kMaxPanels = 4000;
      std::vector<Segment> segs;
      auto push_plain = [&](double l, double r) {
        std::size_t n = 1;
        if (f.max_panel > 0.0 && r - l > f.max_panel)
          n = std::min<std::size_t>(kMaxPanels, static_cast<std::size_t>(std::ceil((r - l) / f.max_panel)));
        for (std::size_t i = 0; i < n; ++i) {
          Segment s;
          s.l = l + (r - l) * static_cast<double>(i) / static_cast<double>(n);
          s.r = (i + 1 == n ? r : l + (r - l) * static_cast<double>(i + 1) / static_cast<double>(n));
          segs.push_back(s);
        }
      };
      auto panel_width = [&](double w) {
        return (f.max_panel > 0.0 ? std::min(w, f.max_panel) : w);
      };

      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double l = pts[i], r = pts[i + 1];
        const int hl = singular_at(l);
        const int hr = singular_at(r);
        if (hl >= 0 && hr >= 0) {
          const double m = 0.5 * (l + r);
          const double wl = panel_width(m - l);
          const double wr = panel_width(r - m);
          segs.push_back(make_mapped(l, l + wl, Segment::left, hl));
          if (l + wl < r - wr)
            push_plain(l + wl, r - wr);
          segs.push_back(make_mapped(r - wr, r, Segment::right, hr));
        } else if (hl >= 0) {
          const double w = panel_width(r - l);
          segs.push_back(make_mapped(l, l + w, Segment::left, hl));
          if (l + w < r)
            push_plain(l + w, r);
        } else if (hr >= 0) {
          const double w = panel_width(r - l);
          if (l < r - w)
            push_plain(l, r - w);
          segs.push_back(make_mapped(r - w, r, Segment::right, hr));
        } else {
          push_plain(l, r);
        }
      }
      return segs;
    }

  }

  EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opt)
  {
    if (!f.eval)
      throw DomainError("integrate_finite: empty integrand");
    if (!(std::isfinite(a) && std::isfinite(b)))
      throw DomainError("integrate_finite: limits must be finite");
    if (!(opt.rel_tol > 0.0) && !(opt.abs_tol > 0.0))
      throw DomainError("integrate_finite: a positive tolerance is required");
    if (a == b)
      return EvalResult{};
    if (a > b) {
      EvalResult r = integrate_finite(f, b, a, opt);
      r.value = -r.value;
      return r;
    }

    const std::vector<Segment> segs = build_segments(f, a, b);
    Evaluator ev(f);
    std::priority_queue<Interval> heap;
    std::vector<Interval> frozen;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      Interval iv;
      iv.seg = static_cast<int>(i);
      iv.lo = segs[i].lo();
      iv.hi = segs[i].hi();
      gk21(ev, segs[i], iv);
      total += iv.result;
      total_err += iv.err;
      heap.push(iv);
    }

    const double rel = std::max(opt.rel_tol, 50.0 * kEps);
    auto target = [&] { return std::max(opt.abs_tol, rel * std::fabs(total)); };
    auto recompute = [&] {
      double s = 0.0, e = 0.0, c = 0.0;
      auto acc = [&](const Interval& iv) {
        const double t = s + iv.result;
        c += (std::fabs(s) >= std::fabs(iv.result) ? (s - t) + iv.result : (iv.result - t) + s);
        s = t;
        e += iv.err;
      };
      std::priority_queue<Interval> copy = heap;
      while (!copy.empty()) {
        acc(copy.top());
        copy.pop();
      }
      for (const auto& iv : frozen)
        acc(iv);
      total = s + c;
      total_err = e;
    };

    std::size_t iter = 0;
    bool budget_hit = false;
    while (total_err > target() && !heap.empty()) {
      if (ev.evals() + 42 > opt.max_evals) {
        budget_hit = true;
        break;
      }
      Interval worst = heap.top();
      heap.pop();
      const double mid = 0.5 * (worst.lo + worst.hi);
      const double width = worst.hi - worst.lo;
      if (worst.roundoff || width <= 64.0 * kEps * std::max(std::fabs(mid), std::numeric_limits<double>::min()) || !(mid > worst.lo && mid < worst.hi)) {
        frozen.push_back(worst);
        continue;
      }
      Interval l = worst, r = worst;
      l.hi = mid;
      r.lo = mid;
      gk21(ev, segs[worst.seg], l);
      gk21(ev, segs[worst.seg], r);
      total += l.result + r.result - worst.result;
      total_err += l.err + r.err - worst.err;
      heap.push(l);
      heap.push(r);
      if (++iter % 64 == 0)
        recompute();
    }
    recompute();

    EvalResult res;
    res.value = total;
    res.abs_err = total_err;
    res.terms = ev.evals();
    const bool roundoff_limited = heap.empty();
    res.converged = std::isfinite(total) && std::isfinite(total_err) && !budget_hit
                    && (total_err <= target() || roundoff_limited);
    return res;
  }

  namespace {

    double full_value(const Integrand& f, double x)
    {
      double v = f.eval(x);
      for (const auto& h : f.hints)
        if (h.exponent != 0.0)
          v *= std::pow(std::fabs(x - h.point), h.exponent);
      return v;
    }

    // log of a bound on |f(x)| exp(lambda x) near T.
    double log_envelope(const Integrand& f, double lambda, double T)
    {
      if (f.decay.envelope) {
        const double e = f.decay.envelope(T);
        return e > 0.0 ? std::log(e) : -std::numeric_limits<double>::infinity();
      }
      constexpr int kSamples = 16;
      const double h = 0.25 / lambda;
      double best = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < kSamples; ++k) {
        const double x = T + k * h;
        const double v = std::fabs(full_value(f, x));
        if (v > 0.0 && std::isfinite(v))
          best = std::max(best, std::log(v) + lambda * x);
      }
      return best + std::log(4.0);
    }

    void accumulate(EvalResult& total, const EvalResult& piece)
    {
      total.value += piece.value;
      total.abs_err += piece.abs_err;
      total.converged = total.converged && piece.converged;
      total.terms += piece.terms;
    }

  }

  EvalResult integrate_semiinf_decaying(const Integrand& f, double a, const QuadOptions& opt)
  {
    if (f.decay.kind != DecayKind::exponential || !(f.decay.rate > 0.0))
      throw DomainError("integrate_semiinf_decaying: requires exponential decay with positive rate");
    const double lambda = f.decay.rate;
    QuadOptions fo = opt;
    fo.rel_tol = 0.5 * opt.rel_tol;
    fo.abs_tol = 0.5 * opt.abs_tol;

    double T = a + 10.0 / lambda;
    if (f.max_panel > 0.0)
      T = std::max(T, a + f.max_panel);
    EvalResult total = integrate_finite(f, a, T, fo);
    double tail = 0.0;
    constexpr int kMaxDoublings = 40;
    int k = 0;
    for (;; ++k) {
      const double log_tail = log_envelope(f, lambda, T) - lambda * T - std::log(lambda);
      tail = std::exp(log_tail);
      const double allowed = 0.5 * std::max(opt.rel_tol * std::fabs(total.value), opt.abs_tol);
      if (tail <= allowed || k >= kMaxDoublings)
        break;
      const double Tn = a + 2.0 * (T - a);
      accumulate(total, integrate_finite(f, T, Tn, fo));
      T = Tn;
    }
    total.abs_err += tail;
    if (k >= kMaxDoublings)
      total.converged = false;
    total.converged = total.converged && std::isfinite(total.value);
    return total;
  }

  EvalResult integrate_semiinf_oscillatory(const Integrand& f, double a,
                                           const OscillationDescriptor& osc,
                                           const QuadOptions& opt)
  {
    const double P = osc.asymptotic_period;
    if (!(P > 0.0) || !std::isfinite(P))
      throw DomainError("integrate_semiinf_oscillatory: asymptotic_period must be positive and finite");
    double start = osc.first_zero_estimate;
    if (!std::isfinite(start))
      throw DomainError("integrate_semiinf_oscillatory: first_zero_estimate must be finite");
    if (start < a)
      start += std::ceil((a - start) / P) * P;

    QuadOptions co = opt;
    co.rel_tol = std::max(0.1 * opt.rel_tol, 1e-14);
    co.abs_tol = 0.1 * opt.abs_tol;

    EvalResult total;
    if (start > a)
      total = integrate_finite(f, a, start, co);
    double quad_err = total.abs_err;
    bool cells_ok = total.converged;
    std::uint64_t evals = total.terms;

    constexpr std::size_t kWindow = 50;
    constexpr std::size_t kMinCells = 6;
    std::vector<double> sums;
    double S = total.value;
    double E = S, prevE = S;
    double diff = std::numeric_limits<double>::infinity();
    double prev_diff = std::numeric_limits<double>::infinity();
    double ext_err = 0.0;
    bool converged = false;
    for (std::size_t k = 0; k < opt.max_cells; ++k) {
      const double l = start + static_cast<double>(k) * P;
      QuadOptions cell_opt = co;
      cell_opt.abs_tol = std::max(co.abs_tol, 1e-3 * opt.rel_tol * std::fabs(S));
      const EvalResult cell = integrate_finite(f, l, l + P, cell_opt);
      S += cell.value;
      quad_err += cell.abs_err;
      cells_ok = cells_ok && cell.converged;
      evals += cell.terms;
      sums.push_back(S);
      if (sums.size() < 3)
        continue;
      const std::size_t n = std::min(kWindow, sums.size());
      const EvalResult ext = epsilon_extrapolate(std::span<const double>(sums).last(n));
      prevE = E;
      E = ext.value;
      ext_err = ext.abs_err;
      prev_diff = diff;
      diff = std::fabs(E - prevE);
      const double scale = std::max(opt.rel_tol * std::fabs(E), opt.abs_tol);
      if (sums.size() >= kMinCells && sums.size() > 3 && diff <= scale && prev_diff <= scale) {
        converged = true;
        break;
      }
    }
    EvalResult res;
    res.value = (sums.size() >= 3 ? E : S);
    res.abs_err = std::max(diff, ext_err) + quad_err;
    if (!std::isfinite(res.abs_err))
      res.abs_err = std::fabs(S);
    res.converged = converged && cells_ok && std::isfinite(res.value);
    res.terms = evals;
    return res;
  }

  EvalResult epsilon_extrapolate(std::span<const double> s)
  {
    const std::size_t n = s.size();
    if (n < 3)
      throw DomainError("epsilon_extrapolate: needs at least 3 partial sums");
    const double nan = std::numeric_limits<double>::quiet_NaN();

    double best = s[n - 1];
    double best_err = std::fabs(s[n - 1] - s[n - 2]);

    double last_even = s[n - 1];
    std::vector<double> prev(n + 1, 0.0);  // column -1
    std::vector<double> cur(s.begin(), s.end());
    for (std::size_t col = 0; cur.size() >= 2; ++col) {
      std::vector<double> next(cur.size() - 1);
      for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
        const double d = cur[j + 1] - cur[j];
        const double mag = std::max(std::fabs(cur[j]), std::fabs(cur[j + 1]));
        if (!std::isfinite(d) || std::fabs(d) <= 4.0 * kEps * mag)
          next[j] = nan;
        else
          next[j] = prev[j + 1] + 1.0 / d;
      }
      // Column col+1; even columns are estimates of the limit.
      if ((col + 1) % 2 == 0) {
        const double v = next.back();
        const double e = std::fabs(v - (next.size() >= 2 ? next[next.size() - 2] : last_even));
        if (std::isfinite(v) && std::isfinite(e) && e < best_err) {
          best = v;
          best_err = e;
        }
        last_even = v;
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
    EvalResult r;
    r.value = best;
    r.abs_err = std::max(2.0 * best_err, 4.0 * kEps * std::fabs(best));
    r.converged = std::isfinite(best);
    r.terms = n;
    return r;
  }

}
