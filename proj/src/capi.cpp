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

#include "besselkit/besselkit.h"

#include "besselkit/catalog.hpp"
#include "besselkit/report.hpp"
#include "besselkit/series.hpp"
#include "besselkit/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct bk_report {
  besselkit::catalog::Report rep;
};

namespace {

  namespace bk = besselkit;
  namespace sf = besselkit::specfun;

  thread_local std::string g_last_error;

  bk_status fail(bk_status s, const std::string& msg)
  {
    g_last_error = msg;
    return s;
  }

  // Runs f, mapping exceptions to status codes.
  template <class F>
  bk_status guarded(F&& f)
  {
    try {
      g_last_error.clear();
      return f();
    } catch (const bk::catalog::UnknownIdError& e) {
      return fail(BK_ERR_UNKNOWN, e.what());
    } catch (const bk::report::GridFormatError& e) {
      return fail(BK_ERR_ARGUMENT, e.what());
    } catch (const bk::DomainError& e) {
      return fail(BK_ERR_DOMAIN, e.what());
    } catch (const bk::OverflowError& e) {
      return fail(BK_ERR_OVERFLOW, e.what());
    } catch (const bk::Error& e) {
      return fail(BK_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
      return fail(BK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
      return fail(BK_ERR_INTERNAL, e.what());
    } catch (...) {
      return fail(BK_ERR_INTERNAL, "unknown exception");
    }
  }

  char* dup(const std::string& s)
  {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
  }

  unsigned to_uint(double v, const char* what)
  {
    if (!(v >= 0 && v == std::floor(v) && v < 4294967296.0))
      throw bk::DomainError(std::string(what) + " must be a nonnegative integer");
    return static_cast<unsigned>(v);
  }

  bk::EvalResult wrap(double v)
  {
    bk::EvalResult r;
    r.value = v;
    r.abs_err = 4 * bk::kEps * std::fabs(v);
    r.converged = std::isfinite(v);
    return r;
  }

  struct EvalEntry {
    const char* name;
    std::size_t arity;
    std::function<bk::EvalResult(const double*)> fn;
  };

  const std::vector<EvalEntry>& eval_table()
  {
    using bk::series::TripleParams;
    static const std::vector<EvalEntry> t = {
        {"gamma", 1, [](const double* a) { return wrap(sf::gamma(a[0])); }},
        {"log_gamma", 1, [](const double* a) { return wrap(sf::log_gamma(a[0])); }},
        {"rgamma", 1, [](const double* a) { return wrap(sf::rgamma(a[0])); }},
        {"bessel_j", 2, [](const double* a) { return sf::bessel_j(a[0], a[1]); }},
        {"bessel_y", 2, [](const double* a) { return sf::bessel_y(a[0], a[1]); }},
        {"bessel_i", 2, [](const double* a) { return sf::bessel_i(a[0], a[1]); }},
        {"bessel_i_scaled", 2, [](const double* a) { return sf::bessel_i_scaled(a[0], a[1]); }},
        {"bessel_k", 2, [](const double* a) { return sf::bessel_k(a[0], a[1]); }},
        {"bessel_k_scaled", 2, [](const double* a) { return sf::bessel_k_scaled(a[0], a[1]); }},
        {"kelvin_ber", 2, [](const double* a) { return sf::kelvin_ber(a[0], a[1]); }},
        {"kelvin_bei", 2, [](const double* a) { return sf::kelvin_bei(a[0], a[1]); }},
        {"hyp0f1", 2, [](const double* a) { return sf::hyp0f1(a[0], a[1]); }},
        {"hyp0f3", 4, [](const double* a) { return sf::hyp0f3(a[0], a[1], a[2], a[3]); }},
        {"hyp2f1", 4, [](const double* a) { return sf::hyp2f1(a[0], a[1], a[2], a[3]); }},
        {"laguerre", 3, [](const double* a) { return wrap(sf::laguerre(to_uint(a[0], "n"), a[1], a[2])); }},
        {"gegenbauer", 3, [](const double* a) { return wrap(sf::gegenbauer(to_uint(a[0], "n"), a[1], a[2])); }},
        {"product_jj_gauss", 5,
         [](const double* a) { return bk::series::product_jj_gauss(a[0], a[1], a[2], a[3], a[4]); }},
        {"product_jj_neumann", 4,
         [](const double* a) { return bk::series::product_jj_neumann(a[0], a[1], a[2], a[3]); }},
        {"hyp0f1_product", 3, [](const double* a) { return bk::series::hyp0f1_product(a[0], a[1], a[2]); }},
        {"weber_triple", 4,
         [](const double* a) { return bk::series::weber_triple(TripleParams{a[0], a[1], a[2], a[3], 0}); }},
        {"weber_triple_m", 5,
         [](const double* a) {
           return bk::series::weber_triple_m(TripleParams{a[0], a[1], a[2], a[3], to_uint(a[4], "m")});
         }},
        {"weber_j0jm_limit", 4,
         [](const double* a) { return bk::series::weber_j0jm_limit(a[0], a[1], a[2], to_uint(a[3], "m")); }},
    };
    return t;
  }

}

extern "C" {

const char* bk_version(void) { return bk::kVersion; }

const char* bk_last_error(void) { return g_last_error.c_str(); }

void bk_string_free(char* s) { std::free(s); }

size_t bk_identity_count(void) { return bk::catalog::list_identities().size(); }

bk_status bk_identity_id(size_t index, const char** id)
{
  return guarded([&] {
    if (!id) return fail(BK_ERR_ARGUMENT, "null output pointer");
    const auto& m = bk::catalog::list_identities();
    if (index >= m.size()) return fail(BK_ERR_ARGUMENT, "identity index out of range");
    *id = m[index].id.c_str();
    return BK_OK;
  });
}

bk_status bk_identity_exists(const char* id, int* exists)
{
  return guarded([&] {
    if (!id || !exists) return fail(BK_ERR_ARGUMENT, "null argument");
    *exists = 0;
    for (const auto& r : bk::catalog::list_identities())
      if (r.id == id) *exists = 1;
    return BK_OK;
  });
}

bk_status bk_manifest(const char* format, const char* difficulty, char** out)
{
  return guarded([&] {
    if (!format || !out) return fail(BK_ERR_ARGUMENT, "null argument");
    auto f = bk::report::parse_format(format);
    std::optional<bk::catalog::Difficulty> only;
    if (difficulty) {
      only = bk::catalog::parse_difficulty(difficulty);
      if (!only) return fail(BK_ERR_ARGUMENT, std::string("unknown difficulty '") + difficulty + "'");
    }
    *out = dup(bk::report::manifest(f, only));
    return BK_OK;
  });
}

const char* bk_eval_names(void)
{
  static const std::string names = [] {
    std::string s;
    for (const auto& e : eval_table()) s += (s.empty() ? "" : " ") + std::string(e.name);
    return s;
  }();
  return names.c_str();
}

bk_status bk_eval(const char* name, const double* args, size_t nargs, bk_eval_result* out)
{
  return guarded([&] {
    if (!name || !out || (nargs && !args)) return fail(BK_ERR_ARGUMENT, "null argument");
    for (const auto& e : eval_table()) {
      if (std::strcmp(e.name, name) != 0) continue;
      if (nargs != e.arity)
        return fail(BK_ERR_ARGUMENT, std::string(name) + " takes " + std::to_string(e.arity) + " arguments, got "
                                         + std::to_string(nargs));
      for (size_t i = 0; i < nargs; ++i)
        if (std::isnan(args[i])) return fail(BK_ERR_DOMAIN, std::string(name) + ": NaN argument");
      auto r = e.fn(args);
      out->value = r.value;
      out->abs_err = r.abs_err;
      out->converged = r.converged ? 1 : 0;
      out->terms = r.terms;
      return BK_OK;
    }
    return fail(BK_ERR_UNKNOWN, std::string("unknown function '") + name + "'");
  });
}

void bk_verify_options_init(bk_verify_options* opt)
{
  if (!opt) return;
  opt->rel_tol = 0.0;
  opt->abs_floor = 0.0;
  opt->jobs = 1;
  opt->max_terms = 0;
  opt->max_cells = 0;
}

bk_status bk_verify(const char* id, const char* grid_csv, const bk_verify_options* opt, bk_report** out)
{
  return guarded([&] {
    if (!id || !out) return fail(BK_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    bk_verify_options o;
    bk_verify_options_init(&o);
    if (opt) o = *opt;
    if (!(o.rel_tol >= 0) || !std::isfinite(o.rel_tol)) return fail(BK_ERR_ARGUMENT, "tolerance must be >= 0");
    if (!(o.abs_floor >= 0) || !std::isfinite(o.abs_floor)) return fail(BK_ERR_ARGUMENT, "abs floor must be >= 0");
    if (o.jobs < 1) return fail(BK_ERR_ARGUMENT, "jobs must be >= 1");

    bk::catalog::GridOptions g;
    if (o.rel_tol > 0) g.policy.override_rel_tol = o.rel_tol;
    if (o.abs_floor > 0) g.policy.abs_floor = o.abs_floor;
    g.jobs = o.jobs;
    g.budget.max_terms = o.max_terms;
    g.budget.max_cells = o.max_cells;

    auto rep = std::make_unique<bk_report>();
    if (std::strcmp(id, "all") == 0) {
      if (grid_csv) return fail(BK_ERR_ARGUMENT, "a grid file cannot be combined with 'all'");
      rep->rep = bk::catalog::verify_all(g);
    } else {
      const auto& rec = bk::catalog::find_identity(id);
      std::optional<std::vector<bk::catalog::ParamPoint>> grid;
      if (grid_csv) grid = bk::report::parse_grid_csv(grid_csv, rec);
      rep->rep = bk::catalog::verify_grid(id, grid, g);
    }
    rep->rep.timestamp = bk::report::utc_timestamp();
    *out = rep.release();
    return BK_OK;
  });
}

void bk_report_free(bk_report* r) { delete r; }

bk_status bk_report_counts(const bk_report* r, size_t* pass, size_t* fail_count, size_t* inconclusive)
{
  return guarded([&] {
    if (!r) return fail(BK_ERR_ARGUMENT, "null report");
    if (pass) *pass = r->rep.summary.pass;
    if (fail_count) *fail_count = r->rep.summary.fail;
    if (inconclusive) *inconclusive = r->rep.summary.inconclusive;
    return BK_OK;
  });
}

bk_status bk_report_serialize(const bk_report* r, const char* format, char** out)
{
  return guarded([&] {
    if (!r || !format || !out) return fail(BK_ERR_ARGUMENT, "null argument");
    *out = dup(bk::report::serialize(r->rep, bk::report::parse_format(format)));
    return BK_OK;
  });
}

bk_status bk_report_parse_json(const char* json, bk_report** out)
{
  return guarded([&] {
    if (!json || !out) return fail(BK_ERR_ARGUMENT, "null argument");
    auto rep = std::make_unique<bk_report>();
    rep->rep = bk::report::from_json(json);
    *out = rep.release();
    return BK_OK;
  });
}

}
