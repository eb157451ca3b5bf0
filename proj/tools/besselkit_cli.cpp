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

// besselkit command-line front end. Talks to the library only through the
// C interface.

#include "besselkit/besselkit.h"

#include "CLI11.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

  enum Exit { kPass = 0, kFail = 1, kUnknown = 2, kBadFlags = 3, kDomain = 4 };

  int exit_for(bk_status s)
  {
    switch (s) {
    case BK_OK: return kPass;
    case BK_ERR_UNKNOWN: return kUnknown;
    case BK_ERR_DOMAIN: return kDomain;
    case BK_ERR_OVERFLOW: return kDomain;
    case BK_ERR_ARGUMENT: return kBadFlags;
    default: return kFail;
    }
  }

  int report_error(bk_status s)
  {
    std::cerr << "besselkit: " << bk_last_error() << '\n';
    return exit_for(s);
  }

  // Owns a string returned by the C API.
  struct CStr {
    char* p = nullptr;
    ~CStr() { bk_string_free(p); }
  };

  bool read_file(const std::string& path, std::string& out)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
  }

  int emit(const std::string& text, const std::string& out_path)
  {
    if (out_path.empty()) {
      std::cout << text;
      std::cout.flush();
      return kPass;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "besselkit: cannot write '" << out_path << "'\n";
      return kBadFlags;
    }
    return kPass;
  }

  bool parse_double(const std::string& s, double& v)
  {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size();
  }

  std::string json_number(double v)
  {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  struct Common {
    std::string format = "text";
    bool json = false;
    std::string out;

    // --json is shorthand for --format json.
    bool resolve(CLI::Option* fmt_opt)
    {
      if (json) {
        if (fmt_opt->count() && format != "json") {
          std::cerr << "besselkit: --json conflicts with --format " << format << '\n';
          return false;
        }
        format = "json";
      }
      return true;
    }
  };

}

int main(int argc, char** argv)
{
  CLI::App app{"besselkit: Bessel-function kernels and numerical verification of integral identities"};
  app.set_version_flag("--version", std::string("besselkit ") + bk_version());
  app.require_subcommand(1);

  // list
  Common list_c;
  std::string list_difficulty;
  auto* list = app.add_subcommand("list", "Print the identity manifest");
  auto* list_fmt = list->add_option("--format", list_c.format, "text, json or csv")
                       ->check(CLI::IsMember({"text", "json", "csv"}));
  list->add_flag("--json", list_c.json, "Same as --format json");
  list->add_option("--difficulty", list_difficulty, "Only this class")
      ->check(CLI::IsMember({"easy", "oscillatory", "hard"}));
  list->add_option("--out", list_c.out, "Write to a file instead of stdout");

  // verify
  Common ver_c;
  std::string ver_id, grid_path;
  double tol = 0.0, abs_floor = 0.0;
  unsigned jobs = 1;
  bool strict = false;
  std::size_t max_terms = 0, max_cells = 0;
  auto* ver = app.add_subcommand("verify", "Verify an identity (or 'all') over its default grid or a CSV grid");
  ver->add_option("id", ver_id, "Identity id, e.g. I-2.32, or 'all'")->required();
  ver->add_option("--tol", tol, "Relative tolerance for every entry (default: per difficulty class)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--abs-floor", abs_floor, "Absolute floor for near-zero values")->check(CLI::PositiveNumber);
  ver->add_option("--grid", grid_path, "CSV grid file: header of parameter names, one point per row");
  auto* ver_fmt = ver->add_option("--format", ver_c.format, "text, json or csv")
                      ->check(CLI::IsMember({"text", "json", "csv"}));
  ver->add_flag("--json", ver_c.json, "Same as --format json");
  ver->add_option("--out", ver_c.out, "Write the report to a file instead of stdout");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  ver->add_flag("--strict", strict, "Treat inconclusive entries as failures");
  ver->add_option("--max-terms", max_terms, "Series term budget (fault injection)")->check(CLI::PositiveNumber);
  ver->add_option("--max-cells", max_cells, "Oscillatory cell budget (fault injection)")->check(CLI::PositiveNumber);

  // eval
  Common ev_c;
  std::string ev_name;
  std::vector<std::string> ev_args;
  auto* ev = app.add_subcommand("eval", "Evaluate a kernel: eval <name> <args...>");
  ev->add_option("name", ev_name, std::string("One of: ") + bk_eval_names())->required();
  ev->add_option("args", ev_args, "Numeric arguments");
  auto* ev_fmt = ev->add_option("--format", ev_c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ev->add_flag("--json", ev_c.json, "Same as --format json");
  ev->add_option("--out", ev_c.out, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  if (list->parsed()) {
    if (!list_c.resolve(list_fmt)) return kBadFlags;
    CStr text;
    bk_status s = bk_manifest(list_c.format.c_str(), list_difficulty.empty() ? nullptr : list_difficulty.c_str(),
                              &text.p);
    if (s != BK_OK) return report_error(s);
    return emit(text.p, list_c.out);
  }

  if (ev->parsed()) {
    if (!ev_c.resolve(ev_fmt)) return kBadFlags;
    std::vector<double> args;
    for (const auto& a : ev_args) {
      double v;
      if (!parse_double(a, v)) {
        std::cerr << "besselkit: not a number: '" << a << "'\n";
        return kBadFlags;
      }
      args.push_back(v);
    }
    bk_eval_result r{};
    bk_status s = bk_eval(ev_name.c_str(), args.data(), args.size(), &r);
    if (s != BK_OK) return report_error(s);
    std::ostringstream os;
    if (ev_c.format == "json") {
      os << "{\"function\": \"" << ev_name << "\", \"args\": [";
      for (std::size_t i = 0; i < args.size(); ++i) os << (i ? ", " : "") << json_number(args[i]);
      os << "], \"value\": " << json_number(r.value) << ", \"abs_err\": " << json_number(r.abs_err)
         << ", \"converged\": " << (r.converged ? "true" : "false") << ", \"terms\": " << r.terms << "}\n";
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.15g", r.value);
      os << buf << '\n';
      std::snprintf(buf, sizeof buf, "abs_err %.3g  converged %s  terms %llu", r.abs_err, r.converged ? "yes" : "no",
                    r.terms);
      os << buf << '\n';
    }
    if (!r.converged) std::cerr << "besselkit: warning: result did not converge\n";
    return emit(os.str(), ev_c.out);
  }

  // verify
  if (!ver_c.resolve(ver_fmt)) return kBadFlags;
  std::string grid_text;
  if (!grid_path.empty()) {
    if (ver_id == "all") {
      std::cerr << "besselkit: --grid cannot be combined with 'all'\n";
      return kBadFlags;
    }
    if (!read_file(grid_path, grid_text)) {
      std::cerr << "besselkit: cannot read grid file '" << grid_path << "'\n";
      return kBadFlags;
    }
  }
  if (ver_id != "all") {
    int exists = 0;
    bk_identity_exists(ver_id.c_str(), &exists);
    if (!exists) {
      std::cerr << "besselkit: unknown identity id '" << ver_id << "' (see 'besselkit list')\n";
      return kUnknown;
    }
  }

  bk_verify_options opt;
  bk_verify_options_init(&opt);
  opt.rel_tol = tol;
  opt.abs_floor = abs_floor;
  opt.jobs = jobs;
  opt.max_terms = max_terms;
  opt.max_cells = max_cells;

  bk_report* rep = nullptr;
  bk_status s = bk_verify(ver_id.c_str(), grid_path.empty() ? nullptr : grid_text.c_str(), &opt, &rep);
  if (s != BK_OK) return report_error(s);

  CStr text;
  s = bk_report_serialize(rep, ver_c.format.c_str(), &text.p);
  std::size_t n_pass = 0, n_fail = 0, n_inc = 0;
  bk_report_counts(rep, &n_pass, &n_fail, &n_inc);
  bk_report_free(rep);
  if (s != BK_OK) return report_error(s);
  if (int rc = emit(text.p, ver_c.out); rc != kPass) return rc;

  if (n_inc > 0)
    std::cerr << "besselkit: warning: " << n_inc << " inconclusive entr" << (n_inc == 1 ? "y" : "ies") << '\n';
  if (n_fail > 0) return kFail;
  if (strict && n_inc > 0) return kFail;
  return kPass;
}
