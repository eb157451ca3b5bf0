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

#include "besselkit/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <set>
#include <sstream>

namespace besselkit::report {

  using catalog::ParamPoint;
  using catalog::Report;
  using catalog::Status;
  using catalog::VerificationResult;
  using ojson = nlohmann::ordered_json;

  namespace {

    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

    ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

    double get_num(const nlohmann::json& j, const char* key)
    {
      auto it = j.find(key);
      if (it == j.end()) throw Error(std::string("report: missing field '") + key + "'");
      if (it->is_null()) return kNaN;
      if (!it->is_number()) throw Error(std::string("report: field '") + key + "' is not a number");
      return it->get<double>();
    }

    std::string csv_escape(const std::string& s)
    {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string o = "\"";
      for (char c : s) {
        if (c == '"') o += '"';
        o += c;
      }
      return o + '"';
    }

    std::string params_compact(const ParamPoint& p)
    {
      std::string o;
      for (const auto& [k, v] : p) {
        if (!o.empty()) o += ';';
        o += k + '=' + shortest(v);
      }
      return o;
    }

    std::string sci(double v, int prec = 3)
    {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*e", prec, v);
      return buf;
    }

    std::string trim(const std::string& s)
    {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return "";
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(const std::string& line)
    {
      std::vector<std::string> out;
      std::string cur;
      for (char c : line) {
        if (c == ',') {
          out.push_back(trim(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      out.push_back(trim(cur));
      return out;
    }

  }

  std::string shortest(double v)
  {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }

  Format parse_format(const std::string& s)
  {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw Error("unknown format '" + s + "' (expected text, json or csv)");
  }

  std::string utc_timestamp()
  {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::string to_json(const Report& r)
  {
    ojson j;
    j["artifact_version"] = r.artifact_version;
    j["timestamp"] = r.timestamp;
    ojson pol;
    pol["easy"] = r.policy.easy;
    pol["oscillatory"] = r.policy.oscillatory;
    pol["hard"] = r.policy.hard;
    pol["abs_floor"] = r.policy.abs_floor;
    pol["override_rel_tol"] = r.policy.override_rel_tol ? ojson(*r.policy.override_rel_tol) : ojson(nullptr);
    j["tolerance_policy"] = pol;
    ojson entries = ojson::array();
    for (const auto& e : r.entries) {
      ojson o;
      o["id"] = e.id;
      ojson params = ojson::object();
      for (const auto& [k, v] : e.point) params[k] = num(v);
      o["params"] = params;
      o["lhs"] = num(e.lhs.value);
      o["rhs"] = num(e.rhs.value);
      o["lhs_err"] = num(e.lhs.abs_err);
      o["rhs_err"] = num(e.rhs.abs_err);
      o["abs_diff"] = num(e.abs_diff);
      o["rel_diff"] = num(e.rel_diff);
      o["status"] = catalog::to_string(e.status);
      if (!e.note.empty()) o["note"] = e.note;
      if (e.discrepancy_ratio) o["discrepancy_ratio"] = num(*e.discrepancy_ratio);
      entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
    ojson s;
    s["pass"] = r.summary.pass;
    s["fail"] = r.summary.fail;
    s["inconclusive"] = r.summary.inconclusive;
    s["wall_time"] = r.summary.wall_time;
    j["summary"] = s;
    return j.dump(2) + "\n";
  }

  Report from_json(const std::string& text)
  {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("report: ") + e.what());
    }
    if (!j.is_object()) throw Error("report: top level is not an object");
    Report r;
    try {
      r.artifact_version = j.at("artifact_version").get<std::string>();
      r.timestamp = j.at("timestamp").get<std::string>();
      const auto& pol = j.at("tolerance_policy");
      r.policy.easy = get_num(pol, "easy");
      r.policy.oscillatory = get_num(pol, "oscillatory");
      r.policy.hard = get_num(pol, "hard");
      r.policy.abs_floor = get_num(pol, "abs_floor");
      if (pol.contains("override_rel_tol") && !pol["override_rel_tol"].is_null())
        r.policy.override_rel_tol = pol["override_rel_tol"].get<double>();
      for (const auto& o : j.at("entries")) {
        VerificationResult e;
        e.id = o.at("id").get<std::string>();
        for (const auto& [k, v] : o.at("params").items()) e.point[k] = v.is_null() ? kNaN : v.get<double>();
        e.lhs.value = get_num(o, "lhs");
        e.rhs.value = get_num(o, "rhs");
        e.lhs.abs_err = get_num(o, "lhs_err");
        e.rhs.abs_err = get_num(o, "rhs_err");
        e.abs_diff = get_num(o, "abs_diff");
        e.rel_diff = get_num(o, "rel_diff");
        auto st = catalog::parse_status(o.at("status").get<std::string>());
        if (!st) throw Error("report: bad status in entry " + e.id);
        e.status = *st;
        e.lhs.converged = e.rhs.converged = e.status != Status::inconclusive;
        if (o.contains("note")) e.note = o["note"].get<std::string>();
        if (o.contains("discrepancy_ratio")) e.discrepancy_ratio = get_num(o, "discrepancy_ratio");
        r.entries.push_back(std::move(e));
      }
      const auto& s = j.at("summary");
      r.summary.pass = s.at("pass").get<std::size_t>();
      r.summary.fail = s.at("fail").get<std::size_t>();
      r.summary.inconclusive = s.at("inconclusive").get<std::size_t>();
      r.summary.wall_time = get_num(s, "wall_time");
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("report: ") + e.what());
    }
    return r;
  }

  std::string to_text(const Report& r)
  {
    std::ostringstream os;
    os << "besselkit " << r.artifact_version;
    if (!r.timestamp.empty()) os << "  " << r.timestamp;
    os << '\n';
    for (const auto& e : r.entries) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "  lhs=% .15e  rhs=% .15e  rel_diff=%s  ", e.lhs.value, e.rhs.value,
                    sci(e.rel_diff, 2).c_str());
      os << e.id << "  " << catalog::format_point(e.point) << '\n' << buf << catalog::to_string(e.status) << '\n';
      if (!e.note.empty()) os << "  note: " << e.note << '\n';
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.summary.wall_time);
    os << "summary: " << r.summary.pass << " pass, " << r.summary.fail << " fail, " << r.summary.inconclusive
       << " inconclusive (" << buf << " s)\n";
    return os.str();
  }

  std::string to_csv(const Report& r)
  {
    std::ostringstream os;
    os << "id,params,lhs,rhs,lhs_err,rhs_err,abs_diff,rel_diff,status,note\n";
    auto cell = [](double v) { return std::isfinite(v) ? shortest(v) : std::string(); };
    for (const auto& e : r.entries) {
      os << e.id << ',' << csv_escape(params_compact(e.point)) << ',' << cell(e.lhs.value) << ','
         << cell(e.rhs.value) << ',' << cell(e.lhs.abs_err) << ',' << cell(e.rhs.abs_err) << ','
         << cell(e.abs_diff) << ',' << cell(e.rel_diff) << ',' << catalog::to_string(e.status) << ','
         << csv_escape(e.note) << '\n';
    }
    return os.str();
  }

  std::string serialize(const Report& r, Format f)
  {
    switch (f) {
    case Format::json: return to_json(r);
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
    }
    return to_text(r);
  }

  std::string manifest(Format f, const std::optional<catalog::Difficulty>& only)
  {
    std::vector<const catalog::IdentityRecord*> recs;
    for (const auto& r : catalog::list_identities())
      if (!only || r.difficulty == *only) recs.push_back(&r);

    auto joined = [](const std::vector<std::string>& v, const char* sep) {
      std::string o;
      for (const auto& s : v) o += (o.empty() ? "" : sep) + s;
      return o;
    };
    auto ctexts = [](const catalog::IdentityRecord& r) {
      std::vector<std::string> v;
      for (const auto& c : r.space.constraints) v.push_back(c.text);
      return v;
    };

    if (f == Format::json) {
      ojson arr = ojson::array();
      for (const auto* r : recs) {
        ojson o;
        o["id"] = r->id;
        o["difficulty"] = catalog::to_string(r->difficulty);
        o["anchor"] = r->anchor;
        o["statement"] = r->statement;
        o["params"] = r->space.symbols;
        o["constraints"] = ctexts(*r);
        o["lhs_route"] = r->lhs_route;
        o["rhs_route"] = r->rhs_route;
        o["default_grid_size"] = r->space.default_grid.size();
        arr.push_back(std::move(o));
      }
      return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    if (f == Format::csv) {
      os << "id,difficulty,anchor,params,constraints,lhs_route,rhs_route,default_grid_size\n";
      for (const auto* r : recs)
        os << r->id << ',' << catalog::to_string(r->difficulty) << ',' << csv_escape(r->anchor) << ','
           << csv_escape(joined(r->space.symbols, ";")) << ',' << csv_escape(joined(ctexts(*r), "; ")) << ','
           << r->lhs_route << ',' << r->rhs_route << ',' << r->space.default_grid.size() << '\n';
      return os.str();
    }
    for (const auto* r : recs) {
      char head[64];
      std::snprintf(head, sizeof head, "%-8s %-12s", r->id.c_str(), catalog::to_string(r->difficulty));
      os << head << r->anchor << '\n';
      os << "         params: " << joined(r->space.symbols, ", ") << "   constraints: " << joined(ctexts(*r), "; ")
         << '\n';
    }
    return os.str();
  }

  std::vector<ParamPoint> parse_grid_csv(const std::string& text, const catalog::IdentityRecord& rec)
  {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> header;
    std::vector<ParamPoint> out;
    int lineno = 0;
    auto where = [&](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
    while (std::getline(is, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      auto cells = split(t);
      if (header.empty()) {
        std::set<std::string> seen;
        for (const auto& c : cells) {
          if (std::find(rec.space.symbols.begin(), rec.space.symbols.end(), c) == rec.space.symbols.end())
            throw GridFormatError(where("unknown parameter '" + c + "' for " + rec.id));
          if (!seen.insert(c).second) throw GridFormatError(where("duplicate column '" + c + "'"));
        }
        for (const auto& s : rec.space.symbols)
          if (!seen.count(s)) throw GridFormatError(where("missing column '" + s + "' for " + rec.id));
        header = cells;
        continue;
      }
      if (cells.size() != header.size())
        throw GridFormatError(where("expected " + std::to_string(header.size()) + " fields, got "
                                    + std::to_string(cells.size())));
      ParamPoint p;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string& c = cells[i];
        double v = 0;
        auto res = std::from_chars(c.data(), c.data() + c.size(), v);
        if (c.empty() || res.ec != std::errc() || res.ptr != c.data() + c.size() || !std::isfinite(v))
          throw GridFormatError(where("bad number '" + c + "' in column '" + header[i] + "'"));
        p[header[i]] = v;
      }
      try {
        catalog::check_point(rec, p);
      } catch (const catalog::ConstraintError& e) {
        throw catalog::ConstraintError(where(e.what()));
      }
      out.push_back(std::move(p));
    }
    if (header.empty()) throw GridFormatError("line " + std::to_string(lineno) + ": no header row");
    if (out.empty()) throw GridFormatError("line " + std::to_string(lineno) + ": grid has no points");
    return out;
  }

}
