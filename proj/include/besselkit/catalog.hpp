#ifndef BESSELKIT_CATALOG_HPP
#define BESSELKIT_CATALOG_HPP

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


// The identity manifest: every entry evaluates its two sides by independent
// numerical routes (quadrature against closed form or series) and grades
// their agreement.

#include "besselkit/common.hpp"
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace besselkit::catalog {

  using ParamPoint = std::map<std::string, double>;

  enum class Difficulty { easy, oscillatory, hard };
  enum class Status { pass, fail, inconclusive };

  const char* to_string(Difficulty d);
  const char* to_string(Status s);
  std::optional<Difficulty> parse_difficulty(const std::string& s);
  std::optional<Status> parse_status(const std::string& s);

  class UnknownIdError : public Error {
  public:
    using Error::Error;
  };

  // A ParamPoint outside an identity's admissible region. what() names the
  // violated predicate.
  class ConstraintError : public DomainError {
  public:
    using DomainError::DomainError;
  };

  struct Constraint {
    std::string text;
    std::function<bool(const ParamPoint&)> holds;
  };

  struct ParamSpace {
    std::vector<std::string> symbols;
    std::vector<Constraint> constraints;
    std::vector<ParamPoint> default_grid;
    std::vector<ParamPoint> hard_points;  // also members of default_grid
  };

  // Evaluation budgets; 0 keeps the module defaults. Lowering them forces
  // non-convergence on purpose.
  struct Budget {
    std::size_t max_terms = 0;
    std::size_t max_cells = 0;
  };

  struct SideContext {
    double quad_rel_tol = 1e-11;
    Budget budget;
  };

  using SideEvaluator = std::function<EvalResult(const ParamPoint&, const SideContext&)>;

  struct IdentityRecord {
    std::string id;
    std::string statement;
    std::string anchor;
    std::string lhs_route;  // e.g. "quadrature:semi-infinite-decaying", "closed-form", "series"
    std::string rhs_route;
    Difficulty difficulty = Difficulty::easy;
    // Disagreement is recorded as inconclusive with the measured lhs/rhs ratio.
    bool discrepancy_logged = false;
    ParamSpace space;
    SideEvaluator lhs;
    SideEvaluator rhs;
  };

  struct TolerancePolicy {
    double easy = 1e-8;
    double oscillatory = 1e-5;
    double hard = 1e-4;
    double abs_floor = 1e-14;
    std::optional<double> override_rel_tol;

    double rel_tol_for(Difficulty d) const;
  };

  struct VerificationResult {
    std::string id;
    ParamPoint point;
    EvalResult lhs, rhs;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    Status status = Status::inconclusive;
    std::string note;
    std::optional<double> discrepancy_ratio;
  };

  struct Summary {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    double wall_time = 0.0;
  };

  struct Report {
    std::string artifact_version = kVersion;
    std::string timestamp;
    TolerancePolicy policy;
    std::vector<VerificationResult> entries;
    Summary summary;

    void recount();
    bool any_fail() const { return summary.fail > 0; }
  };

  // Full manifest in stable order.
  const std::vector<IdentityRecord>& list_identities();

  // Throws UnknownIdError.
  const IdentityRecord& find_identity(const std::string& id);

  // Throws ConstraintError listing the first violated predicate, or for
  // missing/unknown parameter names.
  void check_point(const IdentityRecord& rec, const ParamPoint& point);

  // Side tolerances derive from the difficulty class only.
  std::pair<EvalResult, EvalResult> evaluate_sides(const std::string& id, const ParamPoint& point,
                                                   const Budget& budget = {});

  VerificationResult verify(const std::string& id, const ParamPoint& point, double rel_tol,
                            double abs_floor, const Budget& budget = {});

  // Status rule shared by verify and the report reader.
  Status grade(const EvalResult& lhs, const EvalResult& rhs, double rel_tol, double abs_floor,
               double& abs_diff, double& rel_diff);

  struct GridOptions {
    TolerancePolicy policy;
    Budget budget;
    unsigned jobs = 1;
  };

  // One entry per grid point, sorted by point. A point that throws becomes
  // an inconclusive entry. An explicitly empty override throws DomainError.
  Report verify_grid(const std::string& id, const std::optional<std::vector<ParamPoint>>& grid,
                     const GridOptions& opt);

  // verify_grid over the whole manifest, entries in manifest order.
  Report verify_all(const GridOptions& opt);

  // Strict total order used to sort entries.
  bool point_less(const ParamPoint& a, const ParamPoint& b);

  std::string format_point(const ParamPoint& p);

}

#endif
