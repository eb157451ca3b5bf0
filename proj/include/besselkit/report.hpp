#ifndef BESSELKIT_REPORT_HPP
#define BESSELKIT_REPORT_HPP

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


// Report and manifest serialization, plus CSV grid ingestion.

#include "besselkit/catalog.hpp"
#include <string>
#include <vector>

namespace besselkit::report {

  enum class Format { text, json, csv };

  // Malformed grid file. what() carries "line N: ..." diagnostics.
  class GridFormatError : public Error {
  public:
    using Error::Error;
  };

  // "text" | "json" | "csv"; throws Error otherwise.
  Format parse_format(const std::string& s);

  // UTC ISO-8601 timestamp, seconds resolution.
  std::string utc_timestamp();

  // Numbers are written in shortest round-trip form; non-finite values
  // become null in JSON and empty cells in CSV.
  std::string to_json(const catalog::Report& r);
  std::string to_text(const catalog::Report& r);
  std::string to_csv(const catalog::Report& r);
  std::string serialize(const catalog::Report& r, Format f);

  // Inverse of to_json. Throws Error on schema violations.
  catalog::Report from_json(const std::string& text);

  // Manifest listing, optionally restricted to one difficulty class.
  std::string manifest(Format f, const std::optional<catalog::Difficulty>& only = std::nullopt);

  // Header row of parameter names (any order, exactly the identity's
  // symbols), then one point per row. '#' comments and blank lines are
  // skipped. Malformed input throws GridFormatError; rows outside the
  // admissible region throw ConstraintError. Both name the line.
  std::vector<catalog::ParamPoint> parse_grid_csv(const std::string& text, const catalog::IdentityRecord& rec);

  // Shortest decimal that parses back to the same double.
  std::string shortest(double v);

}

#endif
