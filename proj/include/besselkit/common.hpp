#ifndef BESSELKIT_COMMON_HPP
#define BESSELKIT_COMMON_HPP

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

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace besselkit {

  inline constexpr const char* kVersion = "1.0.0";

  inline constexpr double kEps = std::numeric_limits<double>::epsilon();
  inline constexpr double kPi = 3.141592653589793238462643383279502884;

  // A computed value with an a-posteriori absolute error estimate. A result
  // with converged=false must be flagged by anything that consumes it.
  struct EvalResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = true;
    std::uint64_t terms = 0;  // series terms or integrand evaluations
  };

  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  // Argument outside the supported domain of a function.
  class DomainError : public Error {
  public:
    using Error::Error;
  };

  // Argument at a pole (gamma at nonpositive integers, hypergeometric
  // denominator parameters at nonpositive integers).
  class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
  };

  class OverflowError : public Error {
  public:
    using Error::Error;
  };

}

#endif
