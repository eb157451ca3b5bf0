#ifndef BESSELKIT_QUAD_HPP
#define BESSELKIT_QUAD_HPP

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


// One-dimensional quadrature: adaptive Gauss-Kronrod on finite intervals,
// truncated semi-infinite integrals with exponential decay, and
// cell-by-cell integration with epsilon extrapolation for oscillatory tails.

#include "besselkit/common.hpp"
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace besselkit::quad {

  // A known endpoint or interior point of nonsmooth behaviour. The integrand
  // passed to eval must NOT include the factor |x - point|^exponent; the
  // integrator applies it exactly in transformed coordinates. exponent = 0
  // marks a plain breakpoint. Requires exponent > -1.
  struct Singularity {
    double point = 0.0;
    double exponent = 0.0;
  };

  enum class DecayKind { none, exponential, algebraic, oscillatory };

  struct Decay {
    DecayKind kind = DecayKind::none;
    // exponential: rate lambda in exp(-lambda x); algebraic: power p in x^-p;
    // oscillatory: asymptotic zero spacing.
    double rate = 0.0;
    // Optional bound on |f(x)| exp(lambda x) for large x. Sampled when empty.
    std::function<double(double)> envelope;
  };

  struct Integrand {
    std::function<double(double)> eval;
    std::vector<Singularity> hints;
    Decay decay;
    double max_panel = 0.0;  // if > 0, initial panels are no wider than this
  };

  struct OscillationDescriptor {
    double asymptotic_period = 0.0;
    double first_zero_estimate = 0.0;
  };

  struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::uint64_t max_evals = 1000000;
    std::size_t max_cells = 200;
  };

  // Adaptive GK21 over [a, b] with a global error-driven bisection queue.
  // converged=false when the evaluation budget runs out first.
  EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opt = {});

  // Integral over [a, inf) for decay.kind == exponential. Throws DomainError
  // for any other decay class.
  EvalResult integrate_semiinf_decaying(const Integrand& f, double a, const QuadOptions& opt = {});

  // Integral over [a, inf) of an eventually oscillating integrand, summed in
  // cells of width osc.asymptotic_period starting at osc.first_zero_estimate
  // and extrapolated with the epsilon algorithm.
  EvalResult integrate_semiinf_oscillatory(const Integrand& f, double a,
                                           const OscillationDescriptor& osc,
                                           const QuadOptions& opt = {});

  // Wynn epsilon algorithm on a sequence of partial sums (at least 3).
  EvalResult epsilon_extrapolate(std::span<const double> partial_sums);

}

#endif
