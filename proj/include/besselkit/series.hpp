#ifndef BESSELKIT_SERIES_HPP
#define BESSELKIT_SERIES_HPP

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


// Series-side evaluators for Bessel products and the triple-product
// Laplace integrals, plus a Richardson-extrapolated m-th derivative.

#include "besselkit/common.hpp"
#include <cstddef>
#include <functional>

namespace besselkit::series {

  // Laplace variable alpha and the three Bessel scalings of
  // int_0^inf exp(-alpha x) J_0(b1 sqrt x) J_m(b2 sqrt x) J_m(b3 sqrt x) dx.
  struct TripleParams {
    double alpha = 1.0;
    double beta1 = 0.0, beta2 = 0.0, beta3 = 0.0;
    unsigned m = 0;
  };

  // J_mu(a x) J_nu(b x) from its double series with a terminating 2F1
  // inner sum. Requires 0 < b <= a, mu, nu > -1, x >= 0.
  EvalResult product_jj_gauss(double mu, double nu, double a, double b, double x,
                              std::size_t max_terms = 2000);

  // J_nu(a x) J_nu(b x) as a Neumann series in J_{nu+2r}(x sqrt(a^2+b^2)).
  EvalResult product_jj_neumann(double nu, double a, double b, double x,
                                std::size_t max_terms = 500);

  // sum_r (xy)^r / (r! (c)_r (c)_2r) 0F1(c+2r; x+y), equal to 0F1(c;x) 0F1(c;y).
  EvalResult hyp0f1_product(double c, double x, double y, std::size_t max_terms = 500);

  // The m = 0 triple integral as a series of products of three I_n.
  // Summed with exp(-z) scaled I_n and one exponential at the end.
  EvalResult weber_triple(const TripleParams& p, std::size_t max_terms = 300);

  // The general-m triple integral through an m-th derivative of a series
  // in I_{m+n}. m = 0 delegates to weber_triple. m is limited to 0..4.
  EvalResult weber_triple_m(const TripleParams& p, std::size_t max_terms = 300);

  // int_0^inf exp(-alpha x) J_0(b1 sqrt x) J_m(b2 sqrt x) x^(m/2) dx as a
  // finite sum of m+1 modified Bessel functions.
  EvalResult weber_j0jm_limit(double alpha, double beta1, double beta2, unsigned m);

  // m-th derivative (m = 1..4) by finite differences at h, h/2, h/4 and
  // Richardson extrapolation. h <= 0 picks max(|x0|,1) eps^(1/(m+5)). If
  // x0 < m h the stencil is one-sided (forward). converged=false flags
  // disagreeing extrapolants.
  EvalResult derivative_m(const std::function<double(double)>& f, double x0, int m, double h = 0.0);

}

#endif
