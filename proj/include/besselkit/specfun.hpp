#ifndef BESSELKIT_SPECFUN_HPP
#define BESSELKIT_SPECFUN_HPP

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

// Scalar special-function kernels of real order and real argument. Every
// function here is pure and reentrant.

#include "besselkit/common.hpp"
#include "besselkit/summation.hpp"

namespace besselkit::specfun {

  // Supported order range for the Bessel and Kelvin kernels. Orders outside
  // it raise DomainError.
  inline constexpr double kMinOrder = -50.0;
  inline constexpr double kMaxOrder = 1000.0;

  // sin(pi x), cos(pi x) with exact zeros at the integers/half-integers.
  double sin_pi(double x);
  double cos_pi(double x);

  // Gamma function. Throws PoleError at 0, -1, -2, ...
  double gamma(double x);

  // log|Gamma(x)|. Throws PoleError at the poles.
  double log_gamma(double x);

  // 1/Gamma(x), which is entire: returns 0 at the poles of Gamma.
  double rgamma(double x);

  // Rising factorial (a)_n.
  double pochhammer(double a, unsigned n);

  // Bessel functions of the first and second kind. x=0 is accepted by
  // bessel_j for nu >= 0 and by nothing else.
  EvalResult bessel_j(double nu, double x);
  EvalResult bessel_y(double nu, double x);

  // Modified Bessel functions. The _scaled variants return exp(-x) I_nu(x)
  // and exp(x) K_nu(x) and never overflow for moderate orders.
  EvalResult bessel_i(double nu, double x);
  EvalResult bessel_i_scaled(double nu, double x);
  EvalResult bessel_k(double nu, double x);
  EvalResult bessel_k_scaled(double nu, double x);

  // Kelvin functions: ber_nu(x) + i bei_nu(x) = J_nu(x exp(3 pi i/4)),
  // summed as a real series whose k-th term carries the phase
  // (3 nu/4 + k/2) pi. Supported for 0 <= x <= 100.
  EvalResult kelvin_ber(double nu, double x);
  EvalResult kelvin_bei(double nu, double x);

  // Generalized hypergeometric series. Denominator parameters at
  // nonpositive integers raise PoleError.
  EvalResult hyp0f1(double b, double z, const SeriesOptions& opt = {});
  EvalResult hyp0f3(double b1, double b2, double b3, double z, const SeriesOptions& opt = {});

  // Gauss hypergeometric function for real z < 1 (and z = 1 when
  // c-a-b > 0). Terminating series are summed exactly for any z. z < -1/2 goes
  // through the Pfaff transformation. Convergence is slow for z close to 1,
  // and the error estimate says so.
  EvalResult hyp2f1(double a, double b, double c, double z, const SeriesOptions& opt = {});

  // Generalized Laguerre polynomial L_n^(m)(x), three-term recurrence.
  double laguerre(unsigned n, double m, double x);

  // Gegenbauer polynomial C_n^(lambda)(x), lambda != 0.
  double gegenbauer(unsigned n, double lambda, double x);

  namespace detail {
    struct JY {
      double j, y, jp, yp;
    };
    // J, Y and derivatives for nu >= 0, x > 0.
    JY bessel_jy(double nu, double x);

    struct IKScaled {
      double i, k, ip, kp;  // i, ip scaled by exp(-x); k, kp by exp(x)
    };
    // Scaled I, K and derivatives for nu >= 0, x > 0.
    IKScaled bessel_ik_scaled(double nu, double x);
  }

}

#endif
