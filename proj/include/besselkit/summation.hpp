#ifndef BESSELKIT_SUMMATION_HPP
#define BESSELKIT_SUMMATION_HPP

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

#include "besselkit/common.hpp"
#include <cmath>
#include <cstddef>

namespace besselkit {

  struct SeriesOptions {
    // Terms below rel_tol*|S| count towards the stopping streak.
    double rel_tol = 0x1p-52;
    std::size_t max_terms = 10000;
  };

  struct SeriesState {
    double partial_sum = 0.0;
    double last_term_abs = 0.0;
    std::uint64_t terms = 0;
    double max_partial_abs = 0.0;
  };

  // Neumaier-compensated running sum with the three-small-terms stopping
  // rule. max_partial_abs records the largest |S| seen, which bounds the
  // rounding error left behind by cancellation.
  class SeriesSummer {
  public:
    explicit SeriesSummer(SeriesOptions opt = {}) : m_opt(opt) {}

    void add(double term)
    {
      const double t = m_sum + term;
      if (std::fabs(m_sum) >= std::fabs(term))
        m_comp += (m_sum - t) + term;
      else
        m_comp += (term - t) + m_sum;
      m_sum = t;
      m_state.partial_sum = m_sum + m_comp;
      m_state.last_term_abs = std::fabs(term);
      ++m_state.terms;
      m_state.max_partial_abs = std::fmax(m_state.max_partial_abs, std::fabs(m_state.partial_sum));
      m_state.max_partial_abs = std::fmax(m_state.max_partial_abs, std::fabs(term));
      if (std::fabs(term) <= m_opt.rel_tol * std::fabs(m_state.partial_sum)
          || (term == 0.0 && m_state.partial_sum == 0.0))
        ++m_small;
      else
        m_small = 0;
    }

    bool done() const { return m_small >= 3; }
    bool exhausted() const { return m_state.terms >= m_opt.max_terms; }
    const SeriesState& state() const { return m_state; }
    double sum() const { return m_state.partial_sum; }

    // Last neglected-term proxy plus the cancellation floor.
    double error_estimate() const
    {
      return m_state.last_term_abs + 4.0 * kEps * m_state.max_partial_abs;
    }

    EvalResult result() const
    {
      EvalResult r;
      r.value = m_state.partial_sum;
      r.abs_err = error_estimate();
      r.converged = done() && std::isfinite(r.value) && std::isfinite(r.abs_err);
      r.terms = m_state.terms;
      return r;
    }

  private:
    SeriesOptions m_opt;
    SeriesState m_state;
    double m_sum = 0.0;
    double m_comp = 0.0;
    int m_small = 0;
  };

}

#endif
