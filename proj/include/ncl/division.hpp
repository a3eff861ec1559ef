/*
   Copyright 2026 The ncl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "ncl/ncpoly.hpp"

namespace ncl {

// Solves s * q = p exactly in the group ring and returns s.  The group is
// bi-orderable, so the ring has no zero divisors and the solution is unique
// when it exists.
//
// Candidate support for s: start from every w * m^-1 with w in supp(p) and
// m in supp(q), then grow support_rounds times by s * m_i * m_j^-1.  One
// round is needed per term of s that only becomes visible after higher
// terms cancel, so the default handles small quotients; raise the rounds
// for stubborn inputs.  The resulting linear system over the candidate
// coefficients is solved over the rationals.
//
// Throws NoSolutionInSupport if the system is inconsistent within the grown
// support (or the support cap is hit), NonIntegerSolution if the unique
// rational solution is not integral.
NCPoly right_divide(const NCPoly& p, const NCPoly& q, int support_rounds = 2);

}  // namespace ncl
