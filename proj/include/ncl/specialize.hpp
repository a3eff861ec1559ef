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

#include "ncl/commpoly.hpp"
#include "ncl/ncpoly.hpp"
#include "ncl/qpoly.hpp"

namespace ncl {

// Ring homomorphism onto the commutative Laurent ring: each word goes to
// x^(total x exponent) y^(total y exponent).
CommPoly abelianize(const NCPoly& p);
CommPoly abelianize_word(const Word& w);

// Ring homomorphism onto the quantum torus with x y = q y x.  A word maps
// to its normal-ordered form q^k x^a y^b; in particular the commutator
// x y x^-1 y^-1 maps to q.
QPoly q_specialize(const NCPoly& p);
QKey q_specialize_word(const Word& w);

}  // namespace ncl
