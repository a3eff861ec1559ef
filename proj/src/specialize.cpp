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

#include "ncl/specialize.hpp"

namespace ncl {

CommPoly abelianize_word(const Word& w) {
  auto [ex, ey] = w.exponent_sums();
  return CommPoly::monomial(ex, ey);
}

CommPoly abelianize(const NCPoly& p) {
  CommPoly out;
  for (const auto& [w, c] : p) {
    auto [ex, ey] = w.exponent_sums();
    out.add_term(ex, ey, c);
  }
  return out;
}

QKey q_specialize_word(const Word& w) {
  // Normal-order left to right.  Appending x^e means commuting it past the
  // y^b accumulated so far, which costs q^{-b e}; appending y^e is free.
  QKey k;
  for (std::size_t i = 0; i < w.syllables(); ++i) {
    std::int64_t e = w.exp(i);
    if (w.gen(i) == Gen::x) {
      k.k -= k.b * e;
      k.a += e;
    } else {
      k.b += e;
    }
  }
  return k;
}

QPoly q_specialize(const NCPoly& p) {
  QPoly out;
  for (const auto& [w, c] : p) out.add_term(q_specialize_word(w), c);
  return out;
}

}  // namespace ncl
