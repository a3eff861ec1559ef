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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncl/word.hpp"

namespace ncl {

using Int = boost::multiprecision::cpp_int;

// Z-linear combination of free-group words, i.e. an element of the group
// ring Z[F(x,y)].  Terms live in a hash map keyed by reduced word; zero
// coefficients are never stored.
class NCPoly {
 public:
  using Map = std::unordered_map<Word, Int, WordHash>;

  NCPoly() = default;

  static NCPoly one() { return constant(1); }
  static NCPoly constant(const Int& c);
  static NCPoly monomial(const Word& w, const Int& c = 1);

  bool is_zero() const noexcept { return m_.empty(); }
  std::size_t terms() const noexcept { return m_.size(); }

  // Coefficient of w, zero if the term is absent.
  Int coeff(const Word& w) const;

  // Adds c * w, erasing the term if the sum cancels.
  void add_term(const Word& w, const Int& c);

  Map::const_iterator begin() const noexcept { return m_.begin(); }
  Map::const_iterator end() const noexcept { return m_.end(); }

  // Terms in ascending shortlex order; this is the canonical form used by
  // printing and serialization.
  std::vector<std::pair<Word, Int>> sorted_terms() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b);

 private:
  Map m_;
};

NCPoly add(const NCPoly& a, const NCPoly& b);
NCPoly sub(const NCPoly& a, const NCPoly& b);
NCPoly neg(const NCPoly& a);
NCPoly scale(const NCPoly& a, const Int& c);
NCPoly mul(const NCPoly& a, const NCPoly& b);
NCPoly mul(const Word& w, const NCPoly& p);
NCPoly mul(const NCPoly& p, const Word& w);
NCPoly pow(const NCPoly& p, std::int64_t e);  // e >= 0

// Inverse of a single-term polynomial with coefficient +1 or -1.  Anything
// else throws NotAUnit; no other element of the group ring is invertible
// within the ring.
NCPoly inv_unit(const NCPoly& p);

// Coefficient-wise extension of the word involution star_word.  It is an
// anti-automorphism of the group ring and its own inverse.
NCPoly star(const NCPoly& p);

// All stored coefficients >= 1.  The zero polynomial passes vacuously.
bool is_positive(const NCPoly& p);

// All stored coefficients equal to 1.
bool is_zero_one(const NCPoly& p);

Int max_abs_coeff(const NCPoly& p);

// Text form: terms joined by " + " / " - ", each "<int>*<word>" with the
// coefficient omitted when it is 1 and the word omitted when it is the
// identity, e.g. "2*x y^-1 + x^2 - y".  The zero polynomial prints "0".
std::string to_string(const NCPoly& p);
NCPoly parse_poly(std::string_view text);

}  // namespace ncl
