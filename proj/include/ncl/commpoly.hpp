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
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "ncl/errors.hpp"

namespace ncl {

using Int = boost::multiprecision::cpp_int;

// Commutative Laurent polynomial in Z[x^{+-1}, y^{+-1}].  This type is the
// independent reference model for the abelianized recursions, so it is kept
// deliberately free of any dependence on the noncommutative machinery.
class CommPoly {
 public:
  // (exponent of x, exponent of y)
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Map = std::map<Key, Int>;

  CommPoly() = default;

  static CommPoly constant(const Int& c);
  static CommPoly monomial(std::int64_t a, std::int64_t b, const Int& c = 1);
  static CommPoly var_x() { return monomial(1, 0); }
  static CommPoly var_y() { return monomial(0, 1); }

  bool is_zero() const noexcept { return m_.empty(); }
  std::size_t terms() const noexcept { return m_.size(); }

  Int coeff(std::int64_t a, std::int64_t b) const;
  void add_term(std::int64_t a, std::int64_t b, const Int& c);

  Map::const_iterator begin() const noexcept { return m_.begin(); }
  Map::const_iterator end() const noexcept { return m_.end(); }

  friend bool operator==(const CommPoly&, const CommPoly&) = default;

 private:
  Map m_;
};

CommPoly add(const CommPoly& a, const CommPoly& b);
CommPoly sub(const CommPoly& a, const CommPoly& b);
CommPoly neg(const CommPoly& a);
CommPoly mul(const CommPoly& a, const CommPoly& b);
CommPoly pow(const CommPoly& a, std::int64_t e);  // e >= 0

// Quotient num / den when it exists in the Laurent ring, by repeated
// elimination of the graded-lex leading term.  Throws DivisionNotExact when
// a leading coefficient fails to divide or when the step guard trips; the
// guard is what terminates divisions that spiral off to ever-lower degrees,
// which Laurent division happily does on non-exact input.
CommPoly exact_divide(const CommPoly& num, const CommPoly& den);

std::string to_string(const CommPoly& p);

}  // namespace ncl
