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
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "ncl/errors.hpp"

namespace ncl {

using Int = boost::multiprecision::cpp_int;

// Monomial q^k x^a y^b of the quantum torus, where q is central and the
// variables obey x y = q y x.  Every element has a unique normal form with
// all x's left of all y's, which is what the key stores.
struct QKey {
  std::int64_t k = 0;  // power of q
  std::int64_t a = 0;  // power of x
  std::int64_t b = 0;  // power of y

  auto operator<=>(const QKey&) const = default;
};

class QPoly {
 public:
  using Map = std::map<QKey, Int>;

  QPoly() = default;

  static QPoly constant(const Int& c);
  static QPoly monomial(const QKey& k, const Int& c = 1);

  bool is_zero() const noexcept { return m_.empty(); }
  std::size_t terms() const noexcept { return m_.size(); }

  Int coeff(const QKey& k) const;
  void add_term(const QKey& k, const Int& c);

  Map::const_iterator begin() const noexcept { return m_.begin(); }
  Map::const_iterator end() const noexcept { return m_.end(); }

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  Map m_;
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);

// Normal-ordered product: moving x^{a2} through y^{b1} picks up q^{-b1 a2}.
QPoly mul(const QPoly& a, const QPoly& b);

// Multiplication by the central unit q^j.
QPoly qshift(const QPoly& a, std::int64_t j);

std::string to_string(const QPoly& p);

}  // namespace ncl
