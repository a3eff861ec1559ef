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

#include "ncl/qpoly.hpp"

namespace ncl {

QPoly QPoly::constant(const Int& c) { return monomial(QKey{}, c); }

QPoly QPoly::monomial(const QKey& k, const Int& c) {
  QPoly p;
  p.add_term(k, c);
  return p;
}

Int QPoly::coeff(const QKey& k) const {
  auto it = m_.find(k);
  return it == m_.end() ? Int(0) : it->second;
}

void QPoly::add_term(const QKey& k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = m_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out = a;
  for (const auto& [k, c] : b) out.add_term(k, c);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out = a;
  for (const auto& [k, c] : b) out.add_term(k, -c);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      QKey k{ka.k + kb.k - ka.b * kb.a, ka.a + kb.a, ka.b + kb.b};
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

QPoly qshift(const QPoly& a, std::int64_t j) {
  QPoly out;
  for (const auto& [k, c] : a) out.add_term(QKey{k.k + j, k.a, k.b}, c);
  return out;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : p) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string body;
    auto append_var = [&body](char v, std::int64_t e) {
      if (e == 0) return;
      if (!body.empty()) body += ' ';
      body += v;
      if (e != 1) {
        body += '^';
        body += std::to_string(e);
      }
    };
    append_var('q', k.k);
    append_var('x', k.a);
    append_var('y', k.b);
    if (body.empty()) {
      body = mag.str();
    } else if (mag != 1) {
      body = mag.str() + "*" + body;
    }
    if (first) {
      if (c < 0) s += '-';
      s += body;
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

}  // namespace ncl
