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

#include "ncl/commpoly.hpp"

namespace ncl {

CommPoly CommPoly::constant(const Int& c) { return monomial(0, 0, c); }

CommPoly CommPoly::monomial(std::int64_t a, std::int64_t b, const Int& c) {
  CommPoly p;
  p.add_term(a, b, c);
  return p;
}

Int CommPoly::coeff(std::int64_t a, std::int64_t b) const {
  auto it = m_.find({a, b});
  return it == m_.end() ? Int(0) : it->second;
}

void CommPoly::add_term(std::int64_t a, std::int64_t b, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = m_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

CommPoly add(const CommPoly& a, const CommPoly& b) {
  CommPoly out = a;
  for (const auto& [k, c] : b) out.add_term(k.first, k.second, c);
  return out;
}

CommPoly sub(const CommPoly& a, const CommPoly& b) {
  CommPoly out = a;
  for (const auto& [k, c] : b) out.add_term(k.first, k.second, -c);
  return out;
}

CommPoly neg(const CommPoly& a) {
  CommPoly out;
  for (const auto& [k, c] : a) out.add_term(k.first, k.second, -c);
  return out;
}

CommPoly mul(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

CommPoly pow(const CommPoly& a, std::int64_t e) {
  CommPoly out = CommPoly::constant(1);
  for (std::int64_t i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

namespace {

// Graded lex: total degree first, then x-degree.  Additive in both
// components, so it is compatible with multiplication even with negative
// exponents in play.
CommPoly::Map::const_iterator leading(const CommPoly& p) {
  auto best = p.begin();
  for (auto it = p.begin(); it != p.end(); ++it) {
    auto deg = [](const CommPoly::Key& k) {
      return std::pair<std::int64_t, std::int64_t>{k.first + k.second, k.first};
    };
    if (deg(it->first) > deg(best->first)) best = it;
  }
  return best;
}

}  // namespace

CommPoly exact_divide(const CommPoly& num, const CommPoly& den) {
  if (den.is_zero()) throw DivisionNotExact("division by the zero polynomial");
  CommPoly q;
  CommPoly r = num;
  auto dl = leading(den);
  const auto [da, db] = dl->first;
  const Int dc = dl->second;
  std::size_t guard = 4 * (num.terms() + 1) * (den.terms() + 1) + 64;
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > guard) {
      throw DivisionNotExact("no exact quotient (step guard tripped)");
    }
    auto rl = leading(r);
    const auto [ra, rb] = rl->first;
    if (rl->second % dc != 0) {
      throw DivisionNotExact("leading coefficient " + rl->second.str() +
                             " not divisible by " + dc.str());
    }
    Int t = rl->second / dc;
    std::int64_t ta = ra - da, tb = rb - db;
    q.add_term(ta, tb, t);
    for (const auto& [k, c] : den) {
      r.add_term(k.first + ta, k.second + tb, -c * t);
    }
  }
  return q;
}

std::string to_string(const CommPoly& p) {
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
    append_var('x', k.first);
    append_var('y', k.second);
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
