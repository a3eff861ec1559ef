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

#include "ncl/ncpoly.hpp"

#include <algorithm>
#include <cctype>

namespace ncl {

NCPoly NCPoly::constant(const Int& c) {
  NCPoly p;
  p.add_term(Word(), c);
  return p;
}

NCPoly NCPoly::monomial(const Word& w, const Int& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

Int NCPoly::coeff(const Word& w) const {
  auto it = m_.find(w);
  return it == m_.end() ? Int(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = m_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

std::vector<std::pair<Word, Int>> NCPoly::sorted_terms() const {
  std::vector<std::pair<Word, Int>> v(m_.begin(), m_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return v;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.m_.size() != b.m_.size()) return false;
  for (const auto& [w, c] : a.m_) {
    auto it = b.m_.find(w);
    if (it == b.m_.end() || it->second != c) return false;
  }
  return true;
}

NCPoly add(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b) out.add_term(w, c);
  return out;
}

NCPoly sub(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b) out.add_term(w, -c);
  return out;
}

NCPoly neg(const NCPoly& a) {
  NCPoly out;
  for (const auto& [w, c] : a) out.add_term(w, -c);
  return out;
}

NCPoly scale(const NCPoly& a, const Int& c) {
  NCPoly out;
  if (c == 0) return out;
  for (const auto& [w, k] : a) out.add_term(w, k * c);
  return out;
}

NCPoly mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      out.add_term(mul(wa, wb), ca * cb);
    }
  }
  return out;
}

NCPoly mul(const Word& w, const NCPoly& p) {
  NCPoly out;
  for (const auto& [wp, c] : p) out.add_term(mul(w, wp), c);
  return out;
}

NCPoly mul(const NCPoly& p, const Word& w) {
  NCPoly out;
  for (const auto& [wp, c] : p) out.add_term(mul(wp, w), c);
  return out;
}

NCPoly pow(const NCPoly& p, std::int64_t e) {
  NCPoly out = NCPoly::one();
  for (std::int64_t i = 0; i < e; ++i) out = mul(out, p);
  return out;
}

NCPoly inv_unit(const NCPoly& p) {
  if (p.terms() != 1) {
    throw NotAUnit("inverse requires a single term, got " + std::to_string(p.terms()));
  }
  const auto& [w, c] = *p.begin();
  if (c != 1 && c != -1) {
    throw NotAUnit("inverse requires coefficient +1 or -1, got " + c.str());
  }
  return NCPoly::monomial(inv(w), c);
}

NCPoly star(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add_term(star_word(w), c);
  return out;
}

bool is_positive(const NCPoly& p) {
  for (const auto& [w, c] : p) {
    if (c < 1) return false;
  }
  return true;
}

bool is_zero_one(const NCPoly& p) {
  for (const auto& [w, c] : p) {
    if (c != 1) return false;
  }
  return true;
}

Int max_abs_coeff(const NCPoly& p) {
  Int m = 0;
  for (const auto& [w, c] : p) {
    Int a = c < 0 ? Int(-c) : c;
    if (a > m) m = a;
  }
  return m;
}

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.sorted_terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string body;
    if (w.is_identity()) {
      body = mag.str();
    } else if (mag == 1) {
      body = to_string(w);
    } else {
      body = mag.str() + "*" + to_string(w);
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

namespace {

bool is_integer_token(std::string_view t) {
  if (t.empty()) return false;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

NCPoly parse_poly(std::string_view text) {
  std::vector<std::string_view> atoms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    atoms.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  if (atoms.empty()) throw ParseError("empty polynomial");
  if (atoms.size() == 1 && atoms[0] == "0") return NCPoly();

  NCPoly out;
  std::size_t i = 0;
  int sign = 1;
  if (atoms[0].size() > 1 && atoms[0][0] == '-') {
    sign = -1;
    atoms[0].remove_prefix(1);
  }
  while (i < atoms.size()) {
    // collect one term's atoms
    std::vector<std::string_view> term;
    while (i < atoms.size() && atoms[i] != "+" && atoms[i] != "-") {
      term.push_back(atoms[i]);
      ++i;
    }
    if (term.empty()) throw ParseError("missing term in polynomial");

    Int coeff = 1;
    std::string word_text;
    std::size_t star_pos = term[0].find('*');
    std::size_t factor_start = 0;
    if (star_pos != std::string_view::npos) {
      std::string_view head = term[0].substr(0, star_pos);
      std::string_view tail = term[0].substr(star_pos + 1);
      if (!is_integer_token(head) || tail.empty()) {
        throw ParseError("bad coefficient prefix '" + std::string(term[0]) + "'");
      }
      coeff = Int(std::string(head));
      word_text = std::string(tail);
      factor_start = 1;
    } else if (is_integer_token(term[0])) {
      if (term.size() > 1) {
        throw ParseError("constant '" + std::string(term[0]) + "' followed by factors; write <int>*<word>");
      }
      coeff = Int(std::string(term[0]));
      word_text = "1";
      factor_start = 1;
    }
    for (std::size_t k = factor_start; k < term.size(); ++k) {
      if (!word_text.empty()) word_text += ' ';
      word_text += std::string(term[k]);
    }
    out.add_term(parse_word(word_text), sign * coeff);

    // consume the separator
    if (i < atoms.size()) {
      sign = atoms[i] == "-" ? -1 : 1;
      ++i;
      if (i == atoms.size()) throw ParseError("polynomial ends with a dangling sign");
    }
  }
  return out;
}

}  // namespace ncl
