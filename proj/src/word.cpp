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

#include "ncl/word.hpp"

#include <charconv>
#include <cstdlib>

namespace ncl {

namespace {

constexpr std::int64_t kExpLimit = std::int64_t{1} << 30;

std::int32_t pack(Gen g, std::int64_t e) {
  if (e >= kExpLimit || e <= -kExpLimit) {
    throw ExponentOverflow("syllable exponent exceeds 2^30");
  }
  return static_cast<std::int32_t>((e << 1) | static_cast<std::int64_t>(g));
}

// Rank of a single letter under x < x^-1 < y < y^-1.
int letter_rank(Gen g, std::int32_t e) noexcept {
  return (static_cast<int>(g) << 1) | (e < 0 ? 1 : 0);
}

}  // namespace

std::int64_t Word::letters() const noexcept {
  std::int64_t n = 0;
  for (std::int32_t s : syl_) {
    std::int32_t e = s >> 1;
    n += e < 0 ? -std::int64_t{e} : std::int64_t{e};
  }
  return n;
}

std::pair<std::int64_t, std::int64_t> Word::exponent_sums() const noexcept {
  std::int64_t ex = 0, ey = 0;
  for (std::int32_t s : syl_) {
    (s & 1 ? ey : ex) += s >> 1;
  }
  return {ex, ey};
}

void Word::append(Gen g, std::int64_t e) {
  if (e == 0) return;
  if (!syl_.empty() && (syl_.back() & 1) == static_cast<std::int32_t>(g)) {
    std::int64_t merged = std::int64_t{syl_.back() >> 1} + e;
    if (merged == 0) {
      syl_.pop_back();
    } else {
      syl_.back() = pack(g, merged);
    }
  } else {
    syl_.push_back(pack(g, e));
  }
}

std::size_t Word::hash() const noexcept {
  // FNV-1a over the packed syllables.
  std::uint64_t h = 14695981039346656037ull;
  for (std::int32_t s : syl_) {
    h ^= static_cast<std::uint32_t>(s);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Word mul(const Word& a, const Word& b) {
  Word out = a;
  for (std::size_t i = 0; i < b.syllables(); ++i) {
    out.append(b.gen(i), b.exp(i));
  }
  return out;
}

Word inv(const Word& w) {
  Word out;
  for (std::size_t i = w.syllables(); i-- > 0;) {
    out.append(w.gen(i), -std::int64_t{w.exp(i)});
  }
  return out;
}

Word pow(const Word& w, std::int64_t e) {
  if (e < 0) return pow(inv(w), -e);
  Word out;
  for (std::int64_t i = 0; i < e; ++i) out = mul(out, w);
  return out;
}

int compare(const Word& a, const Word& b) noexcept {
  std::int64_t la = a.letters(), lb = b.letters();
  if (la != lb) return la < lb ? -1 : 1;
  // Equal length: walk the letters run by run.
  std::size_t i = 0, j = 0;
  std::int64_t ra = 0, rb = 0;  // letters left in the current syllable
  while (i < a.syllables() && j < b.syllables()) {
    if (ra == 0) ra = std::abs(std::int64_t{a.exp(i)});
    if (rb == 0) rb = std::abs(std::int64_t{b.exp(j)});
    int ka = letter_rank(a.gen(i), a.exp(i));
    int kb = letter_rank(b.gen(j), b.exp(j));
    if (ka != kb) return ka < kb ? -1 : 1;
    std::int64_t step = ra < rb ? ra : rb;
    ra -= step;
    rb -= step;
    if (ra == 0) ++i;
    if (rb == 0) ++j;
  }
  return 0;
}

Word star_word(const Word& w) {
  static const Word star_x = parse_word("y x y x^-1 y^-1");
  static const Word star_y = parse_word("y x y^-1");
  Word out;
  for (std::size_t i = w.syllables(); i-- > 0;) {
    const Word& img = w.gen(i) == Gen::x ? star_x : star_y;
    out = mul(out, pow(img, w.exp(i)));
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t pos = 0;
  bool saw_factor = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    saw_factor = true;
    if (tok == "1") {
      pos = end;
      continue;
    }
    Gen g;
    if (tok[0] == 'x') {
      g = Gen::x;
    } else if (tok[0] == 'y') {
      g = Gen::y;
    } else {
      throw ParseError("bad factor '" + std::string(tok) + "' at offset " + std::to_string(pos));
    }
    std::int64_t e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2) {
        throw ParseError("bad factor '" + std::string(tok) + "' at offset " + std::to_string(pos));
      }
      const char* first = tok.data() + 2;
      const char* last = tok.data() + tok.size();
      auto [p, ec] = std::from_chars(first, last, e);
      if (ec != std::errc() || p != last) {
        throw ParseError("bad exponent in '" + std::string(tok) + "' at offset " + std::to_string(pos));
      }
    }
    out.append(g, e);
    pos = end;
  }
  if (!saw_factor) throw ParseError("empty word; the identity is written '1'");
  return out;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.syllables(); ++i) {
    if (i) s += ' ';
    s += w.gen(i) == Gen::x ? 'x' : 'y';
    if (w.exp(i) != 1) {
      s += '^';
      s += std::to_string(w.exp(i));
    }
  }
  return s;
}

}  // namespace ncl
