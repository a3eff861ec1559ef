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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncl/errors.hpp"

namespace ncl {

enum class Gen : std::int32_t { x = 0, y = 1 };

// Reduced word in the free group on x and y, stored as a run-length
// sequence of syllables g^e with e != 0 and adjacent syllables on distinct
// generators.  Each syllable packs into one int32 as (e << 1) | gen, which
// keeps words contiguous and cheap to hash; exponents are capped at 2^30.
//
// The default-constructed Word is the group identity.
class Word {
 public:
  Word() = default;

  static Word gen_pow(Gen g, std::int64_t e) {
    Word w;
    w.append(g, e);
    return w;
  }

  bool is_identity() const noexcept { return syl_.empty(); }
  std::size_t syllables() const noexcept { return syl_.size(); }

  Gen gen(std::size_t i) const noexcept { return Gen(syl_[i] & 1); }
  std::int32_t exp(std::size_t i) const noexcept { return syl_[i] >> 1; }

  // Reduced length (number of letters).
  std::int64_t letters() const noexcept;

  // Total exponent of x and of y; this is the image in Z^2.
  std::pair<std::int64_t, std::int64_t> exponent_sums() const noexcept;

  // Right-multiplies by g^e, merging and cancelling against the last
  // syllable.  Feeding an arbitrary letter sequence through append yields
  // the reduced form, so this is also the reduction routine.
  void append(Gen g, std::int64_t e);

  std::size_t hash() const noexcept;

  // Packed syllable storage, exposed for the streaming product checker.
  const std::int32_t* raw() const noexcept { return syl_.data(); }

  friend bool operator==(const Word&, const Word&) noexcept = default;

 private:
  std::vector<std::int32_t> syl_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

Word mul(const Word& a, const Word& b);
Word inv(const Word& w);
Word pow(const Word& w, std::int64_t e);

// Shortlex: first by reduced length, then letter by letter with
// x < x^-1 < y < y^-1.  Returns -1, 0 or 1.
int compare(const Word& a, const Word& b) noexcept;

inline bool operator<(const Word& a, const Word& b) noexcept {
  return compare(a, b) < 0;
}

// The involution used by the index-reversal symmetry: the anti-automorphism
// of the free group fixing nothing letter-wise, with
//   star(x) = y x y x^-1 y^-1,   star(y) = y x y^-1.
// Applying it twice gives the word back.
Word star_word(const Word& w);

// Grammar: whitespace-separated factors, each "x", "y", "x^<int>",
// "y^<int>" or "1".  Input need not be reduced; the result always is.
Word parse_word(std::string_view text);

std::string to_string(const Word& w);

}  // namespace ncl
