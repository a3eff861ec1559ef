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
#include <optional>
#include <string>
#include <vector>

#include "ncl/ncpoly.hpp"

namespace ncl {

// Streaming accumulator for identities of the form
//     sum_i sign_i * a_i * b_i  +  sum_j sign_j * p_j  ==  0.
//
// The large direct checks expand tens of millions of elementary word
// products; materializing both sides as NCPoly (cpp_int coefficients,
// node-based hash map) would blow past the memory budget.  This kernel
// keeps one open-addressing table of (word, int64 coefficient) with the
// packed syllables in a shared append-only arena, streams every product
// through it, and asks at the end whether everything cancelled.
//
// int64 arithmetic is guarded: any coefficient overflow, or crossing the
// memory ceiling, sets spilled() and the caller falls back to a chain
// argument instead.  Results are only trusted when spilled() is false.
class ProductAccum {
 public:
  explicit ProductAccum(std::size_t mem_limit_bytes = kDefaultMemLimit);

  void add_product(const NCPoly& a, const NCPoly& b, int sign);
  void add_poly(const NCPoly& p, int sign);

  bool spilled() const noexcept { return spilled_; }
  bool is_zero() const;
  std::size_t distinct_words() const noexcept { return used_; }

  struct Residual {
    Word word;
    std::int64_t coeff;
  };
  // Shortlex-least word with nonzero accumulated coefficient, if any.
  std::optional<Residual> first_residual() const;
  // Number of distinct words with nonzero accumulated coefficient.
  std::size_t residual_count() const;

  static constexpr std::size_t kDefaultMemLimit = std::size_t{3200} * 1024 * 1024;

 private:
  struct Slot {
    std::uint64_t hash = 0;
    std::uint32_t off = kEmpty;
    std::uint32_t len = 0;
    std::int64_t coeff = 0;
  };
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void insert(const std::int32_t* syl, std::uint32_t len, std::int64_t c);
  void grow();
  std::size_t bytes_in_use() const noexcept;
  Word word_at(const Slot& s) const;

  std::vector<std::int32_t> arena_;
  std::vector<Slot> table_;
  std::vector<std::int32_t> scratch_;
  std::size_t used_ = 0;
  std::size_t mem_limit_;
  bool spilled_ = false;
};

// One identity instance assembled as a signed list of products and plain
// polynomials.  run() refuses (feasible = false) when the predicted number
// of elementary products exceeds the budget, or when even the optimistic
// memory estimate says the accumulator would spill, so callers can decide
// between the direct expansion and a chain argument before any work happens.
class IdentityCheck {
 public:
  void add_product(const NCPoly& a, const NCPoly& b, int sign) {
    products_.push_back({&a, &b, sign});
  }
  void add_poly(const NCPoly& p, int sign) { polys_.push_back({&p, sign}); }

  // Predicted elementary products.
  std::uint64_t cost() const noexcept;

  // Upper estimate of accumulator memory if no two elementary products
  // land on the same word: slot overhead plus packed syllables for every
  // product.  Real usage is lower whenever products collide, so comparing
  // this against the memory ceiling only filters attempts that would
  // spill after a long stream anyway.
  std::size_t predicted_bytes() const noexcept;

  struct Outcome {
    bool feasible = false;  // ran within budget and without spilling
    bool pass = false;
    std::uint64_t products = 0;
    std::string counterexample;  // empty when passing
  };
  Outcome run(std::uint64_t budget,
              std::size_t mem_limit_bytes = ProductAccum::kDefaultMemLimit) const;

 private:
  struct Prod {
    const NCPoly* a;
    const NCPoly* b;
    int sign;
  };
  struct Term {
    const NCPoly* p;
    int sign;
  };
  std::vector<Prod> products_;
  std::vector<Term> polys_;
};

}  // namespace ncl
