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

#include "ncl/checker.hpp"

#include <cstring>
#include <limits>

namespace ncl {

namespace {

constexpr std::int64_t kExpLimit = std::int64_t{1} << 30;

bool to_i64(const Int& v, std::int64_t& out) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    return false;
  }
  out = v.convert_to<std::int64_t>();
  return true;
}

std::uint64_t fnv(const std::int32_t* syl, std::uint32_t len) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint32_t i = 0; i < len; ++i) {
    h ^= static_cast<std::uint32_t>(syl[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ProductAccum::ProductAccum(std::size_t mem_limit_bytes)
    : table_(std::size_t{1} << 16), mem_limit_(mem_limit_bytes) {}

std::size_t ProductAccum::bytes_in_use() const noexcept {
  return arena_.capacity() * sizeof(std::int32_t) + table_.capacity() * sizeof(Slot);
}

void ProductAccum::grow() {
  std::size_t newcap = table_.size() * 2;
  if (arena_.capacity() * sizeof(std::int32_t) + newcap * sizeof(Slot) > mem_limit_) {
    spilled_ = true;
    return;
  }
  std::vector<Slot> fresh(newcap);
  std::size_t mask = newcap - 1;
  for (const Slot& s : table_) {
    if (s.off == kEmpty) continue;
    std::size_t i = s.hash & mask;
    while (fresh[i].off != kEmpty) i = (i + 1) & mask;
    fresh[i] = s;
  }
  table_ = std::move(fresh);
}

void ProductAccum::insert(const std::int32_t* syl, std::uint32_t len, std::int64_t c) {
  if (spilled_ || c == 0) return;
  std::uint64_t h = fnv(syl, len);
  std::size_t mask = table_.size() - 1;
  std::size_t i = h & mask;
  while (true) {
    Slot& s = table_[i];
    if (s.off == kEmpty) {
      if (bytes_in_use() + len * sizeof(std::int32_t) > mem_limit_) {
        spilled_ = true;
        return;
      }
      s.hash = h;
      s.off = static_cast<std::uint32_t>(arena_.size());
      s.len = len;
      s.coeff = c;
      arena_.insert(arena_.end(), syl, syl + len);
      if (++used_ * 10 > table_.size() * 7) grow();
      return;
    }
    if (s.hash == h && s.len == len &&
        std::memcmp(arena_.data() + s.off, syl, len * sizeof(std::int32_t)) == 0) {
      if (__builtin_add_overflow(s.coeff, c, &s.coeff)) spilled_ = true;
      return;
    }
    i = (i + 1) & mask;
  }
}

void ProductAccum::add_product(const NCPoly& a, const NCPoly& b, int sign) {
  for (const auto& [wa, ca] : a) {
    if (spilled_) return;
    std::int64_t ca64;
    if (!to_i64(ca, ca64)) {
      spilled_ = true;
      return;
    }
    if (sign < 0) ca64 = -ca64;
    const std::int32_t* araw = wa.raw();
    const std::size_t alen = wa.syllables();
    for (const auto& [wb, cb] : b) {
      std::int64_t cb64;
      std::int64_t c;
      if (!to_i64(cb, cb64) || __builtin_mul_overflow(ca64, cb64, &c)) {
        spilled_ = true;
        return;
      }
      // reduce the concatenation wa . wb directly into the scratch buffer
      scratch_.assign(araw, araw + alen);
      for (std::size_t k = 0; k < wb.syllables(); ++k) {
        std::int32_t packed = wb.raw()[k];
        std::int32_t g = packed & 1;
        std::int64_t e = packed >> 1;
        if (!scratch_.empty() && (scratch_.back() & 1) == g) {
          std::int64_t m = (scratch_.back() >> 1) + e;
          if (m == 0) {
            scratch_.pop_back();
          } else if (m >= kExpLimit || m <= -kExpLimit) {
            spilled_ = true;
            return;
          } else {
            scratch_.back() = static_cast<std::int32_t>((m << 1) | g);
          }
        } else {
          scratch_.push_back(packed);
        }
      }
      insert(scratch_.data(), static_cast<std::uint32_t>(scratch_.size()), c);
      if (spilled_) return;
    }
  }
}

void ProductAccum::add_poly(const NCPoly& p, int sign) {
  for (const auto& [w, c] : p) {
    if (spilled_) return;
    std::int64_t c64;
    if (!to_i64(c, c64)) {
      spilled_ = true;
      return;
    }
    insert(w.raw(), static_cast<std::uint32_t>(w.syllables()), sign < 0 ? -c64 : c64);
  }
}

bool ProductAccum::is_zero() const {
  if (spilled_) return false;
  for (const Slot& s : table_) {
    if (s.off != kEmpty && s.coeff != 0) return false;
  }
  return true;
}

Word ProductAccum::word_at(const Slot& s) const {
  Word w;
  for (std::uint32_t i = 0; i < s.len; ++i) {
    std::int32_t packed = arena_[s.off + i];
    w.append(Gen(packed & 1), packed >> 1);
  }
  return w;
}

std::optional<ProductAccum::Residual> ProductAccum::first_residual() const {
  std::optional<Residual> best;
  for (const Slot& s : table_) {
    if (s.off == kEmpty || s.coeff == 0) continue;
    Word w = word_at(s);
    if (!best || compare(w, best->word) < 0) best = Residual{std::move(w), s.coeff};
  }
  return best;
}

std::size_t ProductAccum::residual_count() const {
  std::size_t n = 0;
  for (const Slot& s : table_) {
    if (s.off != kEmpty && s.coeff != 0) ++n;
  }
  return n;
}

std::uint64_t IdentityCheck::cost() const noexcept {
  std::uint64_t n = 0;
  for (const auto& pr : products_) {
    n += std::uint64_t{pr.a->terms()} * pr.b->terms();
  }
  for (const auto& t : polys_) n += t.p->terms();
  return n;
}

namespace {

double avg_syllables(const NCPoly& p) {
  if (p.terms() == 0) return 0.0;
  std::uint64_t total = 0;
  for (const auto& [w, c] : p) total += w.syllables();
  return static_cast<double>(total) / static_cast<double>(p.terms());
}

}  // namespace

std::size_t IdentityCheck::predicted_bytes() const noexcept {
  // Slot size scaled by the inverse of the 70% load threshold the table
  // grows at, plus the packed syllables each product appends to the arena.
  // A concatenated word has at most syl(a) + syl(b) syllables.
  constexpr double kSlotBytes = 24.0 * 10.0 / 7.0;
  double bytes = 0.0;
  for (const auto& pr : products_) {
    double n = static_cast<double>(pr.a->terms()) * static_cast<double>(pr.b->terms());
    bytes += n * (kSlotBytes +
                  4.0 * (avg_syllables(*pr.a) + avg_syllables(*pr.b)));
  }
  for (const auto& t : polys_) {
    bytes += static_cast<double>(t.p->terms()) *
             (kSlotBytes + 4.0 * avg_syllables(*t.p));
  }
  constexpr double kMax = static_cast<double>(std::numeric_limits<std::size_t>::max());
  if (!(bytes < kMax)) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(bytes);
}

IdentityCheck::Outcome IdentityCheck::run(std::uint64_t budget,
                                          std::size_t mem_limit_bytes) const {
  Outcome out;
  out.products = cost();
  if (out.products > budget) return out;            // infeasible, nothing ran
  if (predicted_bytes() > mem_limit_bytes) return out;  // would only spill later
  ProductAccum acc(mem_limit_bytes);
  for (const auto& t : polys_) acc.add_poly(*t.p, t.sign);
  for (const auto& pr : products_) acc.add_product(*pr.a, *pr.b, pr.sign);
  if (acc.spilled()) return out;
  out.feasible = true;
  out.pass = acc.is_zero();
  if (!out.pass) {
    if (auto r = acc.first_residual()) {
      out.counterexample = "residual has " + std::to_string(acc.residual_count()) +
                           " words, least term " + std::to_string(r->coeff) + " * " +
                           to_string(r->word);
    }
  }
  return out;
}

}  // namespace ncl
