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

#include <json.hpp>
#include <string>

#include "ncl/ncpoly.hpp"
#include "ncl/report.hpp"

namespace ncl {

// Coefficients are serialized as decimal strings, not JSON numbers, because
// they routinely outgrow anything a double can hold exactly.  Words turn
// into syllable arrays [["x", 2], ["y", -1], ...]; terms keep the canonical
// shortlex order, so equal polynomials always serialize to equal documents.
inline nlohmann::json poly_to_json(const NCPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : p.sorted_terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (std::size_t i = 0; i < w.syllables(); ++i)
      word.push_back({w.gen(i) == Gen::x ? "x" : "y", w.exp(i)});
    arr.push_back({{"coeff", c.str()}, {"word", std::move(word)}});
  }
  return arr;
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckEntry& e : r.entries()) {
    nlohmann::json row = {{"name", e.name},
                          {"pass", e.pass},
                          {"method", e.method}};
    if (e.index != CheckEntry::kNoIndex) row["index"] = e.index;
    if (!e.detail.empty()) row["detail"] = e.detail;
    checks.push_back(std::move(row));
  }
  return {{"passed", r.all_passed()},
          {"failures", r.failures()},
          {"checks", std::move(checks)}};
}

}  // namespace ncl
