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

#include "ncl/division.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ncl {

namespace {

using Rat = boost::multiprecision::cpp_rational;

constexpr std::size_t kSupportCap = 4096;

// Sparse row of the linear system, keyed by unknown index.
struct Row {
  std::map<std::size_t, Rat> a;
  Rat rhs;
};

// Solves s * q = p with supp(s) restricted to the candidate support.
// Because the group is bi-orderable the group ring has no zero divisors, so
// a consistent system pins s uniquely; inconsistency means the support is
// still missing words and the caller may grow it.  A non-integral solution
// can only happen when no exact quotient exists at all, hence the throw.
std::optional<NCPoly> solve_on_support(
    const NCPoly& p, const NCPoly& q,
    const std::vector<std::pair<Word, Int>>& qterms,
    const std::vector<Word>& support, std::string* reason) {
  // one equation per word that can appear in s * q
  std::unordered_map<Word, Row, WordHash> equations;
  for (std::size_t col = 0; col < support.size(); ++col) {
    for (const auto& [m, mc] : qterms) {
      equations[mul(support[col], m)].a[col] += Rat(mc);
    }
  }
  for (auto& [w, row] : equations) row.rhs = Rat(p.coeff(w));
  for (const auto& [w, c] : p) {
    if (!equations.count(w)) {
      *reason = "dividend word '" + to_string(w) + "' unreachable from candidate support";
      return std::nullopt;
    }
  }

  // Gaussian elimination with sparse rows; pivots keyed by column.
  std::map<std::size_t, Row> pivots;
  for (auto& [w, row] : equations) {
    Row r = row;
    while (!r.a.empty()) {
      auto lead = r.a.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) break;
      Rat f = lead->second;
      for (const auto& [col, v] : pit->second.a) {
        auto it = r.a.emplace(col, Rat(0)).first;
        it->second -= f * v;
        if (it->second == 0) r.a.erase(it);
      }
      r.rhs -= f * pit->second.rhs;
    }
    if (r.a.empty()) {
      if (r.rhs != 0) {
        *reason = "inconsistent equation at word '" + to_string(w) + "'";
        return std::nullopt;
      }
      continue;
    }
    // normalize so the pivot coefficient is 1
    Rat lead = r.a.begin()->second;
    for (auto& [col, v] : r.a) v /= lead;
    r.rhs /= lead;
    pivots.emplace(r.a.begin()->first, std::move(r));
  }

  // back-substitute, free variables set to zero
  std::map<std::size_t, Rat> solution;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rat v = it->second.rhs;
    bool first = true;
    for (const auto& [col, coeff] : it->second.a) {
      if (first) {
        first = false;  // the pivot itself
        continue;
      }
      auto sit = solution.find(col);
      if (sit != solution.end()) v -= coeff * sit->second;
    }
    solution[it->first] = v;
  }

  NCPoly s;
  for (const auto& [col, v] : solution) {
    if (boost::multiprecision::denominator(v) != 1) {
      throw NonIntegerSolution("coefficient of '" + to_string(support[col]) +
                               "' is " + v.str());
    }
    s.add_term(support[col], boost::multiprecision::numerator(v));
  }

  if (!(mul(s, q) == p)) {
    *reason = "candidate support admits no exact quotient";
    return std::nullopt;
  }
  return s;
}

}  // namespace

NCPoly right_divide(const NCPoly& p, const NCPoly& q, int support_rounds) {
  if (q.is_zero()) {
    if (p.is_zero()) return NCPoly();
    throw NoSolutionInSupport("division by zero with nonzero dividend");
  }
  if (p.is_zero()) return NCPoly();
  if (q.terms() == 1) {
    const auto& [mw, mc] = *q.begin();
    if (mc == 1 || mc == -1) return mul(p, inv_unit(q));
    // single term with a bigger coefficient: fall through to the general
    // path so non-integral quotients are reported as such
  }

  const auto qterms = q.sorted_terms();

  // Initial candidate support: every dividend word divided by every divisor
  // word on the right.  When products hide quotient words by cancellation
  // the solve fails and one more tier s * m_i * m_j^-1 is added, at most
  // support_rounds times; solving eagerly first keeps the common case small.
  std::vector<Word> support;
  std::unordered_set<Word, WordHash> seen;
  auto push = [&](const Word& w) {
    if (seen.insert(w).second) {
      support.push_back(w);
      if (support.size() > kSupportCap) {
        throw NoSolutionInSupport("candidate support exceeded " +
                                  std::to_string(kSupportCap) + " words");
      }
    }
  };
  for (const auto& [w, c] : p) {
    for (const auto& [m, mc] : qterms) push(mul(w, inv(m)));
  }

  std::string reason;
  for (int round = 0;; ++round) {
    if (auto s = solve_on_support(p, q, qterms, support, &reason)) return *s;
    if (round == support_rounds) break;
    std::size_t old_size = support.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      for (const auto& [mi, ci] : qterms) {
        Word smi = mul(support[i], mi);
        for (const auto& [mj, cj] : qterms) {
          push(mul(smi, inv(mj)));
        }
      }
    }
    if (support.size() == old_size) break;  // nothing new to try
  }
  throw NoSolutionInSupport(reason);
}

}  // namespace ncl
