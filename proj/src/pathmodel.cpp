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

#include "ncl/pathmodel.hpp"

#include <functional>
#include <utility>

#include "ncl/checker.hpp"
#include "ncl/errors.hpp"

namespace ncl {

namespace {

struct ModelWeights {
  NCPoly y1, y2, y3;
};

const NCPoly& comm() {
  static const NCPoly c = parse_poly("x y x^-1 y^-1");
  return c;
}

// The walk weights per case.  For the (2,2) case all three are seed cross
// ratios, y1 = R_1 R_0^-1, y2 = R_1^-1 R_0^-1, y3 = R_1^-1 R_0, and they
// sum to K.  For the (1,4) flavors y1 and y3 are frozen in closed form
// with y1 + y3 = K, while y2 is produced from the relation y2 = y3 y1 - C
// so the model and the linear recursion share one source of truth.
ModelWeights weights_for(CaseTag tag) {
  switch (tag) {
    case CaseTag::B22:
      return {parse_poly("y^2 x^-1 y^-1"), parse_poly("x^-1 y^-1"),
              parse_poly("x y^-1")};
    case CaseTag::B14_xy: {
      NCPoly y1 = parse_poly("x^-1 y x^-1 y^-1 + y x^-1 y x^-1 y^-1");
      NCPoly y3 = parse_poly("x^2 y^-1 + x^-2 y^-1 + y x^-2 y^-1");
      NCPoly y2 = sub(mul(y3, y1), comm());
      return {std::move(y1), std::move(y2), std::move(y3)};
    }
    case CaseTag::B14_XY: {
      NCPoly y1 = parse_poly("y^3 x^-1 y^-1 + y^-1 x^-1 y^-1 + x y^-1 x^-1 y^-1");
      NCPoly y3 = parse_poly("y^-2 + x y^-2");
      NCPoly y2 = sub(mul(y3, y1), comm());
      return {std::move(y1), std::move(y2), std::move(y3)};
    }
    default:
      throw UnsupportedCase(
          "no path model for case " + std::string(to_string(tag)) +
          "; its entries are index translates of the (1,4) sequences");
  }
}

// Appends G = (1 - S)^-1 coefficientwise, with the S factor on the left:
// G_0 = 1 and G_n = sum_{k=1..n} S_k G_{n-k}.  S_0 must vanish.
std::vector<NCPoly> geometric(const std::vector<NCPoly>& s, long n_terms) {
  std::vector<NCPoly> g(static_cast<std::size_t>(n_terms) + 1);
  g[0] = NCPoly::one();
  for (long n = 1; n <= n_terms; ++n) {
    NCPoly acc;
    for (long k = 1; k <= n; ++k) {
      const NCPoly& sk = s[static_cast<std::size_t>(k)];
      if (sk.is_zero()) continue;
      acc = add(acc, mul(sk, g[static_cast<std::size_t>(n - k)]));
    }
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return g;
}

}  // namespace

PathModel build_model(CaseTag tag) {
  ModelWeights w = weights_for(tag);
  PathModel m;
  m.tag = tag;

  if (tag == CaseTag::B22) {
    // Nearest neighbor walks on the segment 0-1-2-3: stepping up is free,
    // stepping down from vertex i costs y_i.  A 2n-step round trip from
    // vertex 0 spells one term of R_n R_0^-1 as the product of its down
    // step weights in visit order, distinct round trips spell distinct
    // reduced words, and odd step counts admit no round trip at all.
    m.names = {"0", "1", "2", "3"};
    m.edge.assign(4, std::vector<NCPoly>(4));
    const NCPoly* ws[4] = {nullptr, &w.y1, &w.y2, &w.y3};
    for (std::size_t i = 0; i < 3; ++i) m.edge[i][i + 1] = NCPoly::one();
    for (std::size_t i = 1; i <= 3; ++i) m.edge[i][i - 1] = *ws[i];
    m.accept = {0};
    m.base = parse_poly("y x y^-1");
    m.steps_per_index = 2;
    m.u_offset = 0;
    return m;
  }

  // Both (1,4) flavors share the two-vertex shape: a loop at the start
  // vertex (weight y1), a free crossing to vertex 1, a loop there (y3) and
  // the return edge (y2).  Decomposing a walk by its first step gives
  //   partition(n+2) = (y1 + y3) partition(n+1) + (y2 - y3 y1) partition(n),
  // which is the u recursion once y1 + y3 = K and y3 y1 - y2 = C.
  m.names = {"0", "1"};
  m.edge.assign(2, std::vector<NCPoly>(2));
  m.edge[0][0] = w.y1;
  m.edge[0][1] = NCPoly::one();
  m.edge[1][0] = w.y2;
  m.edge[1][1] = w.y3;
  m.accept = {0};
  if (tag == CaseTag::B14_xy) {
    m.base = parse_poly("y x y^-1");  // u_0
    m.u_offset = 0;
  } else {
    // The XY u_0 has two terms and no right inverse, so the series is
    // anchored at u_1 = y instead and partition(n) lands on u_{n+1}.
    m.base = parse_poly("y");
    m.u_offset = 1;
  }
  return m;
}

NCPoly partition_fn_matrix(const PathModel& m, long n) {
  if (n < 0) throw IndexUnavailable("walk length must be nonnegative");
  if (n == 0) return NCPoly::one();
  std::vector<NCPoly> v(m.size());
  v[static_cast<std::size_t>(m.start)] = NCPoly::one();
  for (long step = 0; step < n; ++step) {
    std::vector<NCPoly> next(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.edge[i][j].is_zero()) continue;
        next[j] = add(next[j], mul(v[i], m.edge[i][j]));
      }
    }
    v = std::move(next);
  }
  NCPoly total;
  for (int a : m.accept) total = add(total, v[static_cast<std::size_t>(a)]);
  return total;
}

PathListing partition_fn_enumerate(const PathModel& m, long n,
                                   std::uint64_t budget, bool keep_paths) {
  if (n < 0) throw IndexUnavailable("walk length must be nonnegative");
  PathListing out;
  if (n == 0) {
    out.total = NCPoly::one();
    out.count = 1;
    out.monomials = 1;
    if (keep_paths) {
      out.paths.push_back(m.names[static_cast<std::size_t>(m.start)]);
      out.weights.push_back(NCPoly::one());
    }
    return out;
  }

  std::uint64_t used = 0;
  std::string trail = m.names[static_cast<std::size_t>(m.start)];
  std::function<void(int, long, const NCPoly&, std::uint64_t)> dfs =
      [&](int v, long left, const NCPoly& prefix, std::uint64_t prefix_terms) {
        if (left == 0) {
          for (int a : m.accept) {
            if (a != v) continue;
            out.total = add(out.total, prefix);
            out.count += 1;
            out.monomials += prefix_terms;
            if (keep_paths) {
              out.paths.push_back(trail);
              out.weights.push_back(prefix);
            }
          }
          return;
        }
        for (std::size_t j = 0; j < m.size(); ++j) {
          const NCPoly& wt = m.edge[static_cast<std::size_t>(v)][j];
          if (wt.is_zero()) continue;
          if (++used > budget)
            throw BudgetExceeded("walk enumeration exceeded " +
                                 std::to_string(budget) + " steps");
          trail += m.names[j];
          dfs(static_cast<int>(j), left - 1, mul(prefix, wt),
              prefix_terms * static_cast<std::uint64_t>(wt.terms()));
          trail.pop_back();
        }
      };
  dfs(m.start, n, NCPoly::one(), 1);
  return out;
}

std::vector<NCPoly> continued_fraction_series(CaseTag tag, long n_terms) {
  if (n_terms < 0) throw IndexUnavailable("series length must be nonnegative");
  ModelWeights w = weights_for(tag);
  const std::size_t len = static_cast<std::size_t>(n_terms) + 1;

  if (tag == CaseTag::B22) {
    // Three nested levels, innermost first:
    //   F3 = (1 - t y3)^-1,  F2 = (1 - t F3 y2)^-1,  F1 = (1 - t F2 y1)^-1.
    std::vector<NCPoly> level(len);
    level[0] = NCPoly::one();  // F4 = 1
    const NCPoly* ws[3] = {&w.y3, &w.y2, &w.y1};
    for (const NCPoly* yk : ws) {
      std::vector<NCPoly> s(len);
      for (long j = 1; j <= n_terms; ++j)
        s[static_cast<std::size_t>(j)] = mul(level[static_cast<std::size_t>(j - 1)], *yk);
      level = geometric(s, n_terms);
    }
    return level;
  }

  // F = (1 - t y1 - t^2 (1 - t y3)^-1 y2)^-1: the t y1 term is the start
  // loop, the nested factor is one excursion across the bridge with y3
  // loops on the far side.
  std::vector<NCPoly> inner(len);
  for (long j = 0; j <= n_terms; ++j)
    inner[static_cast<std::size_t>(j)] = (j == 0) ? NCPoly::one() : mul(inner[static_cast<std::size_t>(j - 1)], w.y3);
  std::vector<NCPoly> s(len);
  if (n_terms >= 1) s[1] = w.y1;
  for (long j = 2; j <= n_terms; ++j)
    s[static_cast<std::size_t>(j)] = mul(inner[static_cast<std::size_t>(j - 2)], w.y2);
  return geometric(s, n_terms);
}

VerifyReport series_multiply_check(CaseTag tag,
                                   const std::vector<NCPoly>& series,
                                   std::uint64_t budget) {
  ModelWeights w = weights_for(tag);
  NCPoly k = add(w.y1, w.y3);
  if (tag == CaseTag::B22) k = add(k, w.y2);
  const NCPoly c = sub(mul(w.y3, w.y1), (tag == CaseTag::B22) ? NCPoly() : w.y2);
  const NCPoly one = NCPoly::one();
  const NCPoly linear = sub(w.y1, k);

  VerifyReport rep;
  for (std::size_t n = 0; n < series.size(); ++n) {
    IdentityCheck chk;
    chk.add_poly(series[n], +1);
    if (n >= 1) chk.add_product(k, series[n - 1], -1);
    if (n >= 2) chk.add_product(c, series[n - 2], +1);
    if (n == 0) chk.add_poly(one, -1);
    if (n == 1) chk.add_poly(linear, -1);
    IdentityCheck::Outcome out = chk.run(budget);
    CheckEntry e;
    e.name = "series_numerator";
    e.index = static_cast<long>(n);
    e.pass = out.feasible && out.pass;
    e.method = "direct(" + std::to_string(out.products) + " products)";
    e.detail = out.counterexample;
    rep.add(std::move(e));
  }
  return rep;
}

}  // namespace ncl
