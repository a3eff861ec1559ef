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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ncl/dynamics.hpp"
#include "ncl/errors.hpp"
#include "ncl/pathmodel.hpp"

using namespace ncl;

TEST_CASE("(2,2) round trip counts follow the odd Fibonacci numbers") {
  PathModel m = build_model(CaseTag::B22);
  CHECK(m.steps_per_index == 2);
  const std::uint64_t expected[] = {1, 1, 2, 5, 13, 34, 89, 233};
  for (long n = 0; n < 8; ++n) {
    PathListing l = partition_fn_enumerate(m, 2 * n);
    CHECK(l.count == expected[n]);
    // Each walk weight is one reduced word and none collide, so the walk
    // count is also the monomial count.
    CHECK(l.monomials == expected[n]);
    CHECK(l.total.terms() == expected[n]);
  }
}

TEST_CASE("(2,2) odd step counts admit no round trip") {
  PathModel m = build_model(CaseTag::B22);
  for (long s : {1L, 3L, 5L, 7L}) {
    CHECK(partition_fn_matrix(m, s).is_zero());
    CHECK(partition_fn_enumerate(m, s).count == 0);
  }
}

TEST_CASE("(2,2) six step round trips and their down step weights") {
  PathModel m = build_model(CaseTag::B22);
  PathListing l = partition_fn_enumerate(m, 6, 1'000, true);
  const std::vector<std::string> want = {"0101010", "0101210", "0121010",
                                         "0121210", "0123210"};
  CHECK(l.paths == want);
  const NCPoly& y1 = m.edge[1][0];
  const NCPoly& y2 = m.edge[2][1];
  const NCPoly& y3 = m.edge[3][2];
  CHECK(l.weights[0] == mul(y1, mul(y1, y1)));
  CHECK(l.weights[1] == mul(y1, mul(y2, y1)));
  CHECK(l.weights[2] == mul(y2, mul(y1, y1)));
  CHECK(l.weights[3] == mul(y2, mul(y2, y1)));
  CHECK(l.weights[4] == mul(y3, mul(y2, y1)));
  CHECK(mul(l.total, m.base) == seq_22(3).at(3));
}

TEST_CASE("two vertex walk listing") {
  PathModel m = build_model(CaseTag::B14_xy);
  PathListing l = partition_fn_enumerate(m, 3, 1'000, true);
  const std::vector<std::string> want = {"0000", "0010", "0100", "0110"};
  CHECK(l.paths == want);
  CHECK(l.count == 4);
  // Interior vertices are unconstrained, so length n gives 2^(n-1) walks.
  CHECK(partition_fn_enumerate(m, 7).count == 64);
}

TEST_CASE("matrix, enumeration and series partition functions agree") {
  for (CaseTag tag : {CaseTag::B22, CaseTag::B14_xy, CaseTag::B14_XY}) {
    CAPTURE(to_string(tag));
    PathModel m = build_model(tag);
    std::vector<NCPoly> f = continued_fraction_series(tag, 5);
    for (long n = 0; n <= 5; ++n) {
      NCPoly by_matrix = partition_fn_matrix(m, m.steps_per_index * n);
      PathListing by_walks = partition_fn_enumerate(m, m.steps_per_index * n);
      CHECK(by_matrix == by_walks.total);
      CHECK(by_matrix == f[n]);
    }
  }
}

TEST_CASE("(2,2) partition function reproduces the sequence") {
  PathModel m = build_model(CaseTag::B22);
  Trajectory t = seq_22(7);
  for (long n = 0; n <= 7; ++n)
    CHECK(mul(partition_fn_matrix(m, 2 * n), m.base) == t.at(n));
}

TEST_CASE("(1,4) partition functions reproduce the even subsequences") {
  Trajectory txy = seq_14(SeedData::xy, 9);
  PathModel mxy = build_model(CaseTag::B14_xy);
  CHECK(mxy.u_offset == 0);
  for (long n = 0; n <= 4; ++n)
    CHECK(mul(partition_fn_matrix(mxy, n), mxy.base) == txy.u_at(n));

  Trajectory tXY = seq_14(SeedData::XY, 9);
  PathModel mXY = build_model(CaseTag::B14_XY);
  CHECK(mXY.u_offset == 1);
  CHECK(mXY.base == tXY.u_at(1));
  for (long n = 0; n <= 3; ++n)
    CHECK(mul(partition_fn_matrix(mXY, n), mXY.base) == tXY.u_at(n + 1));
}

TEST_CASE("walk weights recover the recursion data") {
  Trajectory t22 = seq_22(2);
  PathModel m22 = build_model(CaseTag::B22);
  // Up steps are free and the three down weights sum to K.
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(m22.edge[i][i + 1] == NCPoly::one());
  CHECK(add(add(m22.edge[1][0], m22.edge[2][1]), m22.edge[3][2]) == t22.k);

  for (SeedData d : {SeedData::xy, SeedData::XY}) {
    Trajectory t = seq_14(d, 5);
    PathModel m = build_model(d == SeedData::xy ? CaseTag::B14_xy
                                                : CaseTag::B14_XY);
    const NCPoly& y1 = m.edge[0][0];
    const NCPoly& y2 = m.edge[1][0];
    const NCPoly& y3 = m.edge[1][1];
    CHECK(add(y1, y3) == t.k);
    CHECK(sub(mul(y3, y1), y2) == t.c);
    CHECK(is_positive(y2));
    // The start loop advances the series base by one step.
    long b = m.u_offset;
    CHECK(mul(y1, t.u_at(b)) == t.u_at(b + 1));
  }
}

TEST_CASE("series coefficients satisfy the linear recursion") {
  for (CaseTag tag : {CaseTag::B22, CaseTag::B14_xy, CaseTag::B14_XY}) {
    CAPTURE(to_string(tag));
    Trajectory t = tag == CaseTag::B22
                       ? seq_22(2)
                       : seq_14(tag == CaseTag::B14_xy ? SeedData::xy
                                                       : SeedData::XY,
                                3);
    std::vector<NCPoly> f = continued_fraction_series(tag, 6);
    for (long n = 2; n <= 6; ++n) {
      NCPoly residue = add(sub(f[n], mul(t.k, f[n - 1])), mul(t.c, f[n - 2]));
      CHECK(residue.is_zero());
    }
  }
}

TEST_CASE("(1,4) monomial counts match the walk products until words merge") {
  Trajectory t = seq_14(SeedData::xy, 9);
  PathModel m = build_model(CaseTag::B14_xy);
  for (long n = 0; n <= 3; ++n) {
    PathListing l = partition_fn_enumerate(m, n);
    CHECK(l.monomials == t.u_at(n).terms());
  }
  // From u_4 on, distinct walks can produce the same word; the products
  // then overcount the stored terms but never undercount them.
  PathListing l4 = partition_fn_enumerate(m, 4);
  CHECK(l4.monomials > t.u_at(4).terms());
  CHECK(t.u_at(4).terms() == 204);
}

TEST_CASE("series times 1 - tK + t^2 C leaves the two-term numerator") {
  for (CaseTag tag : {CaseTag::B22, CaseTag::B14_xy, CaseTag::B14_XY}) {
    VerifyReport rep = series_multiply_check(tag, continued_fraction_series(tag, 8));
    CHECK(rep.all_passed());
    CHECK(rep.entries().size() == 9);
  }
}

TEST_CASE("numerator check on a truncated series is vacuously fine") {
  std::vector<NCPoly> stub = {NCPoly::one()};
  VerifyReport rep = series_multiply_check(CaseTag::B22, stub);
  CHECK(rep.all_passed());
  CHECK(rep.entries().size() == 1);
}

TEST_CASE("numerator check flags a corrupted coefficient") {
  std::vector<NCPoly> f = continued_fraction_series(CaseTag::B14_xy, 5);
  f[3].add_term(parse_word("x^7"), 2);
  VerifyReport rep = series_multiply_check(CaseTag::B14_xy, f);
  CHECK_FALSE(rep.all_passed());
  bool flagged = false;
  for (const CheckEntry& e : rep.entries())
    if (!e.pass && (e.index == 3 || e.index == 4) && !e.detail.empty())
      flagged = true;
  CHECK(flagged);
}

TEST_CASE("enumeration budget is enforced") {
  PathModel m = build_model(CaseTag::B22);
  CHECK_THROWS_AS(partition_fn_enumerate(m, 6, 10), BudgetExceeded);
}

TEST_CASE("no model for the translated cases") {
  CHECK_THROWS_AS(build_model(CaseTag::B41_xy), UnsupportedCase);
  CHECK_THROWS_AS(build_model(CaseTag::B41_XY), UnsupportedCase);
  CHECK_THROWS_AS(continued_fraction_series(CaseTag::B41_XY, 3),
                  UnsupportedCase);
}

TEST_CASE("negative walk lengths are rejected") {
  PathModel m = build_model(CaseTag::B14_XY);
  CHECK_THROWS_AS(partition_fn_matrix(m, -1), IndexUnavailable);
  CHECK_THROWS_AS(partition_fn_enumerate(m, -2), IndexUnavailable);
}
