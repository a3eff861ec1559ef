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

#include <random>

#include "ncl/commpoly.hpp"
#include "ncl/division.hpp"

using namespace ncl;

namespace {

Word random_word(std::mt19937& rng, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int k = pick(rng);
    w.append(k < 2 ? Gen::x : Gen::y, k % 2 == 0 ? 1 : -1);
  }
  return w;
}

NCPoly random_poly(std::mt19937& rng, int min_terms, int max_terms, int max_letters) {
  std::uniform_int_distribution<int> nt(min_terms, max_terms);
  std::uniform_int_distribution<int> cf(1, 3);
  std::uniform_int_distribution<int> sg(0, 1);
  NCPoly p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    p.add_term(random_word(rng, max_letters), cf(rng) * (sg(rng) ? 1 : -1));
  }
  return p;
}

}  // namespace

TEST_CASE("commutative exact division") {
  CommPoly one = CommPoly::constant(1);
  CommPoly x = CommPoly::var_x();
  CommPoly y = CommPoly::var_y();

  CommPoly a = add(one, y);            // 1 + y
  CommPoly b = add(one, x);            // 1 + x
  CHECK(exact_divide(mul(a, b), b) == a);
  CHECK(exact_divide(a, a) == one);
  CHECK(exact_divide(CommPoly(), a).is_zero());

  // Laurent monomials are units
  CommPoly xin = CommPoly::monomial(-1, 0);
  CHECK(exact_divide(add(xin, y), xin) == add(one, mul(x, y)));
  CHECK(exact_divide(b, CommPoly::monomial(0, 1)) ==
        add(CommPoly::monomial(0, -1), CommPoly::monomial(1, -1)));
}

TEST_CASE("commutative division failures") {
  CommPoly one = CommPoly::constant(1);
  CommPoly x = CommPoly::var_x();
  CommPoly y = CommPoly::var_y();
  // (1+x)/(1+y) spirals down through ever-lower degrees until the guard trips
  CHECK_THROWS_AS(exact_divide(add(one, x), add(one, y)), DivisionNotExact);
  // (2+x)/(1+x) keeps dividing coefficients but never terminates either
  CHECK_THROWS_AS(exact_divide(add(CommPoly::constant(2), x), add(one, x)), DivisionNotExact);
  // integer coefficient obstruction
  CHECK_THROWS_AS(exact_divide(add(one, x), CommPoly::constant(2)), DivisionNotExact);
  CHECK_THROWS_AS(exact_divide(one, CommPoly()), DivisionNotExact);
  // divisible coefficients are fine
  CHECK(exact_divide(add(CommPoly::constant(2), mul(CommPoly::constant(2), x)),
                     CommPoly::constant(2)) == add(one, x));
}

TEST_CASE("commutative division randomized round trip") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), n(1, 5);
  auto rand_comm = [&]() {
    CommPoly p;
    int k = n(rng);
    for (int i = 0; i < k; ++i) p.add_term(e(rng), e(rng), c(rng));
    return p;
  };
  int done = 0;
  while (done < 60) {
    CommPoly s = rand_comm(), d = rand_comm();
    if (d.is_zero() || s.is_zero()) continue;
    ++done;
    CHECK(exact_divide(mul(s, d), d) == s);
  }
}

TEST_CASE("right division unit fast path") {
  NCPoly p = parse_poly("x y + 2*y^2 - x^-1");
  NCPoly u = parse_poly("-y^-1");
  CHECK(right_divide(p, u) == mul(p, inv_unit(u)));
  CHECK(mul(right_divide(p, u), u) == p);
}

TEST_CASE("right division round trips") {
  NCPoly s = parse_poly("x - y^-1");
  NCPoly q = parse_poly("1 + y + x y");
  CHECK(right_divide(mul(s, q), q) == s);

  // quotient whose lower term only surfaces after the top one cancels
  NCPoly s2 = parse_poly("x^2 + x + 1");
  NCPoly q2 = parse_poly("x - 1");
  CHECK(right_divide(mul(s2, q2), q2) == s2);

  std::mt19937 rng(61);
  int done = 0;
  while (done < 50) {
    NCPoly s3 = random_poly(rng, 1, 3, 5);
    NCPoly q3 = random_poly(rng, 2, 3, 5);
    if (s3.is_zero() || q3.is_zero()) continue;
    ++done;
    CHECK(right_divide(mul(s3, q3), q3) == s3);
  }
}

TEST_CASE("right division zero corners") {
  CHECK(right_divide(NCPoly(), parse_poly("1 + x")).is_zero());
  CHECK(right_divide(NCPoly(), NCPoly()).is_zero());
  CHECK_THROWS_AS(right_divide(parse_poly("x"), NCPoly()), NoSolutionInSupport);
}

TEST_CASE("right division reports no solution") {
  CHECK_THROWS_AS(right_divide(parse_poly("x"), parse_poly("1 + y")), NoSolutionInSupport);
  CHECK_THROWS_AS(right_divide(parse_poly("1 + x + y"), parse_poly("1 + y^2")),
                  NoSolutionInSupport);
}

TEST_CASE("right division reports non-integral solutions") {
  CHECK_THROWS_AS(right_divide(NCPoly::one(), NCPoly::constant(2)), NonIntegerSolution);
  CHECK_THROWS_AS(right_divide(parse_poly("x + x y"), parse_poly("2*1 + 2*y")),
                  NonIntegerSolution);
  // doubling the dividend repairs it
  CHECK(right_divide(parse_poly("2*x + 2*x y"), parse_poly("2*1 + 2*y")) == parse_poly("x"));
}
