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

#include "ncl/ncpoly.hpp"

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

NCPoly random_poly(std::mt19937& rng, int max_terms, int max_letters) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> cf(-4, 4);
  NCPoly p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_word(rng, max_letters), cf(rng));
  return p;
}

}  // namespace

TEST_CASE("zero and constants") {
  NCPoly z;
  CHECK(z.is_zero());
  CHECK(to_string(z) == "0");
  CHECK(parse_poly("0") == z);
  CHECK(add(z, z) == z);
  CHECK(NCPoly::constant(0) == z);
  CHECK(to_string(NCPoly::one()) == "1");
  CHECK(to_string(NCPoly::constant(-3)) == "-3");
}

TEST_CASE("add_term cancels to zero") {
  NCPoly p;
  p.add_term(parse_word("x"), 2);
  p.add_term(parse_word("x"), -2);
  CHECK(p.is_zero());
}

TEST_CASE("text form round trips and is canonical") {
  NCPoly p = parse_poly("2*x y^-1 + x^2 - y");
  CHECK(to_string(p) == "-y + x^2 + 2*x y^-1");
  CHECK(parse_poly(to_string(p)) == p);
  CHECK(p.coeff(parse_word("x y^-1")) == 2);
  CHECK(p.coeff(parse_word("y")) == -1);
  CHECK(p.coeff(parse_word("y^-1")) == 0);

  CHECK(to_string(parse_poly("1 + x")) == "1 + x");
  CHECK(to_string(parse_poly("x - 1")) == "-1 + x");
  CHECK(to_string(parse_poly("3*1 + x")) == "3 + x");

  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    NCPoly q = random_poly(rng, 6, 8);
    CHECK(parse_poly(to_string(q)) == q);
  }
}

TEST_CASE("parse rejects malformed polynomials") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("+ x"), ParseError);
  CHECK_THROWS_AS(parse_poly("2 x"), ParseError);
  CHECK_THROWS_AS(parse_poly("a*x"), ParseError);
  CHECK_THROWS_AS(parse_poly("2*"), ParseError);
  CHECK_THROWS_AS(parse_poly("x + + y"), ParseError);
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937 rng(29);
  for (int t = 0; t < 60; ++t) {
    NCPoly a = random_poly(rng, 5, 6);
    NCPoly b = random_poly(rng, 5, 6);
    NCPoly c = random_poly(rng, 5, 6);
    CHECK(add(a, b) == add(b, a));
    CHECK(sub(a, a).is_zero());
    CHECK(add(a, neg(a)).is_zero());
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    CHECK(mul(NCPoly::one(), a) == a);
    CHECK(scale(a, 3) == add(a, add(a, a)));
  }
}

TEST_CASE("multiplication is genuinely noncommutative") {
  NCPoly p = parse_poly("x");
  NCPoly q = parse_poly("y");
  CHECK_FALSE(mul(p, q) == mul(q, p));
  CHECK(mul(p, q) == parse_poly("x y"));
}

TEST_CASE("binomial products") {
  CHECK(mul(parse_poly("1 + y"), parse_poly("1 - y")) == parse_poly("1 - y^2"));
  CHECK(pow(parse_poly("1 + x"), 2) == parse_poly("1 + 2*x + x^2"));
  CHECK(pow(parse_poly("x y"), 0) == NCPoly::one());
  CHECK(pow(parse_poly("1 + x"), 3) == parse_poly("1 + 3*x + 3*x^2 + x^3"));
}

TEST_CASE("word multiplication overloads") {
  NCPoly p = parse_poly("1 + y^2");
  Word w = parse_word("x^-1");
  CHECK(mul(p, w) == parse_poly("x^-1 + y^2 x^-1"));
  CHECK(mul(w, p) == parse_poly("x^-1 + x^-1 y^2"));
  CHECK(mul(p, w) == mul(p, NCPoly::monomial(w)));
}

TEST_CASE("unit inversion") {
  CHECK(inv_unit(parse_poly("x y^-1")) == parse_poly("y x^-1"));
  CHECK(inv_unit(parse_poly("-x")) == parse_poly("-x^-1"));
  CHECK(mul(parse_poly("-x"), inv_unit(parse_poly("-x"))) == NCPoly::one());
  CHECK_THROWS_AS(inv_unit(parse_poly("1 + x")), NotAUnit);
  CHECK_THROWS_AS(inv_unit(parse_poly("2*x")), NotAUnit);
  CHECK_THROWS_AS(inv_unit(NCPoly()), NotAUnit);
}

TEST_CASE("star on polynomials") {
  // star of (1 + y^2) x^-1, worked out by hand
  NCPoly r2 = parse_poly("x^-1 + y^2 x^-1");
  NCPoly expected = parse_poly("y x y^-1 x^-1 y^-1 + y x y^-1 x y^-1");
  CHECK(star(r2) == expected);

  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    NCPoly a = random_poly(rng, 4, 6);
    NCPoly b = random_poly(rng, 4, 6);
    CHECK(star(mul(a, b)) == mul(star(b), star(a)));
    CHECK(star(star(a)) == a);
    CHECK(star(add(a, b)) == add(star(a), star(b)));
  }
}

TEST_CASE("coefficient predicates") {
  CHECK(is_positive(parse_poly("1 + 2*x")));
  CHECK_FALSE(is_positive(parse_poly("1 - x")));
  CHECK(is_positive(NCPoly()));
  CHECK(is_zero_one(parse_poly("1 + x + x y")));
  CHECK_FALSE(is_zero_one(parse_poly("1 + 2*x")));
  CHECK(max_abs_coeff(parse_poly("x - 5*y")) == 5);
  CHECK(max_abs_coeff(NCPoly()) == 0);
}

TEST_CASE("sorted terms follow shortlex") {
  NCPoly p = parse_poly("x y^-1 + y + x^2 + 1");
  auto v = p.sorted_terms();
  REQUIRE(v.size() == 4);
  CHECK(v[0].first == Word());
  CHECK(v[1].first == parse_word("y"));
  CHECK(v[2].first == parse_word("x^2"));
  CHECK(v[3].first == parse_word("x y^-1"));
}
