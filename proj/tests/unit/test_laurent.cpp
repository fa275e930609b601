#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hecke/laurent.hpp"

using namespace hecke;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-3, 3), count(0, 4);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(exp(rng), coeff(rng));
  return p;
}

bool canonical(const LaurentPoly& p) {
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    if (p.terms()[i].coeff == 0) return false;
    if (i > 0 && p.terms()[i - 1].exp >= p.terms()[i].exp) return false;
  }
  return true;
}

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vinv = LaurentPoly::monomial(-1);

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("sums") {
  CHECK(v + vinv == LaurentPoly{{1, 1}, {-1, 1}});
  CHECK((v + vinv) + (-v - vinv) == LaurentPoly());
  CHECK(((v + vinv) + (-v - vinv)).terms().empty());
  CHECK((LaurentPoly{{2, 1}, {0, 1}} + LaurentPoly{{0, 1}, {-2, 1}}) == LaurentPoly{{2, 1}, {0, 2}, {-2, 1}});
}

TEST_CASE("products") {
  const LaurentPoly q = v + vinv;
  CHECK(q * q == LaurentPoly{{2, 1}, {0, 2}, {-2, 1}});
  CHECK(q * (q * q) == LaurentPoly{{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});
  CHECK(q * q * q != LaurentPoly{{3, 1}, {1, 2}, {-1, 2}, {-3, 1}});
  CHECK((LaurentPoly() * q).is_zero());
  CHECK(mul(q, 1) == q);
  CHECK(add(q, -q).is_zero());
}

TEST_CASE("bar, beta and evaluation") {
  CHECK(bar(LaurentPoly{{1, 1}, {3, 2}}) == LaurentPoly{{-1, 1}, {-3, 2}});
  CHECK(bar(v + vinv) == v + vinv);
  CHECK(beta_scalar(v) == -vinv);
  CHECK(beta_scalar(LaurentPoly::monomial(2)) == LaurentPoly::monomial(-2));
  CHECK(beta_scalar(v + vinv) == -vinv - v);
  CHECK(eval_at_one(v + vinv) == 2);
  CHECK(eval_at_one(LaurentPoly{{0, 1}, {2, 1}}) == 2);
  CHECK(eval_at_one(LaurentPoly()) == 0);
}

TEST_CASE("coefficient inspection") {
  const LaurentPoly p{{2, 1}, {0, 2}, {-2, 1}};
  CHECK(p.coeff_at(0) == 2);
  CHECK(p.coeff_at(1) == 0);
  CHECK(p.degree() == 2);
  CHECK(p.valuation() == -2);
  CHECK(p.is_nonneg());
  CHECK(p.is_bar_symmetric());
  CHECK_FALSE(v.is_bar_symmetric());
  CHECK_FALSE((v - 1).is_nonneg());
  CHECK((-LaurentPoly::monomial(3)).is_unit());
  CHECK_FALSE(LaurentPoly(2).is_unit());
  CHECK_THROWS_AS(LaurentPoly().degree(), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly().valuation(), std::domain_error);
}

TEST_CASE("ring axioms and morphisms on random samples") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(canonical(a + b));
    CHECK(canonical(a * b));
    CHECK(canonical(a - a));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(bar(bar(a)) == a);
    CHECK(beta_scalar(beta_scalar(a)) == a);
    CHECK(bar(a * b) == bar(a) * bar(b));
    CHECK(beta_scalar(a * b) == beta_scalar(a) * beta_scalar(b));
    CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
    CHECK(eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b));
    LaurentPoly acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
    LaurentPoly sc = a;
    sc.add_scaled(b, 3, 2);
    CHECK(sc == a + b * LaurentPoly::monomial(2, 3));
  }
}

TEST_CASE("exact division") {
  const LaurentPoly q = v + vinv;
  CHECK(*divide_exact(q * q * v, q) == q * v);
  CHECK(*divide_exact(LaurentPoly::monomial(5, 6), LaurentPoly::monomial(2, -3)) == LaurentPoly::monomial(3, -2));
  CHECK_FALSE(divide_exact(q, LaurentPoly(2)));
  CHECK_FALSE(divide_exact(LaurentPoly(1), q));
  CHECK(divide_exact(LaurentPoly(), q)->is_zero());
  CHECK_THROWS_AS(divide_exact(q, LaurentPoly()), std::domain_error);
}

TEST_CASE("text and JSON") {
  CHECK(LaurentPoly{{2, 1}, {0, 2}, {-2, 1}}.to_string() == "v^2+2+v^-2");
  CHECK((-v + 3).to_string() == "-v+3");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(to_json(v + vinv).dump() == R"({"-1":1,"1":1})");
  CHECK(to_json(LaurentPoly{{10, 1}, {-2, -4}, {3, 7}}).dump() == R"({"-2":-4,"3":7,"10":1})");
  const Integer big = Integer(1) << 80;
  const LaurentPoly p = LaurentPoly::monomial(1, big) - 1;
  const auto j = to_json(p);
  CHECK(j["1"].is_string());
  CHECK(laurent_from_json(j) == p);
  CHECK(laurent_from_json(nlohmann::ordered_json::parse(R"({"-1":1,"1":1})")) == v + vinv);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::ordered_json::parse(R"({"x":1})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::ordered_json::parse(R"({"0":0})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::ordered_json::parse("[1]")), std::invalid_argument);
}

TEST_CASE("ordering and hashing are consistent with equality") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(((a <=> b) == 0) == (a == b));
    if (a == b) CHECK(a.hash() == b.hash());
  }
  CHECK(std::hash<LaurentPoly>{}(v + vinv) == (vinv + v).hash());
}

}  // TEST_SUITE
