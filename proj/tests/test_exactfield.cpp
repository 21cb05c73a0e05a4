#include "catch_amalgamated.hpp"

#include "fanocheck/number_field.hpp"
#include "fanocheck/ratfun.hpp"
#include "fanocheck/upoly.hpp"
#include "oracles.hpp"

using namespace fanocheck;
using namespace oracle;


TEST_CASE("rational arithmetic is exact", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 6) == Rational(2, -3));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK((Rational(3, 4) / Rational(9, 8)) == Rational(2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational square roots are found only for squares", "[rational]") {
  CHECK(*sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK(*sqrt_exact(Rational(0)) == Rational(0));
  CHECK_FALSE(sqrt_exact(Rational(2)).has_value());
  CHECK_FALSE(sqrt_exact(Rational(-4)).has_value());
  CHECK_FALSE(sqrt_exact(Rational(4, 3)).has_value());
}

TEST_CASE("generators satisfy their minimal polynomials", "[field]") {
  const FieldElement t = FieldElement::generator(fields::golden());
  CHECK(t * t == t + t.one_like());
  const FieldElement w = FieldElement::generator(fields::eisenstein());
  CHECK((w * w + w + w.one_like()).is_zero());
  const FieldElement s = FieldElement::generator(fields::golden_root());
  const FieldElement s2 = s * s;
  CHECK(s2 * s2 == s2 * Rational(4) + s.one_like());
  const FieldElement tt = fields::tau_in_golden_root();
  CHECK(tt * tt == tt + tt.one_like());
  CHECK(s2 == tt + tt + tt.one_like());
}

TEST_CASE("golden field identities", "[field]") {
  const FieldElement t = FieldElement::generator(fields::golden());
  const FieldElement one = t.one_like();
  CHECK((t + t + one) * (t + t + one) == fields::golden_element(5, 8));
  CHECK(t.inverse() == t - one);
  CHECK(*sqrt_exact(t + one) == t);
  // 20 tau + 12 has norm 12^2 + 12*20 - 20^2 = -16 < 0, so it is no square.
  CHECK_FALSE(sqrt_exact(fields::golden_element(12, 20)).has_value());
  CHECK_FALSE(sqrt_exact(fields::golden_element(4, 8)).has_value());
  CHECK_THROWS_AS(t.zero_like().inverse(), DivisionByZero);
}

TEST_CASE("reducible minimal polynomials are rejected", "[field]") {
  CHECK_THROWS_AS(make_number_field({Rational(-4), Rational(0), Rational(1)}), ReduciblePolynomial);
  CHECK_THROWS_AS(make_number_field({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)}),
                  ReduciblePolynomial);
  CHECK_NOTHROW(make_number_field({Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("elements of different fields do not mix", "[field]") {
  const FieldElement t = FieldElement::generator(fields::golden());
  const FieldElement w = FieldElement::generator(fields::eisenstein());
  CHECK_THROWS_AS(t + w, FieldMismatch);
  CHECK_THROWS_AS(t * w, FieldMismatch);
}

TEST_CASE("field axioms on random triples", "[field][property]") {
  std::mt19937 rng(20240917);
  for (const FieldRef &k : {fields::golden(), fields::eisenstein(), fields::golden_root()}) {
    const auto &minpoly = k->minpoly();
    INFO("field degree " << k->degree());
    for (int trial = 0; trial < 1000; ++trial) {
      const FieldElement a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE((a * b).coords() == naive_product(a.coords(), b.coords(), minpoly));
      if (!a.is_zero())
        REQUIRE(a * a.inverse() == a.one_like());
      if (!b.is_zero())
        REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("square roots in a number field invert squaring", "[field][property]") {
  std::mt19937 rng(7);
  for (const FieldRef &k : {fields::golden(), fields::eisenstein()})
    for (int trial = 0; trial < 50; ++trial) {
      const FieldElement a = random_element(k, rng);
      const auto r = sqrt_exact(a * a);
      REQUIRE(r.has_value());
      REQUIRE(*r * *r == a * a);
    }
}

TEST_CASE("square roots beyond degree two are refused", "[field]") {
  const FieldElement s = FieldElement::generator(fields::golden_root());
  CHECK_THROWS_AS(sqrt_exact(s), UnsupportedField);
  CHECK(*sqrt_exact(s.from_int(9)) == s.from_int(3));
}

TEST_CASE("20 tau + 12 against a bounded search", "[field]") {
  // (p + q tau)^2 = p^2 + q^2 + (2pq + q^2) tau; search p, q = a/b with |a|, b <= 40.
  bool found = false;
  for (long b = 1; b <= 40 && !found; ++b)
    for (long a = -40; a <= 40 && !found; ++a)
      for (long c = -40; c <= 40 && !found; ++c) {
        const Rational p(a, b), q(c, b);
        found = p * p + q * q == Rational(12) && Rational(2) * p * q + q * q == Rational(20);
      }
  CHECK(found == sqrt_exact(fields::golden_element(12, 20)).has_value());
}

TEST_CASE("univariate gcd and division", "[upoly]") {
  using P = UPoly<Rational>;
  const P a({Rational(-1), Rational(0), Rational(1)}); // x^2 - 1
  const P b({Rational(1), Rational(2), Rational(1)});  // x^2 + 2x + 1
  CHECK(gcd(a, b) == P({Rational(1), Rational(1)}));
  const auto [q, r] = b.divmod(P({Rational(-1), Rational(1)}));
  CHECK(q == P({Rational(3), Rational(1)}));
  CHECK(r == P::constant(Rational(4)));
  CHECK(*exact_square_root(b) * *exact_square_root(b) == b);
  CHECK_FALSE(exact_square_root(a).has_value());
}

TEST_CASE("rational functions reduce to lowest terms", "[ratfun]") {
  const FieldElement one(fields::golden(), Rational(1));
  const auto l = RationalFunction<FieldElement>::variable(one, "lambda");
  const auto o = l.one_like();
  CHECK((l * l - o) / (l - o) == l + o);
  CHECK(((l * l - o) / (l - o)).denominator().degree() == 0);
  CHECK_THROWS_AS((o / (l - o)).evaluate(one), DivisionByZero);
  CHECK((o / (l + o)).evaluate(one) == FieldElement(fields::golden(), Rational(1, 2)));
  const auto mu = RationalFunction<FieldElement>::variable(one, "mu");
  CHECK_THROWS_AS(l + mu, FieldMismatch);
  const FieldElement t = FieldElement::generator(fields::golden());
  const auto sq = sqrt_exact(l * l * l * l * l.from_scalar(t + one));
  REQUIRE(sq.has_value());
  const auto root = l * l * l.from_scalar(t);
  CHECK((*sq == root || *sq == -root));
  CHECK_FALSE(sqrt_exact(l).has_value());
}
