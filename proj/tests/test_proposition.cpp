#include <doctest.h>

#include <random>

#include "cld/errors.hpp"
#include "cld/json_io.hpp"
#include "cld/proposition.hpp"
#include "test_util.hpp"

using cld::Proposition;
using cld::Rational;

TEST_CASE("construction validates nonnegativity and normalization") {
  CHECK_NOTHROW(Proposition({Rational(1, 2), Rational(1, 2)}));
  // the symmetric family member at C = 1/8
  CHECK_NOTHROW(Proposition(
      {Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(3, 8)}));
  CHECK_THROWS_AS(Proposition({Rational(1, 2), Rational(1, 2), Rational(1, 2),
                               Rational(-1, 2)}),
                  cld::NegativeEntryError);
  CHECK_THROWS_AS(Proposition({Rational(1, 2), Rational(1, 4)}),
                  cld::NotNormalizedError);
  CHECK_THROWS_AS(Proposition({}), cld::EmptyError);
  CHECK_THROWS_AS(Proposition({Rational(2)}), cld::NotNormalizedError);
}

TEST_CASE("uniform") {
  CHECK(Proposition::uniform(1) == Proposition({Rational(1)}));
  CHECK(Proposition::uniform(2) ==
        Proposition({Rational(1, 2), Rational(1, 2)}));
  CHECK(Proposition::uniform(4).str() == "[1/4, 1/4, 1/4, 1/4]");
  CHECK_THROWS_AS(Proposition::uniform(0), cld::EmptyError);
}

TEST_CASE("distance basics") {
  const Proposition a({Rational(1), Rational(0), Rational(0), Rational(0)});
  const Proposition b({Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(cld::distance(a, a) == Rational(0));
  CHECK(cld::distance(a, b) == Rational(1));
  CHECK_THROWS_AS(cld::distance(a, Proposition::uniform(2)),
                  cld::ShapeMismatchError);
}

TEST_CASE("distance on the symmetric family is 2|C1 - C2|") {
  const auto family = [](const Rational& c) {
    const Rational q(1, 4);
    return Proposition({q + c, q - c, q - c, q + c});
  };
  const std::vector<Rational> cs = {Rational(-1, 4), Rational(-1, 8),
                                    Rational(0), Rational(1, 8), Rational(1, 4)};
  for (const auto& c1 : cs)
    for (const auto& c2 : cs)
      CHECK(cld::distance(family(c1), family(c2)) == Rational(2) * (c1 - c2).abs());
}

TEST_CASE("distance is a metric on random rational triples") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Proposition a = cld::testutil::random_proposition(rng, n);
    const Proposition b = cld::testutil::random_proposition(rng, n);
    const Proposition c = cld::testutil::random_proposition(rng, n);
    const Rational dab = cld::distance(a, b);
    CHECK(dab >= Rational(0));
    CHECK(dab <= Rational(1));
    CHECK(dab == cld::distance(b, a));
    CHECK(cld::distance(a, c) <= dab + cld::distance(b, c));
    CHECK((a == b) == (dab == Rational(0)));
  }
}

TEST_CASE("serialization round-trips exactly") {
  const Proposition p(
      {Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(3, 8)});
  const cld::json j = cld::to_json(p);
  CHECK(j.dump() == R"({"probs":["3/8","1/8","1/8","3/8"]})");
  CHECK(cld::proposition_from_json(j) == p);

  // unreduced and integer spellings parse, emission is lowest terms
  const cld::json loose = cld::json::parse(R"({"probs":["2/8","6/8","0/3"]})");
  CHECK(cld::to_json(cld::proposition_from_json(loose)).dump() ==
        R"({"probs":["1/4","3/4","0"]})");

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Proposition q = cld::testutil::random_proposition(rng, 1 + static_cast<int>(rng() % 6));
    CHECK(cld::proposition_from_json(cld::to_json(q)) == q);
  }

  CHECK_THROWS_AS(cld::proposition_from_json(cld::json::parse(
                      R"({"probs":["1/2","1/4"]})")),
                  cld::NotNormalizedError);
  CHECK_THROWS_AS(cld::proposition_from_json(cld::json::parse(R"({"p":[]})")),
                  cld::Error);
}
