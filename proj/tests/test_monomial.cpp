#include <catch2/catch_amalgamated.hpp>

#include "pathbetti/monomial.hpp"

using namespace pathbetti;

TEST_CASE("construction and basics") {
  Monomial one(4);
  CHECK(one.is_one());
  CHECK(one.degree() == 0);
  CHECK(one.ambient() == 4);
  CHECK(one.to_string() == "1");

  Monomial u({2, 0, 1});
  CHECK(u.degree() == 3);
  CHECK(u.exponent(0) == 2);
  CHECK(u.exponent(2) == 1);
  CHECK(u.to_string() == "x1^2*x3");
  CHECK_FALSE(u.is_squarefree());

  CHECK(Monomial::variable(3, 2).to_string() == "x2");
  CHECK_THROWS_AS(Monomial::variable(3, 0), std::out_of_range);
  CHECK_THROWS_AS(Monomial::variable(3, 4), std::out_of_range);
  CHECK_THROWS_AS(Monomial({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(-1), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  Monomial u({1, 1, 0});
  Monomial v({0, 1, 1});
  CHECK((u * v) == Monomial({1, 2, 1}));
  CHECK(u.pow(3) == Monomial({3, 3, 0}));
  CHECK(u.pow(0).is_one());
  CHECK_THROWS_AS(u.pow(-1), std::invalid_argument);
  CHECK(Monomial::lcm(u, v) == Monomial({1, 1, 1}));
  CHECK(Monomial::gcd(u, v) == Monomial({0, 1, 0}));
  CHECK_THROWS_AS(u * Monomial(4), std::invalid_argument);
}

TEST_CASE("divisibility and quotients") {
  Monomial u({1, 1, 0});
  Monomial w({1, 2, 1});
  CHECK(u.divides(w));
  CHECK_FALSE(w.divides(u));
  CHECK(w.exact_quotient(u) == Monomial({0, 1, 1}));
  CHECK_THROWS_AS(u.exact_quotient(w), std::invalid_argument);
  // u / gcd(u, f) is total
  Monomial f({0, 3, 1});
  CHECK(u.quotient_by_gcd(f) == Monomial({1, 0, 0}));
  CHECK(u.quotient_by_gcd(u).is_one());
}

TEST_CASE("support and ordering") {
  Monomial u({2, 0, 1, 0});
  CHECK(u.support() == std::vector<int>{0, 2});
  CHECK(Monomial(3).support().empty());
  // lexicographic comparison on exponent vectors
  CHECK(Monomial({0, 1, 1}) < Monomial({1, 1, 0}));
  CHECK(Monomial({1, 0, 1}) < Monomial({1, 1, 0}));
  CHECK(Monomial({1, 1, 0}) == Monomial({1, 1, 0}));
}
