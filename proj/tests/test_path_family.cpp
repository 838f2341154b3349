#include <catch2/catch_amalgamated.hpp>

#include "pathbetti/path_family.hpp"

using namespace pathbetti;

TEST_CASE("params validation") {
  CHECK_NOTHROW(PathParams(0, 2, 0));
  CHECK_THROWS_AS(PathParams(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PathParams(-1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(PathParams(2, 2, -1), std::invalid_argument);
  CHECK(PathParams(3, 2, 1).ambient() == 5);
}

TEST_CASE("generators") {
  CHECK(path_generator(2, 2, 3).to_string() == "x3*x4");
  CHECK(path_generator(0, 3, 1).to_string() == "x1*x2*x3");
  CHECK_THROWS_AS(path_generator(2, 2, 4), std::out_of_range);
  CHECK_THROWS_AS(path_generator(2, 2, 0), std::out_of_range);
  // enlarged ambient ring keeps the same variables
  CHECK(path_generator(2, 2, 3, 6).ambient() == 6);
  CHECK(path_generator(2, 2, 3, 6).support() == std::vector<int>{2, 3});
}

TEST_CASE("path ideal family") {
  MonomialIdeal P = path_ideal(2, 2);
  CHECK(P.to_string() == "x1*x2, x2*x3, x3*x4");

  CHECK(path_ideal(0, 4).generator_count() == 1);
  CHECK(path_ideal(3, 2).generator_count() == 4);
  CHECK(path_ideal(-1, 2, 5).is_zero());
  CHECK(path_ideal(-3, 2, 5).is_zero());

  for (int m : {2, 3})
    for (int n = 0; n <= 5; ++n) {
      MonomialIdeal I = path_ideal(n, m);
      CHECK(I.generator_count() == n + 1);
      for (const auto& g : I.generators()) {
        CHECK(g.degree() == m);
        CHECK(g.is_squarefree());
      }
    }
}

TEST_CASE("reduced generators divide out x_n") {
  // g_i = f_i / x_n for the generators divisible by x_n
  CHECK(reduced_generator(3, 2, 3).to_string() == "x4");
  CHECK(reduced_generator(3, 2, 2).to_string() == "x2");
  CHECK_THROWS_AS(reduced_generator(3, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(reduced_generator(0, 2, 1), std::invalid_argument);

  for (int m : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Monomial xn = Monomial::variable(n + m, n);
      for (int i = std::max(1, n - m + 1); i <= n; ++i)
        CHECK(reduced_generator(n, m, i) * xn == path_generator(n, m, i));
    }
}

TEST_CASE("tail decomposition of the one-shorter ideal") {
  // (f_1..f_n) = (f_1..f_{n-m}) + x_n * (g_{n-m+1}..g_n)
  for (int m : {2, 3})
    for (int n = 1; n <= 6; ++n) {
      int N = n + m;
      MonomialIdeal J = path_ideal(n - 1, m, N);
      MonomialIdeal A = path_ideal(n - m - 1, m, N);
      MonomialIdeal B = reduced_tail_ideal(n, m);
      Monomial xn = Monomial::variable(N, n);
      CHECK(sum(A, multiply(B, xn)) == J);
    }
}
