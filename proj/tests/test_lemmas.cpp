#include <catch2/catch_amalgamated.hpp>

#include "pathbetti/ideal.hpp"
#include "pathbetti/path_family.hpp"

using namespace pathbetti;

// Structural identities of the path-ideal family.  Throughout, in the
// ring on N = n+m variables:
//   I = (f_1..f_{n+1}),  J = (f_1..f_n),  A = (f_1..f_{n-m}),
//   B = (f_i / x_n : the f_i divisible by x_n),  f = f_{n+1}.

namespace {

struct Family {
  int n, m, N;
  MonomialIdeal I, J, A, B;
  Monomial f, xn;

  Family(int n_, int m_)
      : n(n_),
        m(m_),
        N(n_ + m_),
        I(path_ideal(n_, m_)),
        J(path_ideal(n_ - 1, m_, n_ + m_)),
        A(path_ideal(n_ - m_ - 1, m_, n_ + m_)),
        B(reduced_tail_ideal(n_, m_)),
        f(path_generator(n_, m_, n_ + 1)),
        xn(Monomial::variable(n_ + m_, n_)) {}
};

} // namespace

TEST_CASE("colon and intersection distribute over sums") {
  MonomialIdeal I = path_ideal(1, 2, 6);              // x1x2, x2x3
  MonomialIdeal J(6, {Monomial::variable(6, 5) * Monomial::variable(6, 6)});
  MonomialIdeal L = path_ideal(2, 2, 6);
  Monomial f = Monomial::variable(6, 2) * Monomial::variable(6, 5);

  CHECK(colon(sum(I, J), f) == sum(colon(I, f), colon(J, f)));
  CHECK(intersect(sum(I, J), L) == sum(intersect(I, L), intersect(J, L)));

  // disjoint supports turn intersection into product
  CHECK(intersect(I, J) == product(I, J));

  // a variable outside the support drops out of a colon
  MonomialIdeal K = path_ideal(2, 2, 5);
  Monomial g = Monomial::variable(5, 1);
  CHECK(colon(K, Monomial::variable(5, 5) * g) == colon(K, g));
}

TEST_CASE("colon of a power by the last generator") {
  for (int m : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      MonomialIdeal I = path_ideal(n, m);
      Monomial f = path_generator(n, m, n + 1);
      for (int t = 1; t <= 3; ++t)
        for (int s = 0; s < t; ++s)
          CHECK(colon(power(I, t), f.pow(s)) == power(I, t - s));
      // colon by the full power gives the unit ideal
      CHECK(colon(power(I, 2), f.pow(2)) == MonomialIdeal::unit(I.ambient()));
    }
}

TEST_CASE("colon of the shorter family by the last generator") {
  // J^t : f^s = A^(t-s+1) (A + (x_n))^(s-1) + x_n^s J^(t-s)
  for (int m : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Family F(n, m);
      MonomialIdeal Xn(F.N, {F.xn});
      for (int t = 1; t <= 3; ++t)
        for (int s = 1; s <= t; ++s) {
          MonomialIdeal lhs = colon(power(F.J, t), F.f.pow(s));
          MonomialIdeal rhs =
              sum(product(power(F.A, t - s + 1), power(sum(F.A, Xn), s - 1)),
                  multiply(power(F.J, t - s), F.xn.pow(s)));
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("peeling the last generator off a power") {
  // J^s I^t = J^s f^t + J^(s+1) I^(t-1), with intersection
  // J^s f^t  cap  J^(s+1) I^(t-1)  =  f^t J^s (A + (x_n))
  for (int m : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Family F(n, m);
      MonomialIdeal Xn(F.N, {F.xn});
      for (int s = 0; s <= 2; ++s)
        for (int t = 1; t + s <= 3; ++t) {
          MonomialIdeal left = multiply(power(F.J, s), F.f.pow(t));
          MonomialIdeal right = product(power(F.J, s + 1), power(F.I, t - 1));
          CHECK(product(power(F.J, s), power(F.I, t)) == sum(left, right));
          CHECK(intersect(left, right) ==
                multiply(product(power(F.J, s), sum(F.A, Xn)), F.f.pow(t)));
        }
    }
}

TEST_CASE("splitting the shorter family at its last variable") {
  // J^s (A + (x_n)) = A^(s+1) + x_n J^s, and
  // A^(s+1)  cap  x_n J^s  =  x_n A^(s+1)
  for (int m : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Family F(n, m);
      MonomialIdeal Xn(F.N, {F.xn});
      for (int s = 0; s <= 2; ++s) {
        MonomialIdeal lhs = product(power(F.J, s), sum(F.A, Xn));
        MonomialIdeal rhs =
            sum(power(F.A, s + 1), multiply(power(F.J, s), F.xn));
        CHECK(lhs == rhs);
        CHECK(intersect(power(F.A, s + 1), multiply(power(F.J, s), F.xn)) ==
              multiply(power(F.A, s + 1), F.xn));
      }
    }
}

TEST_CASE("tail decomposition of the family") {
  // I = J + (f) and J = A + x_n B
  for (int m : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Family F(n, m);
      CHECK(F.I == sum(F.J, MonomialIdeal(F.N, {F.f})));
      CHECK(F.J == sum(F.A, multiply(F.B, F.xn)));
    }
}
