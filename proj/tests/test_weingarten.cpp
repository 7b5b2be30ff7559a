#include <doctest.h>

#include <random>

#include "lvr/errors.hpp"
#include "lvr/weingarten.hpp"

using namespace lvr;

namespace {
PolyZ poly(std::initializer_list<int> cs) {
  std::vector<BigInt> v;
  for (int c : cs) v.push_back(c);
  return PolyZ(std::move(v));
}
RationalFunctionOfN rf(std::initializer_list<int> num, std::initializer_list<int> den) {
  return RationalFunctionOfN(poly(num), poly(den));
}
}  // namespace

TEST_CASE("printed Weingarten table") {
  CHECK(weingarten_symbolic(IntegerPartition({1})) == rf({1}, {0, 1}));           // 1/N
  CHECK(weingarten_symbolic(IntegerPartition({2})) == rf({-1}, {0, -1, 0, 1}));   // -1/(N^3-N)
  CHECK(weingarten_symbolic(IntegerPartition({1, 2})) ==
        rf({-1}, {4, 0, -5, 0, 1}));  // -1/((N^2-1)(N^2-4))
  CHECK(weingarten_symbolic(IntegerPartition({3})) ==
        rf({2}, {0, 4, 0, -5, 0, 1}));  // 2/(N(N^2-1)(N^2-4))
  CHECK(weingarten_symbolic(IntegerPartition({1, 1, 1})) ==
        rf({-2, 0, 1}, {0, 4, 0, -5, 0, 1}));  // (N^2-2)/(N(N^2-1)(N^2-4))
  // The Gram system forces +1/(N^2-1); the printed -1/(N^2-1) fails unitarity.
  CHECK(weingarten_symbolic(IntegerPartition({1, 1})) == rf({1}, {-1, 0, 1}));
}

TEST_CASE("pointwise evaluations") {
  CHECK(weingarten_eval(IntegerPartition({1}), 5) == BigRat(1, 5));
  CHECK(weingarten_eval(IntegerPartition({2}), 3) == BigRat(-1, 24));
  CHECK(weingarten_eval(IntegerPartition({1, 1, 1}), 3) == BigRat(7, 120));
  CHECK_THROWS_AS(weingarten_eval(IntegerPartition({1, 1}), 1), SingularError);
  CHECK_THROWS_AS(weingarten_eval(IntegerPartition({1}), 0), DomainError);
}

TEST_CASE("class Gram matrix basics") {
  auto g1 = class_gram_matrix(1);
  CHECK(g1.entries.size() == 1);
  CHECK(g1.entries[0][0] == PolyZ::monomial(1));  // N

  auto g3 = class_gram_matrix(3);
  CHECK(g3.basis.size() == 3);
  for (std::size_t i = 0; i < g3.basis.size(); ++i)
    for (std::size_t j = 0; j < g3.basis.size(); ++j) {
      CHECK(g3.entries[i][j] == g3.entries[j][i]);
      CHECK(g3.entries[i][j].degree() <= 3);
    }
  CHECK_THROWS_AS(class_gram_matrix(99), CapError);
}

TEST_CASE("full-group Gram entries at k=2") {
  // over S_2 the pairing N^{#cycles(sigma tau^{-1})} is N^2 on the diagonal
  // and N off it
  auto s2 = enumerate_symmetric_group(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      int cycles = cycle_type(compose(s2[i], inverse(s2[j]))).size();
      CHECK(cycles == (i == j ? 2 : 1));
    }
}

TEST_CASE("full-group Gram consistency at small k") {
  // The matrix Wg(sigma tau^{-1}) is the inverse of N^{#cycles(sigma tau^{-1})}
  // on the full group, checked at integer N >= k.
  for (int k = 1; k <= 4; ++k) {
    auto group = enumerate_symmetric_group(k);
    const auto& table = weingarten_table(k);
    for (int N = k; N <= k + 3; ++N) {
      BigInt bigN(N);
      std::vector<std::vector<BigRat>> gram(group.size(), std::vector<BigRat>(group.size()));
      std::vector<std::vector<BigRat>> wg(group.size(), std::vector<BigRat>(group.size()));
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j) {
          auto ct = cycle_type(compose(group[i], inverse(group[j])));
          BigInt pow = 1;
          for (int c = 0; c < ct.size(); ++c) pow *= bigN;
          gram[i][j] = BigRat(pow);
          wg[i][j] = table.value(ct).evaluate_at(bigN);
        }
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j) {
          BigRat dot = 0;
          for (std::size_t l = 0; l < group.size(); ++l) dot += gram[i][l] * wg[l][j];
          CHECK(dot == BigRat(i == j ? 1 : 0));
        }
    }
  }
}

TEST_CASE("haar moment basics") {
  std::vector<int> zero{0};
  CHECK(haar_moment(zero, zero, zero, zero, 4) == BigRat(1, 4));
  // delta_{kl} prefactor
  CHECK(haar_moment(zero, zero, {}, {}, 4) == BigRat(0));
  // |U00|^2 |U11|^2 at N=3 equals Wg((1,1),3) = 1/8
  std::vector<int> ab{0, 1};
  CHECK(haar_moment(ab, ab, ab, ab, 3) == BigRat(1, 8));
  // |U00|^4 = 2/(N(N+1))
  std::vector<int> aa{0, 0};
  CHECK(haar_moment(aa, aa, aa, aa, 3) == BigRat(2, 12));
  CHECK_THROWS_AS(haar_moment(ab, ab, ab, ab, 1), DomainError);  // index out of range
  std::vector<int> big{0, 1, 2};
  CHECK_THROWS_AS(haar_moment(big, big, big, big, 2), DomainError);
}

TEST_CASE("unitarity row sums are exact") {
  for (int N = 2; N <= 6; ++N)
    for (int a = 0; a < N; ++a) {
      BigRat sum = 0;
      for (int b = 0; b < N; ++b) {
        std::vector<int> row{a}, col{b};
        sum += haar_moment(row, col, row, col, N);
      }
      CHECK(sum == BigRat(1));
    }
}

TEST_CASE("higher unitarity contraction at k=2") {
  // sum_b1 int U_{a b1} U*_{c b1} U_{a b2} U*_{c b2} = delta_{ac} int U_{a b2} U*_{c b2}
  for (int N = 2; N <= 4; ++N)
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        for (int b2 = 0; b2 < 2; ++b2) {
          BigRat lhs = 0;
          for (int b1 = 0; b1 < N; ++b1) {
            std::vector<int> rows{a, a}, cols{b1, b2}, rows2{c, c}, cols2{b1, b2};
            lhs += haar_moment(rows, cols, rows2, cols2, N);
          }
          std::vector<int> ra{a}, cb{b2}, rc{c};
          BigRat rhs = (a == c) ? haar_moment(ra, cb, rc, cb, N) : BigRat(0);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("haar moment is a class function of index relabelings") {
  const int N = 4;
  std::mt19937 rng(11);
  std::vector<int> a{0, 1}, b{2, 0}, c{0, 1}, d{2, 0};
  BigRat reference = haar_moment(a, b, c, d, N);
  std::vector<int> relabel{0, 1, 2, 3};
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(relabel.begin(), relabel.end(), rng);
    auto apply = [&](std::vector<int> v) {
      for (auto& x : v) x = relabel[static_cast<std::size_t>(x)];
      return v;
    };
    CHECK(haar_moment(apply(a), apply(b), apply(c), apply(d), N) == reference);
  }
}
