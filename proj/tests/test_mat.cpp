#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcat/mat.hpp"

using namespace gcat;

namespace {
// deterministic small-rational pseudo-random source
struct Rng {
  unsigned long state = 987654321;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
  Scalar scalar() { return Scalar(next(-3, 3), 1 + next(0, 2)); }
};
}  // namespace

TEST_CASE("identity solve") {
  Mat A = Mat::identity(2);
  Mat b(2, 1);
  b.at(0, 0) = Scalar(1);
  auto r = solve_linear(A, b);
  REQUIRE(r.consistent);
  CHECK(r.particular == b);
  CHECK(r.nullspace.cols() == 0);
}

TEST_CASE("zero system has full nullspace") {
  Mat A(2, 2), b(2, 1);
  auto r = solve_linear(A, b);
  REQUIRE(r.consistent);
  CHECK(r.nullspace.cols() == 2);
}

TEST_CASE("inconsistent system is reported, not thrown") {
  Mat A(2, 1);
  A.at(0, 0) = Scalar(1);
  Mat b(2, 1);
  b.at(0, 0) = Scalar(1);
  b.at(1, 0) = Scalar(1);
  auto r = solve_linear(A, b);
  CHECK_FALSE(r.consistent);
}

TEST_CASE("random rank-deficient systems: back-substitution reproduces b") {
  Rng rng;
  int solved = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    size_t n = 3;
    // build a rank-<=2 matrix as product of 3x2 and 2x3
    Mat u(n, 2), v(2, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < 2; ++j) u.at(i, j) = rng.scalar();
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < n; ++j) v.at(i, j) = rng.scalar();
    Mat A = u * v;
    // choose x and set b = A x so the system is consistent
    Mat x(n, 1);
    for (size_t i = 0; i < n; ++i) x.at(i, 0) = rng.scalar();
    Mat b = A * x;
    auto r = solve_linear(A, b);
    REQUIRE(r.consistent);
    CHECK(A * r.particular == b);
    // every nullspace column maps to zero
    if (r.nullspace.cols() > 0) CHECK((A * r.nullspace).is_zero());
    ++solved;
  }
  CHECK(solved == 1000);
}

TEST_CASE("split identity") {
  Mat e = Mat::identity(3);
  auto st = split_idempotent(e);
  CHECK(st.rank == 3);
  CHECK(st.p == Mat::identity(3));
  CHECK(st.q == Mat::identity(3));
}

TEST_CASE("split diag(1,0)") {
  Mat e(2, 2);
  e.at(0, 0) = Scalar(1);
  auto st = split_idempotent(e);
  CHECK(st.rank == 1);
  CHECK(st.q.at(0, 0) == Scalar(1));
  CHECK(st.q.at(1, 0) == Scalar(0));
  CHECK(st.p.at(0, 0) == Scalar(1));
  CHECK(st.p.at(0, 1) == Scalar(0));
}

TEST_CASE("split rank-one projector with fractional entries") {
  Mat e(2, 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) e.at(i, j) = Scalar(1, 2);
  auto st = split_idempotent(e);
  CHECK(st.rank == 1);
  CHECK(st.q * st.p == e);
  CHECK(st.p * st.q == Mat::identity(1));
}

TEST_CASE("non-idempotent input is rejected") {
  Mat e(2, 2);
  e.at(0, 1) = Scalar(1);
  e.at(1, 0) = Scalar(1);
  CHECK_THROWS_AS(split_idempotent(e), math_error);
}

TEST_CASE("random idempotents split exactly") {
  Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    // conjugate a coordinate projector by a random invertible matrix
    size_t n = 3;
    Mat g(n, n);
    do {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g.at(i, j) = rng.scalar();
    } while (!g.invertible());
    Mat proj(n, n);
    size_t r = 1 + rng.next(0, 1);
    for (size_t i = 0; i < r; ++i) proj.at(i, i) = Scalar(1);
    Mat e = g * proj * g.inverse();
    auto st = split_idempotent(e);
    CHECK(st.rank == r);
    CHECK(st.q * st.p == e);
    CHECK(st.p * st.q == Mat::identity(r));
  }
}

TEST_CASE("inverse and kernel over cyclotomics") {
  Mat A(2, 2);
  A.at(0, 0) = Scalar::root_of_unity(4, 1);
  A.at(1, 1) = Scalar(2);
  A.at(0, 1) = Scalar(1);
  Mat inv = A.inverse();
  CHECK(A * inv == Mat::identity(2));
  CHECK(inv * A == Mat::identity(2));

  Mat B(2, 2);
  B.at(0, 0) = Scalar(1);
  B.at(0, 1) = Scalar(2);
  B.at(1, 0) = Scalar(2);
  B.at(1, 1) = Scalar(4);
  CHECK(B.rank() == 1);
  Mat k = B.kernel();
  CHECK(k.cols() == 1);
  CHECK((B * k).is_zero());
}
