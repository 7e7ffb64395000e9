#include "cliffhopf/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cliffhopf;

namespace {

Vector times(const Matrix& a, const Vector& x) { return a * x; }

Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : r) out.emplace_back(row.begin(), row.end());
  return Matrix::from_rows(out);
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("parse_scalar accepts integers and fractions") {
  CHECK(parse_scalar("7") == 7);
  CHECK(parse_scalar("-3/4") == Scalar(-3, 4));
  CHECK(parse_scalar("+6/8") == Scalar(3, 4));
  CHECK(parse_scalar(" 2/3 ") == Scalar(2, 3));
}

TEST_CASE("parse_scalar rejects floats, zero denominators and junk") {
  for (const std::string bad : {"0.5", "1e3", "1/0", "", "abc", "1/2/3", "6/-8", "1 2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
  }
}

TEST_CASE("canonical form") {
  Scalar s = parse_scalar("4/6");
  CHECK(s.get_num() == 2);
  CHECK(s.get_den() == 3);
  CHECK(to_string(Scalar(0)) == "0");
  CHECK(to_string(Scalar(5)) == "5");
}

TEST_CASE("solve_linear_system examples") {
  SUBCASE("identity") {
    auto r = solve_linear_system(rows({{1}}), {Scalar(1)});
    REQUIRE(r.unique());
    CHECK(*r.particular == Vector{1});
  }
  SUBCASE("full kernel") {
    auto r = solve_linear_system(rows({{0}}), {Scalar(0)});
    REQUIRE(r.consistent());
    CHECK(*r.particular == Vector{0});
    REQUIRE(r.nullspace_basis.size() == 1);
    CHECK(r.nullspace_basis[0] == Vector{1});
  }
  SUBCASE("rank one") {
    auto r = solve_linear_system(rows({{1, 1}, {2, 2}}), {Scalar(1), Scalar(2)});
    REQUIRE(r.consistent());
    CHECK(*r.particular == Vector{1, 0});
    REQUIRE(r.nullspace_basis.size() == 1);
    CHECK(r.nullspace_basis[0] == Vector{-1, 1});
  }
  SUBCASE("inconsistent") {
    auto r = solve_linear_system(rows({{1, 1}, {2, 2}}), {Scalar(1), Scalar(3)});
    CHECK_FALSE(r.consistent());
    CHECK(r.rank == 1);
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(solve_linear_system(rows({{1, 1}}), {Scalar(1), Scalar(2)}), ContractViolation);
  }
}

TEST_CASE("solutions substitute back exactly") {
  oracle::Sampler sample(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto r = static_cast<std::size_t>(sample.integer(1, 6));
    const auto c = static_cast<std::size_t>(sample.integer(1, 6));
    const Matrix a = sample.dense(r, c, 40);
    // consistent right-hand side from a random point
    Vector x0(c);
    for (auto& v : x0) v = sample.scalar();
    const Vector b = times(a, x0);
    const auto sol = solve_linear_system(a, b);
    REQUIRE(sol.consistent());
    CHECK(times(a, *sol.particular) == b);
    for (const auto& k : sol.nullspace_basis) {
      Vector shifted = *sol.particular;
      for (std::size_t i = 0; i < c; ++i) shifted[i] += k[i];
      CHECK(times(a, shifted) == b);
    }
    CHECK(sol.rank + sol.dimension() == c);
    CHECK(rank(a) == sol.rank);
  }
}

TEST_CASE("nullspace basis is independent") {
  oracle::Sampler sample(12);
  for (int trial = 0; trial < 15; ++trial) {
    const Matrix a = sample.dense(3, 6, 30);
    const auto basis = nullspace(a);
    if (basis.empty()) continue;
    Matrix stacked(basis.size(), 6);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < 6; ++j) stacked(i, j) = basis[i][j];
    CHECK(rank(stacked) == basis.size());
  }
}

TEST_CASE("invert examples") {
  CHECK(*invert(Matrix::identity(4)).inverse == Matrix::identity(4));
  auto d = invert(rows({{2, 0}, {0, 3}}));
  REQUIRE_FALSE(d.singular());
  CHECK((*d.inverse)(0, 0) == Scalar(1, 2));
  CHECK((*d.inverse)(1, 1) == Scalar(1, 3));
  auto s = invert(rows({{1, 1}, {1, 1}}));
  CHECK(s.singular());
  CHECK(s.rank == 1);
  CHECK_THROWS_AS(invert(Matrix(2, 3)), ContractViolation);
}

TEST_CASE("inverse is two-sided") {
  oracle::Sampler sample(13);
  int inverted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = sample.dense(4, 4);
    const auto r = invert(a);
    CHECK(r.singular() == (oracle::determinant(a) == 0));
    if (r.singular()) continue;
    ++inverted;
    CHECK(a * *r.inverse == Matrix::identity(4));
    CHECK(*r.inverse * a == Matrix::identity(4));
  }
  CHECK(inverted > 0);
}

TEST_CASE("minimal polynomial examples") {
  CHECK(minimal_polynomial(Matrix::identity(2)) == std::vector<Scalar>{-1, 1});
  CHECK(minimal_polynomial(rows({{0, 1}, {1, 0}})) == std::vector<Scalar>{-1, 0, 1});
  // x^3 (x + 1) must be a multiple of the result at i² = −1, j² = 1
  const Matrix sigma = oracle::displayed_sigma(-1, 1);
  const auto p = minimal_polynomial(sigma);
  CHECK(evaluate_polynomial({0, 0, 0, 1, 1}, sigma).is_zero());
  CHECK(evaluate_polynomial(p, sigma).is_zero());
  CHECK(p.size() - 1 <= 4);
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
  oracle::Sampler sample(14);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = sample.dense(3, 3, 50);
    const auto p = minimal_polynomial(a);
    REQUIRE(p.back() == 1);
    CHECK(evaluate_polynomial(p, a).is_zero());
    // I, A, ..., A^{d-1} are independent, so no lower-degree monic polynomial vanishes
    const std::size_t degree = p.size() - 1;
    Matrix powers(degree, 9);
    Matrix current = Matrix::identity(3);
    for (std::size_t k = 0; k < degree; ++k) {
      for (std::size_t e = 0; e < 9; ++e) powers(k, e) = current.entries()[e];
      current = current * a;
    }
    CHECK(rank(powers) == degree);
  }
}

TEST_CASE("parallel kernels agree with serial references") {
  oracle::Sampler sample(15);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix a = sample.dense(48, 40, 60);
    const Matrix b = sample.dense(40, 36, 60);
    CHECK(a * b == reference::multiply(a, b));
    const auto fast = row_reduce(a);
    const auto slow = reference::row_reduce(a);
    CHECK(fast.reduced == slow.reduced);
    CHECK(fast.pivot_columns == slow.pivot_columns);
  }
}

TEST_CASE("kron matches the pair-index convention") {
  const Matrix a = rows({{1, 2}, {3, 4}});
  const Matrix b = rows({{0, 5}, {6, 7}});
  const Matrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 2 + p, j * 2 + q) == a(i, j) * b(p, q));
}

} // TEST_SUITE
