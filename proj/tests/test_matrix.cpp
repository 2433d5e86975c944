#include <hesskit/matrix.hpp>
#include <hesskit/poly_io.hpp>
#include <hesskit/rng.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesskit;

namespace {

Matrix<PolyQ> random_poly_matrix(std::size_t n, Stream& rng, int max_deg) {
  auto vars = VarSet::make({"x", "y"});
  Matrix<PolyQ> m(n, n, PolyQ::zero(vars));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyQ cell = PolyQ::zero(vars);
      for (int t = 0; t < 2; ++t) {
        int dx = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
        int dy = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg - dx) + 1));
        cell += PolyQ::monomial(vars, {dx, dy}, Rat(rng.int_in(-4, 4)));
      }
      m.at(i, j) = cell;
    }
  }
  return m;
}

Matrix<Fp> random_fp_matrix(std::size_t n, std::uint64_t p, Stream& rng) {
  Matrix<Fp> m(n, n, Fp(0, p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = Fp(rng.below(p), p);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("fraction-free elimination matches cofactor expansion") {
  // Two independent determinant routes; they must agree on random inputs.
  Stream rng(101, "det-routes", 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng.below(4);
    auto m = random_poly_matrix(n, rng, 2);
    CAPTURE(trial, n);
    CHECK(determinant_bareiss(m) == determinant_cofactor(m));
  }
}

TEST_CASE("determinant of known integer matrices") {
  auto vars = VarSet::make({"x"});
  auto c = [&](long v) { return PolyQ::constant(vars, Rat(v)); };
  Matrix<PolyQ> m(3, 3, c(0));
  long vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = c(vals[i][j]);
  // 2*(12-2) - 0 + 1*(1-3) = 18
  CHECK(determinant(m).constant_value().str() == "18");
  CHECK(determinant_bareiss(m) == determinant_cofactor(m));
}

TEST_CASE("determinant is multiplicative over a prime field") {
  const std::uint64_t p = 1000003;
  Stream rng(7, "det-mult", 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.below(3);
    auto a = random_fp_matrix(n, p, rng);
    auto b = random_fp_matrix(n, p, rng);
    CHECK(det_gauss(a * b) == det_gauss(a) * det_gauss(b));
  }
}

TEST_CASE("symbolic and evaluated determinants commute") {
  const std::uint64_t p = kDefaultPrime;
  Stream rng(19, "det-eval", 0);
  auto m = random_poly_matrix(3, rng, 2);
  auto det = determinant(m);
  auto detp = reduce_mod_prime(det, p);
  std::vector<Fp> pt = {Fp(rng.below(p), p), Fp(rng.below(p), p)};
  auto mm = eval_matrix(reduce_matrix_mod_prime(m, p), std::span<const Fp>(pt));
  CHECK(det_gauss(mm) == detp.evaluate(std::span<const Fp>(pt)));
}

TEST_CASE("adjugate satisfies its defining identity") {
  Stream rng(23, "adjugate", 0);
  for (std::size_t n : {2, 3, 4}) {
    auto m = random_poly_matrix(n, rng, 1);
    auto adj = adjugate(m);
    auto det = determinant(m);
    auto prod = m * adj;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(prod.at(i, j) == (i == j ? det : PolyQ::zero(det.vars())));
      }
    }
  }
}

TEST_CASE("pfaffian of the generic 4x4 skew matrix") {
  auto vars = VarSet::make({"a0_1", "a0_2", "a0_3", "a1_2", "a1_3", "a2_3"});
  auto entry = [&](const char* n) { return parse_poly(n, vars); };
  Matrix<PolyQ> m(4, 4, PolyQ::zero(vars));
  const char* upper[4][4] = {};
  upper[0][1] = "a0_1"; upper[0][2] = "a0_2"; upper[0][3] = "a0_3";
  upper[1][2] = "a1_2"; upper[1][3] = "a1_3"; upper[2][3] = "a2_3";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      m.at(i, j) = entry(upper[i][j]);
      m.at(j, i) = -m.at(i, j);
    }
  }
  auto pf = pfaffian(m);
  CHECK(format_poly(pf) == "a0_1*a2_3 - a0_2*a1_3 + a0_3*a1_2");
  CHECK(pf * pf == determinant(m));
}

TEST_CASE("pfaffian squares to the determinant in size 6") {
  Stream rng(31, "pfaffian6", 0);
  auto vars = VarSet::make({"x", "y"});
  Matrix<PolyQ> m(6, 6, PolyQ::zero(vars));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      PolyQ cell = PolyQ::monomial(vars, {static_cast<int>(rng.below(2)), 0},
                                   Rat(rng.int_in(-3, 3)));
      m.at(i, j) = cell;
      m.at(j, i) = -cell;
    }
  }
  auto pf = pfaffian(m);
  CHECK(pf * pf == determinant(m));
}

TEST_CASE("pfaffian rejects odd sizes and non-skew input") {
  auto vars = VarSet::make({"x"});
  Matrix<PolyQ> odd(3, 3, PolyQ::zero(vars));
  CHECK_THROWS(pfaffian(odd));
  Matrix<PolyQ> notskew(2, 2, PolyQ::constant(vars, Rat(1)));
  CHECK_THROWS(pfaffian(notskew));
}

TEST_CASE("rank over a prime field") {
  const std::uint64_t p = 101;
  Matrix<Fp> m(3, 4, Fp(0, p));
  // row2 = row0 + row1, so the rank is 2.
  std::uint64_t rows[3][4] = {{1, 2, 3, 4}, {0, 1, 1, 0}, {1, 3, 4, 4}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Fp(rows[i][j], p);
  CHECK(rank_gauss(m) == 2);
  Matrix<Fp> z(2, 2, Fp(0, p));
  CHECK(rank_gauss(z) == 0);
}

TEST_CASE("nullspace basis spans the kernel") {
  Matrix<Rat> m(2, 4, Rat(0));
  // x0 + x1 = 0, x2 - x3 = 0. Kernel has dimension 2.
  m.at(0, 0) = Rat(1); m.at(0, 1) = Rat(1);
  m.at(1, 2) = Rat(1); m.at(1, 3) = Rat(-1);
  auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    REQUIRE(v.size() == 4);
    for (std::size_t r = 0; r < 2; ++r) {
      Rat dot(0);
      for (std::size_t c = 0; c < 4; ++c) dot += m.at(r, c) * v[c];
      CHECK(dot.is_zero());
    }
  }
  Matrix<Rat> id(3, 3, Rat(0));
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = Rat(1);
  CHECK(nullspace_basis(id).empty());
}

TEST_CASE("minor enumeration covers all index pairs") {
  // 2x2 minors of a 3x3 matrix: C(3,2)^2 = 9.
  auto pairs = minor_index_pairs(3, 3, 2);
  CHECK(pairs.size() == 9);
  auto vars = VarSet::make({"x"});
  Matrix<PolyQ> m(3, 3, PolyQ::zero(vars));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m.at(i, j) = PolyQ::constant(vars, Rat(static_cast<long>(i * 3 + j)));
  // Every 2x2 minor of this rank-2 matrix is -3 or a multiple.
  auto d = minor_det(m, {0, 1}, {0, 1});
  CHECK(d.constant_value().str() == "-3");
}
