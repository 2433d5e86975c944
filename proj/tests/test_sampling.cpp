#include <hesskit/families.hpp>
#include <hesskit/poly_io.hpp>
#include <hesskit/sampling.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesskit;

namespace {

bool on_hypersurface(const PolyFp& f, const std::vector<Fp>& pt) {
  return f.evaluate(std::span<const Fp>(pt)).is_zero();
}

bool is_smooth_at(const PolyFp& f, const std::vector<Fp>& pt) {
  for (std::size_t i = 0; i < f.vars()->size(); ++i) {
    if (!f.partial_derivative(i).evaluate(std::span<const Fp>(pt)).is_zero()) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("line restriction matches direct evaluation") {
  const std::uint64_t p = 1000003;
  auto f = reduce_mod_prime(parse_poly("x^3 + 2*x*y*z - z^3"), p);
  Stream rng(3, "line", 0);
  std::vector<std::uint64_t> base, dir;
  for (int i = 0; i < 3; ++i) {
    base.push_back(rng.below(p));
    dir.push_back(rng.below(p));
  }
  auto uni = restrict_to_line(f, base, dir, p);
  for (std::uint64_t t : {0ULL, 1ULL, 12345ULL}) {
    std::vector<Fp> pt;
    for (std::size_t i = 0; i < 3; ++i) {
      pt.push_back(Fp(base[i], p) + Fp(t, p) * Fp(dir[i], p));
    }
    CHECK(uni.eval(t) == f.evaluate(std::span<const Fp>(pt)).value());
  }
}

TEST_CASE("sampled points lie on the hypersurface and are smooth") {
  SampleConfig cfg;
  auto f = reduce_mod_prime(perazzo().f, cfg.prime);
  HypersurfaceSampler sampler(f);
  Stream rng(cfg.seed, "sample-test", 0);
  for (int i = 0; i < 10; ++i) {
    auto pt = sampler.sample(rng);
    REQUIRE(pt.size() == 5);
    CHECK(on_hypersurface(f, pt));
    CHECK(is_smooth_at(f, pt));
  }
}

TEST_CASE("sampling is deterministic in the stream") {
  const std::uint64_t p = kDefaultPrime;
  auto f = reduce_mod_prime(parse_poly("x^2*y + y^2*z + z^3"), p);
  Stream a(5, "det-sample", 0);
  Stream b(5, "det-sample", 0);
  auto pa = sample_point_on_hypersurface(f, a);
  auto pb = sample_point_on_hypersurface(f, b);
  REQUIRE(pa.size() == pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i] == pb[i]);
}

TEST_CASE("sampler rejects constants and reports exhaustion") {
  const std::uint64_t p = 101;
  auto vars = VarSet::make({"x", "y"});
  CHECK_THROWS_WITH(
      HypersurfaceSampler(reduce_mod_prime(PolyQ::constant(vars, Rat(1)), p)),
      "hypersurface sampling needs a nonconstant polynomial");
  // x^2 + y^2 over F_3: the only solution is the singular origin.
  auto f = reduce_mod_prime(parse_poly("x^2 + y^2", vars), 3);
  HypersurfaceSampler s(f);
  Stream rng(1, "exhaust", 0);
  CHECK_THROWS_WITH(
      s.sample(rng, 50),
      "no smooth point found on the hypersurface within the attempt budget");
}

TEST_CASE("random invertible matrices are invertible") {
  Stream rng(21, "inv", 0);
  for (int i = 0; i < 10; ++i) {
    auto m = random_invertible_rat_matrix(4, rng);
    Matrix<Fp> mp(4, 4, Fp(0, 101));
    bool fits = true;
    for (std::size_t r = 0; r < 4 && fits; ++r) {
      for (std::size_t c = 0; c < 4; ++c) mp.at(r, c) = m.at(r, c).mod(101);
    }
    CHECK_FALSE(det_gauss(mp).is_zero());
  }
}

TEST_CASE("unimodular changes have determinant of absolute value one") {
  Stream rng(23, "unimod", 0);
  for (int i = 0; i < 10; ++i) {
    auto m = random_unimodular_change(5, rng);
    Matrix<Fp> mp(5, 5, Fp(0, kDefaultPrime));
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) mp.at(r, c) = m.at(r, c).mod(kDefaultPrime);
    }
    auto d = det_gauss(mp);
    CHECK((d == Fp(1, kDefaultPrime) || d == Fp::from_int(-1, kDefaultPrime)));
  }
}

TEST_CASE("coordinate changes preserve degree and compose") {
  Stream rng(29, "coord", 0);
  auto f = perazzo().f;
  auto m = random_unimodular_change(5, rng);
  auto g = apply_linear_change(f, m);
  CHECK(g.is_homogeneous() == f.is_homogeneous());
  CHECK_FALSE(g.is_zero());
  // The identity change leaves the polynomial untouched.
  Matrix<Rat> id(5, 5, Rat(0));
  for (std::size_t i = 0; i < 5; ++i) id.at(i, i) = Rat(1);
  CHECK(apply_linear_change(f, id) == f);
}
