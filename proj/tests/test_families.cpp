#include <hesskit/families.hpp>
#include <hesskit/hessian.hpp>
#include <hesskit/identity.hpp>
#include <hesskit/poly_io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesskit;

namespace {

// Trimmed sampling budget: unit tests only need agreement, not certificates.
SampleConfig quick_config() {
  SampleConfig cfg;
  cfg.trials = 6;
  cfg.sample_points = 10;
  return cfg;
}

void check_expected_profile(const FamilyInstance& inst) {
  CAPTURE(inst.label);
  REQUIRE(inst.f.is_homogeneous().has_value());
  CHECK(*inst.f.is_homogeneous() == inst.expected.degree);
  SampleConfig cfg = quick_config();
  ProfileOptions opts;
  opts.rank_strategy = RankStrategy::Sample;
  opts.zero_mode = ZeroTestMode::Probabilistic;
  opts.rank_mod_prime = inst.preferred_sampling_prime;
  auto p = hessian_profile(inst.f, cfg, opts);
  if (inst.expected.hess_is_zero) CHECK(p.hess_is_zero == *inst.expected.hess_is_zero);
  if (inst.expected.is_cone) CHECK(p.is_cone == *inst.expected.is_cone);
  if (inst.expected.generic_rank) CHECK(p.generic_rank == *inst.expected.generic_rank);
  if (inst.expected.rank_mod_f) CHECK(p.rank_mod_f == *inst.expected.rank_mod_f);
  if (inst.expected.dual_codim_in_polar) {
    CHECK(p.dual_codim_in_polar == *inst.expected.dual_codim_in_polar);
  }
}

}  // namespace

TEST_CASE("catalog lists every family and all defaults build") {
  const auto& catalog = family_catalog();
  CHECK(catalog.size() == 15);
  for (const auto& entry : catalog) {
    CAPTURE(entry.id);
    auto inst = build_family(entry.id, {});
    CHECK(inst.family_id == entry.id);
    CHECK_FALSE(inst.f.is_zero());
    CHECK(inst.f.is_homogeneous().has_value());
  }
}

TEST_CASE("labels echo the parameters") {
  CHECK(perazzo().label == "perazzo");
  CHECK(perazzo_ext(6).label == "perazzo-ext(n=6)");
  CHECK(scroll_dual(1, 2).label == "scroll-dual(a=1, b=2)");
  CHECK(build_family("pfaffian-form", {{"m", "2"}}).label == "pfaffian-form(m=2)");
}

TEST_CASE("build errors are specific") {
  CHECK_THROWS_WITH(build_family("nope", {}), "unknown family 'nope'");
  CHECK_THROWS_WITH(build_family("perazzo", {{"n", "3"}}),
                    "family 'perazzo' does not take parameter 'n'");
  CHECK_THROWS_WITH(build_family("generic-det", {{"n", "two"}}),
                    "parameter 'n' must be an integer, got 'two'");
  CHECK_THROWS_WITH(build_family("generic-det", {{"n", "2x"}}),
                    "parameter 'n' must be an integer, got '2x'");
  CHECK_THROWS(build_family("perazzo-ext", {{"n", "4"}}));
  CHECK_THROWS_WITH(build_family("perazzo-ext", {{"n", "15"}}),
                    "parameter too large for the fixed naming scheme");
}

TEST_CASE("inner polynomial validation for composed families") {
  CHECK_THROWS_WITH(build_family("pencil", {{"g", "z1^3 + z2"}}),
                    "g must be homogeneous");
  CHECK_THROWS_WITH(build_family("pencil", {{"g", "z1 + z2"}}),
                    "g must have degree at least 2");
  CHECK_THROWS_WITH(build_family("pencil", {{"g", "z1^2"}}),
                    "g needs at least 2 variables");
  // (z1 + z2)^2 is a cone; the error names the gradient relation.
  CHECK_THROWS_WITH(build_family("pencil", {{"g", "z1^2 + 2*z1*z2 + z2^2"}}),
                    Catch::Matchers::StartsWith("g is a cone"));
}

TEST_CASE("pencil instances carry the grid and scaling structure") {
  auto inst = p7_fermat();
  CHECK(inst.f.vars()->size() == 8);
  CHECK(inst.expected.degree == 4);
  REQUIRE(inst.gradient_grid.size() == 2);
  CHECK(inst.gradient_grid[0] == std::vector<std::size_t>{2, 3, 4});
  CHECK(inst.gradient_grid[1] == std::vector<std::size_t>{5, 6, 7});
  // Degree-in-(u, v) scaling: the pencil weight of every term is deg g.
  CHECK(inst.f.euler_sum({0, 1}) == inst.f.scaled(Rat(2)));
  CHECK(inst.preferred_sampling_prime == kPrimeOneMod4);

  auto grid = check_gradient_grid_relations("grid", "", inst.f, inst.gradient_grid);
  CHECK(grid.passed);
}

TEST_CASE("closed scroll form equals the resultant form") {
  for (int b : {2, 3}) {
    CAPTURE(b);
    auto closed = scroll_dual_closed(b);
    auto res = scroll_dual(1, b);
    CHECK(closed.f == res.f);
  }
}

TEST_CASE("scroll duals have the degrees of the defining forms") {
  auto inst = scroll_dual(2, 3);
  CHECK(inst.expected.degree == 5);
  CHECK(inst.f.total_degree() == 5);
  CHECK(inst.f.vars()->size() == 7);  // w0..w2, z0..z3
  // Degree b in the first block, degree a in the second.
  std::vector<std::size_t> wblock = {0, 1, 2}, zblock = {3, 4, 5, 6};
  auto dw = inst.f.uniform_degree_in(wblock);
  auto dz = inst.f.uniform_degree_in(zblock);
  REQUIRE(dw.has_value());
  REQUIRE(dz.has_value());
  CHECK(*dw == 3);
  CHECK(*dz == 2);
}

TEST_CASE("determinant and pfaffian families have the right shape") {
  auto gd = generic_det(2);
  CHECK(gd.f.vars()->size() == 9);
  CHECK(gd.f.total_degree() == 3);
  CHECK(gd.f.num_terms() == 6);

  auto sd = symmetric_det(2);
  CHECK(sd.f.vars()->size() == 6);
  CHECK(sd.f.num_terms() == 5);  // det of the generic symmetric 3x3

  auto pf = pfaffian_form(2);
  CHECK(pf.f.vars()->size() == 15);
  CHECK(pf.f.total_degree() == 3);
  CHECK(pf.f.num_terms() == 15);

  auto cs = cauchy_schwartz(1);
  CHECK(cs.f.vars()->size() == 6);
  CHECK(cs.f.total_degree() == 4);
}

TEST_CASE("slices drop exactly one variable") {
  auto ds = det_slice(2);
  CHECK(ds.f.vars()->size() == 8);
  CHECK(sym_slice(2).f.vars()->size() == 5);
  CHECK(pf_slice(2).f.vars()->size() == 14);
  for (const auto& name : ds.f.vars()->names()) {
    CHECK(name != "x2_2");
  }
}

TEST_CASE("dual cayley defaults compose a conic with matrix minors") {
  auto inst = build_family("dual-cayley", {});
  CHECK(inst.f.vars()->size() == 15);
  CHECK(inst.expected.degree == 6);
  CHECK(inst.params.at("r") == "2");
  CHECK(inst.params.at("g") == "z0*z2 - z1^2");
  REQUIRE(inst.gradient_grid.size() == 3);
  auto grid = check_gradient_grid_relations("grid", "", inst.f, inst.gradient_grid);
  CHECK(grid.passed);
}

TEST_CASE("expected profiles hold for the quick families") {
  check_expected_profile(perazzo());
  check_expected_profile(perazzo_ext(5));
  check_expected_profile(p5_example());
  check_expected_profile(scroll_dual_closed(2));
  check_expected_profile(sym_slice(2));
}

TEST_CASE("extension by cubes adds one to each rank") {
  auto p = hessian_profile(perazzo_ext(5).f);
  CHECK(p.hess_is_zero);
  CHECK(p.generic_rank == 5);
  CHECK(p.rank_mod_f == 5);
  CHECK(p.dual_codim_in_polar == 1);
  CHECK_FALSE(p.is_cone);
}
