#include <hesskit/families.hpp>
#include <hesskit/identity.hpp>
#include <hesskit/poly_io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesskit;

TEST_CASE("exact identity verification") {
  auto vars = VarSet::make({"x", "y"});
  auto lhs = parse_poly("x^2 - y^2", vars);
  auto rhs = parse_poly("x - y", vars) * parse_poly("x + y", vars);
  auto rep = verify_identity_exact("factoring", "difference of squares", lhs, rhs);
  CHECK(rep.passed);
  CHECK(rep.mode == "exact");
  auto bad = verify_identity_exact("off-by-one", "broken", lhs, rhs + PolyQ::constant(vars, Rat(1)));
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.notes.empty());
  CHECK(bad.notes[0] == "difference has 1 terms");
}

TEST_CASE("sampled identity verification is seeded and reproducible") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto lhs = parse_poly("x + y + z", vars).pow(3);
  PolyQ rhs = PolyQ::zero(vars);
  // multinomial expansion of (x+y+z)^3
  rhs = parse_poly(
      "x^3 + y^3 + z^3 + 3*x^2*y + 3*x^2*z + 3*y^2*x + 3*y^2*z + 3*z^2*x + "
      "3*z^2*y + 6*x*y*z",
      vars);
  SampleConfig cfg;
  auto a = verify_identity_sz("cube", "trinomial cube", lhs, rhs, cfg);
  auto b = verify_identity_sz("cube", "trinomial cube", lhs, rhs, cfg);
  CHECK(a.passed);
  CHECK(a.mode == "schwartz-zippel");
  CHECK(a.trials == cfg.trials);
  CHECK(a.failure_bound_log10 == b.failure_bound_log10);
  CHECK(a.failure_bound_log10 < -300);

  auto bad = verify_identity_sz("cube-broken", "off by a term", lhs,
                                rhs - parse_poly("x*y*z", vars), cfg);
  CHECK_FALSE(bad.passed);
  CHECK(bad.trials >= 1);
}

TEST_CASE("identity sampling rejects oversized degree bounds") {
  SampleConfig cfg;
  cfg.prime = 3;
  auto f = parse_poly("x^4");
  CHECK_THROWS_WITH(verify_identity_sz("too-big", "", f, f, cfg),
                    "degree bound exceeds the sampling prime");
}

TEST_CASE("power-of-two ratio detection") {
  using hesskit::detail::power_of_two_ratio;
  auto j = power_of_two_ratio(Rat(-8), Rat(1));
  REQUIRE(j.has_value());
  CHECK(*j == 3);
  j = power_of_two_ratio(Rat(1, 4), Rat(1));
  REQUIRE(j.has_value());
  CHECK(*j == -2);
  j = power_of_two_ratio(Rat(-1), Rat(1));
  REQUIRE(j.has_value());
  CHECK(*j == 0);
  j = power_of_two_ratio(Rat(-192), Rat(-192));
  REQUIRE(j.has_value());
  CHECK(*j == 0);
  CHECK_FALSE(power_of_two_ratio(Rat(3), Rat(1)).has_value());
  CHECK_FALSE(power_of_two_ratio(Rat(0), Rat(1)).has_value());
  CHECK_FALSE(power_of_two_ratio(Rat(1), Rat(0)).has_value());
  CHECK_FALSE(power_of_two_ratio(Rat(-48), Rat(2)).has_value());  // ratio -24
}

TEST_CASE("proportionality measurement finds the constant") {
  auto vars = VarSet::make({"x", "y"});
  auto g = parse_poly("x^2 + x*y", vars);
  SampleConfig cfg;
  ProportionalityInput in;
  in.id = "scaled";
  in.claim = "lhs is 6 g";
  auto lhs = g.scaled(Rat(6));
  in.lhs_rat = make_poly_eval_fn_rat(lhs);
  in.rhs_rat = make_poly_eval_fn_rat(g);
  in.lhs_fp = make_poly_eval_fn(reduce_mod_prime(lhs, cfg.prime));
  in.rhs_fp = make_poly_eval_fn(reduce_mod_prime(g, cfg.prime));
  in.arity = 2;
  in.degree_bound = 2;

  SECTION("exact expected constant") {
    in.expected_constant = Rat(6);
    auto rep = verify_proportionality(in, cfg);
    CHECK(rep.passed);
    CHECK_FALSE(rep.convention_flag);
    REQUIRE(rep.measured_constant.has_value());
    CHECK(*rep.measured_constant == "6");
    CHECK(rep.mode == "rational-sample");
  }
  SECTION("expected constant off by a power of two gets flagged") {
    in.expected_constant = Rat(3);
    auto rep = verify_proportionality(in, cfg);
    CHECK(rep.passed);
    CHECK(rep.convention_flag);
  }
  SECTION("expected constant off by another factor fails") {
    in.expected_constant = Rat(5);
    auto rep = verify_proportionality(in, cfg);
    CHECK_FALSE(rep.passed);
  }
  SECTION("no expectation still measures") {
    auto rep = verify_proportionality(in, cfg);
    CHECK(rep.passed);
    CHECK(*rep.measured_constant == "6");
  }
}

TEST_CASE("proportionality rejects a non-constant ratio") {
  auto vars = VarSet::make({"x", "y"});
  SampleConfig cfg;
  ProportionalityInput in;
  in.id = "not-proportional";
  auto lhs = parse_poly("x^3", vars);
  auto rhs = parse_poly("x^2", vars);
  in.lhs_rat = make_poly_eval_fn_rat(lhs);
  in.rhs_rat = make_poly_eval_fn_rat(rhs);
  in.lhs_fp = make_poly_eval_fn(reduce_mod_prime(lhs, cfg.prime));
  in.rhs_fp = make_poly_eval_fn(reduce_mod_prime(rhs, cfg.prime));
  in.arity = 2;
  in.degree_bound = 3;
  auto rep = verify_proportionality(in, cfg);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0] == "ratio is not constant across sample points");
}

TEST_CASE("proportionality reports an identically zero right side") {
  auto vars = VarSet::make({"x"});
  SampleConfig cfg;
  ProportionalityInput in;
  in.id = "zero-rhs";
  auto zero = PolyQ::zero(vars);
  in.lhs_rat = make_poly_eval_fn_rat(zero);
  in.rhs_rat = make_poly_eval_fn_rat(zero);
  in.lhs_fp = make_poly_eval_fn(reduce_mod_prime(zero, cfg.prime));
  in.rhs_fp = make_poly_eval_fn(reduce_mod_prime(zero, cfg.prime));
  in.arity = 1;
  in.degree_bound = 1;
  auto rep = verify_proportionality(in, cfg);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0] == "rhs vanished at every sample point");
}

TEST_CASE("hessian power inputs wire determinant against a form power") {
  // H(x^2 + y^2) = 2 I, so det H = 4 = 4 * f^0.
  auto f = parse_poly("x^2 + y^2");
  SampleConfig cfg;
  auto in = make_hessian_power_input("quadric-det", "det H is the constant 4", f, 0,
                                     Rat(4), cfg);
  auto rep = verify_proportionality(in, cfg);
  CHECK(rep.passed);
  CHECK_FALSE(rep.convention_flag);
  CHECK(*rep.measured_constant == "4");
  CHECK_THROWS_WITH(
      make_hessian_power_input("bad", "", parse_poly("x + y"), 1, std::nullopt, cfg),
      "proportionality input needs a homogeneous form");
}

TEST_CASE("gradient grid relations") {
  auto inst = p5_example();
  auto rep = check_gradient_grid_relations("p5-grid", "derivative grid is rank one",
                                           inst.f, inst.gradient_grid);
  CHECK(rep.passed);
  CHECK(rep.mode == "exact");
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0] == "1 minors vanish");

  // A polynomial whose gradient grid is not rank one.
  auto f = parse_poly("x^2*w + y^2*z", VarSet::make({"w", "x", "y", "z"}));
  auto bad = check_gradient_grid_relations("broken-grid", "", f, {{1, 2}, {0, 3}});
  CHECK_FALSE(bad.passed);
}
