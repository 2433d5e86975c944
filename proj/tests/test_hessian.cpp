#include <hesskit/families.hpp>
#include <hesskit/hessian.hpp>
#include <hesskit/poly_io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesskit;

TEST_CASE("hessian matrix holds the second partials") {
  auto vars = VarSet::make({"x", "y"});
  auto f = parse_poly("x^3 + x*y^2", vars);
  auto h = hessian_matrix(f);
  REQUIRE(h.rows() == 2);
  CHECK(h.at(0, 0) == parse_poly("6*x", vars));
  CHECK(h.at(0, 1) == parse_poly("2*y", vars));
  CHECK(h.at(1, 0) == h.at(0, 1));
  CHECK(h.at(1, 1) == parse_poly("2*x", vars));
  auto grad = polar_gradient(f);
  REQUIRE(grad.size() == 2);
  CHECK(grad[0] == parse_poly("3*x^2 + y^2", vars));
  CHECK(grad[1] == parse_poly("2*x*y", vars));
}

TEST_CASE("polynomial division underpins divisibility checks") {
  auto vars = VarSet::make({"x", "y"});
  auto f = parse_poly("x^2 - y^2", vars);
  auto g = parse_poly("x - y", vars);
  auto q = f.exact_divide_by(g);
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly("x + y", vars));
  CHECK(divides(g, f));
  CHECK_FALSE(divides(parse_poly("x + 2*y", vars), f));
  CHECK(f.reduce_by(f).is_zero());
}

TEST_CASE("vanishing hessian detected exactly in few variables") {
  auto inst = perazzo();
  auto z = hessian_determinant_is_zero(inst.f);
  CHECK(z.is_zero);
  CHECK(z.certificate == Certificate::Exact);
}

TEST_CASE("nonvanishing hessian yields an exact witness even when sampling") {
  auto f = parse_poly("x^3 + y^3 + z^3");
  SampleConfig cfg;
  auto z = hessian_determinant_is_zero(f, cfg, ZeroTestMode::Probabilistic);
  CHECK_FALSE(z.is_zero);
  // A nonzero evaluation certifies a nonzero polynomial outright.
  CHECK(z.certificate == Certificate::Exact);
  auto ze = hessian_determinant_is_zero(f, cfg, ZeroTestMode::Exact);
  CHECK_FALSE(ze.is_zero);
}

TEST_CASE("probabilistic zero test reports its failure bound") {
  auto inst = perazzo_ext(6);  // 7 variables, auto mode samples
  SampleConfig cfg;
  auto z = hessian_determinant_is_zero(inst.f, cfg);
  CHECK(z.is_zero);
  CHECK(z.certificate == Certificate::SchwartzZippel);
  CHECK(z.trials == cfg.trials);
  CHECK(z.failure_bound_log10 < -200);
}

TEST_CASE("zero test rejects degree bounds at or above the prime") {
  auto f = parse_poly("x^5 + y^5 + z^5");
  SampleConfig cfg;
  cfg.prime = 7;  // determinant degree bound is 3 * 3 = 9
  CHECK_THROWS_WITH(hessian_determinant_is_zero(f, cfg, ZeroTestMode::Probabilistic),
                    "degree bound exceeds the sampling prime");
}

TEST_CASE("generic rank of standard examples") {
  SampleConfig cfg;
  auto quadric = parse_poly("x^2 + y^2 + z^2");
  CHECK(generic_rank(hessian_matrix(quadric), cfg) == 3);
  CHECK(generic_rank(hessian_matrix(perazzo().f), cfg) == 4);
}

TEST_CASE("rank modulo the hypersurface for the perazzo cubic") {
  auto inst = perazzo();
  auto h = hessian_matrix(inst.f);
  SampleConfig cfg;
  auto exact = rank_mod_hypersurface(h, inst.f, RankStrategy::Exact, cfg);
  CHECK(exact.rank == 4);
  CHECK(exact.method == RankMethod::Exact);
  auto sampled = rank_mod_hypersurface(h, inst.f, RankStrategy::Sample, cfg);
  CHECK(sampled.rank == 4);
  CHECK(sampled.method == RankMethod::Sampled);
  SampleConfig other = cfg;
  other.prime = kPrimeOneMod4;
  CHECK(rank_mod_hypersurface(h, inst.f, RankStrategy::Sample, other).rank == 4);
}

TEST_CASE("exhaustive minor audit confirms the perazzo ranks") {
  // Independent of the search order inside the library: walk every minor
  // level of the 5x5 hessian and test divisibility by f directly.
  auto inst = perazzo();
  auto h = hessian_matrix(inst.f);
  auto level_clean = [&](std::size_t k) {
    for (const auto& ref : minor_index_pairs(5, 5, k)) {
      auto d = minor_det(h, ref.rows, ref.cols);
      if (d.is_zero()) continue;
      if (!divides(inst.f, d)) return true;
    }
    return false;
  };
  CHECK(level_clean(4));        // some 4x4 minor survives modulo f
  CHECK_FALSE(level_clean(5));  // the determinant is divisible (it is zero)
}

TEST_CASE("exhaustive minor audit confirms the pencil quartic ranks") {
  auto inst = p5_example();
  auto h = hessian_matrix(inst.f);
  REQUIRE(h.rows() == 6);
  auto level_clean = [&](std::size_t k) {
    for (const auto& ref : minor_index_pairs(6, 6, k)) {
      auto d = minor_det(h, ref.rows, ref.cols);
      if (d.is_zero()) continue;
      if (!divides(inst.f, d)) return true;
    }
    return false;
  };
  CHECK(level_clean(5));
  CHECK_FALSE(level_clean(6));
  SampleConfig cfg;
  cfg.prime = kPrimeOneMod4;  // sums of squares need p = 1 mod 4
  auto sampled = rank_mod_hypersurface(h, inst.f, RankStrategy::Sample, cfg);
  CHECK(sampled.rank == 5);
}

TEST_CASE("rank modulo f of a smooth quadric stays full") {
  auto f = parse_poly("x^2 + y^2 + z^2");
  auto h = hessian_matrix(f);
  auto r = rank_mod_hypersurface(h, f, RankStrategy::Exact);
  CHECK(r.rank == 3);
}

TEST_CASE("exact strategy enforces its feasibility limits") {
  auto inst = generic_det(2);  // 9x9 hessian with linear entries
  auto h = hessian_matrix(inst.f);
  CHECK_THROWS_WITH(rank_mod_hypersurface(h, inst.f, RankStrategy::Exact),
                    "exact minor search is limited to matrices of size at most 8 "
                    "with entries of degree at most 2; use the sampled strategy");
  auto r = rank_mod_hypersurface(h, inst.f, RankStrategy::Auto);
  CHECK(r.method == RankMethod::Sampled);
  CHECK(r.rank == 6);
}

TEST_CASE("cone detection") {
  auto vars = VarSet::make({"x", "y", "z"});
  auto cone = cone_test(parse_poly("x^2 + y^2", vars));
  CHECK(cone.is_cone);
  REQUIRE(cone.kernel.size() == 1);
  CHECK(cone.kernel[0] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK_FALSE(cone_test(perazzo().f).is_cone);
  // A disguised cone: same quadric after mixing z into x.
  auto hidden = parse_poly("x^2 + 2*x*z + y^2 + z^2", vars);
  auto res = cone_test(hidden);
  CHECK(res.is_cone);
  REQUIRE(res.kernel.size() == 1);
  // The kernel vector recovers the hidden direction: df/dx = df/dz here.
  Rat cx = res.kernel[0][0], cz = res.kernel[0][2];
  CHECK(cx == -cz);
}

TEST_CASE("profile of the perazzo cubic matches the frozen values") {
  auto p = hessian_profile(perazzo().f);
  CHECK(p.n_vars == 5);
  CHECK(p.degree == 3);
  CHECK(p.hess_is_zero);
  CHECK(p.hess_certificate == Certificate::Exact);
  CHECK(p.generic_rank == 4);
  CHECK(p.rank_mod_f == 4);
  CHECK(p.dim_polar_image == 3);
  CHECK(p.dim_dual == 2);
  CHECK(p.dual_codim_in_polar == 1);
  CHECK_FALSE(p.is_cone);
}

TEST_CASE("profile of a smooth quadric") {
  auto p = hessian_profile(parse_poly("x^2 + y^2 + z^2"));
  CHECK_FALSE(p.hess_is_zero);
  CHECK(p.generic_rank == 3);
  CHECK(p.rank_mod_f == 3);
  CHECK(p.dual_codim_in_polar == 1);  // dual of a smooth conic is a conic
  CHECK_FALSE(p.is_cone);
}

TEST_CASE("profile input validation") {
  auto vars = VarSet::make({"x", "y"});
  CHECK_THROWS_WITH(hessian_profile(PolyQ::constant(vars, Rat(3))),
                    "profile needs a nonconstant polynomial");
  CHECK_THROWS_WITH(hessian_profile(parse_poly("x^2 + y", vars)),
                    "inhomogeneous input");
  CHECK_THROWS_WITH(hessian_profile(parse_poly("x + y", vars)),
                    "profile needs degree at least 2");
}

TEST_CASE("profiles agree between exact and sampled rank strategies") {
  SampleConfig cfg;
  ProfileOptions exact_opts;
  exact_opts.rank_strategy = RankStrategy::Exact;
  ProfileOptions sample_opts;
  sample_opts.rank_strategy = RankStrategy::Sample;
  for (const auto* id : {"perazzo", "scroll-dual-closed"}) {
    auto inst = build_family(id, {});
    CAPTURE(id);
    auto a = hessian_profile(inst.f, cfg, exact_opts);
    auto b = hessian_profile(inst.f, cfg, sample_opts);
    CHECK(a.generic_rank == b.generic_rank);
    CHECK(a.rank_mod_f == b.rank_mod_f);
    CHECK(a.hess_is_zero == b.hess_is_zero);
  }
}
