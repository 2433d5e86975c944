#pragma once

// JSON serialization for reports and instances. Field order is fixed
// (nlohmann::ordered_json) and 64-bit unsigned values (primes, seeds) are
// encoded as decimal strings, since they exceed the 2^53 range that JSON
// numbers can carry faithfully.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "hesskit/families.hpp"
#include "hesskit/hessian.hpp"
#include "hesskit/identity.hpp"
#include "hesskit/poly_io.hpp"
#include "hesskit/version.hpp"

namespace hesskit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json u64_json(std::uint64_t v) { return std::to_string(v); }

inline std::uint64_t u64_from_json(const ordered_json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      std::uint64_t v = std::stoull(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw Error("expected a 64-bit unsigned value");
}

inline ordered_json log10_json(double v) {
  if (std::isinf(v) && v < 0) return nullptr;  // exact result, no failure bound
  return v;
}

inline ordered_json config_json(const SampleConfig& cfg) {
  return ordered_json{{"prime", u64_json(cfg.prime)},
                      {"trials", cfg.trials},
                      {"seed", u64_json(cfg.seed)},
                      {"sample_points", cfg.sample_points},
                      {"max_attempts", cfg.max_attempts}};
}

inline SampleConfig config_from_json(const ordered_json& j) {
  SampleConfig cfg;
  cfg.prime = u64_from_json(j.at("prime"));
  cfg.trials = j.at("trials").get<int>();
  cfg.seed = u64_from_json(j.at("seed"));
  cfg.sample_points = j.at("sample_points").get<int>();
  cfg.max_attempts = j.at("max_attempts").get<int>();
  return cfg;
}

inline ordered_json poly_json(const PolyQ& f) {
  ordered_json vars = ordered_json::array();
  for (std::size_t i = 0; i < f.vars()->size(); ++i) vars.push_back(f.vars()->name(i));
  return ordered_json{{"vars", vars}, {"poly", format_poly(f)}};
}

inline PolyQ poly_from_json(const ordered_json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) names.push_back(v.get<std::string>());
  return parse_poly(j.at("poly").get<std::string>(), VarSet::make(names));
}

inline ordered_json profile_json(const HessianProfile& p) {
  return ordered_json{
      {"n_vars", p.n_vars},
      {"degree", p.degree},
      {"hess_is_zero", p.hess_is_zero},
      {"hess_certificate", to_string(p.hess_certificate)},
      {"hess_failure_bound_log10", log10_json(p.hess_failure_bound_log10)},
      {"generic_rank", p.generic_rank},
      {"rank_mod_f", p.rank_mod_f},
      {"rank_mod_method", to_string(p.rank_mod_method)},
      {"dim_polar_image", p.dim_polar_image},
      {"dim_dual", p.dim_dual},
      {"dual_codim_in_polar", p.dual_codim_in_polar},
      {"is_cone", p.is_cone},
  };
}

inline ordered_json identity_json(const IdentityReport& r) {
  ordered_json j{
      {"id", r.id},
      {"claim", r.claim},
      {"passed", r.passed},
      {"mode", r.mode},
      {"trials", r.trials},
      {"degree_bound", r.degree_bound},
      {"failure_bound_log10", log10_json(r.failure_bound_log10)},
      {"prime", r.prime == 0 ? ordered_json(nullptr) : u64_json(r.prime)},
      {"seed", u64_json(r.seed)},
      {"measured_constant",
       r.measured_constant ? ordered_json(*r.measured_constant) : ordered_json(nullptr)},
      {"convention_flag", r.convention_flag},
      {"notes", r.notes},
  };
  return j;
}

inline ordered_json expected_profile_json(const ExpectedProfile& e) {
  ordered_json j = ordered_json::object();
  j["degree"] = e.degree;
  if (e.hess_is_zero) j["hess_is_zero"] = *e.hess_is_zero;
  if (e.is_cone) j["is_cone"] = *e.is_cone;
  if (e.generic_rank) j["generic_rank"] = *e.generic_rank;
  if (e.rank_mod_f) j["rank_mod_f"] = *e.rank_mod_f;
  if (e.dual_codim_in_polar) j["dual_codim_in_polar"] = *e.dual_codim_in_polar;
  return j;
}

inline ordered_json family_json(const FamilyInstance& inst) {
  ordered_json grid = ordered_json::array();
  for (const auto& row : inst.gradient_grid) {
    ordered_json r = ordered_json::array();
    for (std::size_t idx : row) r.push_back(inst.f.vars()->name(idx));
    grid.push_back(r);
  }
  return ordered_json{
      {"family", inst.family_id},
      {"label", inst.label},
      {"params", inst.params},
      {"f", poly_json(inst.f)},
      {"gradient_grid", grid},
      {"expected", expected_profile_json(inst.expected)},
      {"checks", inst.checks},
      {"preferred_sampling_prime", inst.preferred_sampling_prime == 0
                                       ? ordered_json(nullptr)
                                       : u64_json(inst.preferred_sampling_prime)},
  };
}

inline ordered_json cone_json(const ConeResult& c) {
  ordered_json kernel = ordered_json::array();
  for (const auto& v : c.kernel) {
    ordered_json row = ordered_json::array();
    for (const auto& x : v) row.push_back(x.str());
    kernel.push_back(row);
  }
  return ordered_json{{"is_cone", c.is_cone}, {"kernel", kernel}};
}

}  // namespace hesskit
