// Command-line surface: family construction, hessian profiles, named
// verification checks and the acceptance suite, with optional JSON reports.
//
// Exit codes: 0 everything passed; 1 a check, criterion or --expect
// comparison failed; 2 the invocation or its inputs could not be processed.
#include <hesskit/acceptance.hpp>
#include <hesskit/checks.hpp>
#include <hesskit/hesskit.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using hesskit::ordered_json;

struct ParamFlags {
  std::map<std::string, std::string> values;

  void attach(CLI::App* cmd, const std::vector<std::string>& names) {
    for (const std::string& name : names) {
      auto setter = [this, name](const std::string& v) { values[name] = v; };
      cmd->add_option_function<std::string>("--" + name, setter,
                                            "family/check parameter '" + name + "'");
    }
  }
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw hesskit::Error(what + " must be an unsigned 64-bit integer, got '" + text + "'");
  }
}

void write_json_file(const std::string& path, const ordered_json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw hesskit::Error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

ordered_json acceptance_json(const hesskit::AcceptanceRecord& rec) {
  return ordered_json{{"index", rec.index},   {"id", rec.id},
                      {"claim", rec.claim},   {"passed", rec.passed},
                      {"certificate", rec.certificate}, {"details", rec.details}};
}

void print_identity_report(const hesskit::IdentityReport& rep) {
  std::printf("[%s] %s  %s\n", rep.passed ? "pass" : "FAIL", rep.id.c_str(),
              rep.claim.c_str());
  std::printf("       mode: %s", rep.mode.c_str());
  if (rep.trials > 0) std::printf(", trials: %d", rep.trials);
  if (rep.measured_constant) {
    std::printf(", measured constant: %s", rep.measured_constant->c_str());
  }
  if (rep.convention_flag) std::printf(" (convention flag)");
  std::printf("\n");
  for (const auto& note : rep.notes) std::printf("       %s\n", note.c_str());
}

// --expect comparisons against the serialized profile, so the accepted keys
// and value spellings are exactly the JSON report fields.
std::vector<std::string> check_expectations(
    const ordered_json& profile, const std::vector<std::string>& expects) {
  std::vector<std::string> failures;
  for (const std::string& e : expects) {
    auto eq = e.find('=');
    if (eq == std::string::npos) {
      throw hesskit::Error("--expect takes key=value, got '" + e + "'");
    }
    std::string key = e.substr(0, eq);
    std::string want = e.substr(eq + 1);
    if (key == "codim") key = "dual_codim_in_polar";
    if (!profile.contains(key)) {
      throw hesskit::Error("unknown profile field '" + key + "'");
    }
    const ordered_json& got = profile.at(key);
    std::string got_text;
    if (got.is_string()) {
      got_text = got.get<std::string>();
    } else {
      got_text = got.dump();
    }
    if (got_text != want) {
      failures.push_back(key + ": expected " + want + ", measured " + got_text);
    }
  }
  return failures;
}

hesskit::FamilyInstance instance_from_flags(const std::string& id,
                                            const ParamFlags& flags) {
  return hesskit::build_family(id, flags.values);
}

hesskit::PolyQ poly_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hesskit::Error("cannot open '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw hesskit::Error("cannot parse '" + path + "' as JSON: " + e.what());
  }
  if (j.is_object() && j.contains("f")) return hesskit::poly_from_json(j.at("f"));
  return hesskit::poly_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hesskit;

  CLI::App app{"exact hessian profiles of projective hypersurfaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  std::string prime_text, seed_text;
  SampleConfig cfg;
  std::string json_path;
  bool timing = false;
  app.add_option("--prime", prime_text, "sampling prime (default 2^61 - 1)");
  app.add_option("--trials", cfg.trials, "evaluation points per probabilistic check");
  app.add_option("--seed", seed_text, "seed for all random streams");
  app.add_option("--sample-points", cfg.sample_points,
                 "points drawn on V(f) for sampled ranks");
  app.add_option("--max-attempts", cfg.max_attempts,
                 "attempt budget for the point sampler");
  app.add_option("--json", json_path, "write a JSON run report to this path ('-' for stdout)");
  app.add_flag("--timing", timing, "include wall-clock time in the report");

  const std::vector<std::string> param_names = {"n", "m", "r", "a", "b", "g", "size"};

  auto* family = app.add_subcommand("family", "list or build hypersurface families");
  family->require_subcommand(1);
  auto* family_list = family->add_subcommand("list", "print the family catalog");
  auto* family_build = family->add_subcommand("build", "construct one instance");
  std::string build_id;
  std::string build_out;
  ParamFlags build_params;
  family_build->add_option("id", build_id, "family identifier")->required();
  family_build->add_option("-o,--output", build_out, "write the instance JSON here");
  build_params.attach(family_build, param_names);

  auto* profile_cmd = app.add_subcommand("profile", "hessian profile of a hypersurface");
  std::string profile_file, profile_poly, profile_family;
  std::string rank_mod_text = "auto", zero_text = "auto";
  std::vector<std::string> expects;
  ParamFlags profile_params;
  profile_cmd->add_option("input", profile_file, "instance or polynomial JSON file");
  profile_cmd->add_option("--poly", profile_poly, "polynomial text (variables inferred)");
  profile_cmd->add_option("--family", profile_family, "profile a catalog family");
  profile_cmd->add_option("--rank-mod", rank_mod_text,
                          "rank-mod-f strategy: auto, exact or sample");
  profile_cmd->add_option("--zero", zero_text,
                          "hessian zero test: auto, exact or probabilistic");
  profile_cmd->add_option("--expect", expects,
                          "key=value to compare against the profile (repeatable)");
  profile_params.attach(profile_cmd, param_names);

  auto* verify_cmd = app.add_subcommand("verify", "run a named identity check");
  std::string check_id;
  ParamFlags verify_params;
  verify_cmd->add_option("check", check_id, "check identifier (omit to list)");
  verify_params.attach(verify_cmd, param_names);

  auto* acceptance_cmd = app.add_subcommand("acceptance", "run the acceptance criteria");
  std::string only_text;
  acceptance_cmd->add_option("--only", only_text,
                             "comma-separated 1-based criterion indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  ordered_json records = ordered_json::array();
  std::string command;
  bool passed = true;

  try {
    if (!prime_text.empty()) cfg.prime = parse_u64(prime_text, "--prime");
    if (!seed_text.empty()) cfg.seed = parse_u64(seed_text, "--seed");

    if (family_list->parsed()) {
      command = "family list";
      for (const auto& entry : family_catalog()) {
        std::string params;
        for (const auto& p : entry.params) {
          params += params.empty() ? p : ", " + p;
        }
        std::printf("%-20s %s%s%s%s\n", entry.id.c_str(), entry.summary.c_str(),
                    params.empty() ? "" : "  [", params.c_str(),
                    params.empty() ? "" : "]");
        records.push_back(ordered_json{
            {"id", entry.id}, {"summary", entry.summary}, {"params", entry.params}});
      }
    } else if (family_build->parsed()) {
      command = "family build";
      FamilyInstance inst = instance_from_flags(build_id, build_params);
      ordered_json j = family_json(inst);
      std::printf("%s\n", inst.label.c_str());
      std::printf("degree %d in %zu variables, %zu terms\n", inst.expected.degree,
                  inst.f.vars()->size(), inst.f.num_terms());
      std::printf("f = %s\n", format_poly(inst.f).c_str());
      if (!build_out.empty()) write_json_file(build_out, j);
      records.push_back(std::move(j));
    } else if (profile_cmd->parsed()) {
      command = "profile";
      int sources = (!profile_file.empty()) + (!profile_poly.empty()) +
                    (!profile_family.empty());
      if (sources != 1) {
        throw Error("profile needs exactly one of: an input file, --poly or --family");
      }
      PolyQ f = PolyQ::zero(VarSet::make({"x"}));
      ordered_json record = ordered_json::object();
      ProfileOptions opts;
      if (!profile_poly.empty()) {
        f = parse_poly(profile_poly);
      } else if (!profile_family.empty()) {
        FamilyInstance inst = instance_from_flags(profile_family, profile_params);
        f = inst.f;
        record["family"] = inst.label;
        opts.rank_mod_prime = inst.preferred_sampling_prime;
      } else {
        f = poly_from_file(profile_file);
      }
      if (rank_mod_text == "exact") {
        opts.rank_strategy = RankStrategy::Exact;
      } else if (rank_mod_text == "sample") {
        opts.rank_strategy = RankStrategy::Sample;
      } else if (rank_mod_text != "auto") {
        throw Error("--rank-mod must be auto, exact or sample");
      }
      if (zero_text == "exact") {
        opts.zero_mode = ZeroTestMode::Exact;
      } else if (zero_text == "probabilistic") {
        opts.zero_mode = ZeroTestMode::Probabilistic;
      } else if (zero_text != "auto") {
        throw Error("--zero must be auto, exact or probabilistic");
      }
      HessianProfile p = hessian_profile(f, cfg, opts);
      ordered_json pj = profile_json(p);
      record["input"] = poly_json(f);
      record["profile"] = pj;
      for (auto it = pj.begin(); it != pj.end(); ++it) {
        std::printf("%-26s %s\n", it.key().c_str(),
                    it.value().is_string() ? it.value().get<std::string>().c_str()
                                           : it.value().dump().c_str());
      }
      auto failures = check_expectations(pj, expects);
      if (!failures.empty()) {
        passed = false;
        record["expect_failures"] = failures;
        for (const auto& line : failures) {
          std::printf("[FAIL] %s\n", line.c_str());
        }
      }
      records.push_back(std::move(record));
    } else if (verify_cmd->parsed()) {
      command = "verify";
      if (check_id.empty()) {
        for (const auto& entry : check_catalog()) {
          std::string params;
          for (const auto& p : entry.params) {
            params += params.empty() ? p : ", " + p;
          }
          std::printf("%-18s %s%s%s%s\n", entry.id.c_str(), entry.summary.c_str(),
                      params.empty() ? "" : "  [", params.c_str(),
                      params.empty() ? "" : "]");
          records.push_back(ordered_json{
              {"id", entry.id}, {"summary", entry.summary}, {"params", entry.params}});
        }
      } else {
        auto reports = run_check(check_id, verify_params.values, cfg);
        for (const auto& rep : reports) {
          print_identity_report(rep);
          passed = passed && rep.passed;
          records.push_back(identity_json(rep));
        }
      }
    } else if (acceptance_cmd->parsed()) {
      command = "acceptance";
      std::vector<int> only;
      if (!only_text.empty()) {
        std::size_t pos = 0;
        while (pos < only_text.size()) {
          std::size_t comma = only_text.find(',', pos);
          std::string piece = only_text.substr(
              pos, comma == std::string::npos ? std::string::npos : comma - pos);
          try {
            only.push_back(std::stoi(piece));
          } catch (const std::exception&) {
            throw Error("--only takes comma-separated indices, got '" + piece + "'");
          }
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
      auto recs = run_acceptance(cfg, only);
      int failed = 0;
      for (const auto& rec : recs) {
        std::printf("[%s] %2d %-22s %s\n", rec.passed ? "pass" : "FAIL", rec.index,
                    rec.id.c_str(), rec.claim.c_str());
        if (!rec.passed) {
          ++failed;
          for (const auto& line : rec.details) std::printf("       %s\n", line.c_str());
        }
        records.push_back(acceptance_json(rec));
      }
      std::printf("%zu criteria, %d failed\n", recs.size(), failed);
      passed = failed == 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }

  if (!json_path.empty()) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    ordered_json report{
        {"version", kVersion},
        {"command", command},
        {"config", config_json(cfg)},
        {"records", records},
        {"passed", passed},
        {"elapsed_ms", timing ? ordered_json(elapsed) : ordered_json(nullptr)},
    };
    try {
      write_json_file(json_path, report);
    } catch (const Error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
  }
  return passed ? 0 : 1;
}
