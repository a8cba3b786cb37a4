#pragma once
// Command-line front end. run_cli is the whole program; tools/greedybasis.cpp
// only forwards argv and the standard streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catalog.hpp"
#include "greedy.hpp"
#include "properties.hpp"
#include "search.hpp"
#include "theorems.hpp"
#include "validate.hpp"

namespace greedybasis {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitCap = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace cli {

struct SpaceFlags {
  std::string space;
  std::string p;
  std::size_t dim = 0;
  std::string weights;
  std::string weights_file;
  std::string space_file;
};

struct SearchFlags {
  int levels = 3;
  std::size_t max_support = 4;
  std::string mode = "exhaustive";
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::uint64_t cap = 2'000'000'000;
};

struct OutputFlags {
  std::string out;
  std::string format;
};

inline void add_space_flags(CLI::App* app, SpaceFlags& f) {
  app->add_option("--space", f.space, "space kind: lp, weighted-l1, weighted-lp, lindenstrauss, custom-weights-file");
  app->add_option("--p", f.p, "exponent p >= 1 or inf");
  app->add_option("--dim", f.dim, "dimension N");
  app->add_option("--weights", f.weights, "comma-separated positive weights");
  app->add_option("--weights-file", f.weights_file, "file with one positive weight per line");
  app->add_option("--space-file", f.space_file, "JSON space spec");
}

inline void add_search_flags(CLI::App* app, SearchFlags& f) {
  app->add_option("--levels", f.levels, "grid levels L: magnitudes j/L, j = 1..L");
  app->add_option("--max-support", f.max_support, "largest support of any object in an instance");
  app->add_option("--mode", f.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  app->add_option("--samples", f.samples, "instances drawn in sampled mode");
  app->add_option("--seed", f.seed, "random seed for sampled mode");
  app->add_option("--workers", f.workers, std::string("worker threads (default: $") + kWorkersEnv + " or all cores)");
  app->add_option("--cap", f.cap, "maximum number of instances per search");
}

inline void add_output_flags(CLI::App* app, OutputFlags& f, const std::string& default_format) {
  app->add_option("--out", f.out, "output file (default: standard output)");
  app->add_option("--format", f.format, "json or csv (default: " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv"}));
}

inline double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinity;
  auto x = parse_decimal(s);
  if (!x) throw UsageError("--p: not a number: " + s);
  return *x;
}

/// Builds the space spec from the flags. `fallback_dim` serves commands that can
/// infer the dimension (trace).
inline SpaceSpec space_spec(const SpaceFlags& f, std::size_t fallback_dim = 0) {
  if (!f.space_file.empty()) {
    if (!f.space.empty()) throw UsageError("give either --space or --space-file, not both");
    std::ifstream in(f.space_file);
    if (!in) throw UsageError("cannot open space file: " + f.space_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("space file is not valid JSON: " + std::string(e.what()));
    }
    return spec_from_json(j);
  }
  const std::string kind_name = f.space.empty() ? std::string("lp") : f.space;
  const auto kind = space_kind_from_name(kind_name);
  if (!kind) throw UsageError("unknown space kind: " + kind_name);
  SpaceSpec s;
  s.kind = *kind;
  s.dim = f.dim ? f.dim : fallback_dim;
  switch (s.kind) {
    case SpaceKind::lp:
      s.p = f.p.empty() ? 2.0 : parse_p(f.p);
      break;
    case SpaceKind::weighted_l1:
    case SpaceKind::weighted_lp:
      if (s.kind == SpaceKind::weighted_lp) {
        if (f.p.empty()) throw UsageError("weighted-lp needs --p");
        s.p = parse_p(f.p);
      }
      if (!f.weights.empty() && !f.weights_file.empty()) throw UsageError("give either --weights or --weights-file");
      if (!f.weights.empty())
        s.weights = parse_decimal_list(f.weights);
      else if (!f.weights_file.empty())
        s.weights = read_weights_file(f.weights_file);
      else
        throw UsageError("weighted spaces need --weights or --weights-file");
      if (f.dim && f.dim != s.weights.size()) throw UsageError("--dim disagrees with the number of weights");
      s.dim = s.weights.size();
      break;
    case SpaceKind::custom_weights_file:
      if (f.weights_file.empty()) throw UsageError("custom-weights-file needs --weights-file");
      s.path = f.weights_file;
      s.p = f.p.empty() ? 1.0 : parse_p(f.p);
      s.dim = f.dim;
      break;
    case SpaceKind::lindenstrauss_l1: break;
    case SpaceKind::direct_sum: throw UsageError("direct_sum spaces are given with --space-file");
  }
  if (s.dim == 0 && s.kind != SpaceKind::custom_weights_file) throw UsageError("--dim is required");
  return s;
}

inline SearchConfig search_config(const SearchFlags& f) {
  SearchConfig cfg;
  cfg.levels = f.levels;
  cfg.max_support = f.max_support;
  cfg.mode = f.mode == "sampled" ? SearchMode::sampled : SearchMode::exhaustive;
  cfg.samples = f.samples;
  cfg.seed = f.seed;
  cfg.workers = f.workers ? f.workers : default_workers();
  cfg.cap = f.cap;
  if (cfg.levels < 1) throw UsageError("--levels must be >= 1");
  if (cfg.cap == 0) throw UsageError("--cap must be positive");
  if (cfg.mode == SearchMode::sampled && cfg.samples == 0) throw UsageError("--samples must be positive");
  return cfg;
}

inline void emit(const OutputFlags& o, const std::string& payload, std::ostream& out) {
  if (o.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << payload;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--dims must look like a:b");
  auto a = parse_decimal(s.substr(0, colon));
  auto b = parse_decimal(s.substr(colon + 1));
  if (!a || !b || *a != std::floor(*a) || *b != std::floor(*b) || *a < 1)
    throw UsageError("--dims bounds must be positive integers");
  if (*a > *b) throw UsageError("--dims must be ascending");
  return {static_cast<std::size_t>(*a), static_cast<std::size_t>(*b)};
}

}  // namespace cli

/// Runs the program; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thresholding Greedy Algorithm and greedy-type basis constants on finite-dimensional sequence spaces",
               "greedybasis"};
  app.require_subcommand(1);

  cli::SpaceFlags space;
  cli::SearchFlags search;
  cli::OutputFlags output;

  auto* analyze = app.add_subcommand("analyze", "estimate constants");
  std::string constants;
  cli::add_space_flags(analyze, space);
  cli::add_search_flags(analyze, search);
  cli::add_output_flags(analyze, output, "json");
  analyze->add_option("--constants", constants, "comma-separated tokens: cq,k,cg,cal,cp,dd,dc,ds,dsc,slc,pslc,f,fp,"
                                                "fstar,fpstar,q,c1,c2")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "check theorems and lemmas");
  std::string theorem;
  bool all = false;
  cli::add_space_flags(verify_cmd, space);
  cli::add_search_flags(verify_cmd, search);
  cli::add_output_flags(verify_cmd, output, "json");
  auto* theorem_opt = verify_cmd->add_option("--theorem", theorem, "theorem id");
  auto* all_opt = verify_cmd->add_flag("--all", all, "every theorem id");
  theorem_opt->excludes(all_opt);

  auto* trace = app.add_subcommand("trace", "run the greedy algorithm and print residuals");
  std::string vector_arg, vector_file;
  std::optional<std::size_t> steps;
  cli::add_space_flags(trace, space);
  cli::add_output_flags(trace, output, "json");
  trace->add_option("--vector", vector_arg, "comma-separated coefficients");
  trace->add_option("--vector-file", vector_file, "file with one coefficient per line");
  trace->add_option("--steps", steps, "number of greedy steps M (default: dim)");

  auto* growth = app.add_subcommand("growth", "constant estimates over a range of dimensions");
  std::string family, dims, constant, growth_p;
  cli::add_search_flags(growth, search);
  cli::add_output_flags(growth, output, "csv");
  growth->add_option("--family", family, "lp, weighted-l1-linear, direct-sum-l1-l2, lindenstrauss")->required();
  growth->add_option("--p", growth_p, "exponent for the lp family");
  growth->add_option("--dims", dims, "dimension range a:b")->required();
  growth->add_option("--constant", constant, "constant token")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in spaces");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "one line per space kind with its parameters");

  auto* validate = app.add_subcommand("validate", "spot-check the norm axioms and semi-normalization");
  cli::add_space_flags(validate, space);
  cli::add_search_flags(validate, search);
  cli::add_output_flags(validate, output, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (output.format.empty()) output.format = growth->parsed() ? "csv" : "json";

  try {
    if (analyze->parsed()) {
      std::vector<ConstantKind> kinds;
      std::stringstream ss(constants);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto k = kind_from_token(tok);
        if (!k) throw UsageError("unknown constant token: " + tok);
        kinds.push_back(*k);
      }
      if (kinds.empty()) throw UsageError("--constants is empty");
      const auto sp = make_space(cli::space_spec(space));
      const auto cfg = cli::search_config(search);
      if (output.format == "csv") {
        std::string csv = "kind,value,exactness\n";
        for (auto k : kinds) {
          const auto e = estimate_constant(sp, k, cfg);
          csv += std::string(token(k)) + "," + format_double(e.value) + "," + std::string(exactness_name(e)) + "\n";
        }
        cli::emit(output, csv, out);
      } else {
        auto arr = nlohmann::json::array();
        for (auto k : kinds) arr.push_back(to_json(estimate_constant(sp, k, cfg)));
        cli::emit(output, cli::dump(arr), out);
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (!all && theorem.empty()) throw UsageError("verify needs --theorem or --all");
      if (!all && !is_theorem_id(theorem)) throw UsageError("unknown theorem id: " + theorem);
      const auto sp = make_space(cli::space_spec(space));
      EstimateCache cache(sp, cli::search_config(search));
      nlohmann::json j;
      bool ok = true;
      if (all) {
        j["theorem"] = "all";
        j["space"] = sp.descriptor();
        auto checks = nlohmann::json::array();
        for (auto id : kTheoremIds) {
          const auto rep = verify(cache, id);
          ok = ok && rep.ok();
          for (const auto& c : rep.checks) {
            auto cj = to_json(c);
            cj["theorem"] = id;
            checks.push_back(std::move(cj));
          }
        }
        j["checks"] = std::move(checks);
        j["pass"] = ok;
      } else {
        const auto rep = verify(cache, theorem);
        ok = rep.ok();
        j = to_json(rep);
        for (auto& c : j["checks"]) c["theorem"] = theorem;
      }
      if (output.format == "csv") {
        std::string csv = "theorem,desc,mode,bound,observed,pass,advisory\n";
        const auto num = [](const nlohmann::json& v) { return v.is_number() ? format_double(v.get<double>()) : ""; };
        for (const auto& c : j["checks"]) {
          std::string desc = c["desc"].get<std::string>();
          for (std::size_t at = 0; (at = desc.find('"', at)) != std::string::npos; at += 2) desc.insert(at, "\"");
          csv += c["theorem"].get<std::string>() + ",\"" + desc + "\"," + c["mode"].get<std::string>() + "," +
                 num(c["bound"]) + "," + num(c["observed"]) + "," +
                 (c["pass"].get<bool>() ? "true" : "false") + "," + (c["advisory"].get<bool>() ? "true" : "false") +
                 "\n";
        }
        cli::emit(output, csv, out);
      } else {
        cli::emit(output, cli::dump(j), out);
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (trace->parsed()) {
      if (vector_arg.empty() == vector_file.empty()) throw UsageError("trace needs exactly one of --vector, --vector-file");
      std::vector<double> v;
      try {
        v = vector_arg.empty() ? read_decimal_file(vector_file) : parse_decimal_list(vector_arg);
      } catch (const InvalidSpec& e) {
        throw UsageError(e.what());
      }
      const auto sp = make_space(cli::space_spec(space, v.size()));
      if (v.size() != sp.dim()) throw UsageError("vector length differs from the space dimension");
      const auto t = tga_run(sp, CoeffVector(v), steps.value_or(sp.dim()));
      cli::emit(output, output.format == "csv" ? trace_csv(t) : cli::dump(to_json(t)), out);
      return kExitOk;
    }

    if (growth->parsed()) {
      const auto fam = family_from_name(family);
      if (!fam) throw UsageError("unknown family: " + family);
      const auto kind = kind_from_token(constant);
      if (!kind) throw UsageError("unknown constant token: " + constant);
      const auto [a, b] = cli::parse_range(dims);
      const double p = growth_p.empty() ? 2.0 : cli::parse_p(growth_p);
      const auto rows = growth_curve(*fam, a, b, *kind, cli::search_config(search), p);
      cli::emit(output, output.format == "csv" ? growth_csv(rows) : cli::dump(to_json(rows)), out);
      return kExitOk;
    }

    if (catalog_list->parsed()) {
      for (const auto& e : kCatalog) out << e.kind << "\t" << e.parameters << "\n";
      return kExitOk;
    }

    if (validate->parsed()) {
      const auto sp = make_space_unchecked(cli::space_spec(space));
      const auto rep = validate_space(sp, cli::search_config(search));
      cli::emit(output, cli::dump(to_json(rep)), out);
      return rep.ok() ? kExitOk : kExitFailed;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownTheorem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace greedybasis
