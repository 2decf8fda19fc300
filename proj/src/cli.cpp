#include "recperm/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recperm/counts.hpp"
#include "recperm/enumerate.hpp"
#include "recperm/pe.hpp"
#include "recperm/poset.hpp"
#include "recperm/samplers.hpp"
#include "recperm/table.hpp"
#include "recperm/verify.hpp"

namespace recperm {

namespace {

struct CommandConfig {
  std::string model = "two-param";
  std::string theta = "1";
  std::string zeta = "1";
  std::string alpha;
  std::string family;
  std::string p = "1/2";
  std::string shape_file;
  std::string profile;
  std::string composition;
  std::string mu;
  Value n = 0;
  Value n2 = 0;
  Value l = -1, u = -1, l2 = -1, u2 = -1;
  Value r = 0;
  Value max_n = 20;
  Value n_max = 9;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  std::uint64_t count = 1;
  int jobs = 1;
  std::string format = "text";
  std::string suite;
  std::string experiment;
  std::string law = "two-param";
};

TwoParam two_param_of(const CommandConfig& cfg) {
  return TwoParam(Rational::parse(cfg.theta), Rational::parse(cfg.zeta));
}

GeneralParams general_of(const CommandConfig& cfg) {
  GeneralParams g =
      parse_alpha_spec(Rational::parse(cfg.theta), Rational::parse(cfg.zeta), cfg.alpha);
  validate_principal(g);
  return g;
}

LimitFamily family_of(const CommandConfig& cfg) {
  const Rational param = Rational::parse(cfg.p);
  if (cfg.family == "bernoulli-pyramid") return LimitFamily(LimitKind::kBernoulliPyramid, param);
  if (cfg.family == "single-record") return LimitFamily(LimitKind::kSingleRecord, param);
  if (cfg.family == "theta-zero")
    return LimitFamily(LimitKind::kThetaZero, Rational::parse(cfg.zeta));
  if (cfg.family == "zeta-zero")
    return LimitFamily(LimitKind::kZetaZero, Rational::parse(cfg.theta));
  throw std::invalid_argument(
      "unknown family (expected bernoulli-pyramid|single-record|theta-zero|zeta-zero)");
}

void require_word_cap(const CommandConfig& cfg, Value n) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  if (n > cfg.max_n)
    throw std::invalid_argument("n exceeds the word cap (raise with --max-n)");
}

int cmd_sample(const CommandConfig& cfg, std::ostream& out) {
  require_word_cap(cfg, cfg.n);
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    Permutation p = [&]() -> Permutation {
      if (cfg.model == "two-param") return sample_two_param(cfg.n, two_param_of(cfg), rng);
      if (cfg.model == "general") return sample_general(cfg.n, general_of(cfg), rng);
      if (cfg.model == "limit") return sample_limit(cfg.n, family_of(cfg), rng);
      if (cfg.model == "shape") {
        if (cfg.shape_file.empty()) throw std::invalid_argument("--shape-file required");
        return sample_from_shape(read_shape_file(cfg.shape_file), cfg.n, rng);
      }
      if (cfg.model == "window") {
        const Rational t = Rational::parse(cfg.theta), z = Rational::parse(cfg.zeta);
        if (t.den() != BigInt(1) || z.den() != BigInt(1))
          throw std::invalid_argument("window model needs integer theta and zeta");
        return sample_integer_window(cfg.n, t.num().to_double(), z.num().to_double(), rng);
      }
      if (cfg.model == "conditioned") {
        if (cfg.profile.empty()) throw std::invalid_argument("--profile required");
        return sample_conditioned(parse_profile(cfg.profile), rng);
      }
      throw std::invalid_argument("unknown model: " + cfg.model);
    }();
    if (cfg.format == "json")
      out << sample_record_json(p) << '\n';
    else
      out << format_permutation(p) << '\n';
  }
  return 0;
}

Law law_of(const CommandConfig& cfg) {
  if (cfg.law == "two-param") return TwoParamLaw{two_param_of(cfg)};
  if (cfg.law == "general") return GeneralLaw{general_of(cfg)};
  if (cfg.law == "limit-family") return LimitLaw{family_of(cfg)};
  if (cfg.law == "integer-window") {
    const Rational t = Rational::parse(cfg.theta), z = Rational::parse(cfg.zeta);
    if (t.den() != BigInt(1) || z.den() != BigInt(1))
      throw std::invalid_argument("integer-window law needs integer theta and zeta");
    return IntegerWindowLaw{static_cast<Value>(t.num().to_double()),
                            static_cast<Value>(z.num().to_double())};
  }
  if (cfg.law == "from-shape-fixed") {
    const TwoSidedShape shape = read_shape_file(cfg.shape_file);
    RationalShape rational;
    rational.center_index = shape.center_index;
    for (double v : shape.rho) {
      // shape files carry decimals; snap to a small rational grid
      rational.rho.push_back(Rational(static_cast<std::int64_t>(v * 1e6 + 0.5), 1000000));
    }
    return FixedShapeLaw{rational};
  }
  throw std::invalid_argument("unknown law: " + cfg.law);
}

int cmd_exact_table(const CommandConfig& cfg, std::ostream& out) {
  const DistTable table = pushforward_table(cfg.n, law_of(cfg));
  if (cfg.format == "json") {
    out << dist_table_to_json(table) << '\n';
  } else if (cfg.format == "csv") {
    out << dist_table_to_csv(table);
  } else {
    for (const auto& [p, prob] : table.probabilities)
      out << format_permutation(p) << "  " << prob.to_string() << '\n';
  }
  return 0;
}

int cmd_exact_wtable(const CommandConfig& cfg, std::ostream& out) {
  const WTable table = cfg.alpha.empty() ? w_table(two_param_of(cfg), cfg.n_max)
                                         : w_table(general_of(cfg), cfg.n_max);
  if (cfg.format == "json")
    out << w_table_to_json(table) << '\n';
  else if (cfg.format == "csv")
    out << w_table_to_csv(table);
  else
    for (const auto& [key, prob] : table.w) {
      const auto& [n, l, u] = key;
      out << "w_" << n << "(" << l << "," << u << ") = " << prob.to_string() << '\n';
    }
  return 0;
}

int cmd_exact_stirling(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (cfg.l >= 0 && cfg.u >= 0) {
    out << record_stirling(cfg.n, cfg.l, cfg.u).to_decimal() << '\n';
    return 0;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (Value l = 0; l <= cfg.n - 1; ++l)
    for (Value u = 0; l + u <= cfg.n - 1; ++u) {
      const BigCount c = record_stirling(cfg.n, l, u);
      if (c.is_zero()) continue;
      if (cfg.format == "json")
        entries.push_back({{"l", l}, {"u", u}, {"count", c.to_decimal()}});
      else
        out << "(" << l << "," << u << "): " << c.to_decimal() << '\n';
    }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["entries"] = entries;
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  std::vector<SuiteReport> reports;
  auto run_one = [&](const std::string& suite) {
    if (suite == "identities") return run_identities_suite();
    if (suite == "pushforward") return run_pushforward_suite();
    if (suite == "diagram") return run_diagram_suite();
    if (suite == "uniformity") return run_uniformity_suite();
    if (suite == "indicators") return run_indicators_suite();
    if (suite == "dual") return run_dual_suite();
    if (suite == "errata") return run_errata_suite();
    if (suite == "boundary") return run_boundary_suite();
    throw std::invalid_argument("unknown suite: " + suite);
  };
  if (cfg.suite == "all") {
    for (const char* name : {"identities", "pushforward", "diagram", "uniformity",
                             "indicators", "dual", "errata", "boundary"})
      reports.push_back(run_one(name));
  } else {
    reports.push_back(run_one(cfg.suite));
  }
  bool all_pass = true;
  for (const SuiteReport& r : reports) {
    all_pass = all_pass && r.pass();
    if (cfg.format == "json") {
      out << r.to_json() << '\n';
    } else {
      out << r.to_text();
      // failures always get a machine-readable line
      if (!r.pass()) out << r.to_json() << '\n';
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_mc(const CommandConfig& cfg, std::ostream& out) {
  const McReport report = mc_asymptotics(parse_experiment(cfg.experiment), two_param_of(cfg),
                                         cfg.n, cfg.trials, cfg.seed, cfg.jobs);
  if (cfg.format == "json")
    out << report.to_json() << '\n';
  else
    out << report.to_table();
  return report.verdict ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coherent random permutations driven by two-sided records"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--theta", cfg.theta, "lower-record weight (rational)");
    cmd->add_option("--zeta", cfg.zeta, "upper-record weight (rational)");
    cmd->add_option("--alpha", cfg.alpha, "block weights 'k:v,k:v;tail:v'");
    cmd->add_option("--family", cfg.family,
                    "bernoulli-pyramid|single-record|theta-zero|zeta-zero");
    cmd->add_option("--p", cfg.p, "family parameter in [0,1] (rational)");
    cmd->add_option("--shape-file", cfg.shape_file, "JSON shape file");
    cmd->add_option("--seed", cfg.seed, "64-bit seed");
    cmd->add_option("--jobs", cfg.jobs, "worker cap for Monte Carlo");
    cmd->add_option("--format", cfg.format, "text|json|csv");
    cmd->add_option("--max-n", cfg.max_n, "word-size cap for sampling output");
  };

  CLI::App* sample = app.add_subcommand("sample", "draw permutations");
  add_model_opts(sample);
  sample->add_option("--model", cfg.model,
                     "two-param|general|limit|shape|window|conditioned");
  sample->add_option("--n", cfg.n, "permutation size");
  sample->add_option("--count", cfg.count, "number of draws");
  sample->add_option("--profile", cfg.profile, "record profile, e.g. \"1,2,[3],7,8\"");

  CLI::App* exact = app.add_subcommand("exact", "exact computations");
  exact->require_subcommand(1);
  CLI::App* table_cmd = exact->add_subcommand("table", "exact pushforward table");
  add_model_opts(table_cmd);
  table_cmd->add_option("--n", cfg.n, "permutation size")->required();
  table_cmd->add_option("--law", cfg.law,
                        "two-param|general|limit-family|integer-window|from-shape-fixed");
  CLI::App* stirling_cmd = exact->add_subcommand("stirling", "two-sided record counts");
  stirling_cmd->add_option("--n", cfg.n)->required();
  stirling_cmd->add_option("--l", cfg.l);
  stirling_cmd->add_option("--u", cfg.u);
  stirling_cmd->add_option("--format", cfg.format);
  CLI::App* pe_cmd = exact->add_subcommand("pe", "center law");
  pe_cmd->add_option("--n", cfg.n)->required();
  pe_cmd->add_option("--theta", cfg.theta);
  pe_cmd->add_option("--zeta", cfg.zeta);
  pe_cmd->add_option("--r", cfg.r);
  CLI::App* d_cmd = exact->add_subcommand("d", "permutations with a fixed profile");
  d_cmd->add_option("--composition", cfg.composition, "e.g. \"3,1,^1,3,2\"")->required();
  CLI::App* dext_cmd = exact->add_subcommand("dext", "coherent extension count");
  dext_cmd->add_option("--composition", cfg.composition)->required();
  dext_cmd->add_option("--mu", cfg.mu)->required();
  CLI::App* ratio_cmd = exact->add_subcommand("ratio", "extension ratio d(l,m)/d(m)");
  ratio_cmd->add_option("--composition", cfg.composition)->required();
  ratio_cmd->add_option("--mu", cfg.mu)->required();
  CLI::App* phi_cmd = exact->add_subcommand("phi", "boundary function at a shape");
  phi_cmd->add_option("--composition", cfg.composition)->required();
  phi_cmd->add_option("--shape-file", cfg.shape_file)->required();
  CLI::App* followers_cmd = exact->add_subcommand("followers", "immediate followers");
  followers_cmd->add_option("--composition", cfg.composition)->required();
  CLI::App* count_cmd = exact->add_subcommand("count-compositions", "centered compositions");
  count_cmd->add_option("--n", cfg.n)->required();
  CLI::App* ext_cmd = exact->add_subcommand("extension-count", "record-count extensions");
  ext_cmd->add_option("--n", cfg.n)->required();
  ext_cmd->add_option("--l", cfg.l)->required();
  ext_cmd->add_option("--u", cfg.u)->required();
  ext_cmd->add_option("--n2", cfg.n2)->required();
  ext_cmd->add_option("--l2", cfg.l2)->required();
  ext_cmd->add_option("--u2", cfg.u2)->required();
  CLI::App* wtable_cmd = exact->add_subcommand("wtable", "record-count class probabilities");
  add_model_opts(wtable_cmd);
  wtable_cmd->add_option("--n-max", cfg.n_max);

  CLI::App* verify = app.add_subcommand("verify", "exact verification suites");
  verify->add_option("--suite", cfg.suite,
                     "identities|pushforward|diagram|uniformity|indicators|dual|errata|"
                     "boundary|all")
      ->required();
  verify->add_option("--format", cfg.format);

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  add_model_opts(mc);
  mc->add_option("--experiment", cfg.experiment,
                 "shape-convergence|poisson-times|poisson-values|adjacent-pairs|"
                 "gaussian-counts")
      ->required();
  mc->add_option("--n", cfg.n)->required();
  mc->add_option("--trials", cfg.trials);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sample->parsed()) return cmd_sample(cfg, out);
    if (exact->parsed()) {
      if (table_cmd->parsed()) return cmd_exact_table(cfg, out);
      if (stirling_cmd->parsed()) return cmd_exact_stirling(cfg, out);
      if (pe_cmd->parsed()) {
        const TwoParam params = two_param_of(cfg);
        if (cfg.r >= 1) {
          out << pe_pmf(cfg.n, params, cfg.r).to_string() << '\n';
        } else {
          for (Value r = 1; r <= cfg.n; ++r)
            out << r << "  " << pe_pmf(cfg.n, params, r).to_string() << '\n';
        }
        return 0;
      }
      if (d_cmd->parsed()) {
        out << d_count(parse_composition(cfg.composition)).to_decimal() << '\n';
        return 0;
      }
      if (dext_cmd->parsed()) {
        out << d_ext(parse_composition(cfg.composition), parse_composition(cfg.mu)).to_decimal()
            << '\n';
        return 0;
      }
      if (ratio_cmd->parsed()) {
        out << martin_ratio(parse_composition(cfg.composition), parse_composition(cfg.mu))
                   .to_string()
            << '\n';
        return 0;
      }
      if (phi_cmd->parsed()) {
        const TwoSidedShape shape = read_shape_file(cfg.shape_file);
        out << phi_boundary(parse_composition(cfg.composition), shape.rho, shape.center_index)
            << '\n';
        return 0;
      }
      if (followers_cmd->parsed()) {
        for (const CenteredComposition& f : followers(parse_composition(cfg.composition)))
          out << format_composition(f) << '\n';
        return 0;
      }
      if (count_cmd->parsed()) {
        out << composition_count(cfg.n).to_decimal() << '\n';
        return 0;
      }
      if (ext_cmd->parsed()) {
        out << extension_count(cfg.n, cfg.l, cfg.u, cfg.n2, cfg.l2, cfg.u2).to_decimal()
            << '\n';
        return 0;
      }
      if (wtable_cmd->parsed()) return cmd_exact_wtable(cfg, out);
    }
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (mc->parsed()) return cmd_mc(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace recperm
