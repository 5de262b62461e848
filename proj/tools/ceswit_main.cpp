// Command-line driver for the CES / entanglement-witness toolkit. Talks to
// the library exclusively through the C API; reports are JSON.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ceswit/ceswit.h"

using nlohmann::json;

namespace {

struct Options {
  int m = 3;
  int n = 0;
  std::string family;
  std::uint64_t seed = 42;
  int samples = 0;
  int trials = 10;
  double tol_rank = 0.0;
  std::vector<double> eps;
  std::string json_path;
  std::string in_path;
  int member = 0;
  int target = 0;
  int random_dim = 0;
  std::vector<double> lambdas;
};

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ceswit_string_free(s);
  return out;
}

void raise_on(ceswit_status st) {
  if (st == CESWIT_OK) return;
  const std::string msg = ceswit_last_error();
  if (st == CESWIT_ERR_INVALID_ARGUMENT || st == CESWIT_ERR_PARSE)
    throw UsageFailure(msg);
  throw CheckFailure(msg);
}

ceswit_config make_config(const Options& o) {
  ceswit_config cfg = ceswit_config_default();
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.trials = o.trials;
  cfg.rank_rel = o.tol_rank;
  return cfg;
}

json config_echo(const Options& o, const std::string& command) {
  json cfg{{"command", command}, {"seed", o.seed}};
  if (!o.family.empty()) cfg["family"] = o.family;
  if (o.m) cfg["m"] = o.m;
  if (o.n) cfg["n"] = o.n;
  if (o.samples) cfg["samples"] = o.samples;
  if (o.tol_rank > 0) cfg["tol_rank"] = o.tol_rank;
  if (!o.eps.empty()) cfg["eps"] = o.eps;
  if (!o.in_path.empty()) cfg["in"] = o.in_path;
  return cfg;
}

// Opens the subspace named by --family/--in; caller owns the handle.
ceswit_subspace* open_subspace(const Options& o) {
  ceswit_subspace* s = nullptr;
  if (!o.in_path.empty()) {
    std::ifstream in(o.in_path);
    if (!in) throw UsageFailure("cannot open " + o.in_path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    raise_on(ceswit_subspace_from_json(text.c_str(), &s));
    return s;
  }
  if (o.family.empty())
    throw UsageFailure("either --family or --in is required");
  if (o.family == "footnote_pair") {
    raise_on(ceswit_footnote_member(o.member, &s));
    return s;
  }
  const int n = o.n > 0 ? o.n : o.m;
  raise_on(ceswit_family(o.family.c_str(), o.m, n, &s));
  return s;
}

// Random spanning set as subspace JSON; orthonormalized on the way in.
std::string random_subspace_json(int m, int n, int dim, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> nd;
  json basis = json::array();
  for (int i = 0; i < dim; ++i) {
    json v = json::array();
    for (int k = 0; k < m * n; ++k) v.push_back(json::array({nd(eng), nd(eng)}));
    basis.push_back(std::move(v));
  }
  return json{{"m", m}, {"n", n}, {"basis", basis}}.dump();
}

std::chrono::steady_clock::time_point g_start;

void emit(const Options& o, json report, bool pass) {
  report["versions"] = json{{"ceswit", ceswit_version()}};
  report["pass"] = pass;
  report["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - g_start)
                          .count();
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw UsageFailure("cannot write " + o.json_path);
    out << report.dump(2) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int run_construct(const Options& o) {
  ceswit_subspace* s = open_subspace(o);
  const ceswit_config cfg = make_config(o);
  json report{{"config", config_echo(o, "construct")}};
  report["subspace"] = json::parse(take_string([&] {
    char* js = nullptr;
    raise_on(ceswit_subspace_to_json(s, &js));
    return js;
  }()));
  char* cert_js = nullptr;
  raise_on(ceswit_ces_certificate(s, &cfg, &cert_js));
  const json cert = json::parse(take_string(cert_js));
  int supported = 0;
  raise_on(ceswit_is_supported(s, &cfg, &supported));
  ceswit_subspace_free(s);
  report["is_ces"] = cert;
  report["is_supported"] = supported == 1;
  const bool pass = cert.at("is_ces").get<bool>();
  std::cout << "construct: dim " << report["subspace"]["basis"].size()
            << " subspace of H_{" << report["subspace"]["m"] << ","
            << report["subspace"]["n"] << "}; is_ces="
            << (pass ? "true" : "false")
            << " supported=" << (supported ? "true" : "false") << "\n";
  emit(o, std::move(report), pass);
  return pass ? 0 : 1;
}

int run_span(const Options& o) {
  ceswit_subspace* s = open_subspace(o);
  const ceswit_config cfg = make_config(o);
  char* js = nullptr;
  raise_on(ceswit_span_report(s, &cfg, &js));
  ceswit_subspace_free(s);
  json rep = json::parse(take_string(js));
  json report{{"config", config_echo(o, "span")}, {"span", rep}};
  const bool has_match = !rep.at("kernel_match").is_null();
  const bool pass = !has_match || rep["kernel_match"].get<bool>();
  std::cout << "span: span_dim " << rep["span_dim"] << ", kernel dim "
            << rep["kernel"].size() << ", samples " << rep["samples_used"]
            << ", kernel_match "
            << (has_match ? (rep["kernel_match"].get<bool>() ? "true" : "false")
                          : "n/a")
            << "\n";
  emit(o, std::move(report), pass);
  return pass ? 0 : 1;
}

int run_witness(const Options& o) {
  for (double e : o.eps)
    if (!(e > 0.0)) throw UsageFailure("--eps values must be positive");
  ceswit_subspace* s = open_subspace(o);
  const ceswit_config cfg = make_config(o);
  char* js = nullptr;
  raise_on(ceswit_witness_report(
      s, o.lambdas.empty() ? nullptr : o.lambdas.data(), o.lambdas.size(),
      o.eps.empty() ? nullptr : o.eps.data(), o.eps.size(), &cfg, &js));
  ceswit_subspace_free(s);
  json rep = json::parse(take_string(js));
  const bool npt = rep.at("npt").get<bool>();
  const double block_min = rep.at("block_positivity_min").get<double>();
  const bool all_neg = rep.at("optimality").at("all_negative").get<bool>();
  const bool pass = npt && block_min >= -1e-9 && all_neg;
  std::cout << "witness: min_eig_W " << rep["min_eig_W"] << " (NPT "
            << (npt ? "true" : "false") << "), block min " << block_min
            << ", optimality all_negative " << (all_neg ? "true" : "false")
            << "\n";
  json report{{"config", config_echo(o, "witness")}, {"witness", rep}};
  emit(o, std::move(report), pass);
  return pass ? 0 : 1;
}

int run_extend(const Options& o) {
  ceswit_subspace* s = nullptr;
  if (o.random_dim > 0) {
    const std::string js =
        random_subspace_json(o.m, o.n > 0 ? o.n : o.m, o.random_dim, o.seed);
    raise_on(ceswit_subspace_from_json(js.c_str(), &s));
  } else {
    s = open_subspace(o);
  }
  const ceswit_config cfg = make_config(o);
  int maxd = 0;
  int m = 0, n = 0, dim = 0;
  raise_on(ceswit_subspace_dims(s, &m, &n, &dim));
  raise_on(ceswit_max_ces_dim(m, n, &maxd));
  if (o.target > maxd) {
    ceswit_subspace_free(s);
    throw UsageFailure("--target exceeds the maximal CES dimension " +
                       std::to_string(maxd));
  }
  ceswit_subspace* out = nullptr;
  char* js = nullptr;
  raise_on(ceswit_extend(s, o.target, 16, &cfg, &out, &js));
  ceswit_subspace_free(s);
  json chain = json::parse(take_string(js));
  char* sub_js = nullptr;
  raise_on(ceswit_subspace_to_json(out, &sub_js));
  ceswit_subspace_free(out);
  json report{{"config", config_echo(o, "extend")},
              {"chain", chain},
              {"subspace", json::parse(take_string(sub_js))}};
  bool pass = true;
  for (const json& step : chain.at("steps"))
    pass = pass && step.at("certificate").at("is_ces").get<bool>();
  std::cout << "extend: dim " << chain["initial_dim"] << " -> "
            << chain["final_dim"] << " in " << chain["steps"].size()
            << " steps, all certified " << (pass ? "true" : "false") << "\n";
  emit(o, std::move(report), pass);
  return pass ? 0 : 1;
}

int run_suite(const Options& o) {
  const ceswit_config cfg = make_config(o);
  int all_pass = 0;
  char* js = nullptr;
  raise_on(ceswit_suite(&cfg, &all_pass, &js));
  json rep = json::parse(take_string(js));
  for (const json& cr : rep.at("criteria"))
    std::cout << (cr.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ")
              << cr.at("id").get<std::string>() << " "
              << cr.at("name").get<std::string>()
              << (cr.at("pass").get<bool>()
                      ? ""
                      : "  -- " + cr.at("detail").get<std::string>())
              << "\n";
  std::cout << (all_pass ? "suite: all criteria passed"
                         : "suite: some criteria FAILED")
            << "\n";
  json report{{"config", config_echo(o, "suite")}, {"suite", rep}};
  emit(o, std::move(report), all_pass == 1);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  g_start = std::chrono::steady_clock::now();
  CLI::App app{"completely entangled subspaces and decomposable witnesses"};
  app.set_version_flag("--version", ceswit_version());
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool family_opts) {
    cmd->add_option("--seed", o.seed, "RNG seed (pins every randomized result)");
    cmd->add_option("--json", o.json_path, "write the JSON report to this path");
    cmd->add_option("--tol-rank", o.tol_rank, "relative singular value cutoff");
    if (family_opts) {
      cmd->add_option("--family", o.family,
                      "symmetric | general | counterexample | footnote_pair");
      cmd->add_option("--m", o.m, "first local dimension");
      cmd->add_option("--n", o.n, "second local dimension");
      cmd->add_option("--member", o.member, "footnote_pair member (0 or 1)");
      cmd->add_option("--in", o.in_path, "subspace JSON input path");
    }
  };

  CLI::App* construct = app.add_subcommand("construct", "build a subspace family");
  add_common(construct, true);

  CLI::App* span = app.add_subcommand("span", "span analysis of conjugated product vectors");
  add_common(span, true);
  span->add_option("--samples", o.samples, "generic x draws (default 4mn)");

  CLI::App* witness = app.add_subcommand("witness", "build and verify a decomposable witness");
  add_common(witness, true);
  witness->add_option("--eps", o.eps, "optimality eps values (repeatable)");
  witness->add_option("--lambda", o.lambdas, "witness weights (repeatable)");
  witness->add_option("--trials", o.trials, "random PSD matrices per eps");

  CLI::App* extend = app.add_subcommand("extend", "extend a CES towards maximal dimension");
  add_common(extend, true);
  extend->add_option("--target", o.target, "target dimension (default: maximal)");
  extend->add_option("--random-dim", o.random_dim,
                     "start from a random subspace of this dimension");

  CLI::App* suite = app.add_subcommand("suite", "run the full acceptance battery");
  add_common(suite, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit cleanly; anything else is a usage error
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(o);
    if (span->parsed()) return run_span(o);
    if (witness->parsed()) return run_witness(o);
    if (extend->parsed()) return run_extend(o);
    if (suite->parsed()) return run_suite(o);
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
