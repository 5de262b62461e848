#include "ceswit/ceswit.h"

#include <cstring>
#include <string>

#include "json_io.hpp"

using namespace ceswit;

struct ceswit_subspace {
  Subspace sub;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ToleranceConfig tol_from(const ceswit_config* cfg) {
  ToleranceConfig tol;
  if (cfg) {
    if (cfg->rank_rel > 0) tol.rank_rel = cfg->rank_rel;
    if (cfg->orth_tol > 0) tol.orth_tol = cfg->orth_tol;
  }
  tol.validate();
  return tol;
}

ceswit_config cfg_or_default(const ceswit_config* cfg) {
  return cfg ? *cfg : ceswit_config_default();
}

template <typename Fn>
ceswit_status guarded(Fn&& fn) {
  try {
    fn();
    return CESWIT_OK;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return CESWIT_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CESWIT_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return CESWIT_ERR_SEARCH_FAILED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CESWIT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

ceswit_config ceswit_config_default(void) {
  ceswit_config cfg;
  cfg.seed = 42;
  cfg.samples = 0;
  cfg.trials = 0;
  cfg.rank_rel = 0.0;
  cfg.orth_tol = 0.0;
  return cfg;
}

const char* ceswit_version(void) { return "0.1.0"; }

const char* ceswit_last_error(void) { return g_last_error.c_str(); }

void ceswit_string_free(char* s) { std::free(s); }

void ceswit_subspace_free(ceswit_subspace* s) { delete s; }

ceswit_status ceswit_family(const char* family, int m, int n,
                            ceswit_subspace** out) {
  return guarded([&] {
    if (!family || !out) throw std::invalid_argument("null argument");
    const FamilyKind kind = family_kind_from_name(family);
    FamilySpec spec{kind, m, kind == FamilyKind::symmetric ? m : n, {}};
    *out = new ceswit_subspace{build_family(spec)};
  });
}

ceswit_status ceswit_footnote_member(int index, ceswit_subspace** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    if (index != 0 && index != 1)
      throw std::invalid_argument("footnote member index must be 0 or 1");
    auto pair = footnote_pair();
    *out = new ceswit_subspace{index == 0 ? pair.first : pair.second};
  });
}

ceswit_status ceswit_subspace_from_json(const char* json_text,
                                        ceswit_subspace** out) {
  return guarded([&] {
    if (!json_text || !out) throw std::invalid_argument("null argument");
    *out = new ceswit_subspace{subspace_from_json(json::parse(json_text))};
  });
}

ceswit_status ceswit_subspace_to_json(const ceswit_subspace* s, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) throw std::invalid_argument("null argument");
    *out_json = dup_string(subspace_to_json(s->sub).dump());
  });
}

ceswit_status ceswit_subspace_dims(const ceswit_subspace* s, int* m, int* n,
                                   int* dim) {
  return guarded([&] {
    if (!s) throw std::invalid_argument("null argument");
    if (m) *m = s->sub.m();
    if (n) *n = s->sub.n();
    if (dim) *dim = s->sub.dim();
  });
}

ceswit_status ceswit_ces_certificate(const ceswit_subspace* s,
                                     const ceswit_config* cfg, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) throw std::invalid_argument("null argument");
    const ceswit_config c = cfg_or_default(cfg);
    CesSearchOptions opts;
    opts.seed = c.seed;
    *out_json = dup_string(
        ces_certificate_to_json(is_ces(s->sub, tol_from(cfg), opts)).dump());
  });
}

ceswit_status ceswit_is_supported(const ceswit_subspace* s,
                                  const ceswit_config* cfg, int* out) {
  return guarded([&] {
    if (!s || !out) throw std::invalid_argument("null argument");
    *out = is_supported(s->sub, tol_from(cfg)) ? 1 : 0;
  });
}

ceswit_status ceswit_max_ces_dim(int m, int n, int* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    *out = max_ces_dim(m, n);
  });
}

ceswit_status ceswit_span_report(const ceswit_subspace* s,
                                 const ceswit_config* cfg, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) throw std::invalid_argument("null argument");
    const ceswit_config c = cfg_or_default(cfg);
    Rng rng(c.seed);
    *out_json = dup_string(
        span_report_to_json(span_of_PV(s->sub, c.samples, rng, tol_from(cfg)))
            .dump());
  });
}

ceswit_status ceswit_witness_report(const ceswit_subspace* s,
                                    const double* lambdas, size_t n_lambdas,
                                    const double* eps_grid, size_t n_eps,
                                    const ceswit_config* cfg, char** out_json) {
  return guarded([&] {
    if (!s || !out_json) throw std::invalid_argument("null argument");
    const ceswit_config c = cfg_or_default(cfg);
    const ToleranceConfig tol = tol_from(cfg);
    Eigen::VectorXd lam = Eigen::VectorXd::Ones(s->sub.dim());
    if (lambdas) {
      if (n_lambdas != static_cast<size_t>(s->sub.dim()))
        throw std::invalid_argument("lambdas length must equal dim V");
      for (size_t i = 0; i < n_lambdas; ++i) lam(static_cast<Eigen::Index>(i)) = lambdas[i];
    }
    std::vector<double> eps{1e-3, 1e-2, 0.1};
    if (eps_grid && n_eps > 0) eps.assign(eps_grid, eps_grid + n_eps);
    const WitnessPair wp = build_witness(s->sub, lam, tol);
    Rng rng(c.seed);
    Rng rb = rng.split(1);
    const BlockPositivityResult bp =
        block_positivity_min(wp.w, s->sub.m(), s->sub.n(), 64, rb, tol);
    Rng ro = rng.split(2);
    const OptimalityReport rep =
        verify_optimal(wp, eps, c.trials > 0 ? c.trials : 10, ro, tol);
    json out = witness_pair_to_json(wp);
    out["block_positivity_min"] = bp.value;
    out["npt"] = wp.min_eig_w < -1e-6;
    out["necessary_form"] = check_necessary_form(wp, tol);
    out["optimality"] = optimality_report_to_json(rep);
    *out_json = dup_string(out.dump());
  });
}

ceswit_status ceswit_extend(const ceswit_subspace* s, int target_dim,
                            int max_tries, const ceswit_config* cfg,
                            ceswit_subspace** out, char** out_json) {
  return guarded([&] {
    if (!s || !out) throw std::invalid_argument("null argument");
    const ceswit_config c = cfg_or_default(cfg);
    const ToleranceConfig tol = tol_from(cfg);
    const int maxd = max_ces_dim(s->sub.m(), s->sub.n());
    const int target = target_dim <= 0 ? maxd : target_dim;
    if (target > maxd)
      throw std::invalid_argument("target dimension exceeds the maximal CES dimension");
    if (target < s->sub.dim())
      throw std::invalid_argument("target dimension below the current dimension");
    Subspace v = s->sub;
    Rng rng(c.seed);
    json steps = json::array();
    int step = 0;
    while (v.dim() < target) {
      Rng r = rng.split(step++);
      v = extend_ces(v, r, tol, max_tries > 0 ? max_tries : 16);
      CesSearchOptions opts;
      opts.seed = r.split(9).seed();
      steps.push_back(json{{"dim", v.dim()},
                           {"certificate", ces_certificate_to_json(
                                               is_ces(v, tol, opts))}});
    }
    *out = new ceswit_subspace{v};
    if (out_json) {
      json rep{{"initial_dim", s->sub.dim()},
               {"final_dim", v.dim()},
               {"steps", steps}};
      *out_json = dup_string(rep.dump());
    }
  });
}

ceswit_status ceswit_suite(const ceswit_config* cfg, int* all_pass,
                           char** out_json) {
  return guarded([&] {
    const ceswit_config c = cfg_or_default(cfg);
    const SuiteReport rep = run_acceptance_suite(c.seed, tol_from(cfg));
    if (all_pass) *all_pass = rep.all_pass ? 1 : 0;
    if (out_json) *out_json = dup_string(suite_report_to_json(rep).dump());
  });
}

}  // extern "C"
