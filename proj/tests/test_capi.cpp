// Black-box exercise of the shared-library C surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ceswit/ceswit.h"

using nlohmann::json;

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  ceswit_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("version and error surface") {
  CHECK(std::string(ceswit_version()) == "0.1.0");
  ceswit_subspace* s = nullptr;
  CHECK(ceswit_family("nonsense", 3, 3, &s) == CESWIT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ceswit_last_error()).find("nonsense") != std::string::npos);
  CHECK(ceswit_family(nullptr, 3, 3, &s) == CESWIT_ERR_INVALID_ARGUMENT);
  CHECK(ceswit_subspace_from_json("{not json", &s) == CESWIT_ERR_PARSE);
  CHECK(ceswit_family("general", 4, 4, &s) == CESWIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("family construction and JSON round trip") {
  ceswit_subspace* s = nullptr;
  REQUIRE(ceswit_family("symmetric", 3, 0, &s) == CESWIT_OK);
  int m = 0, n = 0, dim = 0;
  REQUIRE(ceswit_subspace_dims(s, &m, &n, &dim) == CESWIT_OK);
  CHECK(m == 3);
  CHECK(n == 3);
  CHECK(dim == 3);

  char* js = nullptr;
  REQUIRE(ceswit_subspace_to_json(s, &js) == CESWIT_OK);
  const std::string text = take(js);
  const json parsed = json::parse(text);
  CHECK(parsed.at("m") == 3);
  CHECK(parsed.at("basis").size() == 3);
  // complex scalars are [re, im]
  CHECK(parsed["basis"][0][0].is_array());
  CHECK(parsed["basis"][0][0].size() == 2);

  ceswit_subspace* s2 = nullptr;
  REQUIRE(ceswit_subspace_from_json(text.c_str(), &s2) == CESWIT_OK);
  int dim2 = 0;
  REQUIRE(ceswit_subspace_dims(s2, nullptr, nullptr, &dim2) == CESWIT_OK);
  CHECK(dim2 == 3);
  ceswit_subspace_free(s2);
  ceswit_subspace_free(s);
}

TEST_CASE("ces certificate and support via the C surface") {
  ceswit_subspace* s = nullptr;
  REQUIRE(ceswit_family("counterexample", 3, 4, &s) == CESWIT_OK);
  char* js = nullptr;
  REQUIRE(ceswit_ces_certificate(s, nullptr, &js) == CESWIT_OK);
  const json cert = json::parse(take(js));
  CHECK(cert.at("is_ces").get<bool>());
  CHECK(cert.at("best_product_overlap").get<double>() < 1.0 - 1e-6);
  int sup = 0;
  REQUIRE(ceswit_is_supported(s, nullptr, &sup) == CESWIT_OK);
  CHECK(sup == 1);
  ceswit_subspace_free(s);
}

TEST_CASE("span report via the C surface is seed-deterministic") {
  ceswit_subspace* s = nullptr;
  REQUIRE(ceswit_family("symmetric", 4, 0, &s) == CESWIT_OK);
  ceswit_config cfg = ceswit_config_default();
  cfg.seed = 7;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ceswit_span_report(s, &cfg, &a) == CESWIT_OK);
  REQUIRE(ceswit_span_report(s, &cfg, &b) == CESWIT_OK);
  const std::string ja = take(a), jb = take(b);
  CHECK(ja == jb);  // byte-identical payloads for a fixed seed
  const json rep = json::parse(ja);
  CHECK(rep.at("span_dim") == 14);
  CHECK(rep.at("kernel").size() == 2);
  CHECK(rep.at("kernel_match").get<bool>());
  ceswit_subspace_free(s);
}

TEST_CASE("witness report via the C surface") {
  ceswit_subspace* s = nullptr;
  REQUIRE(ceswit_family("symmetric", 3, 0, &s) == CESWIT_OK);
  ceswit_config cfg = ceswit_config_default();
  cfg.trials = 3;
  const double eps[] = {1e-2};
  char* js = nullptr;
  REQUIRE(ceswit_witness_report(s, nullptr, 0, eps, 1, &cfg, &js) == CESWIT_OK);
  const json rep = json::parse(take(js));
  CHECK(rep.at("npt").get<bool>());
  CHECK(rep.at("block_positivity_min").get<double>() >= -1e-9);
  CHECK(rep.at("optimality").at("all_negative").get<bool>());
  CHECK(rep.at("min_eig_W").get<double>() < -1e-6);
  CHECK(rep.at("necessary_form").get<bool>());

  const double bad_lambda[] = {1.0, 1.0};
  CHECK(ceswit_witness_report(s, bad_lambda, 2, eps, 1, &cfg, &js) ==
        CESWIT_ERR_INVALID_ARGUMENT);
  ceswit_subspace_free(s);
}

TEST_CASE("extension chain via the C surface") {
  ceswit_subspace* s = nullptr;
  REQUIRE(ceswit_footnote_member(0, &s) == CESWIT_OK);
  // already maximal: target = dim is a no-op
  ceswit_subspace* out = nullptr;
  char* js = nullptr;
  REQUIRE(ceswit_extend(s, 6, 16, nullptr, &out, &js) == CESWIT_OK);
  const json rep = json::parse(take(js));
  CHECK(rep.at("steps").empty());
  ceswit_subspace_free(out);
  CHECK(ceswit_extend(s, 7, 16, nullptr, &out, &js) ==
        CESWIT_ERR_INVALID_ARGUMENT);
  ceswit_subspace_free(s);

  // grow the symmetric m=3 CES by one dimension
  REQUIRE(ceswit_family("symmetric", 3, 0, &s) == CESWIT_OK);
  REQUIRE(ceswit_extend(s, 4, 16, nullptr, &out, &js) == CESWIT_OK);
  const json rep2 = json::parse(take(js));
  CHECK(rep2.at("final_dim") == 4);
  REQUIRE(rep2.at("steps").size() == 1);
  CHECK(rep2["steps"][0]["certificate"]["is_ces"].get<bool>());
  int dim = 0;
  REQUIRE(ceswit_subspace_dims(out, nullptr, nullptr, &dim) == CESWIT_OK);
  CHECK(dim == 4);
  ceswit_subspace_free(out);
  ceswit_subspace_free(s);

  CHECK(ceswit_footnote_member(2, &s) == CESWIT_ERR_INVALID_ARGUMENT);
}
