#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using knotcert::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (std::filesystem::path(KNOTCERT_TEST_DATA_DIR) / name).string(); }
std::string repo(const char* name) { return (std::filesystem::path(KNOTCERT_SOURCE_DIR) / name).string(); }

}  // namespace

TEST_CASE("hopf-sig") {
  const auto r = call({"hopf-sig", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"colored\":0,\"g4_bound\":3,\"linking\":9,\"m\":3,\"sigma\":-9}\n");
  CHECK(call({"hopf-sig", "--m", "4"}).code == 2);
}

TEST_CASE("sig and alex") {
  CHECK(call({"sig", "T(2,3)", "--at", "1/2"}).report()["signature"] == -2);
  CHECK(call({"sig", data("trefoil.json"), "--at", "1/2"}).report()["signature"] == -2);
  CHECK(call({"sig", "T(2,3)", "--at", "1/6"}).code == 2);
  CHECK(call({"sig", "T(2,3)", "--at", "7/6"}).code == 2);
  CHECK(call({"sig", "T(2,3", "--at", "1/2"}).code == 2);
  const auto a = call({"alex", "T(2,3)"}).report();
  CHECK(a["alexander_polynomial"] == json({1, -1, 1}));
  CHECK(a["unit_circle_roots"] == 2);
  CHECK(a["determinant"] == 3);
}

TEST_CASE("snf and h1") {
  const auto s = call({"snf", data("printed_seifert_A.json")});
  CHECK(s.code == 0);
  const auto h = call({"h1", data("trefoil.json")}).report();
  CHECK(h["invariant_factors"] == json({3}));
  CHECK(h["order"] == 3);
  CHECK(call({"snf", data("missing.json")}).code == 2);
  CHECK(call({"h1", data("not_a_knot.json")}).code == 2);
}

TEST_CASE("chars") {
  const auto r = call({"chars", "T(2,3) # T(2,3)", "--mod", "3"}).report();
  CHECK(r["count"] == 9);
  CHECK(r["surjective"] == 8);
  CHECK(call({"chars", "T(2,3)", "--mod", "6"}).code == 2);
  CHECK(call({"chars", "T(2,3) # T(2,3)", "--mod", "3", "--cap", "8"}).code == 3);
}

TEST_CASE("chars with a small set on the bundled knot") {
  const auto r = call({"chars", "bundled", "--mod", "3", "--small", "bundled"});
  REQUIRE(r.code == 0);
  const auto j = r.report();
  CHECK(j["count"] == 81);
  CHECK(j["small_set_size"] == 3);
  CHECK(j["small_set_rescaling_classes"] == 1);
  CHECK(call({"chars", "T(2,3)", "--mod", "3", "--small", "bundled"}).code == 2);
}

TEST_CASE("certify and check round trip") {
  const auto out = (std::filesystem::temp_directory_path() / "knotcert_cli_cert.json").string();
  const auto r = call({"certify", repo("data/paper_config.json"), "--genus", "1", "--out", out});
  CHECK(r.out.empty());
  std::ifstream f(out);
  const json cert = json::parse(f);
  CHECK(r.code == (cert["certified"] == true ? 0 : 1));
  CHECK(cert["annihilator_bound"] == 9);
  CHECK(cert["separated"] == true);
  const auto check = call({"certify", repo("data/paper_config.json"), "--check", out});
  CHECK(check.code == 0);
  CHECK(check.report()["valid"] == true);

  json bad = cert;
  bad["annihilator_bound"] = 3;
  { std::ofstream g(out); g << bad.dump(); }
  CHECK(call({"certify", "bundled", "--check", out}).code == 1);
  std::filesystem::remove(out);
}

TEST_CASE("certify on the bundled configuration concludes g4 >= 2") {
  const auto r = call({"certify", repo("data/paper_config.json"), "--genus", "1"});
  CHECK(r.code == 0);
  CHECK(r.report().value("conclusion", "") == "g4 >= 2 for all c >= max(c0, 2)");
}

TEST_CASE("determinism") {
  for (std::vector<std::string> args : {std::vector<std::string>{"certify", "bundled", "--genus", "1"},
                                        {"certify", repo("data/paper_sum_config.json"), "--copies", "2", "--genus", "2"},
                                        {"chars", "bundled", "--mod", "9", "--small", "bundled", "--pretty"},
                                        {"alex", "bundled"}}) {
    const auto a = call(args), b = call(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"sig", "T(2,3)"}).code == 2);
  CHECK(call({"certify", "bundled", "--genus", "-1"}).code == 2);
  CHECK(call({"certify", "bundled", "--copies", "0"}).code == 2);
  CHECK(call({"certify", data("missing.json")}).code == 2);
  CHECK(call({"certify", "bundled", "--genus", "1", "--subgroup-cap", "5"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}
