#include "cli.hpp"

#include "criteria.hpp"

#include "knotcert/colored_sig.hpp"
#include "knotcert/config.hpp"
#include "knotcert/error.hpp"
#include "knotcert/gilmer.hpp"
#include "knotcert/json_io.hpp"
#include "knotcert/paper_data.hpp"
#include "knotcert/seifert.hpp"
#include "knotcert/smith.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

namespace knotcert::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string input;
  std::string expr;
  std::string at;
  std::string small_config;
  std::string check;
  std::string out_path;
  std::int64_t modulus = 0;
  long m = 0;
  std::size_t copies = 1;
  long genus = 1;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  bool pretty = false;
};

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

json polynomial_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(integer_to_json(c));
  return a;
}

// "bundled", a matrix file when the path exists, otherwise a knot expression.
SeifertKnot knot_argument(const std::string& arg) {
  if (arg == "bundled") return SeifertKnot(load_paper_dataset().seifert_matrix);
  if (fs::is_regular_file(arg)) return SeifertKnot(read_matrix_file(arg));
  return seifert_matrix(parse_knot_expr(arg, fs::current_path()));
}

std::string knot_label(const std::string& arg) {
  if (arg == "bundled") return arg;
  return fs::is_regular_file(arg) ? "seifert(" + arg + ")" : parse_knot_expr(arg, fs::current_path()).to_string();
}

InfectionConfig config_argument(const std::string& path) {
  if (path == "bundled") return default_paper_config();
  return load_infection_config(path);
}

json cmd_snf(const Options& o) {
  const IntMatrix m = read_matrix_file(o.input);
  const SNFResult r = smith_normal_form(m);
  return {{"diagonal", integers(r.diagonal())},
          {"invariant_factors", integers(invariant_factors(m))},
          {"D", matrix_to_json(r.D)},
          {"U", matrix_to_json(r.U)},
          {"V", matrix_to_json(r.V)}};
}

json cmd_h1(const Options& o) {
  const CoverPresentation p(knot_argument(o.input));
  return {{"generators", p.generator_count()},
          {"relation_matrix", matrix_to_json(p.relation_matrix())},
          {"invariant_factors", integers(p.invariant_factors())},
          {"order", integer_to_json(p.order())}};
}

json cmd_alex(const Options& o) {
  const SeifertKnot k = knot_argument(o.expr);
  const IntPolynomial d = alexander_polynomial(k);
  return {{"knot", knot_label(o.expr)},
          {"alexander_polynomial", polynomial_json(d)},
          {"text", to_string(d)},
          {"determinant", integer_to_json(abs_value(d.evaluate(Integer(-1))))},
          {"unit_circle_roots", unit_circle_root_count(d)},
          {"g4_signature_bound", g4_signature_bound(k)}};
}

json cmd_sig(const Options& o) {
  const RationalAngle s = RationalAngle::parse(o.at);
  long v = 0;
  if (o.expr == "bundled" || fs::is_regular_file(o.expr)) v = tl_signature(knot_argument(o.expr), s);
  else v = tl_signature(parse_knot_expr(o.expr, fs::current_path()), s);
  return {{"knot", knot_label(o.expr)}, {"at", s.to_string()}, {"signature", v}};
}

json cmd_chars(const Options& o) {
  if (!is_prime_power(o.modulus)) throw InputError("--mod must be a prime power");
  const CoverPresentation cover(knot_argument(o.input));
  const auto chars = enumerate_characters(cover, o.modulus, o.cap);
  json j = {{"modulus", o.modulus}, {"invariant_factors", integers(cover.invariant_factors())}, {"count", chars.size()}};
  auto listing = [](const std::vector<Character>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.values);
    return a;
  };
  auto surjective = [](const std::vector<Character>& v) {
    return std::count_if(v.begin(), v.end(), [](const Character& c) { return is_surjective(c); });
  };
  j["characters"] = listing(chars);
  j["surjective"] = surjective(chars);
  if (!o.small_config.empty()) {
    InfectionConfig cfg = config_argument(o.small_config);
    if (cfg.base.relation_matrix() != cover.relation_matrix()) {
      throw InputError("the configuration's base knot differs from " + o.input);
    }
    cfg.modulus = o.modulus;
    const auto small = small_character_set(cfg, chars);
    std::vector<Character> nontrivial;
    for (const auto& c : small)
      if (!is_zero(c.values)) nontrivial.push_back(c);
    j["small_set"] = listing(small);
    j["small_set_size"] = small.size();
    j["small_set_surjective"] = surjective(small);
    j["small_set_rescaling_classes"] = rescaling_classes(nontrivial).size();
  }
  return j;
}

json cmd_hopf(const Options& o) {
  return {{"m", o.m},
          {"sigma", integer_to_json(signature_Lm(o.m))},
          {"colored", integer_to_json(sigma_col_hopf_cable(o.m))},
          {"linking", integer_to_json(linking_Lm(o.m))},
          {"g4_bound", integer_to_json(g4_bound_banded(o.m))}};
}

int cmd_certify(const Options& o, json& report) {
  const InfectionConfig cfg = config_argument(o.input);
  if (!o.check.empty()) {
    const auto problems = verify_certificate(read_json_file(o.check), cfg);
    report = {{"valid", problems.empty()}, {"problems", problems}};
    return problems.empty() ? kOk : kNotCertified;
  }
  if (o.genus < 0) throw InputError("--genus must be non-negative");
  if (o.copies < 1) throw InputError("--copies must be at least 1");
  const auto cert = certify_genus_lower_bound(cfg, o.copies, o.genus, CertifyOptions{o.cap, o.subgroup_cap});
  report = cert.to_json();
  return cert.certified() ? kOk : kNotCertified;
}

int cmd_selftest(json& report) {
  const auto results = acceptance::run_all();
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    list.push_back({{"criterion", r.id}, {"pass", r.pass}, {"notes", r.notes}});
    passed += r.pass ? 1 : 0;
  }
  report = {{"criteria", list}, {"passed", passed}, {"failed", results.size() - passed}};
  return passed == results.size() ? kOk : kNotCertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact knot invariants and 4-genus certificates", "knotcert"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "indent the JSON report");
  app.add_option("--out", o.out_path, "write the report here instead of stdout");
  app.add_option("--cap", o.cap, "character enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--subgroup-cap", o.subgroup_cap, "subgroup enumeration cap")->check(CLI::PositiveNumber);
  app.fallthrough();

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("FILE", o.input)->required();
  auto* h1 = app.add_subcommand("h1", "double branched cover presentation");
  h1->add_option("KNOT", o.input, "\"bundled\", a matrix file or a knot expression")->required();
  auto* alex = app.add_subcommand("alex", "Alexander polynomial and unit circle roots");
  alex->add_option("KNOT", o.expr, "\"bundled\", a matrix file or a knot expression")->required();
  auto* sig = app.add_subcommand("sig", "Tristram-Levine signature");
  sig->add_option("KNOT", o.expr, "\"bundled\", a matrix file or a knot expression")->required();
  sig->add_option("--at", o.at, "angle j/n")->required();
  auto* chars = app.add_subcommand("chars", "characters of the double cover");
  chars->add_option("KNOT", o.input, "\"bundled\", a matrix file or a knot expression")->required();
  chars->add_option("--mod", o.modulus)->required();
  chars->add_option("--small", o.small_config, "infection config; also report the small set");
  auto* hopf = app.add_subcommand("hopf-sig", "signature data of the cabled Hopf link L_m");
  hopf->add_option("--m", o.m)->required();
  auto* certify = app.add_subcommand("certify", "4-genus certificate (CONFIG may be \"bundled\")");
  certify->add_option("CONFIG", o.input)->required();
  certify->add_option("--copies", o.copies);
  certify->add_option("--genus", o.genus);
  certify->add_option("--check", o.check, "re-verify this certificate instead of certifying");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  json report;
  int code = kOk;
  try {
    if (*snf) report = cmd_snf(o);
    else if (*h1) report = cmd_h1(o);
    else if (*alex) report = cmd_alex(o);
    else if (*sig) report = cmd_sig(o);
    else if (*chars) report = cmd_chars(o);
    else if (*hopf) report = cmd_hopf(o);
    else if (*certify) code = cmd_certify(o, report);
    else if (*selftest) code = cmd_selftest(report);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {  // e.g. std::stol in argument parsing helpers
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string text = report.dump(o.pretty ? 2 : -1) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "input error: cannot write " << o.out_path << '\n';
      return kInputError;
    }
    f << text;
  }
  return code;
}

}  // namespace knotcert::cli
