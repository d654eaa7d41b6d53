// sextic-lab: command-line front end. All output is JSON on stdout.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sextic/curves.hpp"
#include "sextic/fpgrp.hpp"
#include "sextic/pencil.hpp"
#include "sextic/singular.hpp"
#include "sextic/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sextic;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool pretty = false;

void emit(const json& j) { std::cout << j.dump(pretty ? 2 : -1) << "\n"; }

Rational parse_t(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed rational '" + text + "'");
  }
}

E parse_eisenstein(const std::string& text) {
  try {
    return E::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed value '" + text + "' (expected p/q or a+b*w)");
  }
}

std::size_t coset_limit() {
  const char* env = std::getenv("SEXTIC_LAB_COSET_LIMIT");
  if (env == nullptr) return 1'000'000;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("SEXTIC_LAB_COSET_LIMIT must be a positive integer");
  }
}

template <typename S>
json monomials_json(const MultiPoly<S>& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
  return out;
}

Presentation named_presentation(const std::string& name) {
  if (name == "G") return Presentation::parse(reference::group_G);
  if (name == "G2") return Presentation::parse(reference::group_G_alt);
  if (name == "D14xC3") return Presentation::parse(reference::group_D14xC3);
  if (name == "vankampen") return build_vankampen_presentation();
  if (!name.empty() && name.front() == '<') {
    try {
      return Presentation::parse(name);
    } catch (const PresentationParseError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown presentation '" + name + "' (G, G2, D14xC3, vankampen or a literal <...|...>)");
}

FamilyTable load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture '" + path + "'");
  try {
    const json j = json::parse(in);
    std::vector<std::pair<Exponents, std::string>> entries;
    for (const auto& o : j.at("orbits")) {
      entries.emplace_back(o.at("exponents").get<Exponents>(), o.at("coefficient").get<std::string>());
    }
    return FamilyTable::from_text(entries);
  } catch (const std::exception& e) {
    throw UsageError("bad fixture '" + path + "': " + e.what());
  }
}

QPoly affine_g(const Rational& t) {
  return affine_chart(apply_change(build_family_equation(t), named_change("paper-epi")), "Z", {"x", "y"});
}

// ---------------------------------------------------------------- commands

int cmd_family(const std::string& t_text, bool check_symmetry, const std::string& chart, const std::string& change,
               const std::vector<std::string>& names) {
  const Rational t = parse_t(t_text);
  const QPoly base = build_family_equation(t);
  QPoly f = base;
  try {
    if (!change.empty()) f = apply_change(f, named_change(change));
    if (!chart.empty()) f = affine_chart(f, chart, names);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  json j{{"t", t.str()}};
  if (!change.empty() || !chart.empty()) j["variables"] = f.variables();
  j["monomials"] = monomials_json(f);
  int code = kOk;
  if (check_symmetry) {
    const bool sym = is_cyclically_symmetric(base);
    j["cyclic_symmetry"] = sym ? "pass" : "fail";
    if (!sym) code = kFail;
  }
  emit(j);
  return code;
}

int cmd_singular(const std::string& t_text) {
  const E t = parse_eisenstein(t_text);
  const auto f = t.is_rational() ? promote(build_family_equation(t.re())) : build_family_equation(t);
  json j{{"t", t.str()}};
  try {
    int unresolved = 0;
    const auto census = singularity_census(f, &unresolved);
    json pts = json::array();
    int sum = 0;
    for (const auto& r : census) {
      pts.push_back({{"point", r.point.str()}, {"type", r.type_name()}, {"milnor", r.milnor},
                     {"hessian_corank", r.hessian_corank}});
      sum += r.milnor;
    }
    j["points"] = pts;
    j["unresolved"] = unresolved;
    if (unresolved > 0) {
      j["milnor_sum_lower_bound"] = sum;
      j["status"] = "fail";
      j["diagnostic"] = std::to_string(unresolved) + " singular point(s) with coordinates outside Q(w)";
      emit(j);
      return kFail;
    }
    j["milnor_sum"] = sum;
    j["status"] = "pass";
  } catch (const DomainError& e) {
    j["status"] = "fail";
    j["diagnostic"] = e.what();
    emit(j);
    return kFail;
  }
  emit(j);
  return kOk;
}

int cmd_pencil(const std::string& t_text) {
  const Rational t = parse_t(t_text);
  json j{{"t", t.str()}};
  try {
    const auto census = singular_fiber_census(affine_g(t));
    j["discriminant"] = to_string(census.discriminant);
    json factors = json::array();
    for (const auto& fc : census.factors) {
      factors.push_back({{"polynomial", to_string(to_multipoly(fc.factor, "y"))},
                         {"exponent", fc.exponent},
                         {"real_roots", fc.real_roots},
                         {"complex_pairs", fc.complex_pairs}});
    }
    j["factors"] = factors;
    json values = json::array();
    json approx = json::array();
    for (const auto& iv : census.real_values) {
      values.push_back({iv.lo.str(), iv.hi.str()});
      approx.push_back(iv.midpoint().to_double());
    }
    j["real_values"] = values;
    j["real_values_decimal_approx"] = approx;
    j["complex_pair_count"] = census.complex_pair_count;
  } catch (const DomainError& e) {
    j["status"] = "fail";
    j["diagnostic"] = e.what();
    emit(j);
    return kFail;
  }
  emit(j);
  return kOk;
}

int cmd_group(const std::string& action, const std::string& name, const std::string& other) {
  const Presentation p = named_presentation(name);
  const std::size_t limit = coset_limit();
  json j{{"presentation", p.str()}};
  const auto enumerate = [&](const Presentation& q, json& out) -> std::optional<CosetTable> {
    CosetTable ct = coset_enumerate(q, {}, limit);
    if (!ct.complete()) {
      out["status"] = "fail";
      out["diagnostic"] = "coset enumeration overflowed (limit " + std::to_string(limit) + ", " +
                          std::to_string(ct.defined) + " cosets defined)";
      return std::nullopt;
    }
    return ct;
  };
  if (action == "abelianize") {
    j["invariant_factors"] = abelianization(p);
    emit(j);
    return kOk;
  }
  const auto ct = enumerate(p, j);
  if (!ct) {
    emit(j);
    return kFail;
  }
  if (action == "order") {
    j["order"] = ct->size();
    j["cosets_defined"] = ct->defined;
  } else if (action == "identify") {
    const auto inv = identify_small_group(table_from_cosets(*ct));
    json hist = json::object();
    for (const auto& [ord, count] : inv.order_histogram) hist[std::to_string(ord)] = count;
    j["order"] = inv.order;
    j["abelian"] = inv.abelian;
    j["center_order"] = inv.center_order;
    j["derived_order"] = inv.derived_order;
    j["element_orders"] = hist;
    j["abelianization"] = abelianization(p);
  } else if (action == "iso") {
    if (other.empty()) throw UsageError("group iso needs --with");
    const Presentation q = named_presentation(other);
    j["with"] = q.str();
    const auto ct2 = enumerate(q, j);
    if (!ct2) {
      emit(j);
      return kFail;
    }
    const bool iso = isomorphism_check(table_from_cosets(*ct), table_from_cosets(*ct2));
    j["isomorphic"] = iso;
    emit(j);
    return iso ? kOk : kFail;
  }
  emit(j);
  return kOk;
}

int cmd_reconstruct(const std::optional<std::string>& t_text) {
  const auto rec = reconstruct_via_ansatz();
  json j{{"stripped_monomial", monomial_string(rec.stripped, family_variables())},
         {"proportional", rec.ratio.has_value()}};
  if (!rec.ratio) {
    emit(j);
    return kFail;
  }
  j["ratio"] = {{"numerator", to_string(rec.ratio->first)}, {"denominator", to_string(rec.ratio->second)}};
  if (t_text) {
    const Rational t = parse_t(*t_text);
    const QPoly lhs = specialize(rec.reduced, "t", t) * specialize(rec.ratio->second, "t", t);
    const QPoly rhs = specialize(family_symbolic(), "t", t) * specialize(rec.ratio->first, "t", t);
    j["t"] = t.str();
    j["identity_at_t"] = lhs == rhs ? "pass" : "fail";
    if (lhs != rhs) {
      emit(j);
      return kFail;
    }
  }
  emit(j);
  return kOk;
}

int cmd_verify(const std::optional<std::string>& only, const std::optional<std::string>& fixture) {
  VerifyOptions opt;
  opt.only = only;
  opt.coset_limit = coset_limit();
  if (fixture) opt.family = load_fixture(*fixture);
  std::vector<VerificationReport> reports;
  try {
    reports = verify_paper(opt);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  json checks = json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    json c{{"name", r.name}, {"status", to_string(r.status)}};
    if (r.status != VerificationReport::Status::Skipped) {
      c["comparison"] = r.comparison;
      c["expected"] = r.expected;
      c["actual"] = r.actual;
      if (!r.detail.empty()) c["detail"] = r.detail;
      c["seconds"] = r.seconds;
    }
    checks.push_back(c);
    passed += r.status == VerificationReport::Status::Pass;
    failed += r.status == VerificationReport::Status::Fail;
    skipped += r.status == VerificationReport::Status::Skipped;
  }
  const std::string summary = std::to_string(passed) + " passed, " + std::to_string(failed) + " failed";
  emit({{"checks", checks}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"summary", summary}});
  std::cerr << summary << "\n";
  return failed == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the D14 family of plane sextics", "sextic-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string t_text;
  std::string chart, change;
  std::vector<std::string> names;
  bool check_symmetry = false;
  auto* family = app.add_subcommand("family", "expand C(t) and dump its monomials");
  family->add_option("--t", t_text, "parameter p/q")->required();
  family->add_flag("--check-symmetry", check_symmetry, "test invariance under the cyclic shift");
  family->add_option("--change", change, "named coordinate change")->check(CLI::IsMember(named_change_ids()));
  family->add_option("--chart", chart, "set this variable to 1");
  family->add_option("--names", names, "rename the chart variables")->delimiter(',');

  std::string t_sing;
  auto* singular = app.add_subcommand("singular", "singular points of C(t) and their types");
  singular->add_option("--t", t_sing, "parameter p/q or a+b*w")->required();

  std::string t_pencil = "5/6";
  auto* pencil = app.add_subcommand("pencil", "singular fibres of the horizontal pencil of the affine model");
  pencil->add_option("--t", t_pencil, "parameter p/q")->capture_default_str();

  std::string action, presentation, other;
  auto* group = app.add_subcommand("group", "finitely presented groups");
  group->add_option("action", action, "order | identify | abelianize | iso")
      ->required()
      ->check(CLI::IsMember({"order", "identify", "abelianize", "iso"}));
  group->add_option("--presentation", presentation, "G, G2, D14xC3, vankampen or <gens | rels>")->required();
  group->add_option("--with", other, "second presentation for iso");

  std::optional<std::string> t_rec;
  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild C(t) from the singular ansatz");
  reconstruct->add_option("--t", t_rec, "also check the identity at this t");

  std::optional<std::string> only, fixture;
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  verify->add_option("--only", only, "run one group of checks")->check(CLI::IsMember(verification_groups()));
  verify->add_option("--family-fixture", fixture, "JSON file replacing the published family table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*family) return cmd_family(t_text, check_symmetry, chart, change, names);
    if (*singular) return cmd_singular(t_sing);
    if (*pencil) return cmd_pencil(t_pencil);
    if (*group) return cmd_group(action, presentation, other);
    if (*reconstruct) return cmd_reconstruct(t_rec);
    if (*verify) return cmd_verify(only, fixture);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
