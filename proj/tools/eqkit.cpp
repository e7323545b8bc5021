// eqkit — command-line front end for the equational-complexity toolkit.
//
// Subcommands: group, present, verify, check, membership, witness, flatten,
// translate, growth, sylow. Exit codes: 0 = holds / member / verified,
// 1 = fails / non-member (witness printed), 2 = usage or budget errors.
// All output is deterministic: identical inputs give byte-identical bytes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqkit/algebra.hpp"
#include "eqkit/errors.hpp"
#include "eqkit/flat.hpp"
#include "eqkit/group.hpp"
#include "eqkit/membership.hpp"
#include "eqkit/presentation.hpp"
#include "eqkit/serialize.hpp"
#include "eqkit/term.hpp"

using nlohmann::ordered_json;
using namespace eqkit;

namespace {

// Budgets for every search the subcommands can trigger. All positive,
// enforced by the option parser; no RNG anywhere, so no seed.
struct Config {
  long long hom_budget = kDefaultHomBudget;
  long long assign_budget = kDefaultAssignBudget;
  int max_cosets = 0;  // 0 = derived from the target order
  int order_cap = kDefaultOrderCap;
  int si_cap = kDefaultSiCap;
};

int g_exit = 0;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + out_path);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A group argument is either a named-group spec or a path to a JSON table.
FiniteGroup load_group(const std::string& arg, const Config& cfg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
    return group_from_json(ordered_json::parse(slurp(arg)));
  return named_group(arg, cfg.order_cap);
}

// An algebra file may hold either an algebra dump or a plain group table;
// the latter is promoted to the group algebra over {*, inv, 1}.
FiniteAlgebra load_algebra(const std::string& path) {
  ordered_json j = ordered_json::parse(slurp(path));
  if (j.is_object() && j.contains("table"))
    return group_algebra(group_from_json(j), Sig::MulInv1);
  return algebra_from_json(j);
}

std::vector<FiniteGroup> parse_family(const std::string& fam, const Config& cfg) {
  auto bad = [&](const std::string& why) {
    throw ParseError(ParseError::Kind::BadFormat, "family '" + fam + "': " + why);
  };
  size_t colon = fam.find(':');
  if (colon == std::string::npos) bad("expected name:a..b");
  std::string name = fam.substr(0, colon);
  std::string range = fam.substr(colon + 1);
  size_t dots = range.find("..");
  if (dots == std::string::npos) bad("expected a..b range");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, dots));
    hi = std::stoi(range.substr(dots + 2));
  } catch (const std::exception&) {
    bad("range bounds must be integers");
  }
  if (lo < 1 || hi < lo) bad("need 1 <= a <= b");
  std::vector<FiniteGroup> out;
  if (name == "cyclic2powers") {
    for (int n = lo; n <= hi; n *= 2)
      out.push_back(named_group("cyclic:" + std::to_string(n), cfg.order_cap));
  } else if (name == "cyclic") {
    for (int n = lo; n <= hi; ++n)
      out.push_back(named_group("cyclic:" + std::to_string(n), cfg.order_cap));
  } else if (name == "dihedral") {
    for (int n = lo; n <= hi; ++n)
      out.push_back(named_group("dihedral:" + std::to_string(n), cfg.order_cap));
  } else {
    bad("unknown family name (cyclic2powers, cyclic, dihedral)");
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json sat_json(const SatResult& r) {
  ordered_json j;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["vars"] = r.vars;
    j["assignment"] = r.assignment;
  }
  return j;
}

ordered_json metrics_json(const PresentationMetrics& m) {
  ordered_json j;
  j["stages"] = m.stages;
  j["gen"] = m.gen;
  j["len"] = m.len;
  j["rel"] = m.rel;
  j["rellen"] = m.rellen;
  j["cat_gen"] = m.cat_gen;
  j["cat_len"] = m.cat_len;
  j["cat_rel"] = m.cat_rel;
  j["cat_rellen"] = m.cat_rellen;
  j["total"] = m.total;
  auto v = m.violated_recurrence();
  j["violated_recurrence"] = v ? ordered_json(*v) : ordered_json(nullptr);
  return j;
}

const char* verify_status_name(VerifyResult::Status s) {
  switch (s) {
    case VerifyResult::Status::Verified: return "verified";
    case VerifyResult::Status::RelationFails: return "relation_fails";
    case VerifyResult::Status::NotGenerating: return "not_generating";
    case VerifyResult::Status::OrderMismatch: return "order_mismatch";
    case VerifyResult::Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

void cmd_group(const std::string& spec, bool info, const std::string& out,
               const Config& cfg) {
  FiniteGroup g = load_group(spec, cfg);
  if (!info) {
    emit(dump(group_to_json(g)), out);
    return;
  }
  CompositionSeries cs = composition_series(g);
  ordered_json j;
  j["label"] = g.label;
  j["order"] = g.n;
  j["abelian"] = g.is_abelian();
  j["exponent"] = exponent(g);
  std::vector<int> factor_orders;
  for (const FiniteGroup& f : cs.factors) factor_orders.push_back(f.n);
  j["composition_factor_orders"] = factor_orders;
  emit(dump(j), out);
}

void cmd_present(const std::string& spec, bool metrics, int express,
                 const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(spec, cfg);
  SimpleCatalog catalog;
  ShortPresentation sp = build_short_presentation(g, catalog);
  if (metrics) {
    emit(dump(metrics_json(sp.metrics)), out);
  } else if (express >= 0) {
    emit(word_text(sp.pres, express_element(sp, express)) + "\n", out);
  } else {
    emit(presentation_text(sp.pres, &sp.images), out);
  }
}

void cmd_verify(const std::string& spec, const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(spec, cfg);
  SimpleCatalog catalog;
  ShortPresentation sp = build_short_presentation(g, catalog);
  int max_cosets = cfg.max_cosets > 0 ? cfg.max_cosets : default_max_cosets(g.n);
  VerifyResult v = verify_presents(sp.pres, sp.images, g, max_cosets);
  TCResult tc = todd_coxeter(sp.pres, max_cosets);
  ordered_json j;
  j["label"] = g.label;
  j["order"] = g.n;
  j["generators"] = static_cast<int>(sp.pres.gens.size());
  j["relations"] = static_cast<int>(sp.pres.rels.size());
  j["total_length"] = total_length(sp.pres);
  j["tc_order"] = tc.order ? ordered_json(*tc.order) : ordered_json(nullptr);
  j["cosets_defined"] = tc.cosets_defined;
  j["status"] = verify_status_name(v.status);
  if (!v.detail.empty()) j["detail"] = v.detail;
  emit(dump(j), out);
  if (!v.ok()) g_exit = 1;
}

void cmd_check_formula(const std::string& algebra_path, const std::string& group_spec,
                       const std::string& eq_text, const std::string& qe_text,
                       const std::string& out, const Config& cfg) {
  FiniteAlgebra a = algebra_path.empty()
                        ? group_algebra(load_group(group_spec, cfg), Sig::MulInv1)
                        : load_algebra(algebra_path);
  SatResult r = eq_text.empty()
                    ? satisfies_quasiequation(a, parse_quasiequation(qe_text, a.sig),
                                              cfg.assign_budget)
                    : satisfies_equation(a, parse_equation(eq_text, a.sig),
                                         cfg.assign_budget);
  emit(dump(sat_json(r)), out);
  if (!r.holds) g_exit = 1;
}

void cmd_check_certificate(const std::string& path, const std::string& out,
                           const Config& cfg) {
  ordered_json cert = ordered_json::parse(slurp(path));
  FiniteGroup g = load_group(cert.at("g").get<std::string>(), cfg);
  FiniteGroup h = load_group(cert.at("h").get<std::string>(), cfg);
  int witness = cert.at("witness_element").get<int>();
  int d = cert.at("d").get<int>();
  QuasiEquation phi =
      parse_quasiequation(cert.at("phi").get<std::string>(), group_signature(Sig::MulInv1));
  FiniteAlgebra flat_g = with_unit(flat_extension(g));
  FiniteAlgebra flat_h = with_unit(flat_extension(h));
  Equation flat_eq =
      parse_equation(cert.at("flat_equation").get<std::string>(), flat_g.sig);

  ordered_json j;
  j["certificate"] = path;
  bool consistent = equation_text(translate_qe_to_eq(phi, d)) ==
                    cert.at("flat_equation").get<std::string>();
  j["translation_consistent"] = consistent;

  FiniteAlgebra ga = group_algebra(g, Sig::MulInv1);
  FiniteAlgebra ha = group_algebra(h, Sig::MulInv1);
  bool g_models = satisfies_quasiequation(ga, phi, cfg.assign_budget).holds;
  j["g_models_phi"] = g_models;
  SatResult h_fails = satisfies_quasiequation(ha, phi, cfg.assign_budget);
  j["h_fails_phi"] = !h_fails.holds;
  if (!h_fails.holds) {
    ordered_json asg;
    for (size_t i = 0; i < h_fails.vars.size(); ++i)
      asg[h_fails.vars[i]] = h_fails.assignment[i];
    j["h_failing_assignment"] = asg;
  }
  bool flat_h_fails = !satisfies_equation(flat_h, flat_eq, cfg.assign_budget).holds;
  j["flat_h_fails_translation"] = flat_h_fails;
  bool flat_g_models = satisfies_equation(flat_g, flat_eq, cfg.assign_budget).holds;
  j["flat_g_models_translation"] = flat_g_models;

  MembershipVerdict v = in_quasivariety(h, g, cfg.hom_budget);
  bool witness_ok =
      v.kind == MembershipVerdict::Kind::NotInQuasivariety && v.witness == witness;
  j["witness_element_confirmed"] = witness_ok;

  bool verified = consistent && g_models && !h_fails.holds && flat_h_fails &&
                  flat_g_models && witness_ok;
  j["verified"] = verified;
  emit(dump(j), out);
  if (!verified) g_exit = 1;
}

void cmd_membership_groups(const std::string& h_spec, const std::string& g_spec,
                           const std::string& out, const Config& cfg) {
  FiniteGroup h = load_group(h_spec, cfg);
  FiniteGroup g = load_group(g_spec, cfg);
  MembershipVerdict v = in_quasivariety(h, g, cfg.hom_budget);
  ordered_json j;
  j["h"] = h.label;
  j["g"] = g.label;
  if (v.kind == MembershipVerdict::Kind::InQuasivariety) {
    j["kind"] = "InQuasivariety";
    ordered_json maps = ordered_json::array();
    for (const Homomorphism& hom : v.separating) maps.push_back(hom.map);
    j["separating"] = maps;
    emit(dump(j), out);
  } else {
    j["kind"] = "NotInQuasivariety";
    j["witness"] = v.witness;
    SimpleCatalog catalog;
    j["phi"] = quasiequation_text(witness_quasi_equation(g, h, catalog, cfg.hom_budget));
    emit(dump(j), out);
    g_exit = 1;
  }
}

void cmd_membership_flat(const std::string& algebra_path, const std::string& g_spec,
                         const std::string& out, const Config& cfg) {
  FiniteAlgebra b = load_algebra(algebra_path);
  FiniteGroup g = load_group(g_spec, cfg);
  MembershipVerdict v = in_variety_of_flat(b, g, cfg.si_cap, cfg.hom_budget);
  ordered_json j;
  j["algebra"] = algebra_path;
  j["g"] = g.label;
  if (v.kind == MembershipVerdict::Kind::InVariety) {
    j["kind"] = "InVariety";
    emit(dump(j), out);
  } else {
    j["kind"] = "NotInVariety";
    j["witness_algebra"] = algebra_to_json(*v.witness_algebra);
    FlatRecognition r = recognize_flat(*v.witness_algebra);
    j["witness_is_flat"] = r.flat;
    if (r.flat) j["witness_group_order"] = r.group.n;
    emit(dump(j), out);
    g_exit = 1;
  }
}

void cmd_witness(const std::string& g_spec, const std::string& h_spec,
                 const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(g_spec, cfg);
  FiniteGroup h = load_group(h_spec, cfg);
  MembershipVerdict v = in_quasivariety(h, g, cfg.hom_budget);
  if (v.kind != MembershipVerdict::Kind::NotInQuasivariety)
    throw PreconditionError("witness: " + h.label + " is in the quasivariety of " +
                            g.label);
  SimpleCatalog catalog;
  QuasiEquation phi = witness_quasi_equation(g, h, catalog, cfg.hom_budget);
  Equation flat_eq = witness_equation_flat(g, h, catalog, cfg.hom_budget);
  ordered_json j;
  j["g"] = g_spec;
  j["h"] = h_spec;
  j["witness_element"] = v.witness;
  j["phi"] = quasiequation_text(phi);
  j["d"] = exponent(g);
  j["flat_equation"] = equation_text(flat_eq);
  emit(dump(j), out);
}

void cmd_flatten(const std::string& spec, const std::string& tag_name, bool unit,
                 const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(spec, cfg);
  FlatTag tag;
  if (tag_name == "meetinv")
    tag = FlatTag::MeetInv;
  else if (tag_name == "meet")
    tag = FlatTag::Meet;
  else
    throw ParseError(ParseError::Kind::BadFormat, "unknown tag: " + tag_name);
  FlatAlgebra f = flat_extension(g, tag);
  emit(dump(algebra_to_json(unit ? with_unit(f) : f.algebra)), out);
}

void cmd_translate(const std::string& qe_text, int d, bool no_pad,
                   const std::string& out) {
  QuasiEquation rho = parse_quasiequation(qe_text, group_signature(Sig::MulInv1));
  emit(equation_text(translate_qe_to_eq(rho, d, !no_pad)) + "\n", out);
}

void cmd_growth(const std::string& g_spec, const std::string& fam,
                const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(g_spec, cfg);
  std::vector<FiniteGroup> family = parse_family(fam, cfg);
  SimpleCatalog catalog;
  emit(growth_csv(growth_experiment(g, family, catalog, cfg.hom_budget)), out);
}

void cmd_sylow(const std::string& spec, const std::string& out, const Config& cfg) {
  FiniteGroup g = load_group(spec, cfg);
  SylowReport rep = sylow_classification(g);
  ordered_json j;
  j["label"] = g.label;
  j["order"] = g.n;
  ordered_json sylows = ordered_json::array();
  for (const SylowInfo& s : rep.sylows) {
    ordered_json e;
    e["prime"] = s.prime;
    e["order"] = static_cast<int>(s.subgroup.size());
    e["abelian"] = s.abelian;
    sylows.push_back(e);
  }
  j["sylows"] = sylows;
  j["has_nonabelian_sylow"] = rep.has_nonabelian_sylow;
  j["gate"] = sylow_gate(g);
  emit(dump(j), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equational-complexity toolkit for finite groups and flat extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  // several subcommands take a `--h` group option, so help is long-form only
  app.set_help_flag("--help", "print help and exit");

  Config cfg;
  app.add_option("--budget-homs", cfg.hom_budget, "node budget for hom searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-assign", cfg.assign_budget,
                 "assignment budget for satisfaction checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-cosets", cfg.max_cosets,
                 "coset budget for presentation verification")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-order", cfg.order_cap, "largest group order to materialize")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-si", cfg.si_cap,
                 "cap on subdirectly irreducible quotients per algebra")
      ->check(CLI::PositiveNumber);

  std::string out;
  app.add_option("--out", out, "write output to this file instead of stdout");

  // group
  auto* c_group = app.add_subcommand("group", "emit a group table or summary as JSON");
  std::string group_g;
  bool group_info = false;
  c_group->add_option("--g", group_g, "group spec or JSON file")->required();
  c_group->add_flag("--info", group_info, "summary instead of the full table");
  c_group->callback([&] { cmd_group(group_g, group_info, out, cfg); });

  // present
  auto* c_present = app.add_subcommand("present", "build a short presentation");
  std::string present_g;
  bool present_metrics = false;
  int present_express = -1;
  c_present->add_option("--g", present_g, "group spec or JSON file")->required();
  c_present->add_flag("--metrics", present_metrics, "print stage metrics as JSON");
  c_present->add_option("--express", present_express,
                        "print the word for this element instead");
  c_present->callback(
      [&] { cmd_present(present_g, present_metrics, present_express, out, cfg); });

  // verify
  auto* c_verify = app.add_subcommand("verify",
                                      "verify a built presentation by coset enumeration");
  std::string verify_g;
  c_verify->add_option("--g", verify_g, "group spec or JSON file")->required();
  c_verify->callback([&] { cmd_verify(verify_g, out, cfg); });

  // check
  auto* c_check = app.add_subcommand("check",
                                     "check a formula against an algebra, or re-verify "
                                     "a witness certificate");
  std::string check_algebra, check_group, check_eq, check_qe, check_cert;
  c_check->add_option("--algebra", check_algebra, "algebra (or group) JSON file");
  c_check->add_option("--group", check_group, "group spec, used as its group algebra");
  c_check->add_option("--equation", check_eq, "equation in prefix text");
  c_check->add_option("--quasiequation", check_qe, "quasi-equation in prefix text");
  c_check->add_option("--certificate", check_cert, "certificate JSON from `witness`");
  c_check->callback([&] {
    if (!check_cert.empty()) {
      cmd_check_certificate(check_cert, out, cfg);
      return;
    }
    if (check_algebra.empty() == check_group.empty())
      throw CLI::ValidationError("check", "need exactly one of --algebra / --group");
    if (check_eq.empty() == check_qe.empty())
      throw CLI::ValidationError("check",
                                 "need exactly one of --equation / --quasiequation");
    cmd_check_formula(check_algebra, check_group, check_eq, check_qe, out, cfg);
  });

  // membership
  auto* c_member = app.add_subcommand("membership",
                                      "quasivariety membership for groups, or variety "
                                      "membership for a flat-signature algebra");
  std::string member_h, member_g, member_flat;
  c_member->add_option("--h", member_h, "candidate group spec or JSON file");
  c_member->add_option("--g", member_g, "generating group spec or JSON file")->required();
  c_member->add_option("--flat", member_flat, "candidate algebra JSON file");
  c_member->callback([&] {
    if (member_h.empty() == member_flat.empty())
      throw CLI::ValidationError("membership", "need exactly one of --h / --flat");
    if (member_flat.empty())
      cmd_membership_groups(member_h, member_g, out, cfg);
    else
      cmd_membership_flat(member_flat, member_g, out, cfg);
  });

  // witness
  auto* c_witness = app.add_subcommand("witness",
                                       "emit a non-membership certificate for H vs G");
  std::string witness_g, witness_h;
  c_witness->add_option("--g", witness_g, "generating group spec or JSON file")->required();
  c_witness->add_option("--h", witness_h, "excluded group spec or JSON file")->required();
  c_witness->callback([&] { cmd_witness(witness_g, witness_h, out, cfg); });

  // flatten
  auto* c_flatten = app.add_subcommand("flatten", "emit the flat extension as JSON");
  std::string flatten_g, flatten_tag = "meetinv";
  bool flatten_unit = false;
  c_flatten->add_option("--g", flatten_g, "group spec or JSON file")->required();
  c_flatten->add_option("--tag", flatten_tag, "signature tag: meetinv or meet");
  c_flatten->add_flag("--unit", flatten_unit, "append the constant 1");
  c_flatten->callback([&] { cmd_flatten(flatten_g, flatten_tag, flatten_unit, out, cfg); });

  // translate
  auto* c_translate = app.add_subcommand("translate",
                                         "translate a quasi-equation to a flat equation");
  std::string translate_qe;
  int translate_d = 1;
  bool translate_no_pad = false;
  c_translate->add_option("--quasiequation", translate_qe, "quasi-equation in prefix text")
      ->required();
  c_translate->add_option("--d", translate_d, "power (a multiple of the exponent)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_translate->add_flag("--no-pad", translate_no_pad,
                        "fail instead of padding uncovered variables");
  c_translate->callback(
      [&] { cmd_translate(translate_qe, translate_d, translate_no_pad, out); });

  // growth
  auto* c_growth = app.add_subcommand("growth", "witness-length growth table as CSV");
  std::string growth_g, growth_family;
  c_growth->add_option("--g", growth_g, "generating group spec or JSON file")->required();
  c_growth->add_option("--family", growth_family,
                       "family spec: cyclic2powers:a..b, cyclic:a..b, dihedral:a..b")
      ->required();
  c_growth->callback([&] { cmd_growth(growth_g, growth_family, out, cfg); });

  // sylow
  auto* c_sylow = app.add_subcommand("sylow", "Sylow classification and complexity gate");
  std::string sylow_g;
  c_sylow->add_option("--g", sylow_g, "group spec or JSON file")->required();
  c_sylow->callback([&] { cmd_sylow(sylow_g, out, cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted (" << e.budget << "): " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
