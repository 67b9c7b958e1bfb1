// Command-line front end for the multicoh engine: cohomology tables,
// regularity, aCM and splitting-criterion reports, and Koszul-identity
// verification, in text or JSON form.
//
// Exit codes: 0 success (verdicts are payload, not status), 2 parse error,
// 3 semantic error, 4 precondition violation.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multicoh/multicoh.hpp"

namespace mc = multicoh;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "multicoh/1";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitPrecondition = 4;

json to_json(const mc::Multidegree& k) {
  json a = json::array();
  for (long long v : k) a.push_back(std::to_string(v));
  return a;
}

json to_json(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(std::to_string(x));
  return a;
}

json to_json(const mc::Witness& w) {
  json j;
  j["atom_index"] = std::to_string(w.atom_index);
  j["i"] = std::to_string(w.i);
  j["k"] = to_json(w.k);
  j["t"] = std::to_string(w.t);
  j["q"] = to_json(w.q);
  j["dim"] = w.dim.str();
  return j;
}

json to_json(const mc::CohTable& t) {
  json a = json::array();
  for (const auto& v : t.h) a.push_back(v.str());
  return a;
}

json space_json(const mc::Space& space) {
  json a = json::array();
  for (int n : space.dims()) a.push_back(std::to_string(n));
  return a;
}

json report_json(const mc::CriterionReport& rep) {
  json j;
  j["criterion"] = mc::criterion_name(rep.criterion);
  j["condition_holds"] = rep.condition_holds;
  j["vacuous"] = rep.vacuous;
  json ws = json::array();
  for (const auto& w : rep.condition_witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["shape_holds"] = rep.shape_holds;
  j["shape_certificate"] = rep.shape_certificate ? json(*rep.shape_certificate) : json(nullptr);
  j["consistent"] = rep.consistent;
  return j;
}

void emit(const std::string& command, const mc::Space& space, const std::string& input,
          json result) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["space"] = space_json(space);
  j["input"] = input;
  j["result"] = std::move(result);
  std::cout << j.dump(2) << "\n";
}

std::string witness_text(const mc::Witness& w) {
  std::string q = "(";
  for (size_t j = 0; j < w.q.size(); ++j) {
    if (j) q += ",";
    q += std::to_string(w.q[j]);
  }
  q += ")";
  return "i=" + std::to_string(w.i) + " k=" + mc::multidegree_to_string(w.k) +
         " t=" + std::to_string(w.t) + " q=" + q + " atom=" + std::to_string(w.atom_index) +
         " dim=" + w.dim.str();
}

std::string space_text(const mc::Space& space) {
  std::string out;
  for (int j = 0; j < space.factors(); ++j) {
    if (j) out += " x ";
    out += "P^" + std::to_string(space.dim(j));
  }
  return out;
}

struct CommonArgs {
  std::string space_arg;
  std::string bundle_expr;
  bool as_json = false;
};

mc::Space parse_space_arg(const std::string& arg) {
  try {
    return mc::parse_space(arg);
  } catch (const mc::ParseError& e) {
    throw mc::ParseError({e.diagnostic().offset, "--space " + std::string(e.what()),
                          e.diagnostic().expected, e.diagnostic().semantic});
  }
}

mc::Multidegree parse_multidegree_arg(const mc::Space& space, const std::string& arg,
                                      const char* flag) {
  mc::Multidegree k;
  mc::detail::Parser p(arg);
  if (p.peek().type == mc::detail::Token::Type::End)
    throw mc::ParseError({0, std::string(flag) + ": empty multidegree", {"integer"}, false});
  k.push_back(p.expect_int());
  while (p.peek().type == mc::detail::Token::Type::Comma) {
    p.advance();
    k.push_back(p.expect_int());
  }
  p.expect_end();
  if (static_cast<int>(k.size()) != space.factors())
    throw mc::ParseError({0,
                          std::string(flag) + ": multidegree has " + std::to_string(k.size()) +
                              " component(s), space has " + std::to_string(space.factors()),
                          {},
                          true});
  return k;
}

int run_cohom(const CommonArgs& args, const std::string& twist_arg) {
  const mc::Space space = parse_space_arg(args.space_arg);
  mc::Bundle bundle = mc::parse_bundle(args.bundle_expr, space);
  std::optional<mc::Multidegree> twist;
  if (!twist_arg.empty()) {
    twist = parse_multidegree_arg(space, twist_arg, "--twist");
    bundle = mc::twist_bundle(bundle, *twist);
  }
  const mc::CohTable table = mc::bundle_cohomology(bundle);
  const mc::BigInt chi = table.alternating_sum();

  if (args.as_json) {
    json result;
    result["bundle"] = mc::bundle_to_string(bundle);
    result["h"] = to_json(table);
    result["chi"] = chi.str();
    result["twist"] = twist ? to_json(*twist) : json(nullptr);
    emit("cohom", space, args.bundle_expr, result);
    return kExitOk;
  }

  std::cout << "space: " << space_text(space) << "\n";
  std::cout << "bundle: " << mc::bundle_to_string(bundle) << "\n";
  std::cout << "h = (";
  for (size_t q = 0; q < table.h.size(); ++q) {
    if (q) std::cout << ", ";
    std::cout << table.h[q].str();
  }
  std::cout << ")\n";
  std::cout << "chi = " << chi.str() << "\n";
  return kExitOk;
}

int run_reg(const CommonArgs& args, const std::string& at_arg) {
  const mc::Space space = parse_space_arg(args.space_arg);
  const mc::Bundle bundle = mc::parse_bundle(args.bundle_expr, space);

  if (!at_arg.empty()) {
    const mc::Multidegree at = parse_multidegree_arg(space, at_arg, "--at");
    const auto obstruction = mc::regularity_obstruction(bundle, at);
    if (args.as_json) {
      json result;
      result["at"] = to_json(at);
      result["regular"] = !obstruction.has_value();
      result["witness"] = obstruction ? to_json(*obstruction) : json(nullptr);
      emit("reg", space, args.bundle_expr, result);
      return kExitOk;
    }
    std::cout << "regular at " << mc::multidegree_to_string(at) << ": "
              << (obstruction ? "false" : "true") << "\n";
    if (obstruction) std::cout << "witness: " << witness_text(*obstruction) << "\n";
    return kExitOk;
  }

  const mc::RegularityResult res = mc::balanced_regularity(bundle);
  if (args.as_json) {
    json result;
    result["reg"] = res.reg ? json(std::to_string(*res.reg)) : json(nullptr);
    result["window"] = json::array({std::to_string(res.window_lo), std::to_string(res.window_hi)});
    json fails = json::array();
    for (const auto& w : res.failures_at_reg_minus_1) fails.push_back(to_json(w));
    result["failures_at_reg_minus_1"] = fails;
    emit("reg", space, args.bundle_expr, result);
    return kExitOk;
  }
  if (res.reg) {
    std::cout << "Reg = " << *res.reg << "  (window [" << res.window_lo << ", " << res.window_hi
              << "])\n";
    for (const auto& w : res.failures_at_reg_minus_1)
      std::cout << "  fails at Reg-1: " << witness_text(w) << "\n";
  } else {
    std::cout << "Reg: none-in-window [" << res.window_lo << ", " << res.window_hi << "]\n";
  }
  return kExitOk;
}

int run_acm(const CommonArgs& args) {
  const mc::Space space = parse_space_arg(args.space_arg);
  const mc::Bundle bundle = mc::parse_bundle(args.bundle_expr, space);
  const auto obstruction = mc::acm_obstruction(bundle);
  if (args.as_json) {
    json result;
    result["acm"] = !obstruction.has_value();
    result["witness"] = obstruction ? to_json(*obstruction) : json(nullptr);
    emit("acm", space, args.bundle_expr, result);
    return kExitOk;
  }
  std::cout << "aCM: " << (obstruction ? "false" : "true") << "\n";
  if (obstruction) std::cout << "witness: " << witness_text(*obstruction) << "\n";
  return kExitOk;
}

int run_split(const CommonArgs& args, const std::string& criterion_arg) {
  mc::Criterion criterion;
  if (criterion_arg == "thm31")
    criterion = mc::Criterion::Thm31;
  else if (criterion_arg == "thm32")
    criterion = mc::Criterion::Thm32;
  else if (criterion_arg == "thm33")
    criterion = mc::Criterion::Thm33;
  else
    throw mc::ParseError({0, "--criterion must be thm31, thm32 or thm33", {}, true});

  const mc::Space space = parse_space_arg(args.space_arg);
  const mc::Bundle bundle = mc::parse_bundle(args.bundle_expr, space);
  const mc::CriterionReport rep = mc::verify_criterion(bundle, criterion);

  if (args.as_json) {
    emit("split", space, args.bundle_expr, report_json(rep));
    return kExitOk;
  }
  std::cout << "criterion: " << mc::criterion_name(rep.criterion) << "\n";
  std::cout << "condition: " << (rep.condition_holds ? "holds" : "fails")
            << (rep.vacuous ? " (vacuous: no admissible instances)" : "") << "\n";
  for (const auto& w : rep.condition_witnesses) std::cout << "  witness: " << witness_text(w) << "\n";
  std::cout << "shape: " << (rep.shape_holds ? "matches" : "does not match") << "\n";
  if (rep.shape_certificate) std::cout << "  " << *rep.shape_certificate << "\n";
  std::cout << "consistent: " << (rep.consistent ? "true" : "false") << "\n";
  return kExitOk;
}

int run_koszul(const std::string& space_arg, bool as_json) {
  const mc::Space space = parse_space_arg(space_arg);
  const bool k1 = mc::verify_chi_zero(space, mc::KoszulVariant::K1);
  const bool k2 = mc::verify_chi_zero(space, mc::KoszulVariant::K2);
  const bool k3 = mc::verify_chi_zero(space, mc::KoszulVariant::K3);
  const bool ranks = mc::verify_rank_zero(space);
  const auto isos = mc::prop_isomorphism_checks(space);
  bool all = k1 && k2 && k3 && ranks;
  for (const auto& c : isos) all = all && c.equal && c.is_one;

  if (as_json) {
    json result;
    result["chi_zero"] = json{{"K1", k1}, {"K2", k2}, {"K3", k3}};
    result["rank_zero"] = ranks;
    json iso = json::array();
    for (const auto& c : isos) {
      json e;
      e["description"] = c.description;
      e["lhs"] = c.lhs.str();
      e["rhs"] = c.rhs.str();
      e["equal"] = c.equal;
      e["is_one"] = c.is_one;
      iso.push_back(e);
    }
    result["isomorphisms"] = iso;
    result["all_pass"] = all;
    emit("koszul-verify", space, "", result);
    return kExitOk;
  }

  std::cout << "space: " << space_text(space) << "\n";
  std::cout << "chi(K1) = 0: " << (k1 ? "pass" : "FAIL") << "\n";
  std::cout << "chi(K2) = 0: " << (k2 ? "pass" : "FAIL") << "\n";
  std::cout << "chi(K3) = 0: " << (k3 ? "pass" : "FAIL") << "\n";
  std::cout << "rank alternating sums = 0: " << (ranks ? "pass" : "FAIL") << "\n";
  for (const auto& c : isos)
    std::cout << c.description << ": " << (c.equal && c.is_one ? "pass" : "FAIL") << " (" << c.lhs.str()
              << " = " << c.rhs.str() << ")\n";
  std::cout << (all ? "all identities pass" : "SOME IDENTITIES FAIL") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sheaf cohomology on products of projective spaces"};
  app.require_subcommand(1);

  CommonArgs cohom_args, reg_args, acm_args, split_args;
  std::string twist_arg, at_arg, criterion_arg;
  std::string koszul_space;
  bool koszul_json = false;

  auto add_common = [](CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--space", args.space_arg, "comma-separated factor dimensions n_1,...,n_s")
        ->required();
    cmd->add_option("expr", args.bundle_expr, "bundle expression, e.g. \"O(1,-2) + 2*box(O(0),Om(1,2))\"")
        ->required();
    cmd->add_flag("--json", args.as_json, "machine-readable JSON output");
  };

  CLI::App* cohom = app.add_subcommand("cohom", "cohomology table h^0..h^d and chi");
  add_common(cohom, cohom_args);
  cohom->add_option("--twist", twist_arg, "apply an extra twist k_1,...,k_s first");

  CLI::App* reg = app.add_subcommand("reg", "multigraded regularity");
  add_common(reg, reg_args);
  reg->add_option("--at", at_arg, "test (p_1,...,p_s)-regularity instead of searching Reg");

  CLI::App* acm = app.add_subcommand("acm", "arithmetically Cohen-Macaulay test");
  add_common(acm, acm_args);

  CLI::App* split = app.add_subcommand("split", "splitting-criterion report");
  add_common(split, split_args);
  split->add_option("--criterion", criterion_arg, "thm31 | thm32 | thm33")->required();

  CLI::App* koszul = app.add_subcommand("koszul-verify", "Koszul complex identities");
  koszul->add_option("--space", koszul_space, "comma-separated factor dimensions")->required();
  koszul->add_flag("--json", koszul_json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(cohom)) return run_cohom(cohom_args, twist_arg);
    if (app.got_subcommand(reg)) return run_reg(reg_args, at_arg);
    if (app.got_subcommand(acm)) return run_acm(acm_args);
    if (app.got_subcommand(split)) return run_split(split_args, criterion_arg);
    if (app.got_subcommand(koszul)) return run_koszul(koszul_space, koszul_json);
  } catch (const mc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.diagnostic().semantic ? kExitSemantic : kExitParse;
  } catch (const mc::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
