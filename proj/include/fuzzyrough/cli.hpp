#ifndef FUZZYROUGH_CLI_HPP
#define FUZZYROUGH_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fuzzyrough/approximation.hpp"
#include "fuzzyrough/exactness.hpp"
#include "fuzzyrough/io.hpp"
#include "fuzzyrough/lattice.hpp"
#include "fuzzyrough/relation.hpp"

namespace fuzzyrough::cli {

enum ExitCode : int { ok = 0, falsified = 1, input_error = 2 };

/// Result of one command. Both renderings are produced from `data`,
/// `verifications` and `warnings` only.
struct Report {
  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, bool>> verifications;
  std::vector<std::string> warnings;

  void verify(std::string name, bool passed) { verifications.emplace_back(std::move(name), passed); }

  bool all_verified() const {
    for (const auto& [name, passed] : verifications)
      if (!passed) return false;
    return true;
  }

  std::string machine() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["data"] = data;
    j["verifications"] = nlohmann::ordered_json::object();
    for (const auto& [name, passed] : verifications) j["verifications"][name] = passed;
    j["warnings"] = warnings;
    j["verified"] = all_verified();
    return j.dump(2) + "\n";
  }

  std::string text() const {
    std::ostringstream os;
    os << command << "\n";
    render(os, data, 1);
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    for (const auto& [name, passed] : verifications) os << (passed ? "[pass] " : "[FAIL] ") << name << "\n";
    os << (all_verified() ? "all verifications passed" : "verification FAILED") << "\n";
    return os.str();
  }

private:
  static std::string scalar(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
  }

  static bool flat(const nlohmann::ordered_json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& e : v)
      if (e.is_array() || e.is_object()) return false;
    return true;
  }

  static void render(std::ostream& os, const nlohmann::ordered_json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    auto inline_form = [](const nlohmann::ordered_json& x) {
      if (!x.is_array()) return scalar(x);
      std::string s = "[";
      for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + scalar(x[i]);
      return s + "]";
    };
    if (v.is_object()) {
      for (const auto& [key, val] : v.items()) {
        if (flat(val)) {
          os << pad << key << ": " << inline_form(val) << "\n";
        } else {
          os << pad << key << ":\n";
          render(os, val, depth + 1);
        }
      }
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (flat(e)) {
          os << pad << "- " << inline_form(e) << "\n";
        } else {
          os << pad << "-\n";
          render(os, e, depth + 1);
        }
      }
    } else {
      os << pad << scalar(v) << "\n";
    }
  }
};

namespace detail {

inline nlohmann::ordered_json degrees_json(const FuzzySet& f) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& d : f.degrees()) a.push_back(d.str());
  return a;
}

inline nlohmann::ordered_json partition_json(const Partition& p) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& b : p.blocks()) a.push_back(b.str());
  return a;
}

inline void require_equivalence(const FuzzyRelation& r, TNorm t) {
  const auto v = validate(r, t);
  if (v.is_t_equivalence()) return;
  std::string msg = "relation is not a " + std::string(name_of(t)) + "-equivalence";
  if (!v.witnesses.empty()) msg += ": " + v.witnesses.front().describe(*r.universe());
  throw InvalidRelation(msg);
}

inline Report check(const FuzzyRelation& r, TNorm t) {
  Report rep{"check"};
  const auto v = validate(r, t);
  rep.data["tnorm"] = std::string(name_of(t));
  rep.data["size"] = r.size();
  auto values = nlohmann::ordered_json::array();
  for (const auto& d : spectrum(r)) values.push_back(d.str());
  rep.data["spectrum"] = values;
  rep.data["reflexive"] = v.reflexive;
  rep.data["symmetric"] = v.symmetric;
  rep.data["t_transitive"] = v.t_transitive;
  rep.data["spectrum_dually_well_ordered"] = v.spectrum_dually_well_ordered;
  rep.data["violations"] = v.violation_count;
  auto wit = nlohmann::ordered_json::array();
  for (const auto& w : v.witnesses) wit.push_back(w.describe(*r.universe()));
  if (!wit.empty()) rep.data["witnesses"] = wit;

  const auto e = relation_core(r);
  if (e.is_equivalence()) rep.data["E_classes"] = partition_json(classes(e));
  else rep.warnings.push_back("the core relation E is not an equivalence");
  const auto s = relation_support(r, t);
  if (s.non_positive_tnorm)
    rep.warnings.push_back("t-norm " + std::string(name_of(t)) + " is not positive; the support S need not be transitive");
  if (s.relation.is_equivalence()) rep.data["S_classes"] = partition_json(classes(s.relation));
  else rep.warnings.push_back("the support relation S is not an equivalence");

  rep.verify("reflexive", v.reflexive);
  rep.verify("symmetric", v.symmetric);
  rep.verify(std::string(name_of(t)) + "-transitive", v.t_transitive);
  return rep;
}

inline Report approx(const FuzzyRelation& r, TNorm t, const CrispSet& a) {
  require_equivalence(r, t);
  Report rep{"approx"};
  const auto fp = fuzzy_rough_pair(a, r);
  const auto bridge = lemma2_bridge(a, r, t);
  const bool prop1 = prop1_check(a, r);
  rep.data["set"] = a.str();
  rep.data["universe"] = r.universe()->labels();
  rep.data["fuzzy_lower"] = degrees_json(fp.lower);
  rep.data["fuzzy_upper"] = degrees_json(fp.upper);
  rep.data["A_E"] = bridge.by_e.lower.str();
  rep.data["A^E"] = bridge.by_e.upper.str();
  if (bridge.by_s) {
    rep.data["A_S"] = bridge.by_s->lower.str();
    rep.data["A^S"] = bridge.by_s->upper.str();
  } else {
    rep.warnings.push_back("t-norm " + std::string(name_of(t)) + " is not positive; S-side checks skipped");
  }
  rep.data["core_of_upper"] = core_of(fp.upper).str();
  rep.data["support_of_lower"] = support_of(fp.lower).str();
  rep.data["support_of_upper"] = support_of(fp.upper).str();
  rep.data["core_of_lower"] = core_of(fp.lower).str();
  rep.verify("A^E = core(upper)", bridge.upper_e_is_core);
  rep.verify("A_E = support(lower)", bridge.lower_e_is_support);
  if (bridge.s_side_checked) {
    rep.verify("A^S = support(upper)", bridge.upper_s_is_support);
    rep.verify("A_S = core(lower)", bridge.lower_s_is_core);
  }
  rep.verify("upper(A) = upper(A^E) and lower(A) = lower(A_E)", prop1);
  return rep;
}

inline Report lattice(const FuzzyRelation& r, TNorm t, const std::string& dot_path) {
  require_equivalence(r, t);
  Report rep{"lattice"};
  const auto fuzzy = enumerate_fuzzy(r, t);
  const auto crisp = enumerate_crisp(classes(relation_core(r)));
  const auto iso = theorem1_verify(r, t);
  const auto stone = stone_verify(fuzzy);

  const bool structure = stone.regular_double_stone() && stone.is_complete.value_or(true);
  rep.data["summary"] = std::to_string(fuzzy.size()) + " elements; isomorphism " +
                        (iso.valid() ? "verified" : "FAILED") + "; distributive regular double Stone: " +
                        (structure ? "yes" : "no");
  rep.data["fuzzy_elements"] = fuzzy.size();
  rep.data["crisp_elements"] = crisp.size();
  rep.data["cover_edges"] = fuzzy.covers().size();
  rep.data["E_classes"] = partition_json(classes(relation_core(r)));
  rep.data["isomorphism"] = {{"well_defined", iso.well_defined},
                             {"bijective", iso.bijective},
                             {"order_preserving_both_ways", iso.order_preserving_both_ways}};
  if (iso.counterexample) rep.data["isomorphism"]["counterexample"] = *iso.counterexample;
  nlohmann::ordered_json st = {{"lattice", stone.is_lattice},
                               {"distributive", stone.is_distributive},
                               {"stone", stone.stone_identity},
                               {"dual_stone", stone.dual_stone_identity},
                               {"regular", stone.is_regular}};
  if (stone.is_complete) st["complete"] = *stone.is_complete;
  else st["complete"] = "not checked (too many elements)";
  rep.data["structure"] = st;
  if (!stone.counterexamples.empty()) {
    auto ce = nlohmann::ordered_json::array();
    for (const auto& c : stone.counterexamples) ce.push_back(c.property + ": " + c.detail);
    rep.data["counterexamples"] = ce;
  }

  rep.verify("isomorphic to the crisp rough set lattice of E", iso.valid());
  rep.verify("lattice", stone.is_lattice);
  rep.verify("distributive", stone.is_distributive);
  rep.verify("stone identity", stone.stone_identity);
  rep.verify("dual stone identity", stone.dual_stone_identity);
  rep.verify("regular", stone.is_regular);
  if (stone.is_complete) rep.verify("complete", *stone.is_complete);

  if (!dot_path.empty()) {
    std::ofstream f(dot_path, std::ios::binary);
    if (!f) throw PreconditionViolated("cannot open '" + dot_path + "' for writing");
    f << to_dot(fuzzy);
    if (!f) throw PreconditionViolated("failed writing '" + dot_path + "'");
    rep.data["dot"] = dot_path;
  }
  return rep;
}

inline Report exact(const FuzzyRelation& r, TNorm t) {
  require_equivalence(r, t);
  Report rep{"exact"};
  const auto records = exactness_scan(r, t);
  bool agree = true, indicator = true;
  auto sets = nlohmann::ordered_json::array();
  auto disagreements = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    agree = agree && rec.agree;
    indicator = indicator && rec.indicator_valued;
    if (!rec.agree) disagreements.push_back(rec.set.str());
    if (rec.fuzzy_exact)
      sets.push_back({{"set", rec.set.str()}, {"membership", degrees_json(fuzzy_lower(rec.set, r))}});
  }
  rep.data["S_classes"] = partition_json(classes(relation_support(r, t).relation));
  rep.data["exact_sets"] = sets;
  rep.data["exact_count"] = sets.size();
  if (!disagreements.empty()) rep.data["disagreements"] = disagreements;
  rep.verify("fuzzy exact iff A_S = A^S", agree);
  rep.verify("exact memberships are indicator functions", indicator);
  return rep;
}

inline Report alpha(const FuzzyRelation& r, TNorm t, const CrispSet& a, const Degree& level) {
  require_equivalence(r, t);
  Report rep{"alpha"};
  const auto id = alpha_identities(r, a, level);
  rep.data["set"] = a.str();
  rep.data["alpha"] = level.str();
  rep.data["cut_classes"] = partition_json(classes(alpha_cut(r, level)));
  rep.data["upper_by_cut"] = id.by_cut.upper.str();
  rep.data["upper_threshold"] = id.upper_threshold.str();
  rep.data["lower_by_cut"] = id.by_cut.lower.str();
  rep.data["lower_threshold"] = id.lower_threshold.str();
  rep.verify("A^{R_alpha} = {x | upper(x) >= alpha}", id.upper_holds);
  rep.verify("A_{R_alpha} = {x | lower(x) > 1 - alpha}", id.lower_holds);
  return rep;
}

inline RelationDocument load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_relation_document(buf.str());
}

} // namespace detail

/// Parses `args` (without the program name), runs one subcommand and writes
/// the report to `out`, diagnostics to `err`. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy rough sets over finite universes: approximations, lattices and structural checks"};
  app.require_subcommand(1);

  std::string tnorm_name = "min";
  std::string format = "text";
  app.add_option("--tnorm", tnorm_name, "t-norm: min, product or lukasiewicz")
      ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));

  std::string path, set_text, alpha_text, dot_path;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("relation", path, "relation file (JSON document or CSV matrix)")->required();
    sub->add_option("--tnorm", tnorm_name, "t-norm: min, product or lukasiewicz")
        ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto* check_cmd = app.add_subcommand("check", "validate the relation, print spectrum and E/S classes");
  auto* approx_cmd = app.add_subcommand("approx", "fuzzy and crisp approximations of a reference set");
  auto* lattice_cmd = app.add_subcommand("lattice", "enumerate lattices, check isomorphism and double Stone structure");
  auto* exact_cmd = app.add_subcommand("exact", "list exact reference sets");
  auto* alpha_cmd = app.add_subcommand("alpha", "check the alpha-cut approximation identities");
  for (auto* s : {check_cmd, approx_cmd, lattice_cmd, exact_cmd, alpha_cmd}) add_input(s);
  approx_cmd->add_option("--set", set_text, "comma-separated labels")->required();
  alpha_cmd->add_option("--set", set_text, "comma-separated labels")->required();
  alpha_cmd->add_option("--alpha", alpha_text, "degree in (0,1]")->required();
  lattice_cmd->add_option("--dot", dot_path, "write the Hasse diagram of the fuzzy lattice here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    const TNorm t = *tnorm_from_name(tnorm_name);
    const auto doc = detail::load(path);
    const auto& r = doc.relation;
    Report rep;
    if (check_cmd->parsed()) rep = detail::check(r, t);
    else if (approx_cmd->parsed()) rep = detail::approx(r, t, parse_label_set(r.universe(), set_text));
    else if (lattice_cmd->parsed()) rep = detail::lattice(r, t, dot_path);
    else if (exact_cmd->parsed()) rep = detail::exact(r, t);
    else rep = detail::alpha(r, t, parse_label_set(r.universe(), set_text), Degree::parse(alpha_text));
    if (doc.name) rep.data["name"] = *doc.name;
    out << (format == "machine" ? rep.machine() : rep.text());
    return rep.all_verified() ? ok : falsified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

} // namespace fuzzyrough::cli

#endif // FUZZYROUGH_CLI_HPP
