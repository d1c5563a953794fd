// Prints one PASS/FAIL line per acceptance criterion; exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "fuzzyrough/cli.hpp"
#include "fuzzyrough/exactness.hpp"
#include "fuzzyrough/lattice.hpp"
#include "reference_tables.hpp"

using namespace fuzzyrough;

namespace {

constexpr int random_instances = 120;
constexpr int nested_pairs = 60;

std::vector<FuzzyRelation> instances() {
  std::vector<FuzzyRelation> out{fixtures::table1()};
  std::mt19937 rng(20240611);
  for (int i = 0; i < random_instances; ++i) out.push_back(random_min_equivalence(Universe::letters(2 + i % 5), rng));
  return out;
}

std::string canonical_row(const std::string& published) {
  std::istringstream is(published);
  std::string tok, out;
  while (is >> tok) out += (out.empty() ? "" : " ") + Degree::parse(tok).str();
  return out;
}

std::uint64_t subsets(const FuzzyRelation& r) { return std::uint64_t{1} << r.size(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome table_replay() {
  Outcome o;
  const auto r = fixtures::table1();
  const auto& u = r.universe();
  const auto p = classes(relation_core(r));
  std::size_t rows = 0;
  for (const auto& row : reference::approximations()) {
    const auto a = fixtures::set_of(u, row.set);
    const auto rp = crisp_approx(a, p);
    const auto fp = fuzzy_rough_pair(a, r);
    if (rp.lower != fixtures::set_of(u, row.lower_e) || rp.upper != fixtures::set_of(u, row.upper_e) ||
        fp.lower != fixtures::vec(u, {row.lower.begin(), row.lower.end()}) ||
        fp.upper != fixtures::vec(u, {row.upper.begin(), row.upper.end()}))
      o.fail(std::string("row ") + (*row.set ? row.set : "{}"));
    ++rows;
  }
  if (rows != 32) o.fail("expected 32 rows");
  o.detail = o.pass ? "32/32 subsets match" : o.detail;
  return o;
}

Outcome hasse_reproduction() {
  Outcome o;
  const auto l = enumerate_fuzzy(fixtures::table1());
  if (l.size() != 18) o.fail(std::to_string(l.size()) + " elements");
  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < l.size(); ++i) by_label[l.label(i)] = i;
  std::map<std::string, std::size_t> node;
  for (const auto& n : reference::hasse_nodes()) {
    const auto key = canonical_row(n.upper) + "\n" + canonical_row(n.lower);
    const auto it = by_label.find(key);
    if (it == by_label.end()) {
      o.fail(std::string("node ") + n.name + " missing");
      return o;
    }
    node[n.name] = it->second;
  }
  std::set<RoughLattice::Edge> expected;
  for (const auto& [lo, hi] : reference::hasse_edges()) expected.emplace(node[lo], node[hi]);
  const std::set<RoughLattice::Edge> got(l.covers().begin(), l.covers().end());
  if (got != expected) o.fail("cover relation differs");
  if (o.pass) o.detail = "18 elements, " + std::to_string(got.size()) + " cover edges match";
  return o;
}

Outcome isomorphism(const std::vector<FuzzyRelation>& rs) {
  Outcome o;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto w = theorem1_verify(rs[i]);
    if (!w.valid()) o.fail("instance " + std::to_string(i) + ": " + w.counterexample.value_or("invalid witness"));
  }
  if (o.pass) o.detail = std::to_string(rs.size()) + " instances";
  return o;
}

Outcome double_stone(const std::vector<FuzzyRelation>& rs) {
  Outcome o;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto rep = stone_verify(enumerate_fuzzy(rs[i]));
    if (!rep.regular_double_stone()) o.fail("instance " + std::to_string(i));
  }
  const auto m3 = RoughLattice::from_covers({"0", "x", "y", "z", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  const auto rep = stone_verify(m3);
  if (!rep.is_lattice || rep.is_distributive) o.fail("M3 self-test: distributivity not rejected");
  if (o.pass) o.detail = std::to_string(rs.size()) + " instances; M3 rejected";
  return o;
}

Outcome exactness(const std::vector<FuzzyRelation>& rs) {
  Outcome o;
  std::size_t sets = 0;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (const auto& rec : exactness_scan(rs[i])) {
      ++sets;
      if (!rec.agree) o.fail("instance " + std::to_string(i) + " set " + rec.set.str());
    }
  const auto t3 = fixtures::table3();
  const auto& u = t3.universe();
  std::set<std::uint64_t> got;
  for (const auto& rec : exactness_scan(t3))
    if (rec.fuzzy_exact) got.insert(rec.set.mask());
  const std::set<std::uint64_t> expected{0, fixtures::set_of(u, "d").mask(), fixtures::set_of(u, "abc").mask(),
                                         CrispSet::full(u).mask()};
  if (got != expected) o.fail("four-element example exact sets differ");
  if (o.pass) o.detail = std::to_string(sets) + " sets, 4 exact sets reproduced";
  return o;
}

Outcome bridges(const std::vector<FuzzyRelation>& rs) {
  Outcome o;
  std::size_t sets = 0;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::uint64_t m = 0; m < subsets(rs[i]); ++m) {
      const auto a = CrispSet::from_mask(rs[i].universe(), m);
      ++sets;
      if (!lemma2_bridge(a, rs[i]).verified) o.fail("core/support bridge, instance " + std::to_string(i) + " " + a.str());
      if (!prop1_check(a, rs[i])) o.fail("approximation of A_E/A^E, instance " + std::to_string(i) + " " + a.str());
    }
  if (o.pass) o.detail = std::to_string(sets) + " sets";
  return o;
}

Outcome alpha(const std::vector<FuzzyRelation>& rs) {
  Outcome o;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (const auto& level : alpha_sweep(rs[i]))
      for (std::uint64_t m = 0; m < subsets(rs[i]); ++m) {
        const auto id = alpha_identities(rs[i], CrispSet::from_mask(rs[i].universe(), m), level);
        ++checks;
        if (!id.upper_holds || !id.lower_holds)
          o.fail("instance " + std::to_string(i) + " alpha " + level.str() + " set " + id.by_cut.lower.str());
      }
  if (o.pass) o.detail = std::to_string(checks) + " (set, alpha) pairs";
  return o;
}

Outcome three_valued() {
  Outcome o;
  std::mt19937 rng(77);
  std::size_t sets = 0;
  for (int i = 0; i < nested_pairs; ++i) {
    const auto u = Universe::letters(1 + i % 6);
    const auto [certain, possible] = fixtures::random_nested_equivalences(u, rng);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << u->size()); ++m) {
      ++sets;
      if (!three_valued_approx(certain, possible, CrispSet::from_mask(u, m)).agree)
        o.fail("pair " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = std::to_string(nested_pairs) + " pairs, " + std::to_string(sets) + " sets";
  return o;
}

Outcome dot_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string input = std::string(FUZZYROUGH_DATA_DIR) + "/table1.json";
  std::string bytes[2];
  for (int k = 0; k < 2; ++k) {
    const auto path = dir / ("fuzzyrough_acceptance_" + std::to_string(k) + ".dot");
    std::ostringstream out, err;
    const int code = cli::run({"lattice", input, "--dot", path.string()}, out, err);
    if (code != cli::ok) o.fail("lattice exited " + std::to_string(code) + ": " + err.str());
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    bytes[k] = s.str();
    std::filesystem::remove(path);
  }
  if (bytes[0].empty() || bytes[0] != bytes[1]) o.fail("DOT output differs between runs");
  if (o.pass) o.detail = std::to_string(bytes[0].size()) + " identical bytes";
  return o;
}

} // namespace

int main() {
  const auto rs = instances();
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)(const std::vector<FuzzyRelation>&);
  };
  const Criterion criteria[] = {
      {1, "approximation table replay", [](const auto&) { return table_replay(); }},
      {2, "Hasse diagram reproduction", [](const auto&) { return hasse_reproduction(); }},
      {3, "crisp/fuzzy lattice isomorphism", isomorphism},
      {4, "regular double Stone structure", double_stone},
      {5, "exactness criterion", exactness},
      {6, "core/support bridges", bridges},
      {7, "alpha-cut identities", alpha},
      {8, "three-valued consistency", [](const auto&) { return three_valued(); }},
      {9, "DOT determinism", [](const auto&) { return dot_determinism(); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(rs);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << ms << " ms]\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
