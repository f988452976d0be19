// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all
// of them pass.  Time limits are part of each criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "naive_quotient.hpp"
#include "triplex/catalog.hpp"
#include "triplex/envelope.hpp"
#include "triplex/hopf.hpp"
#include "triplex/lts.hpp"
#include "triplex/suite.hpp"
#include "triplex/system_io.hpp"

using namespace triplex;

namespace {

const std::filesystem::path data = TRIPLEX_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

// Every record with the given id must exist and pass.
void require_ids(Outcome& o, const CheckList& checks, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& c : checks) {
      if (c.id != id) continue;
      found = true;
      o.require(c.pass, id + ": " + c.witness);
    }
    o.require(found, "missing " + id);
  }
}

void require_suite(Outcome& o, const std::string& suite, const TripleSystem& t, std::size_t cap) {
  const SuiteReport r = run_suite(suite, t, SuiteOptions{cap, 0, kDefaultMaxMonomials});
  for (const auto& c : r.checks) o.require(c.pass, suite + " " + c.id + ": " + c.witness);
  o.require(!r.checks.empty(), suite + " ran no checks");
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome c1() {
  Outcome o;
  const TripleSystem t = load_triple_system(data / "s2.json");
  const CheckList ax = check_axioms(t);
  o.require(ax.size() == 3 && all_pass(ax), "axioms");
  const Vec e{1, 0}, f{0, 1};
  o.require(r_op(t, e, e).matrix == Matrix::from_rows({{0, -2}, {0, 0}}), "R_ee");
  o.require(r_op(t, e, f).matrix == Matrix::from_rows({{0, 0}, {0, 2}}), "R_ef");
  o.require(r_op(t, f, e).matrix == Matrix::from_rows({{2, 0}, {0, 0}}), "R_fe");
  o.require(r_op(t, f, f).matrix == Matrix::from_rows({{0, 0}, {-2, 0}}), "R_ff");
  return o;
}

Outcome c2() {
  Outcome o;
  const std::vector<std::pair<TripleSystem, std::size_t>> positive{
      {catalog::s2(), 4},
      {catalog::sl2_lts(), 9},
      {lts_from_involution(catalog::sl3(), catalog::sl3_transpose_involution()), 25}};
  for (const auto& [t, dim] : positive) {
    const EndoResult r = endo_theorem_check(t);
    o.require(r.holds && r.closure_dim == dim, t.name() + " closure " + std::to_string(r.closure_dim));
  }
  for (const TripleSystem& t : {catalog::abelian(3), catalog::direct_sum(catalog::s2(), catalog::s2())}) {
    o.require(!endo_theorem_check(t).holds, t.name() + " should fail");
  }
  return o;
}

Outcome c3() {
  Outcome o;
  const std::vector<TripleSystem> systems{catalog::s2(),
                                          catalog::sl2_lts(),
                                          lts_from_lie(catalog::sl2()),
                                          lts_from_lie(catalog::sl3()),
                                          catalog::sl3_symmetric_lts(),
                                          catalog::abelian(3),
                                          catalog::direct_sum(catalog::s2(), catalog::s2())};
  for (const auto& t : systems) {
    const CheckList c = trace_identity_check(t, standard_embedding(t));
    o.require(!c.empty() && all_pass(c), t.name());
  }
  return o;
}

Outcome c4() {
  Outcome o;
  const EnvelopingAlgebra s = EnvelopingAlgebra::build(catalog::s2(), 6);
  o.require(s.degree_dims() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7} && s.dim() == 28, "S2 dims");
  const EnvelopingAlgebra l = EnvelopingAlgebra::build(catalog::sl2_lts(), 4);
  o.require(l.dim() == 35, "sl2 dim " + std::to_string(l.dim()));
  return o;
}

Outcome c5() {
  Outcome o;
  naive::Naive n;
  n.eliminate();
  const EnvelopingAlgebra u = EnvelopingAlgebra::build(catalog::s2(), 3);
  const auto bad = naive::mismatches(u, n);
  o.require(std::count(n.deg.begin(), n.deg.end(), 3) == 16, "monomial count");
  o.require(bad.empty(), bad.empty() ? "" : "first mismatch " + bad[0]);
  return o;
}

Outcome c6() {
  Outcome o;
  const TripleSystem t = catalog::s2();
  const SuiteReport j = run_suite("jordan", t, SuiteOptions{5, 0, kDefaultMaxMonomials});
  require_ids(o, j.checks, {"jordan.operator_identity", "jordan.d_derivation"});
  const EnvelopingAlgebra u = EnvelopingAlgebra::build(t, 5);
  require_ids(o, pbw_checks(u), {"pbw.triple_coherence", "pbw.power_nucleus"});
  return o;
}

Outcome c7() {
  Outcome o;
  require_suite(o, "lemma", catalog::s2(), 6);
  require_suite(o, "lemma", catalog::sl2_lts(), 4);
  return o;
}

Outcome c8() {
  Outcome o;
  require_suite(o, "expansion", catalog::s2(), 5);
  return o;
}

Outcome c9() {
  Outcome o;
  const EnvelopingAlgebra u = EnvelopingAlgebra::build(catalog::s2(), 6);
  const CheckList c = s2_suite(u, 3);
  o.require(c.size() == 8 && all_pass(c), "s2 suite");
  return o;
}

Outcome c10() {
  Outcome o;
  require_suite(o, "hopf", catalog::s2(), 6);
  const EnvelopingAlgebra u = EnvelopingAlgebra::build(catalog::s2(), 6);
  const Bialgebra h(u);
  o.require(primitives(h, 4).dim() == 2, "primitives");
  return o;
}

Outcome c11() {
  Outcome o;
  require_suite(o, "mainthm", catalog::s2(), 6);
  return o;
}

Outcome c12() {
  Outcome o;
  const std::string cmd = std::string(TRIPLEX_CLI) + " verify " + (data / "s2.json").string() +
                          " --suite all --json 2>/dev/null";
  const std::string a = capture(cmd), b = capture(cmd);
  o.require(!a.empty(), "no output");
  o.require(a == b, "reports differ");
  o.require(a.find("\"pass\": false") == std::string::npos && a.find("\"pass\":false") == std::string::npos,
            "report has failures");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {"S2 axioms and R matrices", 1, c1},
      {"Lie closure of R operators", 60, c2},
      {"trace identity", 5, c3},
      {"PBW dimensions", 720, c4},
      {"naive quotient oracle", 10, c5},
      {"operator identities at N=5", 300, c6},
      {"associator residue", 600, c7},
      {"associator expansion", 300, c8},
      {"S2 proposition and eigenvalues", 120, c9},
      {"bialgebra suite", 600, c10},
      {"right ideals", 900, c11},
      {"deterministic reports", 600, c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= all[i].limit_s, "over the time limit");
    char took[32];
    std::snprintf(took, sizeof took, "%.2f s", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << all[i].name << " (" << took << ")";
    if (!o.note.empty()) std::cout << ": " << o.note;
    std::cout << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
