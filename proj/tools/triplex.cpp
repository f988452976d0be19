// triplex: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 usage or input error,
// 3 degree budget or size guard exceeded.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triplex/envelope.hpp"
#include "triplex/errors.hpp"
#include "triplex/lts.hpp"
#include "triplex/suite.hpp"
#include "triplex/system_io.hpp"

using namespace triplex;

namespace {

struct Options {
  std::string file;
  std::size_t cap = 0;
  std::size_t max_monomials = kDefaultMaxMonomials;
  std::vector<std::string> exprs;
  std::string suite;
  std::uint64_t seed = 0;
  bool json = false;
};

int report(const CheckList& checks) {
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.witness.empty()) std::cout << ": " << c.witness;
    std::cout << "\n";
  }
  return all_pass(checks) ? 0 : 1;
}

std::size_t cap_for(const Options& o, const TripleSystem& t) {
  return o.cap ? o.cap : default_cap(t.dim());
}

EnvelopingAlgebra envelope_for(const Options& o, const TripleSystem& t) {
  return EnvelopingAlgebra::build(t, cap_for(o, t), o.max_monomials);
}

int cmd_check(const Options& o) {
  SystemDocument doc = load_system(o.file);
  CheckList checks;
  if (auto* l = std::get_if<LieAlgebra>(&doc)) {
    checks = l->check();
    if (!all_pass(checks)) return report(checks);
    for (auto& c : check_axioms(lts_from_lie(*l))) checks.push_back(c);
  } else {
    checks = check_axioms(std::get<TripleSystem>(doc));
  }
  return report(checks);
}

int cmd_embed(const Options& o) {
  const TripleSystem t = load_triple_system(o.file);
  const StandardEmbedding emb = standard_embedding(t);
  std::cout << "L(T) dimension " << emb.lie.dim() << " = InnDer " << emb.inner_dim << " + T "
            << emb.t_dim << "\nbasis";
  for (const auto& n : emb.lie.basis_names()) std::cout << " " << n;
  std::cout << "\nsigma\n" << to_string(emb.sigma) << "\nKilling form\n" << to_string(emb.killing)
            << "\nKilling form "
            << (emb.killing_nondegenerate() ? "nondegenerate" : "degenerate") << "\n";
  CheckList checks = embedding_checks(emb);
  for (auto& c : trace_identity_check(t, emb)) checks.push_back(c);
  for (auto& c : adjointness_check(t, emb)) checks.push_back(c);
  return report(checks);
}

int cmd_endo(const Options& o) {
  const TripleSystem t = load_triple_system(o.file);
  const EndoResult r = endo_theorem_check(t);
  std::cout << "Lie closure of R operators: " << r.closure_dim << " of " << r.target_dim << "\n"
            << (r.holds ? "PASS" : "FAIL") << " endo.lie_closure\n";
  return r.holds ? 0 : 1;
}

int cmd_simple(const Options& o) {
  const TripleSystem t = load_triple_system(o.file);
  const SimplicityReport r = simplicity_certificate(t);
  std::cout << "verdict " << to_string(r.verdict) << "\nassociative envelope " << r.envelope_dim
            << " of " << t.dim() * t.dim() << "\n"
            << "nonzero product " << (r.nontrivial_product ? "yes" : "no") << "\n";
  if (r.invariant_witness) {
    std::cout << "invariant subspace of dimension " << r.invariant_witness->dim() << "\n";
  }
  return r.verdict == Simplicity::Simple ? 0 : 1;
}

int cmd_pbw(const Options& o) {
  const TripleSystem t = load_triple_system(o.file);
  const EnvelopingAlgebra u = envelope_for(o, t);
  const auto dims = u.degree_dims();
  std::cout << "N=" << u.cap() << " free monomials " << u.free().size() << ", relation rank "
            << u.relation_rank() << ", normal forms " << u.dim() << "\n";
  for (std::size_t n = 0; n < dims.size(); ++n) {
    std::cout << "degree " << n << ": " << dims[n] << " (expected "
              << symmetric_count(u.generators(), n) << ")\n";
  }
  std::cout << "basis";
  for (std::size_t i = 0; i < u.dim(); ++i) std::cout << " " << u.format_monomial(i);
  std::cout << "\n";
  return report(pbw_checks(u));
}

int cmd_mul(const Options& o) {
  if (o.exprs.size() != 2) throw PreconditionError("mul takes exactly two expressions");
  const TripleSystem t = load_triple_system(o.file);
  const EnvelopingAlgebra u = envelope_for(o, t);
  const Element x = u.parse(o.exprs[0]);
  const Element y = u.parse(o.exprs[1]);
  std::cout << u.format(u.mul(x, y)) << "\n";
  return 0;
}

int cmd_ideal(const Options& o) {
  if (o.exprs.empty()) throw PreconditionError("ideal needs at least one --right generator");
  const TripleSystem t = load_triple_system(o.file);
  const EnvelopingAlgebra u = envelope_for(o, t);
  std::vector<Element> gens;
  for (const auto& e : o.exprs) gens.push_back(u.parse(e));
  const IdealClosure c = right_ideal_closure(u, gens);
  std::cout << "right ideal closure in U(T)_" << u.cap() << ": dim " << c.subspace.dim() << " of "
            << u.dim() << "\nlevels";
  for (auto d : c.level_dims) std::cout << " " << d;
  std::cout << "\ncontains 1: " << (c.contains_one ? "yes" : "no")
            << "\ndim I cap T: " << c.meets_t << "\nsafe window: degree <= " << c.window
            << "\nstabilization degree: "
            << (c.stabilization_degree ? std::to_string(*c.stabilization_degree) : "none") << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const TripleSystem t = load_triple_system(o.file);
  const auto start = std::chrono::steady_clock::now();
  SuiteOptions so{o.cap, o.seed, o.max_monomials};
  const SuiteReport r = run_suite(o.suite, t, so);
  if (o.json) {
    std::cout << r.to_json();
  } else {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << r.to_text() << "time " << ms << " ms\n";
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie triple systems and their universal enveloping algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-monomials", o.max_monomials, "Size guard for the free monomial table");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "System description (JSON)")->required()->check(CLI::ExistingFile);
    return c;
  };
  auto with_cap = [&](CLI::App* c) {
    c->add_option("-N", o.cap, "Degree cap")->check(CLI::PositiveNumber);
    return c;
  };

  CLI::App* check = file_cmd("check", "Check the axioms");
  CLI::App* embed = file_cmd("embed", "Standard embedding Lie algebra");
  CLI::App* endo = file_cmd("endo", "Lie closure of the R operators");
  CLI::App* simple = file_cmd("simple", "Simplicity certificate");
  CLI::App* pbw = with_cap(file_cmd("pbw", "Build U(T) up to degree N"));
  CLI::App* mul = with_cap(file_cmd("mul", "Multiply two expressions in U(T)"));
  mul->add_option("exprs", o.exprs, "Two expressions")->expected(2);
  CLI::App* ideal = with_cap(file_cmd("ideal", "Right ideal closure"));
  ideal->add_option("--right", o.exprs, "Generators")->required()->expected(1, -1);
  CLI::App* verify = with_cap(file_cmd("verify", "Run a verification suite"));
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "Sample seed");
  verify->add_flag("--json", o.json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (embed->parsed()) return cmd_embed(o);
    if (endo->parsed()) return cmd_endo(o);
    if (simple->parsed()) return cmd_simple(o);
    if (pbw->parsed()) return cmd_pbw(o);
    if (mul->parsed()) return cmd_mul(o);
    if (ideal->parsed()) return cmd_ideal(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const DegreeBudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const SizeGuardExceeded& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const PBWCertificateFailure& e) {
    std::cerr << "PBW certificate failed at degree " << e.degree << ": " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
