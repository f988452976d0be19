#include "triplex/suite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "triplex/catalog.hpp"
#include "triplex/envelope.hpp"
#include "triplex/errors.hpp"
#include "triplex/hopf.hpp"

namespace triplex {

SampleSource::SampleSource(std::uint64_t seed) : engine_(seed) {}

// Plain modular reduction keeps the stream identical across standard
// libraries (the distribution classes are implementation-defined).
long SampleSource::coefficient() { return static_cast<long>(engine_() % 7) - 3; }

std::size_t SampleSource::below(std::size_t n) {
  return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
}

std::size_t default_cap(std::size_t d) {
  if (d <= 2) return 6;
  if (d == 3) return 4;
  return 3;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "axioms", "embedding", "endo", "simple", "pbw",     "jordan",
      "lemma",  "expansion", "s2",   "hopf",   "mainthm", "all"};
  return names;
}

namespace {

// Counts cases and keeps the first counterexample.
class Tally {
 public:
  Tally(std::string id, std::string anchor, std::string params)
      : rec_{std::move(id), std::move(anchor), std::move(params), true, ""} {}

  void check(bool ok, const std::function<std::string()>& witness) {
    ++cases_;
    if (!ok && rec_.pass) {
      rec_.pass = false;
      rec_.witness = witness();
    }
  }
  CheckRecord done() const {
    CheckRecord r = rec_;
    if (r.pass) r.witness = std::to_string(cases_) + " cases";
    return r;
  }

 private:
  CheckRecord rec_;
  std::size_t cases_ = 0;
};

bool is_s2(const TripleSystem& t) {
  if (t.dim() != 2) return false;
  const TripleSystem ref = catalog::s2();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        if (t.constant(i, j, k) != ref.constant(i, j, k)) return false;
  return true;
}

class Runner {
 public:
  Runner(const TripleSystem& t, const SuiteOptions& opts)
      : t_(t), opts_(opts), cap_(opts.cap ? opts.cap : default_cap(t.dim())), rng_(opts.seed) {}

  std::size_t cap() const { return cap_; }
  CheckList take() { return std::move(out_); }

  void run(const std::string& name) {
    if (name == "axioms") return axioms();
    if (name == "embedding") return embedding();
    if (name == "endo") return endo();
    if (name == "simple") return simple();
    if (name == "pbw") return pbw();
    if (name == "jordan") return jordan();
    if (name == "lemma") return lemma();
    if (name == "expansion") return expansion();
    if (name == "s2") return s2();
    if (name == "hopf") return hopf();
    if (name == "mainthm") return mainthm();
    if (name == "all") {
      for (const auto& n : suite_names()) {
        if (n == "all" || (n == "s2" && !is_s2(t_))) continue;
        run(n);
      }
      return;
    }
    throw PreconditionError("unknown suite \"" + name + "\"");
  }

 private:
  const EnvelopingAlgebra& u() {
    if (!u_) u_.emplace(EnvelopingAlgebra::build(t_, cap_, opts_.max_monomials));
    return *u_;
  }
  const Bialgebra& h() {
    if (!h_) h_.emplace(u());
    return *h_;
  }
  const std::string& name(std::size_t g) const { return t_.basis_names()[g]; }
  std::string params() const { return "N=" + std::to_string(cap_); }

  void add(CheckList list) {
    for (auto& c : list) out_.push_back(std::move(c));
  }

  // Random element of degree <= deg; the constant term is forced to zero
  // (augmented) or to a nonzero value.
  Element sample(std::size_t deg, bool augmented) {
    const EnvelopingAlgebra& a = u();
    const std::size_t n = a.filtration_dim(static_cast<long>(deg));
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, Scalar(rng_.coefficient()));
    if (augmented) {
      e[0].second = 0;
    } else {
      while (e[0].second == 0) e[0].second = rng_.coefficient();
    }
    SparseVector v(a.dim(), std::move(e));
    if (v.is_zero()) v = a.generator(0).coords();
    return Element(std::move(v));
  }

  void axioms() { add(check_axioms(t_)); }

  void embedding() {
    const StandardEmbedding emb = standard_embedding(t_);
    add(embedding_checks(emb));
    add(trace_identity_check(t_, emb));
    add(adjointness_check(t_, emb));
    out_.push_back({"embedding.dimensions", "L(T) = InnDer(T) + T", "", true,
                    "InnDer " + std::to_string(emb.inner_dim) + ", T " + std::to_string(emb.t_dim) +
                        ", Killing rank " + std::to_string(emb.killing.rank())});

    const Matrix k = emb.killing_on_t();
    Tally tau("embedding.tau_commutator", "[d,tau_{x,y}] = tau_{d(x),y} + tau_{x,d(y)}",
              "d in InnDer(T), x,y basis");
    for (std::size_t i = 0; i < emb.inner_basis.size(); ++i)
      for (std::size_t x = 0; x < t_.dim(); ++x)
        for (std::size_t y = 0; y < t_.dim(); ++y) {
          tau.check(tau_commutator_check(k, emb.inner_basis[i], t_.basis_vector(x), t_.basis_vector(y)),
                    [&] { return "D#" + std::to_string(i) + " x=" + name(x) + " y=" + name(y); });
        }
    out_.push_back(tau.done());
  }

  void endo() {
    const EndoResult r = endo_theorem_check(t_);
    out_.push_back({"endo.lie_closure", "Lie<R_{a,b}> = End(T)", "", r.holds,
                    "closure " + std::to_string(r.closure_dim) + " of " + std::to_string(r.target_dim)});
  }

  void simple() {
    const SimplicityReport r = simplicity_certificate(t_);
    std::string w = to_string(r.verdict) + ", envelope " + std::to_string(r.envelope_dim);
    if (r.invariant_witness) w += ", invariant subspace of dim " + std::to_string(r.invariant_witness->dim());
    out_.push_back({"simple.certificate", "Assoc<R_{a,b}> = End(T), [T,T,T] != 0", "",
                    r.verdict == Simplicity::Simple, w});
  }

  void pbw() {
    const EnvelopingAlgebra& a = u();
    CheckList list = pbw_checks(a);
    for (auto& c : list) c.params = params() + (c.params.empty() ? "" : ", " + c.params);
    add(std::move(list));
    out_.push_back({"pbw.relation_rank", "rank(relations) = free - C(d+N,N)", params(), true,
                    "free " + std::to_string(a.free().size()) + ", relations " +
                        std::to_string(a.relation_rank()) + ", normal forms " + std::to_string(a.dim())});
  }

  void jordan() {
    const EnvelopingAlgebra& a = u();
    const std::size_t d = a.generators();
    Tally eq4("jordan.operator_identity", "L_{ax+xa} = L_a L_x + L_x L_a", params() + ", monomials x");
    for (std::size_t g = 0; g < d; ++g)
      for (std::size_t x = 0; x < a.dim(); ++x) {
        if (a.nf_degree(x) + 1 > cap_) continue;
        eq4.check(check_jordan(a, g, a.monomial(x)),
                  [&] { return "a=" + name(g) + " x=" + a.format_monomial(x); });
      }
    Tally eq4r("jordan.operator_identity_random", "L_{ax+xa} = L_a L_x + L_x L_a",
               params() + ", seed " + std::to_string(opts_.seed));
    if (cap_ >= 2) {
      for (int s = 0; s < 10; ++s) {
        const std::size_t g = rng_.below(d);
        const Element x = sample(cap_ - 1, false);
        eq4r.check(check_jordan(a, g, x), [&] { return "a=" + name(g) + " x=" + a.format(x); });
      }
    }

    Tally der("jordan.d_derivation", "D_{a,b}(xy) = D_{a,b}(x) y + x D_{a,b}(y)", params() + ", monomials x,y");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t x = 0; x < a.dim(); ++x)
          for (std::size_t y = 0; y < a.dim(); ++y) {
            if (a.nf_degree(x) + a.nf_degree(y) + 2 > cap_) continue;
            der.check(check_d_derivation(a, i, j, a.monomial(x), a.monomial(y)), [&] {
              return "a=" + name(i) + " b=" + name(j) + " x=" + a.format_monomial(x) +
                     " y=" + a.format_monomial(y);
            });
          }

    Tally pw("jordan.power_operator", "L_{c^n} = (L_c)^n", params());
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t n = 1; n <= cap_; ++n)
        for (std::size_t y = 0; y < a.dim(); ++y) {
          if (n + a.nf_degree(y) > cap_) continue;
          Element it = a.monomial(y);
          for (std::size_t k = 0; k < n; ++k) it = a.mul(a.generator(c), it);
          pw.check(a.mul(a.power(c, n), a.monomial(y)) == it,
                   [&] { return name(c) + "^" + std::to_string(n) + " on " + a.format_monomial(y); });
        }

    Tally filt("jordan.filtration_preserved", "R_{a,b} U_k <= U_k", params());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        filt.check(filtration_preservation_check(a, i, j), [&] { return "a=" + name(i) + " b=" + name(j); });

    for (auto* t : {&eq4, &eq4r, &der, &pw, &filt}) out_.push_back(t->done());
  }

  void lemma() {
    const EnvelopingAlgebra& a = u();
    const std::size_t d = a.generators();
    Tally lem("lemma.residue", "(c^n,a,b) - n c^{n-1}(c,a,b) in U_{n-2}", params());
    for (std::size_t n = 0; n + 2 <= cap_; ++n)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            lem.check(check_lemma_derivation(a, c, i, j, n), [&] {
              return "c=" + name(c) + " a=" + name(i) + " b=" + name(j) + " n=" + std::to_string(n) +
                     " residue " + a.format(lemma_residue(a, c, i, j, n));
            });
    out_.push_back(lem.done());
  }

  void expansion() {
    const EnvelopingAlgebra& a = u();
    const std::size_t d = a.generators();
    Tally ex("expansion.associator",
             "(c^n,a,b) = n/2 c^{n-1}[a,c,b] - 1/2 sum_i (c^i, D_{a,c}(c^{n-1-i}), b)", params());
    for (std::size_t n = 1; n + 2 <= cap_; ++n)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            ex.check(check_assoc_expansion(a, c, i, j, n), [&] {
              return "c=" + name(c) + " a=" + name(i) + " b=" + name(j) + " n=" + std::to_string(n);
            });
    out_.push_back(ex.done());
  }

  void s2() {
    if (cap_ < 3) throw DegreeBudgetExceeded("the S2 suite needs N >= 3");
    CheckList list = s2_suite(u(), cap_ - 3);
    for (auto& c : list) c.params = params() + ", " + c.params;
    add(std::move(list));
  }

  void hopf() {
    const EnvelopingAlgebra& a = u();
    const Bialgebra& b = h();
    out_.push_back({"hopf.coideal", "Delta(r) = 0 in U (x) U for every relation r", params(), true,
                    std::to_string(a.relation_rank()) + " relations"});
    CheckList co = check_coalgebra(b, std::min<std::size_t>(3, cap_));
    for (auto& c : co) c.params = params() + ", " + c.params;
    add(std::move(co));
    add(check_s_map(b));

    std::vector<SparseVector> t_basis;
    for (std::size_t g = 0; g < a.generators(); ++g) t_basis.push_back(a.generator(g).coords());
    const Subspace iota_t = echelonize(a.dim(), t_basis);
    Tally prim("hopf.primitives", "Prim(U) = T", params());
    for (std::size_t k = 2; k <= cap_; ++k) {
      const Subspace p = primitives(b, k);
      prim.check(p == iota_t, [&] { return "k=" + std::to_string(k) + " dim " + std::to_string(p.dim()); });
    }
    out_.push_back(prim.done());

    std::vector<Tally> div;
    for (const char* id : {"hopf.div.left_inner", "hopf.div.left_outer", "hopf.div.right_inner",
                           "hopf.div.right_outer"})
      div.emplace_back(id, "", params() + ", monomial pairs and seeded samples");
    auto run_div = [&](const Element& x, const Element& y) {
      CheckList r = check_divisions(b, x, y);
      for (std::size_t i = 0; i < 4; ++i) {
        div[i].check(r[i].pass, [&] { return r[i].params + " got " + r[i].witness; });
      }
      return r;
    };
    std::vector<std::string> anchors;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y) {
        if (a.nf_degree(x) + a.nf_degree(y) > cap_) continue;
        CheckList r = run_div(a.monomial(x), a.monomial(y));
        if (anchors.empty())
          for (const auto& c : r) anchors.push_back(c.anchor);
      }
    for (int s = 0; s < 5; ++s) run_div(sample(cap_ / 2, false), sample(cap_ - cap_ / 2, false));
    for (std::size_t i = 0; i < 4; ++i) {
      CheckRecord r = div[i].done();
      r.anchor = anchors[i];
      out_.push_back(r);
    }

    Tally weak("hopf.weak_associativity", "sum x1 (y (x2 z)) = sum (x1 (y x2)) z", params() + ", monomial triples");
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y)
        for (std::size_t z = 0; z < a.dim(); ++z) {
          if (a.nf_degree(x) + a.nf_degree(y) + a.nf_degree(z) > cap_) continue;
          weak.check(check_weak_assoc(b, a.monomial(x), a.monomial(y), a.monomial(z)), [&] {
            return a.format_monomial(x) + ", " + a.format_monomial(y) + ", " + a.format_monomial(z);
          });
        }
    out_.push_back(weak.done());
  }

  void mainthm() {
    const EnvelopingAlgebra& a = u();
    const Subspace aug = augmentation_ideal(a);
    const std::string seeded = params() + ", seed " + std::to_string(opts_.seed);
    // Leaves room for associators (x, a, b) of the sample inside the cap.
    const std::size_t sample_deg = std::max<std::size_t>(1, (cap_ - 1) / 2);

    auto proper_ok = [&](const IdealClosure& c) {
      return aug.contains(c.subspace) &&
             (c.meets_t > 0 || (c.stabilization_degree && *c.stabilization_degree <= 1));
    };
    auto describe = [&](const Element& x, const IdealClosure& c) {
      std::string s = "gen " + a.format(x) + ": dim " + std::to_string(c.subspace.dim()) +
                      ", meets T " + std::to_string(c.meets_t);
      if (c.stabilization_degree) s += ", stable from " + std::to_string(*c.stabilization_degree);
      return s;
    };

    Tally gens("mainthm.generator_closure", "I = <a>_right <= Aug and I meets T", params());
    for (std::size_t g = 0; g < a.generators(); ++g) {
      const Element x = a.generator(g);
      const IdealClosure c = right_ideal_closure(a, {x});
      gens.check(proper_ok(c), [&] { return describe(x, c); });
    }
    Tally aug_samples("mainthm.augmented_samples", "I = <x>_right <= Aug for eps(x) = 0", seeded);
    for (int s = 0; s < 20; ++s) {
      const Element x = sample(sample_deg, true);
      const IdealClosure c = right_ideal_closure(a, {x});
      aug_samples.check(proper_ok(c), [&] { return describe(x, c); });
    }
    Tally unit_samples("mainthm.unit_samples", "1 in <x>_right for eps(x) != 0", seeded);
    for (int s = 0; s < 20; ++s) {
      const Element x = sample(sample_deg, false);
      const IdealClosure c = right_ideal_closure(a, {x});
      unit_samples.check(c.contains_one, [&] { return describe(x, c); });
    }
    Tally one("mainthm.unit_closure", "<1>_right = U", params());
    {
      const IdealClosure c = right_ideal_closure(a, {a.one()});
      one.check(c.subspace.dim() == a.dim() && c.contains_one, [&] { return describe(a.one(), c); });
    }
    Tally stable("mainthm.augmentation_stable", "Aug U <= Aug", params());
    {
      std::vector<Element> basis;
      for (std::size_t i = 1; i < a.dim(); ++i) basis.push_back(a.monomial(i));
      const IdealClosure c = right_ideal_closure(a, basis);
      stable.check(c.subspace == aug && !c.contains_one,
                   [&] { return "closure dim " + std::to_string(c.subspace.dim()); });
    }
    for (auto* t : {&gens, &aug_samples, &unit_samples, &one, &stable}) out_.push_back(t->done());
  }

  const TripleSystem& t_;
  SuiteOptions opts_;
  std::size_t cap_;
  SampleSource rng_;
  std::optional<EnvelopingAlgebra> u_;
  std::optional<Bialgebra> h_;
  CheckList out_;
};

}  // namespace

SuiteReport run_suite(const std::string& name, const TripleSystem& t, const SuiteOptions& opts) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw PreconditionError("unknown suite \"" + name + "\"");
  }
  Runner r(t, opts);
  r.run(name);
  SuiteReport rep{name, t.name(), r.cap(), opts.seed, r.take()};
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return rep;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["system"] = system;
  doc["N"] = cap;
  doc["seed"] = seed;
  doc["pass"] = pass();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"id", c.id},
                             {"anchor", c.anchor},
                             {"params", c.params},
                             {"pass", c.pass},
                             {"witness", c.witness}});
  }
  return doc.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " on " << system << " (N=" << cap << ", seed " << seed << ")\n";
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.params.empty()) os << " [" << c.params << "]";
    if (!c.witness.empty()) os << ": " << c.witness;
    os << "\n";
    if (!c.pass) ++failed;
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace triplex
