#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "triplex/envelope.hpp"

// A dense, slow quotient of the free algebra on e, f up to degree 3 for S2,
// with its own tree strings and its own elimination.  Only the relators and
// the triple product [e,f,e] = 2e, [e,f,f] = -2f are shared with the library.

namespace triplex::naive {

struct Naive {
  std::vector<std::string> trees;  // fully parenthesized
  std::vector<int> deg;
  std::map<std::string, int> index;
  std::vector<std::vector<Scalar>> rel;  // eliminated rows
  std::vector<int> pivot;

  int add(const std::string& s, int d) {
    index[s] = static_cast<int>(trees.size());
    trees.push_back(s);
    deg.push_back(d);
    return index[s];
  }
  std::string mul(const std::string& a, const std::string& b) const {
    if (a == "1") return b;
    if (b == "1") return a;
    return "(" + a + "*" + b + ")";
  }

  Naive() {
    add("1", 0);
    add("e", 1);
    add("f", 1);
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::string> fresh;
      for (std::size_t i = 1; i < trees.size(); ++i)
        for (std::size_t j = 1; j < trees.size(); ++j)
          if (deg[i] + deg[j] == n) fresh.push_back(mul(trees[i], trees[j]));
      for (auto& s : fresh) add(s, n);
    }
  }

  using Row = std::map<std::string, Scalar>;

  // Triple product constants of S2 in terms of basis letters.
  Row bracket(char a, char b, char c) const {
    Row r;
    if (a == 'e' && b == 'f') r[std::string(1, c)] = c == 'e' ? 2 : -2;
    if (a == 'f' && b == 'e') r[std::string(1, c)] = c == 'e' ? -2 : 2;
    return r;
  }

  std::vector<Row> relators() const {
    std::vector<Row> out;
    const std::string g[2] = {"e", "f"};
    out.push_back({{mul("e", "f"), 1}, {mul("f", "e"), -1}});
    for (auto a : g)
      for (auto b : g)
        for (auto c : g) {
          Row r;
          r[mul(a, mul(b, c))] += 1;
          r[mul(b, mul(a, c))] -= 1;
          for (auto& [k, v] : bracket(a[0], b[0], c[0])) r[k] -= v;
          out.push_back(r);
          // (a,x,y) + (x,a,y) with x = b, y = c
          Row n;
          n[mul(mul(a, b), c)] += 1;
          n[mul(a, mul(b, c))] -= 1;
          n[mul(mul(b, a), c)] += 1;
          n[mul(b, mul(a, c))] -= 1;
          out.push_back(n);
        }
    // two-sided multiples of the degree-2 relator by generators
    const Row base = out[0];
    for (auto m : g) {
      Row l, r;
      for (auto& [k, v] : base) {
        l[mul(m, k)] += v;
        r[mul(k, m)] += v;
      }
      out.push_back(l);
      out.push_back(r);
    }
    return out;
  }

  bool is_rep(int i) const {
    static const std::vector<std::string> reps{"1", "e", "f", "(e*e)", "(e*f)", "(f*f)",
                                               "((e*e)*e)", "((e*e)*f)", "(e*(f*f))", "((f*f)*f)"};
    return std::find(reps.begin(), reps.end(), trees[i]) != reps.end();
  }

  // Columns: non-representatives first, then representatives.
  std::vector<int> order() const {
    std::vector<int> o;
    for (int i = 0; i < static_cast<int>(trees.size()); ++i)
      if (!is_rep(i)) o.push_back(i);
    for (int i = 0; i < static_cast<int>(trees.size()); ++i)
      if (is_rep(i)) o.push_back(i);
    return o;
  }

  std::vector<Scalar> dense(const Row& r) const {
    std::vector<Scalar> v(trees.size());
    for (auto& [k, c] : r) v[index.at(k)] += c;
    return v;
  }

  void reduce_by_rel(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rel.size(); ++r) {
      const Scalar c = v[pivot[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * rel[r][k];
    }
  }

  void eliminate() {
    const std::vector<int> cols = order();
    for (const Row& row : relators()) {
      std::vector<Scalar> v = dense(row);
      reduce_by_rel(v);
      int p = -1;
      for (int c : cols)
        if (v[c] != 0) {
          p = c;
          break;
        }
      if (p < 0) continue;
      const Scalar lead = v[p];
      for (auto& x : v) x /= lead;
      for (auto& r : rel) {
        const Scalar c = r[p];
        if (c != 0)
          for (std::size_t k = 0; k < v.size(); ++k) r[k] -= c * v[k];
      }
      rel.push_back(v);
      pivot.push_back(p);
    }
  }

  std::map<std::string, Scalar> normal_form(const std::string& t) const {
    std::vector<Scalar> v(trees.size());
    v[index.at(t)] = 1;
    reduce_by_rel(v);
    std::map<std::string, Scalar> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        // a leftover non-representative marks a failed reduction
        out[is_rep(static_cast<int>(i)) ? trees[i] : "?" + trees[i]] = v[i];
      }
    return out;
  }
};

// Library representative strings, turned into the naive parenthesization.
inline std::string naive_rep(const Exponent& k) {
  auto pw = [](const char* g, std::size_t n) {
    std::string s = g;
    for (std::size_t i = 1; i < n; ++i) s = "(" + s + "*" + g + ")";
    return s;
  };
  if (k[0] == 0 && k[1] == 0) return "1";
  if (k[1] == 0) return pw("e", k[0]);
  if (k[0] == 0) return pw("f", k[1]);
  return "(" + pw("e", k[0]) + "*" + pw("f", k[1]) + ")";
}


// Compares the library normal form of every degree-3 tree with the naive one;
// returns the trees that disagree.
inline std::vector<std::string> mismatches(const EnvelopingAlgebra& u, const Naive& n) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < n.trees.size(); ++i) {
    if (n.deg[i] != 3) continue;
    // The naive strings use the same grammar the library parses.
    const Element x = u.parse(n.trees[i]);
    std::map<std::string, Scalar> lib;
    for (const auto& [j, c] : x.coords()) lib[naive_rep(u.exponents()[j])] = c;
    if (lib != n.normal_form(n.trees[i])) bad.push_back(n.trees[i]);
  }
  return bad;
}

}  // namespace triplex::naive

