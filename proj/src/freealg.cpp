#include "triplex/freealg.hpp"

#include <cctype>
#include <limits>

namespace triplex {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t pair_key(std::size_t l, std::size_t r) {
  return (static_cast<std::uint64_t>(l) << 32) | static_cast<std::uint64_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// MonomialTable

std::size_t MonomialTable::count_at_degree(std::size_t generators, std::size_t n) {
  if (n == 0) return 1;
  // Catalan(n-1) via C(k+1) = C(k) * 2(2k+1)/(k+2), exact in integers.
  std::size_t catalan = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t num = sat_mul(catalan, 2 * (2 * k + 1));
    if (num == kSaturated) return kSaturated;
    catalan = num / (k + 2);
  }
  std::size_t pow = 1;
  for (std::size_t k = 0; k < n; ++k) pow = sat_mul(pow, generators);
  return sat_mul(catalan, pow);
}

MonomialTable MonomialTable::enumerate(std::size_t generators, std::size_t cap,
                                       std::size_t max_monomials) {
  if (generators == 0) throw PreconditionError("free algebra needs at least one generator");
  std::size_t total = 0;
  for (std::size_t n = 0; n <= cap; ++n) total = sat_add(total, count_at_degree(generators, n));
  if (total > max_monomials || total > std::numeric_limits<std::uint32_t>::max()) {
    throw SizeGuardExceeded("free algebra with " + std::to_string(generators) +
                            " generators up to degree " + std::to_string(cap) +
                            " needs more than " + std::to_string(max_monomials) + " monomials");
  }

  MonomialTable t;
  t.generators_ = generators;
  t.cap_ = cap;
  t.nodes_.reserve(total);
  t.offsets_.push_back(0);
  t.nodes_.push_back(Node{});
  t.offsets_.push_back(1);
  if (cap >= 1) {
    for (std::size_t g = 0; g < generators; ++g) {
      t.nodes_.push_back(Node{0, 0, 1, static_cast<std::uint16_t>(g)});
    }
  }
  t.offsets_.push_back(t.nodes_.size());
  for (std::size_t n = 2; n <= cap; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      auto [lb, le] = std::pair{t.offsets_[k], t.offsets_[k + 1]};
      auto [rb, re] = std::pair{t.offsets_[n - k], t.offsets_[n - k + 1]};
      for (std::size_t l = lb; l < le; ++l) {
        for (std::size_t r = rb; r < re; ++r) {
          t.pairs_.emplace(pair_key(l, r), static_cast<std::uint32_t>(t.nodes_.size()));
          t.nodes_.push_back(Node{static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r),
                                  static_cast<std::uint16_t>(n), 0});
        }
      }
    }
    t.offsets_.push_back(t.nodes_.size());
  }
  // offsets_ has cap + 2 entries; pad for cap == 0 so degree_range(1) is empty.
  while (t.offsets_.size() < cap + 2) t.offsets_.push_back(t.nodes_.size());
  return t;
}

std::optional<std::size_t> MonomialTable::product(std::size_t l, std::size_t r) const {
  if (l == unit()) return r;
  if (r == unit()) return l;
  if (degree(l) + degree(r) > cap_) return std::nullopt;
  return pairs_.at(pair_key(l, r));
}

// ---------------------------------------------------------------------------
// FreeAlgebra

FreeAlgebra::FreeAlgebra(std::vector<std::string> names, std::size_t cap,
                         std::size_t max_monomials)
    : names_(std::move(names)), table_(MonomialTable::enumerate(names_.size(), cap, max_monomials)) {}

FreeElement FreeAlgebra::monomial(std::size_t index, const Scalar& coeff) const {
  return FreeElement(SparseVector::unit(size(), index, coeff));
}

std::size_t FreeAlgebra::power_index(std::size_t g, std::size_t n) const {
  if (n > cap()) {
    throw DegreeBudgetExceeded("power " + std::to_string(n) + " exceeds degree cap " +
                               std::to_string(cap()));
  }
  std::size_t idx = table_.unit();
  for (std::size_t k = 0; k < n; ++k) idx = *table_.product(idx, table_.leaf(g));
  return idx;
}

FreeElement FreeAlgebra::power(std::size_t g, std::size_t n) const {
  return monomial(power_index(g, n));
}

FreeElement FreeAlgebra::mul(const FreeElement& x, const FreeElement& y) const {
  std::vector<SparseVector::Entry> out;
  out.reserve(x.coords().nnz() * y.coords().nnz());
  for (const auto& [i, a] : x.coords()) {
    for (const auto& [j, b] : y.coords()) {
      auto p = table_.product(i, j);
      if (!p) {
        throw DegreeBudgetExceeded("product of degree " +
                                   std::to_string(table_.degree(i) + table_.degree(j)) +
                                   " exceeds cap " + std::to_string(cap()));
      }
      out.emplace_back(*p, a * b);
    }
  }
  return FreeElement(SparseVector(size(), std::move(out)));
}

std::size_t FreeAlgebra::degree(const FreeElement& x) const {
  if (x.is_zero()) return 0;
  return table_.degree(x.coords().entries().back().first);
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

// Generator and exponent when the tree is a left-nested power g^n.
std::optional<std::pair<std::size_t, std::size_t>> as_power(const MonomialTable& t, std::size_t i) {
  std::size_t n = 0;
  while (!t.is_leaf(i)) {
    if (!t.is_leaf(t.right(i))) return std::nullopt;
    std::size_t g = t.generator(t.right(i));
    std::size_t l = t.left(i);
    std::size_t probe = l;
    while (!t.is_leaf(probe)) probe = t.left(probe);
    if (t.generator(probe) != g) return std::nullopt;
    ++n;
    i = l;
  }
  return std::pair{t.generator(i), n + 1};
}

std::string format_tree(const MonomialTable& t, const std::vector<std::string>& names,
                        std::size_t i) {
  if (i == t.unit()) return "1";
  if (t.is_leaf(i)) return names[t.generator(i)];
  if (auto p = as_power(t, i)) return names[p->first] + "^" + std::to_string(p->second);
  auto wrap = [&](std::size_t c) {
    std::string s = format_tree(t, names, c);
    return (t.is_leaf(c) || as_power(t, c)) ? s : "(" + s + ")";
  };
  return wrap(t.left(i)) + "*" + wrap(t.right(i));
}

}  // namespace

std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono == "1") {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string FreeAlgebra::format_monomial(std::size_t index) const {
  return format_tree(table_, names_, index);
}

std::string FreeAlgebra::format(const FreeElement& x) const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [i, c] : x.coords()) terms.emplace_back(c, format_monomial(i));
  return format_terms(terms);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
    out.push_back({k, std::string(1, s[i]), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const FreeAlgebra& alg, std::string_view text) : alg_(alg), toks_(tokenize(text)) {}

  FreeElement run() {
    FreeElement x = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return x;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }

  FreeElement expr() {
    Scalar sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      if (next().kind == Tok::Minus) sign = -1;
    }
    FreeElement acc = sign * term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      FreeElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  FreeElement term() {
    if (peek().kind == Tok::Number) {
      const bool unit_literal =
          peek().text == "1" && peek(1).kind != Tok::Slash && peek(1).kind != Tok::Star;
      if (!unit_literal) {
        Scalar coeff = rational();
        if (peek().kind == Tok::Star) {
          next();
          return coeff * factor();
        }
        return coeff * alg_.one();
      }
    }
    return factor();
  }

  Scalar rational() {
    std::string text = next().text;
    if (peek().kind == Tok::Slash) {
      next();
      if (peek().kind != Tok::Number) fail("expected positive integer denominator");
      text += "/" + next().text;
    }
    Scalar q = parse_scalar(text);
    if (q.get_den() == 0) fail("zero denominator");
    return q;
  }

  FreeElement factor() {
    FreeElement x = primary();
    if (peek().kind != Tok::Star) return x;
    next();
    FreeElement y = primary();
    if (peek().kind == Tok::Star) {
      fail("ambiguous nonassociative product: parenthesize products of three or more factors");
    }
    return alg_.mul(x, y);
  }

  FreeElement primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        next();
        std::size_t g = generator_index(t);
        if (peek().kind == Tok::Caret) {
          next();
          if (peek().kind != Tok::Number) fail("expected exponent");
          if (peek().text.size() > 6) fail("exponent too large");
          std::size_t n = std::stoul(next().text);
          return alg_.power(g, n);
        }
        return alg_.generator(g);
      }
      case Tok::Number:
        if (t.text != "1") fail("coefficient must precede the product");
        next();
        if (peek().kind == Tok::Caret) fail("power of a non-generator");
        return alg_.one();
      case Tok::LParen: {
        next();
        FreeElement x = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        if (peek().kind == Tok::Caret) fail("power of a non-generator");
        return x;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::size_t generator_index(const Token& t) const {
    const auto& names = alg_.names();
    for (std::size_t g = 0; g < names.size(); ++g)
      if (names[g] == t.text) return g;
    throw ParseError("unknown generator '" + t.text + "'", t.pos);
  }

  const FreeAlgebra& alg_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeElement FreeAlgebra::parse(std::string_view text) const { return Parser(*this, text).run(); }

}  // namespace triplex
