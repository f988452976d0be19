#pragma once

// The free unital nonassociative algebra on d generators, truncated at a
// degree cap: binary-tree monomials, products and the expression syntax.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triplex/exactlin.hpp"

namespace triplex {

inline constexpr std::size_t kDefaultMaxMonomials = 200000;

// Every tree of degree <= cap gets a dense index.  Index 0 is the empty
// product, indices 1..d are the generators, and within a degree trees are
// ordered by (left degree, left index, right index).
class MonomialTable {
 public:
  struct Node {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint16_t degree = 0;
    std::uint16_t generator = 0;  // meaningful for leaves only
  };

  MonomialTable() = default;
  // Throws SizeGuardExceeded if the table would hold more than max_monomials.
  static MonomialTable enumerate(std::size_t generators, std::size_t cap,
                                 std::size_t max_monomials = kDefaultMaxMonomials);

  // Catalan(n-1) * d^n, saturating at SIZE_MAX.
  static std::size_t count_at_degree(std::size_t generators, std::size_t n);

  std::size_t generators() const { return generators_; }
  std::size_t cap() const { return cap_; }
  std::size_t size() const { return nodes_.size(); }

  std::size_t unit() const { return 0; }
  std::size_t leaf(std::size_t g) const { return 1 + g; }
  std::size_t degree(std::size_t i) const { return nodes_[i].degree; }
  bool is_leaf(std::size_t i) const { return nodes_[i].degree == 1; }
  std::size_t generator(std::size_t i) const { return nodes_[i].generator; }
  std::size_t left(std::size_t i) const { return nodes_[i].left; }
  std::size_t right(std::size_t i) const { return nodes_[i].right; }

  // Index of the product tree; the unit is absorbed.  nullopt when the
  // product would exceed the cap.
  std::optional<std::size_t> product(std::size_t l, std::size_t r) const;

  // [begin, end) of the indices of degree n.
  std::pair<std::size_t, std::size_t> degree_range(std::size_t n) const {
    return {offsets_[n], offsets_[n + 1]};
  }

 private:
  std::size_t generators_ = 0;
  std::size_t cap_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::uint64_t, std::uint32_t> pairs_;
};

class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(SparseVector coords) : coords_(std::move(coords)) {}

  const SparseVector& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }

  FreeElement& operator+=(const FreeElement& o) { coords_ += o.coords_; return *this; }
  FreeElement& operator-=(const FreeElement& o) { coords_ -= o.coords_; return *this; }
  FreeElement& operator*=(const Scalar& c) { coords_ *= c; return *this; }
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const Scalar& c, FreeElement a) { return a *= c; }
  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  SparseVector coords_;
};

class FreeAlgebra {
 public:
  FreeAlgebra() = default;
  FreeAlgebra(std::vector<std::string> names, std::size_t cap,
              std::size_t max_monomials = kDefaultMaxMonomials);

  const MonomialTable& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return table_.size(); }
  std::size_t cap() const { return table_.cap(); }

  FreeElement zero() const { return FreeElement(SparseVector(size())); }
  FreeElement one() const { return monomial(table_.unit()); }
  FreeElement generator(std::size_t g) const { return monomial(table_.leaf(g)); }
  FreeElement monomial(std::size_t index, const Scalar& coeff = 1) const;
  // Left-nested: ((g g) g) ...
  FreeElement power(std::size_t g, std::size_t n) const;
  std::size_t power_index(std::size_t g, std::size_t n) const;

  // Bilinear extension of tree grafting; throws DegreeBudgetExceeded.
  FreeElement mul(const FreeElement& x, const FreeElement& y) const;
  // Max degree of the support (0 for the zero element).
  std::size_t degree(const FreeElement& x) const;

  std::string format(const FreeElement& x) const;
  std::string format_monomial(std::size_t index) const;

  // expr   := ["+"|"-"] term (("+"|"-") term)*
  // term   := rational ["*" factor] | factor
  // factor := primary ["*" primary]
  // primary:= generator ["^" nat] | "1" | "(" expr ")"
  FreeElement parse(std::string_view text) const;

 private:
  std::vector<std::string> names_;
  MonomialTable table_;
};

// Formats a signed linear combination given per-term monomial strings, in the
// same style as FreeAlgebra::format ("2*e^2 - 1/2*f + 3").
std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace triplex
