#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spectra/monomial.hpp"
#include "spectra/poset.hpp"
#include "spectra/table_ring.hpp"

namespace spectra {

class ParseError : public Error {
public:
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

class RingExpr;

struct ZmodExpr {
  int n;
};
struct GFExpr {
  int p;
};
struct ProductExpr {
  std::vector<RingExpr> factors;  // >= 2, none itself a product
};
struct QuotientExpr {
  std::vector<RingExpr> base;  // exactly one; vector for layout only
  std::vector<std::string> gens;  // canonical element literals of the base
};
struct MonomialRingExpr {
  int characteristic;
  std::vector<std::string> vars;
  std::vector<Monomial> monomials;
};
struct PosetLiteralExpr {
  std::vector<std::string> points;  // in order of first appearance
  std::vector<std::pair<int, int>> edges;
};

/// Parsed ring/poset expression. Grammar, whitespace-insensitive:
///   Z/12   GF(5)   Z/4 x Z/3   Z/12 / (4)   F2[x,y]/(x^3, x^2*y)
///   poset{a<b, a<c}
/// Products are left-associative and flattened; a quotient binds to the
/// nearest preceding primary.
class RingExpr {
public:
  using Node = std::variant<ZmodExpr, GFExpr, ProductExpr, QuotientExpr,
                            MonomialRingExpr, PosetLiteralExpr>;

  RingExpr() = default;
  explicit RingExpr(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

  const Node& node() const { return *node_; }
  bool operator==(const RingExpr& other) const;

private:
  std::shared_ptr<const Node> node_;
};

RingExpr parse(const std::string& input);
std::string pretty_print(const RingExpr& expr);

/// What an expression builds into.
using BuiltObject = std::variant<RingPtr, MonoRingPtr, SpecPoset>;
BuiltObject build(const RingExpr& expr);

/// Convenience: the table ring an expression denotes, or an error if it
/// denotes a monomial ring or poset instead.
RingPtr build_table_ring(const RingExpr& expr);

}  // namespace spectra
