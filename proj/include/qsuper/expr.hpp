#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsuper/pbw.hpp"

namespace qsuper {

struct ParseError : std::runtime_error {
  enum class Kind { Syntax, IndexOutOfShape, NegativeDividedPower };
  ParseError(Kind k, size_t off, const std::string& msg);
  Kind kind;
  size_t offset;
  const char* kind_name() const;
};

struct Expr {
  enum class Kind { Sum, Product, Quotient, Power, DividedPower, Scalar, Gen };
  Kind kind = Kind::Scalar;
  std::vector<std::shared_ptr<const Expr>> kids;
  std::vector<int> signs;  // Sum: sign of each summand
  long n = 0;              // Power / DividedPower exponent
  RatFunc scalar;          // Scalar literal
  std::string gen;         // Gen: E, F, K, Kinv, Ka, Kb
  std::vector<long> idx;   // Gen indices; Kb holds i, c, t
  size_t offset = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor (('*'|'/')? factor)*
// factor := atom ('^' int | '^(' nat ')')?
// atom := E[i,j] | F[i,j] | K[i] | Kinv[i] | Ka[i] | Kb[i;c;t] | q | nat | '(' expr ')'
// Division is only by scalar-valued factors.
ExprPtr parse(const std::string& src, const Shape& shape);

Element evaluate(Algebra& A, const Expr& e);
Element evaluate(Algebra& A, const std::string& src);

nlohmann::json ast_to_json(const Expr& e);

std::string print_monomial(const RootData& rd, const Monomial& m);
std::string print_coefficient_factor(const RatFunc& c);
std::string print_canonical(const RootData& rd, const Element& e);

nlohmann::json monomial_to_json(const RootData& rd, const Monomial& m);
Monomial monomial_from_json(const RootData& rd, const nlohmann::json& j);
nlohmann::json element_to_json(const RootData& rd, const Element& e);
Element element_from_json(const RootData& rd, const nlohmann::json& j);

// Parses the text form produced by RatFunc::to_string.
RatFunc parse_scalar(const std::string& src);

}  // namespace qsuper
