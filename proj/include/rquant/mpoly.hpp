#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rquant/rat.hpp"

namespace rquant {

using Exponents = std::vector<std::uint32_t>;
using VarList = std::vector<std::string>;

/// Graded lexicographic order: total degree first, then lexicographic on the
/// declared variable order. Exponent vectors must have equal length.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);

/// Sparse multivariate polynomial over Q in named variables.
///
/// The variable list is shared between copies. Binary operations align
/// operands by the union of their variable names, so polynomials built over
/// different lists combine freely; equality is mathematical (variables with
/// zero exponent everywhere do not matter). No zero coefficient is stored.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rat, GrlexLess>;

  MPoly();
  MPoly(const Rat& c);  // NOLINT: constants convert implicitly
  MPoly(long c);        // NOLINT
  MPoly(VarList vars, Terms terms);
  MPoly(std::shared_ptr<const VarList> vars, Terms terms);

  static MPoly variable(const std::string& name);
  static MPoly monomial(const VarList& vars, Exponents exps, const Rat& c = 1);

  const VarList& vars() const { return *vars_; }
  const std::shared_ptr<const VarList>& vars_ptr() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  /// Coefficient of the monomial given by name -> exponent (absent = 0).
  Rat coeff(const std::map<std::string, std::uint32_t>& mono) const;

  /// Highest total degree, -1 for zero.
  int degree() const;
  std::uint32_t degree_in(std::string_view var) const;
  /// Names of variables that actually occur with positive exponent.
  std::vector<std::string> support() const;
  bool depends_on(std::string_view var) const;

  /// Same polynomial re-expressed over `target`, which must contain every
  /// variable in support().
  MPoly aligned(const std::shared_ptr<const VarList>& target) const;
  MPoly aligned(const VarList& target) const;

  MPoly derivative(std::string_view var) const;
  /// Renames variables; names not in the map are kept.
  MPoly renamed(const std::map<std::string, std::string>& names) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= Rat(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= Rat(c); }

  bool operator==(const MPoly& o) const;

  /// e.g. "x_1^2*x_2 - 1/2*x_1 + 3".
  std::string to_string() const;

 private:
  std::shared_ptr<const VarList> vars_;
  Terms terms_;
};

/// Union of two variable lists: `a` followed by the names of `b` not in `a`.
/// Returns one of the inputs unchanged when it already covers the other.
std::shared_ptr<const VarList> union_vars(const std::shared_ptr<const VarList>& a,
                                          const std::shared_ptr<const VarList>& b);

/// Kernels used by MPoly::operator*. Both operands must share the variable
/// list. The OpenMP path splits the left operand's terms into chunks and
/// merges the partial products; exact arithmetic makes it bit-identical to
/// the serial reference.
namespace kernels {
MPoly::Terms mul_serial(const MPoly::Terms& a, const MPoly::Terms& b);
MPoly::Terms mul_parallel(const MPoly::Terms& a, const MPoly::Terms& b);
/// Work size (|a|*|b|) above which operator* uses mul_parallel.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t n);
}  // namespace kernels

}  // namespace rquant
