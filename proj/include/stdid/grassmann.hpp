#ifndef STDID_GRASSMANN_HPP
#define STDID_GRASSMANN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stdid/integer.hpp"

namespace stdid {

// A square-free monomial v_{i_1}...v_{i_d} (i_1 < ... < i_d) stored as a bit
// set: generator v_i is bit i-1.
using Mask = std::uint32_t;

inline constexpr unsigned kMaxGenerators = 32;

inline unsigned mask_degree(Mask mask) { return static_cast<unsigned>(__builtin_popcount(mask)); }

/// Sign of v_a * v_b relative to the sorted monomial v_{a|b}: +1 or -1, or 0
/// when the two monomials share a generator.
int monomial_product_sign(Mask a, Mask b);

/// Element of the m-generated Grassmann algebra over the integers.
///
/// Terms with zero coefficient are never stored, so two elements are equal
/// exactly when their term maps are equal.
class GrassmannElement {
 public:
  using Terms = std::map<Mask, Integer>;

  explicit GrassmannElement(unsigned generators = 0);

  static GrassmannElement scalar(unsigned generators, const Integer& value);
  /// v_index, with index in [1, generators].
  static GrassmannElement generator(unsigned generators, unsigned index);
  static GrassmannElement monomial(unsigned generators, Mask mask, const Integer& coefficient = 1);

  unsigned generators() const { return generators_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(Mask mask) const;

  /// Common degree of all terms, or nullopt for zero / inhomogeneous elements.
  std::optional<unsigned> homogeneous_degree() const;

  /// Adds coefficient * monomial in place.
  void add_term(Mask mask, const Integer& coefficient);

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(const Integer& factor);

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  void require_same(const GrassmannElement& other) const;

  unsigned generators_;
  Terms terms_;
};

GrassmannElement operator+(GrassmannElement lhs, const GrassmannElement& rhs);
GrassmannElement operator-(GrassmannElement lhs, const GrassmannElement& rhs);
GrassmannElement operator-(GrassmannElement value);
GrassmannElement operator*(const Integer& factor, GrassmannElement value);

/// Product in E^m. Throws DimensionError when the generator counts differ.
GrassmannElement ext_mul(const GrassmannElement& x, const GrassmannElement& y);
inline GrassmannElement operator*(const GrassmannElement& x, const GrassmannElement& y) { return ext_mul(x, y); }

/// Signed monomial sum, e.g. "+1+v1-2*v1v2"; zero renders as "0".
std::string render(const GrassmannElement& x);

/// n x n matrix over E^m. Entries are addressed 1-based, as E_{alpha,beta}.
class GrassmannMatrix {
 public:
  GrassmannMatrix(std::size_t n, unsigned generators);

  static GrassmannMatrix identity(std::size_t n, unsigned generators);
  /// coefficient * E_{alpha,beta}.
  static GrassmannMatrix unit(std::size_t n, unsigned generators, std::size_t alpha, std::size_t beta,
                              const GrassmannElement& coefficient);
  static GrassmannMatrix unit(std::size_t n, unsigned generators, std::size_t alpha, std::size_t beta);

  std::size_t size() const { return n_; }
  unsigned generators() const { return generators_; }

  const GrassmannElement& operator()(std::size_t alpha, std::size_t beta) const;
  GrassmannElement& operator()(std::size_t alpha, std::size_t beta);

  bool is_zero() const;

  GrassmannMatrix& operator+=(const GrassmannMatrix& other);
  GrassmannMatrix& operator-=(const GrassmannMatrix& other);

  friend bool operator==(const GrassmannMatrix&, const GrassmannMatrix&) = default;

 private:
  std::size_t index(std::size_t alpha, std::size_t beta) const;

  std::size_t n_;
  unsigned generators_;
  std::vector<GrassmannElement> entries_;
};

GrassmannMatrix operator+(GrassmannMatrix lhs, const GrassmannMatrix& rhs);
GrassmannMatrix operator-(GrassmannMatrix lhs, const GrassmannMatrix& rhs);
/// Left multiplication of every entry by a scalar element.
GrassmannMatrix operator*(const GrassmannElement& factor, const GrassmannMatrix& x);

/// Ordinary matrix product with ext_mul entries. Throws DimensionError on
/// shape or generator mismatch.
GrassmannMatrix mat_mul(const GrassmannMatrix& a, const GrassmannMatrix& b);
inline GrassmannMatrix operator*(const GrassmannMatrix& a, const GrassmannMatrix& b) { return mat_mul(a, b); }

/// Row-major rendering, one "[e11, e12, ...]" line per row.
std::string render(const GrassmannMatrix& x);

struct StandardPolynomialOptions {
  std::size_t max_arity = 9;
  /// Evaluate even when the arity exceeds max_arity.
  bool override_cap = false;
};

/// s_k(x_1, ..., x_k) = sum over permutations pi of sgn(pi) x_pi(1) ... x_pi(k).
///
/// Prefix products are shared across permutations and a vanishing prefix
/// prunes all of its completions. Throws DimensionError on shape mismatch and
/// BudgetExceeded when k exceeds the cap without override.
GrassmannMatrix standard_polynomial(std::span<const GrassmannMatrix> xs,
                                    const StandardPolynomialOptions& options = {});

/// c * v_{monomial} * E_{alpha,beta} with c = +-1.
struct BasisElement {
  int sign = 1;
  Mask monomial = 0;
  std::size_t alpha = 1;
  std::size_t beta = 1;
};

/// Decomposes a matrix with a single nonzero entry whose value is +-1 times a
/// monomial; nullopt for anything else.
std::optional<BasisElement> as_basis_element(const GrassmannMatrix& x);

struct SimplifiedTuple {
  /// Two inputs share a generator, so s_k vanishes identically.
  bool zero = false;
  int sign = 1;
  /// Central factor pulled out of every summand, coefficient +1.
  GrassmannElement monomial;
  /// Each entry is E_{ab} or v_i E_{ab}; the v_i used are exactly v_1..v_l.
  std::vector<GrassmannMatrix> simplified;
  /// relabel[i - 1] is the original generator renamed to v_i.
  std::vector<unsigned> relabel;
};

/// Reduces a tuple of standard basis elements of M_n E^m to a simplified
/// tuple. With subst the generator renaming given by `relabel`:
///   s_k(xs) = sign * monomial * subst(s_k(simplified)).
/// Throws std::invalid_argument when an input is not a basis element.
SimplifiedTuple simplify_basis_tuple(std::span<const GrassmannMatrix> xs);

/// Applies the generator renaming v_i -> v_{relabel[i-1]} (an algebra
/// homomorphism).
GrassmannElement substitute_generators(const GrassmannElement& x, std::span<const unsigned> relabel);
GrassmannMatrix substitute_generators(const GrassmannMatrix& x, std::span<const unsigned> relabel);

}  // namespace stdid

#endif  // STDID_GRASSMANN_HPP
