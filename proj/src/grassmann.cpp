#include "stdid/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stdid/errors.hpp"

namespace stdid {

int monomial_product_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  // Moving each generator of b left past the larger generators of a.
  unsigned crossings = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctz(rest));
    const Mask above = bit + 1 >= 32 ? Mask{0} : ~((Mask{1} << (bit + 1)) - 1);
    crossings += mask_degree(a & above);
  }
  return (crossings & 1U) != 0 ? -1 : 1;
}

// ---------------------------------------------------------------------------
// GrassmannElement

GrassmannElement::GrassmannElement(unsigned generators) : generators_(generators) {
  if (generators > kMaxGenerators) {
    throw DimensionError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
}

GrassmannElement GrassmannElement::scalar(unsigned generators, const Integer& value) {
  GrassmannElement x(generators);
  x.add_term(0, value);
  return x;
}

GrassmannElement GrassmannElement::generator(unsigned generators, unsigned index) {
  if (index < 1 || index > generators) {
    throw DimensionError("generator v" + std::to_string(index) + " outside E^" + std::to_string(generators));
  }
  return monomial(generators, Mask{1} << (index - 1));
}

GrassmannElement GrassmannElement::monomial(unsigned generators, Mask mask, const Integer& coefficient) {
  GrassmannElement x(generators);
  if (generators < kMaxGenerators && (mask >> generators) != 0) {
    throw DimensionError("monomial uses a generator outside E^" + std::to_string(generators));
  }
  x.add_term(mask, coefficient);
  return x;
}

Integer GrassmannElement::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Integer{0} : it->second;
}

std::optional<unsigned> GrassmannElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned degree = mask_degree(terms_.begin()->first);
  for (const auto& [mask, coefficient] : terms_) {
    if (mask_degree(mask) != degree) return std::nullopt;
  }
  return degree;
}

void GrassmannElement::add_term(Mask mask, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void GrassmannElement::require_same(const GrassmannElement& other) const {
  if (generators_ != other.generators_) {
    throw DimensionError("mismatched generator counts: E^" + std::to_string(generators_) + " vs E^" +
                         std::to_string(other.generators_));
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  require_same(other);
  for (const auto& [mask, coefficient] : other.terms_) add_term(mask, coefficient);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  require_same(other);
  for (const auto& [mask, coefficient] : other.terms_) add_term(mask, -coefficient);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Integer& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coefficient] : terms_) coefficient *= factor;
  return *this;
}

GrassmannElement operator+(GrassmannElement lhs, const GrassmannElement& rhs) { return lhs += rhs; }
GrassmannElement operator-(GrassmannElement lhs, const GrassmannElement& rhs) { return lhs -= rhs; }
GrassmannElement operator-(GrassmannElement value) { return value *= -1; }
GrassmannElement operator*(const Integer& factor, GrassmannElement value) { return value *= factor; }

GrassmannElement ext_mul(const GrassmannElement& x, const GrassmannElement& y) {
  if (x.generators() != y.generators()) {
    throw DimensionError("ext_mul: mismatched generator counts");
  }
  GrassmannElement product(x.generators());
  for (const auto& [xm, xc] : x.terms()) {
    for (const auto& [ym, yc] : y.terms()) {
      const int sign = monomial_product_sign(xm, ym);
      if (sign == 0) continue;
      Integer c = xc * yc;
      if (sign < 0) c = -c;
      product.add_term(xm | ym, c);
    }
  }
  return product;
}

namespace {

std::string monomial_name(Mask mask) {
  std::string name;
  for (Mask rest = mask; rest != 0; rest &= rest - 1) {
    name += 'v';
    name += std::to_string(__builtin_ctz(rest) + 1);
  }
  return name;
}

// Degree first, then lexicographic on the ascending index list.
bool render_order(Mask a, Mask b) {
  const unsigned da = mask_degree(a);
  const unsigned db = mask_degree(b);
  if (da != db) return da < db;
  for (Mask x = a, y = b; x != 0 && y != 0; x &= x - 1, y &= y - 1) {
    const int ia = __builtin_ctz(x);
    const int ib = __builtin_ctz(y);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

std::string render(const GrassmannElement& x) {
  if (x.is_zero()) return "0";
  std::vector<Mask> order;
  order.reserve(x.terms().size());
  for (const auto& term : x.terms()) order.push_back(term.first);
  std::sort(order.begin(), order.end(), render_order);

  std::string out;
  for (const Mask mask : order) {
    const Integer& c = x.terms().at(mask);
    out += c < 0 ? '-' : '+';
    const Integer magnitude = abs(c);
    if (mask == 0) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += monomial_name(mask);
    } else {
      out += magnitude.str() + "*" + monomial_name(mask);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GrassmannMatrix

GrassmannMatrix::GrassmannMatrix(std::size_t n, unsigned generators)
    : n_(n), generators_(generators), entries_(n * n, GrassmannElement(generators)) {
  if (n == 0) throw DimensionError("matrix size must be at least 1");
}

GrassmannMatrix GrassmannMatrix::identity(std::size_t n, unsigned generators) {
  GrassmannMatrix x(n, generators);
  for (std::size_t i = 1; i <= n; ++i) x(i, i) = GrassmannElement::scalar(generators, 1);
  return x;
}

GrassmannMatrix GrassmannMatrix::unit(std::size_t n, unsigned generators, std::size_t alpha, std::size_t beta,
                                      const GrassmannElement& coefficient) {
  if (coefficient.generators() != generators) throw DimensionError("unit: coefficient in a different E^m");
  GrassmannMatrix x(n, generators);
  x(alpha, beta) = coefficient;
  return x;
}

GrassmannMatrix GrassmannMatrix::unit(std::size_t n, unsigned generators, std::size_t alpha, std::size_t beta) {
  return unit(n, generators, alpha, beta, GrassmannElement::scalar(generators, 1));
}

std::size_t GrassmannMatrix::index(std::size_t alpha, std::size_t beta) const {
  if (alpha < 1 || alpha > n_ || beta < 1 || beta > n_) {
    throw DimensionError("matrix index (" + std::to_string(alpha) + "," + std::to_string(beta) + ") outside " +
                         std::to_string(n_) + "x" + std::to_string(n_));
  }
  return (alpha - 1) * n_ + (beta - 1);
}

const GrassmannElement& GrassmannMatrix::operator()(std::size_t alpha, std::size_t beta) const {
  return entries_[index(alpha, beta)];
}

GrassmannElement& GrassmannMatrix::operator()(std::size_t alpha, std::size_t beta) {
  return entries_[index(alpha, beta)];
}

bool GrassmannMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const GrassmannElement& e) { return e.is_zero(); });
}

GrassmannMatrix& GrassmannMatrix::operator+=(const GrassmannMatrix& other) {
  if (n_ != other.n_ || generators_ != other.generators_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

GrassmannMatrix& GrassmannMatrix::operator-=(const GrassmannMatrix& other) {
  if (n_ != other.n_ || generators_ != other.generators_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

GrassmannMatrix operator+(GrassmannMatrix lhs, const GrassmannMatrix& rhs) { return lhs += rhs; }
GrassmannMatrix operator-(GrassmannMatrix lhs, const GrassmannMatrix& rhs) { return lhs -= rhs; }

GrassmannMatrix operator*(const GrassmannElement& factor, const GrassmannMatrix& x) {
  GrassmannMatrix out(x.size(), x.generators());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= x.size(); ++j) out(i, j) = ext_mul(factor, x(i, j));
  }
  return out;
}

GrassmannMatrix mat_mul(const GrassmannMatrix& a, const GrassmannMatrix& b) {
  if (a.size() != b.size() || a.generators() != b.generators()) {
    throw DimensionError("mat_mul: shape mismatch");
  }
  const std::size_t n = a.size();
  GrassmannMatrix out(n, a.generators());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t l = 1; l <= n; ++l) {
      const GrassmannElement& left = a(i, l);
      if (left.is_zero()) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        const GrassmannElement& right = b(l, j);
        if (right.is_zero()) continue;
        out(i, j) += ext_mul(left, right);
      }
    }
  }
  return out;
}

std::string render(const GrassmannMatrix& x) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    out << '[';
    for (std::size_t j = 1; j <= x.size(); ++j) {
      if (j > 1) out << ", ";
      out << render(x(i, j));
    }
    out << "]\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Standard polynomial

namespace {

struct StandardPolynomialWalk {
  std::span<const GrassmannMatrix> xs;
  std::vector<bool> used;
  GrassmannMatrix total;

  // prefix is the product of the chosen factors, sign the parity of the
  // partial permutation.
  void extend(const GrassmannMatrix& prefix, std::size_t depth, int sign) {
    if (depth == xs.size()) {
      if (sign > 0) {
        total += prefix;
      } else {
        total -= prefix;
      }
      return;
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (used[j]) continue;
      // Inversions added by placing j after every already-chosen index.
      std::size_t larger_used = 0;
      for (std::size_t i = j + 1; i < xs.size(); ++i) larger_used += used[i] ? 1 : 0;
      GrassmannMatrix next = mat_mul(prefix, xs[j]);
      if (next.is_zero()) continue;
      used[j] = true;
      extend(next, depth + 1, (larger_used & 1U) != 0 ? -sign : sign);
      used[j] = false;
    }
  }
};

}  // namespace

GrassmannMatrix standard_polynomial(std::span<const GrassmannMatrix> xs, const StandardPolynomialOptions& options) {
  if (xs.empty()) throw std::invalid_argument("standard_polynomial: need at least one argument");
  const std::size_t n = xs.front().size();
  const unsigned m = xs.front().generators();
  for (const auto& x : xs) {
    if (x.size() != n || x.generators() != m) throw DimensionError("standard_polynomial: arguments differ in shape");
  }
  if (xs.size() > options.max_arity && !options.override_cap) {
    throw BudgetExceeded("standard_polynomial: arity " + std::to_string(xs.size()) + " exceeds cap " +
                         std::to_string(options.max_arity) + " (override required)");
  }
  StandardPolynomialWalk walk{xs, std::vector<bool>(xs.size(), false), GrassmannMatrix(n, m)};
  walk.extend(GrassmannMatrix::identity(n, m), 0, 1);
  return walk.total;
}

// ---------------------------------------------------------------------------
// Basis tuples

std::optional<BasisElement> as_basis_element(const GrassmannMatrix& x) {
  std::optional<BasisElement> found;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= x.size(); ++j) {
      const GrassmannElement& e = x(i, j);
      if (e.is_zero()) continue;
      if (found || e.terms().size() != 1) return std::nullopt;
      const auto& [mask, coefficient] = *e.terms().begin();
      if (coefficient != 1 && coefficient != -1) return std::nullopt;
      found = BasisElement{coefficient > 0 ? 1 : -1, mask, i, j};
    }
  }
  return found;
}

SimplifiedTuple simplify_basis_tuple(std::span<const GrassmannMatrix> xs) {
  if (xs.empty()) throw std::invalid_argument("simplify_basis_tuple: empty tuple");
  const std::size_t n = xs.front().size();
  const unsigned m = xs.front().generators();

  std::vector<BasisElement> basis;
  basis.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].size() != n || xs[i].generators() != m) throw DimensionError("simplify_basis_tuple: shape mismatch");
    auto b = as_basis_element(xs[i]);
    if (!b) throw std::invalid_argument("simplify_basis_tuple: argument " + std::to_string(i + 1) + " is not a basis element");
    basis.push_back(*b);
  }

  SimplifiedTuple result;
  result.monomial = GrassmannElement::scalar(m, 1);

  Mask seen = 0;
  for (const auto& b : basis) {
    if ((seen & b.monomial) != 0) {
      result.zero = true;
      result.monomial = GrassmannElement(m);
      return result;
    }
    seen |= b.monomial;
  }

  // An odd monomial v_{i1} v_{i2}...v_{id} keeps v_{i1}; the even remainder is
  // central and moves to the common prefix.
  Integer sign = 1;
  std::vector<std::optional<unsigned>> kept(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    sign *= b.sign;
    Mask central = b.monomial;
    if (mask_degree(b.monomial) % 2 == 1) {
      const unsigned first = static_cast<unsigned>(__builtin_ctz(b.monomial));
      kept[i] = first + 1;
      central &= central - 1;
    }
    result.monomial = ext_mul(result.monomial, GrassmannElement::monomial(m, central));
  }
  // Fold the monomial's sign into `sign` so the prefix has coefficient +1.
  const auto& [prefix_mask, prefix_coefficient] = *result.monomial.terms().begin();
  sign *= prefix_coefficient;
  result.monomial = GrassmannElement::monomial(m, prefix_mask);
  result.sign = sign > 0 ? 1 : -1;

  std::vector<unsigned> originals;
  for (const auto& k : kept) {
    if (k) originals.push_back(*k);
  }
  std::sort(originals.begin(), originals.end());
  result.relabel = originals;

  result.simplified.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (kept[i]) {
      const auto pos = std::lower_bound(originals.begin(), originals.end(), *kept[i]) - originals.begin();
      const unsigned renamed = static_cast<unsigned>(pos) + 1;
      result.simplified.push_back(
          GrassmannMatrix::unit(n, m, b.alpha, b.beta, GrassmannElement::generator(m, renamed)));
    } else {
      result.simplified.push_back(GrassmannMatrix::unit(n, m, b.alpha, b.beta));
    }
  }
  return result;
}

GrassmannElement substitute_generators(const GrassmannElement& x, std::span<const unsigned> relabel) {
  const unsigned m = x.generators();
  GrassmannElement out(m);
  for (const auto& [mask, coefficient] : x.terms()) {
    GrassmannElement image = GrassmannElement::scalar(m, coefficient);
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const unsigned index = static_cast<unsigned>(__builtin_ctz(rest)) + 1;
      const unsigned target = index <= relabel.size() ? relabel[index - 1] : index;
      image = ext_mul(image, GrassmannElement::generator(m, target));
    }
    out += image;
  }
  return out;
}

GrassmannMatrix substitute_generators(const GrassmannMatrix& x, std::span<const unsigned> relabel) {
  GrassmannMatrix out(x.size(), x.generators());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= x.size(); ++j) out(i, j) = substitute_generators(x(i, j), relabel);
  }
  return out;
}

}  // namespace stdid
