#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chargenus/coeff_y.hpp"
#include "chargenus/rational.hpp"

namespace chargenus {

/// Exponent vector over the generators of a ring.
using Monomial = std::vector<int>;

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Element of a GradedRing with CoeffY coefficients, stored densely over the
/// owner's monomial basis.
class RingElement {
 public:
  RingElement() = default;
  /// The zero element of `ring`.
  explicit RingElement(RingPtr ring);

  static RingElement constant(RingPtr ring, const CoeffY& c);
  static RingElement one(RingPtr ring) { return constant(std::move(ring), CoeffY(1)); }
  /// The degree-one generator with index `index`.
  static RingElement generator(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  const std::vector<CoeffY>& coefficients() const { return coeffs_; }
  const CoeffY& coefficient(std::size_t basis_index) const { return coeffs_.at(basis_index); }
  void set_coefficient(std::size_t basis_index, CoeffY c) { coeffs_.at(basis_index) = std::move(c); }

  bool is_zero() const;
  CoeffY constant_term() const;
  /// The homogeneous part of (cohomological) degree `degree`.
  RingElement component(int degree) const;
  /// Largest degree carrying a nonzero coefficient; -1 for zero.
  int top_nonzero_degree() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const CoeffY& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const CoeffY& c) { return a *= c; }
  friend RingElement operator*(const CoeffY& c, RingElement a) { return a *= c; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement pow(int exponent) const;

  /// "deg0: 1; deg1: (1-y)*h" with generator names from the owner ring.
  std::string str() const;

 private:
  void check_same_ring(const RingElement& o) const;

  RingPtr ring_;
  std::vector<CoeffY> coeffs_;
};

/// How a ring was built; determines relations and integration data.
struct ProjectiveSpaceKind {
  int n = 0;
};
struct ProductKind {
  RingPtr left;
  RingPtr right;
};
struct ProjBundleKind {
  RingPtr base;
  std::vector<RingElement> offsets;  ///< first Chern classes of the line summands
};
using RelationKind = std::variant<ProjectiveSpaceKind, ProductKind, ProjBundleKind>;

/// Graded commutative Q-algebra presented as a tower of monic relations.
///
/// Every generator has degree 1. Generator i satisfies x_i^{d_i} = r_i where
/// r_i involves only x_0..x_i and has x_i-degree below d_i, so monomials with
/// e_i < d_i form a basis. The unique top-degree basis monomial is the point
/// class. All data, including the basis multiplication table, is computed at
/// construction and is immutable afterwards.
class GradedRing {
 public:
  using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
  using Relation = std::map<Monomial, Rational>;

  GradedRing(std::vector<std::string> generator_names, std::vector<int> bounds,
             std::vector<Relation> relations, RelationKind kind);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<int>& bounds() const { return bounds_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const RelationKind& kind() const { return kind_; }

  std::size_t basis_size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  int basis_degree(std::size_t index) const { return basis_degree_[index]; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  int top_degree() const { return top_degree_; }
  std::size_t point_index() const { return point_index_; }

  /// Normal form of basis[i] * basis[j].
  const SparseVector& multiply_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
  /// Normal form of an arbitrary monomial.
  SparseVector reduce(const Monomial& m) const;

  std::string monomial_str(std::size_t basis_index) const;

 private:
  SparseVector reduce_cached(const Monomial& m, std::map<Monomial, SparseVector>& cache) const;

  std::vector<std::string> names_;
  std::vector<int> bounds_;
  std::vector<Relation> relations_;
  RelationKind kind_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<int> basis_degree_;
  std::vector<std::vector<SparseVector>> table_;
  int top_degree_ = 0;
  std::size_t point_index_ = 0;
};

/// Embeds an element of `from` into `to`, mapping generator i of `from` to
/// generator i + offset of `to`. Valid when `to` was built over `from`.
RingElement embed(const RingElement& a, const RingPtr& to, std::size_t offset);

/// A smooth complete catalog variety with its Chow ring and tangent Chern class.
struct SmoothVariety {
  std::string name;
  RingPtr ring;
  int dimension = 0;
  RingElement tangent_chern;  ///< 1 + c_1 + ... + c_d
};

/// P^n with h^{n+1} = 0 and c(T) = (1+h)^{n+1}. P^0 has no generators.
SmoothVariety ring_projective(int n);

/// X x Y with c(T) = c(TX) c(TY).
SmoothVariety ring_product(const SmoothVariety& x, const SmoothVariety& y);

/// P(L_0 + ... + L_r) over X with c_1(L_i) = offsets[i] (degree-one classes
/// of X). Adjoins xi with prod(xi + m_i) = 0; c(T) = c(TX) prod(1 + xi + m_i).
SmoothVariety ring_proj_bundle(const SmoothVariety& x, const std::vector<RingElement>& offsets);

/// Coefficient of the point class. Throws DomainError if `a` lives elsewhere.
CoeffY integrate(const SmoothVariety& x, const RingElement& a);

/// pi_* for a projective bundle: the coefficient of xi^r in the normal form.
RingElement pushforward_proj_bundle(const SmoothVariety& bundle, const RingElement& a);

/// Pullback from the base of a projective bundle.
RingElement pullback_from_base(const SmoothVariety& bundle, const RingElement& b);
/// Pullbacks along the two projections of a product.
RingElement pullback_left(const SmoothVariety& product, const RingElement& a);
RingElement pullback_right(const SmoothVariety& product, const RingElement& b);

/// The degree-one generators, in order (h for P^n, base classes then xi for bundles).
std::vector<RingElement> hyperplane_classes(const SmoothVariety& x);

}  // namespace chargenus
