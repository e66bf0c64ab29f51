#include "chargenus/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "chargenus/error.hpp"

namespace chargenus {

// ---------------------------------------------------------------------------
// GradedRing

GradedRing::GradedRing(std::vector<std::string> generator_names, std::vector<int> bounds,
                       std::vector<Relation> relations, RelationKind kind)
    : names_(std::move(generator_names)),
      bounds_(std::move(bounds)),
      relations_(std::move(relations)),
      kind_(std::move(kind)) {
  const std::size_t g = names_.size();
  if (bounds_.size() != g || relations_.size() != g) {
    throw DomainError("generator, bound and relation counts differ");
  }
  for (int b : bounds_) {
    if (b < 1) throw DomainError("relation degree must be positive");
  }
  top_degree_ = std::accumulate(bounds_.begin(), bounds_.end(), 0) - static_cast<int>(g);

  // Enumerate the basis in graded order so printing groups by degree.
  std::vector<Monomial> all;
  Monomial m(g, 0);
  for (;;) {
    all.push_back(m);
    std::size_t i = 0;
    while (i < g) {
      if (++m[i] < bounds_[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == g) break;
  }
  std::stable_sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  });
  basis_ = std::move(all);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_[basis_[i]] = i;
    basis_degree_.push_back(std::accumulate(basis_[i].begin(), basis_[i].end(), 0));
  }
  Monomial point(g);
  for (std::size_t i = 0; i < g; ++i) point[i] = bounds_[i] - 1;
  point_index_ = index_.at(point);

  std::map<Monomial, SparseVector> cache;
  table_.assign(basis_.size(), std::vector<SparseVector>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i; j < basis_.size(); ++j) {
      if (basis_degree_[i] + basis_degree_[j] > top_degree_) continue;
      Monomial prod(g);
      for (std::size_t k = 0; k < g; ++k) prod[k] = basis_[i][k] + basis_[j][k];
      table_[i][j] = reduce_cached(prod, cache);
      table_[j][i] = table_[i][j];
    }
  }
}

std::optional<std::size_t> GradedRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GradedRing::SparseVector GradedRing::reduce(const Monomial& m) const {
  std::map<Monomial, SparseVector> cache;
  return reduce_cached(m, cache);
}

GradedRing::SparseVector GradedRing::reduce_cached(const Monomial& m,
                                                   std::map<Monomial, SparseVector>& cache) const {
  if (m.size() != names_.size()) throw DomainError("monomial has the wrong number of exponents");
  if (std::accumulate(m.begin(), m.end(), 0) > top_degree_) return {};
  if (auto it = index_.find(m); it != index_.end()) return {{it->second, Rational(1)}};
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Rewrite with the highest generator whose exponent is out of range; the
  // relation is triangular, so this terminates.
  std::size_t i = names_.size();
  while (i-- > 0) {
    if (m[i] >= bounds_[i]) break;
  }
  Monomial rest = m;
  rest[i] -= bounds_[i];
  std::map<std::size_t, Rational> acc;
  for (const auto& [mono, c] : relations_[i]) {
    Monomial next = rest;
    for (std::size_t k = 0; k < next.size(); ++k) next[k] += mono[k];
    for (const auto& [idx, v] : reduce_cached(next, cache)) acc[idx] += c * v;
  }
  SparseVector out;
  for (auto& [idx, v] : acc) {
    if (!v.is_zero()) out.emplace_back(idx, std::move(v));
  }
  cache[m] = out;
  return out;
}

std::string GradedRing::monomial_str(std::size_t basis_index) const {
  const Monomial& m = basis_.at(basis_index);
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("ring element without a ring");
  coeffs_.assign(ring_->basis_size(), CoeffY());
}

RingElement RingElement::constant(RingPtr ring, const CoeffY& c) {
  RingElement e(std::move(ring));
  e.coeffs_[0] = c;
  return e;
}

RingElement RingElement::generator(RingPtr ring, std::size_t index) {
  if (index >= ring->generator_count()) throw DomainError("generator index out of range");
  RingElement e(ring);
  Monomial m(ring->generator_count(), 0);
  m[index] = 1;
  for (const auto& [idx, c] : ring->reduce(m)) e.coeffs_[idx] = CoeffY(c);
  return e;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CoeffY& c) { return c.is_zero(); });
}

CoeffY RingElement::constant_term() const { return coeffs_.empty() ? CoeffY() : coeffs_[0]; }

RingElement RingElement::component(int degree) const {
  RingElement out(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_->basis_degree(i) == degree) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

int RingElement::top_nonzero_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) d = std::max(d, ring_->basis_degree(i));
  }
  return d;
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (ring_ != o.ring_) throw DomainError("ring elements belong to different rings");
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const CoeffY& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  const GradedRing& ring = *a.ring_;
  RingElement out(a.ring_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const auto& entry = ring.multiply_basis(i, j);
      if (entry.empty()) continue;
      CoeffY prod = a.coeffs_[i] * b.coeffs_[j];
      for (const auto& [k, c] : entry) out.coeffs_[k] += c.is_one() ? prod : prod * CoeffY(c);
    }
  }
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

RingElement RingElement::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a ring element");
  RingElement result = one(ring_);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string RingElement::str() const {
  if (!ring_) return "<invalid>";
  std::string out;
  for (int d = 0; d <= ring_->top_degree(); ++d) {
    std::string part;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (ring_->basis_degree(i) != d || coeffs_[i].is_zero()) continue;
      std::string term;
      const CoeffY& c = coeffs_[i];
      if (d == 0) {
        term = c.compact_str(false);
      } else {
        const std::string mono = ring_->monomial_str(i);
        const std::string cs = c.compact_str(true);
        if (cs == "1") {
          term = mono;
        } else if (cs == "-1") {
          term = "-" + mono;
        } else {
          term = cs + "*" + mono;
        }
      }
      if (part.empty()) {
        part = term;
      } else if (term.front() == '-') {
        part += " - " + term.substr(1);
      } else {
        part += " + " + term;
      }
    }
    if (part.empty()) continue;
    if (!out.empty()) out += "; ";
    out += "deg" + std::to_string(d) + ": " + part;
  }
  return out.empty() ? "0" : out;
}

RingElement embed(const RingElement& a, const RingPtr& to, std::size_t offset) {
  const GradedRing& from = *a.ring();
  if (offset + from.generator_count() > to->generator_count()) {
    throw DomainError("embedding does not fit the target ring");
  }
  RingElement out(to);
  for (std::size_t i = 0; i < from.basis_size(); ++i) {
    if (a.coefficient(i).is_zero()) continue;
    Monomial m(to->generator_count(), 0);
    for (std::size_t k = 0; k < from.generator_count(); ++k) m[offset + k] = from.basis()[i][k];
    auto idx = to->index_of(m);
    if (!idx) throw DomainError("embedded monomial is not a basis monomial of the target ring");
    out.set_coefficient(*idx, out.coefficient(*idx) + a.coefficient(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog constructors

namespace {

std::string stem(const std::string& name) {
  std::size_t end = name.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
  return end == 0 ? name : name.substr(0, end);
}

// Renumbers generators whose stems collide: (h, h) -> (h1, h2).
std::vector<std::string> disambiguate(const std::vector<std::string>& names) {
  std::map<std::string, int> count;
  for (const auto& n : names) ++count[stem(n)];
  std::map<std::string, int> seen;
  std::vector<std::string> out;
  for (const auto& n : names) {
    const std::string s = stem(n);
    out.push_back(count[s] > 1 ? s + std::to_string(++seen[s]) : s);
  }
  return out;
}

GradedRing::Relation shift_relation(const GradedRing::Relation& rel, std::size_t offset, std::size_t total) {
  GradedRing::Relation out;
  for (const auto& [m, c] : rel) {
    Monomial shifted(total, 0);
    for (std::size_t k = 0; k < m.size(); ++k) shifted[offset + k] = m[k];
    out.emplace(std::move(shifted), c);
  }
  return out;
}

Rational require_rational(const CoeffY& c) {
  auto p = c.as_polynomial();
  if (!p || !(p->is_zero() || (p->terms().size() == 1 && p->terms().begin()->first == 0))) {
    throw DomainError("bundle offsets must have rational coefficients");
  }
  return p->coefficient(0);
}

}  // namespace

SmoothVariety ring_projective(int n) {
  if (n < 0) throw DomainError("projective space of negative dimension");
  std::vector<std::string> names;
  std::vector<int> bounds;
  std::vector<GradedRing::Relation> relations;
  if (n > 0) {
    names = {"h"};
    bounds = {n + 1};
    relations = {GradedRing::Relation{}};
  }
  auto ring = std::make_shared<const GradedRing>(std::move(names), std::move(bounds), std::move(relations),
                                                 ProjectiveSpaceKind{n});
  RingElement c = RingElement::one(ring);
  if (n > 0) c = (RingElement::one(ring) + RingElement::generator(ring, 0)).pow(n + 1);
  return SmoothVariety{"P" + std::to_string(n), ring, n, std::move(c)};
}

SmoothVariety ring_product(const SmoothVariety& x, const SmoothVariety& y) {
  const GradedRing& a = *x.ring;
  const GradedRing& b = *y.ring;
  const std::size_t total = a.generator_count() + b.generator_count();
  std::vector<std::string> names = a.generator_names();
  names.insert(names.end(), b.generator_names().begin(), b.generator_names().end());
  std::vector<int> bounds = a.bounds();
  bounds.insert(bounds.end(), b.bounds().begin(), b.bounds().end());
  std::vector<GradedRing::Relation> relations;
  for (const auto& r : a.relations()) relations.push_back(shift_relation(r, 0, total));
  for (const auto& r : b.relations()) relations.push_back(shift_relation(r, a.generator_count(), total));
  auto ring = std::make_shared<const GradedRing>(disambiguate(names), std::move(bounds), std::move(relations),
                                                 ProductKind{x.ring, y.ring});
  SmoothVariety out{x.name + "*" + y.name, ring, x.dimension + y.dimension, RingElement()};
  out.tangent_chern = pullback_left(out, x.tangent_chern) * pullback_right(out, y.tangent_chern);
  return out;
}

SmoothVariety ring_proj_bundle(const SmoothVariety& x, const std::vector<RingElement>& offsets) {
  if (offsets.empty()) throw DomainError("projective bundle needs at least one line summand");
  const GradedRing& base = *x.ring;
  for (const auto& m : offsets) {
    if (m.ring() != x.ring) throw DomainError("bundle offset does not live on the base");
    for (std::size_t i = 0; i < base.basis_size(); ++i) {
      if (!m.coefficient(i).is_zero() && base.basis_degree(i) != 1) {
        throw DomainError("bundle offsets must be homogeneous of degree one");
      }
    }
  }
  const int rank = static_cast<int>(offsets.size());
  const std::size_t g = base.generator_count();

  // Elementary symmetric functions e_0..e_{r+1} of the offsets.
  std::vector<RingElement> e(offsets.size() + 1, RingElement(x.ring));
  e[0] = RingElement::one(x.ring);
  for (const auto& m : offsets) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * m;
  }
  // xi^{r+1} = - sum_{j>=1} e_j xi^{r+1-j}
  GradedRing::Relation rel;
  for (std::size_t j = 1; j < e.size(); ++j) {
    for (std::size_t i = 0; i < base.basis_size(); ++i) {
      const CoeffY& c = e[j].coefficient(i);
      if (c.is_zero()) continue;
      Monomial m = base.basis()[i];
      m.push_back(rank - static_cast<int>(j));
      rel[m] -= require_rational(c);
    }
  }
  std::erase_if(rel, [](const auto& kv) { return kv.second.is_zero(); });

  std::vector<std::string> names = base.generator_names();
  names.push_back("xi");
  std::vector<int> bounds = base.bounds();
  bounds.push_back(rank);
  std::vector<GradedRing::Relation> relations;
  for (const auto& r : base.relations()) relations.push_back(shift_relation(r, 0, g + 1));
  relations.push_back(std::move(rel));
  auto ring = std::make_shared<const GradedRing>(disambiguate(names), std::move(bounds), std::move(relations),
                                                 ProjBundleKind{x.ring, offsets});
  SmoothVariety out{"Pbundle(" + x.name + ")", ring, x.dimension + rank - 1, RingElement()};
  const RingElement xi = RingElement::generator(ring, g);
  RingElement c = pullback_from_base(out, x.tangent_chern);
  for (const auto& m : offsets) c = c * (RingElement::one(ring) + xi + pullback_from_base(out, m));
  out.tangent_chern = std::move(c);
  return out;
}

CoeffY integrate(const SmoothVariety& x, const RingElement& a) {
  if (a.ring() != x.ring) throw DomainError("cannot integrate a class from a different ring");
  return a.coefficient(x.ring->point_index());
}

RingElement pushforward_proj_bundle(const SmoothVariety& bundle, const RingElement& a) {
  const auto* kind = std::get_if<ProjBundleKind>(&bundle.ring->kind());
  if (!kind) throw DomainError("pushforward requires a projective bundle");
  if (a.ring() != bundle.ring) throw DomainError("class does not live on the bundle");
  const GradedRing& ring = *bundle.ring;
  const std::size_t last = ring.generator_count() - 1;
  const int r = ring.bounds()[last] - 1;
  RingElement out(kind->base);
  for (std::size_t i = 0; i < ring.basis_size(); ++i) {
    const Monomial& m = ring.basis()[i];
    if (m[last] != r || a.coefficient(i).is_zero()) continue;
    Monomial base_m(m.begin(), m.end() - 1);
    auto idx = kind->base->index_of(base_m);
    out.set_coefficient(*idx, out.coefficient(*idx) + a.coefficient(i));
  }
  return out;
}

RingElement pullback_from_base(const SmoothVariety& bundle, const RingElement& b) {
  const auto* kind = std::get_if<ProjBundleKind>(&bundle.ring->kind());
  if (!kind || b.ring() != kind->base) throw DomainError("pullback requires a class on the bundle base");
  return embed(b, bundle.ring, 0);
}

RingElement pullback_left(const SmoothVariety& product, const RingElement& a) {
  const auto* kind = std::get_if<ProductKind>(&product.ring->kind());
  if (!kind || a.ring() != kind->left) throw DomainError("pullback requires a class on the left factor");
  return embed(a, product.ring, 0);
}

RingElement pullback_right(const SmoothVariety& product, const RingElement& b) {
  const auto* kind = std::get_if<ProductKind>(&product.ring->kind());
  if (!kind || b.ring() != kind->right) throw DomainError("pullback requires a class on the right factor");
  return embed(b, product.ring, kind->left->generator_count());
}

std::vector<RingElement> hyperplane_classes(const SmoothVariety& x) {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < x.ring->generator_count(); ++i) out.push_back(RingElement::generator(x.ring, i));
  return out;
}

}  // namespace chargenus
