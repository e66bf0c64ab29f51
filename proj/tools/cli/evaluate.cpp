#include "evaluate.hpp"

#include <regex>

namespace chargenus::cli {

namespace {

const std::string kMeasureHint = "; try 'chargenus measure'";

std::optional<int> projective_index(const std::string& name) {
  static const std::regex re("P([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  return std::stoi(m[1].str());
}

std::vector<std::vector<int>> group_offsets(const CatalogEntry& base, const std::vector<int>& ints) {
  const std::size_t k = hyperplane_classes(base.variety).size();
  std::vector<std::vector<int>> rows;
  if (k == 0) {
    for (int m : ints) {
      if (m != 0) throw ExprError("offsets over a point must be 0");
      rows.emplace_back();
    }
    return rows;
  }
  if (ints.size() % k != 0) {
    throw ExprError("Pbundle over " + base.name + " takes offsets in groups of " + std::to_string(k) +
                    " (one integer per hyperplane class)");
  }
  for (std::size_t i = 0; i < ints.size(); i += k) rows.emplace_back(ints.begin() + static_cast<long>(i), ints.begin() + static_cast<long>(i + k));
  return rows;
}

CoeffY to_series_genus(GenusSeries s, const SmoothVariety& x, const std::optional<RingElement>& divisor) {
  SeriesKind kind = SeriesKind::Todd;
  switch (s) {
    case GenusSeries::ChiY:
      kind = SeriesKind::Qy;
      break;
    case GenusSeries::Todd:
      kind = SeriesKind::Todd;
      break;
    case GenusSeries::L:
      kind = SeriesKind::Lclass;
      break;
    case GenusSeries::Chern:
      kind = SeriesKind::Chern;
      break;
  }
  const auto series = series_builtin(kind, std::max(x.dimension, 1));
  return divisor ? genus_hypersurface(series, x, *divisor) : genus(series, x);
}

LaurentPolyY as_polynomial(const CoeffY& c) {
  auto p = c.as_polynomial();
  if (!p) throw ConsistencyError("genus kept a (1 + y) denominator: " + c.str());
  return *p;
}

}  // namespace

CatalogEntry evaluate_smooth(const Expr& e, AtomRegistry& registry) {
  switch (e.kind) {
    case Expr::Kind::Proj:
      return catalog_projective(e.n);
    case Expr::Kind::Point:
      return catalog_projective(0);
    case Expr::Kind::Atom:
      if (auto n = projective_index(e.name)) return catalog_projective(*n);
      throw ExprError("atom '" + e.name + "' has no Chow ring" + kMeasureHint);
    case Expr::Kind::Product:
      return catalog_product(evaluate_smooth(*e.left, registry), evaluate_smooth(*e.right, registry));
    case Expr::Kind::Bundle: {
      const auto base = evaluate_smooth(*e.left, registry);
      return catalog_proj_bundle(base, group_offsets(base, e.integers));
    }
    case Expr::Kind::Hyp:
      throw ExprError("hypersurfaces have no Chow ring here; only genera are available");
    case Expr::Kind::Affine:
    case Expr::Kind::Lefschetz:
    case Expr::Kind::Scissor:
      throw ExprError("'" + print_expr(e) + "' is not a smooth complete catalog variety" + kMeasureHint);
  }
  throw ExprError("unsupported expression");
}

MotivicClass evaluate_motivic(const Expr& e, AtomRegistry& registry) {
  switch (e.kind) {
    case Expr::Kind::Proj:
      return MotivicClass::of(registry.projective_space(e.n));
    case Expr::Kind::Affine:
      return MotivicClass::lefschetz(e.n);
    case Expr::Kind::Lefschetz:
      return MotivicClass::lefschetz();
    case Expr::Kind::Point:
      return MotivicClass::point();
    case Expr::Kind::Atom:
      return MotivicClass::of(registry.get(e.name));
    case Expr::Kind::Product:
      return k0_arith(evaluate_motivic(*e.left, registry), evaluate_motivic(*e.right, registry), K0Op::Mul, registry);
    case Expr::Kind::Scissor:
      return k0_arith(evaluate_motivic(*e.left, registry), evaluate_motivic(*e.right, registry), K0Op::Sub, registry);
    case Expr::Kind::Bundle: {
      CatalogEntry base;
      try {
        base = evaluate_smooth(*e.left, registry);
      } catch (const ExprError&) {
        throw ExprError("Pbundle needs a smooth catalog base");
      }
      const auto rows = group_offsets(base, e.integers);
      const int r = static_cast<int>(rows.size()) - 1;
      return k0_arith(evaluate_motivic(*e.left, registry), MotivicClass::of(registry.projective_space(r)), K0Op::Mul,
                      registry);
    }
    case Expr::Kind::Hyp:
      throw ExprError("hypersurfaces have no class in K0 here; try 'chargenus genus'");
  }
  throw ExprError("unsupported expression");
}

LaurentPolyY evaluate_genus(const Expr& e, GenusSeries series, AtomRegistry& registry) {
  if (e.kind == Expr::Kind::Product && contains_kind(e, Expr::Kind::Hyp)) {
    return evaluate_genus(*e.left, series, registry) * evaluate_genus(*e.right, series, registry);
  }
  if (e.kind == Expr::Kind::Hyp) {
    const auto ambient = evaluate_smooth(*e.left, registry).variety;
    const auto hs = hyperplane_classes(ambient);
    if (hs.size() != e.integers.size()) {
      throw ExprError("Hyp over " + ambient.name + " takes " + std::to_string(hs.size()) +
                      " degree(s), one per hyperplane class");
    }
    RingElement divisor(ambient.ring);
    for (std::size_t i = 0; i < hs.size(); ++i) divisor += hs[i] * CoeffY(Rational(e.integers[i]));
    if (series == GenusSeries::ChiY) return chi_y_hypersurface(ambient, divisor);
    return as_polynomial(to_series_genus(series, ambient, divisor));
  }
  const auto x = evaluate_smooth(e, registry).variety;
  if (series == GenusSeries::ChiY) return chi_y(x);
  return as_polynomial(to_series_genus(series, x, std::nullopt));
}

}  // namespace chargenus::cli
