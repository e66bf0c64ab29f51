#include "chargenus/catalog.hpp"

#include "chargenus/error.hpp"

namespace chargenus {

CatalogEntry catalog_projective(int n) {
  SmoothVariety v = ring_projective(n);
  return CatalogEntry{v.name, v, MotivicClass::of(AtomRegistry::global().projective_space(n))};
}

CatalogEntry catalog_product(const CatalogEntry& x, const CatalogEntry& y) {
  SmoothVariety v = ring_product(x.variety, y.variety);
  return CatalogEntry{x.name + "*" + y.name, v, x.motive * y.motive};
}

CatalogEntry catalog_proj_bundle(const CatalogEntry& base, const std::vector<std::vector<int>>& multiples) {
  if (multiples.empty()) throw DomainError("projective bundle needs at least one line summand");
  const std::vector<RingElement> classes = hyperplane_classes(base.variety);
  std::vector<RingElement> offsets;
  std::string label;
  for (const auto& row : multiples) {
    if (row.size() != classes.size()) {
      throw DomainError("each bundle offset needs one multiple per hyperplane class of the base");
    }
    RingElement m(base.variety.ring);
    for (std::size_t j = 0; j < row.size(); ++j) m += classes[j] * CoeffY(row[j]);
    offsets.push_back(std::move(m));
    for (int c : row) label += (label.empty() ? "" : ",") + std::to_string(c);
  }
  SmoothVariety v = ring_proj_bundle(base.variety, offsets);
  const int r = static_cast<int>(multiples.size()) - 1;
  v.name = "Pbundle(" + base.name + ";" + label + ")";
  return CatalogEntry{v.name, v, base.motive * MotivicClass::of(AtomRegistry::global().projective_space(r))};
}

CatalogEntry catalog_hirzebruch_surface(int a) {
  CatalogEntry e = catalog_proj_bundle(catalog_projective(1), {{0}, {-a}});
  e.name = "F" + std::to_string(a);
  e.variety.name = e.name;
  return e;
}

std::vector<CatalogEntry> standard_catalog(int max_dim) {
  std::vector<CatalogEntry> out;
  auto keep = [&](CatalogEntry e) {
    if (e.variety.dimension <= max_dim) out.push_back(std::move(e));
  };
  for (int n = 0; n <= 6; ++n) keep(catalog_projective(n));
  const CatalogEntry p1 = catalog_projective(1);
  const CatalogEntry p2 = catalog_projective(2);
  const CatalogEntry p3 = catalog_projective(3);
  keep(catalog_product(p1, p1));
  keep(catalog_product(p1, p2));
  keep(catalog_product(p2, p2));
  keep(catalog_product(p1, p3));
  keep(catalog_product(catalog_product(p1, p1), p1));
  for (int a = 0; a <= 3; ++a) keep(catalog_hirzebruch_surface(a));
  keep(catalog_proj_bundle(p2, {{0}, {0}}));
  keep(catalog_proj_bundle(p2, {{0}, {1}, {-1}}));
  keep(catalog_proj_bundle(catalog_product(p1, p1), {{0, 0}, {1, -1}}));
  return out;
}

}  // namespace chargenus
