#pragma once

#include <string>
#include <vector>

#include "chargenus/graded_ring.hpp"
#include "chargenus/motivic.hpp"

namespace chargenus {

/// A smooth complete variety known both to the Chow-ring layer and to K_0.
struct CatalogEntry {
  std::string name;
  SmoothVariety variety;
  MotivicClass motive;
};

CatalogEntry catalog_projective(int n);
CatalogEntry catalog_product(const CatalogEntry& x, const CatalogEntry& y);
/// P(O(m_0 H) + ... + O(m_r H)) with offsets given as multiples of the base's
/// hyperplane classes: `multiples[i][j]` is the coefficient of class j in m_i.
/// Zariski-locally trivial, so the motive is [X][P^r].
CatalogEntry catalog_proj_bundle(const CatalogEntry& base, const std::vector<std::vector<int>>& multiples);
/// Hirzebruch surface F_a = P(O + O(-a)) over P^1.
CatalogEntry catalog_hirzebruch_surface(int a);

/// P^0..P^6, small products, F_0..F_3 and a few projective bundles, all of
/// dimension <= max_dim.
std::vector<CatalogEntry> standard_catalog(int max_dim = 6);

}  // namespace chargenus
