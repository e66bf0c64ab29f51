#pragma once

#include <string>

#include "chargenus/catalog.hpp"
#include "chargenus/char_class.hpp"
#include "expr.hpp"

namespace chargenus::cli {

/// The expression cannot be evaluated in the requested layer (wrong layer,
/// arity mismatch). Reported as a usage error.
class ExprError : public Error {
 public:
  using Error::Error;
};

enum class GenusSeries { ChiY, Todd, L, Chern };

/// Smooth catalog variety with its motive. Throws ExprError for motivic-only
/// constructs and hypersurfaces.
CatalogEntry evaluate_smooth(const Expr& e, AtomRegistry& registry = AtomRegistry::global());

/// Class in K_0. Pbundle needs a catalog base; Hyp is rejected.
MotivicClass evaluate_motivic(const Expr& e, AtomRegistry& registry = AtomRegistry::global());

/// Genus of the expression. Products involving hypersurfaces multiply genera.
LaurentPolyY evaluate_genus(const Expr& e, GenusSeries series, AtomRegistry& registry = AtomRegistry::global());

}  // namespace chargenus::cli
