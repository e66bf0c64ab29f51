#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chargenus/bipoly.hpp"
#include "chargenus/motivic.hpp"
#include "chargenus/ratfunc.hpp"

namespace chargenus {

enum class StrataMode { Open, Closed };

struct SncDivisor {
  std::string name;
  int discrepancy = 0;  ///< a_i >= 0
};

/// Resolution data Y -> X with an SNC discrepancy divisor sum a_i D_i and the
/// E-polynomials of the strata D_I (closed mode) or D_I^o (open mode).
///
/// Subsets of divisor indices are bitmasks; bit i stands for divisor i.
class SncModel {
 public:
  using Subset = std::uint32_t;
  static constexpr int kMaxDivisors = 20;

  /// Validates the table: unique names, discrepancies >= 0, the empty stratum
  /// present, and every subset of a stored subset stored as well.
  SncModel(std::string name, int dimension, std::vector<SncDivisor> divisors, StrataMode mode,
           std::map<Subset, BiPolyUV> strata);

  /// Reads the `[model]` / `[[divisor]]` / `[strata]` TOML format.
  static SncModel from_toml(std::string_view text);
  static SncModel from_toml_file(const std::string& path);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  const std::vector<SncDivisor>& divisors() const { return divisors_; }
  StrataMode mode() const { return mode_; }
  const std::map<Subset, BiPolyUV>& strata() const { return strata_; }
  /// Stored E-polynomial, zero when absent.
  BiPolyUV stratum(Subset s) const;
  /// "E1,E2" for the subset, "" for the empty set.
  std::string subset_label(Subset s) const;

 private:
  std::string name_;
  int dimension_;
  std::vector<SncDivisor> divisors_;
  StrataMode mode_;
  std::map<Subset, BiPolyUV> strata_;
};

/// E(D_I^o) = sum_{J >= I} (-1)^{|J - I|} E(D_J).
SncModel strata_closed_to_open(const SncModel& m);
/// E(D_I) = sum_{J >= I} E(D_J^o).
SncModel strata_open_to_closed(const SncModel& m);

/// sum_I [D_I^o] prod_{i in I} (L - 1)/(L^{a_i+1} - 1), over the common
/// denominator prod_i g_{a_i}(L). Strata enter as ad-hoc atoms.
CompletedClass motivic_integral(const SncModel& m);
/// Same integral from the closed strata: sum_I [D_I] prod_{i in I} (b_i - 1).
CompletedClass motivic_integral_from_closed(const SncModel& m);

/// E_st(u, v) as a fraction with g_{a_i}(uv) denominators.
RatFuncUV stringy_E(const SncModel& m);
/// E_st(y, 1): the stringy chi_{-y} genus.
RatFuncY stringy_chi(const SncModel& m);
/// Stringy Euler number; the closed formula and the u = v -> 1 limit of E_st
/// are both computed and must agree (ConsistencyError otherwise).
Rational stringy_euler(const SncModel& m);
/// True iff the stringy E-functions agree under cross-multiplication.
bool compare_resolutions(const SncModel& m1, const SncModel& m2);

struct StringyReport {
  RatFuncUV e_function;
  RatFuncY chi;
  Rational euler;
  std::optional<BiPolyUV> e_polynomial;  ///< set when E_st is a polynomial
  std::optional<LaurentPolyY> chi_polynomial;
  bool is_polynomial() const { return e_polynomial.has_value(); }
};

StringyReport stringy_report(const SncModel& m);

/// Reference inputs for the A1 surface singularity.
namespace models {
/// Minimal resolution: one (-2)-curve, discrepancy 0.
SncModel a1_minimal();
/// Minimal resolution blown up at a point of the exceptional curve: strict
/// transform (a = 0) and new curve (a = 1) meeting in a point.
SncModel a1_blown_up();
}  // namespace models

}  // namespace chargenus
