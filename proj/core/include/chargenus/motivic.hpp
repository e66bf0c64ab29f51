#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chargenus/bipoly.hpp"
#include "chargenus/laurent_poly.hpp"
#include "chargenus/ratfunc.hpp"

namespace chargenus {

/// Named generator of K_0(var) carrying its E-polynomial.
struct Atom {
  std::string name;
  BiPolyUV e_polynomial;
  int dimension = 0;
};
using AtomPtr = std::shared_ptr<const Atom>;

/// Append-only table of atoms. Built-ins: pt, affineLine, elliptic; P<n> is
/// created on first use. Products of atoms are registered under the sorted
/// factor names joined by '*'.
class AtomRegistry {
 public:
  AtomRegistry();
  AtomRegistry(const AtomRegistry&) = delete;
  AtomRegistry& operator=(const AtomRegistry&) = delete;

  /// Process-wide registry used by the parser and the CLI.
  static AtomRegistry& global();

  /// Throws DomainError on a duplicate name, negative dimension, or an
  /// E-polynomial of total degree above 2 * dim.
  AtomPtr register_atom(const std::string& name, const BiPolyUV& e, int dim);
  AtomPtr find(std::string_view name) const;
  /// Throws DomainError on unknown names. Resolves P<n> and product names.
  AtomPtr get(std::string_view name);
  AtomPtr projective_space(int n);
  AtomPtr product(const AtomPtr& a, const AtomPtr& b);
  std::vector<std::string> names() const;

  /// Loads `[[atom]]` tables with keys name, dim, e.
  void load_toml(std::string_view text);
  void load_toml_file(const std::string& path);

 private:
  AtomPtr insert_locked(const std::string& name, const BiPolyUV& e, int dim);

  mutable std::mutex mutex_;
  std::map<std::string, AtomPtr, std::less<>> atoms_;
};

/// Free-function form of AtomRegistry::register_atom on the global registry.
AtomPtr atom_register(const std::string& name, const BiPolyUV& e, int dim);

/// Finite integer combination of atoms times powers of the Lefschetz class L
/// in K_0(var)[L^{-1}].
class MotivicClass {
 public:
  struct Term {
    AtomPtr atom;
    BigInt coefficient;
  };
  using Key = std::pair<std::string, int>;  ///< (atom name, L-exponent)

  MotivicClass() = default;
  static MotivicClass of(const AtomPtr& atom, const BigInt& coefficient = 1, int lefschetz = 0);
  static MotivicClass point();
  /// L^k
  static MotivicClass lefschetz(int k = 1);
  /// [P^n] = 1 + L + ... + L^n
  static MotivicClass projective_expansion(int n);

  const std::map<Key, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_lefschetz_exponent() const;

  MotivicClass operator-() const;
  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator-=(const MotivicClass& o);
  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  /// Product over the global registry.
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend bool operator==(const MotivicClass& a, const MotivicClass& b);

  /// Multiplies by L^k.
  MotivicClass times_lefschetz(int k) const;

  /// "[P2] + 2*L^3", "[elliptic]*L".
  std::string str() const;

 private:
  void add_term(const AtomPtr& atom, int lefschetz, const BigInt& c);

  std::map<Key, Term> terms_;
};

enum class K0Op { Add, Sub, Mul };

MotivicClass k0_arith(const MotivicClass& a, const MotivicClass& b, K0Op op,
                      AtomRegistry& registry = AtomRegistry::global());

enum class MeasureKind { E, Hc, ChiY, Weight, Euler };

/// E-polynomial, Hodge characteristic, chi_y, weight characteristic, or Euler
/// characteristic of a class.
using MeasureValue = std::variant<BiPolyUV, LaurentPolyY, Rational>;

/// E(a) = sum c E(atom) (uv)^k; throws DomainError for localized classes whose
/// image is not a polynomial.
BiPolyUV measure_E(const MotivicClass& a);
/// Hc(u, v) = E(-u, -v)
BiPolyUV measure_Hc(const MotivicClass& a);
/// Hc at (u, v) = (y, -1)
LaurentPolyY measure_chi_y(const MotivicClass& a);
/// Hc at (u, v) = (w, w), printed in w
LaurentPolyY measure_weight(const MotivicClass& a);
/// Hc at (-1, -1)
Rational measure_euler(const MotivicClass& a);
MeasureValue measure(const MotivicClass& a, MeasureKind kind);
/// Renders a measure value with the variable appropriate to `kind`.
std::string measure_str(const MeasureValue& value, MeasureKind kind);

/// Necessary condition for [Bl] - [E] = [X] - [Y] in K_0: equality under E.
bool verify_blowup_identity(const MotivicClass& blown_up, const MotivicClass& exceptional,
                            const MotivicClass& x, const MotivicClass& center);

/// Element of the completion kept in closed form: numerator / prod g_{a_i}(L).
struct CompletedClass {
  MotivicClass numerator;
  std::vector<GeomFactor> denominator_factors;

  /// (L - 1)/(L^{a+1} - 1) after cancelling L - 1, i.e. 1/g_a(L).
  static CompletedClass geometric_factor(int a);
};

/// Image under E (L -> uv).
RatFuncUV completed_measure_E(const CompletedClass& c);
/// Image under chi_y (L -> -y).
RatFuncY completed_measure_chi_y(const CompletedClass& c);

}  // namespace chargenus
