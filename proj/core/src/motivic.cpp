#include "chargenus/motivic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "chargenus/error.hpp"
#include "toml_lite.hpp"

namespace chargenus {

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_product(std::string_view name) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto star = name.find('*', start);
    out.emplace_back(name.substr(start, star - start));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

std::optional<int> projective_index(std::string_view name) {
  if (name.size() < 2 || name.front() != 'P') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  if (name.size() > 4) return std::nullopt;
  return std::stoi(std::string(name.substr(1)));
}

BiPolyUV projective_e(int n) { return BiPolyUV::geometric_sum(BiPolyUV::uv(), n); }

}  // namespace

// ---------------------------------------------------------------------------
// AtomRegistry

AtomRegistry::AtomRegistry() {
  insert_locked("pt", BiPolyUV::one(), 0);
  insert_locked("affineLine", BiPolyUV::uv(), 1);
  insert_locked("elliptic", (BiPolyUV::one() - BiPolyUV::u()) * (BiPolyUV::one() - BiPolyUV::v()), 1);
}

AtomRegistry& AtomRegistry::global() {
  static AtomRegistry registry;
  return registry;
}

AtomPtr AtomRegistry::insert_locked(const std::string& name, const BiPolyUV& e, int dim) {
  auto atom = std::make_shared<const Atom>(Atom{name, e, dim});
  atoms_.emplace(name, atom);
  return atom;
}

AtomPtr AtomRegistry::register_atom(const std::string& name, const BiPolyUV& e, int dim) {
  if (!valid_atom_name(name) || name == "L") throw DomainError("invalid atom name '" + name + "'");
  if (projective_index(name)) throw DomainError("atom name '" + name + "' is reserved for projective spaces");
  if (dim < 0) throw DomainError("atom '" + name + "' has negative dimension");
  if (e.total_degree() > 2 * dim) {
    throw DomainError("E-polynomial of atom '" + name + "' exceeds degree 2*dim");
  }
  std::lock_guard lock(mutex_);
  if (atoms_.count(name)) throw DomainError("atom '" + name + "' is already registered");
  return insert_locked(name, e, dim);
}

AtomPtr AtomRegistry::find(std::string_view name) const {
  std::lock_guard lock(mutex_);
  auto it = atoms_.find(name);
  return it == atoms_.end() ? nullptr : it->second;
}

AtomPtr AtomRegistry::projective_space(int n) {
  if (n < 0) throw DomainError("projective space of negative dimension");
  if (n == 0) return get("pt");
  const std::string name = "P" + std::to_string(n);
  std::lock_guard lock(mutex_);
  if (auto it = atoms_.find(name); it != atoms_.end()) return it->second;
  return insert_locked(name, projective_e(n), n);
}

AtomPtr AtomRegistry::product(const AtomPtr& a, const AtomPtr& b) {
  if (a->name == "pt") return b;
  if (b->name == "pt") return a;
  std::vector<std::string> parts = split_product(a->name);
  for (auto& p : split_product(b->name)) parts.push_back(std::move(p));
  std::sort(parts.begin(), parts.end());
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "*") + p;
  std::lock_guard lock(mutex_);
  if (auto it = atoms_.find(name); it != atoms_.end()) return it->second;
  return insert_locked(name, a->e_polynomial * b->e_polynomial, a->dimension + b->dimension);
}

AtomPtr AtomRegistry::get(std::string_view name) {
  if (auto found = find(name)) return found;
  if (name.find('*') != std::string_view::npos) {
    AtomPtr acc = get("pt");
    for (const auto& part : split_product(name)) acc = product(acc, get(part));
    return acc;
  }
  if (auto n = projective_index(name)) return projective_space(*n);
  throw DomainError("unknown atom '" + std::string(name) + "'");
}

std::vector<std::string> AtomRegistry::names() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [name, atom] : atoms_) out.push_back(name);
  return out;
}

void AtomRegistry::load_toml(std::string_view text) {
  const nlohmann::json doc = detail::parse_toml(text);
  if (!doc.contains("atom")) return;
  if (!doc["atom"].is_array()) throw DomainError("'atom' must be an array of tables");
  for (const auto& entry : doc["atom"]) {
    if (!entry.contains("name") || !entry["name"].is_string()) throw DomainError("atom entry without a name");
    if (!entry.contains("dim") || !entry["dim"].is_number_integer()) {
      throw DomainError("atom '" + entry["name"].get<std::string>() + "' needs an integer dim");
    }
    if (!entry.contains("e") || !entry["e"].is_string()) {
      throw DomainError("atom '" + entry["name"].get<std::string>() + "' needs an E-polynomial string e");
    }
    register_atom(entry["name"].get<std::string>(), BiPolyUV::parse(entry["e"].get<std::string>()),
                  entry["dim"].get<int>());
  }
}

void AtomRegistry::load_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open atom catalog '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  load_toml(ss.str());
}

AtomPtr atom_register(const std::string& name, const BiPolyUV& e, int dim) {
  return AtomRegistry::global().register_atom(name, e, dim);
}

// ---------------------------------------------------------------------------
// MotivicClass

void MotivicClass::add_term(const AtomPtr& atom, int lefschetz, const BigInt& c) {
  if (c == 0) return;
  Key key{atom->name, lefschetz};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{atom, c});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient == 0) terms_.erase(it);
}

MotivicClass MotivicClass::of(const AtomPtr& atom, const BigInt& coefficient, int lefschetz) {
  MotivicClass m;
  m.add_term(atom, lefschetz, coefficient);
  return m;
}

MotivicClass MotivicClass::point() { return of(AtomRegistry::global().get("pt")); }

MotivicClass MotivicClass::lefschetz(int k) { return of(AtomRegistry::global().get("pt"), 1, k); }

MotivicClass MotivicClass::projective_expansion(int n) {
  MotivicClass m;
  for (int k = 0; k <= n; ++k) m += lefschetz(k);
  return m;
}

int MotivicClass::min_lefschetz_exponent() const {
  int m = 0;
  for (const auto& [key, term] : terms_) m = std::min(m, key.second);
  return m;
}

MotivicClass MotivicClass::operator-() const {
  MotivicClass r = *this;
  for (auto& [key, term] : r.terms_) term.coefficient = -term.coefficient;
  return r;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  for (const auto& [key, term] : o.terms_) add_term(term.atom, key.second, term.coefficient);
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
  for (const auto& [key, term] : o.terms_) add_term(term.atom, key.second, -term.coefficient);
  return *this;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  return k0_arith(a, b, K0Op::Mul, AtomRegistry::global());
}

bool operator==(const MotivicClass& a, const MotivicClass& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.coefficient != ib->second.coefficient) return false;
  }
  return true;
}

MotivicClass MotivicClass::times_lefschetz(int k) const {
  MotivicClass r;
  for (const auto& [key, term] : terms_) r.add_term(term.atom, key.second + k, term.coefficient);
  return r;
}

std::string MotivicClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, term] : terms_) {
    std::string body;
    if (key.first != "pt") body = "[" + key.first + "]";
    if (key.second != 0) {
      if (!body.empty()) body += "*";
      body += key.second == 1 ? "L" : "L^" + std::to_string(key.second);
    }
    BigInt magnitude = abs(term.coefficient);
    std::string t;
    if (body.empty()) {
      t = magnitude.get_str();
    } else if (magnitude == 1) {
      t = body;
    } else {
      t = magnitude.get_str() + "*" + body;
    }
    if (out.empty()) {
      out = (term.coefficient < 0 ? "-" : "") + t;
    } else {
      out += (term.coefficient < 0 ? " - " : " + ") + t;
    }
  }
  return out;
}

MotivicClass k0_arith(const MotivicClass& a, const MotivicClass& b, K0Op op, AtomRegistry& registry) {
  switch (op) {
    case K0Op::Add:
      return a + b;
    case K0Op::Sub:
      return a - b;
    case K0Op::Mul: {
      MotivicClass out;
      for (const auto& [ka, ta] : a.terms()) {
        for (const auto& [kb, tb] : b.terms()) {
          out += MotivicClass::of(registry.product(ta.atom, tb.atom), ta.coefficient * tb.coefficient,
                                  ka.second + kb.second);
        }
      }
      return out;
    }
  }
  throw DomainError("unknown K0 operation");
}

// ---------------------------------------------------------------------------
// Measures

BiPolyUV measure_E(const MotivicClass& a) {
  const int shift = -a.min_lefschetz_exponent();
  BiPolyUV acc;
  for (const auto& [key, term] : a.terms()) {
    acc += term.atom->e_polynomial * BiPolyUV::uv().pow(key.second + shift) * Rational(term.coefficient);
  }
  if (shift == 0) return acc;
  BiPolyUV::TermMap lowered;
  for (const auto& [e, c] : acc.terms()) {
    if (e.first < shift || e.second < shift) {
      throw DomainError("localized class, use completed pipeline: " + a.str());
    }
    lowered[{e.first - shift, e.second - shift}] = c;
  }
  return BiPolyUV(std::move(lowered));
}

BiPolyUV measure_Hc(const MotivicClass& a) { return measure_E(a).negate_variables(); }

LaurentPolyY measure_chi_y(const MotivicClass& a) {
  return measure_Hc(a).specialize(LaurentPolyY::var(), LaurentPolyY(-1));
}

LaurentPolyY measure_weight(const MotivicClass& a) {
  return measure_Hc(a).specialize(LaurentPolyY::var(), LaurentPolyY::var());
}

Rational measure_euler(const MotivicClass& a) { return measure_Hc(a).evaluate(-1, -1); }

MeasureValue measure(const MotivicClass& a, MeasureKind kind) {
  switch (kind) {
    case MeasureKind::E: return measure_E(a);
    case MeasureKind::Hc: return measure_Hc(a);
    case MeasureKind::ChiY: return measure_chi_y(a);
    case MeasureKind::Weight: return measure_weight(a);
    case MeasureKind::Euler: return measure_euler(a);
  }
  throw DomainError("unknown measure kind");
}

std::string measure_str(const MeasureValue& value, MeasureKind kind) {
  if (const auto* p = std::get_if<BiPolyUV>(&value)) return p->str();
  if (const auto* p = std::get_if<LaurentPolyY>(&value)) return p->str(kind == MeasureKind::Weight ? "w" : "y");
  return std::get<Rational>(value).str();
}

bool verify_blowup_identity(const MotivicClass& blown_up, const MotivicClass& exceptional,
                            const MotivicClass& x, const MotivicClass& center) {
  return measure_E(blown_up) - measure_E(exceptional) == measure_E(x) - measure_E(center);
}

CompletedClass CompletedClass::geometric_factor(int a) {
  if (a < 0) throw DomainError("negative discrepancy");
  CompletedClass c{MotivicClass::point(), {}};
  if (a > 0) c.denominator_factors.push_back(GeomFactor{a + 1});
  return c;
}

RatFuncUV completed_measure_E(const CompletedClass& c) {
  return RatFuncUV(measure_E(c.numerator), c.denominator_factors, BiPolyUV::uv());
}

RatFuncY completed_measure_chi_y(const CompletedClass& c) {
  return RatFuncY(measure_chi_y(c.numerator), c.denominator_factors, LaurentPolyY::monomial(-1, 1));
}

}  // namespace chargenus
