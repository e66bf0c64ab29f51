#include "chargenus/stringy.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "chargenus/error.hpp"
#include "toml_lite.hpp"

namespace chargenus {

namespace {

bool contains(SncModel::Subset super, SncModel::Subset sub) { return (super & sub) == sub; }

MotivicClass geometric_sum_L(int a) { return MotivicClass::projective_expansion(a); }

std::vector<GeomFactor> all_factors(const SncModel& m) {
  std::vector<GeomFactor> fs;
  for (const auto& d : m.divisors()) {
    if (d.discrepancy > 0) fs.push_back(GeomFactor{d.discrepancy + 1});
  }
  return fs;
}

AtomPtr stratum_atom(const SncModel& m, SncModel::Subset s, const BiPolyUV& e, bool open) {
  const std::string label = m.name() + (open ? ":open(" : ":closed(") + m.subset_label(s) + ")";
  const int dim = m.dimension() - std::popcount(s);
  return std::make_shared<const Atom>(Atom{label, e, dim});
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

SncModel::SncModel(std::string name, int dimension, std::vector<SncDivisor> divisors, StrataMode mode,
                   std::map<Subset, BiPolyUV> strata)
    : name_(std::move(name)),
      dimension_(dimension),
      divisors_(std::move(divisors)),
      mode_(mode),
      strata_(std::move(strata)) {
  if (dimension_ < 0) throw DomainError("model dimension must be non-negative");
  if (divisors_.size() > static_cast<std::size_t>(kMaxDivisors)) {
    throw DomainError("at most " + std::to_string(kMaxDivisors) + " divisors are supported");
  }
  std::set<std::string> seen;
  for (const auto& d : divisors_) {
    if (d.name.empty() || d.name.find(',') != std::string::npos) {
      throw DomainError("invalid divisor name '" + d.name + "'");
    }
    if (!seen.insert(d.name).second) throw DomainError("duplicate divisor '" + d.name + "'");
    if (d.discrepancy < 0) {
      throw DomainError("log-terminal required: divisor '" + d.name + "' has negative discrepancy " +
                        std::to_string(d.discrepancy));
    }
  }
  const Subset universe = divisors_.empty() ? 0 : static_cast<Subset>((1ULL << divisors_.size()) - 1);
  if (!strata_.count(0)) throw DomainError("the stratum of the empty set (Y itself) is missing");
  for (const auto& [s, e] : strata_) {
    if ((s & ~universe) != 0) throw DomainError("stratum refers to an unknown divisor");
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
      const Subset bit = Subset{1} << i;
      if ((s & bit) && !strata_.count(s & ~bit)) {
        throw DomainError("stratum {" + subset_label(s) + "} is present but {" + subset_label(s & ~bit) +
                          "} is missing");
      }
    }
  }
}

BiPolyUV SncModel::stratum(Subset s) const {
  auto it = strata_.find(s);
  return it == strata_.end() ? BiPolyUV() : it->second;
}

std::string SncModel::subset_label(Subset s) const {
  std::string out;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (s & (Subset{1} << i)) out += (out.empty() ? "" : ",") + divisors_[i].name;
  }
  return out;
}

SncModel SncModel::from_toml(std::string_view text) {
  const nlohmann::json doc = detail::parse_toml(text);
  if (!doc.contains("model") || !doc["model"].is_object()) throw DomainError("missing [model] table");
  const auto& model = doc["model"];
  auto string_field = [](const nlohmann::json& t, const char* key) {
    if (!t.contains(key) || !t[key].is_string()) throw DomainError(std::string("missing string field '") + key + "'");
    return t[key].get<std::string>();
  };
  auto int_field = [](const nlohmann::json& t, const char* key) {
    if (!t.contains(key) || !t[key].is_number_integer()) {
      throw DomainError(std::string("missing integer field '") + key + "'");
    }
    return t[key].get<long long>();
  };
  const std::string name = string_field(model, "name");
  const int dimension = static_cast<int>(int_field(model, "dimension"));
  const std::string mode_text = model.contains("strata_mode") ? string_field(model, "strata_mode") : "open";
  StrataMode mode;
  if (mode_text == "open") {
    mode = StrataMode::Open;
  } else if (mode_text == "closed") {
    mode = StrataMode::Closed;
  } else {
    throw DomainError("strata_mode must be \"open\" or \"closed\"");
  }

  std::vector<SncDivisor> divisors;
  if (doc.contains("divisor")) {
    if (!doc["divisor"].is_array()) throw DomainError("'divisor' must be an array of tables");
    for (const auto& d : doc["divisor"]) {
      divisors.push_back(SncDivisor{string_field(d, "name"), static_cast<int>(int_field(d, "discrepancy"))});
    }
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < divisors.size(); ++i) index[divisors[i].name] = i;

  std::map<Subset, BiPolyUV> strata;
  if (!doc.contains("strata") || !doc["strata"].is_object()) throw DomainError("missing [strata] table");
  for (const auto& [key, value] : doc["strata"].items()) {
    if (!value.is_string()) throw DomainError("stratum '" + key + "' must be a polynomial string");
    Subset s = 0;
    const std::string k = trim(key);
    if (!k.empty()) {
      std::size_t start = 0;
      for (;;) {
        auto comma = k.find(',', start);
        const std::string part = trim(std::string_view(k).substr(start, comma - start));
        auto it = index.find(part);
        if (it == index.end()) throw DomainError("stratum '" + key + "' names unknown divisor '" + part + "'");
        s |= Subset{1} << it->second;
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (strata.count(s)) throw DomainError("stratum '" + key + "' given twice");
    strata.emplace(s, BiPolyUV::parse(value.get<std::string>()));
  }
  return SncModel(name, dimension, std::move(divisors), mode, std::move(strata));
}

SncModel SncModel::from_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_toml(ss.str());
}

SncModel strata_closed_to_open(const SncModel& m) {
  if (m.mode() != StrataMode::Closed) throw DomainError("model is already in open mode");
  std::map<SncModel::Subset, BiPolyUV> open;
  for (const auto& [i, ei] : m.strata()) {
    BiPolyUV acc;
    for (const auto& [j, ej] : m.strata()) {
      if (!contains(j, i)) continue;
      if (std::popcount(j & ~i) % 2 == 0) {
        acc += ej;
      } else {
        acc -= ej;
      }
    }
    open.emplace(i, std::move(acc));
  }
  return SncModel(m.name(), m.dimension(), m.divisors(), StrataMode::Open, std::move(open));
}

SncModel strata_open_to_closed(const SncModel& m) {
  if (m.mode() != StrataMode::Open) throw DomainError("model is already in closed mode");
  std::map<SncModel::Subset, BiPolyUV> closed;
  for (const auto& [i, ei] : m.strata()) {
    BiPolyUV acc;
    for (const auto& [j, ej] : m.strata()) {
      if (contains(j, i)) acc += ej;
    }
    closed.emplace(i, std::move(acc));
  }
  return SncModel(m.name(), m.dimension(), m.divisors(), StrataMode::Closed, std::move(closed));
}

CompletedClass motivic_integral(const SncModel& model) {
  const SncModel m = model.mode() == StrataMode::Open ? model : strata_closed_to_open(model);
  // Over the common denominator prod_i g_{a_i}: the I-term keeps g_{a_i} for i not in I.
  MotivicClass numerator;
  for (const auto& [s, e] : m.strata()) {
    if (e.is_zero()) continue;
    MotivicClass term = MotivicClass::of(stratum_atom(m, s, e, true));
    for (std::size_t i = 0; i < m.divisors().size(); ++i) {
      if (!(s & (SncModel::Subset{1} << i))) term = term * geometric_sum_L(m.divisors()[i].discrepancy);
    }
    numerator += term;
  }
  return CompletedClass{std::move(numerator), all_factors(m)};
}

CompletedClass motivic_integral_from_closed(const SncModel& model) {
  const SncModel m = model.mode() == StrataMode::Closed ? model : strata_open_to_closed(model);
  MotivicClass numerator;
  for (const auto& [s, e] : m.strata()) {
    if (e.is_zero()) continue;
    MotivicClass term = MotivicClass::of(stratum_atom(m, s, e, false));
    for (std::size_t i = 0; i < m.divisors().size(); ++i) {
      const MotivicClass g = geometric_sum_L(m.divisors()[i].discrepancy);
      // b_i - 1 = (1 - g_{a_i}) / g_{a_i}
      term = term * ((s & (SncModel::Subset{1} << i)) ? MotivicClass::point() - g : g);
    }
    numerator += term;
  }
  return CompletedClass{std::move(numerator), all_factors(m)};
}

RatFuncUV stringy_E(const SncModel& m) { return completed_measure_E(motivic_integral(m)); }

RatFuncY stringy_chi(const SncModel& m) {
  const RatFuncUV e = stringy_E(m);
  const LaurentPolyY y = LaurentPolyY::var();
  return RatFuncY(e.numerator().specialize(y, LaurentPolyY(1)), e.denominator_factors(), y);
}

Rational stringy_euler(const SncModel& model) {
  const SncModel m = model.mode() == StrataMode::Open ? model : strata_closed_to_open(model);
  // (a) sum_I e(D_I^o) prod_{i in I} 1/(a_i + 1), with e = E(1, 1)
  Rational closed_formula = 0;
  for (const auto& [s, e] : m.strata()) {
    Rational term = e.evaluate(1, 1);
    for (std::size_t i = 0; i < m.divisors().size(); ++i) {
      if (s & (SncModel::Subset{1} << i)) term /= Rational(m.divisors()[i].discrepancy + 1);
    }
    closed_formula += term;
  }
  // (b) E_st along u = v -> 1: the numerator is a polynomial and g_a(1) = a + 1.
  const RatFuncUV e = stringy_E(m);
  Rational limit = e.numerator().evaluate(1, 1);
  for (const auto& f : e.denominator_factors()) limit /= Rational(f.exponent);
  if (closed_formula != limit) {
    throw ConsistencyError("stringy Euler number routes disagree: " + closed_formula.str() + " vs " + limit.str());
  }
  return closed_formula;
}

bool compare_resolutions(const SncModel& m1, const SncModel& m2) {
  return ratfunc_equal(stringy_E(m1), stringy_E(m2));
}

StringyReport stringy_report(const SncModel& m) {
  StringyReport r{stringy_E(m), stringy_chi(m), stringy_euler(m), std::nullopt, std::nullopt};
  r.e_polynomial = r.e_function.to_polynomial();
  r.chi_polynomial = r.chi.to_polynomial();
  return r;
}

namespace models {

SncModel a1_minimal() {
  const BiPolyUV t = BiPolyUV::uv();
  return SncModel("A1", 2, {{"E1", 0}}, StrataMode::Closed,
                  {{0b0, t + t * t}, {0b1, BiPolyUV::one() + t}});
}

SncModel a1_blown_up() {
  const BiPolyUV t = BiPolyUV::uv();
  return SncModel("A1", 2, {{"E1", 0}, {"F", 1}}, StrataMode::Open,
                  {{0b00, t * t - BiPolyUV::one()}, {0b01, t}, {0b10, t}, {0b11, BiPolyUV::one()}});
}

}  // namespace models

}  // namespace chargenus
