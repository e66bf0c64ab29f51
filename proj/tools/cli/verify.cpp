#include <functional>

#include <nlohmann/json.hpp>

#include "chargenus/catalog.hpp"
#include "chargenus/char_class.hpp"
#include "chargenus/error.hpp"
#include "chargenus/stringy.hpp"
#include "commands.hpp"

namespace chargenus::cli {

namespace {

using Json = nlohmann::ordered_json;

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  template <class T>
  void equal(const std::string& what, const T& actual, const T& expected) {
    Json c{{"check", what}, {"passed", actual == expected}};
    if (!(actual == expected)) {
      c["expected"] = text(expected);
      c["actual"] = text(actual);
    }
    passed_ = passed_ && actual == expected;
    checks_.push_back(std::move(c));
  }

  void truth(const std::string& what, bool ok) {
    passed_ = passed_ && ok;
    checks_.push_back(Json{{"check", what}, {"passed", ok}});
  }

  /// Runs `body`, recording an exception as a failed check.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      passed_ = false;
      checks_.push_back(Json{{"check", what}, {"passed", false}, {"error", e.what()}});
    }
  }

  bool passed() const { return passed_; }
  Json report() const { return Json{{"suite", name_}, {"passed", passed_}, {"checks", checks_}}; }

 private:
  static std::string text(const LaurentPolyY& p) { return p.str(); }
  static std::string text(const BiPolyUV& p) { return p.str(); }
  static std::string text(const Rational& r) { return r.str(); }
  static std::string text(const CoeffY& c) { return c.str(); }
  static std::string text(const RingElement& e) { return e.str(); }

  std::string name_;
  bool passed_ = true;
  Json checks_ = Json::array();
};

LaurentPolyY alternating(int n) {
  LaurentPolyY s;
  for (int k = 0; k <= n; ++k) s += LaurentPolyY::monomial(k % 2 == 0 ? 1 : -1, k);
  return s;
}

Suite suite_ghrr() {
  Suite s("ghrr");
  s.guarded("projective spaces", [&] {
    for (int n = 0; n <= 8; ++n) {
      const auto chi = chi_y(ring_projective(n));
      const std::string p = "P" + std::to_string(n);
      s.equal("chi_y(" + p + ")", chi, alternating(n));
      s.equal("chi_{-1}(" + p + ") = e", chi.evaluate(-1), Rational(n + 1));
      s.equal("chi_0(" + p + ")", chi.evaluate(0), Rational(1));
      s.equal("chi_1(" + p + ")", chi.evaluate(1), Rational(n % 2 == 0 ? 1 : 0));
    }
  });
  s.guarded("catalog Euler numbers", [&] {
    for (const auto& entry : standard_catalog(6)) {
      const auto& x = entry.variety;
      s.equal("chi_{-1}(" + entry.name + ") = e", chi_y(x).evaluate(-1), measure_euler(entry.motive));
    }
  });
  return s;
}

Suite suite_comp_twist() {
  Suite s("comp-twist");
  s.guarded("catalog", [&] {
    for (const auto& entry : standard_catalog(4)) {
      const auto& x = entry.variety;
      const auto unnorm = hirzebruch_class(x, ClassVariant::Unnormalized);
      const auto norm = hirzebruch_class(x, ClassVariant::Normalized);
      s.equal("twist(T~_y(" + entry.name + ")) = T_y", twist_td1py(unnorm, x), norm);
      s.equal("degree 0 of " + entry.name, integrate(x, unnorm), integrate(x, norm));
    }
  });
  return s;
}

Suite suite_blowup() {
  Suite s("blowup");
  s.guarded("blow-up of P2 at a point", [&] {
    const auto chi = blowup_chi_y(chi_y(ring_projective(2)), chi_y(ring_projective(0)), 2);
    s.equal("blowup_chi_y(P2, pt, 2)", chi, LaurentPolyY::parse("1 - 2*y + y^2"));
    const auto p1 = ring_projective(1);
    s.equal("equals chi_y(P1*P1)", chi, chi_y(ring_product(p1, p1)));
    auto& reg = AtomRegistry::global();
    const auto p2 = MotivicClass::of(reg.projective_space(2));
    s.truth("E([Bl] - [P1]) = E([P2] - [pt])",
            verify_blowup_identity(p2 + MotivicClass::lefschetz(), MotivicClass::of(reg.projective_space(1)), p2,
                                   MotivicClass::point()));
    s.equal("chi_y measure of [P2] + L", measure_chi_y(p2 + MotivicClass::lefschetz()), chi);
    s.equal("arithmetic genus unchanged", chi.evaluate(0), Rational(1));
  });
  return s;
}

Suite suite_milnor() {
  Suite s("milnor");
  s.guarded("H_{n,m}", [&] {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= n; ++m) {
        const auto x = ring_product(ring_projective(n), ring_projective(m));
        const auto hs = hyperplane_classes(x);
        const auto chi = chi_y_hypersurface(x, hs[0] + hs[1]);
        s.equal("H_{" + std::to_string(n) + "," + std::to_string(m) + "}", chi,
                chi_y(ring_projective(n - 1)) * chi_y(ring_projective(m)));
      }
    }
  });
  return s;
}

Suite suite_stringy_a1() {
  Suite s("stringy-a1");
  s.guarded("A1", [&] {
    const auto a = models::a1_minimal();
    const auto b = models::a1_blown_up();
    const auto expected = BiPolyUV::parse("u*v + u^2*v^2");
    const auto ea = stringy_report(a), eb = stringy_report(b);
    s.truth("minimal resolution is polynomial", ea.is_polynomial());
    s.truth("blown-up resolution is polynomial", eb.is_polynomial());
    if (ea.e_polynomial) s.equal("E_st (minimal)", *ea.e_polynomial, expected);
    if (eb.e_polynomial) s.equal("E_st (blown up)", *eb.e_polynomial, expected);
    s.truth("resolutions agree", compare_resolutions(a, b));
    s.equal("euler (minimal)", ea.euler, Rational(2));
    s.equal("euler (blown up)", eb.euler, Rational(2));
  });
  return s;
}

const std::vector<std::pair<std::string, std::function<Suite()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Suite()>>> r = {
      {"ghrr", suite_ghrr},       {"comp-twist", suite_comp_twist}, {"blowup", suite_blowup},
      {"milnor", suite_milnor}, {"stringy-a1", suite_stringy_a1},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  Json suites = Json::array();
  bool ok = true;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    const Suite result = fn();
    ok = ok && result.passed();
    suites.push_back(result.report());
  }
  if (!found) throw DomainError("unknown suite '" + suite + "'");
  out << Json{{"suite", suite}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  return ok ? kSuccess : kComputationError;
}

}  // namespace chargenus::cli
