#include "commands.hpp"

#include <cstdlib>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chargenus/error.hpp"
#include "chargenus/stringy.hpp"
#include "evaluate.hpp"

namespace chargenus::cli {

namespace {

using Json = nlohmann::ordered_json;

GenusSeries parse_series(const std::string& s) {
  if (s == "chi_y") return GenusSeries::ChiY;
  if (s == "todd") return GenusSeries::Todd;
  if (s == "L") return GenusSeries::L;
  if (s == "chern") return GenusSeries::Chern;
  throw ExprError("unknown series '" + s + "'");
}

MeasureKind parse_kind(const std::string& s) {
  if (s == "E") return MeasureKind::E;
  if (s == "Hc") return MeasureKind::Hc;
  if (s == "chi_y") return MeasureKind::ChiY;
  if (s == "weight") return MeasureKind::Weight;
  if (s == "euler") return MeasureKind::Euler;
  throw ExprError("unknown measure kind '" + s + "'");
}

Json coefficient_list(const LaurentPolyY& p) {
  Json list = Json::array();
  for (const auto& [k, c] : p.terms()) list.push_back(Json::array({k, c.str()}));
  return list;
}

Json ratfunc_json(const RatFuncUV& f) {
  Json factors = Json::array();
  for (const auto& g : f.denominator_factors()) factors.push_back(g.expand(BiPolyUV::uv()).str());
  return Json{{"numerator", f.numerator().str()}, {"denominator_factors", factors}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int cmd_genus(const GenusOptions& o, std::ostream& out, AtomRegistry& registry) {
  const auto series = parse_series(o.series);
  const auto expr = parse_expr(o.expr, registry);
  LaurentPolyY value = evaluate_genus(*expr, series, registry);
  if (o.y_value) value = LaurentPolyY(value.evaluate(Rational::parse(*o.y_value)));
  if (!o.json) {
    out << value.str() << "\n";
    return kSuccess;
  }
  Json j{{"expr", print_expr(*expr)}, {"series", o.series}};
  if (o.y_value) j["y_value"] = Rational::parse(*o.y_value).str();
  j["coefficients"] = coefficient_list(value);
  emit(out, j);
  return kSuccess;
}

int cmd_class(const ClassOptions& o, std::ostream& out, AtomRegistry& registry) {
  ClassVariant variant;
  if (o.variant == "normalized") {
    variant = ClassVariant::Normalized;
  } else if (o.variant == "unnormalized") {
    variant = ClassVariant::Unnormalized;
  } else {
    throw ExprError("unknown variant '" + o.variant + "'");
  }
  const auto expr = parse_expr(o.expr, registry);
  const auto x = evaluate_smooth(*expr, registry).variety;
  const auto cls = hirzebruch_class(x, variant);
  if (!o.json) {
    out << cls.str() << "\n";
    return kSuccess;
  }
  Json comps = Json::array();
  for (int d = 0; d <= x.dimension; ++d) {
    const auto c = cls.component(d);
    if (!c.is_zero()) comps.push_back(Json::array({d, c.str()}));
  }
  emit(out, Json{{"expr", print_expr(*expr)}, {"variant", o.variant}, {"generators", x.ring->generator_names()},
                 {"components", comps}});
  return kSuccess;
}

int cmd_measure(const MeasureOptions& o, std::ostream& out, AtomRegistry& registry) {
  const auto kind = parse_kind(o.kind);
  const auto expr = parse_expr(o.expr, registry);
  const auto cls = evaluate_motivic(*expr, registry);
  const auto text = measure_str(measure(cls, kind), kind);
  if (!o.json) {
    out << text << "\n";
    return kSuccess;
  }
  emit(out, Json{{"expr", print_expr(*expr)}, {"class", cls.str()}, {"kind", o.kind}, {"value", text}});
  return kSuccess;
}

int cmd_stringy(const StringyOptions& o, std::ostream& out) {
  const auto model = SncModel::from_toml_file(o.path);
  const auto rep = stringy_report(model);
  std::optional<SncModel> other;
  if (o.compare) other = SncModel::from_toml_file(*o.compare);
  const std::string e_text = rep.e_polynomial ? rep.e_polynomial->str() : rep.e_function.str();
  const std::string chi_text = rep.chi_polynomial ? rep.chi_polynomial->str() : rep.chi.str();
  if (!o.json) {
    out << "stringy_E = " << e_text << "; euler = " << rep.euler.str() << "\n";
    out << "stringy_chi = " << chi_text << "\n";
    out << "is_polynomial: " << (rep.is_polynomial() ? "true" : "false") << "\n";
    if (other) out << "equal: " << (compare_resolutions(model, *other) ? "true" : "false") << "\n";
    return kSuccess;
  }
  Json j{{"model", model.name()}};
  j["stringy_E"] = rep.e_polynomial ? Json{{"numerator", rep.e_polynomial->str()}, {"denominator_factors", Json::array()}}
                                    : ratfunc_json(rep.e_function);
  j["stringy_chi"] = chi_text;
  j["stringy_euler"] = rep.euler.str();
  j["is_polynomial"] = rep.is_polynomial();
  if (other) {
    j["compare_model"] = other->name();
    j["equal"] = compare_resolutions(model, *other);
  }
  emit(out, j);
  return kSuccess;
}

void load_atoms_from_environment(AtomRegistry& registry) {
  const char* path = std::getenv("CHARGENUS_ATOMS");
  if (path && *path) registry.load_toml_file(path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, AtomRegistry& registry) {
  CLI::App app{"Exact chi_y-genus, characteristic class and motivic calculator", "chargenus"};
  app.require_subcommand(1);

  GenusOptions genus;
  auto* g = app.add_subcommand("genus", "Genus of a variety expression");
  g->add_option("expr", genus.expr, "Variety expression, e.g. \"P(2)*P(1)\"")->required();
  g->add_option("--series", genus.series, "chi_y | todd | L | chern")
      ->check(CLI::IsMember({"chi_y", "todd", "L", "chern"}));
  g->add_option("--y-value", genus.y_value, "Evaluate at a rational y = p/q");
  g->add_flag("--json", genus.json);

  ClassOptions cls;
  auto* c = app.add_subcommand("class", "Hirzebruch class by graded component");
  c->add_option("expr", cls.expr)->required();
  c->add_option("--variant", cls.variant, "normalized | unnormalized")
      ->check(CLI::IsMember({"normalized", "unnormalized"}));
  c->add_flag("--json", cls.json);

  MeasureOptions meas;
  auto* m = app.add_subcommand("measure", "Motivic measure of a K0 expression");
  m->add_option("expr", meas.expr)->required();
  m->add_option("--kind", meas.kind, "E | Hc | chi_y | weight | euler")
      ->check(CLI::IsMember({"E", "Hc", "chi_y", "weight", "euler"}));
  m->add_flag("--json", meas.json);

  StringyOptions str;
  auto* s = app.add_subcommand("stringy", "Stringy invariants of an SNC model file");
  s->add_option("path", str.path)->required();
  s->add_option("--compare", str.compare, "Second resolution of the same singularity");
  s->add_flag("--json", str.json);

  std::string suite;
  auto* v = app.add_subcommand("verify", "Run an identity suite");
  v->add_option("suite", suite, "ghrr | comp-twist | blowup | milnor | stringy-a1 | all")
      ->required()
      ->check(CLI::IsMember(verify_suites()));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (g->parsed()) return cmd_genus(genus, out, registry);
    if (c->parsed()) return cmd_class(cls, out, registry);
    if (m->parsed()) return cmd_measure(meas, out, registry);
    if (s->parsed()) return cmd_stringy(str, out);
    if (v->parsed()) return cmd_verify(suite, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ExprError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kUsageError;
}

}  // namespace chargenus::cli
