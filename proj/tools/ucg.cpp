// ucg: classify, inspect and measure universal conformal geometries.
//
//   ucg classify atlas --field fp:5 --dim 2 --out tsv
//   ucg classify table --field rational
//   ucg geom incident --model elliptic --point 1,0,0,1,0 --line 0,1,0,0,1
//   ucg metric distance --geom g.json --line ... --p1 ... --p2 ...
//   ucg examples separation --model hyperbolic --d 1.5
//   ucg verify --suite gamma-orders --field fp:5

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ucg/ucg.hpp"

namespace {

using namespace ucg;
using io::json;

enum class Out { Text, Tsv, Json };

struct Options {
  std::string field = "fp:3";
  std::size_t dim = 2;
  std::string out = "text";
  std::uint64_t seed = 1;
  std::int64_t max_q = 0;
  std::string geom_file, class_json, model;
  std::string point, line, p1, p2, cycle;
  double d = 1.0, radius = 1.0, offset = 0.0;
  std::string angle;
  std::string suite;
  std::vector<std::string> fields;
  bool all = false;

  Out format() const {
    if (out == "json") return Out::Json;
    if (out == "tsv") return Out::Tsv;
    return Out::Text;
  }
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

Vector parse_coords(const Field& f, const std::string& s, const char* flag) {
  require(!s.empty(), ErrorKind::InvalidInput, std::string("missing ") + flag);
  Vector v;
  for (const auto& x : split(s)) v.push_back(parse_scalar(f, x));
  return v;
}

std::vector<double> parse_doubles(const std::string& s, const char* flag) {
  require(!s.empty(), ErrorKind::InvalidInput, std::string("missing ") + flag);
  std::vector<double> v;
  for (const auto& x : split(s)) {
    try {
      v.push_back(std::stod(x));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, std::string("bad number '") + x + "' in " + flag);
    }
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Geometry from --geom, --model or --class (class representative), in that order.
Geometry load_geometry(const Options& o) {
  if (!o.geom_file.empty()) return io::geometry_from_json(io::parse(read_file(o.geom_file)));
  if (!o.model.empty()) return models::model_geometry(models::parse_model(o.model), o.dim);
  if (!o.class_json.empty()) return representative(io::class_from_json(io::parse(o.class_json)));
  fail(ErrorKind::InvalidInput, "no geometry given: use --geom <file>, --model <kind> or --class <json>");
}

std::string describe_class(const GeometryClass& c) {
  std::string s = c.name.value_or("-") + "\t" + io::to_json(c.form).dump() + "\t" + to_string(c.qP) + "\t" +
                  to_string(c.qL);
  return s;
}

// ----------------------------------------------------------------------------------------------

int classify_atlas(const Options& o) {
  const Field f = parse_field(o.field);
  const auto classes = enumerate_classes(f, o.dim);
  switch (o.format()) {
    case Out::Json: {
      json a = json::array();
      for (const auto& c : classes) {
        json j = io::to_json(c);
        if (c.field != "closed") j["representative"] = io::to_json(representative(c));
        a.push_back(j);
      }
      std::cout << json{{"field", f.name()}, {"dim", o.dim}, {"count", classes.size()}, {"classes", a}}.dump(2) << "\n";
      break;
    }
    case Out::Tsv:
      std::cout << "name\tform\tqP\tqL\n";
      for (const auto& c : classes) std::cout << describe_class(c) << "\n";
      break;
    case Out::Text:
      std::cout << classes.size() << " classes of " << o.dim << "-geometries over " << f.name() << "\n";
      for (const auto& c : classes)
        std::cout << "  " << c.name.value_or("-") << "  Q(P)=" << to_string(c.qP) << " Q(L)=" << to_string(c.qL)
                  << "  form " << io::to_json(c.form).dump() << "\n";
      break;
  }
  return 0;
}

int classify_table(const Options& o) {
  const auto t = ck_table(parse_field(o.field));
  if (o.format() == Out::Json)
    std::cout << io::to_json(t).dump(2) << "\n";
  else
    std::cout << to_string(t);
  return 0;
}

int classify_partners(const Options& o) {
  require(!o.class_json.empty(), ErrorKind::InvalidInput, "classify partners needs --class <json>");
  const GeometryClass c = io::class_from_json(io::parse(o.class_json));
  const auto partners = cycle_equivalence_partners(c);
  if (o.format() == Out::Json) {
    json a = json::array();
    for (const auto& p : partners) a.push_back(io::to_json(p));
    std::cout << json{{"class", io::to_json(c)}, {"partners", a}}.dump(2) << "\n";
  } else {
    for (const auto& p : partners) std::cout << describe_class(p) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------------------------------

std::string yes_no(const json& b) {
  if (b.is_null()) return "n/a";
  return b.get<bool>() ? "yes" : "no";
}

int geom_describe(const Options& o) {
  const Geometry g = load_geometry(o);
  const GeometryClass c = classify(g);
  json j = io::to_json(g);
  j["class"] = io::to_json(c);
  j["Q(P)"] = io::to_json(g.Q(g.P()));
  j["Q(L)"] = io::to_json(g.Q(g.L()));
  auto when_supported = [](auto&& fn) -> json {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Unsupported) return nullptr;
      throw;
    }
  };
  j["non_empty"] = when_supported([&] { return non_empty(g); });
  j["non_degenerate"] = when_supported([&] { return non_degenerate_geometry(g); });
  j["witt_index"] = when_supported([&] { return witt_index(g.form()); });
  if (g.field().is_finite()) {
    j["points"] = geometry_points(g).size();
    j["hyperplanes"] = geometry_hyperplanes(g).size();
    j["cycles"] = lie_quadric_points(g).size();
    j["antipodal_classes"] = cayley_klein_points(g).size();
  }
  if (g.field().kind() != FieldKind::CharTwoField)
    j["line_group"] = when_supported([&] { return io::to_json(gamma_class(g)); });
  if (o.format() == Out::Json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "geometry over " << g.field().name() << ", dimension " << g.dim() << "\n"
            << "form\t" << g.form().to_string() << "\n"
            << "P\t" << to_string(g.P()) << "\tQ(P)=" << g.Q(g.P()).to_string() << "\n"
            << "L\t" << to_string(g.L()) << "\tQ(L)=" << g.Q(g.L()).to_string() << "\n"
            << "class\t" << c.name.value_or("-") << "\n"
            << "non-empty\t" << yes_no(j["non_empty"]) << "\n"
            << "non-degenerate\t" << yes_no(j["non_degenerate"]) << "\n";
  if (j.contains("line_group") && !j["line_group"].is_null())
    std::cout << "line group\t" << j["line_group"]["class"].get<std::string>()
              << (j["line_group"]["order"].is_null() ? "" : ", order " + j["line_group"]["order"].dump()) << "\n";
  if (g.field().is_finite())
    std::cout << "points\t" << j["points"] << "\nhyperplanes\t" << j["hyperplanes"] << "\ncycles\t" << j["cycles"]
              << "\n";
  return 0;
}

int geom_points(const Options& o) {
  const Geometry g = load_geometry(o);
  const auto cycles = lie_quadric_points(g);
  if (o.format() == Out::Json) {
    json a = json::array();
    for (const auto& c : cycles) a.push_back({{"cycle", io::to_json(c)}, {"role", to_string(role(g, c))}});
    std::cout << a.dump(2) << "\n";
  } else {
    for (const auto& c : cycles) std::cout << to_string(c) << "\t" << to_string(role(g, c)) << "\n";
  }
  return 0;
}

int geom_incident(const Options& o) {
  const Geometry g = load_geometry(o);
  const Vector a = parse_coords(g.field(), o.point, "--point");
  const Vector b = parse_coords(g.field(), o.line.empty() ? o.cycle : o.line, "--line or --cycle");
  const bool inc = incident(g, a, b);
  if (o.format() == Out::Json) {
    std::cout << json{{"incident", inc}, {"roles", {to_string(role(g, a)), to_string(role(g, b))}}}.dump(2) << "\n";
  } else {
    std::cout << "incident: " << (inc ? "true" : "false") << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------------------------------

int metric_gamma(const Options& o) {
  const Geometry g = load_geometry(o);
  const LineGroupClass c = gamma_class(g);
  json j = io::to_json(c);
  if (!o.line.empty()) {
    const Vector l = parse_coords(g.field(), o.line, "--line");
    j["stabilizer"] = stabilizer_group(g, l).size();
    j["full_stabilizer"] = full_line_stabilizer(line_chart(g, l)).size();
  }
  if (o.format() == Out::Json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "line group: " << to_string(c.tag);
    if (c.order) std::cout << ", order " << *c.order;
    std::cout << "\n";
    if (j.contains("stabilizer"))
      std::cout << "stabilizer: " << j["stabilizer"] << " (with reflections " << j["full_stabilizer"] << ")\n";
  }
  return 0;
}

int metric_distance(const Options& o) {
  const Geometry g = load_geometry(o);
  const Field& f = g.field();
  const Vector l = parse_coords(f, o.line, "--line");
  const MotionElement e = translation_between(g, l, parse_coords(f, o.p1, "--p1"), parse_coords(f, o.p2, "--p2"));
  if (o.format() == Out::Json) {
    std::cout << io::to_json(e).dump(2) << "\n";
  } else {
    std::cout << "distance: " << to_string(e.cls.tag) << " " << to_string(e.normal_form) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------------------------------

json object_json(const models::ModelObject& m) {
  const Geometry g = models::geometry_of(m);
  return {{"model", models::to_string(m.kind)},
          {"kind", models::to_string(m.role_hint)},
          {"params", m.params},
          {"lift", models::to_doubles(m.lift)},
          {"Q", g.Q(m.lift).to_double()},
          {"role", to_string(role(g, m.lift))}};
}

int examples_lift(const Options& o) {
  using namespace ucg::models;
  require(!o.model.empty(), ErrorKind::InvalidInput, "examples lift needs --model");
  const ModelKind k = parse_model(o.model);
  ModelObject m;
  if (!o.point.empty())
    m = lift_point(k, parse_doubles(o.point, "--point"));
  else if (!o.cycle.empty())
    m = lift_cycle(k, parse_doubles(o.cycle, "--cycle"), o.radius);
  else if (!o.line.empty())
    m = lift_line(k, parse_doubles(o.line, "--line"), o.offset);
  else
    fail(ErrorKind::InvalidInput, "examples lift needs --point, --cycle or --line");
  const json j = object_json(m);
  if (o.format() == Out::Json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j["kind"].get<std::string>() << " -> " << to_string(m.lift) << "  Q=" << j["Q"].get<double>()
              << "  role " << j["role"].get<std::string>() << "\n";
  }
  return 0;
}

int examples_separation(const Options& o) {
  using namespace ucg::models;
  require(!o.model.empty(), ErrorKind::InvalidInput, "examples separation needs --model");
  const ModelKind k = parse_model(o.model);
  std::pair<ModelObject, ModelObject> objs;
  if (!o.angle.empty()) {
    objs = cycles_at_angle(k, std::stod(o.angle));
  } else {
    switch (k) {
      case ModelKind::Elliptic: objs = elliptic_points(o.d, o.dim); break;
      case ModelKind::Hyperbolic: objs = hyperbolic_points(o.d, o.dim); break;
      case ModelKind::Parabolic: objs = parabolic_points(o.d, o.dim); break;
      default: fail(ErrorKind::Unsupported, std::string("no point-distance family for the ") + to_string(k) + " model");
    }
  }
  const SeparationCheck c = check_separation(objs.first, objs.second);
  if (o.format() == Out::Json) {
    std::cout << json{{"quantity", c.quantity},     {"value", c.value},
                      {"expected", c.expected},     {"agrees", c.agrees},
                      {"a", object_json(objs.first)}, {"b", object_json(objs.second)}}
                     .dump(2)
              << "\n";
  } else {
    std::ostringstream os;
    os.precision(12);
    os << c.quantity << " = " << c.value << " (expected " << c.expected << ", " << (c.agrees ? "agrees" : "DISAGREES")
       << ")\n";
    std::cout << os.str();
  }
  return c.agrees ? 0 : 1;
}

// ----------------------------------------------------------------------------------------------

int run_verify(const Options& o) {
  std::vector<verify::SuiteReport> reports;
  if (o.all) {
    reports = verify::run_all(o.seed);
  } else {
    require(!o.suite.empty(), ErrorKind::InvalidInput, "verify needs --suite <name> or --all");
    reports.push_back(verify::run_suite(o.suite, o.fields, o.seed));
  }
  bool ok = true;
  json a = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (o.format() == Out::Json)
      a.push_back(verify::to_json(r));
    else
      std::cout << verify::to_text(r);
  }
  if (o.format() == Out::Json) std::cout << (o.all ? a : a[0]).dump(2) << "\n";
  return ok ? 0 : 1;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Precondition: return 2;
    case ErrorKind::Unsupported: return 3;
    case ErrorKind::Internal: return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal conformal geometry toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "rational | fp:<p> | f2 | f4 | approx");
    c->add_option("--dim", o.dim, "geometry dimension n (dim V = n + 3)");
    c->add_option("--out", o.out, "text | tsv | json")->check(CLI::IsMember({"text", "tsv", "json"}));
    c->add_option("--max-q", o.max_q, "largest field order for exhaustive enumeration");
  };
  auto add_geometry = [&](CLI::App* c) {
    c->add_option("--geom", o.geom_file, "geometry JSON file");
    c->add_option("--model", o.model, "real model: elliptic, hyperbolic, parabolic, minkowski, ...");
    c->add_option("--class", o.class_json, "class JSON; its representative is used");
  };

  int (*selected)(const Options&) = nullptr;
  auto bind = [&](CLI::App* c, int (*fn)(const Options&)) { c->callback([&selected, fn] { selected = fn; }); };

  auto* classify_cmd = app.add_subcommand("classify", "classification of geometries");
  classify_cmd->require_subcommand(1);
  auto* atlas = classify_cmd->add_subcommand("atlas", "all classes over a field");
  add_common(atlas);
  bind(atlas, classify_atlas);
  auto* table = classify_cmd->add_subcommand("table", "3x3 table of plane geometries");
  add_common(table);
  bind(table, classify_table);
  auto* partners = classify_cmd->add_subcommand("partners", "cycle-equivalent classes");
  add_common(partners);
  partners->add_option("--class", o.class_json, "class JSON")->required();
  bind(partners, classify_partners);

  auto* geom = app.add_subcommand("geom", "a single geometry");
  geom->require_subcommand(1);
  auto* describe = geom->add_subcommand("describe", "invariants of a geometry");
  auto* points = geom->add_subcommand("points", "all cycles with their roles");
  auto* incident_cmd = geom->add_subcommand("incident", "incidence of two cycles");
  for (auto* c : {describe, points, incident_cmd}) {
    add_common(c);
    add_geometry(c);
  }
  incident_cmd->add_option("--point", o.point, "first cycle, comma-separated");
  incident_cmd->add_option("--line", o.line, "second cycle, comma-separated");
  incident_cmd->add_option("--cycle", o.cycle, "second cycle, comma-separated");
  bind(describe, geom_describe);
  bind(points, geom_points);
  bind(incident_cmd, geom_incident);

  auto* metric = app.add_subcommand("metric", "line groups and distances");
  metric->require_subcommand(1);
  auto* gamma = metric->add_subcommand("gamma", "class of the line group");
  auto* distance = metric->add_subcommand("distance", "oriented distance between two points of a line");
  for (auto* c : {gamma, distance}) {
    add_common(c);
    add_geometry(c);
    c->add_option("--line", o.line, "hyperplane, comma-separated");
  }
  distance->add_option("--p1", o.p1, "first point");
  distance->add_option("--p2", o.p2, "second point");
  bind(gamma, metric_gamma);
  bind(distance, metric_distance);

  auto* examples = app.add_subcommand("examples", "real model geometries");
  examples->require_subcommand(1);
  auto* lift = examples->add_subcommand("lift", "lift a model object to the Lie quadric");
  auto* separation = examples->add_subcommand("separation", "separation against its closed form");
  for (auto* c : {lift, separation}) {
    add_common(c);
    c->add_option("--model", o.model, "elliptic | hyperbolic | parabolic | minkowski | de-sitter | ...")->required();
  }
  lift->add_option("--point", o.point, "point coordinates");
  lift->add_option("--cycle", o.cycle, "cycle center");
  lift->add_option("--radius", o.radius, "signed cycle radius");
  lift->add_option("--line", o.line, "line normal");
  lift->add_option("--offset", o.offset, "line offset");
  separation->add_option("--d", o.d, "distance between the two points");
  separation->add_option("--angle", o.angle, "angle between two cycles instead");
  bind(lift, examples_lift);
  bind(separation, examples_separation);

  auto* verify_cmd = app.add_subcommand("verify", "brute-force verification suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_flag("--all", o.all, "run every suite");
  verify_cmd->add_option("--seed", o.seed, "random seed");
  bind(verify_cmd, run_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  // --field on verify restricts the suite to that field
  if (verify_cmd->parsed() && verify_cmd->count("--field")) o.fields = {o.field};

  try {
    if (o.max_q > 0) default_limits().max_q = o.max_q;
    return selected ? selected(o) : 64;
  } catch (const Error& e) {
    std::cerr << "ucg: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ucg: " << e.what() << "\n";
    return 2;
  }
}
