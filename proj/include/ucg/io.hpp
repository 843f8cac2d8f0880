#pragma once

// JSON serialization.
//
//   field          "rational" | "fp:<p>" | "f2" | "f4" | "approx"
//   scalar         string ("3", "-1/2", "t+1") or number
//   form           {"dim": n, "coeffs": [[i, j, value], ...]} with 0-based i <= j, or [a1, ..., an]
//   geometry       {"field", "form", "P", "L"}
//   motion         {"class", "order", "normal_form", "matrix"}
//   class          {"field", "dim", "form": {"kind", ...}, "qP", "qL", "name"}

#include <json.hpp>
#include <string>
#include <vector>

#include "ucg/classify.hpp"
#include "ucg/geometry.hpp"
#include "ucg/metric.hpp"
#include "ucg/quadform.hpp"

namespace ucg::io {

using json = nlohmann::json;

inline json to_json(const Scalar& x) {
  if (x.field().kind() == FieldKind::ApproxReal) return x.to_double();
  return x.to_string();
}

inline Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_string()) return parse_scalar(f, j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_number_float()) {
    require(f.kind() == FieldKind::ApproxReal, ErrorKind::InvalidInput,
            "floating-point scalar for the exact field " + f.name() + "; write it as a string fraction");
    return f.from_double(j.get<double>());
  }
  fail(ErrorKind::InvalidInput, "expected a scalar, got " + j.dump());
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vector vector_from_json(const Field& f, const json& j) {
  require(j.is_array(), ErrorKind::InvalidInput, "expected a vector, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline Matrix matrix_from_json(const Field& f, const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::InvalidInput, "expected a matrix, got " + j.dump());
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, r));
  return Matrix::from_rows(f, rows, rows.front().size());
}

inline json to_json(const QuadraticForm& q) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      if (!q.coeff(i, j).is_zero()) coeffs.push_back(json::array({i, j, to_json(q.coeff(i, j))}));
  return {{"dim", q.dim()}, {"coeffs", coeffs}};
}

inline QuadraticForm form_from_json(const Field& f, const json& j) {
  if (j.is_array()) return QuadraticForm::diagonal(f, vector_from_json(f, j));
  require(j.is_object() && j.contains("dim") && j.contains("coeffs"), ErrorKind::InvalidInput,
          "a form is {\"dim\", \"coeffs\"} or a diagonal list");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (const auto& t : j.at("coeffs")) {
    require(t.is_array() && t.size() == 3, ErrorKind::InvalidInput, "coefficient entries are [i, j, value]");
    const auto a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>();
    require(a < dim && b < dim, ErrorKind::InvalidInput, "coefficient index out of range");
    terms.emplace_back(std::min(a, b), std::max(a, b), scalar_from_json(f, t[2]));
  }
  return QuadraticForm::from_terms(f, dim, terms);
}

inline json to_json(const Geometry& g) {
  return {{"field", g.field().name()}, {"form", to_json(g.form())}, {"P", to_json(g.P())}, {"L", to_json(g.L())}};
}

inline Geometry geometry_from_json(const json& j) {
  require(j.is_object() && j.contains("field") && j.contains("form") && j.contains("P") && j.contains("L"),
          ErrorKind::InvalidInput, "a geometry is {\"field\", \"form\", \"P\", \"L\"}");
  const Field f = parse_field(j.at("field").get<std::string>());
  return new_geometry(form_from_json(f, j.at("form")), vector_from_json(f, j.at("P")), vector_from_json(f, j.at("L")));
}

inline LineGroupTag parse_line_group_tag(const std::string& s) {
  for (auto t : {LineGroupTag::NonSplitTorus, LineGroupTag::Additive, LineGroupTag::SplitTorus})
    if (s == to_string(t)) return t;
  fail(ErrorKind::InvalidInput, "unknown line group '" + s + "'");
}

inline json to_json(const LineGroupClass& c) {
  json j{{"class", to_string(c.tag)}};
  j["order"] = c.order ? json(*c.order) : json(nullptr);
  return j;
}

inline json to_json(const MotionElement& e) {
  json j = to_json(e.cls);
  j["normal_form"] = to_json(e.normal_form);
  j["matrix"] = to_json(e.matrix);
  return j;
}

/// Rebuilds a motion on a known chart; the stored matrix must agree with the normal form.
inline MotionElement motion_from_json(const LineChart& chart, const json& j) {
  const Field& f = chart.form.field();
  require(parse_line_group_tag(j.at("class").get<std::string>()) == chart.cls.tag, ErrorKind::InvalidInput,
          "incompatible lines: the motion belongs to a different line group");
  MotionElement e = make_motion(chart, vector_from_json(f, j.at("normal_form")));
  if (j.contains("matrix"))
    require(matrix_from_json(f, j.at("matrix")) == e.matrix, ErrorKind::InvalidInput,
            "motion matrix does not match its normal form");
  return e;
}

inline SquareClass parse_square_class(const std::string& s) {
  if (s == "0") return SquareClass::Zero;
  if (s == "1") return SquareClass::Unit;
  if (s == "e" || s == "-1") return SquareClass::NonResidue;
  fail(ErrorKind::InvalidInput, "unknown square class '" + s + "' (expected 0, 1 or e)");
}

inline json to_json(const FormInvariant& f) {
  json j{{"kind", to_string(f.kind)}};
  switch (f.kind) {
    case FormInvariantKind::Signature:
      j["positive"] = f.positive;
      j["negative"] = f.negative;
      break;
    case FormInvariantKind::Determinant: j["det"] = to_string(f.det); break;
    case FormInvariantKind::Arf: j["arf"] = f.arf; break;
    case FormInvariantKind::Closed: break;
  }
  return j;
}

inline FormInvariant form_invariant_from_json(const json& j) {
  FormInvariant f;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "signature") {
    f.kind = FormInvariantKind::Signature;
    f.positive = j.at("positive").get<std::size_t>();
    f.negative = j.at("negative").get<std::size_t>();
  } else if (kind == "det") {
    f.kind = FormInvariantKind::Determinant;
    f.det = parse_square_class(j.at("det").get<std::string>());
  } else if (kind == "arf") {
    f.kind = FormInvariantKind::Arf;
    f.arf = j.at("arf").get<int>();
  } else if (kind == "closed") {
    f.kind = FormInvariantKind::Closed;
  } else {
    fail(ErrorKind::InvalidInput, "unknown form invariant kind '" + kind + "'");
  }
  return f;
}

inline json to_json(const GeometryClass& c) {
  json j{{"field", c.field},
         {"dim", c.geom_dim},
         {"form", to_json(c.form)},
         {"qP", to_string(c.qP)},
         {"qL", to_string(c.qL)}};
  j["name"] = c.name ? json(*c.name) : json(nullptr);
  return j;
}

inline GeometryClass class_from_json(const json& j) {
  require(j.is_object(), ErrorKind::InvalidInput, "a class is a JSON object");
  GeometryClass c;
  c.field = j.at("field").get<std::string>();
  c.geom_dim = j.at("dim").get<std::size_t>();
  c.form = form_invariant_from_json(j.at("form"));
  c.qP = parse_square_class(j.at("qP").get<std::string>());
  c.qL = parse_square_class(j.at("qL").get<std::string>());
  if (j.contains("name") && j.at("name").is_string()) c.name = j.at("name").get<std::string>();
  return c;
}

inline json to_json(const CayleyKleinTable& t) {
  json names = json::array();
  for (const auto& row : t.names) names.push_back(json(row));
  return {{"labels", json(t.labels)}, {"names", names}};
}

inline CayleyKleinTable table_from_json(const json& j) {
  CayleyKleinTable t;
  t.labels = j.at("labels").get<std::array<std::string, 3>>();
  t.names = j.at("names").get<std::array<std::array<std::string, 3>, 3>>();
  return t;
}

/// Wraps nlohmann parse errors as input errors.
inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
  }
}

}  // namespace ucg::io
