#include "traverse/scene_io.hpp"

#include "traverse/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace traverse {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Parse, "scene: " + what); }

Rational to_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return make_rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      return make_rational(j[0].get<long>(), j[1].get<long>());
    }
  } catch (const std::invalid_argument&) {
    schema_error(where + ": zero denominator");
  } catch (const Error&) {
    schema_error(where + ": malformed rational");
  }
  schema_error(where + ": expected a rational ([num, den], integer or \"p/q\")");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + ": missing \"" + key + "\"");
  return *it;
}

std::pair<Rational, Rational> to_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where + ": expected a pair");
  return {to_rational(j[0], where + "[0]"), to_rational(j[1], where + "[1]")};
}

BoundaryComponent to_component(const json& j, ComponentRole role, const std::string& where) {
  BoundaryComponent c;
  c.role = role;
  c.inside_sign = role == ComponentRole::Outer ? 1 : -1;
  if (auto it = j.find("inside_sign"); it != j.end()) {
    if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != -1)) {
      schema_error(where + ".inside_sign: expected 1 or -1");
    }
    c.inside_sign = it->get<int>();
  }
  const json& curve = member(j, "curve", where);
  const json& type = member(curve, "type", where + ".curve");
  if (type == "circle") {
    auto [cx, cy] = to_pair(member(curve, "center", where + ".curve"), where + ".curve.center");
    Rational r = to_rational(member(curve, "radius", where + ".curve"), where + ".curve.radius");
    if (r <= 0) schema_error(where + ".curve.radius: must be positive");
    c.implicit = BPoly::circle(cx, cy, r);
    c.circle = Circle{cx, cy, r};
  } else if (type == "polynomial") {
    const json& coeffs = member(curve, "coeffs", where + ".curve");
    if (!coeffs.is_array()) schema_error(where + ".curve.coeffs: expected an array");
    std::map<BPoly::Exponent, Rational> terms;
    for (const auto& term : coeffs) {
      if (!term.is_array() || term.size() != 4 || !term[0].is_number_integer() || !term[1].is_number_integer()) {
        schema_error(where + ".curve.coeffs: each term is [i, j, num, den]");
      }
      const int i = term[0].get<int>(), k = term[1].get<int>();
      if (i < 0 || k < 0) schema_error(where + ".curve.coeffs: negative exponent");
      terms[{i, k}] += to_rational(json::array({term[2], term[3]}), where + ".curve.coeffs");
    }
    c.implicit = BPoly(terms);
    if (c.implicit.is_zero()) schema_error(where + ".curve.coeffs: zero polynomial");
  } else {
    schema_error(where + ".curve.type: expected \"circle\" or \"polynomial\"");
  }
  return c;
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Scene parse_scene(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("scene: invalid JSON: ") + e.what());
  }
  try {
    Scene scene;
    const json& field = member(doc, "field", "scene");
    const json& kind = member(field, "kind", "field");
    if (kind == "constant") {
      auto [dx, dy] = to_pair(member(field, "direction", "field"), "field.direction");
      scene.field = Field::constant(dx, dy);
    } else if (kind == "radial") {
      auto [cx, cy] = to_pair(member(field, "center", "field"), "field.center");
      scene.field = Field::radial(cx, cy);
    } else {
      schema_error("field.kind: expected \"constant\" or \"radial\"");
    }
    scene.outer = to_component(member(doc, "outer", "scene"), ComponentRole::Outer, "outer");
    if (auto it = doc.find("holes"); it != doc.end()) {
      if (!it->is_array()) schema_error("holes: expected an array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        scene.holes.push_back(to_component((*it)[i], ComponentRole::Hole, "holes[" + std::to_string(i) + "]"));
      }
    }
    const json& bbox = member(doc, "bbox", "scene");
    if (!bbox.is_array() || bbox.size() != 4) schema_error("bbox: expected [xmin, ymin, xmax, ymax]");
    scene.bbox = {to_rational(bbox[0], "bbox[0]"), to_rational(bbox[1], "bbox[1]"), to_rational(bbox[2], "bbox[2]"),
                  to_rational(bbox[3], "bbox[3]")};
    return scene;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("scene: ") + e.what());
  }
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read scene file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string scene_to_json(const Scene& scene) {
  auto component = [](const BoundaryComponent& c) {
    nlohmann::ordered_json j;
    if (c.circle) {
      j["curve"] = {{"type", "circle"},
                    {"center", {rational_json(c.circle->cx), rational_json(c.circle->cy)}},
                    {"radius", rational_json(c.circle->radius)}};
    } else {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& [e, q] : c.implicit.terms()) {
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
          throw Error(ErrorCode::InvalidArgument, "coefficient too large for the scene format");
        }
        coeffs.push_back({e.first, e.second, q.get_num().get_si(), q.get_den().get_si()});
      }
      j["curve"] = {{"type", "polynomial"}, {"coeffs", coeffs}};
    }
    j["inside_sign"] = c.inside_sign;
    return j;
  };
  nlohmann::ordered_json j;
  if (scene.field.kind == Field::Kind::Constant) {
    j["field"] = {{"kind", "constant"}, {"direction", {rational_json(scene.field.x), rational_json(scene.field.y)}}};
  } else {
    j["field"] = {{"kind", "radial"}, {"center", {rational_json(scene.field.x), rational_json(scene.field.y)}}};
  }
  j["outer"] = component(scene.outer);
  j["holes"] = nlohmann::ordered_json::array();
  for (const auto& h : scene.holes) j["holes"].push_back(component(h));
  j["bbox"] = {rational_json(scene.bbox.xmin), rational_json(scene.bbox.ymin), rational_json(scene.bbox.xmax),
               rational_json(scene.bbox.ymax)};
  return j.dump(2);
}

}  // namespace traverse
