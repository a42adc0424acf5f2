#include "poskit/json_io.hpp"

#include "poskit/errors.hpp"

#include <set>

namespace poskit {

namespace {

void check_keys(const Json& obj, const std::string& what, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw InputError(what + " must be a JSON object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw InputError(what + ": unknown field \"" + key + "\"");
}

const Json& require(const Json& obj, const std::string& what, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(what + ": missing field \"" + key + "\"");
  return *it;
}

Int to_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  throw InputError(what + " must be an integer");
}

int to_small_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw InputError(what + " must be an integer");
  return j.get<int>();
}

IVec to_int_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  IVec out;
  out.reserve(j.size());
  for (const Json& entry : j) out.push_back(to_int(entry, what + " entry"));
  return out;
}

Json int_to_json(const Int& x) { return Json(to_int64(x)); }

Json int_vector_to_json(const IVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

} // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json rational_to_json(const Rat& x) {
  Json j;
  j["num"] = int_to_json(boost::multiprecision::numerator(x));
  j["den"] = int_to_json(boost::multiprecision::denominator(x));
  return j;
}

VarietyModel model_from_json(const Json& j) {
  check_keys(j, "model", {"name", "rank", "divisors", "curves"});
  VarietyModel model;
  model.name = require(j, "model", "name").get<std::string>();
  model.rank = to_small_int(require(j, "model", "rank"), "model.rank");
  for (const Json& label : require(j, "model", "divisors"))
    model.divisor_labels.push_back(label.get<std::string>());
  const Json& curves = require(j, "model", "curves");
  if (!curves.is_array()) throw InputError("model.curves must be an array");
  for (const Json& cj : curves) {
    check_keys(cj, "curve", {"name", "class", "distinguished", "through_sink", "mult_at_sink"});
    CurveRecord c;
    c.name = require(cj, "curve", "name").get<std::string>();
    c.class_vector = to_int_vector(require(cj, "curve", "class"), "curve.class");
    if (cj.contains("distinguished")) c.distinguished = cj["distinguished"].get<bool>();
    if (cj.contains("through_sink")) c.through_sink = cj["through_sink"].get<bool>();
    if (cj.contains("mult_at_sink")) c.mult_at_sink = to_int(cj["mult_at_sink"], "curve.mult_at_sink");
    model.curves.push_back(std::move(c));
  }
  validate_model(model);
  return model;
}

Json model_to_json(const VarietyModel& model) {
  Json j;
  j["name"] = model.name;
  j["rank"] = model.rank;
  j["divisors"] = model.divisor_labels;
  Json curves = Json::array();
  for (const CurveRecord& c : model.curves) {
    Json cj;
    cj["name"] = c.name;
    cj["class"] = int_vector_to_json(c.class_vector);
    cj["distinguished"] = c.distinguished;
    cj["through_sink"] = c.through_sink;
    cj["mult_at_sink"] = int_to_json(c.mult_at_sink);
    curves.push_back(std::move(cj));
  }
  j["curves"] = std::move(curves);
  return j;
}

Fan fan_from_json(const Json& j) {
  check_keys(j, "fan", {"dim", "rays", "max_cones"});
  Fan fan;
  fan.dim = to_small_int(require(j, "fan", "dim"), "fan.dim");
  const Json& rays = require(j, "fan", "rays");
  if (!rays.is_array()) throw InputError("fan.rays must be an array of integer vectors");
  for (const Json& ray : rays) fan.rays.push_back(to_int_vector(ray, "fan ray"));
  const Json& cones = require(j, "fan", "max_cones");
  if (!cones.is_array()) throw InputError("fan.max_cones must be an array of index sets");
  for (const Json& cone : cones) {
    if (!cone.is_array()) throw InputError("fan.max_cones entry must be an array of ray indices");
    std::vector<int> indices;
    for (const Json& idx : cone) indices.push_back(to_small_int(idx, "max_cone index"));
    fan.max_cones.push_back(std::move(indices));
  }
  return fan;
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["dim"] = fan.dim;
  Json rays = Json::array();
  for (const IVec& ray : fan.rays) rays.push_back(int_vector_to_json(ray));
  j["rays"] = std::move(rays);
  j["max_cones"] = fan.max_cones;
  return j;
}

QVec rational_vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  QVec out;
  for (const Json& entry : j) {
    if (entry.is_array()) {
      if (entry.size() != 2)
        throw InputError(what + ": rational entries are [num, den] pairs");
      const Int num = to_int(entry[0], what + " numerator");
      const Int den = to_int(entry[1], what + " denominator");
      if (den == 0) throw InputError(what + ": zero denominator");
      out.emplace_back(num, den);
    } else {
      out.emplace_back(to_int(entry, what + " entry"));
    }
  }
  return out;
}

RationalCone cone_from_json(const Json& j) {
  check_keys(j, "cone", {"dim", "generators"});
  RationalCone cone;
  cone.ambient_dim = to_small_int(require(j, "cone", "dim"), "cone.dim");
  const Json& gens = require(j, "cone", "generators");
  if (!gens.is_array()) throw InputError("cone.generators must be an array");
  for (const Json& g : gens)
    cone.generators.push_back(rational_vector_from_json(g, "cone generator"));
  validate_cone(cone);
  return cone;
}

Json cone_to_json(const RationalCone& cone) {
  Json j;
  j["dim"] = cone.ambient_dim;
  Json gens = Json::array();
  for (const QVec& g : cone.generators) {
    Json row = Json::array();
    for (const Rat& x : g) {
      if (boost::multiprecision::denominator(x) == 1) {
        row.push_back(int_to_json(boost::multiprecision::numerator(x)));
      } else {
        row.push_back(Json::array({int_to_json(boost::multiprecision::numerator(x)),
                                   int_to_json(boost::multiprecision::denominator(x))}));
      }
    }
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  return j;
}

SplittingData splitting_from_json(const Json& j) {
  check_keys(j, "splitting", {"rank", "c1", "per_curve"});
  SplittingData s;
  s.rank = to_small_int(require(j, "splitting", "rank"), "splitting.rank");
  s.c1 = to_int_vector(require(j, "splitting", "c1"), "splitting.c1");
  const Json& per_curve = require(j, "splitting", "per_curve");
  if (!per_curve.is_object()) throw InputError("splitting.per_curve must be an object");
  for (const auto& [name, degrees] : per_curve.items())
    s.per_curve[name] = to_int_vector(degrees, "splitting degrees of '" + name + "'");
  return normalized(std::move(s));
}

Json splitting_to_json(const SplittingData& s) {
  const SplittingData canon = normalized(s);
  Json j;
  j["rank"] = canon.rank;
  j["c1"] = int_vector_to_json(canon.c1);
  Json per_curve = Json::object();
  for (const auto& [name, degrees] : canon.per_curve) per_curve[name] = int_vector_to_json(degrees);
  j["per_curve"] = std::move(per_curve);
  return j;
}

Json report_to_json(const ValidationReport& report) {
  Json j;
  j["pass"] = report.pass;
  Json checks = Json::object();
  for (const auto& [name, ok] : report.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  Json issues = Json::array();
  for (const ValidationIssue& issue : report.issues)
    issues.push_back(Json{{"check", issue.check}, {"detail", issue.detail}});
  j["issues"] = std::move(issues);
  return j;
}

Json walls_to_json(const std::vector<Wall>& walls) {
  Json arr = Json::array();
  for (const Wall& w : walls) {
    Json wj;
    wj["id"] = wall_id(w);
    wj["rays"] = w.ray_indices;
    wj["cones"] = Json::array({w.cone_pair.first, w.cone_pair.second});
    wj["opposite"] = Json::array({w.opposite_rays.first, w.opposite_rays.second});
    wj["relation"] = int_vector_to_json(w.relation_coeffs);
    arr.push_back(std::move(wj));
  }
  return arr;
}

} // namespace poskit
