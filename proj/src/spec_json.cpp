#include "oblivcrn/spec_json.hpp"

#include <set>

#include "json.hpp"

namespace obliv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw SpecJsonError("spec json: " + msg); }

void expect_fields(const json& obj, const std::string& where,
                   const std::set<std::string>& required,
                   const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key)) fail(where + ": unknown field '" + key + "'");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) fail(where + ": missing field '" + key + "'");
}

Rational parse_rational_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where + ": " + e.what());
    }
  }
  fail(where + " must be a rational string or integer");
}

long long parse_int_value(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<long long>();
}

std::string class_key(std::span<const long long> cls) {
  std::string out;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cls[i]);
  }
  return out;
}

QuiltAffine parse_piece(const json& obj, int dim) {
  expect_fields(obj, "piece", {"gradient", "period", "offsets"});
  if (!obj["gradient"].is_array()) fail("piece gradient must be an array");
  if (static_cast<int>(obj["gradient"].size()) != dim)
    fail("piece gradient must have one entry per dimension");
  std::vector<Rational> gradient;
  for (const auto& g : obj["gradient"]) gradient.push_back(parse_rational_value(g, "gradient"));
  long long period = parse_int_value(obj["period"], "period");
  if (period < 1) fail("period must be >= 1");
  if (period > 1000) fail("period too large");

  QuiltAffine g = QuiltAffine::make(std::move(gradient), period,
                                    std::vector<Rational>(
                                        [&] {
                                          long long n = 1;
                                          for (int i = 0; i < dim; ++i) n *= period;
                                          return n;
                                        }()));
  if (!obj["offsets"].is_object()) fail("offsets must be an object");
  std::set<std::string> seen;
  for (const auto& cls : quilt_classes(g)) seen.insert(class_key(cls));
  std::set<std::string> got;
  for (const auto& [key, value] : obj["offsets"].items()) {
    if (!seen.count(key)) fail("offsets: unexpected class '" + key + "'");
    if (!got.insert(key).second) fail("offsets: duplicate class '" + key + "'");
  }
  for (const auto& cls : quilt_classes(g)) {
    std::string key = class_key(cls);
    if (!obj["offsets"].contains(key)) fail("offsets: missing class '" + key + "'");
    g.offsets[g.class_index(cls)] = parse_rational_value(obj["offsets"][key], "offset " + key);
  }
  return g;
}

ObliviousSpec parse_spec(const json& obj, std::vector<std::pair<int, long long>> fixed) {
  expect_fields(obj, "spec", {"dimension", "floor", "pieces"}, {"restrictions"});
  long long dim_ll = parse_int_value(obj["dimension"], "dimension");
  if (dim_ll < 0 || dim_ll > 16) fail("dimension out of range");
  int dim = static_cast<int>(dim_ll);

  if (!obj["floor"].is_array()) fail("floor must be an array");
  std::vector<long long> floor;
  for (const auto& v : obj["floor"]) floor.push_back(parse_int_value(v, "floor entry"));

  if (!obj["pieces"].is_array() || obj["pieces"].empty()) fail("pieces must be a nonempty array");
  std::vector<QuiltAffine> pieces;
  for (const auto& p : obj["pieces"]) pieces.push_back(parse_piece(p, dim));

  std::vector<ObliviousSpec::Restriction> restrictions;
  if (obj.contains("restrictions")) {
    if (!obj["restrictions"].is_array()) fail("restrictions must be an array");
    for (const auto& r : obj["restrictions"]) {
      expect_fields(r, "restriction", {"axis", "value", "spec"});
      ObliviousSpec::Restriction entry;
      entry.axis = static_cast<int>(parse_int_value(r["axis"], "restriction axis"));
      entry.value = parse_int_value(r["value"], "restriction value");
      std::vector<std::pair<int, long long>> child_fixed = fixed;
      child_fixed.emplace_back(entry.axis, entry.value);
      entry.spec = std::make_shared<const ObliviousSpec>(parse_spec(r["spec"], child_fixed));
      restrictions.push_back(std::move(entry));
    }
  }
  try {
    return ObliviousSpec::make(dim, std::move(floor), std::move(pieces),
                               std::move(restrictions), std::move(fixed));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

json piece_to_json(const QuiltAffine& g) {
  json obj;
  obj["gradient"] = json::array();
  for (const auto& v : g.gradient) obj["gradient"].push_back(v.str());
  obj["period"] = g.period;
  obj["offsets"] = json::object();
  for (const auto& cls : quilt_classes(g))
    obj["offsets"][class_key(cls)] = g.offset_at(cls).str();
  return obj;
}

json spec_to_json(const ObliviousSpec& s) {
  json obj;
  obj["dimension"] = s.dim();
  obj["floor"] = s.floor();
  obj["pieces"] = json::array();
  for (const auto& g : s.pieces()) obj["pieces"].push_back(piece_to_json(g));
  if (!s.restrictions().empty()) {
    obj["restrictions"] = json::array();
    for (const auto& r : s.restrictions()) {
      json entry;
      entry["axis"] = r.axis;
      entry["value"] = r.value;
      entry["spec"] = spec_to_json(*r.spec);
      obj["restrictions"].push_back(std::move(entry));
    }
  }
  return obj;
}

}  // namespace

ObliviousSpec parse_spec_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return parse_spec(doc, {});
}

std::string spec_to_json_text(const ObliviousSpec& s, int indent) {
  return spec_to_json(s).dump(indent);
}

Semilinear1D parse_sl1d_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  expect_fields(doc, "function", {"pieces"});
  if (!doc["pieces"].is_array() || doc["pieces"].empty())
    fail("pieces must be a nonempty array");
  std::vector<Sl1dPiece> pieces;
  for (const auto& p : doc["pieces"]) {
    expect_fields(p, "piece", {"alpha", "beta"}, {"lo", "hi", "mod"});
    Sl1dPiece piece;
    if (p.contains("lo")) piece.lo = parse_int_value(p["lo"], "lo");
    if (p.contains("hi")) piece.hi = parse_int_value(p["hi"], "hi");
    if (p.contains("mod")) {
      if (!p["mod"].is_array() || p["mod"].size() != 2)
        fail("mod must be [modulus, residue]");
      piece.mod = {parse_int_value(p["mod"][0], "modulus"),
                   parse_int_value(p["mod"][1], "residue")};
    }
    piece.alpha = parse_rational_value(p["alpha"], "alpha");
    piece.beta = parse_rational_value(p["beta"], "beta");
    pieces.push_back(std::move(piece));
  }
  try {
    return Semilinear1D::make(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string sl1d_to_json_text(const Semilinear1D& f, int indent) {
  json doc;
  doc["pieces"] = json::array();
  for (const auto& p : f.pieces) {
    json obj;
    if (p.lo != 0) obj["lo"] = p.lo;
    if (p.hi) obj["hi"] = *p.hi;
    if (p.mod) obj["mod"] = {p.mod->first, p.mod->second};
    obj["alpha"] = p.alpha.str();
    obj["beta"] = p.beta.str();
    doc["pieces"].push_back(std::move(obj));
  }
  return doc.dump(indent);
}

}  // namespace obliv
