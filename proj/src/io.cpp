#include "trispec/io.hpp"

#include <fstream>
#include <sstream>

#include "trispec/error.hpp"

namespace trispec {

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");
  if (doc.contains("schema") && doc["schema"] != kSchema)
    throw InputError("unsupported schema '" + doc["schema"].dump() + "'");
  return doc;
}

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

DocumentKind detect_kind(const json& doc) {
  if (doc.contains("kind")) {
    const auto& k = doc["kind"];
    if (k == "space") return DocumentKind::space;
    if (k == "lattice") return DocumentKind::lattice;
    if (k == "model") return DocumentKind::model;
    if (k == "spectrum") return DocumentKind::spectrum;
    if (k == "catalog") return DocumentKind::catalog;
    throw InputError("unknown document kind " + k.dump());
  }
  if (doc.contains("models")) return DocumentKind::catalog;
  if (doc.contains("tags")) return DocumentKind::model;
  if (doc.contains("elements")) return DocumentKind::lattice;
  if (doc.contains("points")) return DocumentKind::space;
  throw InputError("cannot tell whether the document is a space, lattice or model");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

template <typename T>
T get_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

std::vector<std::pair<std::string, std::string>> get_pairs(const json& doc, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError(std::string("entries of '") + key + "' must be [string, string]");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Origin origin_from_name(const std::string& s) {
  if (s == "classified") return Origin::classified;
  if (s == "explicit") return Origin::explicit_covers;
  if (s == "augmented") return Origin::augmented;
  if (s == "quotient") return Origin::quotient;
  if (s == "transported") return Origin::transported;
  throw InputError("unknown provenance '" + s + "'");
}

}  // namespace

json to_json(const SpecSpace& space) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "space";
  doc["name"] = space.name();
  doc["points"] = space.points();
  json covers = json::array();
  for (auto [lo, hi] : space.covers()) covers.push_back({space.points()[lo], space.points()[hi]});
  doc["covers"] = covers;
  return doc;
}

SpecSpace space_from_json(const json& doc) {
  auto points = get_field<std::vector<std::string>>(doc, "points");
  if (points.empty()) throw InputError("space has no points");
  std::string name = doc.contains("name") ? get_field<std::string>(doc, "name") : std::string();
  auto rel = get_pairs(doc, "covers");
  auto order = get_pairs(doc, "order");
  rel.insert(rel.end(), order.begin(), order.end());
  std::vector<std::pair<std::string, std::string>> strict;
  for (auto& p : rel)
    if (p.first != p.second) strict.push_back(std::move(p));
  return SpecSpace::from_relations(std::move(name), std::move(points), strict);
}

SpecSpace parse_space(std::string_view text) { return space_from_json(parse_document(text)); }

json to_json(const ThickLattice& lat) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "lattice";
  doc["provenance"] = {{"origin", origin_name(lat.provenance().origin)}, {"detail", lat.provenance().detail}};
  doc["elements"] = lat.ids();
  json covers = json::array();
  for (auto [lo, hi] : lat.covers()) covers.push_back({lat.id(lo), lat.id(hi)});
  doc["covers"] = covers;
  json objects = json::array();
  lat.objects().for_each([&](std::size_t a) { objects.push_back(lat.id(a)); });
  doc["objects"] = objects;
  doc["bottom"] = lat.id(lat.bottom());
  doc["top"] = lat.id(lat.top());
  if (lat.is_classified() && lat.space()) doc["space"] = to_json(*lat.space());
  return doc;
}

ThickLattice lattice_from_json(const json& doc) {
  auto elements = get_field<std::vector<std::string>>(doc, "elements");
  auto covers = get_pairs(doc, "covers");
  auto objects = get_field<std::vector<std::string>>(doc, "objects");
  std::optional<std::string> bottom, top;
  if (doc.contains("bottom")) bottom = get_field<std::string>(doc, "bottom");
  if (doc.contains("top")) top = get_field<std::string>(doc, "top");
  ThickLattice lat = from_explicit(elements, covers, objects, bottom, top);

  Provenance prov{Origin::explicit_covers, {}};
  if (doc.contains("provenance")) {
    const json& p = doc["provenance"];
    prov.origin = origin_from_name(get_field<std::string>(p, "origin"));
    if (p.contains("detail")) prov.detail = get_field<std::string>(p, "detail");
  }
  if (prov.origin == Origin::classified) {
    if (!doc.contains("space")) throw InputError("classified lattice without its space");
    ThickLattice rebuilt = from_support_data(space_from_json(doc["space"]), kMaxPoints);
    if (!(rebuilt == lat)) throw InputError("classified lattice does not match the lattice of its space");
    return rebuilt;
  }
  if (prov.origin == Origin::explicit_covers && prov.detail.empty()) return lat;
  std::vector<Bitset> up;
  for (std::size_t a = 0; a < lat.size(); ++a) up.push_back(lat.up(a));
  return ThickLattice::from_rows(lat.ids(), std::move(up), lat.objects(), std::move(prov));
}

json to_json(const SchemeModel& model) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "model";
  doc["space"] = to_json(model.space);
  json tags = json::object();
  for (std::size_t x = 0; x < model.space.size(); ++x) tags[model.space.points()[x]] = to_string(model.tags[x]);
  doc["tags"] = tags;
  doc["separated"] = model.separated;
  return doc;
}

SchemeModel model_from_json(const json& doc) {
  SchemeModel m;
  m.space = space_from_json(doc.contains("space") ? doc["space"] : doc);
  if (!doc.contains("tags") || !doc["tags"].is_object()) throw InputError("model needs a 'tags' object");
  m.tags.resize(m.space.size());
  std::vector<bool> tagged(m.space.size(), false);
  for (const auto& [point, tag] : doc["tags"].items()) {
    std::size_t x = m.space.index_of(point);
    if (!tag.is_string()) throw InputError("tag of '" + point + "' must be a string");
    m.tags[x] = parse_local_type(tag.get<std::string>());
    tagged[x] = true;
  }
  for (std::size_t x = 0; x < tagged.size(); ++x)
    if (!tagged[x]) throw InputError("point '" + m.space.points()[x] + "' has no tag");
  m.separated = doc.contains("separated") ? get_field<bool>(doc, "separated") : true;
  return m;
}

std::vector<SchemeModel> models_from_catalog(const json& doc) {
  if (!doc.contains("models") || !doc["models"].is_array()) throw InputError("catalog needs a 'models' array");
  std::vector<SchemeModel> out;
  for (const auto& m : doc["models"]) out.push_back(model_from_json(m));
  return out;
}

json to_json(const std::vector<SchemeModel>& models) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "catalog";
  json arr = json::array();
  for (const auto& m : models) arr.push_back(to_json(m));
  doc["models"] = arr;
  return doc;
}

json to_json(const Report& report) {
  json doc;
  doc["name"] = report.name;
  doc["status"] = report.status();
  json facts = json::object();
  for (const auto& [k, v] : report.facts) facts[k] = v;
  doc["facts"] = facts;
  doc["violations"] = report.violations;
  doc["warnings"] = report.warnings;
  return doc;
}

json to_json(const SpectrumSpace& spec, const std::vector<Report>& checks) {
  json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "spectrum";
  doc["points"] = spec.point_ids;
  json witness = json::object();
  for (std::size_t p = 0; p < spec.size(); ++p)
    witness[spec.point_ids[p]] = spec.witness[p] ? json(spec.witness_ids[p]) : json(nullptr);
  doc["witness"] = witness;
  json order = json::array();
  for (std::size_t p = 0; p < spec.size(); ++p)
    for_each_bit(spec.below[p], [&](std::size_t q) {
      if (q != p) order.push_back({spec.point_ids[q], spec.point_ids[p]});
    });
  doc["specialization"] = order;
  doc["closed_sets"] = spec.closed_sets;
  json results = json::array();
  for (const auto& c : checks) results.push_back(to_json(c));
  doc["checks"] = results;
  return doc;
}

std::string to_dot(const SpecSpace& space) {
  std::ostringstream out;
  out << "digraph " << quote(space.name().empty() ? "space" : space.name()) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& p : space.points()) out << "  " << quote(p) << ";\n";
  for (auto [lo, hi] : space.covers())
    out << "  " << quote(space.points()[lo]) << " -> " << quote(space.points()[hi]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ThickLattice& lat) {
  std::ostringstream out;
  out << "digraph \"lattice\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t a = 0; a < lat.size(); ++a) {
    out << "  " << quote(lat.id(a));
    if (lat.is_object(a)) out << " [style=filled, fillcolor=lightblue]";
    out << ";\n";
  }
  for (auto [lo, hi] : lat.covers()) out << "  " << quote(lat.id(lo)) << " -> " << quote(lat.id(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SpectrumSpace& spec, bool annotate) {
  std::ostringstream out;
  out << "digraph \"spectrum\" {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t p = 0; p < spec.size(); ++p) {
    out << "  " << quote(spec.point_ids[p]);
    if (annotate && spec.witness[p]) out << " [xlabel=" << quote("w=" + spec.witness_ids[p]) << "]";
    out << ";\n";
  }
  for (std::size_t p = 0; p < spec.size(); ++p) {
    Mask strict = spec.below[p] & ~bit(p);
    for_each_bit(strict, [&](std::size_t q) {
      Mask between = strict & ~spec.below[q];
      bool cover = true;
      for_each_bit(between, [&](std::size_t r) { cover = cover && !((spec.below[r] >> q) & 1); });
      if (cover) out << "  " << quote(spec.point_ids[q]) << " -> " << quote(spec.point_ids[p]) << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace trispec
