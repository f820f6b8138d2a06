#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trispec/poset_space.hpp"
#include "trispec/report.hpp"
#include "trispec/scheme_models.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/thick_lattice.hpp"

namespace trispec {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "trispec/1";

enum class DocumentKind { space, lattice, model, spectrum, catalog };

/// Parses JSON text; throws InputError on syntax errors or a foreign schema.
json parse_document(std::string_view text);
json read_document(const std::string& path);
/// Uses "kind" when present, otherwise the distinguishing keys.
DocumentKind detect_kind(const json& doc);
/// Pretty-printed with a trailing newline; stable across runs.
std::string dump(const json& doc);

json to_json(const SpecSpace& space);
SpecSpace space_from_json(const json& doc);
SpecSpace parse_space(std::string_view text);

/// Classified lattices carry their space and are rebuilt from it on parse.
json to_json(const ThickLattice& lat);
ThickLattice lattice_from_json(const json& doc);

json to_json(const SchemeModel& model);
SchemeModel model_from_json(const json& doc);

/// { "kind": "catalog", "models": [model, ...] }
std::vector<SchemeModel> models_from_catalog(const json& doc);
json to_json(const std::vector<SchemeModel>& models);

json to_json(const Report& report);
json to_json(const SpectrumSpace& spec, const std::vector<Report>& checks = {});

std::string to_dot(const SpecSpace& space);
/// Objects are drawn filled.
std::string to_dot(const ThickLattice& lat);
/// Specialization order of the spectrum; with annotate, each point is
/// labeled with its witness.
std::string to_dot(const SpectrumSpace& spec, bool annotate = false);

}  // namespace trispec
