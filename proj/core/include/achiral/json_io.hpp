#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "achiral/census.hpp"
#include "achiral/diagram.hpp"
#include "achiral/plangraph.hpp"
#include "achiral/realize.hpp"

namespace achiral::io {

using nlohmann::json;

// {"crossings":[{"id":0,"arcs":[a0,a1,a2,a3]}, ...]}
json diagram_to_json(const diagrams::LinkDiagram& d);
// Throws InvalidInput on malformed JSON or a diagram failing validation.
diagrams::LinkDiagram diagram_from_json(const json& j);

// {"vertices":V,"edges":[[u,v],...],"rotations":[[darts ccw],...]}; rotations
// are optional on input.
json graph_to_json(const plangraph::PlanarMultigraph& g);
plangraph::PlanarMultigraph graph_from_json(const json& j);

json certificate_to_json(const realize::RealizationCertificate& c);

// Rows p, representative, members, achiral.
json classes_to_json(std::uint64_t p, const std::vector<census::RationalClass>& classes);
std::string classes_to_csv(std::uint64_t p, const std::vector<census::RationalClass>& classes);

// Parses a file, throwing InvalidInput when it cannot be read or parsed.
json read_json_file(const std::filesystem::path& path);

}  // namespace achiral::io
