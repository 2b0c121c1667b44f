#include "achiral/json_io.hpp"

#include <fstream>
#include <sstream>

#include "achiral/error.hpp"

namespace achiral::io {

json diagram_to_json(const diagrams::LinkDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) crossings.push_back({{"id", c.id}, {"arcs", c.arcs}});
  return {{"crossings", crossings}};
}

diagrams::LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array()) {
    throw InvalidInput("diagram JSON needs a \"crossings\" array");
  }
  std::vector<diagrams::Crossing> crossings;
  int index = 0;
  for (const auto& entry : j["crossings"]) {
    diagrams::Crossing c;
    c.id = entry.is_object() && entry.contains("id") && entry["id"].is_number_integer()
               ? entry["id"].get<int>()
               : index;
    if (!entry.is_object() || !entry.contains("arcs") || !entry["arcs"].is_array() ||
        entry["arcs"].size() != 4) {
      throw InvalidInput("crossing id " + std::to_string(c.id) + " needs four arcs");
    }
    for (int s = 0; s < 4; ++s) {
      if (!entry["arcs"][s].is_number_integer()) {
        throw InvalidInput("crossing id " + std::to_string(c.id) + " has a non-integer arc");
      }
      c.arcs[s] = entry["arcs"][s].get<int>();
    }
    crossings.push_back(c);
    ++index;
  }
  if (crossings.empty()) return diagrams::LinkDiagram();
  return diagrams::LinkDiagram(std::move(crossings));
}

json graph_to_json(const plangraph::PlanarMultigraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"vertices", g.vertex_count()}, {"edges", edges}};
  if (g.has_rotation()) out["rotations"] = g.rotations();
  return out;
}

plangraph::PlanarMultigraph graph_from_json(const json& j) {
  try {
    const int vertices = j.at("vertices").get<int>();
    std::vector<plangraph::PlanarMultigraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("graph edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("rotations")) {
      return plangraph::PlanarMultigraph(vertices, std::move(edges),
                                         j["rotations"].get<std::vector<std::vector<int>>>());
    }
    return plangraph::PlanarMultigraph(vertices, std::move(edges));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
}

json certificate_to_json(const realize::RealizationCertificate& c) {
  json out = {
      {"n", c.n},
      {"decomposition", {c.decomposition.a, c.decomposition.b}},
      {"kind", realize::to_string(c.kind)},
      {"claimed_det", c.claimed_det},
  };
  if (!c.notation.empty()) out["notation"] = c.notation;
  if (c.kind == realize::CertificateKind::AlternatingConnectedSumTangle) out["tsum_factor"] = c.tsum_factor;
  if (c.template_parameters) {
    const auto& t = *c.template_parameters;
    out["template"] = {{"X", t[0]}, {"Y", t[1]}, {"A", t[2]}, {"B", t[3]}, {"C", t[4]}, {"D", t[5]}};
    out["family"] = c.family;
    if (c.family != "composite") out["k"] = c.family_k;
  }
  if (!c.catalog_name.empty()) out["catalog"] = c.catalog_name;
  if (c.diagram) out["diagram"] = diagram_to_json(*c.diagram);
  json transcript = json::object();
  for (const auto& [m, v] : c.transcript) transcript[diagrams::to_string(m)] = v;
  out["transcript"] = transcript;
  return out;
}

json classes_to_json(std::uint64_t p, const std::vector<census::RationalClass>& classes) {
  json rows = json::array();
  for (const auto& c : classes) {
    rows.push_back({{"p", p}, {"representative", c.representative()}, {"members", c.members},
                    {"achiral", c.achiral}});
  }
  return rows;
}

std::string classes_to_csv(std::uint64_t p, const std::vector<census::RationalClass>& classes) {
  std::ostringstream out;
  out << "p,representative,members,achiral\n";
  for (const auto& c : classes) {
    out << p << ',' << c.representative() << ',';
    for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? " " : "") << c.members[i];
    out << ',' << (c.achiral ? "true" : "false") << '\n';
  }
  return out.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("cannot parse " + path.string() + ": " + e.what());
  }
}

}  // namespace achiral::io
