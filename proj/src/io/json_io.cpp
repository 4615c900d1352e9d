#include "teichlab/io/json_io.hpp"

#include <algorithm>

#include "teichlab/util/error.hpp"

namespace teichlab::io {

void require_keys(const json& doc, const std::vector<std::string>& allowed,
                  const std::string& where) {
  if (!doc.is_object()) throw input_error(where + ": expected an object");
  for (const auto& [key, _] : doc.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw input_error(where + ": unknown field '" + key + "'");
}

metric::TableSpace load_table_space(const json& doc) {
  require_keys(doc, {"points", "dist", "base"}, "space");
  if (!doc.contains("points") || !doc.contains("dist") || !doc.contains("base"))
    throw input_error("space: needs points, dist, base");
  std::vector<std::string> ids = doc.at("points").get<std::vector<std::string>>();
  const auto& rows = doc.at("dist");
  if (!rows.is_array() || rows.size() != ids.size())
    throw input_error("space: dist must be a square matrix over points");
  std::vector<double> dist;
  dist.reserve(ids.size() * ids.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ids.size())
      throw input_error("space: dist must be a square matrix over points");
    for (const auto& v : row) dist.push_back(v.get<double>());
  }
  return metric::TableSpace(std::move(ids), std::move(dist),
                            doc.at("base").get<std::string>());
}

std::function<metric::TableSpace::Point(metric::TableSpace::Point)> load_table_map(
    const json& doc, const metric::TableSpace& domain,
    const metric::TableSpace& codomain) {
  require_keys(doc, {"map"}, "map");
  if (!doc.contains("map")) throw input_error("map: needs a 'map' list");
  std::vector<std::int32_t> table(domain.size(), -1);
  for (const auto& entry : doc.at("map")) {
    if (!entry.is_array() || entry.size() != 2)
      throw input_error("map: entries are [from, to] pairs");
    const auto from = domain.index_of(entry[0].get<std::string>());
    const auto to = codomain.index_of(entry[1].get<std::string>());
    if (table[from] != -1) throw input_error("map: duplicate image for a point");
    table[from] = static_cast<std::int32_t>(to);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0)
      throw input_error("map: no image for point " + domain.id_of(
                            static_cast<metric::TableSpace::Point>(i)));
  return [table = std::move(table)](metric::TableSpace::Point p) {
    return static_cast<metric::TableSpace::Point>(table[p]);
  };
}

foliation::CurveSystem load_curve_system(const json& doc) {
  require_keys(doc, {"signature", "curves", "imatrix", "supports", "name"},
               "curve system");
  const auto sig = doc.at("signature").get<std::vector<int>>();
  if (sig.size() != 2) throw input_error("curve system: signature is [g, n]");
  std::vector<foliation::Support> supports;
  if (doc.contains("supports"))
    for (const auto& s : doc.at("supports")) {
      require_keys(s, {"id", "cx", "boundary", "inside", "disjoint"}, "support");
      foliation::Support sup;
      sup.id = s.at("id").get<std::string>();
      sup.cx = s.at("cx").get<int>();
      if (s.contains("boundary"))
        sup.boundary = s.at("boundary").get<std::vector<std::string>>();
      if (s.contains("inside"))
        sup.inside = s.at("inside").get<std::vector<std::string>>();
      if (s.contains("disjoint"))
        sup.disjoint = s.at("disjoint").get<std::vector<std::string>>();
      supports.push_back(std::move(sup));
    }
  return foliation::CurveSystem(
      sig[0], sig[1], doc.at("curves").get<std::vector<std::string>>(),
      doc.at("imatrix").get<std::vector<std::vector<std::int64_t>>>(),
      std::move(supports), doc.value("name", ""));
}

foliation::SymbolicFoliation load_foliation(const json& doc,
                                            const foliation::CurveSystem& system) {
  require_keys(doc, {"components"}, "foliation");
  std::vector<foliation::Component> parts;
  for (const auto& c : doc.at("components")) {
    require_keys(c, {"kind", "ref", "weight"}, "component");
    foliation::Component comp;
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "arational")
      comp.kind = foliation::ComponentKind::arational;
    else if (kind == "essential")
      comp.kind = foliation::ComponentKind::essential;
    else if (kind == "peripheral")
      comp.kind = foliation::ComponentKind::peripheral;
    else
      throw input_error("component kind must be arational|essential|peripheral");
    comp.ref = c.at("ref").get<std::string>();
    comp.weight = c.value("weight", 1.0);
    parts.push_back(std::move(comp));
  }
  return foliation::SymbolicFoliation(system, std::move(parts));
}

}  // namespace teichlab::io
