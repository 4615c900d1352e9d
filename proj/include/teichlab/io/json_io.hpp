#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "teichlab/foliation/curve_system.hpp"
#include "teichlab/foliation/foliation.hpp"
#include "teichlab/metric/space.hpp"

namespace teichlab::io {

using json = nlohmann::json;

/// Rejects documents carrying keys outside `allowed`.
void require_keys(const json& doc, const std::vector<std::string>& allowed,
                  const std::string& where);

/// {points:[ids], dist:[[...]], base:id}
metric::TableSpace load_table_space(const json& doc);

/// {map:[[from,to],...]} as a total table between two loaded spaces.
std::function<metric::TableSpace::Point(metric::TableSpace::Point)> load_table_map(
    const json& doc, const metric::TableSpace& domain,
    const metric::TableSpace& codomain);

/// {signature:[g,n], curves:[...], imatrix:[[...]],
///  supports:[{id,cx,boundary:[...],inside:[...],disjoint:[...]}]}
foliation::CurveSystem load_curve_system(const json& doc);

/// {components:[{kind,ref,weight}]}
foliation::SymbolicFoliation load_foliation(const json& doc,
                                            const foliation::CurveSystem& system);

}  // namespace teichlab::io
