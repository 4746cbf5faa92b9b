#pragma once

#include <nlohmann/json.hpp>

#include "dcrystal/burge.hpp"
#include "dcrystal/lusztig.hpp"
#include "dcrystal/tableau.hpp"
#include "dcrystal/trails.hpp"
#include "dcrystal/triangle.hpp"

namespace dcrystal {

using json = nlohmann::json;

// Upper data serialize as triangle rows; other supports as a flat list in i_0 order.
json datum_to_json(const LusztigDatum& c);
// Accepts {"n", "rows"}, {"n", "values"[, "support"]} or a bare list of triangle rows.
LusztigDatum datum_from_json(const json& j);

// Rows with null for cells outside the skew shape, letters k-bar written as k.
json tableau_to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const json& j);

json biword_to_json(const Biword& w);
json double_path_to_json(const DoublePath& p);
json trail_to_json(const Trail& t);
json roots_to_json(const std::vector<Root>& roots);

}  // namespace dcrystal
