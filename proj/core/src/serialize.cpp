#include "dcrystal/serialize.hpp"

#include <stdexcept>

namespace dcrystal {

namespace {

const char* support_name(Support s) {
    switch (s) {
        case Support::full: return "full";
        case Support::upper: return "upper";
        case Support::lower: return "lower";
    }
    return "full";
}

Support support_from(const std::string& s) {
    if (s == "full") return Support::full;
    if (s == "upper") return Support::upper;
    if (s == "lower") return Support::lower;
    throw std::invalid_argument("unknown support: " + s);
}

LusztigDatum from_rows(int n, const json& rows) {
    return datum_from_rows(n, rows.get<std::vector<std::vector<int>>>());
}

}  // namespace

json datum_to_json(const LusztigDatum& c) {
    json j;
    j["n"] = c.rank();
    j["support"] = support_name(c.support());
    if (fits_support(c.rank(), c.values(), Support::upper)) j["rows"] = datum_rows(c);
    j["values"] = c.values();
    return j;
}

LusztigDatum datum_from_json(const json& j) {
    try {
        if (j.is_array()) return from_rows(static_cast<int>(j.size()) + 1, j);
        if (!j.is_object()) throw std::invalid_argument("datum must be an object or a list of rows");
        const bool flat = j.contains("values") && j.contains("support") && j.at("support") != "upper";
        if (j.contains("rows") && !flat) {
            int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(j.at("rows").size()) + 1;
            return from_rows(n, j.at("rows"));
        }
        int n = j.at("n").get<int>();
        Support s = j.contains("support") ? support_from(j.at("support").get<std::string>()) : Support::full;
        return LusztigDatum(n, s, j.at("values").get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed datum: ") + e.what());
    }
}

json tableau_to_json(const SkewTableau& t) {
    json j;
    const char* orientation = t.empty() || t.is_normal() ? "normal" : t.is_anti_normal() ? "anti-normal" : "skew";
    j["orientation"] = orientation;
    if (t.empty() || t.is_normal() || t.is_anti_normal()) j["shape"] = t.shape();
    json rows = json::array();
    for (int r = 0; r < t.height(); ++r) {
        json row = json::array();
        for (int k = 0; k < t.inner()[r]; ++k) row.push_back(nullptr);
        for (Letter x : t.rows()[r]) row.push_back(x.index);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

SkewTableau tableau_from_json(const json& j) {
    try {
        const json& rows = j.is_object() ? j.at("rows") : j;
        std::vector<int> inner;
        std::vector<std::vector<Letter>> out;
        for (const auto& row : rows) {
            int lead = 0;
            std::vector<Letter> letters;
            for (const auto& x : row) {
                if (x.is_null()) {
                    if (!letters.empty()) throw std::invalid_argument("gap inside a tableau row");
                    ++lead;
                } else {
                    letters.push_back(Letter{x.get<int>()});
                }
            }
            inner.push_back(lead);
            out.push_back(std::move(letters));
        }
        SkewTableau t(std::move(inner), std::move(out));
        if (!t.is_skew_shape()) throw std::invalid_argument("rows do not form a skew shape");
        return t;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tableau: ") + e.what());
    }
}

json biword_to_json(const Biword& w) {
    json pairs = json::array();
    for (const auto& p : w.pairs) pairs.push_back({p.a.index, p.b.index});
    return {{"order", w.order == BiwordOrder::omega ? "omega" : "omega-prime"}, {"pairs", pairs}};
}

json double_path_to_json(const DoublePath& p) {
    auto cells = [](const std::vector<TriangleCoord>& v) {
        json a = json::array();
        for (auto t : v) a.push_back({t.row, t.col});
        return a;
    };
    return {{"left", cells(p.left)}, {"right", cells(p.right)}};
}

json trail_to_json(const Trail& t) { return {{"word", t.word}, {"steps", t.steps}}; }

json roots_to_json(const std::vector<Root>& roots) {
    json a = json::array();
    for (const auto& r : roots) a.push_back(r.to_string());
    return a;
}

}  // namespace dcrystal
