#pragma once

// JSON interchange formats.  These are the stable surfaces the CLI speaks;
// canonical enumeration order is part of the contract.

#include <json.hpp>

#include "ppbij/corr.hpp"
#include "ppbij/paths.hpp"
#include "ppbij/sij.hpp"
#include "ppbij/tableau.hpp"

namespace ppbij {

using nlohmann::json;

inline json to_json(const PP& p) {
    json shape = json::array(), rows = json::array();
    for (const Row& r : p.rows) {
        shape.push_back(r.size());
        rows.push_back(r);
    }
    return {{"kind", p.shifted ? "shifted" : "plane"}, {"shape", shape}, {"rows", rows}};
}

inline PP pp_from_json(const json& j) {
    PPBIJ_REQUIRE(j.is_object() && j.contains("kind") && j.contains("rows"),
                  "partition JSON needs \"kind\" and \"rows\"");
    PP p;
    p.shifted = j.at("kind") == "shifted";
    PPBIJ_REQUIRE(p.shifted || j.at("kind") == "plane", "kind must be plane or shifted");
    for (const json& r : j.at("rows")) p.rows.push_back(r.get<Row>());
    if (j.contains("shape")) {
        const json& s = j.at("shape");
        PPBIJ_REQUIRE(s.size() == p.rows.size(), "shape/rows length mismatch");
        for (size_t i = 0; i < p.rows.size(); ++i)
            PPBIJ_REQUIRE(s[i].get<size_t>() == p.rows[i].size(),
                          "shape entry disagrees with row length");
    }
    return p;
}

inline json to_json(const Tableau& t) {
    json rows = json::array();
    for (const Row& r : t.rows) rows.push_back(r);
    return {{"shape", t.shape()}, {"rows", rows}};
}

inline json to_json(const MarkedStair& ms) {
    json dom = json::array(), vals = json::array();
    for (const auto& [i, v] : ms.marks) {
        dom.push_back(i);
        vals.push_back(v);
    }
    return {{"base", to_json(ms.base)}, {"marks", {{"domain", dom}, {"values", vals}}}};
}

inline json insert_trace_json(const std::vector<BumpStep>& trace) {
    json out = json::array();
    for (const BumpStep& b : trace) out.push_back(json::array({b.row, b.bumped}));
    return out;
}

// chain trace entries: (stage, sign, payload digest)
inline json trace_json(const Trace& tr) {
    json out = json::array();
    std::hash<std::string> h;
    for (const Element& e : tr) {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%016zx", h(e.val.dump()));
        out.push_back({{"stage", e.stage}, {"sign", e.sign}, {"digest", buf}});
    }
    return out;
}

// factored elements: {"sigma": ..., "t": ...?, "factors": ["NE-word", ...]}
inline json factored_json(const Perm& sigma, const std::vector<int>* t,
                          const std::vector<Word>& factors) {
    json out = {{"sigma", sigma}, {"factors", factors}};
    if (t) out["t"] = *t;
    return out;
}

inline json ij_element_json(const Element& e, const std::vector<int>& params) {
    json out;
    if (e.val.is_vec() && e.val.items().size() == 2 && e.val.items()[0].is_vec()) {
        out["sigma"] = e.val.items()[0].as_ints();
        out["t"] = e.val.items()[1].as_ints();
    } else {
        out["sigma"] = e.val.as_ints();
    }
    out["params"] = params;
    return out;
}

}  // namespace ppbij
