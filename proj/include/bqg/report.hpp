#pragma once

#include "bqg/graph.hpp"
#include "bqg/montecarlo.hpp"
#include "bqg/orbits.hpp"
#include "bqg/variance.hpp"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace bqg {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

namespace report {

using nlohmann::json;

inline json graph_to_json(const graphs::BinaryGraph& g) {
    json j;
    j["p"] = g.p;
    j["r"] = g.r;
    j["vertices"] = g.num_vertices;
    j["bonds"] = json::array();
    for (int b = 0; b < g.num_bonds; ++b) {
        json jb;
        jb["id"] = b;
        jb["origin"] = g.bonds[b].origin;
        jb["terminus"] = g.bonds[b].terminus;
        if (g.p == 1) jb["label"] = graphs::bond_label(g, b);
        j["bonds"].push_back(jb);
    }
    if (g.p == 1) {
        j["vertex_labels"] = json::array();
        for (int v = 0; v < g.num_vertices; ++v) j["vertex_labels"].push_back(graphs::vertex_label(g, v));
    }
    return j;
}

// Fixed-format decimal, '.' separator, locale-free.
inline std::string fmt_double(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return std::string(buf);
}

struct TabulateRow {
    int n = 0;
    orbits::SetSizes sizes;
    Rat prediction = 0;  // set-size formula
    Rat pairing = 0;     // exact pairing oracle
    Rat diagonal = 0;
};

inline std::string tabulate_csv(const std::vector<TabulateRow>& rows, int max_enc) {
    std::string out = "n,P0";
    for (int e = 1; e <= max_enc; ++e) out += ",hatP" + std::to_string(e);
    out += ",zero,total,prediction,pairing,diagonal\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.sizes.p0);
        for (int e = 1; e <= max_enc; ++e) {
            auto it = row.sizes.hat_by_n.find(e);
            out += "," + std::to_string(it == row.sizes.hat_by_n.end() ? 0 : it->second);
        }
        out += "," + std::to_string(row.sizes.zero);
        out += "," + std::to_string(row.sizes.total);
        out += "," + rat_to_string(row.prediction);
        out += "," + rat_to_string(row.pairing);
        out += "," + rat_to_string(row.diagonal);
        out += "\n";
    }
    return out;
}

inline json tabulate_json(const std::vector<TabulateRow>& rows) {
    json j = json::array();
    for (const auto& row : rows) {
        json r;
        r["n"] = row.n;
        r["P0"] = row.sizes.p0;
        r["hatP"] = json::object();
        for (const auto& [e, c] : row.sizes.hat_by_n) r["hatP"][std::to_string(e)] = c;
        r["zero"] = row.sizes.zero;
        r["total"] = row.sizes.total;
        r["prediction"] = rat_to_string(row.prediction);
        r["pairing"] = rat_to_string(row.pairing);
        r["diagonal"] = rat_to_string(row.diagonal);
        j.push_back(r);
    }
    return j;
}

}  // namespace report
}  // namespace bqg
