#include "hodge/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "hodge/errors.hpp"
#include "hodge/roots.hpp"

#ifndef HODGE_DEFAULT_CATALOG_DIR
#define HODGE_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace hodge {

namespace {

/** @brief Nilpotency index on V of the nilpositive of an sl2 with neutral Y, read off the V table. */
int n_order_from_table(const DimTable& v, int n) {
    int top = n;
    for (const auto& [k, d] : nonzero(v)) top = std::max(top, k.first + k.second);
    return top - n + 1;
}

json root_entry(const RootSystem& rs, const WeightMultiset& w, int n, const GradingElement& l, const GradingElement& y) {
    DimTable v = rep_bigrading(w, l, y, n);
    json j;
    j["V"] = dims_to_json(v);
    j["g"] = dims_to_json(adjoint_bigrading(rs, l, y));
    j["n_order"] = n_order_from_table(v, n);
    return j;
}

GradingElement borel_grading(const RootSystem& rs) { return GradingElement{QVec(static_cast<std::size_t>(rs.rank), 1)}; }

IVec simple(int rank, int i) {
    IVec v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    auto g2 = [](std::function<GradingElement(const RootSystem&, const GradingElement&)> y) {
        return [y]() {
            RootSystem rs = build_root_system('G', 2);
            GradingElement l = borel_grading(rs);
            return root_entry(rs, short_root_weights(rs, 1), 6, l, y(rs, l));
        };
    };
    out.push_back({"G2-split-open", "G2", "mumford-tate",
                   "open orbit D in G2/B, weight 6, h = (1^7); N = 0", {"G2-open"},
                   g2([](const RootSystem& rs, const GradingElement&) {
                       return GradingElement{QVec(static_cast<std::size_t>(rs.rank), 0)};
                   })});
    out.push_back({"G2-split-codim1-long", "G2", "mumford-tate",
                   "codimension-one orbit, N a long root vector (Y = coroot of alpha_2)", {"G2-codim1-long"},
                   g2([](const RootSystem& rs, const GradingElement&) { return coroot_grading(rs, simple(2, 1)); })});
    out.push_back({"G2-split-codim1-short", "G2", "mumford-tate",
                   "codimension-one orbit, N a short root vector (Y = coroot of alpha_1)", {"G2-codim1-short"},
                   g2([](const RootSystem& rs, const GradingElement&) { return coroot_grading(rs, simple(2, 0)); })});
    out.push_back({"G2-split-closed", "G2", "mumford-tate",
                   "closed orbit, Hodge-Tate degeneration (Y = 2L)", {"G2-closed"},
                   g2([](const RootSystem&, const GradingElement& l) { return l.scaled(2); })});
    for (int i = 0; i < 4; ++i) {
        std::string row = "row" + std::to_string(i + 1);
        out.push_back({"F4-FI-" + row, "F4", "mumford-tate",
                       "codimension-one orbit in F4/B for the real form FI, 26-dim V, h = (1^4,2^9,1^4); Y = coroot of alpha_" +
                           std::to_string(i + 1),
                       {"F4-" + row},
                       [i]() {
                           RootSystem rs = build_root_system('F', 4);
                           return root_entry(rs, short_root_weights(rs, 2), 16, borel_grading(rs),
                                             coroot_grading(rs, simple(4, i)));
                       }});
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

std::vector<const CatalogEntry*> catalog_lookup(const std::string& name) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : catalog_entries()) {
        bool hit = e.name == name || e.group == name;
        for (const auto& a : e.aliases) hit = hit || a == name;
        if (hit) out.push_back(&e);
    }
    if (out.empty()) {
        std::string names;
        for (const auto& e : catalog_entries()) names += (names.empty() ? "" : ", ") + e.name;
        throw Error("UnknownCatalogEntry", "unknown catalog entry '" + name + "'; available: G2, F4, " + names);
    }
    return out;
}

std::string catalog_dir() {
    if (const char* env = std::getenv("HODGE_DEGEN_CATALOG"); env && *env) return env;
    return HODGE_DEFAULT_CATALOG_DIR;
}

json catalog_golden(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["group"] = e.group;
    j["kind"] = e.kind;
    j["description"] = e.description;
    // Nodes are stored in true (p,q) coordinates; no transcription shift applies.
    j["figure_shift"] = json::array({0, 0});
    j["expected"] = e.compute();
    return j;
}

std::string node_list_diff(const json& expected, const json& computed, const std::string& label) {
    DimTable a = dims_from_json(expected), b = dims_from_json(computed);
    std::string out;
    auto line = [](char sign, const std::pair<int, int>& k, int d) {
        return std::string(1, sign) + "[" + std::to_string(k.first) + "," + std::to_string(k.second) + "," +
               std::to_string(d) + "]\n";
    };
    for (const auto& [k, d] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second != d) out += line('-', k, d);
    }
    for (const auto& [k, d] : b) {
        auto it = a.find(k);
        if (it == a.end() || it->second != d) out += line('+', k, d);
    }
    if (!out.empty()) out = "--- expected/" + label + "\n+++ computed/" + label + "\n" + out;
    return out;
}

CatalogCheck catalog_check(const CatalogEntry& e, const std::string& dir) {
    CatalogCheck c;
    c.name = e.name;
    c.computed = e.compute();
    json golden = read_json_file(dir + "/" + e.name + ".json");
    if (!golden.contains("expected")) throw ParseError("golden file for '" + e.name + "' lacks 'expected'");
    const json& exp = golden.at("expected");
    for (const char* part : {"V", "g"})
        if (exp.contains(part)) c.diff += node_list_diff(exp.at(part), c.computed.at(part), e.name + "/" + part);
    if (exp.contains("n_order") && exp.at("n_order") != c.computed.at("n_order"))
        c.diff += "--- expected/" + e.name + "/n_order\n+++ computed/" + e.name + "/n_order\n-" +
                  exp.at("n_order").dump() + "\n+" + c.computed.at("n_order").dump() + "\n";
    c.match = c.diff.empty();
    return c;
}

}  // namespace hodge
