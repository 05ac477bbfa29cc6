#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hodge/json_io.hpp"

namespace hodge {

/**
 * @brief A built-in example whose bigradings are recomputed from root data
 * and compared against a stored golden file.
 */
struct CatalogEntry {
    std::string name;         ///< e.g. "G2-split-codim1-long", "F4-FI-row1"
    std::string group;        ///< "G2" or "F4"
    std::string kind;         ///< "period-domain" or "mumford-tate"
    std::string description;
    std::vector<std::string> aliases;
    /** @brief Recompute {"V": nodes, "g": nodes, "n_order": int}. */
    std::function<json()> compute;
};

/** @brief All catalog entries in a fixed order. */
const std::vector<CatalogEntry>& catalog_entries();

/**
 * @brief Entries selected by an entry name, alias or group name.
 * @throws Error "UnknownCatalogEntry" listing the available names.
 */
std::vector<const CatalogEntry*> catalog_lookup(const std::string& name);

/** @brief Golden directory: $HODGE_DEGEN_CATALOG if set, else the built-in one. */
std::string catalog_dir();

/** @brief Outcome of comparing one entry against its golden file. */
struct CatalogCheck {
    std::string name;
    bool match = false;
    json computed;
    std::string diff;  ///< unified node-list diff, empty on match
};

/** @brief Recompute an entry and diff it against `<dir>/<name>.json`. */
CatalogCheck catalog_check(const CatalogEntry& e, const std::string& dir);

/** @brief Golden file content for an entry (metadata plus computed expectations). */
json catalog_golden(const CatalogEntry& e);

/**
 * @brief Line diff of two sorted [p,q,dim] node lists: lines prefixed '-'
 * appear only in @p expected, '+' only in @p computed.
 */
std::string node_list_diff(const json& expected, const json& computed, const std::string& label);

}  // namespace hodge
