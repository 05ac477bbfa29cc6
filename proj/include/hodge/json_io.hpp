#pragma once

#include <string>
#include <variant>

#include <json.hpp>
#include "hodge/lmhs.hpp"

namespace hodge {

using json = nlohmann::ordered_json;

/** @brief Scalars serialize as canonical strings such as "3", "-1/2*i", "2+1/3*i". */
json to_json(const Gq& x);
Gq gq_from_json(const json& j);

/** @brief Matrices serialize as row-major nested arrays of scalar strings. */
json to_json(const Matrix& m);
/**
 * @brief Parse a matrix; @p cols fixes the width (needed for empty row lists).
 * @throws ParseError on ragged rows or malformed scalars.
 */
Matrix matrix_from_json(const json& j, std::size_t cols);

/** @brief {"dim", "weight", "Q", "F": {"p": basis rows, ...}}. */
json to_json(const HodgeDatum& d);
/**
 * @brief Parse a HodgeDatum. Filtration keys must be contiguous non-negative
 * integers; F^p below the smallest key is V and above the largest key is 0.
 */
HodgeDatum hodge_from_json(const json& j);

/** @brief HodgeDatum fields plus "N", "center" and "W": {level: basis rows}. */
json to_json(const LmhsDatum& l);
/** @brief Parse an LmhsDatum; W is computed from N when omitted. */
LmhsDatum lmhs_from_json(const json& j, std::optional<int> center = std::nullopt);

/** @brief A validator input: a pure structure or a limiting mixed one. */
using Payload = std::variant<HodgeDatum, LmhsDatum>;
/** @brief Objects with an "N" entry are limiting mixed Hodge structures. */
Payload payload_from_json(const json& j, std::optional<int> center = std::nullopt);

/** @brief {"ok": bool, "clauses": [{"name", "ok", "message"}, ...]}. */
json to_json(const Report& r);

/** @brief Nonzero entries as [p, q, dim] triples sorted by p then q. */
json dims_to_json(const DimTable& t);
DimTable dims_from_json(const json& j);

/** @brief Parse "1,2,1" into Hodge numbers h^{n,0}, …, h^{0,n} of weight n. */
HodgeNumbers parse_hodge_numbers(int n, const std::string& list);

/** @brief Parse a JSON document, mapping syntax errors to ParseError. */
json parse_json(const std::string& text);
/** @brief Read and parse a JSON file. */
json read_json_file(const std::string& path);

}  // namespace hodge
