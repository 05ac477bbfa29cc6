#include "hodge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

int int_key(const std::string& key, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError(std::string("non-integer ") + what + " key '" + key + "'");
    return v;
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

Subspace rows_span(const json& j, std::size_t dim) {
    Matrix m = matrix_from_json(j, dim);
    return Subspace::span(m);
}

json rows_json(const Subspace& s) { return to_json(s.basis()); }

}  // namespace

json to_json(const Gq& x) { return x.to_string(); }

Gq gq_from_json(const json& j) {
    if (j.is_string()) return Gq::parse(j.get<std::string>());
    if (j.is_number_integer()) return Gq(j.get<long>());
    throw ParseError("scalar must be a string or an integer");
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::size_t cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    Matrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = gq_from_json(row[k]);
    }
    return m;
}

json to_json(const HodgeDatum& d) {
    json j;
    j["dim"] = d.dim;
    j["weight"] = d.weight;
    j["Q"] = to_json(d.Q);
    json f = json::object();
    for (int p = std::max(0, d.F.lo); p <= d.F.hi(); ++p) f[std::to_string(p)] = rows_json(d.F.at(p));
    j["F"] = std::move(f);
    return j;
}

HodgeDatum hodge_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("datum must be a JSON object");
    HodgeDatum d;
    int dim = get_int(j, "dim");
    if (dim < 0) throw ParseError("dim must be non-negative");
    d.dim = static_cast<std::size_t>(dim);
    d.weight = get_int(j, "weight");
    if (!j.contains("Q")) throw ParseError("missing field 'Q'");
    d.Q = matrix_from_json(j.at("Q"), d.dim);
    if (d.Q.rows() != d.dim) throw ParseError("Q must be dim x dim");
    if (!j.contains("F") || !j.at("F").is_object()) throw ParseError("missing object field 'F'");
    std::map<int, Subspace> steps;
    for (const auto& [key, rows] : j.at("F").items()) {
        int p = int_key(key, "filtration");
        if (p < 0) throw ParseError("filtration index must be non-negative");
        steps.emplace(p, rows_span(rows, d.dim));
    }
    d.F.ambient = d.dim;
    d.F.lo = steps.empty() ? 0 : steps.begin()->first;
    int expect = d.F.lo;
    for (auto& [p, s] : steps) {
        if (p != expect) throw ParseError("filtration indices must be contiguous");
        d.F.steps.push_back(std::move(s));
        ++expect;
    }
    return d;
}

json to_json(const LmhsDatum& l) {
    json j = to_json(l.hodge);
    j["N"] = to_json(l.N);
    j["center"] = l.center();
    json w = json::object();
    for (int k = l.W.lo; k <= l.W.hi(); ++k) w[std::to_string(k)] = rows_json(l.W.at(k));
    j["W"] = std::move(w);
    return j;
}

LmhsDatum lmhs_from_json(const json& j, std::optional<int> center) {
    HodgeDatum d = hodge_from_json(j);
    if (!j.contains("N")) throw ParseError("missing field 'N'");
    Matrix n = matrix_from_json(j.at("N"), d.dim);
    if (n.rows() != d.dim) throw ParseError("N must be dim x dim");
    if (!center && j.contains("center")) center = get_int(j, "center");
    const std::size_t dim = d.dim;
    LmhsDatum l = make_lmhs(std::move(d), std::move(n), center);
    if (j.contains("W")) {
        if (!j.at("W").is_object()) throw ParseError("'W' must be an object");
        std::map<int, Subspace> levels;
        for (const auto& [key, rows] : j.at("W").items()) levels.emplace(int_key(key, "weight"), rows_span(rows, dim));
        WeightFiltration w;
        w.ambient = dim;
        w.center = l.W.center;
        w.lo = levels.empty() ? 0 : levels.begin()->first;
        int expect = w.lo;
        for (auto& [k, s] : levels) {
            if (k != expect) throw ParseError("weight levels must be contiguous");
            w.steps.push_back(std::move(s));
            ++expect;
        }
        l.W = std::move(w);
    }
    return l;
}

Payload payload_from_json(const json& j, std::optional<int> center) {
    if (j.is_object() && j.contains("N")) return lmhs_from_json(j, center);
    return hodge_from_json(j);
}

json to_json(const Report& r) {
    json j;
    j["ok"] = r.ok();
    json clauses = json::array();
    for (const auto& c : r.clauses) clauses.push_back({{"name", c.name}, {"ok", c.ok}, {"message", c.message}});
    j["clauses"] = std::move(clauses);
    return j;
}

json dims_to_json(const DimTable& t) {
    json out = json::array();
    for (const auto& [k, v] : nonzero(t)) out.push_back({k.first, k.second, v});
    return out;
}

DimTable dims_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("node list must be an array of [p,q,dim] triples");
    DimTable t;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer())
            throw ParseError("node entries must be [p,q,dim] integer triples");
        t[{e[0].get<int>(), e[1].get<int>()}] += e[2].get<int>();
    }
    return nonzero(t);
}

HodgeNumbers parse_hodge_numbers(int n, const std::string& list) {
    HodgeNumbers h{n, {}};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) h.h.push_back(int_key(item, "Hodge number"));
    if (n < 0 || h.h.size() != static_cast<std::size_t>(n + 1))
        throw ParseError("expected " + std::to_string(n + 1) + " Hodge numbers for weight " + std::to_string(n));
    return h;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

}  // namespace hodge
