/**
 * @file hodge_degen.cpp
 * @brief Command-line front end: validate, classify, diagram, catalog, verify-corpus.
 *
 * Exit codes: 0 pass, 1 semantic failure (a check failed), 2 input error.
 */
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hodge/catalog.hpp"
#include "hodge/classifier.hpp"
#include "hodge/corpus.hpp"
#include "hodge/diagram.hpp"
#include "hodge/errors.hpp"
#include "hodge/json_io.hpp"

using namespace hodge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Common {
    std::string format = "json";
    std::string out;
    std::optional<int> center;
    std::string samples;
};

/** @brief Write text to --out or stdout. */
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write '" + c.out + "'");
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<mpq_class> parse_samples(const std::string& list) {
    std::vector<mpq_class> ys;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        mpq_class y;
        if (item.empty() || y.set_str(item, 10) != 0) throw ParseError("bad sample value '" + item + "'");
        y.canonicalize();
        ys.push_back(y);
    }
    return ys;
}

std::string render(const std::string& format, const DiagramSpec& d) {
    if (format == "ascii") return render_ascii(d);
    if (format == "svg") return render_svg(d);
    throw ParseError("unsupported format '" + format + "' (expected ascii or svg)");
}

DimTable pure_dims(const HodgeDatum& d) {
    DimTable t;
    for (const auto& piece : hodge_decomposition(d)) t[{piece.p, piece.q}] = static_cast<int>(piece.space.dim());
    return nonzero(t);
}

int cmd_validate(const Common& c, const std::string& path) {
    Payload p = payload_from_json(read_json_file(path), c.center);
    json out;
    Report r;
    if (auto* l = std::get_if<LmhsDatum>(&p)) {
        out["kind"] = "lmhs";
        r = validate_lmhs(*l);
        if (!c.samples.empty()) {
            Report s = disc_sample(*l, parse_samples(c.samples));
            for (auto& cl : s.clauses) r.add("disc_sample." + cl.name, cl.ok, cl.message);
        }
    } else {
        out["kind"] = "phs";
        r = validate_phs(std::get<HodgeDatum>(p));
    }
    json rep = to_json(r);
    out["ok"] = rep["ok"];
    out["clauses"] = rep["clauses"];
    emit(c, dump(out));
    return r.ok() ? kPass : kFail;
}

void write_witness(const std::string& dir, const std::string& name, const LmhsDatum& l) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream f(dir + "/" + name + ".json");
    if (!f) throw ParseError("cannot write witness into '" + dir + "'");
    f << dump(to_json(l));
}

int classify_minimal(const Common& c, const HodgeNumbers& h, const std::string& witness_dir, json& out,
                     std::string& text) {
    json types = json::array();
    bool ok = true;
    for (const auto& t : minimal_types(h)) {
        LmhsDatum w = minimal_witness(t, h);
        Report r = validate_lmhs(w);
        bool match = nonzero(deligne_splitting(w).dims()) == t.i_table;
        ok = ok && r.ok() && match;
        json e;
        e["type"] = t.label();
        e["kind"] = t.kind == MinimalType::Kind::I ? "I" : "II";
        e["p_o"] = t.p_o;
        e["q_o"] = t.q_o;
        e["nodes"] = dims_to_json(t.i_table);
        e["witness_valid"] = r.ok();
        e["witness_matches"] = match;
        types.push_back(e);
        write_witness(witness_dir, "minimal-" + t.label(), w);
        if (c.format != "json") {
            DiagramSpec d = make_diagram(w);
            text += "# " + t.label() + "\n" + render(c.format, d);
        }
    }
    out["count"] = types.size();
    out["types"] = std::move(types);
    return ok ? kPass : kFail;
}

int classify_hodge_tate(const Common& c, const HodgeNumbers& h, const std::string& witness_dir, json& out,
                        std::string& text) {
    bool gate = ht_gate(h);
    out["gate"] = gate;
    if (!gate) {
        out["reason"] = "GateFailed: h^{n-k,k} must not decrease up to the middle";
        return kFail;
    }
    HtPlan plan = ht_plan(h);
    out["plan"] = plan.d;
    LmhsDatum l = ht_construct(h);
    Bigrading b = deligne_splitting(l);
    AdjointLmhs a = adjoint_lmhs(l);
    Report v = validate_lmhs(l);
    Report cp = cp_orb_check(a.I_g.dims());
    Report ds = disc_sample(l, c.samples.empty() ? std::vector<mpq_class>{1, 2, 10} : parse_samples(c.samples));
    bool ht = is_hodge_tate(b) && is_hodge_tate(a.I_g.dims());
    out["nodes"] = dims_to_json(b.dims());
    out["adjoint_nodes"] = dims_to_json(a.I_g.dims());
    out["hodge_tate"] = ht;
    out["validate"] = to_json(v);
    out["cp_orb"] = to_json(cp);
    out["disc_sample"] = to_json(ds);
    write_witness(witness_dir, "hodge-tate", l);
    if (c.format != "json") text = render(c.format, make_diagram(l));
    return (ht && v.ok() && cp.ok() && ds.ok()) ? kPass : kFail;
}

int classify_closed_orbit(const Common& c, const HodgeNumbers& h, const std::string& witness_dir, json& out,
                          std::string& text) {
    std::optional<LmhsDatum> l;
    if (ht_gate(h)) {
        l = ht_construct(h);
        out["construction"] = "hodge-tate";
    } else if ((l = closed_orbit_construct(h))) {
        out["construction"] = "v-shape";
    }
    if (!l) {
        out["construction"] = nullptr;
        out["verdict"] = "violation";
        out["reason"] = h.n % 2 != 0 ? "OddWeightNonHT: odd weight and the Hodge–Tate gate fails"
                                     : "no decomposition into strings of level 2 mod 4 plus (m+-1,m-+1) classes";
        return kFail;
    }
    Bigrading b = deligne_splitting(*l);
    PeriodClosedResult res = period_closed_check(b.dims(), h.n);
    Report v = validate_lmhs(*l);
    out["nodes"] = dims_to_json(b.dims());
    out["verdict"] = res.verdict;
    out["report"] = to_json(res.report);
    out["validate"] = to_json(v);
    write_witness(witness_dir, "closed-orbit", *l);
    if (c.format != "json") text = render(c.format, make_diagram(*l));
    return (res.verdict != "violation" && v.ok()) ? kPass : kFail;
}

int cmd_classify(const Common& c, int n, const std::string& hlist, const std::string& mode,
                 const std::string& witness_dir) {
    HodgeNumbers h = parse_hodge_numbers(n, hlist);
    if (!h.symmetric() || h.total() <= 0)
        throw Error("InadmissibleHodgeNumbers", "Hodge numbers must be symmetric, non-negative, with positive total");
    json out;
    out["n"] = n;
    out["h"] = h.h;
    out["mode"] = mode;
    std::string text;
    int code = kPass;
    if (mode == "minimal")
        code = classify_minimal(c, h, witness_dir, out, text);
    else if (mode == "hodge-tate")
        code = classify_hodge_tate(c, h, witness_dir, out, text);
    else if (mode == "closed-orbit")
        code = classify_closed_orbit(c, h, witness_dir, out, text);
    else
        throw ParseError("unknown mode '" + mode + "' (expected minimal, hodge-tate or closed-orbit)");
    out["ok"] = code == kPass;
    emit(c, c.format == "json" ? dump(out) : text);
    return code;
}

/** @brief Diagram input: catalog name (optionally ":V" or ":g"), node list, or datum file. */
DiagramSpec diagram_input(const Common& c, const std::string& input) {
    std::string name = input, part = "V";
    if (auto colon = input.rfind(':'); colon != std::string::npos && !std::filesystem::exists(input)) {
        name = input.substr(0, colon);
        part = input.substr(colon + 1);
        if (part != "V" && part != "g") throw ParseError("diagram part must be V or g");
    }
    if (!std::filesystem::exists(name)) {
        auto entries = catalog_lookup(name);
        if (entries.size() != 1) throw ParseError("diagram needs a single catalog entry, not a group");
        return make_diagram(dims_from_json(entries.front()->compute().at(part)));
    }
    json j = read_json_file(name);
    if (j.is_array()) return make_diagram(dims_from_json(j));
    if (j.is_object() && j.contains("nodes") && !j.contains("Q")) return make_diagram(dims_from_json(j.at("nodes")));
    Payload p = payload_from_json(j, c.center);
    if (auto* l = std::get_if<LmhsDatum>(&p)) return make_diagram(*l);
    return make_diagram(pure_dims(std::get<HodgeDatum>(p)));
}

int cmd_diagram(const Common& c, const std::string& input) {
    DiagramSpec d = diagram_input(c, input);
    if (c.format == "json") {
        json out;
        out["nodes"] = dims_to_json(d.nodes);
        out["range"] = {{"p", {d.p_min, d.p_max}}, {"q", {d.q_min, d.q_max}}};
        json arrows = json::array();
        for (const auto& a : d.arrows) arrows.push_back({a.first, a.second});
        out["arrows"] = std::move(arrows);
        emit(c, dump(out));
    } else {
        emit(c, render(c.format, d));
    }
    return kPass;
}

int cmd_catalog(const Common& c, const std::string& name) {
    if (name.empty()) {
        json list = json::array();
        std::string text;
        for (const auto& e : catalog_entries()) {
            list.push_back({{"name", e.name}, {"group", e.group}, {"kind", e.kind}, {"description", e.description}});
            text += e.name + "\t" + e.kind + "\t" + e.description + "\n";
        }
        emit(c, c.format == "json" ? dump(json{{"entries", list}}) : text);
        return kPass;
    }
    const std::string dir = catalog_dir();
    json results = json::array();
    std::string text;
    bool all = true;
    for (const CatalogEntry* e : catalog_lookup(name)) {
        CatalogCheck chk = catalog_check(*e, dir);
        all = all && chk.match;
        results.push_back({{"name", chk.name}, {"match", chk.match}, {"diff", chk.diff}});
        text += (chk.match ? "MATCH " : "DIFF  ") + chk.name + "\n" + chk.diff;
    }
    emit(c, c.format == "json" ? dump(json{{"catalog_dir", dir}, {"ok", all}, {"entries", results}}) : text);
    return all ? kPass : kFail;
}

int cmd_verify_corpus(const Common& c, std::uint64_t seed, std::optional<std::size_t> limit, bool mutate) {
    CorpusOptions opts;
    opts.seed = seed;
    opts.limit = limit;
    if (mutate) opts.sign = PolarizationSign::Flipped;
    auto t0 = std::chrono::steady_clock::now();
    CorpusResult r = verify_corpus(opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json out;
    out["ok"] = r.ok();
    out["seed"] = seed;
    out["cases"] = r.cases;
    out["checks"] = r.checks;
    out["first_failure"] = r.first_failure();
    json fails = json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) fails.push_back(r.failures[i]);
    out["failures"] = std::move(fails);
    out["failure_count"] = r.failures.size();
    out["seconds"] = static_cast<long long>(secs * 1000) / 1000.0;
    emit(c, dump(out));
    return r.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degenerations of polarized Hodge structures: validation, classification and diagrams"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format: json, ascii or svg")
            ->check(CLI::IsMember({"json", "ascii", "svg"}));
        sub->add_option("--out", common.out, "Write output to PATH instead of stdout");
        sub->add_option("--center", common.center, "Center of the weight filtration (default: the weight)");
        sub->add_option("--samples", common.samples, "Disc sample points y1,y2,... (rationals)");
    };

    std::string path;
    auto* validate = app.add_subcommand("validate", "Validate a PHS or LMHS JSON file");
    validate->add_option("path", path, "JSON file")->required();
    add_common(validate);

    int n = 0;
    std::string hlist, mode, witness_dir;
    auto* classify = app.add_subcommand("classify", "Classify degenerations for weight n and Hodge numbers h");
    classify->add_option("n", n, "Weight")->required();
    classify->add_option("hodge_numbers", hlist, "Hodge numbers h^{n,0},...,h^{0,n}, comma separated")->required();
    classify->add_option("mode", mode, "minimal, hodge-tate or closed-orbit")->required();
    classify->add_option("--witness", witness_dir, "Directory for constructed witness LMHS files");
    add_common(classify);

    std::string input;
    auto* diagram = app.add_subcommand("diagram", "Render a (p,q)-diagram");
    diagram->add_option("input", input, "Catalog name[:V|:g], node-list JSON or datum JSON")->required();
    add_common(diagram);

    std::string cat_name;
    auto* catalog = app.add_subcommand("catalog", "List catalog entries or recompute and diff against golden data");
    catalog->add_option("name", cat_name, "Entry, alias or group (G2, F4)");
    add_common(catalog);

    std::uint64_t seed = 1;
    std::optional<std::size_t> limit;
    bool mutate = false;
    auto* corpus = app.add_subcommand("verify-corpus", "Generate the property corpus and check every invariant");
    corpus->add_option("--seed", seed, "Shuffle and sampling seed");
    corpus->add_option("--limit", limit, "Verify at most this many cases");
    corpus->add_flag("--mutate-sign", mutate, "Inject a flipped polarization sign (mutation test)");
    add_common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (*validate) return cmd_validate(common, path);
        if (*classify) return cmd_classify(common, n, hlist, mode, witness_dir);
        if (*diagram) return cmd_diagram(common, input);
        if (*catalog) return cmd_catalog(common, cat_name);
        if (*corpus) return cmd_verify_corpus(common, seed, limit, mutate);
    } catch (const Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "InputError"}, {"message", e.what()}}.dump() << "\n";
        return kInputError;
    }
    return kInputError;
}
