#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hodge/catalog.hpp"
#include "hodge/classifier.hpp"
#include "hodge/diagram.hpp"
#include "hodge/errors.hpp"
#include "hodge/json_io.hpp"

using namespace hodge;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

/** @brief Run the CLI with the given arguments (stderr merged into stdout). */
RunResult run(const std::string& args, const std::string& env = {}) {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(HODGE_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("hodge-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + needle.size())) ++n;
    return n;
}

HodgeNumbers numbers(int n, std::vector<int> h) { return HodgeNumbers{n, std::move(h)}; }

}  // namespace

TEST_CASE("validate reports exit codes per outcome") {
    LmhsDatum ht = ht_construct(numbers(2, {1, 1, 1}));
    std::string good = write_file("ht.json", to_json(ht).dump());
    RunResult r = run("validate " + good);
    CHECK(r.code == 0);
    json j = parse_json(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["kind"] == "lmhs");

    LmhsDatum neg = ht;
    neg.hodge.Q = -ht.hodge.Q;
    RunResult bad = run("validate " + write_file("neg.json", to_json(neg).dump()));
    CHECK(bad.code == 1);
    json jb = parse_json(bad.out);
    bool polarization_failed = false;
    for (const auto& c : jb["clauses"])
        if (c["name"] == "polarization" && c["ok"] == false) polarization_failed = true;
    CHECK(polarization_failed);

    json broken = to_json(ht);
    broken["Q"][0][0] = "1/0";
    RunResult e = run("validate " + write_file("broken.json", broken.dump()));
    CHECK(e.code == 2);
    CHECK(parse_json(e.out).contains("error"));

    CHECK(run("validate " + write_file("garbage.json", "{not json")).code == 2);
    CHECK(run("validate " + (scratch() / "missing.json").string()).code == 2);

    // a pure structure validates through the PHS branch, with disc samples on request
    std::string pure = write_file("pure.json", to_json(model_phs(numbers(2, {1, 2, 1}))).dump());
    RunResult rp = run("validate " + pure);
    CHECK(rp.code == 0);
    CHECK(parse_json(rp.out)["kind"] == "phs");
    CHECK(run("validate " + good + " --samples 1,2,10").code == 0);
}

TEST_CASE("classify modes") {
    RunResult m3 = run("classify 3 1,1,1,1 minimal");
    CHECK(m3.code == 0);
    json j3 = parse_json(m3.out);
    CHECK(j3["count"] == 2);
    for (const auto& t : j3["types"]) {
        CHECK(t["witness_valid"] == true);
        CHECK(t["witness_matches"] == true);
    }

    RunResult m1 = run("classify 1 1,1 minimal");
    CHECK(m1.code == 0);
    CHECK(parse_json(m1.out)["count"] == 1);

    RunResult gate = run("classify 2 2,1,2 hodge-tate");
    CHECK(gate.code == 1);
    CHECK(parse_json(gate.out)["gate"] == false);

    RunResult ht = run("classify 4 1,2,4,2,1 hodge-tate");
    CHECK(ht.code == 0);
    json jh = parse_json(ht.out);
    CHECK(jh["hodge_tate"] == true);
    CHECK(jh["cp_orb"]["ok"] == true);

    RunResult co = run("classify 2 2,1,2 closed-orbit");
    CHECK(co.code == 0);
    CHECK(parse_json(co.out)["verdict"] == "consistent-with-closed-orbit");

    RunResult odd = run("classify 3 2,1,1,2 closed-orbit");
    CHECK(odd.code == 1);
    CHECK(parse_json(odd.out)["verdict"] == "violation");

    CHECK(run("classify 2 1,2 minimal").code == 2);
    CHECK(run("classify 2 1,x,1 minimal").code == 2);
    CHECK(run("classify 2 1,1,1 nonsense").code == 2);

    fs::path wdir = scratch() / "witnesses";
    fs::create_directories(wdir);
    CHECK(run("classify 2 1,1,1 minimal --witness " + wdir.string()).code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(wdir)) {
        ++files;
        CHECK(run("validate " + entry.path().string()).code == 0);
    }
    CHECK(files == 1);  // only kind II: kind I(0,2) would need h^{1,1} >= 2
}

TEST_CASE("diagram rendering") {
    std::string ht = write_file("ht111.json", to_json(ht_construct(numbers(2, {1, 1, 1}))).dump());
    RunResult a = run("diagram " + ht + " --format ascii");
    CHECK(a.code == 0);
    CHECK(count(a.out, "*") == 3);
    CHECK(count(a.out, "@") == 0);
    CHECK(run("diagram " + ht + " --format ascii").out == a.out);

    RunResult svg = run("diagram F4-row1 --format svg");
    CHECK(svg.code == 0);
    CHECK(count(svg.out, "class=\"ring\"") == 3);
    CHECK(svg.out.rfind("<svg", 0) == 0);

    RunResult empty = run("diagram " + write_file("empty.json", R"({"nodes": []})") + " --format ascii");
    CHECK(empty.code == 0);
    CHECK(count(empty.out, "*") == 0);
    CHECK(count(empty.out, ".") > 0);

    RunResult g = run("diagram G2-closed:g --format json");
    CHECK(g.code == 0);
    CHECK(dims_from_json(parse_json(g.out)["nodes"]).size() == 11);

    CHECK(run("diagram no-such-thing --format ascii").code == 2);
    CHECK(run("diagram " + ht + " --format png").code != 0);

    // library-level rendering of the empty table: axes only
    DiagramSpec d = make_diagram(DimTable{});
    std::string text = render_ascii(d);
    CHECK(count(text, "*") == 0);
    CHECK(count(render_svg(d), "class=\"node\"") == 0);
}

TEST_CASE("catalog recomputation and golden diffs") {
    RunResult list = run("catalog");
    CHECK(list.code == 0);
    CHECK(list.out.find("G2-split-closed") != std::string::npos);

    RunResult g2 = run("catalog G2 --format json");
    CHECK(g2.code == 0);
    json jg = parse_json(g2.out);
    CHECK(jg["ok"] == true);
    CHECK(jg["entries"].size() == 4);

    RunResult f4 = run("catalog F4 --format json");
    CHECK(f4.code == 0);
    CHECK(parse_json(f4.out)["entries"].size() == 4);

    RunResult unknown = run("catalog E8-whatever");
    CHECK(unknown.code == 2);
    CHECK(unknown.out.find("F4-FI-row1") != std::string::npos);

    // an altered golden directory produces a node-list diff and exit 1
    fs::path alt = scratch() / "alt-catalog";
    fs::create_directories(alt);
    for (const auto& e : catalog_entries()) {
        json golden = catalog_golden(e);
        if (e.name == "G2-split-closed") golden["expected"]["g"][0][2] = 7;
        std::ofstream(alt / (e.name + ".json")) << golden.dump(1);
    }
    RunResult diff = run("catalog G2", "HODGE_DEGEN_CATALOG=" + alt.string());
    CHECK(diff.code == 1);
    CHECK(diff.out.find("--- expected") != std::string::npos);
    CHECK(run("catalog F4", "HODGE_DEGEN_CATALOG=" + alt.string()).code == 0);
}

TEST_CASE("corpus verification from the command line") {
    RunResult vac = run("verify-corpus --limit 0");
    CHECK(vac.code == 0);
    CHECK(parse_json(vac.out)["cases"] == 0);

    RunResult small = run("verify-corpus --limit 6 --seed 3");
    CHECK(small.code == 0);
    CHECK(run("verify-corpus --limit 6 --seed 3").out.size() > 0);

    RunResult mut = run("verify-corpus --limit 6 --mutate-sign");
    CHECK(mut.code == 1);
    json jm = parse_json(mut.out);
    CHECK(jm["first_failure"].get<std::string>().find("polarization") != std::string::npos);
}

TEST_CASE("JSON round trip of constructor output") {
    for (const auto& h : {numbers(2, {1, 2, 1}), numbers(3, {1, 1, 1, 1})}) {
        LmhsDatum l = ht_construct(h);
        json j = to_json(l);
        LmhsDatum back = lmhs_from_json(parse_json(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(back.N == l.N);
        CHECK(back.hodge.Q == l.hodge.Q);
    }
    HodgeDatum d = model_phs(numbers(1, {2, 2}));
    CHECK(to_json(hodge_from_json(to_json(d))) == to_json(d));
    CHECK(gq_from_json(json("2+1/3*i")) == Gq(2, mpq_class(1, 3)));
    CHECK(gq_from_json(json(-4)) == Gq(-4));
    CHECK_THROWS_AS(gq_from_json(json("1/2/3")), ParseError);
    CHECK(parse_hodge_numbers(2, "1,2,1") == numbers(2, {1, 2, 1}));
    CHECK_THROWS_AS(parse_hodge_numbers(2, "1,2"), ParseError);
}
