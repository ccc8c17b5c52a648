#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "twh/cli.hpp"

using twh::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const std::string path = std::string(P_tmpdir) + "/twh_cli_test_" + name + ".json";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("k for the Iwahori preset") {
    const auto r = run({"k", "--preset", "sl2-iwahori"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\n  \"K0_rank\": 3,\n  \"K1_rank\": 0\n}\n");
    const auto b = run({"k", "--preset", "sl2-iwahori", "--breakdown"});
    CHECK(b.json()["classes"].size() == 2);
    const auto t = run({"k", "--preset", "sl2-iwahori", "--format", "table"});
    CHECK(t.out == "K0_rank  3\nK1_rank  0\n");
}

TEST_CASE("irr fibers") {
    const auto fixed = run({"irr", "--preset", "sl2-iwahori", "--orbit", "0"}).json();
    CHECK(fixed["label_count"] == 2);
    CHECK(fixed["dimensions"] == Json::array({1, 1}));
    CHECK(fixed["stabilizer_order"] == 2);
    const auto generic = run({"irr", "--preset", "sl2-iwahori", "--orbit", "1/3"}).json();
    CHECK(generic["label_count"] == 1);
    CHECK(generic["dimensions"] == Json::array({2}));
    const auto q = run({"irr", "--preset", "quaternion-2torus", "--orbit", "0,0"}).json();
    CHECK(q["dimensions"] == Json::array({2}));
}

TEST_CASE("homology subcommands") {
    for (const auto& [x, n] : std::vector<std::pair<std::string, int>>{{"1/3", 1}, {"0", 2}, {"1/2", 2}})
        CHECK(run({"hh0", "--preset", "sl2-iwahori", "--orbit", x}).json()["dimension"] == n);
    const auto hh = run({"hh", "--preset", "sl2-iwahori"}).json();
    CHECK(hh["classes"][0]["generic_rank"] == Json::array({1, 1}));
    CHECK(hh["classes"][1]["generic_rank"] == Json::array({2, 0}));
    const auto hp = run({"hp", "--preset", "quaternion-2torus"}).json();
    CHECK(hp["HP0"] == 1);
    CHECK(hp["HP1"] == 4);
    const auto p = run({"pairing", "--preset", "sl2-iwahori", "--orbit", "1/2"}).json();
    CHECK(p["determinant"] != "0");
    const auto hecke_hh = run({"hh", "--preset", "hecke-rank1"}).json();
    CHECK(hecke_hh["generic_rank"] == Json::array({2, 1}));
}

TEST_CASE("hecke subcommands") {
    std::vector<std::string> args{"hecke", "classify", "--preset", "hecke-rank1"};
    const std::vector<std::string> sample{"0", "1", "-1", "2", "-2", "3", "i", "1+i"};
    for (const auto& l : sample) {
        args.push_back("--lambda");
        args.push_back(l);
    }
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const auto j = r.json();
    REQUIRE(j["results"].size() == sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        CAPTURE(sample[i]);
        const bool special = sample[i] == "1" || sample[i] == "-1";
        CHECK(j["results"][i]["irreducible"] == !special);
        CHECK(j["results"][i]["sign_line_invariant"] == (sample[i] == "1"));
        CHECK(j["results"][i]["trivial_line_invariant"] == (sample[i] == "-1"));
    }
    for (const auto& [k, tempered] : std::vector<std::pair<std::string, bool>>{{"1", true}, {"-1", false}}) {
        const auto one = run({"hecke", "classify", "--preset", "hecke-rank1", "--k", k, "--lambda", "0"}).json();
        bool seen = false;
        for (const auto& m : one["one_dimensional"])
            if (m["signs"][0] == "-1") {
                seen = true;
                CHECK(m["tempered"] == tempered);
                CHECK(m["discrete_series"] == tempered);
            }
        CHECK(seen);
    }
    const auto tau = run({"hecke", "tau-check", "--preset", "hecke-rank1", "--formal-r"});
    CHECK(tau.code == 0);
    CHECK(tau.json()["ok"] == true);
    CHECK(run({"hecke", "classify", "--preset", "hecke-rank1", "--lambda", "1,2"}).code == 2);
}

TEST_CASE("oracle verify and preset list") {
    const auto v = run({"oracle", "verify", "--preset", "quaternion-2torus", "--orbit", "1/2,0", "--seed", "7"});
    CHECK(v.code == 0);
    CHECK(v.json()["ok"] == true);
    CHECK(v.json()["associativity"]["seed"] == 7);
    const auto list = run({"preset", "list"}).json();
    std::vector<std::string> names;
    for (const auto& p : list["presets"]) names.push_back(p["name"]);
    CHECK(names == std::vector<std::string>{"hecke-rank1", "quaternion-2torus", "sl2-generic-chi", "sl2-iwahori",
                                            "sl2-ramified-quadratic"});
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"k"}).code == 1);
    CHECK(run({"irr", "--preset", "sl2-iwahori"}).code == 1);
    CHECK(run({"k", "--preset", "sl2-iwahori", "--format", "xml"}).code == 1);
    CHECK(run({"k", "--preset", "no-such"}).code == 2);
    CHECK(run({"irr", "--preset", "sl2-iwahori", "--orbit", "0,0"}).code == 2);
    CHECK(run({"k", "--datum", "/nonexistent.json"}).code == 2);
    const auto bad = temp_file("bad", R"({"rank":1,"generators":[{"matrix":[[1]],"translation":["1/3"]}],
                                         "cocycle":{"type":"table","entries":[[1,1,"1/2"]]}})");
    const auto r = run({"validate", "--datum", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("triple") != std::string::npos);
    CHECK(Json::parse(r.err)["error"] == "validation");
    CHECK(run({"k", "--datum", bad, "--max-group-order", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    std::remove(bad.c_str());
}

TEST_CASE("determinism and preset round trip through files") {
    for (const std::string preset : {"sl2-iwahori", "sl2-ramified-quadratic", "sl2-generic-chi", "quaternion-2torus"}) {
        CAPTURE(preset);
        const auto canon = run({"validate", "--preset", preset, "--canonical"});
        REQUIRE(canon.code == 0);
        const auto path = temp_file(preset, canon.out);
        CHECK(run({"validate", "--datum", path, "--canonical"}).out == canon.out);
        const std::string origin = preset == "quaternion-2torus" ? "0,0" : "0";
        for (const std::vector<std::string> cmd :
             {std::vector<std::string>{"k"}, {"hp"}, {"hh"}, {"irr", "--orbit", origin}, {"pairing", "--orbit", origin}}) {
            auto with_preset = cmd, with_file = cmd;
            with_preset.insert(with_preset.end(), {"--preset", preset});
            with_file.insert(with_file.end(), {"--datum", path});
            const auto a = run(with_preset), b = run(with_preset), c = run(with_file);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK(a.out == c.out);
        }
        std::remove(path.c_str());
    }
    const auto h = run({"validate", "--preset", "hecke-rank1", "--k", "3/2", "--canonical"});
    const auto path = temp_file("hecke", h.out);
    CHECK(run({"validate", "--datum", path, "--canonical"}).out == h.out);
    CHECK(run({"hecke", "classify", "--datum", path, "--lambda", "3/2"}).out ==
          run({"hecke", "classify", "--preset", "hecke-rank1", "--k", "3/2", "--lambda", "3/2"}).out);
    std::remove(path.c_str());
}
