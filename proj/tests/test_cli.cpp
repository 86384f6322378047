#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monocat/bridges.hpp"
#include "monocat/cli.hpp"
#include "monocat/io.hpp"
#include "monocat/random.hpp"

using namespace monocat;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "monocat");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& j) {
    const auto path = std::filesystem::temp_directory_path() / ("monocat_test_" + name + ".json");
    std::ofstream(path) << j.dump();
    return path.string();
}

} // namespace

TEST_CASE("json round trips") {
    SplitMix64 rng(401);
    for (int k = 0; k < 10; ++k) {
        const RingCtx c(k % 2 ? 2 : 5, unsigned(rng.between(2, 4)));
        const auto m = random_module(rng, c, 6);
        const auto m2 = io::module_from_json(io::module_to_json(m));
        CHECK(m2.action() == m.action());
        const auto s = MorphObject(random_mono(rng, m, 2), Kind::S);
        const auto s2 = io::object_from_json(io::object_to_json(s));
        CHECK(s2.map().matrix() == s.map().matrix());
        CHECK(s2.kind() == Kind::S);
        const auto g = psi(s);
        const auto g2 = io::gamma_from_json(io::gamma_to_json(g));
        CHECK(g2.dims() == g.dims());
        CHECK(g2.actions() == g.actions());
        const auto h = MorphMap::identity(s);
        const auto h2 = io::square_from_json(io::square_to_json(h));
        CHECK(h2.sigma2().matrix() == h.sigma2().matrix());
    }
    const json blocks = {{"p", 5}, {"n", 3}, {"blocks", {2, 1}}};
    CHECK(jordan_type(io::module_from_json(blocks)).blocks == std::vector<unsigned>{2, 1});
}

TEST_CASE("json validation") {
    CHECK_THROWS_AS(io::ctx_from_json(json{{"p", 4}, {"n", 2}}), InvalidArgument);
    CHECK_THROWS_AS(io::ctx_from_json(json{{"p", 5}, {"n", 0}}), InvalidArgument);
    CHECK_THROWS(io::module_from_json(json{{"p", 5}, {"n", 2}, {"dim", 2}, {"x", {{0, 0}}}}));
    // x^2 != 0 over Λ_2
    CHECK_THROWS(io::module_from_json(json{{"p", 5}, {"n", 2}, {"dim", 3}, {"x", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}}));
}

TEST_CASE("cli commands") {
    const auto r = cli({"gamma-table", "--n", "4", "--p", "5"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("total_dim") == 10);

    const auto m = write_temp("j2j1", json{{"p", 5}, {"n", 3}, {"blocks", {2, 1}}});
    const auto j = cli({"jordan", m});
    CHECK(j.code == 0);
    CHECK(json::parse(j.out).at("type") == json{2, 1});

    const auto n = write_temp("j3", json{{"p", 5}, {"n", 3}, {"blocks", {3}}});
    CHECK(json::parse(cli({"hom", m, n}).out).at("dim") == 3);
    CHECK(json::parse(cli({"stable-hom", m, n}).out).at("dim") == 0);
    CHECK(json::parse(cli({"tor", m, m}).out).at("dim") == 4);
    CHECK(cli({"rho-check", m}).code == 0);
}

TEST_CASE("cli errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"jordan", "/nonexistent/file.json"}).code == 2);
    const auto bad = write_temp("bad", json{{"p", 6}, {"n", 2}, {"blocks", {1}}});
    const auto r = cli({"jordan", bad});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    CHECK(cli({"gamma-table", "--n", "3", "--p", "4"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify report replays") {
    const auto r = cli({"verify", "--suite", "dims", "--n-max", "3", "--p", "2"});
    CHECK(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report.at("ok") == true);
    CHECK(report.contains("timing_ms"));
    const auto path = write_temp("report", report);
    const auto rr = cli({"verify", "--replay", path});
    CHECK(rr.code == 0);
    CHECK(json::parse(rr.out).at("identical") == true);
    CHECK(cli({"verify", "--suite", "nope"}).code == 2);
}
