#include "cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace g2k;
using namespace g2k::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("g2k_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& s) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << s;
}

RunConfig config(const std::string& cmd, std::vector<std::string> fixtures = {}) {
    RunConfig c;
    c.command = cmd;
    c.fixtures = std::move(fixtures);
    c.data_dir = G2K_DATA_DIR;
    return c;
}

}  // namespace

TEST(Cli, Sha256KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cli, ParseErrorsCarryLineAndColumn) {
    try {
        parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "mem.json");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("mem.json:3:8:", 0), 0u) << e.what();
    }
}

TEST(Cli, Tolerances) {
    Tolerances t;
    EXPECT_DOUBLE_EQ(t["decay_slope_max"], -2.9);
    EXPECT_DOUBLE_EQ(t["fourier_factor_max"], 1.05);
    t.set("decay_slope_max=-3");
    EXPECT_DOUBLE_EQ(t["decay_slope_max"], -3);
    EXPECT_THROW(t.set("nope=1"), InputError);
    EXPECT_THROW(t.set("closedness_max"), InputError);
    EXPECT_THROW(t.set("closedness_max=1e-6x"), InputError);
}

TEST(Cli, CatalogOfShippedFixtures) {
    auto cat = list_examples(fs::path(G2K_DATA_DIR) / "fixtures");
    std::map<std::string, Expectations> by;
    for (const auto& e : cat) by[e.tag] = e.expected;
    ASSERT_EQ(by.size(), 5u);
    EXPECT_EQ(*by["ex42"].total, 4u);
    EXPECT_EQ(*by["ex43"].total, 8u);
    EXPECT_EQ(*by["ex44"].total, 32u);
    EXPECT_EQ(by["ex45"].by_component.at("c4"), 4u);
    EXPECT_EQ(by["ex45"].by_component.at("dic2"), 8u);
    EXPECT_EQ(*by["ex47"].total, 12u);
}

TEST(Cli, CatalogEdgeCases) {
    auto empty = scratch("empty");
    EXPECT_TRUE(list_examples(empty).empty());
    EXPECT_TRUE(list_examples(empty / "missing").empty());

    auto dup = scratch("dup");
    std::string text = read_file(fs::path(G2K_DATA_DIR) / "fixtures" / "ex42.json");
    write(dup / "a.json", text);
    write(dup / "b.json", text);
    EXPECT_THROW(list_examples(dup), InputError);
}

TEST(Cli, CountReportsMatchFixtures) {
    for (const std::string tag : {"ex42", "ex43", "ex44", "ex45", "ex47"}) {
        RunResult r = run(config("count-associatives", {tag}));
        EXPECT_EQ(r.exit_code, 0) << tag;
        EXPECT_TRUE(r.report["pass"].get<bool>());
        for (const auto& e : r.report["expectations"]) EXPECT_TRUE(e["pass"].get<bool>()) << e.dump();
    }
    RunResult r = run(config("count-associatives", {"ex44"}));
    EXPECT_EQ(r.report["results"]["ex44"]["guaranteed_total"], 32);
    EXPECT_EQ(r.report["provenance"][0], "ex44");
}

TEST(Cli, DigestsAreReproducible) {
    RunResult a = run(config("count-associatives", {"ex47"}));
    RunResult b = run(config("count-associatives", {"ex47"}));
    EXPECT_EQ(a.report["digest"], b.report["digest"]);
    json x = a.report, y = b.report;
    x.erase("timings_ms");
    y.erase("timings_ms");
    EXPECT_EQ(x.dump(), y.dump());
    EXPECT_EQ(a.csv, b.csv);

    // fixture digest is the content hash
    auto file = fs::path(G2K_DATA_DIR) / "fixtures" / "ex47.json";
    EXPECT_EQ(a.report["fixtures"][0]["sha256"], sha256_hex(read_file(file)));

    // report digest covers everything except timings and itself
    json body = a.report;
    body.erase("timings_ms");
    body.erase("digest");
    EXPECT_EQ(a.report["digest"], sha256_hex(body.dump()));

    RunConfig seeded = config("verify-gh");
    seeded.seed = 5;
    EXPECT_EQ(run(seeded).report["digest"], run(seeded).report["digest"]);
    RunConfig other = seeded;
    other.seed = 6;
    EXPECT_NE(run(seeded).report["digest"], run(other).report["digest"]);
}

TEST(Cli, MismatchesListedIndividually) {
    auto dir = scratch("mismatch");
    json j = json::parse(read_file(fs::path(G2K_DATA_DIR) / "fixtures" / "ex45.json"));
    j["expected"]["total"] = 13;
    j["expected"]["by_component"]["dic2"] = 9;
    write(dir / "ex45bad.json", j.dump());
    RunResult r = run(config("count-associatives", {(dir / "ex45bad.json").string()}));
    EXPECT_EQ(r.exit_code, 1);
    std::size_t failed = 0;
    for (const auto& e : r.report["expectations"]) failed += e["pass"].get<bool>() ? 0 : 1;
    EXPECT_EQ(failed, 2u);
}

TEST(Cli, MalformedInputRejected) {
    auto dir = scratch("malformed");
    write(dir / "bad.json", "{\"orbifold\": [1, 2,, 3]}");
    EXPECT_THROW(run(config("count-associatives", {(dir / "bad.json").string()})), InputError);
    write(dir / "shape.json", "{\"orbifold\": {\"components\": [{\"id\": \"a\"}]}}");
    EXPECT_THROW(run(config("count-associatives", {(dir / "shape.json").string()})), InputError);
    EXPECT_THROW(run(config("count-associatives", {"no-such-tag"})), InputError);
    EXPECT_THROW(run(config("count-associatives")), InputError);
    EXPECT_THROW(run(config("frobnicate")), InputError);
}

TEST(Cli, AtomicWriteReplaces) {
    auto dir = scratch("atomic");
    atomic_write(dir / "r.json", "one");
    atomic_write(dir / "r.json", "two");
    EXPECT_EQ(read_file(dir / "r.json"), "two");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    EXPECT_EQ(files, 1u);
}

TEST(Cli, SingularSetAndPartialFixtures) {
    RunResult r = run(config("singular-set", {"ex47"}));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["results"]["ex47"]["component_count"], 12);
    RunResult p = run(config("singular-set", {"ex44"}));
    EXPECT_EQ(p.exit_code, 0);
    EXPECT_EQ(p.report["notes"].size(), 1u);
}

TEST(Cli, NumericCommandsPass) {
    for (const std::string cmd : {"enumerate-bieberbach", "verify-gh", "fueter-demo"}) {
        RunResult r = run(config(cmd));
        EXPECT_EQ(r.exit_code, 0) << cmd;
        for (const auto& c : r.report["checks"]) {
            EXPECT_TRUE(c.contains("tolerance"));
            EXPECT_TRUE(c["pass"].get<bool>()) << cmd << " " << c.dump();
        }
    }
}

TEST(Cli, FixedLocusByName) {
    RunConfig c = config("fixed-locus");
    c.ade = "A1";
    c.rotations = {"R2"};
    RunResult r = run(c);
    EXPECT_EQ(r.report["results"]["A1.R2"]["component_count"], 2);
    c.rotations = {"R7"};
    EXPECT_THROW(run(c), InputError);
    c.ade = "E8";
    c.rotations = {"R2"};
    EXPECT_THROW(run(c), InputError);
}
