#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "dualramsey/io.hpp"

using namespace dualramsey;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string samples = SAMPLES_DIR;

} // namespace

TEST(Cli, CountRigidSurjections)
{
    const auto r = run({"count", "--class", "ch-rs", "--source", "3", "--target", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, EnumerateEmitsJsonLines)
{
    const auto r = run({"enumerate", "--class", "ch-rs", "--source", "3", "--target", "2"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<VertexMorphism> got;
    while (std::getline(lines, line))
        got.push_back(morphism_from_json(Json::parse(line)));
    ASSERT_EQ(got.size(), 3u);
    EXPECT_EQ(got[0].image_of("3"), "2");
    const auto t = run({"--format", "table", "enumerate", "--class", "ch-rs", "--source", "3", "--target", "2"});
    EXPECT_EQ(t.out, "1 1 2\n1 2 1\n1 2 2\n");
}

TEST(Cli, CheckMorphismOnTheWorkedExample)
{
    const auto f = run({"check-morphism", "--class", "oogra-srq", "--source", samples + "/hexagon.json", "--target",
                        samples + "/triangle.json", "--map", samples + "/wrap.json"});
    ASSERT_EQ(f.code, 0) << f.err;
    const auto jf = Json::parse(f.out);
    EXPECT_FALSE(jf["accepted"].get<bool>());
    EXPECT_EQ(jf["witness"][0], Json::parse(R"(["3","4"])"));
    EXPECT_EQ(jf["witness"][1], Json::parse(R"(["3","1"])"));

    const auto g = run({"check-morphism", "--class", "oogra-srq", "--source", samples + "/hexagon.json", "--target",
                        samples + "/triangle.json", "--map", samples + "/collapse.json"});
    ASSERT_EQ(g.code, 0);
    EXPECT_TRUE(Json::parse(g.out)["accepted"].get<bool>());
}

TEST(Cli, ArrowExitCodes)
{
    EXPECT_EQ(run({"arrow", "--class", "ch-rs", "--c", "3", "--b", "3", "--a", "2"}).code, 10);
    EXPECT_EQ(run({"arrow", "--class", "ch-emb", "--mode", "direct", "--c", "3", "--b", "2", "--a", "1"}).code, 0);
    EXPECT_EQ(run({"arrow", "--class", "ch-rs", "--c", "6", "--b", "3", "--a", "2"}).code, 2);
    const auto wide = run({"--guard-homset", "40", "--verify", "arrow", "--class", "ch-rs", "--c", "6", "--b", "3",
                           "--a", "2"});
    EXPECT_EQ(wide.code, 0);
    EXPECT_TRUE(Json::parse(wide.out)["holds"].get<bool>());
    EXPECT_EQ(run({"arrow", "--class", "ch-rs", "--colors", "9", "--c", "3", "--b", "3", "--a", "2"}).code, 2);
}

TEST(Cli, Fdrt)
{
    EXPECT_EQ(run({"fdrt", "--a", "2", "--m", "3", "--n", "5"}).code, 10);
    EXPECT_EQ(run({"--guard-homset", "40", "fdrt", "--a", "2", "--m", "3", "--n", "6"}).code, 0);
    EXPECT_EQ(run({"fdrt", "--a", "3", "--m", "2", "--n", "5"}).code, 1);
}

TEST(Cli, GlueSplitRelabelDot)
{
    const auto g = run({"--verify", "glue", "--input", samples + "/cocone.json"});
    ASSERT_EQ(g.code, 0) << g.err;
    const auto j = Json::parse(g.out);
    EXPECT_TRUE(j["contracts"]["phi_srq"].get<bool>());
    EXPECT_TRUE(j["contracts"]["commuting_cocone"].get<bool>());
    EXPECT_EQ(oograph_from_json(j["graph"]).size(), 6u);

    const auto s = run({"split", "--input", samples + "/triangle.json"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(edig_pair_from_json(Json::parse(s.out)).second.arcs().size(), 1u);

    const auto r = run({"relabel", "--input", samples + "/triangle.json", "--prefix", "v"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(oograph_from_json(Json::parse(r.out)["graph"]).chain(), Chain({"v1", "v2", "v3"}));

    const auto d = run({"export-dot", "--input", samples + "/hexagon.json"});
    EXPECT_NE(d.out.find("\"6\" -> \"1\""), std::string::npos);
}

TEST(Cli, InputErrors)
{
    const auto missing = run({"split", "--input", "/nonexistent.json"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("--input"), std::string::npos);
    const auto bad = run({"split", "--input", R"({"vertices":["a"],"arcs":[["a","z"]]})"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("arcs"), std::string::npos);
    EXPECT_EQ(run({"count", "--class", "nope", "--source", "3", "--target", "2"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_TRUE(run({"count", "--source", "3", "--target", "2"}).out == "3\n");
}

TEST(Cli, EmittedJsonReparses)
{
    const auto r = run({"relabel", "--input", samples + "/hexagon.json", "--prefix", "x"});
    const auto j = Json::parse(r.out);
    const auto g = oograph_from_json(j["graph"]);
    EXPECT_EQ(to_json(g), j["graph"]);
    const auto m = morphism_from_json(j["renaming"]);
    EXPECT_EQ(to_json(m), j["renaming"]);
}
