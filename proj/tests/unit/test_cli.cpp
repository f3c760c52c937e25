#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = omcube::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

TEST(CliTest, ClassifyRhombododecahedron) {
    const auto r = invoke({"classify", "named:RD"});
    ASSERT_EQ(r.code, omcube::cli::exit_ok) << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["status"], "ok");
    EXPECT_EQ(j["command"], "classify");
    EXPECT_EQ(j["result"]["OM"], true);
    EXPECT_EQ(j["result"]["UOM"], true);
    EXPECT_EQ(j["result"]["AMP"], false);
    EXPECT_EQ(j["result"]["vcd"], 3);
    EXPECT_EQ(j["result"]["rank"], 3);
    EXPECT_FALSE(j.contains("timings"));
}

TEST(CliTest, StdinAndTextFormat) {
    const auto r = invoke({"vcdim", "-", "--format", "text"}, R"({"m":2,"vertices":["00","10","01"]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("status: ok"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("result.vcd: 1"), std::string::npos) << r.out;
}

TEST(CliTest, UomCompletion) {
    const auto r = invoke({"complete", "--mode", "uom", "named:RD"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["result"]["result"]["vertices"].size(), 15u);
    EXPECT_EQ(j["result"]["vcd"], 3);
    for (const auto& a : j["result"]["assertions"]) EXPECT_TRUE(a["passed"].get<bool>()) << a;
}

TEST(CliTest, NotCuomIsAVerdict) {
    const auto r = invoke({"complete", "--mode", "cuom", "named:C8xP3"});
    EXPECT_EQ(r.code, omcube::cli::exit_verdict);
    const auto j = r.report();
    EXPECT_EQ(j["status"], "error");
    EXPECT_EQ(j["error"]["code"], "not_cuom");
    EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, OracleWithoutCompletion) {
    const auto r = invoke({"oracle", "--dcap", "1", "named:C6"});
    EXPECT_EQ(r.code, omcube::cli::exit_verdict);
    EXPECT_EQ(r.report()["error"]["code"], "no_completion_found");
    const auto ok = invoke({"oracle", "--dcap", "3", "named:C6"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(ok.report()["result"]["d_min"], 2);
}

TEST(CliTest, ArgumentErrors) {
    EXPECT_EQ(invoke({}).code, omcube::cli::exit_precondition);
    EXPECT_EQ(invoke({"classify"}).code, omcube::cli::exit_precondition);
    EXPECT_EQ(invoke({"enumerate", "--m", "9"}).code, omcube::cli::exit_precondition);
    const auto missing = invoke({"classify", "/nonexistent/family.json"});
    EXPECT_EQ(missing.code, omcube::cli::exit_precondition);
    EXPECT_EQ(missing.report()["error"]["code"], "argument");
    const auto bad = invoke({"classify", "-"}, "{\"m\":2,\n\"vertices\":[\"0x\"]}");
    EXPECT_EQ(bad.code, omcube::cli::exit_precondition);
    EXPECT_EQ(bad.report()["error"]["code"], "parse");
    EXPECT_EQ(invoke({"gen", "uniform-om", "--m", "4", "--r", "5"}).code, omcube::cli::exit_precondition);
}

TEST(CliTest, BudgetExhaustionReportsProgress) {
    const auto r = invoke({"--budget", "0.001", "enumerate", "--m", "5", "--find-counterexamples", "--d", "3"});
    EXPECT_EQ(r.code, omcube::cli::exit_resource);
    const auto j = r.report();
    EXPECT_EQ(j["error"]["code"], "resource");
    EXPECT_TRUE(j["error"].contains("progress"));
}

TEST(CliTest, EnumerationIsStableAcrossThreadCounts) {
    const auto one = invoke({"--threads", "1", "enumerate", "--m", "4", "--classify", "--find-counterexamples", "--d", "2"});
    const auto three = invoke({"--threads", "3", "enumerate", "--m", "4", "--classify", "--find-counterexamples", "--d", "2"});
    ASSERT_EQ(one.code, 0) << one.err;
    ASSERT_EQ(three.code, 0) << three.err;
    EXPECT_EQ(one.report()["result"].dump(), three.report()["result"].dump());
    EXPECT_EQ(one.report()["result"]["counterexamples"]["classes"], 0);
}

TEST(CliTest, GeneratorsAreDeterministic) {
    const auto a = invoke({"gen", "uniform-om", "--m", "5", "--r", "3", "--seed", "11"});
    const auto b = invoke({"gen", "uniform-om", "--m", "5", "--r", "3", "--seed", "11"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(invoke({"gen", "named", "C6"}).report()["result"]["family"]["vertices"].size(), 6u);
}

TEST(CliTest, ExportDotIsRaw) {
    const auto r = invoke({"export-dot", "named:C6"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
}

}  // namespace
