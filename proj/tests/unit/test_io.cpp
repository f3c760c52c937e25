#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <string>

#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/io.hpp"

namespace omcube {
namespace {

std::string parse_error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::parse);
        return e.what();
    }
    ADD_FAILURE() << "expected a parse error";
    return {};
}

TEST(BitstringTest, ElementOneIsLeftmost) {
    EXPECT_EQ(io::bitstring(0b001, 3), "100");
    EXPECT_EQ(io::bitstring(0b001, 3, io::BitOrder::msb_element_m), "001");
    EXPECT_EQ(io::parse_bitstring("110", 3), 0b011u);
    EXPECT_EQ(io::parse_bitstring("110", 3, io::BitOrder::msb_element_m), 0b110u);
    for (Mask v = 0; v < 64; ++v) EXPECT_EQ(io::parse_bitstring(io::bitstring(v, 6), 6), v);
}

TEST(FamilyJsonTest, RoundTrip) {
    for (const char* name : {"RD", "C6", "C8xP3", "Q3"}) {
        const auto f = named(name);
        EXPECT_EQ(io::parse_family(io::family_to_json(f).dump()), f) << name;
    }
}

TEST(FamilyJsonTest, AlternateEncodings) {
    const auto a = io::parse_family(R"({"m":3,"bit_order":"msb_element_m","vertices":["001","110"]})");
    EXPECT_EQ(a, Family(3, {0b001, 0b110}));
    const auto b = io::parse_family(R"({"m":3,"vertices":[1,6]})");
    EXPECT_EQ(b, a);
    EXPECT_EQ(io::family_to_json(a).at("vertices"), io::Json::array({"100", "011"}));
}

TEST(FamilyJsonTest, Errors) {
    const auto msg = parse_error_message([] { io::parse_family("{\"m\": 3,\n  \"vertices\": [\"101\",]\n}"); });
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    parse_error_message([] { io::parse_family(R"({"m":3,"vertices":["10"]})"); });
    parse_error_message([] { io::parse_family(R"({"m":3,"vertices":["1a1"]})"); });
    parse_error_message([] { io::parse_family(R"({"m":3,"vertices":[9]})"); });
    parse_error_message([] { io::parse_family(R"({"vertices":[]})"); });
}

TEST(SignSystemTextTest, CommentsAndRoundTrip) {
    const auto sys = io::parse_signsystem("# hexagon\n++0\n  -+-   # tail\n\n000\n");
    EXPECT_EQ(sys.m(), 3);
    EXPECT_EQ(sys.size(), 3u);
    EXPECT_EQ(io::parse_signsystem(io::format_signsystem(sys)), sys);
}

TEST(SignSystemTextTest, ErrorsCarryPosition) {
    auto msg = parse_error_message([] { io::parse_signsystem("++0\n+x0\n"); });
    EXPECT_NE(msg.find("line 2, column 2"), std::string::npos) << msg;
    msg = parse_error_message([] { io::parse_signsystem("++0\n\n+-\n"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    parse_error_message([] { io::parse_signsystem("# empty\n"); });
}

TEST(ArrangementJsonTest, RoundTripAndLessThanRows) {
    const auto arr = c8xk2_arrangement();
    const auto back = io::parse_arrangement(io::arrangement_to_json(arr).dump());
    EXPECT_EQ(back.vectors, arr.vectors);
    EXPECT_EQ(back.r, arr.r);

    const auto lt = io::parse_arrangement(R"({"r":2,"vectors":[[1,0],[0,1]],"region":[[1,1,"<",3]]})");
    ASSERT_EQ(lt.region.size(), 1u);
    EXPECT_EQ(lt.region[0].normal, (std::vector<std::int64_t>{-1, -1}));
    EXPECT_EQ(lt.region[0].offset, -3);
    parse_error_message([] { io::parse_arrangement(R"({"r":2,"vectors":[[1,0]],"region":[[1,"=",3]]})"); });
}

TEST(DotExportTest, HexagonHasSixLabelledEdges) {
    const auto dot = io::export_dot(named("C6"));
    EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 6 + 6 + 1);
    EXPECT_EQ(dot.find("->"), std::string::npos);
    for (const char* label : {"label=\"1\"", "label=\"2\"", "label=\"3\""}) {
        std::size_t n = 0;
        for (auto p = dot.find(label); p != std::string::npos; p = dot.find(label, p + 1)) ++n;
        EXPECT_EQ(n, 2u) << label;
    }
}

TEST(DigestTest, StableHex) {
    EXPECT_EQ(io::digest(""), "cbf29ce484222325");
    EXPECT_NE(io::digest("a"), io::digest("b"));
    EXPECT_EQ(io::digest("abc").size(), 16u);
}

}  // namespace
}  // namespace omcube
