#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "fpl/io.hpp"
#include "fpl/paper_suite.hpp"
#include "fpl/random.hpp"
#include "fpl/report.hpp"
#include "oracle.hpp"

using namespace fpl;

TEST(FrameJson, RoundTripBothFields) {
    Rng rng = stream_rng(601, 0);
    for (Field field : {Field::Real, Field::Complex}) {
        const Frame f = random_frame(3, 5, field, rng);
        const io::Json doc = io::frame_to_json(f);
        EXPECT_EQ(doc.at("field"), std::string(to_string(field)));
        EXPECT_EQ(doc.at("vectors").size(), 5u);
        const Frame back = io::frame_from_json(io::Json::parse(doc.dump()));
        EXPECT_EQ(back.field(), field);
        EXPECT_EQ(back.synthesis(), f.synthesis());
    }
}

TEST(FrameJson, ComplexEntriesArePairs) {
    const io::Json doc = io::Json::parse(R"({"field":"complex","n":1,"k":2,"vectors":[[[0,1]],[2]]})");
    const Frame f = io::frame_from_json(doc);
    EXPECT_EQ(f.synthesis()(0, 0), Scalar(0.0, 1.0));
    EXPECT_EQ(f.synthesis()(0, 1), Scalar(2.0, 0.0));
}

TEST(FrameJson, Errors) {
    const auto code_of = [](const char* text) {
        try {
            io::frame_from_json(io::Json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::IoError;
    };
    EXPECT_EQ(code_of(R"({"field":"real","k":2,"vectors":[[1],[2]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"field":"real","n":2,"k":2,"vectors":[[1,0],[0]]})"), ErrorCode::ShapeError);
    EXPECT_EQ(code_of(R"({"field":"real","n":2,"k":3,"vectors":[[1,0],[0,1]]})"), ErrorCode::ShapeError);
    EXPECT_EQ(code_of(R"({"field":"real","n":1,"k":1,"vectors":[[[1,1]]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"field":"quaternion","n":1,"k":1,"vectors":[[1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"field":"real","n":2,"k":2,"vectors":[[1,2],[2,4]]})"), ErrorCode::NotAFrame);
}

TEST(FrameJson, MissingFile) {
    try {
        io::read_frame("/nonexistent/frame.json");
        FAIL() << "expected IoError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
}

TEST(FusionJson, RoundTripAndAdjustment) {
    const io::Json doc = io::Json::parse(
        R"({"n":3,"field":"real","subspaces":[{"basis":[[2,0,0],[0,1,0]]},{"basis":[[0,0,1]]}]})");
    const io::LoadedFusion loaded = io::fusion_from_json(doc);
    ASSERT_EQ(loaded.adjusted.size(), 1u);
    EXPECT_EQ(loaded.adjusted[0], 0);
    const io::LoadedFusion again = io::fusion_from_json(io::fusion_to_json(loaded.fusion));
    EXPECT_TRUE(again.adjusted.empty());
    EXPECT_LT(oracle::max_abs(again.fusion.fusion_operator() - Matrix::Identity(3, 3)), 1e-14);
}

TEST(Report, StructuredPotentialRecord) {
    const PotentialReport r = make_report(Functional::FramePotential, 13.0, 12.5);
    const std::string line = report::emit(report::to_record(r), report::Format::Structured);
    EXPECT_NE(line.find("value=13.000000000 bound=12.500000000 meets_bound=true"), std::string::npos) << line;
    EXPECT_EQ(line.back(), '\n');
    EXPECT_EQ(std::count(line.begin(), line.end(), '\n'), 1);
}

TEST(Report, TrivialSearchRecord) {
    SearchResult r;
    const std::string line = report::emit(report::to_record(r), report::Format::Structured);
    EXPECT_EQ(line.rfind("mu_min=0.000000000 exclusive=true family_dim=0", 0), 0u) << line;
}

TEST(Report, StructuredRoundTrip) {
    HarnessSummary s;
    s.n = 2;
    s.k = 3;
    s.trials = 1000;
    s.seed = 42;
    s.violations = 0;
    s.min_ratio = 1.25;
    s.case_a_count = 7;
    const report::Record rec = report::to_record(s);
    const std::string line = report::emit(rec, report::Format::Structured);
    const report::Record back = report::parse_structured(line, rec.name);
    EXPECT_EQ(back, rec);
    EXPECT_EQ(report::emit(back, report::Format::Structured), line);
}

TEST(Report, SpecialValues) {
    report::Record rec{"x", {}};
    rec.add("a", std::numeric_limits<double>::infinity()).add("b", -0.0).add("c", std::string("word")).add("d", false);
    const std::string line = report::emit(rec, report::Format::Structured);
    EXPECT_EQ(line, "a=inf b=0.000000000 c=word d=false\n");
    const report::Record back = report::parse_structured(line);
    EXPECT_TRUE(std::isinf(std::get<double>(*back.find("a"))));
    EXPECT_EQ(std::get<std::string>(*back.find("c")), "word");
    EXPECT_THROW(report::parse_structured("novalue"), Error);
}

TEST(Report, TextIsTabular) {
    const PotentialReport r = make_report(Functional::CrossFramePotential, 2.0, 2.0);
    const std::string text = report::emit(report::to_record(r), report::Format::Text);
    EXPECT_EQ(text.rfind("[cross_frame_potential]\n", 0), 0u);
    EXPECT_NE(text.find("  value            2.000000000\n"), std::string::npos) << text;
}

TEST(Report, FormatNames) {
    EXPECT_EQ(report::parse_format("text"), report::Format::Text);
    EXPECT_EQ(report::parse_format("structured"), report::Format::Structured);
    EXPECT_THROW(report::parse_format("json"), Error);
}

TEST(Suite, Numbers) {
    EXPECT_DOUBLE_EQ(suite::parse_number("1/3"), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(suite::parse_number("-9/2"), -4.5);
    EXPECT_DOUBLE_EQ(suite::parse_number("0.25"), 0.25);
    EXPECT_THROW(suite::parse_number("1/0"), Error);
    EXPECT_THROW(suite::parse_number("abc"), Error);
}

TEST(Suite, Matching) {
    using io::Json;
    EXPECT_TRUE(suite::matches(Json("1/3"), Json(0.3333333333333333), 1e-12));
    EXPECT_FALSE(suite::matches(Json("1/3"), Json(0.3334), 1e-9));
    EXPECT_TRUE(suite::matches(Json{{"a", 1}}, Json{{"a", 1.0}, {"b", 2}}, 1e-9));
    EXPECT_FALSE(suite::matches(Json{{"a", 1}}, Json{{"b", 1}}, 1e-9));
    EXPECT_TRUE(suite::matches(Json::array({true, "NotADual"}), Json::array({true, "NotADual"}), 0.0));
    EXPECT_FALSE(suite::matches(Json::array({1, 2}), Json::array({1}), 1e-9));
}

TEST(Suite, FixturesLoad) {
    const std::filesystem::path dir(FPL_TEST_DATA_DIR);
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name == "suite.json") continue;
        if (name.rfind("fusion_", 0) == 0) {
            EXPECT_NO_THROW(io::read_fusion(entry.path())) << name;
        } else {
            EXPECT_NO_THROW(io::read_frame(entry.path())) << name;
        }
    }
}
