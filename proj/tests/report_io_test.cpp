#include "cuspfill/report_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

using namespace cuspfill;
using namespace cuspfill::io;

TEST(ComplexLiteral, Accepted)
{
    EXPECT_EQ(*parse_complex_literal("1+0i"), std::complex<double>(1.0, 0.0));
    EXPECT_EQ(*parse_complex_literal("1.5-0.25i"), std::complex<double>(1.5, -0.25));
    EXPECT_EQ(*parse_complex_literal("-2e-3+1E2i"), std::complex<double>(-2e-3, 100.0));
    EXPECT_EQ(*parse_complex_literal("+.5-3.i"), std::complex<double>(0.5, -3.0));
}

TEST(ComplexLiteral, Rejected)
{
    for (const char* bad : {"", "1", "1+i", "i", "1 + 2i", "1+2", "(1,2)", "1+2j", "1e400+0i", "1++2i", "0x1+2i"})
        EXPECT_FALSE(parse_complex_literal(bad).has_value()) << bad;
}

TEST(Slope, Parse)
{
    EXPECT_EQ(*parse_slope("3,4"), (std::pair<std::int64_t, std::int64_t>{3, 4}));
    EXPECT_EQ(*parse_slope("-14,1"), (std::pair<std::int64_t, std::int64_t>{-14, 1}));
    EXPECT_FALSE(parse_slope("3;4").has_value());
    EXPECT_FALSE(parse_slope("3,").has_value());
    EXPECT_FALSE(parse_slope("3, 4").has_value());
}

TEST(Range, Parse)
{
    const auto r = parse_range("14..16");
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->first, 14);
    EXPECT_EQ(r->last, 16);
    EXPECT_TRUE(parse_range("3..3").has_value());
    EXPECT_FALSE(parse_range("5..4").has_value());
    EXPECT_FALSE(parse_range("5-6").has_value());
    EXPECT_FALSE(parse_range("a..b").has_value());
}

TEST(Format, TwelveDigitsReparseClosely)
{
    std::mt19937_64 gen(83);
    std::uniform_real_distribution<double> mantissa(1.0, 10.0);
    std::uniform_int_distribution<int> exponent(-12, 12);
    for (int i = 0; i < 10000; ++i) {
        const double v = mantissa(gen) * std::pow(10.0, exponent(gen));
        const double back = std::strtod(format_number(v, 12).c_str(), nullptr);
        EXPECT_LE(std::abs(back - v), 5e-12 * std::abs(v));
    }
}

TEST(Json, NumbersRoundTripExactly)
{
    std::mt19937_64 gen(89);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        verify::TrialReport r;
        r.worst_margin = u(gen) * std::pow(10.0, static_cast<int>(u(gen) * 20) - 10);
        const auto parsed = nlohmann::json::parse(to_json(r).dump());
        EXPECT_EQ(parsed["worst_margin"].get<double>(), r.worst_margin);
    }
}

TEST(Json, PipelineKeysInDeclaredOrder)
{
    const auto j = to_json(filling::evaluate_pipeline({3, 14}, std::nullopt));
    std::vector<std::string> keys;
    for (const auto& item : j.items())
        keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"genus", "n", "epsilon", "r_eps", "mode", "L_squared_lo", "L_squared_hi",
                                              "length_lo", "length_hi", "admissible", "min_n"}));
    EXPECT_EQ(j["mode"], "worst-case");
}

TEST(Json, InadmissibleUsesNull)
{
    const auto j = to_json(filling::evaluate_pipeline({2, 20}, std::nullopt));
    EXPECT_TRUE(j["length_lo"].is_null());
    EXPECT_TRUE(j["length_hi"].is_null());
    EXPECT_EQ(j["admissible"], false);
    EXPECT_EQ(j["min_n"], 21);
}

TEST(Json, TrialReportKeys)
{
    verify::TrialReport r{10, 0, 0.25, 7, std::nullopt};
    EXPECT_EQ(to_json(r).dump(), R"({"trials":10,"failures":0,"worst_margin":0.25,"seed":7,"wall_ms":null})");
}

TEST(Precision, EnvironmentControlsDigits)
{
    ::unsetenv("CUSPFILL_PRECISION_DIGITS");
    EXPECT_EQ(precision_digits(), 12);
    ::setenv("CUSPFILL_PRECISION_DIGITS", "5", 1);
    EXPECT_EQ(precision_digits(), 5);
    ::setenv("CUSPFILL_PRECISION_DIGITS", "junk", 1);
    EXPECT_EQ(precision_digits(), 12);
    ::setenv("CUSPFILL_PRECISION_DIGITS", "40", 1);
    EXPECT_EQ(precision_digits(), 12);
    ::unsetenv("CUSPFILL_PRECISION_DIGITS");
}

TEST(Table, InadmissibleRowsHaveEmptyFields)
{
    std::ostringstream os;
    write_bounds_table(os, {2, 2}, {19, 21}, 12);
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "genus,n,admissible,min_n,length_lo,length_hi,intro_lo,intro_hi");
    std::getline(lines, line);
    EXPECT_EQ(line, "2,19,false,21,,,,");
    std::getline(lines, line);
    EXPECT_EQ(line, "2,20,false,21,,,,");
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("2,21,true,21,", 0), 0u);
    EXPECT_EQ(line.substr(line.size() - 2), ",,");
}
