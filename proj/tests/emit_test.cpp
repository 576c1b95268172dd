#include "qcosmic/emit.hpp"
#include "qcosmic/parser.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qcosmic {
namespace {

const Model& factoring()
{
    static const Model m = test::load_model("models/factoring.qcm");
    return m;
}

MeasurementReport empty_report()
{
    Model m;
    m.name = "Nothing";
    return measure_system(m);
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> split_csv_simple(const std::string& line)
{
    std::vector<std::string> out{""};
    for (char c : line) {
        if (c == ',')
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

std::size_t count_substr(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + needle.size()))
        ++n;
    return n;
}

TEST(RenderText, FactoringFooter)
{
    const std::string text = render_text(measure_system(factoring()));
    EXPECT_NE(text.find("TOTAL 10 QCFP (classical 8 / quantum 2)"), std::string::npos) << text;
    EXPECT_NE(text.find("classical 80.0% / quantum 20.0%"), std::string::npos);
    EXPECT_NE(text.find("Factor Large Integer"), std::string::npos);
    EXPECT_EQ(text.find("CFPv5-equivalent"), std::string::npos);
}

TEST(RenderText, EmptyReport)
{
    const std::string text = render_text(empty_report());
    EXPECT_NE(text.find("no functional processes"), std::string::npos);
    EXPECT_NE(text.find("TOTAL 0 QCFP\n"), std::string::npos);
}

TEST(RenderText, ClassicalNote)
{
    const std::string text = render_text(measure_system(test::load_model("tests/fixtures/classical.qcm")));
    EXPECT_NE(text.find("CFPv5-equivalent (10 CFP)"), std::string::npos) << text;
}

TEST(RenderText, ByLayerTable)
{
    RenderOptions opts;
    opts.by_layer = true;
    const std::string text = render_text(measure_system(factoring()), opts);
    const auto all = lines(text);
    EXPECT_TRUE(std::any_of(all.begin(), all.end(), [](const std::string& l) {
        return l.rfind("Quantum Layer", 0) == 0 && l.find("quantum") != std::string::npos && l.back() == '2';
    })) << text;
}

TEST(RenderJson, FactoringFields)
{
    const std::string text = render_json(measure_system(factoring()));
    EXPECT_NE(text.find("\"total_qcfp\": 10"), std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(text);
    EXPECT_EQ(j["schema"], std::string(json_schema_id));
    EXPECT_EQ(j["system"], "Factoring Application");
    EXPECT_EQ(j["classical_qcfp"], 8);
    EXPECT_EQ(j["quantum_qcfp"], 2);
    EXPECT_EQ(j["classical_percent"], "80.0");
    EXPECT_EQ(j["cfpv5_equivalent"], false);
    ASSERT_EQ(j["processes"].size(), 2U);
    EXPECT_EQ(j["processes"][0]["name"], "Factor Large Integer");
    EXPECT_EQ(j["processes"][0]["qcfp"], 6);
    EXPECT_EQ(j["processes"][1]["qcfp"], 4);
    EXPECT_EQ(j["layers"].size(), 2U);
    EXPECT_EQ(text.back(), '\n');
}

TEST(RenderJson, EmptyReport)
{
    const nlohmann::json j = nlohmann::json::parse(render_json(empty_report()));
    EXPECT_EQ(j["total_qcfp"], 0);
    EXPECT_TRUE(j["processes"].empty());
}

TEST(RenderJson, KeysAreSorted)
{
    const std::string text = render_json(measure_system(factoring()));
    const auto all = lines(text);
    std::vector<std::string> top;
    for (const std::string& l : all)
        if (l.rfind("  \"", 0) == 0)
            top.push_back(l.substr(3, l.find('"', 3) - 3));
    EXPECT_TRUE(std::is_sorted(top.begin(), top.end()));
    EXPECT_GE(top.size(), 10U);
}

TEST(RenderCsv, FactoringRows)
{
    const auto rows = lines(render_csv(measure_system(factoring())));
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[0], "process,layer,nature,E,X,R,W,QE,QX,QR,QW,qcfp");
    EXPECT_EQ(rows[1], "Factor Large Integer,Quantum Layer,quantum,2,2,0,0,1,1,0,0,6");
    EXPECT_EQ(rows[2], "Break RSA,Classical Layer,classical,2,2,0,0,0,0,0,0,4");
    EXPECT_EQ(rows[3], "TOTAL,,,4,4,0,0,1,1,0,0,10");
}

TEST(RenderCsv, EmptyReport)
{
    const auto rows = lines(render_csv(empty_report()));
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[1], "TOTAL,,,0,0,0,0,0,0,0,0,0");
}

TEST(RenderCsv, QuotesAwkwardNames)
{
    Model m = test::load_model("tests/fixtures/classical.qcm");
    m.processes[0].name = "Capture, \"Order\"";
    const std::string csv = render_csv(measure_system(m));
    EXPECT_NE(csv.find("\"Capture, \"\"Order\"\"\",Application"), std::string::npos) << csv;
}

TEST(RenderDot, QuantumElementsAreEmphasised)
{
    const std::string dot = render_dot(factoring());
    EXPECT_EQ(dot.rfind("digraph \"Factoring Application\" {", 0), 0U);
    const auto all = lines(dot);
    auto line_with = [&](const std::string& needle) {
        auto it = std::find_if(all.begin(), all.end(),
                               [&](const std::string& l) { return l.find(needle) != std::string::npos; });
        return it == all.end() ? std::string() : *it;
    };
    const std::string quantum_layer = line_with("<B>Quantum Layer</B>");
    EXPECT_NE(quantum_layer.find("peripheries=2"), std::string::npos) << dot;
    const std::string classical_layer = line_with("\"Classical Layer\"");
    EXPECT_NE(classical_layer.find("peripheries=1"), std::string::npos) << dot;
    EXPECT_NE(line_with("QE: Register State (prepare)").find("penwidth=2"), std::string::npos) << dot;
    EXPECT_NE(line_with("E: Integer").find("penwidth=1"), std::string::npos) << dot;
    EXPECT_EQ(dot.back(), '\n');
}

TEST(RenderDot, EmptyModel)
{
    Model m;
    m.name = "Nothing";
    EXPECT_EQ(render_dot(m), "digraph \"Nothing\" {\n}\n");
}

TEST(RenderDot, ScopedToOneProcess)
{
    RenderOptions opts;
    opts.scope = "Factor Large Integer";
    const std::string dot = render_dot(factoring(), opts);
    EXPECT_EQ(count_substr(dot, " -> "), 6U) << dot;
    EXPECT_EQ(dot.find("Hacker"), std::string::npos);

    opts.scope = "Nope";
    EXPECT_THROW(render_dot(factoring(), opts), EmitError);
}

TEST(RenderDot, OneEdgePerUniqueMovement)
{
    test::Rng rng(83);
    for (int round = 0; round < 100; ++round) {
        const Model m = test::random_valid_model(rng);
        std::size_t expected = 0;
        for (const FunctionalProcess& p : m.processes)
            expected += measure_process(p);
        EXPECT_EQ(count_substr(render_dot(m), " -> "), expected);
    }
}

TEST(OutputFormat, NamesRoundTrip)
{
    for (OutputFormat f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv, OutputFormat::dot})
        EXPECT_EQ(format_from_string(to_string(f)), f);
    EXPECT_FALSE(format_from_string("xml").has_value());
}

// Every renderer is a pure function of its input, and the formats agree on
// the totals.
TEST(EmitProperty, DeterministicAndConsistent)
{
    test::Rng rng(89);
    for (int round = 0; round < 200; ++round) {
        const Model m = test::random_valid_model(rng);
        const MeasurementReport r = measure_system(m);
        ASSERT_EQ(render_json(r), render_json(measure_system(m)));
        ASSERT_EQ(render_text(r), render_text(r));
        ASSERT_EQ(render_csv(r), render_csv(r));
        ASSERT_EQ(render_dot(m), render_dot(m));

        const nlohmann::json j = nlohmann::json::parse(render_json(r));
        EXPECT_EQ(j["total_qcfp"].get<std::uint64_t>(), r.totals.total_qcfp);
        EXPECT_NE(render_text(r).find("TOTAL " + std::to_string(r.totals.total_qcfp) + " QCFP"), std::string::npos);

        const auto rows = lines(render_csv(r));
        ASSERT_EQ(rows.size(), r.per_process.size() + 2);
        std::uint64_t column_total = 0;
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            const auto fields = split_csv_simple(rows[i]);
            ASSERT_EQ(fields.size(), 12U);
            std::uint64_t sum = 0;
            for (std::size_t f = 3; f < 11; ++f)
                sum += std::stoull(fields[f]);
            EXPECT_EQ(sum, std::stoull(fields[11]));
            column_total += sum;
        }
        EXPECT_EQ(split_csv_simple(rows.back()).back(), std::to_string(column_total));
    }
}

} // namespace
} // namespace qcosmic
