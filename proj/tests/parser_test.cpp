#include "qcosmic/parser.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace qcosmic {
namespace {

std::vector<std::string> codes(const std::vector<Diagnostic>& diagnostics)
{
    std::vector<std::string> out;
    for (const Diagnostic& d : diagnostics)
        out.push_back(d.code);
    return out;
}

TEST(ParseModel, FactoringFixture)
{
    const std::string path = test::source_path("models/factoring.qcm");
    ParseResult r = parse_model(test::read_text(path), path);
    ASSERT_TRUE(r.model.has_value()) << render(r.diagnostics);
    EXPECT_TRUE(r.diagnostics.empty());
    const Model& m = *r.model;
    EXPECT_EQ(m.processes.size(), 2U);
    EXPECT_EQ(m.layers.size(), 2U);
    EXPECT_EQ(m.users.size(), 2U);
    EXPECT_EQ(m.processes[0].name, "Factor Large Integer");
    EXPECT_EQ(m.processes[1].name, "Break RSA");
    EXPECT_EQ(m.processes[1].uses, std::vector<std::string>{"Factor Large Integer"});
    EXPECT_EQ(m.processes[0].movements[4].conversion, Conversion::state_preparation);
    EXPECT_EQ(m.processes[0].movements[5].conversion, Conversion::measurement);
    EXPECT_EQ(m.processes[0].span.file, path);
}

TEST(ParseModel, EmptySystemIsAcceptedWithWarning)
{
    ParseResult r = parse_model(R"(system "S" { })");
    ASSERT_TRUE(r.model.has_value());
    EXPECT_TRUE(r.model->layers.empty());
    ASSERT_EQ(r.diagnostics.size(), 1U);
    EXPECT_EQ(r.diagnostics[0].severity, Severity::warning);
    EXPECT_EQ(r.diagnostics[0].message, "empty system");
}

TEST(ParseModel, DuplicateLayerName)
{
    ParseResult r = parse_model(R"(system "S" { layer classical "A" layer classical "A" })");
    EXPECT_FALSE(r.model.has_value());
    ASSERT_EQ(r.diagnostics.size(), 1U);
    EXPECT_EQ(r.diagnostics[0].code, "S2");
    EXPECT_NE(r.diagnostics[0].message.find("duplicate layer name"), std::string::npos);
    EXPECT_EQ(r.diagnostics[0].span->column, 50U);
}

TEST(ParseModel, DuplicatesInEveryCategory)
{
    ParseResult r = parse_model(R"(system "S" {
  layer classical "L"
  user classical "U"
  user quantum "U"
  storage classical "S"
  storage classical "S"
  datagroup "G" { attr a: classical attr a: quantum }
  datagroup "G" { }
  process "P" in layer "L" { }
  process "P" in layer "L" { }
})");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_EQ(codes(r.diagnostics), (std::vector<std::string>(5, "S2")));
}

TEST(ParseModel, RecoversAndReportsEverySyntaxError)
{
    ParseResult r = parse_model(R"(system "S" {
  layer classical "L"
  layer sideways "Bad"
  user classical "U"
  datagroup "G" { attr a classical }
  process "P" in layer "L" {
    entry "G" from user "U"
    entry "G" toward user "U"
    exit "G" to user "U"
  }
  user "NoNature"
})");
    EXPECT_FALSE(r.model.has_value());
    ASSERT_EQ(codes(r.diagnostics), (std::vector<std::string>(4, "S1")));
    EXPECT_EQ(r.diagnostics[0].span->line, 3U);
    EXPECT_EQ(r.diagnostics[1].span->line, 5U);
    EXPECT_EQ(r.diagnostics[2].span->line, 8U);
    EXPECT_EQ(r.diagnostics[3].span->line, 11U);
}

TEST(ParseModel, UnresolvedReferences)
{
    ParseResult r = parse_model(R"(system "S" {
  layer classical "L"
  user classical "U"
  datagroup "G" { }
  process "P" in layer "Elsewhere" uses "Ghost" {
    entry "Missing" from user "U"
    exit "G" to storage "Nowhere"
  }
})");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_EQ(codes(r.diagnostics), (std::vector<std::string>(4, "S3")));
    for (const Diagnostic& d : r.diagnostics)
        EXPECT_EQ(d.subject, "P");
}

TEST(ParseModel, HeadersMustPrecedeDeclarations)
{
    ParseResult r = parse_model(R"(system "S" { layer classical "L" purpose "late" })");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_EQ(codes(r.diagnostics), std::vector<std::string>{"S1"});
}

TEST(ParseModel, MissingClosingBraces)
{
    ParseResult r = parse_model(R"(system "S" {
  layer classical "L"
  datagroup "G" { attr a: classical
  user classical "U")");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_GE(r.diagnostics.size(), 2U);
    for (const Diagnostic& d : r.diagnostics)
        EXPECT_EQ(d.code, "S1");
}

TEST(ParseModel, TrailingInputAfterSystem)
{
    ParseResult r = parse_model(R"(system "S" { } layer classical "L")");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_EQ(codes(r.diagnostics), std::vector<std::string>{"S1"});
}

TEST(ParseModel, LexicalErrorsStopParsing)
{
    ParseResult r = parse_model("system \"S\" { layer classical \"L\" % }");
    EXPECT_FALSE(r.model.has_value());
    EXPECT_EQ(codes(r.diagnostics), std::vector<std::string>{"L1"});
}

TEST(ParseModel, CrLfInputParsesLikeLf)
{
    std::string text = test::read_text(test::source_path("models/factoring.qcm"));
    std::string crlf;
    for (char c : text) {
        if (c == '\n')
            crlf += '\r';
        crlf += c;
    }
    ParseResult a = parse_model(text);
    ParseResult b = parse_model(crlf);
    ASSERT_TRUE(a.model && b.model);
    EXPECT_EQ(*a.model, *b.model);
}

TEST(FormatModel, FactoringRoundTrips)
{
    const Model m = test::load_model("models/factoring.qcm");
    const std::string text = format_model(m);
    ParseResult again = parse_model(text);
    ASSERT_TRUE(again.model.has_value()) << render(again.diagnostics) << text;
    EXPECT_EQ(*again.model, m);
    EXPECT_EQ(format_model(*again.model), text);
}

TEST(FormatModel, FollowsDeclarationOrder)
{
    ParseResult r = parse_model(R"(system "S" {
  user classical "Zed"
  layer classical "Beta"
  user classical "Alpha"
  layer quantum "Alpha"
})");
    ASSERT_TRUE(r.model.has_value());
    EXPECT_EQ(format_model(*r.model), "system \"S\" {\n"
                                      "  layer classical \"Beta\"\n"
                                      "  layer quantum \"Alpha\"\n"
                                      "\n"
                                      "  user classical \"Zed\"\n"
                                      "  user classical \"Alpha\"\n"
                                      "}\n");
}

TEST(FormatModel, EmptySystem)
{
    Model m;
    m.name = "Nothing";
    EXPECT_EQ(format_model(m), "system \"Nothing\" {\n}\n");
}

TEST(FormatModel, QuoteEscapes)
{
    EXPECT_EQ(quote("a\"b\\c\nd"), R"("a\"b\\c\nd")");
}

// parse(format(m)) == m over arbitrary structurally valid models, and the
// canonical text is a fixed point.
TEST(FormatModel, RoundTripProperty)
{
    test::Rng rng(20240229);
    for (int round = 0; round < 1000; ++round) {
        const Model m = test::random_structural_model(rng);
        const std::string text = format_model(m);
        ParseResult r = parse_model(text);
        ASSERT_TRUE(r.model.has_value()) << "round " << round << "\n" << render(r.diagnostics) << text;
        ASSERT_EQ(*r.model, m) << "round " << round << "\n" << text;
        ASSERT_EQ(format_model(*r.model), text);
    }
}

TEST(ParseModel, Deterministic)
{
    const std::string text = test::read_text(test::source_path("tests/fixtures/classical.qcm"));
    ParseResult a = parse_model(text, "x.qcm");
    ParseResult b = parse_model(text, "x.qcm");
    ASSERT_TRUE(a.model && b.model);
    EXPECT_EQ(*a.model, *b.model);
    EXPECT_EQ(a.diagnostics, b.diagnostics);
}

// Random corruption of valid sources: diagnostics stay inside the text, and a
// model is only returned when every reference resolves.
TEST(ParseModel, SpanFidelityUnderCorruption)
{
    test::Rng rng(99);
    const std::string alphabet = "{}\",:\n abcxyz\\/$";
    for (int round = 0; round < 500; ++round) {
        std::string text = format_model(test::random_structural_model(rng));
        for (int edits = 1 + static_cast<int>(rng() % 4); edits > 0 && !text.empty(); --edits) {
            const std::size_t at = rng() % text.size();
            switch (rng() % 3) {
            case 0:
                text.erase(at, 1 + rng() % 5);
                break;
            case 1:
                text.insert(at, 1, alphabet[rng() % alphabet.size()]);
                break;
            default:
                text[at] = alphabet[rng() % alphabet.size()];
            }
        }

        std::vector<std::size_t> line_lengths{0};
        for (unsigned char c : text) {
            if (c == '\n')
                line_lengths.push_back(0);
            else if ((c & 0xC0U) != 0x80U)
                ++line_lengths.back();
        }

        ParseResult r = parse_model(text);
        for (const Diagnostic& d : r.diagnostics) {
            ASSERT_TRUE(d.span.has_value());
            ASSERT_GE(d.span->line, 1U);
            ASSERT_LE(d.span->line, line_lengths.size()) << text;
            ASSERT_GE(d.span->column, 1U);
            ASSERT_LE(d.span->column, line_lengths[d.span->line - 1] + 1) << text;
        }
        if (r.model) {
            EXPECT_FALSE(has_errors(r.diagnostics));
            for (const FunctionalProcess& p : r.model->processes)
                EXPECT_NO_THROW(process_nature(p, *r.model));
        }
    }
}

} // namespace
} // namespace qcosmic
