#include <gtest/gtest.h>

#include "oracles/random_regex.hpp"
#include "rnnids/error.hpp"
#include "rnnids/signatures/regex_parser.hpp"

namespace rnnids::signatures {
namespace {

TEST(RegexParser, SshClientPattern) {
  const RegexAst got = parse_regex(R"(^[sS][sS][hH]-[12]\.)");
  const RegexAst want = ast::concat({ast::anchor_start(), ast::char_class({'s', 'S'}), ast::char_class({'s', 'S'}),
                                     ast::char_class({'h', 'H'}), ast::literal('-'), ast::char_class({'1', '2'}),
                                     ast::literal('.')});
  EXPECT_EQ(got, want);
}

TEST(RegexParser, SingleLiteral) { EXPECT_EQ(parse_regex("a"), ast::literal('a')); }

TEST(RegexParser, Operators) {
  EXPECT_EQ(parse_regex("a|b"), ast::alt({ast::literal('a'), ast::literal('b')}));
  EXPECT_EQ(parse_regex("a*"), ast::star(ast::literal('a')));
  EXPECT_EQ(parse_regex("a+?"), ast::optional(ast::plus(ast::literal('a'))));
  EXPECT_EQ(parse_regex("a{2,5}"), ast::repeat(ast::literal('a'), 2, 5));
  EXPECT_EQ(parse_regex("a{3}"), ast::repeat(ast::literal('a'), 3, 3));
  EXPECT_EQ(parse_regex("a{3,}"), ast::repeat(ast::literal('a'), 3, RegexAst::kUnbounded));
  EXPECT_EQ(parse_regex("."), ast::dot());
  EXPECT_EQ(parse_regex(""), ast::epsilon());
  EXPECT_EQ(parse_regex("()"), ast::epsilon());
  EXPECT_EQ(parse_regex("a$"), ast::concat({ast::literal('a'), ast::anchor_end()}));
}

TEST(RegexParser, Escapes) {
  EXPECT_EQ(parse_regex(R"(\.)"), ast::literal('.'));
  EXPECT_EQ(parse_regex(R"(\/)"), ast::literal('/'));
  EXPECT_EQ(parse_regex(R"(\\)"), ast::literal('\\'));
  EXPECT_EQ(parse_regex(R"(\x00)"), ast::literal(0x00));
  EXPECT_EQ(parse_regex(R"(\xfF)"), ast::literal(0xFF));
  EXPECT_EQ(parse_regex(R"(\r\n)"), ast::concat({ast::literal('\r'), ast::literal('\n')}));
  EXPECT_EQ(parse_regex(R"(\d)").matched_octets().count(), 10u);
  EXPECT_EQ(parse_regex(R"(\W)").matched_octets().count(), 256u - 63u);
}

TEST(RegexParser, Classes) {
  const RegexAst r = parse_regex("[a-c_]");
  EXPECT_EQ(r.matched_octets().count(), 4u);
  const RegexAst neg = parse_regex("[^a]");
  EXPECT_TRUE(neg.negated);
  EXPECT_EQ(neg.matched_octets().count(), 255u);
  EXPECT_TRUE(parse_regex("[]a]").matched_octets().test(']'));
  EXPECT_TRUE(parse_regex("[a-]").matched_octets().test('-'));
  EXPECT_TRUE(parse_regex(R"([\x00-\x02])").matched_octets().test(1));
}

struct BadPattern {
  const char* pattern;
  std::size_t position;
};

class RegexSyntaxErrors : public ::testing::TestWithParam<BadPattern> {};

TEST_P(RegexSyntaxErrors, ReportPosition) {
  try {
    parse_regex(GetParam().pattern);
    FAIL() << "accepted " << GetParam().pattern;
  } catch (const RegexSyntaxError& e) {
    EXPECT_EQ(e.position(), GetParam().position) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, RegexSyntaxErrors,
                         ::testing::Values(BadPattern{"[z-a]", 1}, BadPattern{"ab(", 2}, BadPattern{"ab)", 2},
                                           BadPattern{"[abc", 0}, BadPattern{"ab\\", 2}, BadPattern{"*a", 0},
                                           BadPattern{"a{5,2}", 1}, BadPattern{"a{", 2}, BadPattern{"\\xZZ", 0},
                                           BadPattern{"\\q", 0}, BadPattern{"a{2000}", 2},
                                           BadPattern{"[^\\x00-\\xff]", 0}));

TEST(RegexParser, PrintThenReparseIsIdentity) {
  Rng rng(404);
  oracle::RandomRegexOptions opt;
  for (int i = 0; i < 2000; ++i) {
    const RegexAst r = oracle::random_regex(rng, opt);
    const std::string printed = to_pattern(r);
    const RegexAst back = parse_regex(printed);
    ASSERT_EQ(to_pattern(back), printed);
    ASSERT_EQ(parse_regex(to_pattern(back)), back) << printed;
  }
}

TEST(RegexParser, ParsedPatternsRoundTripStructurally) {
  for (const char* p : {R"(^[sS][sS][hH]-[12]\.)", "a(b|c)*d{2,}", R"(\x00\xff[^\n]+$)", "(ab)?|c", "[]x-z]", "a||b"}) {
    const RegexAst r = parse_regex(p);
    EXPECT_EQ(parse_regex(to_pattern(r)), r) << p << " -> " << to_pattern(r);
  }
}

TEST(RegexAst, MinLength) {
  EXPECT_EQ(min_length(parse_regex("ab{3}c?")), 4u);
  EXPECT_EQ(min_length(parse_regex("a*|bc")), 0u);
  EXPECT_EQ(min_length(ast::empty()), kInfinite);
  EXPECT_EQ(min_length(ast::concat({ast::literal('a'), ast::empty()})), kInfinite);
  EXPECT_EQ(min_length(ast::star(ast::empty())), 0u);
}

}  // namespace
}  // namespace rnnids::signatures
