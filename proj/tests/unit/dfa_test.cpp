#include <gtest/gtest.h>

#include "oracles/random_regex.hpp"
#include "oracles/regex_oracle.hpp"
#include "rnnids/error.hpp"
#include "rnnids/signatures/dfa.hpp"
#include "rnnids/signatures/regex_parser.hpp"
#include "rnnids/signatures/rule.hpp"

namespace rnnids::signatures {
namespace {

bool m(const char* pattern, const std::string& s) { return compile(parse_regex(pattern)).matches(to_bytes(s)); }

TEST(Dfa, FullyAnchoredFiniteLanguage) {
  const Dfa d = compile(parse_regex("^ab$"));
  for (const auto& s : oracle::all_strings("abc", 4)) EXPECT_EQ(d.matches(to_bytes(s)), s == "ab") << s;
}

TEST(Dfa, SshClientPattern) {
  const char* p = R"(^[sS][sS][hH]-[12]\.)";
  EXPECT_TRUE(m(p, "SSH-2."));
  EXPECT_TRUE(m(p, "SSH-1.99-OpenSSH"));
  EXPECT_TRUE(m(p, "sSh-1.x"));
  EXPECT_FALSE(m(p, "ssh-3."));
  EXPECT_FALSE(m(p, " SSH-2."));
  EXPECT_FALSE(m(p, "hello"));
}

TEST(Dfa, AnchorsAndSubstrings) {
  EXPECT_TRUE(m("^a+$", "aaaa"));
  EXPECT_FALSE(m("^a+$", "aab"));
  EXPECT_TRUE(m("b", "aab"));
  EXPECT_FALSE(m("b$", "aba"));
  EXPECT_TRUE(m("a$", "bba"));
  EXPECT_FALSE(m("a", ""));
  EXPECT_TRUE(m("a*", ""));
  EXPECT_TRUE(m("^$", ""));
  EXPECT_FALSE(m("^$", "x"));
  EXPECT_FALSE(m("a^b", "ab"));
}

TEST(Dfa, BinaryPayload) {
  EXPECT_TRUE(m(R"(\x90{4}\xeb)", std::string("\x01\x90\x90\x90\x90\xeb\x00", 7)));
  EXPECT_FALSE(m(R"(\x90{4}\xeb)", std::string("\x90\x90\x90\xeb", 4)));
}

TEST(Dfa, EmptyLanguageNeverMatches) {
  const Dfa d = compile(ast::concat({ast::literal('a'), ast::empty()}));
  EXPECT_FALSE(d.matches(to_bytes("a")));
  EXPECT_FALSE(d.matches(to_bytes("")));
  EXPECT_EQ(d.start(), Dfa::kDead);
}

TEST(Dfa, TotalAndDeterministic) {
  const Dfa d = compile(parse_regex("(ab|a[^b])*c"));
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    for (int c = 0; c < 256; ++c) EXPECT_LT(d.next(static_cast<Dfa::State>(s), static_cast<std::uint8_t>(c)), d.state_count());
  }
  EXPECT_FALSE(d.accepting(Dfa::kDead));
  for (int c = 0; c < 256; ++c) EXPECT_EQ(d.next(Dfa::kDead, static_cast<std::uint8_t>(c)), Dfa::kDead);
}

TEST(Dfa, StateCap) {
  // the classic blow-up: the n-th last symbol is an 'a'
  const RegexAst r = parse_regex("a[ab]{14}$");
  EXPECT_THROW(compile(r, 1000), DfaTooLarge);
  EXPECT_NO_THROW(compile(r));
}

TEST(Dfa, AgreesWithBacktrackerOnRandomPatterns) {
  Rng rng(2024);
  oracle::RandomRegexOptions opt;
  opt.empty_language = true;
  const auto inputs = oracle::all_strings("ab", 6);
  for (int i = 0; i < 300; ++i) {
    const RegexAst r = oracle::random_regex(rng, opt);
    const Dfa d = compile(r);
    for (const auto& s : inputs) {
      ASSERT_EQ(d.matches(to_bytes(s)), oracle::backtrack_match(r, s)) << to_pattern(r) << " on '" << s << "'";
    }
  }
}

TEST(Union, AcceptsBothSides) {
  const Dfa d = compile(regex_union(parse_regex("^a$"), parse_regex("^b$")));
  EXPECT_TRUE(d.matches(to_bytes("a")));
  EXPECT_TRUE(d.matches(to_bytes("b")));
  EXPECT_FALSE(d.matches(to_bytes("ab")));
}

TEST(Union, SelfUnionIsEquivalent) {
  Rng rng(77);
  oracle::RandomRegexOptions opt;
  for (int i = 0; i < 200; ++i) {
    const RegexAst r = oracle::random_regex(rng, opt);
    EXPECT_TRUE(oracle::equivalent(compile(r), compile(regex_union(r, r)))) << to_pattern(r);
  }
}

TEST(Union, EquivalenceOracleSeesDifferences) {
  EXPECT_FALSE(oracle::equivalent(compile(parse_regex("^a$")), compile(parse_regex("^b$"))));
  EXPECT_TRUE(oracle::equivalent(compile(parse_regex("a|a")), compile(parse_regex("a"))));
  EXPECT_TRUE(oracle::equivalent(compile(parse_regex("a+")), compile(parse_regex("aa*"))));
}

}  // namespace
}  // namespace rnnids::signatures
