#include "psc/sequence.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "psc/error.hpp"

namespace psc {
namespace {

const cplx I{0.0, 1.0};

TEST(ParseSequence, BinaryForm) {
  const Sequence f = parse_sequence("bin:++-");
  ASSERT_EQ(f.length(), 3u);
  EXPECT_EQ(f[0], cplx(1));
  EXPECT_EQ(f[1], cplx(1));
  EXPECT_EQ(f[2], cplx(-1));
  EXPECT_TRUE(f.is_binary());
}

TEST(ParseSequence, ComplexForm) {
  const Sequence f = parse_sequence("cplx:1+0i,0+1i");
  ASSERT_EQ(f.length(), 2u);
  EXPECT_EQ(f[0], cplx(1));
  EXPECT_EQ(f[1], I);
}

TEST(ParseSequence, ComplexTokenShapes) {
  const Sequence f = parse_sequence("cplx: 0.5-2i, 3 ,2i,-1.5e-3+4E2i,-i");
  ASSERT_EQ(f.length(), 5u);
  EXPECT_EQ(f[0], cplx(0.5, -2));
  EXPECT_EQ(f[1], cplx(3, 0));
  EXPECT_EQ(f[2], cplx(0, 2));
  EXPECT_EQ(f[3], cplx(-1.5e-3, 400));
  EXPECT_EQ(f[4], cplx(0, -1));
}

TEST(ParseSequence, Errors) {
  EXPECT_THROW(parse_sequence("bin:"), ParseError);
  EXPECT_THROW(parse_sequence("cplx:"), ParseError);
  EXPECT_THROW(parse_sequence("bin:+x-"), ParseError);
  EXPECT_THROW(parse_sequence("cplx:1,,2"), ParseError);
  EXPECT_THROW(parse_sequence("cplx:1+2j"), ParseError);
  EXPECT_THROW(parse_sequence("hex:ff"), ParseError);
}

TEST(ParseSequence, AllZeroWarnsThenAnalysisRejects) {
  std::vector<std::string> warnings;
  const Sequence z = parse_sequence("cplx:0,0+0i", &warnings);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(normalize(z), DomainError);
  EXPECT_THROW(classify(z, 0.0), DomainError);
}

TEST(ParseSequence, FileLinesSkipCommentsAndBlanks) {
  const auto lines = sequence_lines("% header\n\nbin:++\n  % indented comment\r\ncplx:1,2 \n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "bin:++");
  EXPECT_EQ(lines[1], "cplx:1,2");
}

TEST(FormatSequence, RoundTripsThroughParser) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Sequence f = oracle::random_complex(rng, oracle::uniform_int(rng, 1, 40));
    EXPECT_EQ(parse_sequence(format_sequence(f)), f);
    const Sequence b = Sequence::binary(random_signs(rng, oracle::uniform_int(rng, 1, 40)));
    EXPECT_EQ(parse_sequence(format_sequence(b)), b);
    EXPECT_TRUE(format_sequence(b).starts_with("bin:"));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Sequence::binary({1, 1, -1}), 0.0).tag, SequenceClass::Tag::Binary);
  const SequenceClass quaternary = classify(Sequence({1, I, -1}), 0.0);
  EXPECT_EQ(quaternary.tag, SequenceClass::Tag::MAry);
  EXPECT_EQ(quaternary.order, 4);
  EXPECT_EQ(classify(Sequence({0.5, 1}), 0.0).tag, SequenceClass::Tag::General);
}

TEST(Classify, MostSpecificTag) {
  const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
  const SequenceClass ternary = classify(Sequence({1, w, w * w}), 1e-12);
  EXPECT_EQ(ternary.tag, SequenceClass::Tag::MAry);
  EXPECT_EQ(ternary.order, 3);
  EXPECT_EQ(classify(Sequence({1, std::polar(1.0, 1.0)}), 1e-12).tag, SequenceClass::Tag::Unimodular);
  EXPECT_EQ(classify(Sequence({1, std::polar(1.0, M_PI / 3)}), 1e-12).order, 6);
}

TEST(Classify, ParsedBinaryIsBinaryAtZeroTolerance) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence f = parse_sequence(format_sequence(Sequence::binary(random_signs(rng, 1 + trial))));
    EXPECT_EQ(classify(f, 0.0).tag, SequenceClass::Tag::Binary);
  }
}

TEST(Energy, Examples) {
  EXPECT_EQ(energy(Sequence({1, 1})), 2.0);
  EXPECT_EQ(energy(Sequence({0, 3.0 * I})), 9.0);
  SplitMix64 rng(1);
  EXPECT_EQ(energy(Sequence::binary(random_signs(rng, 26))), 26.0);
}

TEST(Normalize, Examples) {
  const Sequence a = normalize(Sequence({1, 1}));
  EXPECT_NEAR(a[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(a[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(normalize(Sequence({2}))[0], cplx(1));
  const Sequence b = normalize(Sequence({3, 4.0 * I}));
  EXPECT_NEAR(std::abs(b[0] - cplx(0.6)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b[1] - 0.8 * I), 0.0, 1e-15);
}

TEST(Normalize, UnitEnergyAndIdempotentOnRandomSequences) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Sequence f = oracle::random_complex(rng, oracle::uniform_int(rng, 1, 256));
    const Sequence n1 = normalize(f);
    EXPECT_NEAR(energy(n1), 1.0, 1e-12);
    const Sequence n2 = normalize(n1);
    for (std::size_t j = 0; j < f.length(); ++j) ASSERT_NEAR(std::abs(n1[j] - n2[j]), 0.0, 1e-12);
  }
}

TEST(IsMonomial, Examples) {
  EXPECT_TRUE(is_monomial(Sequence({0, 0, 5})));
  EXPECT_FALSE(is_monomial(Sequence({1, 1})));
  EXPECT_TRUE(is_monomial(Sequence({1})));
  EXPECT_FALSE(is_monomial(Sequence({1e-300, 1})));
}

TEST(SequenceConstruction, RejectsEmptyAndNonSigns) {
  EXPECT_THROW(Sequence(std::vector<cplx>{}), DomainError);
  EXPECT_THROW(Sequence::binary({}), DomainError);
  EXPECT_THROW(Sequence::binary({1, 0}), DomainError);
}

TEST(SequenceConstruction, ExactSignsDetectedFromComplexInput) {
  EXPECT_TRUE(Sequence({1, -1, 1}).is_binary());
  EXPECT_FALSE(Sequence({1, -1, cplx(1, 1e-300)}).is_binary());
  EXPECT_FALSE(Sequence({1, 1}).scaled(2.0).is_binary());
  EXPECT_TRUE(Sequence::binary({1, -1}).negated().is_binary());
}

}  // namespace
}  // namespace psc
