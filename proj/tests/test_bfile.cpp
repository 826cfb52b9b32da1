#include <gtest/gtest.h>

#include "balid/bfile.hpp"
#include "oracles.hpp"

using balid::BFile;
using balid::Integer;
using balid::oeis_check;
using balid::OeisFamily;
using balid::parse_bfile;
using balid::SequenceCache;

namespace {

std::string fixture(OeisFamily family, int terms, int first_index = 0) {
  std::string text;
  for (int k = 0; k < terms; ++k) {
    long long n = k;  // value index is always 0-based, the file index may not be
    Integer v;
    switch (family) {
      case OeisFamily::fibonacci: v = oracles::fib(n); break;
      case OeisFamily::lucas: v = oracles::lucas(n); break;
      case OeisFamily::balancing: {
        Integer a = 0, b = 1;
        for (long long i = 0; i < n; ++i) {
          Integer next = 6 * b - a;
          a = b;
          b = next;
        }
        v = a;
        break;
      }
      case OeisFamily::lucas_balancing: {
        Integer a = 1, b = 3;
        for (long long i = 0; i < n; ++i) {
          Integer next = 6 * b - a;
          a = b;
          b = next;
        }
        v = a;
        break;
      }
    }
    text += std::to_string(first_index + k) + " " + v.str() + "\n";
  }
  return text;
}

}  // namespace

TEST(BFile, ParsesFibonacciPrefix) {
  BFile f = parse_bfile("0 0\n1 1\n2 1\n3 2\n", "A000045");
  EXPECT_EQ(f.first_index, 0);
  ASSERT_EQ(f.values.size(), 4u);
  EXPECT_EQ(f.values[3], 2);
}

TEST(BFile, SkipsCommentsAndBlankLines) {
  BFile f = parse_bfile("# comment\n\n1 1\n2 3\n3 4\n");
  EXPECT_EQ(f.first_index, 1);
  ASSERT_EQ(f.values.size(), 3u);
  EXPECT_EQ(f.values[1], 3);
}

TEST(BFile, RejectsNonConsecutiveIndices) {
  try {
    parse_bfile("1 1\n3 2\n");
    FAIL() << "expected parse_error";
  } catch (const balid::parse_error& e) {
    EXPECT_EQ(e.line, 2);
  }
}

TEST(BFile, RejectsMalformedLines) {
  EXPECT_THROW(parse_bfile("1 x\n"), balid::parse_error);
  EXPECT_THROW(parse_bfile("1\n"), balid::parse_error);
  EXPECT_THROW(parse_bfile("1 2 3\n"), balid::parse_error);
  try {
    parse_bfile("0 0\n1 oops\n");
    FAIL() << "expected parse_error";
  } catch (const balid::parse_error& e) {
    EXPECT_EQ(e.line, 2);
  }
}

TEST(BFile, HandlesLargeValuesExactly) {
  // F_300 overflows every machine word; the parser must not care.
  std::string big = oracles::fib(300).str();
  BFile f = parse_bfile("0 " + big + "\n");
  EXPECT_EQ(f.values[0], oracles::fib(300));
}

TEST(OeisCheck, BalancingFixturePasses) {
  SequenceCache cache;
  BFile f = parse_bfile(fixture(OeisFamily::balancing, 31), "A001109");
  EXPECT_EQ(f.values[0], 0);
  EXPECT_EQ(f.values[1], 1);
  EXPECT_EQ(f.values[2], 6);
  EXPECT_EQ(f.values[3], 35);
  EXPECT_EQ(f.values[4], 204);
  auto result = oeis_check(OeisFamily::balancing, f, cache);
  EXPECT_TRUE(result.pass);
}

TEST(OeisCheck, LucasBalancingFixturePasses) {
  SequenceCache cache;
  BFile f = parse_bfile(fixture(OeisFamily::lucas_balancing, 31), "A001541");
  EXPECT_EQ(f.values[0], 1);
  EXPECT_EQ(f.values[1], 3);
  EXPECT_EQ(f.values[2], 17);
  EXPECT_EQ(f.values[3], 99);
  auto result = oeis_check(OeisFamily::lucas_balancing, f, cache);
  EXPECT_TRUE(result.pass);
}

TEST(OeisCheck, OneBasedFileStillPasses) {
  // A file indexed from 1 whose k-th value is the k-th sequence member;
  // the 0-based retry reconciles the offset.
  SequenceCache cache;
  BFile f = parse_bfile(fixture(OeisFamily::fibonacci, 20, 1));
  auto result = oeis_check(OeisFamily::fibonacci, f, cache);
  EXPECT_TRUE(result.pass);
}

TEST(OeisCheck, WrongFamilyFailsWithFirstMismatch) {
  SequenceCache cache;
  BFile lucas_file = parse_bfile(fixture(OeisFamily::lucas, 20), "A000032");
  auto result = oeis_check(OeisFamily::fibonacci, lucas_file, cache);
  EXPECT_FALSE(result.pass);
  ASSERT_TRUE(result.counterexample.has_value());
  EXPECT_EQ(result.counterexample->params.substr(0, 3), "n=0");
  EXPECT_EQ(result.counterexample->lhs, "0");  // computed F_0
  EXPECT_EQ(result.counterexample->rhs, "2");  // file holds L_0
}
