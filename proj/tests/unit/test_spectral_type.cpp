#include <gtest/gtest.h>

#include "isomon/errors.hpp"
#include "isomon/spectral_type.hpp"

using namespace isomon;

TEST(SpectralType, ParseFuchsianCanonicalOrder) {
  const auto t = SpectralType::parse("1111,211,1111");
  EXPECT_EQ(t.str(), "211,1111,1111");
  EXPECT_EQ(t.rank(), 4);
  EXPECT_TRUE(t.fuchsian());
}

TEST(SpectralType, PartsSortedDescending) {
  EXPECT_EQ(SpectralType::parse("13,22").str(), "31,22");
}

TEST(SpectralType, RankOnePoint) {
  const auto t = SpectralType::parse("11111,(111)(11)");
  EXPECT_EQ(t.str(), "(111)(11),11111");
  EXPECT_EQ(t.irregular_count(), 1);
  EXPECT_FALSE(t.fuchsian());
  EXPECT_EQ(t.points().front().outer, (Partition{3, 2}));
}

TEST(SpectralType, LargeParts) {
  const auto t = SpectralType::parse("(10)1,(11)");
  EXPECT_EQ(t.rank(), 11);
  EXPECT_EQ(t.str(), "(11),(10)1");
}

TEST(SpectralType, SizeMismatchRejected) {
  EXPECT_THROW(SpectralType::parse("21,11"), Error);
  EXPECT_THROW(SpectralType::parse("2a,11"), Error);
  EXPECT_THROW(SpectralType::parse(""), Error);
}

TEST(SpectralType, RoundTrip) {
  for (const char* s : {"11,11,11,11,11", "(1)(1)(1)(1),211", "33,222,111111", "(21)(1),1111", "32,11111,11111"}) {
    const auto t = SpectralType::parse(s);
    EXPECT_EQ(SpectralType::parse(t.str()), t);
  }
}

TEST(Partition, FormatAndNormalize) {
  EXPECT_EQ(format_partition(normalize_partition({1, 3, 1})), "311");
  EXPECT_EQ(partition_size({3, 1, 1}), 5);
}
