#include <cstdint>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "qsolve/error.hpp"
#include "qsolve/field.hpp"
#include "qsolve/oracle.hpp"

using qsolve::CensusMode;
using qsolve::Elt;
using qsolve::Errc;
using qsolve::Error;
using qsolve::Field;

TEST(BruteRoots, Examples) {
  const auto f9 = Field::create(3, 2, 1);
  auto roots = qsolve::brute_roots(f9, f9.one());
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(f9.enc(roots[0]), 1u);

  const auto f16 = Field::create(2, 4, 2);
  roots = qsolve::brute_roots(f16, f16.one());
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(f16.enc(roots[0]), 6u);
  EXPECT_EQ(f16.enc(roots[1]), 7u);

  const auto f64 = Field::create(2, 6, 2);
  EXPECT_EQ(qsolve::brute_roots(f64, f64.one()).size(), 5u);

  try {
    qsolve::brute_roots(f9, f9.zero());
    FAIL() << "expected ZeroA";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroA);
  }
}

TEST(Census, KnownTuple) {
  const auto f16 = Field::create(2, 4, 2);
  for (const auto mode : {CensusMode::Formula, CensusMode::OracleScan}) {
    const auto rep = qsolve::census(f16, mode);
    EXPECT_EQ(rep.counts.m0, 6u);
    EXPECT_EQ(rep.counts.m1, 4u);
    EXPECT_EQ(rep.counts.m2, 5u);
    EXPECT_EQ(rep.counts.m_full, 0u);
  }
}

TEST(Census, FullSplitCounts) {
  EXPECT_EQ(qsolve::census(Field::create(2, 6, 2), CensusMode::Formula).counts.m_full, 1u);
  EXPECT_EQ(qsolve::census(Field::create(3, 3, 1), CensusMode::Formula).counts.m_full, 1u);
  EXPECT_EQ(qsolve::expected_full_split_count(qsolve::FieldSpec::make(2, 6, 2)), 1u);
  EXPECT_EQ(qsolve::expected_full_split_count(qsolve::FieldSpec::make(3, 3, 1)), 1u);
  EXPECT_EQ(qsolve::expected_full_split_count(qsolve::FieldSpec::make(2, 8, 2)), 4u);
  EXPECT_EQ(qsolve::expected_full_split_count(qsolve::FieldSpec::make(2, 4, 2)), 0u);
}

TEST(Census, CountIdentities) {
  for (const auto& f : {Field::create(2, 4, 2), Field::create(2, 6, 3), Field::create(3, 3, 1),
                        Field::create(5, 2, 1)}) {
    const auto rep = qsolve::census(f, CensusMode::OracleScan);
    const auto& c = rep.counts;
    EXPECT_EQ(c.m0 + c.m1 + c.m2 + c.m_full, f.order() - 1);

    // Each x with x^(q+1) + x != 0 determines exactly one a != 0 it solves.
    std::uint64_t admissible = 0;
    for (std::uint64_t xe = 0; xe < f.order(); ++xe) {
      const Elt x = f.from_enc(xe);
      if (!f.add(f.mul(f.frob_q(x, 1), x), x).is_zero()) ++admissible;
    }
    std::uint64_t pd = 0;
    qsolve::detail::checked_pow(f.p(), f.d(), f.order(), pd);
    EXPECT_EQ(c.m1 + 2 * c.m2 + (pd + 1) * c.m_full, admissible);
    EXPECT_EQ(c.m_full, qsolve::expected_full_split_count(f.spec()));
  }
}

TEST(Census, ModesAgree) {
  for (const auto& f : {Field::create(2, 5, 1), Field::create(2, 6, 1), Field::create(3, 4, 2)}) {
    const auto a = qsolve::census(f, CensusMode::Formula);
    const auto b = qsolve::census(f, CensusMode::OracleScan);
    EXPECT_EQ(a.counts.m0, b.counts.m0);
    EXPECT_EQ(a.counts.m1, b.counts.m1);
    EXPECT_EQ(a.counts.m2, b.counts.m2);
    EXPECT_EQ(a.counts.m_full, b.counts.m_full);
  }
}

TEST(Census, RangePartitioningAddsUp) {
  const auto f = Field::create(2, 6, 2);
  const std::uint64_t mid = f.order() / 2;
  auto left = qsolve::census_range(f, CensusMode::Formula, 1, mid);
  const auto right = qsolve::census_range(f, CensusMode::Formula, mid, f.order());
  left += right;
  const auto whole = qsolve::census(f, CensusMode::Formula).counts;
  EXPECT_EQ(left.m0, whole.m0);
  EXPECT_EQ(left.m1, whole.m1);
  EXPECT_EQ(left.m2, whole.m2);
  EXPECT_EQ(left.m_full, whole.m_full);
}
