#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "qsolve/error.hpp"
#include "qsolve/field.hpp"
#include "qsolve/solver.hpp"

namespace qsolve {

// Ground truth by exhaustion. The scan deliberately stays naive (one
// Frobenius and one multiplication per candidate) so it remains an
// independent check on the closed-form solver.

enum class CensusMode { Formula, OracleScan };

constexpr const char* to_string(CensusMode m) {
  return m == CensusMode::Formula ? "formula" : "oracle";
}

struct CensusTally {
  std::uint64_t m0 = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::uint64_t m_full = 0;

  CensusTally& operator+=(const CensusTally& o) {
    m0 += o.m0;
    m1 += o.m1;
    m2 += o.m2;
    m_full += o.m_full;
    return *this;
  }
};

struct CensusReport {
  FieldSpec spec;
  CensusMode mode = CensusMode::Formula;
  CensusTally counts;
  double elapsed_seconds = 0.0;
};

/// All x in GF(Q) with x^(q+1) + x + a = 0, ascending by encoding.
inline std::vector<Elt> brute_roots(const Field& f, const Elt& a) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
  std::vector<Elt> out;
  for (std::uint64_t xenc = 0; xenc < f.order(); ++xenc) {
    const Elt x = f.from_enc(xenc);
    if (f.add(f.add(f.mul(f.frob_q(x, 1), x), x), a).is_zero()) out.push_back(x);
  }
  return out;
}

/// Tally of root-count classes for a-encodings in [lo, hi). Ranges are
/// disjoint-partitionable; tallies add.
inline CensusTally census_range(const Field& f, CensusMode mode, std::uint64_t lo,
                                std::uint64_t hi) {
  std::uint64_t pd = 0;
  detail::checked_pow(f.p(), f.d(), f.order(), pd);
  CensusTally t;
  for (std::uint64_t aenc = std::max<std::uint64_t>(lo, 1); aenc < hi; ++aenc) {
    const Elt a = f.from_enc(aenc);
    std::uint64_t count = 0;
    if (mode == CensusMode::Formula) {
      switch (classify(f, a)) {
        case RootClass::Zero: count = 0; break;
        case RootClass::One: count = 1; break;
        case RootClass::Two: count = 2; break;
        case RootClass::Full: count = pd + 1; break;
      }
    } else {
      count = brute_roots(f, a).size();
    }
    if (count == 0) {
      ++t.m0;
    } else if (count == 1) {
      ++t.m1;
    } else if (count == 2) {
      ++t.m2;
    } else if (count == pd + 1) {
      ++t.m_full;
    } else {
      fail(Errc::InternalVerificationFailure,
           "a = " + std::to_string(aenc) + " has " + std::to_string(count) +
               " roots; only 0, 1, 2 or p^d+1 can occur");
    }
  }
  return t;
}

inline CensusReport census(const Field& f, CensusMode mode) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.spec = f.spec();
  rep.mode = mode;
  rep.counts = census_range(f, mode, 1, f.order());
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Exact number of a in GF(Q)* with a full p^d+1 split:
/// (p^((m-1)d) - p^((1 - m mod 2) d)) / (p^(2d) - 1).
inline std::uint64_t expected_full_split_count(const FieldSpec& spec) {
  std::uint64_t hi = 0, lo = 0, den = 0;
  detail::checked_pow(spec.p, static_cast<std::uint64_t>(spec.m - 1) * spec.d, spec.order, hi);
  detail::checked_pow(spec.p, static_cast<std::uint64_t>(1 - spec.m % 2) * spec.d, spec.order, lo);
  detail::checked_pow(spec.p, 2 * spec.d, std::uint64_t{1} << 62, den);
  return (hi - lo) / (den - 1);
}

}  // namespace qsolve
