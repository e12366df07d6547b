// Acceptance suite: exercises every catalog field end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsolve/aseq.hpp"
#include "qsolve/error.hpp"
#include "qsolve/ext2.hpp"
#include "qsolve/field.hpp"
#include "qsolve/oracle.hpp"
#include "qsolve/solver.hpp"

using qsolve::CensusMode;
using qsolve::Elt;
using qsolve::Field;
using qsolve::RootClass;

namespace {

struct CatalogEntry {
  std::uint64_t p;
  unsigned n, k;
};

const std::vector<CatalogEntry> kCatalog = {
    {2, 4, 2}, {2, 6, 2}, {2, 6, 3}, {2, 8, 2}, {2, 9, 3},
    {2, 4, 1}, {2, 5, 1}, {2, 6, 1}, {3, 2, 1}, {3, 3, 1},
    {3, 4, 2}, {3, 6, 2}, {5, 2, 1}, {5, 4, 2}, {7, 2, 1},
};

std::string label(const CatalogEntry& c) {
  return "(" + std::to_string(c.p) + "," + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
}

std::uint64_t pd_of(const Field& f) {
  std::uint64_t pd = 0;
  qsolve::detail::checked_pow(f.p(), f.d(), f.order(), pd);
  return pd;
}

// Criterion 1: solve(a).roots set-equals the exhaustive scan for every a in
// every catalog field. Exact.
bool oracle_equivalence_sweep() {
  for (const auto& c : kCatalog) {
    const auto f = Field::create(c.p, c.n, c.k);
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      const Elt a = f.from_enc(ae);
      if (qsolve::solve(f, a).roots != qsolve::brute_roots(f, a)) {
        std::cout << "  mismatch at " << label(c) << " a=" << ae << "\n";
        return false;
      }
    }
  }
  return true;
}

// Criterion 2: the observed root count is always 0, 1, 2 or p^d + 1.
bool class_law_sweep() {
  for (const auto& c : kCatalog) {
    const auto f = Field::create(c.p, c.n, c.k);
    const std::uint64_t pd = pd_of(f);
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      const std::size_t count = qsolve::brute_roots(f, f.from_enc(ae)).size();
      if (count != 0 && count != 1 && count != 2 && count != pd + 1) {
        std::cout << "  " << label(c) << " a=" << ae << " has " << count << " roots\n";
        return false;
      }
    }
  }
  return true;
}

// Criterion 3: census counts--closed-form Mfull everywhere, the known
// (2,4,2) tuple, and formula/oracle mode agreement.
bool census_counts() {
  bool ok = true;
  for (const auto& c : kCatalog) {
    const auto f = Field::create(c.p, c.n, c.k);
    const auto formula = qsolve::census(f, CensusMode::Formula).counts;
    const auto scanned = qsolve::census(f, CensusMode::OracleScan).counts;
    if (formula.m0 != scanned.m0 || formula.m1 != scanned.m1 || formula.m2 != scanned.m2 ||
        formula.m_full != scanned.m_full) {
      std::cout << "  census modes disagree on " << label(c) << "\n";
      ok = false;
    }
    if (formula.m_full != qsolve::expected_full_split_count(f.spec())) {
      std::cout << "  " << label(c) << " Mfull=" << formula.m_full << " expected "
                << qsolve::expected_full_split_count(f.spec()) << "\n";
      ok = false;
    }
    if (c.p == 2 && c.n == 4 && c.k == 2) {
      if (formula.m0 != 6 || formula.m1 != 4 || formula.m2 != 5 || formula.m_full != 0) {
        std::cout << "  (2,4,2) tuple is (" << formula.m0 << "," << formula.m1 << ","
                  << formula.m2 << "," << formula.m_full << "), expected (6,4,5,0)\n";
        ok = false;
      }
    }
  }
  return ok;
}

bool identities_for(const Field& f, const Elt& a, unsigned rmax) {
  const auto rep = qsolve::identity_suite(f, a, rmax);
  if (!rep.all_passed()) return false;
  if (qsolve::a_eval(f, a, rmax) != qsolve::a_eval_defining(f, a, rmax)) return false;
  if (f.p() == 2) {
    try {
      if (!qsolve::trace_identities(f, a).all_passed()) return false;
    } catch (const qsolve::Error& e) {
      if (e.code() != qsolve::Errc::ZeroG) throw;
    }
  }
  return true;
}

// Criterion 4: identity suites, exhaustive on every catalog field (all have
// Q <= 2^10) plus 1000 seeded pseudorandom (field, a) draws.
bool identity_suites() {
  for (const auto& c : kCatalog) {
    const auto f = Field::create(c.p, c.n, c.k);
    if (f.order() > 1024) continue;
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      if (!identities_for(f, f.from_enc(ae), 12)) {
        std::cout << "  identity failure at " << label(c) << " a=" << ae << "\n";
        return false;
      }
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 1000; ++i) {
    const auto& c = kCatalog[rng() % kCatalog.size()];
    const auto f = Field::create(c.p, c.n, c.k);
    const std::uint64_t ae = 1 + rng() % (f.order() - 1);
    if (!identities_for(f, f.from_enc(ae), 12)) {
      std::cout << "  identity failure at " << label(c) << " a=" << ae << " (draw " << i << ")\n";
      return false;
    }
  }
  return true;
}

// Criterion 5: full-split structure on (2,6,2) and (3,3,1): the locus is
// {1}, the parametrization covers it with the predicted fiber size, its
// roots match the oracle, and the conjugate-product invariant holds.
bool full_split_structure() {
  for (const auto& c : {CatalogEntry{2, 6, 2}, CatalogEntry{3, 3, 1}}) {
    const auto f = Field::create(c.p, c.n, c.k);
    std::set<std::uint64_t> locus;
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      if (qsolve::fg(f, f.from_enc(ae)).F.is_zero()) locus.insert(ae);
    }
    if (locus != std::set<std::uint64_t>{1}) {
      std::cout << "  " << label(c) << " full-split locus is not {1}\n";
      return false;
    }

    const std::uint64_t pd = pd_of(f);
    std::uint64_t valid = 0;
    for (std::uint64_t ue = 0; ue < f.order(); ++ue) {
      const Elt u = f.from_enc(ue);
      if (f.in_subfield(u, 2 * f.d())) continue;
      ++valid;
      if (qsolve::psi(f, u) != f.one()) {
        std::cout << "  " << label(c) << " psi(" << ue << ") != 1\n";
        return false;
      }
    }
    if (valid != pd * (pd * pd - 1)) {
      std::cout << "  " << label(c) << " has " << valid << " valid u, expected "
                << pd * (pd * pd - 1) << "\n";
      return false;
    }

    const auto oracle = qsolve::brute_roots(f, f.one());
    if (qsolve::psi_roots(f, qsolve::invert_psi(f, f.one())) != oracle) {
      std::cout << "  " << label(c) << " parametrized roots differ from oracle\n";
      return false;
    }

    const auto v = qsolve::a_eval(f, f.one(), f.m() + 1);
    for (const Elt& x : oracle) {
      Elt nr = f.one();
      for (unsigned j = 0; j < f.m(); ++j) nr = f.mul(nr, f.frob_q(x, j));
      if (nr != v[f.m() + 1]) {
        std::cout << "  " << label(c) << " conjugate product mismatch at x=" << f.enc(x) << "\n";
        return false;
      }
    }
  }
  return true;
}

// Criterion 6: the small-m closed forms hold for every full-split a in every
// catalog field they cover; the m = 3 form yields the entire root set.
bool special_case_roots() {
  for (const auto& c : kCatalog) {
    const auto f = Field::create(c.p, c.n, c.k);
    const bool covered = f.m() == 3 || (f.p() == 2 && (f.m() == 4 || f.m() == 5 || f.m() == 6));
    if (!covered) continue;
    std::uint64_t checked = 0;
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      const Elt a = f.from_enc(ae);
      if (!qsolve::fg(f, a).F.is_zero()) continue;
      const auto all = qsolve::brute_roots(f, a);
      const auto out = qsolve::special_root(f, a);  // substitution-verified inside
      if (f.m() == 3 || out.full_set) {
        if ((f.m() == 3 && !out.full_set) || out.roots != all) {
          std::cout << "  " << label(c) << " m=" << f.m() << " set mismatch at a=" << ae << "\n";
          return false;
        }
      } else {
        if (out.roots.size() != 1 ||
            !std::binary_search(all.begin(), all.end(), out.roots[0])) {
          std::cout << "  " << label(c) << " m=" << f.m() << " root not found at a=" << ae << "\n";
          return false;
        }
      }
      ++checked;
    }
    if (checked != qsolve::expected_full_split_count(f.spec())) {
      std::cout << "  " << label(c) << " covered " << checked << " full-split a\n";
      return false;
    }
  }
  return true;
}

// Criterion 7: the mu_{Q+1} closed form and the linear-algebra path return
// the same unordered root pair for every two-root a.
bool zeta_path_equivalence() {
  for (const auto& c : {CatalogEntry{2, 4, 2}, CatalogEntry{2, 6, 3}, CatalogEntry{2, 8, 2}}) {
    const auto f = Field::create(c.p, c.n, c.k);
    for (std::uint64_t ae = 1; ae < f.order(); ++ae) {
      const Elt a = f.from_enc(ae);
      if (qsolve::classify(f, a) != RootClass::Two) continue;
      const auto linear = qsolve::solve(f, a, {.zeta_path = false}).roots;
      const auto zeta = qsolve::solve(f, a, {.zeta_path = true}).roots;
      if (linear != zeta) {
        std::cout << "  " << label(c) << " path mismatch at a=" << ae << "\n";
        return false;
      }
    }
  }
  return true;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(QSOLVE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

// Criterion 8: identical CLI invocations produce byte-identical JSON.
bool cli_determinism() {
  const std::vector<std::string> invocations = {
      "solve --p 2 --n 6 --k 2 --a 1",
      "solve --p 2 --n 8 --k 2 --a 5 --zeta-path",
      "census --p 2 --n 4 --k 2",
      "census --p 3 --n 3 --k 1 --mode oracle",
      "param --p 2 --n 6 --k 2 --u 2",
      "invert --p 3 --n 3 --k 1 --a 1",
      "identities --p 2 --n 6 --k 3 --samples 100 --seed 42",
      "oracle-check --p 3 --n 2 --k 1",
  };
  for (const auto& args : invocations) {
    const std::string first = capture(args);
    const std::string second = capture(args);
    if (first.empty() || first != second) {
      std::cout << "  non-deterministic or empty output for: " << args << "\n";
      return false;
    }
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*fn)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. oracle equivalence sweep (solve == exhaustive scan, all catalog fields)", oracle_equivalence_sweep},
      {"2. root-count class law (|roots| in {0, 1, 2, p^d+1})", class_law_sweep},
      {"3. census counts (closed-form Mfull, (2,4,2) tuple, mode agreement)", census_counts},
      {"4. identity suites (exhaustive + 1000 seeded draws, r <= 12)", identity_suites},
      {"5. full-split structure on (2,6,2) and (3,3,1)", full_split_structure},
      {"6. small-m closed-form roots on the full-split locus", special_case_roots},
      {"7. zeta path equals linear path for every two-root a", zeta_path_equivalence},
      {"8. byte-identical CLI output across repeated invocations", cli_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failed << " acceptance criteria FAILED\n";
  }
  return failed;
}
