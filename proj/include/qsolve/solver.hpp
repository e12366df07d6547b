#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsolve/aseq.hpp"
#include "qsolve/error.hpp"
#include "qsolve/ext2.hpp"
#include "qsolve/field.hpp"

namespace qsolve {

/// Number of GF(Q)-rational roots of P_a(X) = X^(q+1) + X + a. Only four
/// values can occur: 0, 1, 2 or p^d + 1.
enum class RootClass { Zero, One, Two, Full };

constexpr const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::Zero: return "zero";
    case RootClass::One: return "one";
    case RootClass::Two: return "two";
    case RootClass::Full: return "full";
  }
  return "?";
}

struct SolveOptions {
  /// Use the mu_{Q+1}-based closed form for the two-root case (p = 2)
  /// instead of the Artin-Schreier linear solve. Both return the same pair.
  bool zeta_path = false;
};

struct SolveResult {
  Elt a;
  RootClass cls = RootClass::Zero;
  std::vector<Elt> roots;        // ascending by encoding, verified by substitution
  std::optional<Elt> witness_u;  // parametrization witness, full-split case only
  Elt F;
  Elt G;
  std::optional<Elt> E;
  std::optional<Elt> H;
};

namespace detail {

inline Elt p_value(const Field& f, const Elt& a, const Elt& x) {
  return f.add(f.add(f.mul(f.frob_q(x, 1), x), x), a);
}

inline void verify_root(const Field& f, const Elt& a, const Elt& x, const char* what) {
  if (!p_value(f, a, x).is_zero()) {
    fail(Errc::InternalVerificationFailure,
         std::string(what) + " root failed substitution (a = " + std::to_string(f.enc(a)) +
             ", x = " + std::to_string(f.enc(x)) + ")");
  }
}

/// Valid parametrization inputs are u outside GF(Q) ∩ GF(p^(2d)), i.e. not
/// fixed by the gcd(n, 2d)-fold Frobenius. This is also exactly the
/// condition for u - u^(q^2) to be nonzero.
inline bool psi_input_ok(const Field& f, const Elt& u) {
  const unsigned e = static_cast<unsigned>(std::gcd(f.n(), 2 * f.d()));
  return f.frobenius(u, e) != u;
}

inline void require_psi_input(const Field& f, const Elt& u) {
  if (!psi_input_ok(f, u)) {
    fail(Errc::UInSmallSubfield,
         "u = " + std::to_string(f.enc(u)) + " lies in GF(p^" +
             std::to_string(std::gcd(f.n(), 2 * f.d())) + ")");
  }
}

}  // namespace detail

/// The full-split parametrization a = (u - u^q)^(q^2+1) / (u - u^(q^2))^(q+1).
inline Elt psi(const Field& f, const Elt& u) {
  detail::require_psi_input(f, u);
  const Elt v = f.sub(u, f.frob_q(u, 1));
  const Elt w = f.sub(u, f.frob_q(u, 2));
  return f.div(f.mul(f.frob_q(v, 2), v), f.mul(f.frob_q(w, 1), w));
}

/// The p^d + 1 roots of P_psi(u): x_0 = -v/w and x_alpha = x_0 (u+alpha)^(q^2-q)
/// for alpha running over GF(p^d), where v = u - u^q and w = u - u^(q^2).
inline std::vector<Elt> psi_roots(const Field& f, const Elt& u) {
  detail::require_psi_input(f, u);
  const Elt a = psi(f, u);
  const Elt v = f.sub(u, f.frob_q(u, 1));
  const Elt w = f.sub(u, f.frob_q(u, 2));
  const Elt x0 = f.neg(f.div(v, w));

  std::set<Elt> roots;
  roots.insert(x0);
  for (const Elt& alpha : f.subfield_elements(f.d())) {
    const Elt shifted = f.add(u, alpha);
    const Elt x = f.mul(x0, f.div(f.frob_q(shifted, 2), f.frob_q(shifted, 1)));
    roots.insert(x);
  }

  std::uint64_t pd = 0;
  detail::checked_pow(f.p(), f.d(), f.order(), pd);
  if (roots.size() != pd + 1) {
    fail(Errc::InternalVerificationFailure,
         "parametrized root set has size " + std::to_string(roots.size()) +
             ", expected " + std::to_string(pd + 1));
  }
  std::vector<Elt> out(roots.begin(), roots.end());
  for (const Elt& x : out) detail::verify_root(f, a, x, "parametrized");
  return out;
}

/// Smallest-encoding witness u with psi(u) = a. Exists whenever F(a) = 0.
inline Elt invert_psi(const Field& f, const Elt& a) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
  if (!fg(f, a).F.is_zero()) {
    fail(Errc::NotFullSplit, "F(a) != 0: a is not in the full-split locus");
  }
  for (std::uint64_t uenc = 0; uenc < f.order(); ++uenc) {
    const Elt u = f.from_enc(uenc);
    if (!detail::psi_input_ok(f, u)) continue;
    if (psi(f, u) == a) return u;
  }
  fail(Errc::InternalVerificationFailure,
       "no parametrization witness found for a = " + std::to_string(f.enc(a)));
}

/// Root-count classification from the F/E/G/H criteria alone; no roots are
/// computed, so whole-field censuses can run on this.
inline RootClass classify(const Field& f, const Elt& a) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
  const auto [F, G] = fg(f, a);
  if (F.is_zero()) return RootClass::Full;
  if (f.p() != 2) {
    const Elt E = disc_odd(f, a);
    if (E.is_zero()) return RootClass::One;
    return f.qr_indicator(E, f.d()) == QrClass::Residue ? RootClass::Two : RootClass::Zero;
  }
  if (G.is_zero()) return RootClass::One;
  const EH eh = eh_char2(f, a);
  return eh.H.is_zero() ? RootClass::Two : RootClass::Zero;
}

/// Closed-form roots for the single-root and two-root cases known for the
/// full-split locus only when m is small; see special_root. Every root is
/// re-verified by substitution before being returned.
inline SolveResult solve(const Field& f, const Elt& a, const SolveOptions& opts = {}) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
  SolveResult res;
  res.a = a;
  const auto [F, G] = fg(f, a);
  res.F = F;
  res.G = G;

  if (F.is_zero()) {
    res.cls = RootClass::Full;
    if (f.p() != 2) res.E = disc_odd(f, a);
    const Elt u = invert_psi(f, a);
    res.witness_u = u;
    res.roots = psi_roots(f, u);
    return res;
  }

  if (f.p() != 2) {
    const Elt E = disc_odd(f, a);
    res.E = E;
    const Elt two_f = f.mul(f.from_int(2), F);
    if (E.is_zero()) {
      res.cls = RootClass::One;
      res.roots = {f.div(f.neg(G), two_f)};
    } else if (f.qr_indicator(E, f.d()) == QrClass::Residue) {
      res.cls = RootClass::Two;
      const Elt s = f.sqrt(E);
      if (f.frobenius(s, f.d()) != s) {
        fail(Errc::InternalVerificationFailure, "sqrt(E) is not in GF(p^d)");
      }
      res.roots = {f.div(f.sub(s, G), two_f), f.div(f.sub(f.neg(s), G), two_f)};
    } else {
      res.cls = RootClass::Zero;
    }
  } else {
    if (G.is_zero()) {
      res.cls = RootClass::One;
      // Unique root sqrt(a F^(q-1)).
      res.roots = {f.sqrt(f.mul(a, f.div(f.frob_q(F, 1), F)))};
    } else {
      const EH eh = eh_char2(f, a);
      res.E = eh.E;
      res.H = eh.H;
      if (!eh.H.is_zero()) {
        res.cls = RootClass::Zero;
      } else {
        res.cls = RootClass::Two;
        const Elt gf = f.div(G, F);
        Elt z;
        if (opts.zeta_path) {
          // x = (G/F) T_n(E / (zeta + 1)) with zeta a nontrivial element of
          // mu_{Q+1}; the T-sum lands back in GF(Q).
          const Ext2 ext(f);
          const Elt2 zeta = ext.mu_zeta();
          const Elt2 y = ext.div(ext.embed(eh.E), ext.add(zeta, ext.one()));
          const Elt2 t = ext.t_sum(y, 1, f.n());
          if (!ext.in_base(t)) {
            fail(Errc::InternalVerificationFailure, "zeta-path T-sum left GF(Q)");
          }
          z = t.lo;
        } else {
          const auto zs = f.artin_schreier_solve(eh.E);
          if (zs.empty()) {
            fail(Errc::InternalVerificationFailure,
                 "H = 0 but z^2 + z = E has no solution");
          }
          z = zs.front();
        }
        res.roots = {f.mul(gf, z), f.mul(gf, f.add(z, f.one()))};
      }
    }
  }

  std::sort(res.roots.begin(), res.roots.end());
  for (const Elt& x : res.roots) detail::verify_root(f, a, x, "closed-form");
  return res;
}

/// The closed-form root expressions known for small m on the full-split
/// locus. For m = 3 (any p, forces a = 1) the full root set is produced; for
/// p = 2 and m in {4, 5, 6} a single root is produced.
struct SpecialRoots {
  bool full_set = false;
  std::vector<Elt> roots;
};

namespace detail {

/// {(b - b^q)^(q-1) : b in GF(p^sub) \ GF(p^d)}, the root set of
/// X^(q+1) + X + 1 when it splits over GF(p^sub).
inline std::vector<Elt> frobenius_ratio_set(const Field& f, unsigned sub) {
  std::set<Elt> roots;
  for (std::uint64_t benc = 0; benc < f.order(); ++benc) {
    const Elt b = f.from_enc(benc);
    if (!f.in_subfield(b, sub)) continue;
    const Elt v = f.sub(b, f.frob_q(b, 1));
    if (v.is_zero()) continue;
    roots.insert(f.div(f.frob_q(v, 1), v));
  }
  return {roots.begin(), roots.end()};
}

}  // namespace detail

inline SpecialRoots special_root(const Field& f, const Elt& a) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
  const unsigned m = f.m();
  const bool applicable = (m == 3) || (f.p() == 2 && (m == 4 || m == 5 || m == 6));
  if (!applicable) {
    fail(Errc::NotApplicable,
         "no closed form for m = " + std::to_string(m) + " with p = " + std::to_string(f.p()));
  }
  if (!fg(f, a).F.is_zero()) {
    fail(Errc::NotFullSplit, "F(a) != 0: a is not in the full-split locus");
  }

  SpecialRoots out;
  if (m == 3) {
    // A_3(a) = 1 - a^q, so the locus is a = 1 and the roots are the values
    // (b - b^q)^(q-1) with b outside GF(p^d).
    if (a != f.one()) fail(Errc::NotApplicable, "m = 3 closed form covers a = 1 only");
    out.full_set = true;
    out.roots = detail::frobenius_ratio_set(f, f.n());
  } else if (m == 4) {
    out.roots = {f.sqrt(a)};
  } else if (m == 5) {
    const Elt aq = f.frob_q(a, 1);
    const Elt den = f.add(f.add(f.one(), aq), f.mul(aq, a));
    if (den.is_zero()) {
      fail(Errc::NotApplicable, "m = 5 closed form degenerates for this a");
    }
    out.roots = {f.div(f.mul(a, f.add(a, aq)), den)};
  } else {
    // m = 6. Three regimes:
    //  - a = 1: X^(q+1) + X + 1 splits already over GF(p^(3d)), where the
    //    (b - b^q)^(q-1) parametrization yields the whole root set.
    //  - a in GF(p^(3d)) \ {1}: over GF(p^(3d)) the instance has m' = 3 and
    //    a single rational root there, sqrt(a A_3^(q-1)); it persists here.
    //  - d = 1 otherwise: exactly one root x satisfies x^(q^3+1) = 1, and
    //    eliminating x between the r = 3 and r = 4 conjugate relations under
    //    that side condition leaves a closed form for x^2.
    const auto v = a_eval(f, a, 5);
    if (a == f.one()) {
      out.full_set = true;
      out.roots = detail::frobenius_ratio_set(f, 3 * f.d());
    } else if (f.in_subfield(a, 3 * f.d())) {
      out.roots = {f.sqrt(f.mul(a, f.div(f.frob_q(v[3], 1), v[3])))};
    } else if (f.d() == 1) {
      const Elt t1 = f.add(f.add(f.frob_q(v[3], 1), f.frob_q(v[4], 1)), v[5]);
      const Elt t2 = f.add(f.mul(a, f.frob_q(v[3], 1)), v[3]);
      const Elt num = f.add(t1, f.mul(f.frob_q(v[4], 1), t2));
      const Elt den = f.add(f.mul(f.mul(a, v[4]), t1), f.mul(f.add(v[4], v[5]), t2));
      if (den.is_zero()) {
        fail(Errc::NotApplicable, "m = 6 closed form degenerates for this a");
      }
      out.roots = {f.mul(a, f.sqrt(f.div(num, den)))};
    } else {
      fail(Errc::NotApplicable, "m = 6 closed form covers d = 1 and subfield a only");
    }
  }

  for (const Elt& x : out.roots) detail::verify_root(f, a, x, "special-case");
  return out;
}

}  // namespace qsolve
