#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsolve/error.hpp"
#include "qsolve/field.hpp"

namespace qsolve {

// The recursively defined sequence A_r evaluated at a point a != 0, together
// with the derived quantities controlling the root structure of
// P_a(X) = X^(q+1) + X + a:
//
//   A_1 = 1, A_2 = -1, A_{r+2} = -A_{r+1} - a^(q^r) A_r   (A_0 = 0)
//   F = A_m,  G = -A_{m+1} - a A_{m-1}^q
//   p odd:  E = G^2 - 4 a F^(q+1)
//   p = 2:  E = a F^(q+1) / G^2,  H = abs. trace over GF(2^d) of Nr^n_d(a)/G^2

struct FG {
  Elt F;
  Elt G;
};

struct EH {
  Elt E;
  Elt H;
};

struct ASeqEval {
  Elt a;
  std::vector<Elt> values;  // values[r] = A_r(a) for r = 0..m+1
  Elt F;
  Elt G;
  std::optional<Elt> disc;  // E; for p = 2 only present when G != 0
  std::optional<Elt> H;     // p = 2 only, when G != 0
};

namespace detail {
inline void require_nonzero_a(const Elt& a) {
  if (a.is_zero()) fail(Errc::ZeroA, "a must be nonzero");
}
}  // namespace detail

/// A_0(a)..A_rmax(a) via the first-power recurrence
/// A_{r+2} = -A_{r+1} - a^(q^r) A_r.
inline std::vector<Elt> a_eval(const Field& f, const Elt& a, unsigned r_max) {
  detail::require_nonzero_a(a);
  std::vector<Elt> v(std::max(r_max, 2u) + 1);
  v[0] = f.zero();
  v[1] = f.one();
  v[2] = f.from_int(-1);
  for (unsigned r = 1; r + 2 <= r_max; ++r) {
    v[r + 2] = f.neg(f.add(v[r + 1], f.mul(f.frob_q(a, r), v[r])));
  }
  v.resize(r_max + 1);
  return v;
}

/// Same sequence via the defining q-power recurrence
/// A_{r+2} = -A_{r+1}^q - a^q A_r^(q^2); used to cross-check a_eval.
inline std::vector<Elt> a_eval_defining(const Field& f, const Elt& a, unsigned r_max) {
  detail::require_nonzero_a(a);
  std::vector<Elt> v(std::max(r_max, 2u) + 1);
  v[0] = f.zero();
  v[1] = f.one();
  v[2] = f.from_int(-1);
  const Elt aq = f.frob_q(a, 1);
  for (unsigned r = 1; r + 2 <= r_max; ++r) {
    v[r + 2] = f.neg(f.add(f.frob_q(v[r + 1], 1), f.mul(aq, f.frob_q(v[r], 2))));
  }
  v.resize(r_max + 1);
  return v;
}

inline FG fg(const Field& f, const Elt& a) {
  const unsigned m = f.m();
  const auto v = a_eval(f, a, m + 1);
  return {v[m], f.neg(f.add(v[m + 1], f.mul(a, f.frob_q(v[m - 1], 1))))};
}

/// Discriminant E = G^2 - 4 a F^(q+1) for odd characteristic; lies in GF(p^d).
inline Elt disc_odd(const Field& f, const Elt& a) {
  if (f.p() == 2) fail(Errc::EvenChar, "discriminant form requires odd p");
  detail::require_nonzero_a(a);
  const auto [F, G] = fg(f, a);
  const Elt fq1 = f.mul(f.frob_q(F, 1), F);
  return f.sub(f.mul(G, G), f.mul(f.from_int(4), f.mul(a, fq1)));
}

/// E = a F^(q+1)/G^2 and H = absolute trace over GF(2^d) of Nr^n_d(a)/G^2,
/// for p = 2. G = 0 means the unique-root case applies instead.
inline EH eh_char2(const Field& f, const Elt& a) {
  if (f.p() != 2) fail(Errc::OddCharNotSupported, "E/H form requires p = 2");
  detail::require_nonzero_a(a);
  const auto [F, G] = fg(f, a);
  if (G.is_zero()) fail(Errc::ZeroG, "G(a) = 0: the unique-root case applies");
  const Elt g2 = f.mul(G, G);
  const Elt e = f.div(f.mul(a, f.mul(f.frob_q(F, 1), F)), g2);
  const Elt w = f.div(f.rel_norm(a, f.d()), g2);
  return {e, f.t_sum(w, 1, f.d())};
}

/// Everything the classifier consumes, in one record.
inline ASeqEval aseq_eval(const Field& f, const Elt& a) {
  detail::require_nonzero_a(a);
  ASeqEval out;
  out.a = a;
  out.values = a_eval(f, a, f.m() + 1);
  const unsigned m = f.m();
  out.F = out.values[m];
  out.G = f.neg(f.add(out.values[m + 1], f.mul(a, f.frob_q(out.values[m - 1], 1))));
  if (f.p() != 2) {
    out.disc = disc_odd(f, a);
  } else if (!out.G.is_zero()) {
    const EH eh = eh_char2(f, a);
    out.disc = eh.E;
    out.H = eh.H;
  }
  return out;
}

/// For a root x of P_a, evaluates the quotient
/// (A_{r+1} x - a A_r^q) / (A_r x - a A_{r-1}^q), which equals x^(q^r).
/// The denominator cannot vanish for a genuine root; if it does the library
/// has a bug and InternalVerificationFailure is raised.
inline Elt xqr_eval(const Field& f, const Elt& a, const Elt& x, unsigned r) {
  detail::require_nonzero_a(a);
  const Elt pa = f.add(f.add(f.mul(f.frob_q(x, 1), x), x), a);
  if (!pa.is_zero()) fail(Errc::NotARoot, "x is not a root of X^(q+1) + X + a");
  if (r == 0) return x;
  const auto v = a_eval(f, a, r + 1);
  const Elt num = f.sub(f.mul(v[r + 1], x), f.mul(a, f.frob_q(v[r], 1)));
  const Elt den = f.sub(f.mul(v[r], x), f.mul(a, f.frob_q(v[r - 1], 1)));
  if (den.is_zero()) {
    fail(Errc::InternalVerificationFailure,
         "x^(q^r) quotient denominator vanished at r = " + std::to_string(r));
  }
  return f.div(num, den);
}

/// Pointwise checks of the algebraic identities the solver relies on. They
/// hold for every nonzero a, so any failure is an implementation bug.
struct IdentityReport {
  unsigned r_max = 0;
  bool norm_chain = false;       // A_{r+1}^(q+1) - A_r^q A_{r+2} = prod_{j<=r} a^(q^j)
  bool g_reflection = false;     // (G - 2F)^q = -G
  bool disc_in_base = false;     // G^2 - 4 a F^(q+1) fixed by Frobenius^k and Frobenius^d
  bool g_decomposition = false;  // G = -a^q F^(q^2) + F^q + a F

  bool all_passed() const {
    return norm_chain && g_reflection && disc_in_base && g_decomposition;
  }
};

inline IdentityReport identity_suite(const Field& f, const Elt& a, unsigned r_max) {
  detail::require_nonzero_a(a);
  IdentityReport rep;
  rep.r_max = r_max;

  const auto v = a_eval(f, a, r_max + 2);
  rep.norm_chain = true;
  Elt rhs = f.one();
  for (unsigned r = 1; r <= r_max; ++r) {
    rhs = f.mul(rhs, f.frob_q(a, r));
    const Elt lhs = f.sub(f.mul(f.frob_q(v[r + 1], 1), v[r + 1]), f.mul(f.frob_q(v[r], 1), v[r + 2]));
    if (lhs != rhs) {
      rep.norm_chain = false;
      break;
    }
  }

  const auto [F, G] = fg(f, a);
  rep.g_reflection = f.frob_q(f.sub(G, f.mul(f.from_int(2), F)), 1) == f.neg(G);

  const Elt e0 = f.sub(f.mul(G, G), f.mul(f.from_int(4), f.mul(a, f.mul(f.frob_q(F, 1), F))));
  rep.disc_in_base = f.frobenius(e0, f.k() % f.n()) == e0 && f.frobenius(e0, f.d()) == e0;

  const Elt g3 = f.add(f.add(f.neg(f.mul(f.frob_q(a, 1), f.frob_q(F, 2))), f.frob_q(F, 1)),
                       f.mul(a, F));
  rep.g_decomposition = G == g3;
  return rep;
}

/// The two characteristic-2 trace identities tying E and H together:
/// T_n(E) = m H and T_k(E) = (G + F^q)/G + (k/d) H. Requires G(a) != 0.
struct TraceIdentityReport {
  bool abs_trace = false;
  bool partial_trace = false;

  bool all_passed() const { return abs_trace && partial_trace; }
};

inline TraceIdentityReport trace_identities(const Field& f, const Elt& a) {
  if (f.p() != 2) fail(Errc::OddCharNotSupported, "trace identities require p = 2");
  const auto [E, H] = eh_char2(f, a);
  const auto [F, G] = fg(f, a);

  TraceIdentityReport rep;
  const Elt lhs_n = f.t_sum(E, 1, f.n());
  const Elt rhs_n = (f.m() % 2) ? H : f.zero();
  rep.abs_trace = lhs_n == rhs_n;

  const Elt lhs_k = f.t_sum(E, 1, f.k());
  Elt rhs_k = f.div(f.add(G, f.frob_q(F, 1)), G);
  if ((f.k() / f.d()) % 2) rhs_k = f.add(rhs_k, H);
  rep.partial_trace = lhs_k == rhs_k;
  return rep;
}

}  // namespace qsolve
