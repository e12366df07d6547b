#pragma once

#include <cstdint>
#include <string>

#include "qsolve/error.hpp"
#include "qsolve/field.hpp"

namespace qsolve {

/// Element of GF(Q^2) written as lo + hi*s over the generator s of the
/// quadratic extension. hi = 0 embeds GF(Q).
struct Elt2 {
  Elt lo;
  Elt hi;

  friend bool operator==(const Elt2& a, const Elt2& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Elt2& a, const Elt2& b) { return !(a == b); }
};

/// Quadratic extension GF(Q^2) = GF(Q)[s] / (s^2 + s + delta) for p = 2,
/// with delta the smallest-encoding element of absolute trace 1 (which makes
/// the modulus irreducible). Only needed for the mu_{Q+1} root of unity and
/// the zeta-based two-root formula.
class Ext2 {
 public:
  explicit Ext2(const Field& base) : f_(&base) {
    if (base.p() != 2) {
      fail(Errc::OddCharNotSupported, "quadratic extension tower is built for p = 2 only");
    }
    // Encodings below 2^i only involve basis powers below i, and the trace
    // is linear, so the smallest trace-1 element is the first trace-1 basis
    // power.
    for (unsigned i = 0; i < base.n(); ++i) {
      const Elt x = base.from_enc(std::uint64_t{1} << i);
      if (base.t_sum(x, 1, base.n()) == base.one()) {
        delta_ = x;
        return;
      }
    }
    fail(Errc::InternalVerificationFailure, "no trace-1 element found");
  }

  const Field& base() const { return *f_; }

  /// Constant term of the extension modulus s^2 + s + delta.
  const Elt& delta() const { return delta_; }

  Elt2 zero() const { return {f_->zero(), f_->zero()}; }
  Elt2 one() const { return {f_->one(), f_->zero()}; }
  Elt2 gen() const { return {f_->zero(), f_->one()}; }
  Elt2 embed(const Elt& x) const { return {x, f_->zero()}; }

  bool in_base(const Elt2& x) const { return x.hi.is_zero(); }

  std::uint64_t enc(const Elt2& x) const {
    return f_->enc(x.lo) + f_->order() * f_->enc(x.hi);
  }

  Elt2 from_enc(std::uint64_t u) const {
    return {f_->from_enc(u % f_->order()), f_->from_enc(u / f_->order())};
  }

  Elt2 add(const Elt2& x, const Elt2& y) const {
    return {f_->add(x.lo, y.lo), f_->add(x.hi, y.hi)};
  }

  // (a + b s)(c + e s) with s^2 = s + delta.
  Elt2 mul(const Elt2& x, const Elt2& y) const {
    const Elt ac = f_->mul(x.lo, y.lo);
    const Elt be = f_->mul(x.hi, y.hi);
    const Elt cross = f_->add(f_->add(f_->mul(x.lo, y.hi), f_->mul(x.hi, y.lo)), be);
    return {f_->add(ac, f_->mul(be, delta_)), cross};
  }

  Elt2 square(const Elt2& x) const {
    const Elt lo2 = f_->mul(x.lo, x.lo);
    const Elt hi2 = f_->mul(x.hi, x.hi);
    return {f_->add(lo2, f_->mul(hi2, delta_)), hi2};
  }

  /// Conjugate x^Q: s maps to the other root s + 1 of the modulus.
  Elt2 conj(const Elt2& x) const { return {f_->add(x.lo, x.hi), x.hi}; }

  Elt2 pow(Elt2 base, std::uint64_t e) const {
    Elt2 r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = square(base);
      e >>= 1;
    }
    return r;
  }

  Elt2 inv(const Elt2& x) const {
    if (x.lo.is_zero() && x.hi.is_zero()) fail(Errc::DivisionByZero, "inverse of zero in GF(Q^2)");
    // Norm x * x^Q lands in GF(Q).
    const Elt2 n2 = mul(x, conj(x));
    const Elt norm_inv = f_->inv(n2.lo);
    const Elt2 c = conj(x);
    return {f_->mul(c.lo, norm_inv), f_->mul(c.hi, norm_inv)};
  }

  Elt2 div(const Elt2& x, const Elt2& y) const { return mul(x, inv(y)); }

  /// Same T-sum as Field::t_sum, lifted to the tower: terms-1 iterates of the
  /// p^step power map.
  Elt2 t_sum(const Elt2& x, unsigned step, unsigned terms) const {
    Elt2 acc = x;
    Elt2 cur = x;
    for (unsigned i = 1; i < terms; ++i) {
      for (unsigned j = 0; j < step; ++j) cur = square(cur);
      acc = add(acc, cur);
    }
    return acc;
  }

  /// A nontrivial (Q+1)-th root of unity: g^(Q-1) for the first candidate g,
  /// by ascending encoding, that gives a value other than 1. Deterministic.
  Elt2 mu_zeta() const {
    if (f_->order() > (std::uint64_t{1} << 31)) {
      fail(Errc::LimitExceeded, "GF(Q^2) encodings do not fit in 64 bits");
    }
    const std::uint64_t q2 = f_->order() * f_->order();
    for (std::uint64_t u = 1; u < q2; ++u) {
      const Elt2 g = from_enc(u);
      const Elt2 z = pow(g, f_->order() - 1);
      if (z != one()) {
        if (pow(z, f_->order() + 1) != one()) {
          fail(Errc::InternalVerificationFailure, "mu_{Q+1} candidate has wrong order");
        }
        return z;
      }
    }
    fail(Errc::InternalVerificationFailure, "no nontrivial element of mu_{Q+1} found");
  }

 private:
  const Field* f_;
  Elt delta_;
};

}  // namespace qsolve
