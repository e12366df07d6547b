#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qsolve/error.hpp"

namespace qsolve {

/// Hard cap on the extension degree n (coefficients live in a fixed array).
inline constexpr std::size_t kMaxDegree = 32;
/// Desk-scale default bound on the field order Q = p^n. Overridable per call
/// (the CLI reads QSOLVE_MAX_Q); every whole-field scan in this library is
/// O(Q), so the bound is what keeps runs tractable.
inline constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 24;
/// Cap on the characteristic so coefficient convolutions fit in uint64.
inline constexpr std::uint64_t kMaxP = std::uint64_t{1} << 24;

/// Element of GF(p^n): coefficient vector over Z_p, c[i] multiplies the i-th
/// power of the basis root. All arithmetic goes through a Field; an Elt by
/// itself is just digits. Comparison follows the canonical integer encoding
/// enc(x) = sum c[i] p^i (most significant digit last).
class Elt {
 public:
  std::uint32_t operator[](std::size_t i) const { return c_[i]; }
  std::uint32_t& operator[](std::size_t i) { return c_[i]; }

  friend bool operator==(const Elt& a, const Elt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Elt& a, const Elt& b) { return !(a == b); }
  friend bool operator<(const Elt& a, const Elt& b) {
    for (std::size_t i = kMaxDegree; i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
  }

 private:
  std::array<std::uint32_t, kMaxDegree> c_{};
};

/// Outcome of the quadratic-residue test x^((p^d-1)/2) in GF(p^d).
enum class QrClass { Zero, Residue, NonResidue };

namespace detail {

// Dense polynomials over Z_p, coefficient i = power i, used for modulus
// search and Frobenius table construction. Not performance critical.
using Poly = std::vector<std::uint64_t>;

inline std::uint64_t mod_pow_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv_u64(std::uint64_t a, std::uint64_t p) {
  return mod_pow_u64(a, p - 2, p);
}

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  poly_trim(r);
  return r;
}

inline Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
  poly_trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = mod_inv_u64(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    if (c) {
      for (std::size_t j = 0; j <= df; ++j) {
        const std::uint64_t sub = c * f[j] % p;
        a[shift + j] = (a[shift + j] + p - sub) % p;
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return poly_rem(poly_mul(a, b, p), f, p);
}

inline Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint64_t inv = mod_inv_u64(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  poly_trim(a);
  return a;
}

/// Rabin irreducibility test for a monic f of degree n over Z_p:
/// X^(p^n) = X mod f, and gcd(X^(p^(n/e)) - X, f) = 1 for every prime e | n.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  std::vector<std::size_t> checkpoints;
  std::size_t rest = n;
  for (std::size_t e = 2; e * e <= rest; ++e) {
    if (rest % e == 0) {
      checkpoints.push_back(n / e);
      while (rest % e == 0) rest /= e;
    }
  }
  if (rest > 1) checkpoints.push_back(n / rest);

  const Poly x{0, 1};
  Poly h = poly_rem(x, f, p);  // X^(p^j) mod f, j running upward
  for (std::size_t j = 1; j <= n; ++j) {
    h = poly_pow_mod(h, p, f, p);
    if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
      Poly g = poly_gcd(poly_sub(h, x, p), f, p);
      if (g.size() != 1) return false;
    }
    if (j == n) {
      Poly diff = poly_sub(h, x, p);
      if (!diff.empty()) return false;
    }
  }
  return true;
}

inline bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

/// p^e, or overflow past `limit`.
inline bool checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t limit,
                        std::uint64_t& out) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / p) return false;
    r *= p;
  }
  out = r;
  return true;
}

}  // namespace detail

/// The parameters of the problem instance: the field GF(Q) with Q = p^n and
/// the Frobenius exponent k defining q = p^k, plus the derived constants
/// d = gcd(n,k) and m = n/d.
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;
  unsigned m = 0;
  std::uint64_t q = 0;      // p^k
  std::uint64_t order = 0;  // Q = p^n

  static FieldSpec make(std::uint64_t p, unsigned n, unsigned k) {
    if (p < 2 || p > kMaxP || !detail::is_prime_u64(p)) {
      fail(Errc::NonPrimeP, "p = " + std::to_string(p) + " is not a prime in [2, 2^24]");
    }
    if (n < 1 || n > kMaxDegree) {
      fail(Errc::LimitExceeded, "extension degree n must be in [1, 32], got " + std::to_string(n));
    }
    if (k < 1) fail(Errc::LimitExceeded, "Frobenius exponent k must be >= 1");
    FieldSpec s;
    s.p = p;
    s.n = n;
    s.k = k;
    s.d = static_cast<unsigned>(std::gcd(n, k));
    s.m = n / s.d;
    if (!detail::checked_pow(p, k, std::uint64_t{1} << 62, s.q)) {
      fail(Errc::LimitExceeded, "q = p^k does not fit in 64 bits");
    }
    if (!detail::checked_pow(p, n, std::uint64_t{1} << 62, s.order)) {
      fail(Errc::LimitExceeded, "Q = p^n does not fit in 64 bits");
    }
    return s;
  }
};

/// Immutable context for exact arithmetic in GF(p^n). Construction picks the
/// canonical modulus (the monic irreducible with smallest integer encoding)
/// unless an explicit one is supplied, and precomputes the matrices of all n
/// Frobenius iterates x -> x^(p^j). All operations are pure; a Field can be
/// shared freely across threads.
class Field {
 public:
  static Field create(const FieldSpec& spec, std::uint64_t max_q = kDefaultMaxQ) {
    check_order(spec, max_q);
    return Field(spec, canonical_modulus(spec));
  }

  static Field create(std::uint64_t p, unsigned n, unsigned k,
                      std::uint64_t max_q = kDefaultMaxQ) {
    return create(FieldSpec::make(p, n, k), max_q);
  }

  /// Builds the field over a caller-supplied monic irreducible modulus
  /// (coefficient list c0..cn), for cross-checking against other systems.
  static Field with_modulus(const FieldSpec& spec, const std::vector<std::uint32_t>& modulus,
                            std::uint64_t max_q = kDefaultMaxQ) {
    check_order(spec, max_q);
    if (modulus.size() != spec.n + 1) {
      fail(Errc::BadModulus, "modulus must list n+1 coefficients c0..cn");
    }
    detail::Poly f(modulus.begin(), modulus.end());
    for (auto c : f) {
      if (c >= spec.p) fail(Errc::BadModulus, "modulus coefficient out of range [0, p)");
    }
    if (f.back() != 1) fail(Errc::BadModulus, "modulus must be monic");
    if (spec.n > 1 && !detail::is_irreducible(f, spec.p)) {
      fail(Errc::BadModulus, "modulus is reducible over Z_p");
    }
    return Field(spec, f);
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  unsigned n() const { return spec_.n; }
  unsigned k() const { return spec_.k; }
  unsigned d() const { return spec_.d; }
  unsigned m() const { return spec_.m; }
  std::uint64_t order() const { return spec_.order; }

  /// Modulus coefficients c0..cn (monic, degree n).
  std::vector<std::uint32_t> modulus() const {
    return std::vector<std::uint32_t>(mod_.begin(), mod_.end());
  }

  Elt zero() const { return Elt{}; }

  Elt one() const {
    Elt e;
    if (spec_.p > 1) e[0] = 1;
    return e;
  }

  /// Embeds a (possibly negative) integer scalar via reduction mod p.
  Elt from_int(std::int64_t v) const {
    const std::int64_t p = static_cast<std::int64_t>(spec_.p);
    Elt e;
    e[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
    return e;
  }

  /// Decodes the canonical integer encoding enc(x) = sum c[i] p^i.
  Elt from_enc(std::uint64_t u) const {
    if (u >= spec_.order) {
      fail(Errc::BadElement, "encoding " + std::to_string(u) + " out of range [0, Q)");
    }
    Elt e;
    for (unsigned i = 0; i < spec_.n; ++i) {
      e[i] = static_cast<std::uint32_t>(u % spec_.p);
      u /= spec_.p;
    }
    return e;
  }

  Elt from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > spec_.n) fail(Errc::BadElement, "too many coefficients");
    Elt e;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= spec_.p) fail(Errc::BadElement, "coefficient out of range [0, p)");
      e[i] = coeffs[i];
    }
    return e;
  }

  std::uint64_t enc(const Elt& x) const {
    std::uint64_t u = 0;
    for (unsigned i = spec_.n; i-- > 0;) u = u * spec_.p + x[i];
    return u;
  }

  Elt add(const Elt& x, const Elt& y) const {
    Elt r;
    for (unsigned i = 0; i < spec_.n; ++i) {
      std::uint32_t s = x[i] + y[i];
      if (s >= spec_.p) s -= static_cast<std::uint32_t>(spec_.p);
      r[i] = s;
    }
    return r;
  }

  Elt neg(const Elt& x) const {
    Elt r;
    for (unsigned i = 0; i < spec_.n; ++i) {
      r[i] = x[i] ? static_cast<std::uint32_t>(spec_.p - x[i]) : 0;
    }
    return r;
  }

  Elt sub(const Elt& x, const Elt& y) const { return add(x, neg(y)); }

  Elt mul(const Elt& x, const Elt& y) const {
    const unsigned n = spec_.n;
    const std::uint64_t p = spec_.p;
    std::array<std::uint64_t, 2 * kMaxDegree> t{};
    for (unsigned i = 0; i < n; ++i) {
      if (!x[i]) continue;
      const std::uint64_t xi = x[i];
      for (unsigned j = 0; j < n; ++j) t[i + j] += xi * y[j];
    }
    // Reduce by the monic modulus, high degree first. Entries above index i
    // are never read again once step i is done, so they can stay unreduced.
    for (unsigned i = 2 * n - 1; i >= n && i < 2 * kMaxDegree; --i) {
      const std::uint64_t c = t[i] % p;
      if (!c) continue;
      for (unsigned j = 0; j < n; ++j) {
        t[i - n + j] += c * (p - mod_[j]) % p;
      }
    }
    Elt r;
    for (unsigned i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(t[i] % p);
    return r;
  }

  Elt pow(Elt base, std::uint64_t e) const {
    Elt r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Elt inv(const Elt& x) const {
    if (x.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    return pow(x, spec_.order - 2);
  }

  Elt div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }

  /// x^(p^j) for any j >= 0 (reduced mod n, so frobenius(x, n) = x).
  Elt frobenius(const Elt& x, std::uint64_t j) const {
    const unsigned n = spec_.n;
    const unsigned jj = static_cast<unsigned>(j % n);
    if (jj == 0) return x;
    const std::uint32_t* mat = frob_.data() + static_cast<std::size_t>(jj) * n * n;
    Elt r;
    for (unsigned row = 0; row < n; ++row) {
      std::uint64_t acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(mat[row * n + i]) * x[i];
      r[row] = static_cast<std::uint32_t>(acc % spec_.p);
    }
    return r;
  }

  /// x^(q^r) with q = p^k, computed as a Frobenius iterate.
  Elt frob_q(const Elt& x, std::uint64_t r) const {
    return frobenius(x, (spec_.k % spec_.n) * (r % spec_.n) % spec_.n);
  }

  /// Relative trace Tr^n_d(x) = sum of x^(p^(d i)) for i < n/d. Requires d | n.
  Elt rel_trace(const Elt& x, unsigned dd) const {
    require_divisor(dd);
    Elt acc = x;
    Elt cur = x;
    for (unsigned i = 1; i < spec_.n / dd; ++i) {
      cur = frobenius(cur, dd);
      acc = add(acc, cur);
    }
    return acc;
  }

  /// Relative norm Nr^n_d(x) = product of x^(p^(d i)) for i < n/d. Requires d | n.
  Elt rel_norm(const Elt& x, unsigned dd) const {
    require_divisor(dd);
    Elt acc = x;
    Elt cur = x;
    for (unsigned i = 1; i < spec_.n / dd; ++i) {
      cur = frobenius(cur, dd);
      acc = mul(acc, cur);
    }
    return acc;
  }

  /// T with step `step` and `terms` terms: x + x^(p^step) + ... over terms-1
  /// Frobenius iterates.
  Elt t_sum(const Elt& x, unsigned step, unsigned terms) const {
    Elt acc = x;
    Elt cur = x;
    for (unsigned i = 1; i < terms; ++i) {
      cur = frobenius(cur, step);
      acc = add(acc, cur);
    }
    return acc;
  }

  /// Quadratic-residue indicator of x inside GF(p^d), p odd. x must be fixed
  /// by frobenius(., dd).
  QrClass qr_indicator(const Elt& x, unsigned dd) const {
    if (spec_.p == 2) fail(Errc::OddCharOnly, "quadratic residue test requires odd p");
    if (frobenius(x, dd) != x) {
      fail(Errc::NotInSubfield, "element is not fixed by the p^" + std::to_string(dd) + " Frobenius");
    }
    if (x.is_zero()) return QrClass::Zero;
    std::uint64_t pd = 0;
    if (!detail::checked_pow(spec_.p, dd, std::uint64_t{1} << 62, pd)) {
      fail(Errc::LimitExceeded, "p^d does not fit in 64 bits");
    }
    const Elt v = pow(x, (pd - 1) / 2);
    return v == one() ? QrClass::Residue : QrClass::NonResidue;
  }

  /// Square root. For p = 2 this is x^(2^(n-1)) and always exists; for odd p
  /// the result is the root with the smaller encoding (Tonelli-Shanks with
  /// the smallest-encoding non-residue as auxiliary).
  Elt sqrt(const Elt& x) const {
    if (spec_.p == 2) return frobenius(x, spec_.n - 1);
    if (x.is_zero()) return x;
    const std::uint64_t half = (spec_.order - 1) / 2;
    if (pow(x, half) != one()) fail(Errc::NotASquare, "element is not a square in GF(Q)");

    std::uint64_t t = spec_.order - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++s;
    }
    Elt z = zero();
    for (std::uint64_t u = 2; u < spec_.order; ++u) {
      z = from_enc(u);
      if (pow(z, half) != one()) break;
    }
    Elt c = pow(z, t);
    Elt r = pow(x, (t + 1) / 2);
    Elt l = pow(x, t);
    unsigned mexp = s;
    while (l != one()) {
      Elt probe = l;
      unsigned i = 0;
      while (probe != one()) {
        probe = mul(probe, probe);
        ++i;
      }
      Elt b = c;
      for (unsigned j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
      mexp = i;
      c = mul(b, b);
      r = mul(r, b);
      l = mul(l, c);
    }
    const Elt nr = neg(r);
    return nr < r ? nr : r;
  }

  /// Solves z^2 + z = c over GF(2^n) by Gaussian elimination on the
  /// coefficient basis. Returns {} when the absolute trace of c is 1,
  /// otherwise the two solutions {z, z+1} sorted by encoding.
  std::vector<Elt> artin_schreier_solve(const Elt& c) const {
    if (spec_.p != 2) fail(Errc::OddCharNotSupported, "Artin-Schreier solver requires p = 2");
    const unsigned n = spec_.n;
    // Augmented rows of the linear map z -> z^2 + z; bit i = column i,
    // bit n = right-hand side.
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
      Elt basis;
      basis[i] = 1;
      const Elt image = add(frobenius(basis, 1), basis);
      for (unsigned row = 0; row < n; ++row) {
        if (image[row]) rows[row] |= std::uint64_t{1} << i;
      }
    }
    for (unsigned row = 0; row < n; ++row) {
      if (c[row]) rows[row] |= std::uint64_t{1} << n;
    }

    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
      unsigned pivot = rank;
      while (pivot < n && !(rows[pivot] >> col & 1)) ++pivot;
      if (pivot == n) continue;
      std::swap(rows[rank], rows[pivot]);
      for (unsigned row = 0; row < n; ++row) {
        if (row != rank && (rows[row] >> col & 1)) rows[row] ^= rows[rank];
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    const std::uint64_t lhs_mask = (std::uint64_t{1} << n) - 1;
    for (unsigned row = rank; row < n; ++row) {
      if ((rows[row] & lhs_mask) == 0 && (rows[row] >> n & 1)) return {};
    }
    Elt z;
    for (unsigned row = 0; row < rank; ++row) {
      if (rows[row] >> n & 1) z[static_cast<unsigned>(pivot_col[row])] = 1;
    }
    Elt z1 = add(z, one());
    if (z1 < z) std::swap(z, z1);
    return {z, z1};
  }

  /// Membership in GF(Q) intersected with GF(p^dd): true iff x is fixed by
  /// frobenius(., gcd(n, dd)). dd need not divide n.
  bool in_subfield(const Elt& x, unsigned dd) const {
    const unsigned e = static_cast<unsigned>(std::gcd<std::uint64_t>(spec_.n, dd));
    return frobenius(x, e) == x;
  }

  /// All elements of GF(p^dd) inside GF(Q), ascending by encoding. O(Q) scan.
  std::vector<Elt> subfield_elements(unsigned dd) const {
    std::vector<Elt> out;
    for (std::uint64_t u = 0; u < spec_.order; ++u) {
      Elt x = from_enc(u);
      if (in_subfield(x, dd)) out.push_back(x);
    }
    return out;
  }

 private:
  Field(const FieldSpec& spec, detail::Poly modulus) : spec_(spec) {
    mod_.assign(modulus.begin(), modulus.end());
    build_frobenius_tables();
  }

  static void check_order(const FieldSpec& spec, std::uint64_t max_q) {
    if (spec.order > max_q) {
      fail(Errc::LimitExceeded, "Q = " + std::to_string(spec.order) +
                                    " exceeds the configured bound " + std::to_string(max_q));
    }
  }

  static detail::Poly canonical_modulus(const FieldSpec& spec) {
    const unsigned n = spec.n;
    detail::Poly f(n + 1, 0);
    f[n] = 1;
    for (std::uint64_t low = 0; low < spec.order; ++low) {
      std::uint64_t rest = low;
      for (unsigned i = 0; i < n; ++i) {
        f[i] = rest % spec.p;
        rest /= spec.p;
      }
      if (n == 1 || detail::is_irreducible(f, spec.p)) return f;
    }
    fail(Errc::InternalVerificationFailure, "no irreducible modulus found");
  }

  void build_frobenius_tables() {
    const unsigned n = spec_.n;
    const std::uint64_t p = spec_.p;
    detail::Poly f(mod_.begin(), mod_.end());
    frob_.assign(static_cast<std::size_t>(n) * n * n, 0);

    auto mat = [&](unsigned j) { return frob_.data() + static_cast<std::size_t>(j) * n * n; };
    for (unsigned i = 0; i < n; ++i) mat(0)[i * n + i] = 1;
    if (n == 1) return;

    // Columns of the x -> x^p matrix: images of the basis powers.
    const detail::Poly xp = detail::poly_pow_mod({0, 1}, p, f, p);
    detail::Poly col{1};
    for (unsigned i = 0; i < n; ++i) {
      for (std::size_t row = 0; row < col.size(); ++row) {
        mat(1)[row * n + i] = static_cast<std::uint32_t>(col[row]);
      }
      col = detail::poly_mul_mod(col, xp, f, p);
    }
    for (unsigned j = 2; j < n; ++j) {
      const std::uint32_t* base = mat(1);
      const std::uint32_t* prev = mat(j - 1);
      std::uint32_t* out = mat(j);
      for (unsigned row = 0; row < n; ++row) {
        for (unsigned i = 0; i < n; ++i) {
          std::uint64_t acc = 0;
          for (unsigned t = 0; t < n; ++t) {
            acc += static_cast<std::uint64_t>(base[row * n + t]) * prev[t * n + i];
          }
          out[row * n + i] = static_cast<std::uint32_t>(acc % p);
        }
      }
    }
  }

  void require_divisor(unsigned dd) const {
    if (dd == 0 || spec_.n % dd != 0) {
      fail(Errc::BadSubfield, std::to_string(dd) + " does not divide n = " + std::to_string(spec_.n));
    }
  }

  FieldSpec spec_;
  std::vector<std::uint32_t> mod_;   // n+1 coefficients, monic
  std::vector<std::uint32_t> frob_;  // n row-major n x n matrices, matrix j = x -> x^(p^j)
};

}  // namespace qsolve
