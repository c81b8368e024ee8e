#pragma once

// Minimal arbitrary-precision unsigned integer.
//
// Only the primitives needed by the left-to-right reduction engine live here:
// comparison, a - m*b, floor division, the low two bits, bit length, the
// leading double-word window, and an in-place cofactor update used to apply
// a whole batch of reductions at once.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrj {

using limb_t = std::uint64_t;
using dlimb_t = unsigned __int128;

inline constexpr unsigned limb_bits = 64;

/// Malformed numeric text. position() is the zero-based index of the
/// offending character.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its precondition (e.g. a - m*b < 0).
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class division_by_zero : public std::domain_error {
 public:
  division_by_zero() : std::domain_error("division by zero") {}
};

/// Normalized unsigned integer, little-endian 64-bit limbs.
/// Zero is the empty limb sequence; otherwise the top limb is nonzero.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) limbs_.push_back(v);
  }

  static Nat from_limbs(std::vector<limb_t> limbs) {
    Nat r;
    r.limbs_ = std::move(limbs);
    r.normalize();
    return r;
  }

  /// Decimal digits, or "0x" followed by hex digits.
  static Nat parse(std::string_view text);

  static Nat pow2(std::size_t k) {
    std::vector<limb_t> l(k / limb_bits + 1, 0);
    l.back() = limb_t{1} << (k % limb_bits);
    return from_limbs(std::move(l));
  }

  std::string to_decimal() const;
  std::string to_hex() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1); }
  bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
  std::size_t size() const noexcept { return limbs_.size(); }
  std::span<const limb_t> limbs() const noexcept { return limbs_; }
  limb_t limb(std::size_t i) const noexcept { return i < limbs_.size() ? limbs_[i] : 0; }

  bool fits_u64() const noexcept { return limbs_.size() <= 1; }
  /// Requires fits_u64().
  std::uint64_t to_u64() const noexcept {
    assert(fits_u64());
    return limb(0);
  }

  /// Value mod 4.
  unsigned low2() const noexcept { return limbs_.empty() ? 0u : unsigned(limbs_[0] & 3); }

  std::size_t bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return limbs_.size() * limb_bits - std::size_t(std::countl_zero(limbs_.back()));
  }

  /// Number of trailing zero bits; 0 for zero.
  std::size_t trailing_zeros() const noexcept {
    for (std::size_t i = 0; i < limbs_.size(); ++i)
      if (limbs_[i]) return i * limb_bits + std::size_t(std::countr_zero(limbs_[i]));
    return 0;
  }

  /// 128 bits of the value starting at bit `offset` (bits above the value read as zero).
  dlimb_t bits_at(std::size_t offset) const noexcept {
    const std::size_t w = offset / limb_bits;
    const unsigned sh = unsigned(offset % limb_bits);
    limb_t l0 = limb(w), l1 = limb(w + 1), l2 = limb(w + 2);
    if (sh) {
      l0 = (l0 >> sh) | (l1 << (limb_bits - sh));
      l1 = (l1 >> sh) | (l2 << (limb_bits - sh));
    }
    return (dlimb_t(l1) << limb_bits) | l0;
  }

  friend bool operator==(const Nat&, const Nat&) = default;
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }

  Nat& operator+=(const Nat& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    limb_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      dlimb_t s = dlimb_t(limbs_[i]) + o.limb(i) + carry;
      limbs_[i] = limb_t(s);
      carry = limb_t(s >> limb_bits);
      if (!carry && i >= o.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(carry);
    return *this;
  }

  /// Throws contract_violation if o > *this.
  Nat& operator-=(const Nat& o) {
    if (*this < o) throw contract_violation("subtraction underflow");
    limb_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      if (i >= o.limbs_.size() && !borrow) break;
      limb_t x = limbs_[i], y = o.limb(i);
      limb_t r = x - y - borrow;
      borrow = (x < y) || (x - y < borrow);
      limbs_[i] = r;
    }
    normalize();
    return *this;
  }

  Nat& operator>>=(std::size_t k) {
    const std::size_t w = k / limb_bits;
    const unsigned sh = unsigned(k % limb_bits);
    if (w >= limbs_.size()) {
      limbs_.clear();
      return *this;
    }
    const std::size_t n = limbs_.size() - w;
    if (sh == 0) {
      std::copy(limbs_.begin() + std::ptrdiff_t(w), limbs_.end(), limbs_.begin());
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i)
        limbs_[i] = (limbs_[i + w] >> sh) | (limbs_[i + w + 1] << (limb_bits - sh));
      limbs_[n - 1] = limbs_[n - 1 + w] >> sh;
    }
    limbs_.resize(n);
    normalize();
    return *this;
  }

  Nat& operator<<=(std::size_t k) {
    if (is_zero()) return *this;
    const std::size_t w = k / limb_bits;
    const unsigned sh = unsigned(k % limb_bits);
    const std::size_t n = limbs_.size();
    limbs_.resize(n + w + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      limb_t v = limbs_[i];
      limbs_[i + w + 1] |= sh ? (v >> (limb_bits - sh)) : 0;
      limbs_[i + w] = sh ? (v << sh) : v;
    }
    std::fill(limbs_.begin(), limbs_.begin() + std::ptrdiff_t(w), 0);
    normalize();
    return *this;
  }

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator>>(Nat a, std::size_t k) { return a >>= k; }
  friend Nat operator<<(Nat a, std::size_t k) { return a <<= k; }
  friend Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<limb_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      limb_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        dlimb_t t = dlimb_t(a.limbs_[i]) * b.limbs_[j] + r[i + j] + carry;
        r[i + j] = limb_t(t);
        carry = limb_t(t >> limb_bits);
      }
      r[i + b.size()] = carry;
    }
    return from_limbs(std::move(r));
  }

  /// Divides in place by a single limb, returning the remainder.
  limb_t divmod_limb(limb_t d) {
    if (d == 0) throw division_by_zero();
    dlimb_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      dlimb_t cur = (rem << limb_bits) | limbs_[i];
      limbs_[i] = limb_t(cur / d);
      rem = cur % d;
    }
    normalize();
    return limb_t(rem);
  }

  /// this = this * mul + add.
  void muladd_limb(limb_t mul, limb_t add) {
    limb_t carry = add;
    for (auto& l : limbs_) {
      dlimb_t t = dlimb_t(l) * mul + carry;
      l = limb_t(t);
      carry = limb_t(t >> limb_bits);
    }
    if (carry) limbs_.push_back(carry);
    normalize();
  }

  friend std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b);
  friend void apply_cofactors(Nat& x, Nat& y, limb_t u00, limb_t u01, limb_t u10, limb_t u11);

 private:
  void normalize() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<limb_t> limbs_;
};

inline Nat Nat::parse(std::string_view text) {
  if (text.empty()) throw parse_error("empty number", 0);
  Nat r;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    if (text.size() == 2) throw parse_error("missing hex digits", 2);
    for (std::size_t i = 2; i < text.size(); ++i) {
      char c = text[i];
      unsigned v;
      if (c >= '0' && c <= '9') v = unsigned(c - '0');
      else if (c >= 'a' && c <= 'f') v = unsigned(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v = unsigned(c - 'A' + 10);
      else throw parse_error(std::string("invalid hex digit '") + c + "'", i);
      r.muladd_limb(16, v);
    }
    return r;
  }
  // 19 decimal digits per limb step.
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t chunk = std::min<std::size_t>(19, text.size() - i);
    limb_t v = 0, scale = 1;
    for (std::size_t j = 0; j < chunk; ++j) {
      char c = text[i + j];
      if (c < '0' || c > '9') throw parse_error(std::string("invalid decimal digit '") + c + "'", i + j);
      v = v * 10 + limb_t(c - '0');
      scale *= 10;
    }
    r.muladd_limb(scale, v);
    i += chunk;
  }
  return r;
}

inline std::string Nat::to_decimal() const {
  if (is_zero()) return "0";
  constexpr limb_t chunk = 10'000'000'000'000'000'000ull;  // 10^19
  Nat t = *this;
  std::vector<limb_t> parts;
  while (!t.is_zero()) parts.push_back(t.divmod_limb(chunk));
  std::string s = std::to_string(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    std::string p = std::to_string(parts[i]);
    s.append(19 - p.size(), '0');
    s += p;
  }
  return s;
}

inline std::string Nat::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    for (int k = 60; k >= 0; k -= 4) s += digits[(limbs_[i] >> k) & 15];
  s.erase(0, s.find_first_not_of('0'));
  return "0x" + s;
}

/// Floor division (Knuth, Algorithm D). Throws division_by_zero.
inline std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw division_by_zero();
  if (a < b) return {Nat{}, a};
  if (b.size() == 1) {
    Nat q = a;
    limb_t r = q.divmod_limb(b.limbs_[0]);
    return {std::move(q), Nat{r}};
  }
  const unsigned s = unsigned(std::countl_zero(b.limbs_.back()));
  Nat vn = b << s;
  Nat un = a << s;
  const std::size_t n = vn.size();
  if (un.size() == a.size()) un.limbs_.push_back(0);
  else if (un.size() < a.size() + 1) un.limbs_.resize(a.size() + 1, 0);
  const std::size_t m = un.size() - n;
  std::vector<limb_t> q(m, 0);
  const limb_t vtop = vn.limbs_[n - 1], vnext = vn.limbs_[n - 2];
  for (std::size_t j = m; j-- > 0;) {
    dlimb_t num = (dlimb_t(un.limbs_[j + n]) << limb_bits) | un.limbs_[j + n - 1];
    dlimb_t qhat = num / vtop;
    dlimb_t rhat = num % vtop;
    while (qhat >> limb_bits ||
           qhat * vnext > ((rhat << limb_bits) | un.limbs_[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >> limb_bits) break;
    }
    // un[j .. j+n] -= qhat * vn
    limb_t mul_carry = 0, borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dlimb_t p = qhat * vn.limbs_[i] + mul_carry;
      mul_carry = limb_t(p >> limb_bits);
      limb_t pl = limb_t(p);
      limb_t x = un.limbs_[i + j];
      limb_t r = x - pl - borrow;
      borrow = (x < pl) || (x - pl < borrow);
      un.limbs_[i + j] = r;
    }
    limb_t x = un.limbs_[j + n];
    limb_t r = x - mul_carry - borrow;
    bool neg = (x < mul_carry) || (x - mul_carry < borrow);
    un.limbs_[j + n] = r;
    if (neg) {
      --qhat;
      limb_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        dlimb_t t = dlimb_t(un.limbs_[i + j]) + vn.limbs_[i] + carry;
        un.limbs_[i + j] = limb_t(t);
        carry = limb_t(t >> limb_bits);
      }
      un.limbs_[j + n] += carry;
    }
    q[j] = limb_t(qhat);
  }
  un.limbs_.resize(n);
  un.normalize();
  un >>= s;
  return {Nat::from_limbs(std::move(q)), std::move(un)};
}

inline std::strong_ordering compare(const Nat& a, const Nat& b) noexcept { return a <=> b; }

/// a - m*b. Throws contract_violation when m*b > a.
inline Nat submul(const Nat& a, const Nat& m, const Nat& b) {
  Nat prod = m * b;
  if (prod > a) throw contract_violation("submul: m*b exceeds a");
  return a - prod;
}

inline unsigned low2(const Nat& a) noexcept { return a.low2(); }
inline std::size_t bit_length(const Nat& a) noexcept { return a.bit_length(); }

/// Leading window shared by a pair of numbers.
struct TopWindow {
  dlimb_t a_hi = 0;
  dlimb_t b_hi = 0;
  /// True when both values fit in the window, i.e. a_hi and b_hi are the values.
  bool exact = false;
};

/// Top 2*limb_bits bits of a at a's bit length, and b's bits at the same offset.
/// Requires a >= b > 0.
inline TopWindow top_window(const Nat& a, const Nat& b) noexcept {
  assert(a >= b && !b.is_zero());
  constexpr std::size_t width = 2 * limb_bits;
  const std::size_t len = a.bit_length();
  if (len <= width) return {a.bits_at(0), b.bits_at(0), true};
  const std::size_t off = len - width;
  return {a.bits_at(off), b.bits_at(off), false};
}

/// In place: x <- u00*x - u01*y, y <- u11*y - u10*x (old x, y on the right).
/// Coefficients must be at most 2^63. Throws contract_violation if either
/// result would be negative.
inline void apply_cofactors(Nat& x, Nat& y, limb_t u00, limb_t u01, limb_t u10, limb_t u11) {
  const std::size_t n = std::max(x.size(), y.size());
  x.limbs_.resize(n, 0);
  y.limbs_.resize(n, 0);
  limb_t cxp = 0, cxm = 0, bx = 0;
  limb_t cyp = 0, cym = 0, by = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const limb_t xi = x.limbs_[i], yi = y.limbs_[i];
    dlimb_t xp = dlimb_t(u00) * xi + cxp;
    dlimb_t xm = dlimb_t(u01) * yi + cxm;
    dlimb_t yp = dlimb_t(u11) * yi + cyp;
    dlimb_t ym = dlimb_t(u10) * xi + cym;
    cxp = limb_t(xp >> limb_bits);
    cxm = limb_t(xm >> limb_bits);
    cyp = limb_t(yp >> limb_bits);
    cym = limb_t(ym >> limb_bits);
    limb_t p = limb_t(xp), m = limb_t(xm);
    x.limbs_[i] = p - m - bx;
    bx = (p < m) || (p - m < bx);
    p = limb_t(yp);
    m = limb_t(ym);
    y.limbs_[i] = p - m - by;
    by = (p < m) || (p - m < by);
  }
  // The high carries must cancel exactly for nonnegative results that fit.
  const bool x_ok = dlimb_t(cxp) == dlimb_t(cxm) + bx;
  const bool y_ok = dlimb_t(cyp) == dlimb_t(cym) + by;
  x.normalize();
  y.normalize();
  if (!x_ok || !y_ok) throw contract_violation("apply_cofactors: negative result");
}

/// Uniform value in [0, 2^bits).
template <class Rng>
Nat random_below_pow2(Rng& rng, std::size_t bits) {
  std::vector<limb_t> l((bits + limb_bits - 1) / limb_bits);
  for (auto& v : l) v = rng();
  if (bits % limb_bits && !l.empty()) l.back() &= (limb_t{1} << (bits % limb_bits)) - 1;
  return Nat::from_limbs(std::move(l));
}

/// Exactly `bits` bits long (top bit set), bits >= 1.
template <class Rng>
Nat random_exact_bits(Rng& rng, std::size_t bits) {
  Nat r = random_below_pow2(rng, bits - 1);
  return r + Nat::pow2(bits - 1);
}

/// Exactly `bits` bits long and odd.
template <class Rng>
Nat random_odd_exact_bits(Rng& rng, std::size_t bits) {
  Nat r = random_exact_bits(rng, bits);
  if (!r.is_odd()) r += Nat{1};
  return r;
}

}  // namespace lrj
