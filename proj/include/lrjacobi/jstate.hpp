#pragma once

// Constant-size state for tracking the Jacobi sign through a sequence of
// left-to-right reductions, and its two lookup-table realizations.
//
// State S = (e, alpha, beta, d):
//   e      sign exponent, the running sign is (-1)^e
//   alpha  a mod 4
//   beta   b mod 4
//   d      1 if the last reduction subtracted from a, 0 if from b
//
// Packed 9-bit table index, most to least significant:
//   e:1 alpha:2 beta:2 d:1 | d_new:1 m4:2
// The top six bits are the packed state, which is also the layout of a
// full-table entry, so one update is `s = table[(s << 3) | (d_new << 2) | m4]`.

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace lrj {

class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tri-valued symbol result.
enum class Symbol : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Symbol s) noexcept { return static_cast<int>(s); }

constexpr Symbol symbol_from_int(int v) noexcept {
  return v > 0 ? Symbol::plus : (v < 0 ? Symbol::minus : Symbol::zero);
}

constexpr Symbol operator*(Symbol x, Symbol y) noexcept { return symbol_from_int(to_int(x) * to_int(y)); }

struct JacobiState {
  std::uint8_t e = 0;
  std::uint8_t alpha = 0;
  std::uint8_t beta = 1;
  std::uint8_t d = 1;

  constexpr bool valid() const noexcept {
    return e < 2 && alpha < 4 && beta < 4 && d < 2 && ((alpha & 1) || (beta & 1));
  }
  friend constexpr bool operator==(const JacobiState&, const JacobiState&) = default;
};

/// One reduction step: d_new = 1 when b was subtracted from a, 0 when a
/// from b; m4 = multiplier mod 4.
struct ReductionEvent {
  std::uint8_t d_new = 1;
  std::uint8_t m4 = 0;
  friend constexpr bool operator==(const ReductionEvent&, const ReductionEvent&) = default;
};

/// S <- (0, a mod 4, b mod 4, 1). Throws invalid_input for even b4.
constexpr JacobiState jstate_init(unsigned a4, unsigned b4) {
  if (!(b4 & 1)) throw invalid_input("denominator must be odd");
  return {0, std::uint8_t(a4 & 3), std::uint8_t(b4 & 3), 1};
}

namespace detail {

// Exponent of the sign change for subtracting m copies of an operand that is
// 2 mod 4 from an odd operand with residue `odd4`: m(odd-1)/2 + m(m-1)/2.
// Evaluated in plain integers and reduced afterwards.
constexpr unsigned even2_sign(long long m, long long odd4) noexcept {
  long long x = m * (odd4 - 1) / 2 + m * (m - 1) / 2;
  return unsigned(((x % 2) + 2) % 2);
}

constexpr std::uint8_t mod4(long long v) noexcept { return std::uint8_t(((v % 4) + 4) % 4); }

template <class M>
constexpr JacobiState jupdate_impl(JacobiState s, unsigned d_new, M m) noexcept {
  long long e = s.e;
  if (s.d != d_new && (s.alpha & 1) && (s.beta & 1))
    e += (s.alpha - 1) * (s.beta - 1) / 4;  // reciprocity
  s.d = std::uint8_t(d_new);
  if (s.d == 1) {
    if (s.beta == 2) e += even2_sign((long long)m, s.alpha);
    s.alpha = mod4((long long)s.alpha - (long long)(m % 4) * s.beta);
  } else {
    if (s.alpha == 2) e += even2_sign((long long)m, s.beta);
    s.beta = mod4((long long)s.beta - (long long)(m % 4) * s.alpha);
  }
  s.e = std::uint8_t(e & 1);
  return s;
}

}  // namespace detail

/// The state transition for one reduction with multiplier m = m4 (mod 4).
constexpr JacobiState jupdate(JacobiState s, unsigned d_new, unsigned m4) noexcept {
  return detail::jupdate_impl(s, d_new & 1, (unsigned long long)(m4 & 3));
}

/// Same transition, but with the sign exponent evaluated from the full
/// multiplier rather than its residue mod 4.
constexpr JacobiState jupdate_wide(JacobiState s, unsigned d_new, unsigned long long m) noexcept {
  return detail::jupdate_impl(s, d_new & 1, m);
}

constexpr JacobiState jupdate(JacobiState s, ReductionEvent ev) noexcept { return jupdate(s, ev.d_new, ev.m4); }

/// [survivor == 1] * (-1)^e
constexpr Symbol jstate_finish(JacobiState s, bool survivor_is_one) noexcept {
  if (!survivor_is_one) return Symbol::zero;
  return s.e ? Symbol::minus : Symbol::plus;
}

// ---------------------------------------------------------------------------
// Packed representation and the 512-entry table.

constexpr unsigned pack_state(JacobiState s) noexcept {
  return (unsigned(s.e) << 5) | (unsigned(s.alpha) << 3) | (unsigned(s.beta) << 1) | s.d;
}

constexpr JacobiState unpack_state(unsigned p) noexcept {
  return {std::uint8_t((p >> 5) & 1), std::uint8_t((p >> 3) & 3), std::uint8_t((p >> 1) & 3),
          std::uint8_t(p & 1)};
}

constexpr unsigned pack_index(JacobiState s, unsigned d_new, unsigned m4) noexcept {
  return (pack_state(s) << 3) | ((d_new & 1) << 2) | (m4 & 3);
}

inline constexpr std::size_t full_table_size = 512;
using FullTable = std::array<std::uint8_t, full_table_size>;

/// Entry i = packed jupdate of the state/event packed in i. Entries whose
/// state has both alpha and beta even are unreachable and hold the input
/// state bits unchanged.
constexpr FullTable jstate_table_full() noexcept {
  FullTable t{};
  for (unsigned i = 0; i < full_table_size; ++i) {
    const JacobiState s = unpack_state(i >> 3);
    t[i] = std::uint8_t(s.valid() ? pack_state(jupdate(s, (i >> 2) & 1, i & 3)) : (i >> 3));
  }
  return t;
}

inline constexpr FullTable full_table = jstate_table_full();

// ---------------------------------------------------------------------------
// Compact encoding: 26 codes.
//
// d only matters for alpha = beta = 3 (the only odd pair whose reciprocity
// exponent is odd), so each of the 12 valid (alpha, beta) pairs gets one
// class, except (3, 3) which gets two. code = e * 13 + class.

inline constexpr unsigned compact_states = 26;
inline constexpr std::size_t compact_table_size = compact_states * 8;
using CompactTable = std::array<std::uint8_t, compact_table_size>;

namespace detail {

// (alpha, beta) -> class, 0xff for invalid pairs; (3,3) maps to 11 (d=0) / 12 (d=1).
inline constexpr std::array<std::uint8_t, 16> pair_class = [] {
  std::array<std::uint8_t, 16> c{};
  std::uint8_t next = 0;
  for (unsigned ab = 0; ab < 16; ++ab) {
    unsigned a = ab >> 2, b = ab & 3;
    c[ab] = ((a & 1) || (b & 1)) ? next++ : 0xff;
  }
  return c;
}();

}  // namespace detail

/// Throws invalid_input if both alpha and beta are even.
constexpr unsigned jstate_encode_compact(JacobiState s) {
  if (!s.valid()) throw invalid_input("compact encoding of an invalid state");
  unsigned cls = detail::pair_class[(s.alpha << 2) | s.beta];
  if (s.alpha == 3 && s.beta == 3) cls += s.d;
  return unsigned(s.e) * 13 + cls;
}

/// Inverse of jstate_encode_compact; d is reported as 1 where it is irrelevant.
constexpr JacobiState jstate_decode_compact(unsigned code) noexcept {
  assert(code < compact_states);
  const unsigned e = code / 13, cls = code % 13;
  if (cls == 12) return {std::uint8_t(e), 3, 3, 1};
  for (unsigned ab = 0; ab < 16; ++ab) {
    if (detail::pair_class[ab] == cls)
      return {std::uint8_t(e), std::uint8_t(ab >> 2), std::uint8_t(ab & 3),
              std::uint8_t((ab == 15) ? 0 : 1)};
  }
  return {};
}

/// True when the states only differ in a d that does not affect any transition.
constexpr bool equivalent_states(JacobiState x, JacobiState y) noexcept {
  if (x.e != y.e || x.alpha != y.alpha || x.beta != y.beta) return false;
  return x.d == y.d || !(x.alpha == 3 && x.beta == 3);
}

/// Entry [code * 8 + (d_new << 2 | m4)] = code of the updated state.
constexpr CompactTable jstate_table_compact() noexcept {
  CompactTable t{};
  for (unsigned code = 0; code < compact_states; ++code) {
    const JacobiState s = jstate_decode_compact(code);
    for (unsigned ev = 0; ev < 8; ++ev)
      t[code * 8 + ev] = std::uint8_t(jstate_encode_compact(jupdate(s, ev >> 2, ev & 3)));
  }
  return t;
}

inline constexpr CompactTable compact_table = jstate_table_compact();

// ---------------------------------------------------------------------------
// State updaters used by the drivers. Each keeps its own representation and
// exposes update / state / finish.

/// Calls jupdate directly.
class DirectUpdater {
 public:
  constexpr DirectUpdater(unsigned a4, unsigned b4) : s_(jstate_init(a4, b4)) {}
  constexpr void update(ReductionEvent ev) noexcept { s_ = jupdate(s_, ev); }
  constexpr JacobiState state() const noexcept { return s_; }

 private:
  JacobiState s_;
};

/// One lookup in the 512-entry table per reduction.
class FullTableUpdater {
 public:
  constexpr FullTableUpdater(unsigned a4, unsigned b4) : bits_(pack_state(jstate_init(a4, b4))) {}
  constexpr void update(ReductionEvent ev) noexcept {
    bits_ = full_table[(bits_ << 3) | (unsigned(ev.d_new) << 2) | ev.m4];
    assert(unpack_state(bits_).valid());
  }
  constexpr JacobiState state() const noexcept { return unpack_state(bits_); }

 private:
  unsigned bits_;
};

/// One lookup in the 208-entry table per reduction.
class CompactTableUpdater {
 public:
  constexpr CompactTableUpdater(unsigned a4, unsigned b4) : code_(jstate_encode_compact(jstate_init(a4, b4))) {}
  constexpr void update(ReductionEvent ev) noexcept {
    code_ = compact_table[code_ * 8 + ((unsigned(ev.d_new) << 2) | ev.m4)];
  }
  constexpr JacobiState state() const noexcept { return jstate_decode_compact(code_); }

 private:
  unsigned code_;
};

}  // namespace lrj
