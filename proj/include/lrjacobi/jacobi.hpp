#pragma once

// Jacobi symbol by left-to-right reduction, plus the GCD driver, Kronecker
// preprocessing, a binary (right-to-left) baseline and small brute-force
// oracles.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrjacobi/jstate.hpp"
#include "lrjacobi/nat.hpp"
#include "lrjacobi/reduce.hpp"

namespace lrj {

/// Signed integer as magnitude and sign. Zero is never negative.
struct Int {
  Nat magnitude;
  bool negative = false;

  Int() = default;
  Int(Nat m, bool neg = false) : magnitude(std::move(m)), negative(neg && !magnitude.is_zero()) {}  // NOLINT
  Int(long long v)  // NOLINT
      : magnitude(v < 0 ? 0ull - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v)),
        negative(v < 0) {}

  /// Optional leading '-', then anything Nat::parse accepts.
  static Int parse(std::string_view text) {
    if (!text.empty() && text[0] == '-') {
      try {
        return Int(Nat::parse(text.substr(1)), true);
      } catch (const parse_error& e) {
        throw parse_error("invalid number", e.position() + 1);
      }
    }
    return Int(Nat::parse(text));
  }

  /// Value mod 8 in [0, 8).
  unsigned mod8() const noexcept {
    const unsigned r = unsigned(magnitude.limb(0) & 7);
    return negative ? (8 - r) & 7 : r;
  }

  friend bool operator==(const Int&, const Int&) = default;
};

/// Input outside the range a brute-force oracle supports.
class oracle_range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// (a | b) for odd b > 0, via left-to-right reduction. `Updater` selects how
/// the sign state is advanced (direct function or one of the tables).
template <class Updater = FullTableUpdater>
Symbol jacobi(Nat a, Nat b, QuotientPolicy policy = QuotientPolicy::lehmer) {
  if (b.is_zero() || !b.is_odd()) throw invalid_input("jacobi: denominator must be odd and positive");
  if (a.is_zero()) return b.is_one() ? Symbol::plus : Symbol::zero;
  Updater state(a.low2(), b.low2());
  for (;;) {
    reduce_step(policy, a, b, [&state](ReductionEvent ev) { state.update(ev); });
    if (a.is_zero()) return jstate_finish(state.state(), b.is_one());
    if (b.is_zero()) return jstate_finish(state.state(), a.is_one());
  }
}

/// GCD by the same reduction loop, without the state machine.
inline Nat gcd(Nat a, Nat b, QuotientPolicy policy = QuotientPolicy::lehmer) {
  if (a.is_zero() || b.is_zero()) throw invalid_input("gcd: inputs must be positive");
  for (;;) {
    reduce_step(policy, a, b, [](ReductionEvent) {});
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
  }
}

/// Kronecker symbol on arbitrary integers, reduced to the Jacobi case.
inline Symbol kronecker(Int a, Int b, QuotientPolicy policy = QuotientPolicy::lehmer) {
  if (b.magnitude.is_zero()) return a.magnitude.is_one() ? Symbol::plus : Symbol::zero;
  Symbol sign = Symbol::plus;
  if (b.negative && a.negative) sign = Symbol::minus;
  b.negative = false;

  const std::size_t twos = b.magnitude.trailing_zeros();
  if (twos > 0) {
    if (!a.magnitude.is_odd()) return Symbol::zero;
    const unsigned r = a.mod8();
    if ((twos & 1) && (r == 3 || r == 5)) sign = sign * Symbol::minus;
    b.magnitude >>= twos;
  }
  // b odd and positive from here on.
  // (-|a| | b) = (-1)^((b-1)/2) (|a| | b)
  if (a.negative && b.magnitude.low2() == 3) sign = sign * Symbol::minus;
  return sign * jacobi(std::move(a.magnitude), std::move(b.magnitude), policy);
}

/// Right-to-left binary algorithm: cast out twos from the numerator, then
/// subtract the smaller odd operand from the larger, swapping with
/// reciprocity. Used as benchmark baseline and independent cross-check.
inline Symbol binary_kronecker(Nat a, Nat b) {
  if (b.is_zero() || !b.is_odd()) throw invalid_input("binary_kronecker: denominator must be odd and positive");
  if (a.is_zero()) return b.is_one() ? Symbol::plus : Symbol::zero;
  bool negate = false;
  auto cast_out_twos = [&] {
    const std::size_t v = a.trailing_zeros();
    if (v == 0) return;
    a >>= v;
    const unsigned b8 = unsigned(b.limb(0) & 7);
    if ((v & 1) && (b8 == 3 || b8 == 5)) negate = !negate;
  };
  cast_out_twos();
  for (;;) {
    // a, b odd
    if (a < b) {
      std::swap(a, b);
      if (a.low2() == 3 && b.low2() == 3) negate = !negate;
    }
    a -= b;
    if (a.is_zero()) return b.is_one() ? (negate ? Symbol::minus : Symbol::plus) : Symbol::zero;
    cast_out_twos();
  }
}

namespace detail {

constexpr std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) noexcept {
  return std::uint64_t((unsigned __int128)x * y % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

inline constexpr std::uint64_t bruteforce_max_denominator = 1'000'000;

/// (a | b) by factoring b and applying Euler's criterion to each prime
/// factor. 0 < b <= 10^6, b odd.
inline Symbol jacobi_bruteforce(std::uint64_t a, std::uint64_t b) {
  if (b == 0 || b > bruteforce_max_denominator || !(b & 1))
    throw oracle_range_error("jacobi_bruteforce: b must be odd and in [1, 10^6]");
  int result = 1;
  auto legendre = [a](std::uint64_t p) {
    const std::uint64_t r = detail::powmod(a % p, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
  };
  for (std::uint64_t p = 3; p * p <= b; p += 2) {
    while (b % p == 0) {
      result *= legendre(p);
      b /= p;
    }
  }
  if (b > 1) result *= legendre(b);
  return symbol_from_int(result);
}

inline Symbol jacobi_bruteforce(const Nat& a, const Nat& b) {
  if (!b.fits_u64()) throw oracle_range_error("jacobi_bruteforce: b out of range");
  const std::uint64_t bv = b.to_u64();
  if (bv == 0) throw oracle_range_error("jacobi_bruteforce: b out of range");
  Nat r = a;
  return jacobi_bruteforce(r.divmod_limb(bv), bv);
}

/// Snapshot of the driver at the start of one loop iteration.
struct ProbeSnapshot {
  Nat a;
  Nat b;
  JacobiState state;
};

/// Runs the Jacobi loop on (a0, b0) recording (a, b, S) before every single
/// reduction. Lehmer batches are replayed event by event at full precision,
/// and the replay is checked against the batch application.
inline std::vector<ProbeSnapshot> invariant_probe(const Nat& a0, const Nat& b0,
                                                  QuotientPolicy policy = QuotientPolicy::lehmer) {
  if (b0.is_zero() || !b0.is_odd()) throw invalid_input("invariant_probe: denominator must be odd and positive");
  if (!a0.fits_u64() || !b0.fits_u64() || a0.to_u64() > bruteforce_max_denominator ||
      b0.to_u64() > bruteforce_max_denominator)
    throw oracle_range_error("invariant_probe: inputs must be at most 10^6");
  std::vector<ProbeSnapshot> trace;
  if (a0.is_zero()) return trace;
  Nat a = a0, b = b0;
  JacobiState s = jstate_init(a.low2(), b.low2());
  auto advance = [&s](ReductionEvent ev) { s = jupdate(s, ev); };
  while (!a.is_zero() && !b.is_zero()) {
    if (policy != QuotientPolicy::lehmer) {
      trace.push_back({a, b, s});
      reduce_step(policy, a, b, advance);
      continue;
    }
    const bool a_first = a >= b;
    Nat& x = a_first ? a : b;
    Nat& y = a_first ? b : a;
    const TopWindow w = top_window(x, y);
    const auto batch = lehmer_window(w.a_hi, w.b_hi, w.exact);
    if (!batch) {
      trace.push_back({a, b, s});
      s = jupdate(s, step_euclid_in_place(a, b));
      continue;
    }
    const auto [ax, ay] = apply_batch(x, y, *batch);
    for (std::size_t i = 0; i < batch->events.size(); ++i) {
      trace.push_back({a, b, s});
      ReductionEvent ev = batch->events[i];
      const Nat q{batch->quotients[i]};
      if (ev.d_new) x = submul(x, q, y);
      else y = submul(y, q, x);
      if (!a_first) ev.d_new ^= 1;
      s = jupdate(s, ev);
    }
    if (x != ax || y != ay) throw contract_violation("invariant_probe: batch replay mismatch");
  }
  return trace;
}

/// Checks the loop invariant of one snapshot against target = (a0 | b0):
///   d = 0: target = (-1)^e * ((b | a) if alpha odd, else (a | b))
///   d = 1: target = (-1)^e * ((a | b) if beta odd, else (b | a))
/// together with alpha = a mod 4 and beta = b mod 4.
inline bool probe_invariant_holds(const ProbeSnapshot& snap, Symbol target) {
  const JacobiState& s = snap.state;
  if (!s.valid() || s.alpha != snap.a.low2() || s.beta != snap.b.low2()) return false;
  const bool a_over_b = s.d == 0 ? !(s.alpha & 1) : (s.beta & 1);
  const Symbol inner = a_over_b ? jacobi_bruteforce(snap.a, snap.b) : jacobi_bruteforce(snap.b, snap.a);
  const Symbol sign = s.e ? Symbol::minus : Symbol::plus;
  return sign * inner == target;
}

}  // namespace lrj
