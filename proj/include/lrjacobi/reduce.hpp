#pragma once

// Generic left-to-right reduction: repeatedly subtract a multiple of the
// smaller operand from the larger one. Every reduction is reported as a
// ReductionEvent so that a state machine can follow along.
//
// Three quotient policies:
//   unit    m = 1
//   euclid  m = floor(larger / smaller), one full-precision division per step
//   lehmer  quotients computed on the leading two words and collected into a
//           2x2 cofactor matrix, applied to the full numbers in one pass

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "lrjacobi/jstate.hpp"
#include "lrjacobi/nat.hpp"

namespace lrj {

enum class QuotientPolicy { unit, euclid, lehmer };

constexpr std::string_view to_string(QuotientPolicy p) noexcept {
  switch (p) {
    case QuotientPolicy::unit: return "unit";
    case QuotientPolicy::euclid: return "euclid";
    case QuotientPolicy::lehmer: return "lehmer";
  }
  return "?";
}

inline QuotientPolicy parse_policy(std::string_view s) {
  if (s == "unit") return QuotientPolicy::unit;
  if (s == "euclid") return QuotientPolicy::euclid;
  if (s == "lehmer") return QuotientPolicy::lehmer;
  throw invalid_input("unknown policy '" + std::string(s) + "'");
}

/// Cofactor matrix of a run of reductions on an ordered pair (x, y):
///   x' = u00*x - u01*y
///   y' = u11*y - u10*x
/// An x-step (x -= q*y) adds q*(u10, u11) to (u00, u01); a y-step adds
/// q*(u00, u01) to (u10, u11). Both keep this sign layout, so magnitudes are
/// all that is stored. Determinant is always +1.
struct Mat2 {
  limb_t u00 = 1, u01 = 0, u10 = 0, u11 = 1;

  /// Entries never exceed this, so the per-limb products in apply_batch fit in
  /// two words with room for the carries.
  static constexpr limb_t entry_bound = limb_t{1} << (limb_bits - 1);

  __int128 determinant() const noexcept {
    return __int128(dlimb_t(u00) * u11) - __int128(dlimb_t(u01) * u10);
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Small fixed-capacity event list. Matrix entries grow at least like the
/// Fibonacci numbers, so a window can never produce more than ~92 events
/// before hitting Mat2::entry_bound.
class EventList {
 public:
  static constexpr std::size_t capacity = 128;

  void push_back(ReductionEvent ev) noexcept {
    assert(n_ < capacity);
    buf_[n_++] = ev;
  }
  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  bool full() const noexcept { return n_ == capacity; }
  const ReductionEvent* begin() const noexcept { return buf_.data(); }
  const ReductionEvent* end() const noexcept { return buf_.data() + n_; }
  const ReductionEvent& operator[](std::size_t i) const noexcept { return buf_[i]; }
  std::vector<ReductionEvent> to_vector() const { return {begin(), end()}; }

 private:
  std::array<ReductionEvent, capacity> buf_{};
  std::size_t n_ = 0;
};

/// A run of reductions found in one Lehmer window. Events are in the (x, y)
/// frame of the window: d_new = 1 means x was reduced.
struct ReductionBatch {
  Mat2 matrix;
  EventList events;
  /// Full-precision multipliers, kept for replay checks.
  std::array<limb_t, EventList::capacity> quotients{};
};

/// Result of one reduce step with the events in the caller's (a, b) frame.
struct ReduceResult {
  Nat a;
  Nat b;
  std::vector<ReductionEvent> events;
};

namespace detail {

inline void require_positive(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) throw contract_violation("reduction requires a, b > 0");
}

}  // namespace detail

/// Subtract the smaller from the larger once. Ties reduce a.
inline ReductionEvent step_unit_in_place(Nat& a, Nat& b) {
  detail::require_positive(a, b);
  if (a >= b) {
    a -= b;
    return {1, 1};
  }
  b -= a;
  return {0, 1};
}

inline std::tuple<Nat, Nat, ReductionEvent> step_unit(Nat a, Nat b) {
  auto ev = step_unit_in_place(a, b);
  return {std::move(a), std::move(b), ev};
}

/// Replace the larger operand by its remainder modulo the smaller.
inline ReductionEvent step_euclid_in_place(Nat& a, Nat& b) {
  detail::require_positive(a, b);
  const bool reduce_a = a >= b;
  Nat& x = reduce_a ? a : b;
  const Nat& y = reduce_a ? b : a;
  auto [q, r] = divmod(x, y);
  x = std::move(r);
  return {std::uint8_t(reduce_a ? 1 : 0), std::uint8_t(q.low2())};
}

inline std::tuple<Nat, Nat, ReductionEvent> step_euclid(Nat a, Nat b) {
  auto ev = step_euclid_in_place(a, b);
  return {std::move(a), std::move(b), ev};
}

namespace detail {

// Floor division of (n + nadd) by (dv + dadd) with overflow detection.
// Returns nullopt on overflow.
inline std::optional<dlimb_t> checked_add(dlimb_t v, dlimb_t add) noexcept {
  dlimb_t s = v + add;
  if (s < v) return std::nullopt;
  return s;
}

// Floor quotient, with a subtraction loop for the common small quotients.
inline dlimb_t small_quotient_div(dlimb_t n, dlimb_t dv) noexcept {
  if (n < dv) return 0;
  if ((n >> 3) < dv) {
    dlimb_t q = 1;
    n -= dv;
    while (n >= dv) {
      n -= dv;
      ++q;
    }
    return q;
  }
  return n / dv;
}

}  // namespace detail

/// Runs Euclid's quotient loop on a leading window (x_hi, y_hi) with
/// x_hi >= y_hi > 0, accepting a quotient only when it provably equals the
/// quotient of the untruncated numbers.
///
/// When the window is truncated, the true current values satisfy (in units of
/// the truncation scale)
///   x in (xc - u01, xc + u00),   y in (yc - u10, yc + u11)
/// where xc, yc are the window values pushed through the matrix. A quotient q
/// is accepted when floor(x_lo / y_hi) == floor(x_hi / y_lo) == q >= 1. On
/// the first step this reduces to floor(x/(y+1)) == floor((x+1)/y). For an
/// exact window the intervals collapse and the loop runs until a remainder is
/// zero or the matrix bound is reached.
///
/// Returns nullopt if no quotient could be accepted.
inline std::optional<ReductionBatch> lehmer_window(dlimb_t x_hi, dlimb_t y_hi, bool exact) noexcept {
  if (y_hi == 0 || x_hi < y_hi) return std::nullopt;
  ReductionBatch batch;
  Mat2& m = batch.matrix;
  const dlimb_t fuzz = exact ? 0 : 1;
  dlimb_t xc = x_hi, yc = y_hi;
  bool reduce_x = true;

  while (!batch.events.full()) {
    // Current dividend/divisor and their uncertainty radii.
    dlimb_t& num = reduce_x ? xc : yc;
    const dlimb_t den = reduce_x ? yc : xc;
    const dlimb_t num_lo_w = fuzz * (reduce_x ? m.u01 : m.u10);
    const dlimb_t num_hi_w = fuzz * (reduce_x ? m.u00 : m.u11);
    const dlimb_t den_lo_w = fuzz * (reduce_x ? m.u10 : m.u01);
    const dlimb_t den_hi_w = fuzz * (reduce_x ? m.u11 : m.u00);

    if (den <= den_lo_w || num < num_lo_w) break;
    const dlimb_t num_lo = num - num_lo_w;
    const dlimb_t den_lo = den - den_lo_w;
    const auto num_hi = detail::checked_add(num, num_hi_w);
    const auto den_hi = detail::checked_add(den, den_hi_w);
    if (!num_hi || !den_hi) break;

    const dlimb_t q = detail::small_quotient_div(*num_hi, den_lo);
    if (q == 0 || q >= Mat2::entry_bound) break;
    // Lower bound: q * den_hi <= num_lo, checked without overflow.
    if (*den_hi > num_lo / q) break;

    // Matrix update, refusing to grow entries past the bound.
    const limb_t q64 = limb_t(q);
    if (reduce_x) {
      const dlimb_t n00 = dlimb_t(m.u00) + dlimb_t(q64) * m.u10;
      const dlimb_t n01 = dlimb_t(m.u01) + dlimb_t(q64) * m.u11;
      if (n00 > Mat2::entry_bound || n01 > Mat2::entry_bound) break;
      m.u00 = limb_t(n00);
      m.u01 = limb_t(n01);
    } else {
      const dlimb_t n10 = dlimb_t(m.u10) + dlimb_t(q64) * m.u00;
      const dlimb_t n11 = dlimb_t(m.u11) + dlimb_t(q64) * m.u01;
      if (n10 > Mat2::entry_bound || n11 > Mat2::entry_bound) break;
      m.u10 = limb_t(n10);
      m.u11 = limb_t(n11);
    }
    num -= q * den;
    batch.quotients[batch.events.size()] = q64;
    batch.events.push_back({std::uint8_t(reduce_x ? 1 : 0), std::uint8_t(q64 & 3)});
    reduce_x = !reduce_x;
    if (exact && num == 0) break;
  }
  if (batch.events.empty()) return std::nullopt;
  return batch;
}

/// Applies a window's matrix to the full-precision (x, y) it was computed from.
inline void apply_batch_in_place(Nat& x, Nat& y, const ReductionBatch& batch) {
  const Mat2& m = batch.matrix;
  apply_cofactors(x, y, m.u00, m.u01, m.u10, m.u11);
}

inline std::pair<Nat, Nat> apply_batch(Nat x, Nat y, const ReductionBatch& batch) {
  apply_batch_in_place(x, y, batch);
  return {std::move(x), std::move(y)};
}

/// Replays a batch one event at a time at full precision (x -= q*y etc.).
/// This is the reference the matrix application is checked against.
inline std::pair<Nat, Nat> replay_batch(Nat x, Nat y, const ReductionBatch& batch) {
  for (std::size_t i = 0; i < batch.events.size(); ++i) {
    const Nat q{batch.quotients[i]};
    if (batch.events[i].d_new) x = submul(x, q, y);
    else y = submul(y, q, x);
  }
  return {std::move(x), std::move(y)};
}

/// One step of the generic loop under `policy`. Each event is passed to
/// `sink` in emission order, in the (a, b) frame. a, b > 0.
template <class Sink>
void reduce_step(QuotientPolicy policy, Nat& a, Nat& b, Sink&& sink) {
  switch (policy) {
    case QuotientPolicy::unit:
      sink(step_unit_in_place(a, b));
      return;
    case QuotientPolicy::euclid:
      sink(step_euclid_in_place(a, b));
      return;
    case QuotientPolicy::lehmer: {
      detail::require_positive(a, b);
      const bool a_first = a >= b;
      Nat& x = a_first ? a : b;
      Nat& y = a_first ? b : a;
      const TopWindow w = top_window(x, y);
      if (auto batch = lehmer_window(w.a_hi, w.b_hi, w.exact)) {
        apply_batch_in_place(x, y, *batch);
        for (ReductionEvent ev : batch->events) {
          if (!a_first) ev.d_new ^= 1;
          sink(ev);
        }
      } else {
        sink(step_euclid_in_place(a, b));
      }
      return;
    }
  }
}

/// Value-returning wrapper of reduce_step.
inline ReduceResult reduce_once(QuotientPolicy policy, Nat a, Nat b) {
  ReduceResult r;
  reduce_step(policy, a, b, [&](ReductionEvent ev) { r.events.push_back(ev); });
  r.a = std::move(a);
  r.b = std::move(b);
  return r;
}

}  // namespace lrj
