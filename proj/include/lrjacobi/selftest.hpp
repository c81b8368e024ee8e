#pragma once

// Exhaustive and randomized consistency suites, runnable from the CLI.
// Each suite stops at its first counterexample.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrjacobi/jacobi.hpp"

namespace lrj::selftest {

struct Options {
  std::uint64_t max_n = 300;
  std::uint64_t random_reps = 200;
  std::uint64_t seed = 1;
};

struct Counterexample {
  std::string a, b, expected, got;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::optional<Counterexample> failure;
  bool passed() const noexcept { return !failure; }
};

inline std::string str(Symbol s) { return std::to_string(to_int(s)); }

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  // Returns false once a failure has been recorded.
  template <class A, class B, class E, class G>
  bool check(bool ok, const A& a, const B& b, const E& expected, const G& got) {
    ++r_.checks;
    if (!ok && !r_.failure) r_.failure = Counterexample{text(a), text(b), text(expected), text(got)};
    return !r_.failure;
  }
  SuiteResult result() && { return std::move(r_); }

 private:
  template <class T>
  static std::string text(const T& v) {
    if constexpr (std::is_same_v<T, Nat>) return v.to_decimal();
    else if constexpr (std::is_same_v<T, Symbol>) return str(v);
    else if constexpr (std::is_convertible_v<T, std::string>) return std::string(v);
    else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }
  SuiteResult r_;
};

inline std::string state_text(JacobiState s) {
  std::ostringstream os;
  os << "(" << int(s.e) << "," << int(s.alpha) << "," << int(s.beta) << "," << int(s.d) << ")";
  return os.str();
}

}  // namespace detail

/// Every policy and every state updater against the brute-force and binary oracles.
inline SuiteResult oracle_suite(const Options& o) {
  detail::Recorder rec("oracle");
  for (std::uint64_t b = 1; b <= o.max_n + 1; b += 2) {
    for (std::uint64_t a = 0; a <= o.max_n; ++a) {
      const Symbol want = jacobi_bruteforce(a, b);
      const Symbol got[] = {
          jacobi(a, b, QuotientPolicy::unit),
          jacobi(a, b, QuotientPolicy::euclid),
          jacobi(a, b, QuotientPolicy::lehmer),
          jacobi<DirectUpdater>(a, b, QuotientPolicy::euclid),
          jacobi<CompactTableUpdater>(a, b, QuotientPolicy::euclid),
          binary_kronecker(a, b),
      };
      for (Symbol g : got)
        if (!rec.check(g == want, a, b, want, g)) return std::move(rec).result();
    }
  }
  return std::move(rec).result();
}

/// Both tables against the transition function, exhaustively.
inline SuiteResult table_suite(const Options&) {
  detail::Recorder rec("tables");
  rec.check(full_table.size() == 512, "full", "size", 512, full_table.size());
  rec.check(compact_table.size() == 208, "compact", "size", 208, compact_table.size());
  for (unsigned i = 0; i < full_table_size; ++i) {
    const JacobiState s = unpack_state(i >> 3);
    if (!s.valid()) continue;
    const JacobiState want = jupdate(s, (i >> 2) & 1, i & 3);
    const JacobiState got = unpack_state(full_table[i]);
    if (!rec.check(want == got, detail::state_text(s), i & 7, detail::state_text(want), detail::state_text(got)))
      return std::move(rec).result();
    const unsigned ev = i & 7;
    const JacobiState cgot = jstate_decode_compact(compact_table[jstate_encode_compact(s) * 8 + ev]);
    if (!rec.check(equivalent_states(cgot, want), detail::state_text(s), ev, detail::state_text(want),
                   detail::state_text(cgot)))
      return std::move(rec).result();
  }
  return std::move(rec).result();
}

/// Loop invariant at every iteration start for a0, b0 <= min(max_n, 500).
inline SuiteResult invariant_suite(const Options& o) {
  detail::Recorder rec("invariant");
  const std::uint64_t n = std::min<std::uint64_t>(o.max_n, 500);
  for (auto policy : {QuotientPolicy::euclid, QuotientPolicy::lehmer}) {
    for (std::uint64_t b0 = 1; b0 <= n; b0 += 2) {
      for (std::uint64_t a0 = 1; a0 <= n; ++a0) {
        const Symbol target = jacobi_bruteforce(a0, b0);
        const auto trace = invariant_probe(a0, b0, policy);
        for (const auto& snap : trace) {
          if (!rec.check(probe_invariant_holds(snap, target), a0, b0, target,
                         "violated at " + snap.a.to_decimal() + "," + snap.b.to_decimal() + " S=" +
                             detail::state_text(snap.state)))
            return std::move(rec).result();
        }
      }
    }
  }
  return std::move(rec).result();
}

/// Properties (ii)-(vi) of the Jacobi symbol on small ranges.
inline SuiteResult proposition_suite(const Options& o) {
  detail::Recorder rec("proposition");
  const std::uint64_t n = std::min<std::uint64_t>(o.max_n, 99);
  auto J = [](std::uint64_t a, std::uint64_t b) { return to_int(jacobi_bruteforce(a, b)); };
  for (std::uint64_t b = 1; b <= n; b += 2) {
    const int sb = ((b - 1) / 2) % 2 ? -1 : 1;
    for (std::uint64_t a = 1; a <= n; ++a) {
      const int jab = J(a, b);
      // (ii) negation
      const std::uint64_t neg = (b - a % b) % b;
      if (!rec.check(jab == sb * J(neg, b), a, b, jab, sb * J(neg, b))) return std::move(rec).result();
      // (iii) reciprocity
      if (a & 1) {
        const int s = ((a - 1) * (b - 1) / 4) % 2 ? -1 : 1;
        if (!rec.check(jab == s * J(b, a), a, b, jab, s * J(b, a))) return std::move(rec).result();
      }
      // (iv) periodicity
      for (std::uint64_t k = 1; k <= 5; ++k)
        if (!rec.check(jab == J(a + k * b, b), a, b, jab, J(a + k * b, b))) return std::move(rec).result();
      // (v), (vi)
      if (!(a & 1)) {
        for (std::uint64_t m = 1; m <= b / a; ++m) {
          int s = 1;
          if (a % 4 == 2) s = ((m * (b - 1) / 2 + m * (m - 1) / 2) % 2) ? -1 : 1;
          const int rhs = s * J(a, b - m * a);
          if (!rec.check(jab == rhs, a, b, jab, rhs)) return std::move(rec).result();
        }
      }
    }
  }
  return std::move(rec).result();
}

/// jupdate with full m in [1, 64] matches jupdate with m mod 4.
inline SuiteResult mod4_suite(const Options&) {
  detail::Recorder rec("mod4");
  for (unsigned p = 0; p < 64; ++p) {
    const JacobiState s = unpack_state(p);
    if (!s.valid()) continue;
    for (unsigned d_new = 0; d_new < 2; ++d_new)
      for (unsigned long long m = 1; m <= 64; ++m) {
        const JacobiState want = jupdate_wide(s, d_new, m);
        const JacobiState got = jupdate(s, d_new, unsigned(m & 3));
        if (!rec.check(want == got, detail::state_text(s), m, detail::state_text(want), detail::state_text(got)))
          return std::move(rec).result();
      }
  }
  return std::move(rec).result();
}

/// Random big operands: batch application vs event replay, low-bit
/// coherence, and Lehmer vs Euclid for gcd and jacobi.
inline SuiteResult lehmer_suite(const Options& o) {
  detail::Recorder rec("lehmer");
  std::mt19937_64 rng(o.seed);
  for (std::size_t bits : {256u, 1024u, 4096u}) {
    for (std::uint64_t rep = 0; rep < o.random_reps; ++rep) {
      Nat a = random_below_pow2(rng, bits);
      const Nat b = random_odd_exact_bits(rng, bits);
      if (a.is_zero()) a = Nat{1};

      const bool a_first = a >= b;
      const Nat& x = a_first ? a : b;
      const Nat& y = a_first ? b : a;
      const TopWindow w = top_window(x, y);
      if (auto batch = lehmer_window(w.a_hi, w.b_hi, w.exact)) {
        const auto applied = apply_batch(x, y, *batch);
        const auto replayed = replay_batch(x, y, *batch);
        if (!rec.check(applied == replayed, a, b, "replay", "batch differs")) return std::move(rec).result();
        JacobiState s = jstate_init(a.low2(), b.low2());
        for (ReductionEvent ev : batch->events) {
          if (!a_first) ev.d_new ^= 1;
          s = jupdate(s, ev);
        }
        const Nat& new_a = a_first ? applied.first : applied.second;
        const Nat& new_b = a_first ? applied.second : applied.first;
        const bool ok = s.alpha == new_a.low2() && s.beta == new_b.low2();
        if (!rec.check(ok, a, b, "low bits", "incoherent")) return std::move(rec).result();
      }
      const Nat ge = gcd(a, b, QuotientPolicy::euclid);
      const Nat gl = gcd(a, b, QuotientPolicy::lehmer);
      if (!rec.check(ge == gl, a, b, ge, gl)) return std::move(rec).result();
      const Symbol je = jacobi(a, b, QuotientPolicy::euclid);
      const Symbol jl = jacobi(a, b, QuotientPolicy::lehmer);
      if (!rec.check(je == jl, a, b, je, jl)) return std::move(rec).result();
      if (!rec.check(jl == binary_kronecker(a, b), a, b, jl, binary_kronecker(a, b)))
        return std::move(rec).result();
    }
  }
  return std::move(rec).result();
}

/// Nat kernel: division identity, submul, low bits, decimal round trip.
inline SuiteResult nat_suite(const Options& o) {
  detail::Recorder rec("nat");
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<std::size_t> len(1, 1500);
  for (std::uint64_t rep = 0; rep < o.random_reps; ++rep) {
    const Nat a = random_below_pow2(rng, len(rng));
    Nat b = random_below_pow2(rng, len(rng));
    if (b.is_zero()) b = Nat{1};
    const auto [q, r] = divmod(a, b);
    if (!rec.check(q * b + r == a && r < b, a, b, "a = q*b + r, r < b", "violated")) return std::move(rec).result();
    if (!rec.check(submul(a, q, b) == r, a, b, r, submul(a, q, b))) return std::move(rec).result();
    if (!rec.check(divmod(a, Nat{4}).second == Nat{a.low2()}, a, 4, divmod(a, Nat{4}).second, a.low2()))
      return std::move(rec).result();
    if (!rec.check(Nat::parse(a.to_decimal()) == a, a, "-", a, Nat::parse(a.to_decimal())))
      return std::move(rec).result();
  }
  return std::move(rec).result();
}

inline std::vector<SuiteResult> run_all(const Options& o,
                                        const std::function<void(const SuiteResult&)>& on_done = {}) {
  std::vector<SuiteResult> out;
  for (auto suite : {nat_suite, table_suite, mod4_suite, proposition_suite, oracle_suite, invariant_suite,
                     lehmer_suite}) {
    out.push_back(suite(o));
    if (on_done) on_done(out.back());
    if (!out.back().passed()) break;
  }
  return out;
}

}  // namespace lrj::selftest
