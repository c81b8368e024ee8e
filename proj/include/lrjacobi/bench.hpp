#pragma once

// Timing harness: seeded operands, mean nanoseconds per call, CSV rows.

#include <array>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrjacobi/jacobi.hpp"

namespace lrj::bench {

inline constexpr std::array<std::string_view, 5> algo_ids = {
    "jacobi-euclid", "jacobi-lehmer", "jacobi-binary", "gcd-euclid", "gcd-lehmer"};

class unknown_algo : public std::invalid_argument {
 public:
  explicit unknown_algo(std::string_view id) : std::invalid_argument("unknown algo '" + std::string(id) + "'") {}
};

inline bool is_algo(std::string_view id) noexcept {
  for (auto a : algo_ids)
    if (a == id) return true;
  return false;
}

struct BenchRecord {
  std::string algo;
  std::size_t bits = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  double ns_per_op = 0;
};

struct OperandPair {
  Nat a;
  Nat b;
};

/// Operands depend only on (bits, seed, count): b has exactly `bits` bits and
/// is odd, a is uniform below 2^bits.
inline std::vector<OperandPair> make_operands(std::size_t bits, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<OperandPair> ops;
  ops.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Nat b = random_odd_exact_bits(rng, bits);
    Nat a = random_below_pow2(rng, bits);
    if (a.is_zero()) a = Nat{1};
    ops.push_back({std::move(a), std::move(b)});
  }
  return ops;
}

namespace detail {

inline int run_algo(std::string_view algo, const OperandPair& p) {
  if (algo == "jacobi-euclid") return to_int(jacobi(p.a, p.b, QuotientPolicy::euclid));
  if (algo == "jacobi-lehmer") return to_int(jacobi(p.a, p.b, QuotientPolicy::lehmer));
  if (algo == "jacobi-binary") return to_int(binary_kronecker(p.a, p.b));
  if (algo == "gcd-euclid") return int(gcd(p.a, p.b, QuotientPolicy::euclid).limb(0) & 1);
  if (algo == "gcd-lehmer") return int(gcd(p.a, p.b, QuotientPolicy::lehmer).limb(0) & 1);
  throw unknown_algo(algo);
}

}  // namespace detail

/// Operand pool size used for a run of `reps` calls.
inline std::size_t pool_size(std::uint64_t reps) noexcept { return std::size_t(std::min<std::uint64_t>(reps, 16)); }

/// Times `reps` calls of `algo` cycling over a seeded operand pool.
inline BenchRecord run(std::string_view algo, std::size_t bits, std::uint64_t reps, std::uint64_t seed) {
  if (!is_algo(algo)) throw unknown_algo(algo);
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (bits < 64) throw std::invalid_argument("bits must be at least 64");
  const auto ops = make_operands(bits, seed, pool_size(reps));
  volatile int sink = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < reps; ++i) sink = sink + detail::run_algo(algo, ops[i % ops.size()]);
  const auto t1 = std::chrono::steady_clock::now();
  const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
  return {std::string(algo), bits, reps, seed, ns / double(reps)};
}

inline constexpr std::string_view csv_header = "algo,bits,reps,seed,ns_per_op";

inline void write_csv_row(std::ostream& os, const BenchRecord& r) {
  os << r.algo << ',' << r.bits << ',' << r.reps << ',' << r.seed << ',' << std::fixed << r.ns_per_op << '\n';
  os.unsetf(std::ios::floatfield);
}

}  // namespace lrj::bench
