// Command-line front end: symbols, gcd, self-test, benchmarks, table dumps.
//
// Exit codes: 0 success, 1 self-test failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrjacobi/bench.hpp"
#include "lrjacobi/lrjacobi.hpp"
#include "lrjacobi/selftest.hpp"

namespace {

constexpr int kExitUsage = 2;

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return kExitUsage;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi and Kronecker symbols by left-to-right GCD reduction"};
  app.require_subcommand(1);

  std::string policy_name = "lehmer";
  std::string a_text, b_text;

  auto* cmd_jacobi = app.add_subcommand("jacobi", "Print the Jacobi symbol (a | b), b odd");
  cmd_jacobi->add_option("a", a_text, "numerator (decimal or 0x-hex)")->required();
  cmd_jacobi->add_option("b", b_text, "odd denominator")->required();
  cmd_jacobi->add_option("-p,--policy", policy_name, "unit | euclid | lehmer")->capture_default_str();

  auto* cmd_gcd = app.add_subcommand("gcd", "Print gcd(a, b), a, b > 0");
  cmd_gcd->add_option("a", a_text)->required();
  cmd_gcd->add_option("b", b_text)->required();
  cmd_gcd->add_option("-p,--policy", policy_name, "unit | euclid | lehmer")->capture_default_str();

  auto* cmd_kron = app.add_subcommand("kronecker", "Print the Kronecker symbol (a | b) for any integers");
  cmd_kron->add_option("a", a_text)->required();
  cmd_kron->add_option("b", b_text)->required();
  cmd_kron->add_option("-p,--policy", policy_name, "unit | euclid | lehmer")->capture_default_str();

  lrj::selftest::Options st;
  auto* cmd_self = app.add_subcommand("selftest", "Run the consistency suites");
  cmd_self->add_option("--max-n", st.max_n, "bound for exhaustive ranges")->capture_default_str();
  cmd_self->add_option("--random-reps", st.random_reps, "random pairs per size")->capture_default_str();
  cmd_self->add_option("--seed", st.seed, "RNG seed")->capture_default_str();

  std::vector<std::string> bits_list{"4096,16384,65536"};
  std::vector<std::string> algos{"jacobi-euclid,jacobi-lehmer,jacobi-binary,gcd-euclid,gcd-lehmer"};
  std::uint64_t reps = 10, seed = 1;
  auto* cmd_bench = app.add_subcommand("bench", "Time algorithms and print CSV");
  cmd_bench->add_option("--bits", bits_list, "operand sizes, comma separated")->capture_default_str();
  cmd_bench->add_option("--reps", reps, "calls per row")->capture_default_str();
  cmd_bench->add_option("--seed", seed, "operand RNG seed")->capture_default_str();
  cmd_bench->add_option("--algos", algos, "algorithm ids, comma separated")->capture_default_str();

  std::string which = "both";
  auto* cmd_tables = app.add_subcommand("tables", "Dump the state tables as hex, one 'index value' per line");
  cmd_tables->add_option("--which", which, "full | compact | both")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_jacobi || *cmd_gcd) {
      const auto policy = lrj::parse_policy(policy_name);
      const lrj::Nat a = lrj::Nat::parse(a_text);
      const lrj::Nat b = lrj::Nat::parse(b_text);
      if (*cmd_jacobi) {
        std::cout << lrj::to_int(lrj::jacobi(a, b, policy)) << '\n';
      } else {
        std::cout << lrj::gcd(a, b, policy).to_decimal() << '\n';
      }
      return 0;
    }
    if (*cmd_kron) {
      const auto policy = lrj::parse_policy(policy_name);
      std::cout << lrj::to_int(lrj::kronecker(lrj::Int::parse(a_text), lrj::Int::parse(b_text), policy)) << '\n';
      return 0;
    }
    if (*cmd_self) {
      const auto results = lrj::selftest::run_all(st, [](const lrj::selftest::SuiteResult& r) {
        if (r.passed()) {
          std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
        } else {
          const auto& f = *r.failure;
          std::cout << "FAIL " << r.name << " (" << f.a << ", " << f.b << ", " << f.expected << ", " << f.got
                    << ")\n";
        }
        std::cout.flush();
      });
      for (const auto& r : results)
        if (!r.passed()) return 1;
      return 0;
    }
    if (*cmd_bench) {
      const auto algo_list = split_list(algos);
      const auto bit_items = split_list(bits_list);
      if (bit_items.empty()) return fail("--bits must not be empty");
      for (const auto& a : algo_list)
        if (!lrj::bench::is_algo(a)) return fail("unknown algo '" + a + "'");
      std::vector<std::size_t> sizes;
      for (const auto& s : bit_items) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size() || v < 64) return fail("invalid bit size '" + s + "'");
        sizes.push_back(std::size_t(v));
      }
      if (reps < 1) return fail("--reps must be at least 1");
      std::cout << lrj::bench::csv_header << '\n';
      for (const auto& a : algo_list)
        for (std::size_t bits : sizes) {
          lrj::bench::write_csv_row(std::cout, lrj::bench::run(a, bits, reps, seed));
          std::cout.flush();
        }
      return 0;
    }
    if (*cmd_tables) {
      if (which != "full" && which != "compact" && which != "both") return fail("--which must be full, compact or both");
      if (which != "compact") {
        std::printf("# full %zu\n", lrj::full_table.size());
        for (std::size_t i = 0; i < lrj::full_table.size(); ++i) std::printf("%03zx %02x\n", i, lrj::full_table[i]);
      }
      if (which != "full") {
        std::printf("# compact %zu\n", lrj::compact_table.size());
        for (std::size_t i = 0; i < lrj::compact_table.size(); ++i)
          std::printf("%02zx %02x\n", i, lrj::compact_table[i]);
      }
      return 0;
    }
  } catch (const std::exception& e) {  // parse errors, even denominators, bad policy, ...
    return fail(e.what());
  }
  return kExitUsage;
}
