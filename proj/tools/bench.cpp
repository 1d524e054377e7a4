// Compares the serial reference kernels against the OpenMP kernels on the
// heavyweight workloads and asserts that the results agree exactly.

#include "barq/checks.hpp"
#include "barq/gs.hpp"
#include "barq/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

using namespace barq;

struct BenchRow {
  std::string task;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool equal = false;
};

template <typename F>
BenchRow bench(const std::string& task, F&& run) {
  // run(mode) returns a printable result; the two modes must agree exactly.
  Timer ts;
  const auto serial_result = run(par::Mode::serial);
  const double serial_ms = ts.elapsed_ms();
  Timer tp;
  const auto parallel_result = run(par::Mode::parallel);
  const double parallel_ms = tp.elapsed_ms();
  return BenchRow{task, serial_ms, parallel_ms, serial_result == parallel_result};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel benchmark for the exact kernels"};
  int threads = 0;
  std::uint64_t seed = 12345;
  app.add_option("--threads", threads, "worker thread count (0 = runtime default)");
  app.add_option("--seed", seed, "PRNG seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) par::set_threads(threads);

  std::vector<BenchRow> rows;

  rows.push_back(bench("zeta8 pairing (40320 terms)",
                       [&](par::Mode m) { return zeta8_pairing(m); }));

  {
    const Group s4 = Group::symmetric(4);
    Rng rng(seed);
    const Cochain w = random_table_cochain(rng, s4, 3);
    rows.push_back(bench("averaging homotopy scan, s4 degree 3 (13824 tuples)",
                         [&](par::Mode m) { return check_averaging_homotopy(s4, w, m).pass; }));
  }

  {
    const Group s4 = Group::symmetric(4);
    Rng rng(seed);
    const Cochain z = random_cocycle(rng, s4, 2);
    rows.push_back(bench("oscillation mechanism scan, s4 (331776 tuples)",
                         [&](par::Mode m) { return check_osc_mechanism(s4, z, m).pass; }));
  }

  std::printf("%-55s %12s %12s %9s %7s\n", "task", "serial_ms", "parallel_ms", "speedup",
              "equal");
  bool all_equal = true;
  for (const BenchRow& r : rows) {
    const double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
    std::printf("%-55s %12.1f %12.1f %8.2fx %7s\n", r.task.c_str(), r.serial_ms, r.parallel_ms,
                speedup, r.equal ? "yes" : "NO");
    all_equal = all_equal && r.equal;
  }
  if (!all_equal) {
    std::fprintf(stderr, "MISMATCH: serial and parallel kernels disagreed\n");
    return 1;
  }
  return 0;
}
