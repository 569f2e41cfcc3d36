// Serial vs parallel timings for model enumeration and twist-products.
// One line per run: workload, mode, result size, nodes (pair elements for
// twist-products), best wall time.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shefferkit/search.hpp"
#include "shefferkit/twistkleene.hpp"

using namespace shefferkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Workload {
  std::string label;
  EnumerationSpec spec;
  bool row_major = true;  // row-major is orders of magnitude slower at n >= 4
};

char const* order_name(FillOrder o) { return o == FillOrder::RowMajor ? "row-major" : "diagonal"; }

double best_of(int repeats, auto&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = Clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shefferkit benchmarks"};
  int repeats = 3;
  int threads = 0;
  bool quick = false;
  bool all_orders = false;
  app.add_option("-r,--repeat", repeats, "Runs per measurement (best is reported)")->check(CLI::PositiveNumber);
  app.add_option("-t,--threads", threads, "Worker count for parallel runs (default: all)");
  app.add_flag("--quick", quick, "Smaller workloads");
  app.add_flag("--all-orders", all_orders, "Also time row-major fill on the large workloads (minutes)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_worker_count(threads);

  std::vector<Workload> loads;
  auto sheffer = [](std::size_t n) {
    EnumerationSpec s;
    s.n = n;
    s.require("AX1").require("AX2");
    return s;
  };
  loads.push_back({"sheffer n=3", sheffer(3)});
  {
    EnumerationSpec s = sheffer(4);
    s.commutative = true;
    loads.push_back({"commutative sheffer n=4", s});
  }
  loads.push_back({"sheffer n=4", sheffer(4), false});
  {
    EnumerationSpec s = sheffer(4);
    s.up_to_isomorphism = true;
    loads.push_back({"sheffer n=4 iso", s, false});
  }
  if (!quick) {
    EnumerationSpec s = sheffer(5);
    s.commutative = true;
    loads.push_back({"commutative sheffer n=5", s, false});
  }

  std::printf("workers: %d\n", worker_count());
  std::printf("%-26s %-10s %-9s %10s %12s %10s\n", "workload", "order", "mode", "models", "nodes",
              "seconds");
  for (auto const& w : loads) {
    for (FillOrder order : {FillOrder::DiagonalFirst, FillOrder::RowMajor}) {
      if (order == FillOrder::RowMajor && !w.row_major && !all_orders) continue;
      EnumerationSpec spec = w.spec;
      spec.order = order;
      for (Execution exec : {Execution::Serial, Execution::Parallel}) {
        EnumerationStats stats;
        double secs = best_of(repeats, [&] {
          stats = {};
          enumerate_groupoids(spec, &stats, exec);
        });
        std::printf("%-26s %-10s %-9s %10llu %12llu %10.4f\n", w.label.c_str(), order_name(order),
                    exec == Execution::Serial ? "serial" : "parallel",
                    static_cast<unsigned long long>(stats.models),
                    static_cast<unsigned long long>(stats.nodes), secs);
      }
    }
  }

  // Twist-products of every DRSI on 4 elements (16-element results).
  std::vector<RelationalSystem> systems = enumerate_drsi(4);
  for (Execution exec : {Execution::Serial, Execution::Parallel}) {
    std::size_t pairs = 0;
    double secs = best_of(repeats, [&] {
      pairs = 0;
      for (auto const& s : systems) pairs += twist_product(s, exec).size();
    });
    std::printf("%-26s %-10s %-9s %10zu %12zu %10.4f\n", "twist-product n=4 DRSIs", "-",
                exec == Execution::Serial ? "serial" : "parallel", systems.size(), pairs, secs);
  }
  return 0;
}
