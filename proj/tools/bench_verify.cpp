// Times the serial and OpenMP paths of the verification suites and checks
// that both produce the same report.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <iostream>

#include "clusterf/render.hpp"
#include "clusterf/verify.hpp"

int main(int argc, char** argv) {
  using namespace clusterf;
  CLI::App app{"Serial vs parallel verification benchmark"};
  std::string suite = "formulas";
  std::size_t max_rank = 4;
  int repeats = 1;
  app.add_option("--suite", suite, "Suite to time")
      ->check(CLI::IsMember({"formulas", "quantum", "folding", "polygon", "all"}));
  app.add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, 8));
  app.add_option("--repeats", repeats, "Timed runs per mode")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const auto suites = suites_from_string(suite);
  auto time = [&](bool parallel, std::string& json) {
    VerifyOptions opt;
    opt.max_rank = max_rank;
    opt.parallel = parallel;
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const VerifyReport report = run_verify(suites, opt);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      best = std::min(best, took.count());
      json = dump_json(verify_report_to_json(report));
    }
    return best;
  };

  std::string serial_json, parallel_json;
  const double ts = time(false, serial_json);
  const double tp = time(true, parallel_json);
  std::cout << "suite " << suite << ", max rank " << max_rank << ", threads " << omp_get_max_threads() << "\n"
            << "serial   " << ts << " s\n"
            << "parallel " << tp << " s\n"
            << "speedup  " << (tp > 0 ? ts / tp : 0.0) << "\n"
            << "reports " << (serial_json == parallel_json ? "identical" : "DIFFER") << "\n";
  return serial_json == parallel_json ? 0 : 2;
}
