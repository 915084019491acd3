// Times the serial reference loop against the OpenMP table filler on a fixed
// set of triples and checks that both produce identical tables, so the fast
// path can never drift from the reference.

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "qks/sweep.hpp"

namespace {

struct Case {
  int r, i1;
  std::vector<int> mu, eta;
};

std::string label(const Case& c) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "r=" + std::to_string(c.r) + " i1=" + std::to_string(c.i1) + " mu=" + list(c.mu) +
         " eta=" + list(c.eta);
}

const char* method_name(qks::Method m) {
  switch (m) {
    case qks::Method::tableau: return "tableau";
    case qks::Method::recurrence: return "recurrence";
    case qks::Method::operators: return "operators";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = omp_get_max_threads();
  int reps = 3;
  CLI::App app{"serial vs parallel KS table filling"};
  app.add_option("--jobs", jobs, "parallel worker count")->capture_default_str();
  app.add_option("--reps", reps, "repetitions, best time kept")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::vector<Case> cases = {
      {2, 1, {2, 1}, {2, 2}},
      {2, 0, {2, 2}, {2, 1}},
      {2, 0, {2, 2}, {2, 2}},
      {3, 0, {2, 1}, {2, 1}},
      {3, 2, {1, 1}, {3, 2}},
      {1, 0, {2, 2, 1}, {1, 1, 1}},
  };

  std::printf("workers: %d\n", jobs);
  std::printf("%-32s %-11s %11s %11s %8s  %s\n", "triple", "method", "serial[ms]", "parallel[ms]",
              "speedup", "match");
  bool all_match = true;
  for (const auto& c : cases) {
    const qks::RectTriple triple(c.r, c.i1, c.mu, c.eta);
    for (const qks::Method m : {qks::Method::tableau, qks::Method::recurrence}) {
      auto best = [&](int nworkers) {
        double best_t = 1e300;
        qks::KsTables out;
        for (int k = 0; k < reps; ++k) {
          const double t0 = omp_get_wtime();
          out = qks::ks_tables(triple, m, nworkers);
          best_t = std::min(best_t, omp_get_wtime() - t0);
        }
        return std::pair<double, qks::KsTables>(best_t, std::move(out));
      };
      const auto [ts, serial] = best(1);
      const auto [tp, parallel] = best(jobs);
      const bool match = qks::tables_equal(serial, parallel);
      all_match = all_match && match;
      std::printf("%-32s %-11s %11.2f %11.2f %7.2fx  %s\n", label(c).c_str(), method_name(m),
                  ts * 1e3, tp * 1e3, ts / tp, match ? "yes" : "NO");
    }
  }
  if (!all_match) {
    std::fprintf(stderr, "parallel tables differ from the serial reference\n");
    return 1;
  }
  return 0;
}
