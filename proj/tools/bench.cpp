// Compares the parallel kernels against their serial references on
// hypercubes large enough to show a difference, and checks the results
// agree exactly.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& label, double serial, double parallel, bool same) {
  std::cout << label << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << (same ? " [results match]\n" : " [MISMATCH]\n");
}

}  // namespace

int main() {
  using pcube::Graph;

  {
    Graph q = pcube::hypercube(10);
    pcube::DistanceMatrix a, b;
    double ts = seconds([&] { a = pcube::all_pairs_distances_serial(q); });
    double tp = seconds([&] { b = pcube::all_pairs_distances(q); });
    report("all_pairs_distances on Q10", ts, tp, a.d == b.d);
  }
  {
    Graph q = pcube::hypercube(8);
    pcube::ThetaPartition a, b;
    double ts = seconds([&] { a = pcube::theta_classes_serial(q); });
    double tp = seconds([&] { b = pcube::theta_classes(q); });
    report("theta_classes on Q8", ts, tp, a.classes == b.classes && a.side_of == b.side_of);
  }
  {
    Graph q = pcube::hypercube(9);
    pcube::ThetaPartition a, b;
    double ts = seconds([&] { a = pcube::theta_classes_serial(q); });
    double tp = seconds([&] { b = pcube::theta_classes(q); });
    report("theta_classes on Q9", ts, tp, a.classes == b.classes && a.side_of == b.side_of);
  }
  return 0;
}
