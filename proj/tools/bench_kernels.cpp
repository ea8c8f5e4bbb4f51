#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sgh/distance.hpp"
#include "sgh/edc.hpp"
#include "sgh/parallel.hpp"
#include "sgh/tube.hpp"
#include "sgh/weighted_graph.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  double best = 1e18;
  for (int run = 0; run < 3; ++run) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-24s %10.1f ms %10.1f ms %7.2fx  %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
  return equal;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) sgh::set_max_threads(std::atoi(argv[1]));
  std::printf("%-24s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");
  bool ok = true;

  {
    sgh::SignedGraph tube = sgh::twisted_tube(60);
    sgh::GirthVector serial, parallel;
    double ts = time_ms([&] { serial = sgh::walk_girths_serial(tube); });
    double tp = time_ms([&] { parallel = sgh::walk_girths(tube); });
    ok &= report("walk_girths", ts, tp, serial == parallel);
  }

  {
    sgh::WeightedSignedGraph cover =
        sgh::extended_double_cover(sgh::to_weighted(sgh::twisted_tube(44)));
    sgh::GirthVector serial, parallel;
    double ts = time_ms([&] { serial = sgh::weighted_walk_girths_serial(cover); });
    double tp = time_ms([&] { parallel = sgh::weighted_walk_girths(cover); });
    ok &= report("weighted_walk_girths", ts, tp, serial == parallel);
  }

  {
    int g = 18;
    sgh::TubeDims d = sgh::tube_dims(g);
    int n = d.order();
    std::vector<sgh::WeightedEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        edges.push_back(
            {u, v, sgh::tube_distance(g, sgh::tube_coord(d, u), sgh::tube_coord(d, v)).plus});
    sgh::WeightedSignedGraph dist(n, std::move(edges));
    std::vector<sgh::Triangle> triangles;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) triangles.push_back({x, y, z});
    sgh::TriangleSet ts_set{dist, triangles};
    std::vector<sgh::ClosureViolation> serial, parallel;
    double ts = time_ms([&] { serial = sgh::closure_violations_serial(ts_set, g); });
    double tp = time_ms([&] { parallel = sgh::closure_violations(ts_set, g); });
    ok &= report("closure_violations", ts, tp, serial == parallel);
  }

  return ok ? 0 : 1;
}
