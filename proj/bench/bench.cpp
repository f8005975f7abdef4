// Serial vs OpenMP timings for the endomorphism search and the Reidemeister
// sweep. Thread count follows OMP_NUM_THREADS.
//
// usage: twistspec-bench [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "twistspec/catalog.hpp"
#include "twistspec/search.hpp"
#include "twistspec/spectra.hpp"
#include "twistspec/structure.hpp"

using namespace twistspec;

namespace
{

double best_of(int repeats, std::function<void()> const &fn)
{
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

} // namespace

int main(int argc, char **argv)
{
  int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::vector<GroupDefinition> defs{builders::m9(), builders::holomorph_cyclic(15),
                                    builders::symmetric(5), builders::sl2(5),
                                    builders::direct_product(builders::cyclic(2), builders::symmetric(4)),
                                    builders::alternating(6), builders::symmetric(6)};

  std::printf("threads %d, best of %d\n\n", omp_get_max_threads(), repeats);
  std::printf("%-10s %6s %8s | %10s %10s %7s | %10s %10s %7s\n", "group", "order", "|End|",
              "search s", "search p", "speedup", "sweep s", "sweep p", "speedup");

  for (auto const &def : defs) {
    auto group = materialize(def);
    auto classes = conjugacy_classes(group);
    Budget budget;

    std::vector<Morphism> ends;
    double ss = best_of(repeats, [&] { ends = serial::enumerate(group, MorphismKind::endomorphism, budget); });
    double sp = best_of(repeats, [&] {
      auto p = parallel::enumerate(group, MorphismKind::endomorphism, budget);
      if (p != ends)
        std::abort();
    });

    auto method = ReidemeisterMethod::orbits;
    std::vector<std::size_t> rs;
    double ws = best_of(repeats, [&] { rs = serial::reidemeister_sweep(ends, classes, method); });
    double wp = best_of(repeats, [&] {
      if (parallel::reidemeister_sweep(ends, classes, method) != rs)
        std::abort();
    });

    std::printf("%-10s %6zu %8zu | %9.3fs %9.3fs %6.2fx | %9.3fs %9.3fs %6.2fx\n", def.name.c_str(),
                group->order(), ends.size(), ss, sp, ss / sp, ws, wp, ws / wp);
  }
  return 0;
}
