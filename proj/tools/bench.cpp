// Compares the serial reference kernels against their OpenMP versions:
// whole-graph enumeration for degree-sequence realizability, batch
// Erdos-Gallai, and batch Hamilton-cycle counting.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topcode/parallel.hpp"

using namespace topcode;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif

    {
        std::set<DegreeSequence> a, b;
        double ts = time_ms([&] { a = realizable_sequences_serial(7); });
        double tp = time_ms([&] { b = realizable_sequences_parallel(7); });
        report("realizable sequences n=7", ts, tp, a == b);
    }
    {
        auto seqs = enumerate_nonincreasing(7, 8);
        // repeat the batch to give the timer something to chew on
        std::vector<DegreeSequence> many;
        for (int i = 0; i < 200; ++i) many.insert(many.end(), seqs.begin(), seqs.end());
        std::vector<char> a, b;
        double ts = time_ms([&] { a = is_graphical_batch_serial(many); });
        double tp = time_ms([&] { b = is_graphical_batch_parallel(many); });
        report("Erdos-Gallai batch", ts, tp, a == b);
    }
    {
        std::vector<Graph> graphs;
        for (int i = 0; i < 6; ++i) {
            graphs.push_back(Graph::complete(9));
            graphs.push_back(Graph::complete(10));
        }
        std::vector<long long> a, b;
        double ts = time_ms([&] { a = hamilton_count_batch_serial(graphs); });
        double tp = time_ms([&] { b = hamilton_count_batch_parallel(graphs); });
        report("Hamilton counts K9/K10", ts, tp, a == b);
    }
    return 0;
}
