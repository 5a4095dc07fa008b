// Compares the OpenMP kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "binlcl/classify.hpp"
#include "binlcl/oracle.hpp"
#include "binlcl/round_elim.hpp"
#include "binlcl/tree.hpp"

using namespace binlcl;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = now_s();
        f();
        best = std::min(best, now_s() - t0);
    }
    return best;
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
    printf("%-34s serial %8.3f ms   openmp %8.3f ms   speedup %5.2fx   results %s\n",
           name.c_str(), serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
           equal ? "equal" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    printf("threads: %d, best of %d runs\n", omp_get_max_threads(), reps);

    {
        // Exhaustive count over 2^22 labelings of a long path; the all-ones
        // constraints keep the search tree unpruned.
        ColoredTree t = gen_complete_biregular(2, 2, 11, Color::White);
        BinaryProblem p{2, 2, "111", "111"};
        uint64_t serial_count = 0, parallel_count = 0;
        double ts = time_best_of(reps, [&] {
            serial_count = brute_force_solve(t, p, OracleMode::Count, 30).count;
        });
        double tp = time_best_of(reps, [&] {
            parallel_count = brute_force_count_parallel(t, p, 30);
        });
        report("oracle count, 22-edge path", ts, tp, serial_count == parallel_count);
    }
    {
        auto problems = enumerate_problems(7, 7);
        std::vector<Classification> serial_out, parallel_out;
        double ts = time_best_of(reps, [&] { serial_out = classify_sweep_serial(problems); });
        double tp = time_best_of(reps, [&] { parallel_out = classify_sweep(problems); });
        bool equal = serial_out.size() == parallel_out.size();
        for (size_t i = 0; equal && i < serial_out.size(); ++i)
            equal = serial_out[i].matched_families == parallel_out[i].matched_families;
        report("classify sweep, degrees 2..7", ts, tp, equal);
    }
    {
        GeneralProblem fdso = make_fdso(4, 4, 2);
        RECaps caps;
        GeneralProblem serial_out, parallel_out;
        double ts = time_best_of(reps, [&] { serial_out = black_output_serial(fdso, caps); });
        double tp = time_best_of(reps, [&] { parallel_out = black_output(fdso, caps); });
        report("black output, FDSO(2) d=4 delta=4", ts, tp, serial_out == parallel_out);
    }
    {
        // A 5-letter alphabet pushes the candidate enumeration to ~46k
        // multisets of subsets.
        GeneralProblem g;
        g.alphabet = {"a", "b", "c", "d", "e"};
        g.d = 3;
        g.delta = 4;
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j)
                for (int k = j; k < 5; ++k) {
                    if ((i + 2 * j + 3 * k) % 3 == 0) g.white_configs.push_back({i, j, k});
                    for (int l = k; l < 5; ++l)
                        if ((i + j + k + l) % 2 == 0) g.black_configs.push_back({i, j, k, l});
                }
        normalize_general(g);
        GeneralProblem serial_out, parallel_out;
        double ts = time_best_of(reps, [&] { serial_out = black_output_serial(g); });
        double tp = time_best_of(reps, [&] { parallel_out = black_output(g); });
        report("black output, 5-letter alphabet", ts, tp, serial_out == parallel_out);
    }
    return 0;
}
