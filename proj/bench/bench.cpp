// Serial reference vs parallel kernels: canonical form and circuit search.

#include "rap/canonical.hpp"
#include "rap/circuits.hpp"
#include "rap/construct.hpp"
#include "rap/corpus.hpp"
#include "rap/lobell.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef RAP_HAVE_OPENMP
#include <omp.h>
#endif

using namespace rap;

namespace {

double best_of(int reps, const std::function<void()>& fn)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
#ifdef RAP_HAVE_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::vector<CorpusEntry> inputs;
    for (int n : {12, 24, 40})
        inputs.push_back({"L(" + std::to_string(n) + ")", build_lobell(n)});
    const Polyhedron l8 = build_lobell(8);
    auto pentagon = [](const Polyhedron& p) {
        FaceId f = 0;
        while (p.face_size(f) != 5)
            ++f;
        return f;
    };
    Polyhedron big = double_across(l8, 0);
    big = compose(big, pentagon(big), l8, 1).polyhedron;
    const Polyhedron other = double_across(l8, 1);
    big = compose(big, pentagon(big), other, pentagon(other)).polyhedron;
    inputs.push_back({"composite", big});

    std::printf("%-12s %5s  %-18s %10s %10s %7s\n", "input", "faces", "kernel", "serial s", "parallel s", "speedup");
    auto row = [&](const std::string& name, int faces, const char* kernel, const std::function<void()>& serial,
                   const std::function<void()>& parallel) {
        const double s = best_of(reps, serial);
        const double p = best_of(reps, parallel);
        std::printf("%-12s %5d  %-18s %10.4f %10.4f %7.2f\n", name.c_str(), faces, kernel, s, p, s / p);
    };
    for (const auto& [name, p] : inputs) {
        row(name, p.num_faces(), "canonical_form", [&] { (void)canonical_form_serial(p); },
            [&] { (void)canonical_form(p); });
        for (int k : {5, 6})
            row(name, p.num_faces(), k == 5 ? "circuits k=5" : "circuits k=6",
                [&] { (void)prismatic_circuits_serial(p, k); }, [&] { (void)prismatic_circuits(p, k); });
    }
    return 0;
}
