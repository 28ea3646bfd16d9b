// Benchmark of the OpenMP kernels against their serial reference
// implementations, on the second-derived boundary of the 4-simplex.

#include <chrono>
#include <cstdio>

#include "plhyp/fiberprod.hpp"
#include "plhyp/fixtures.hpp"
#include "plhyp/homology.hpp"
#include "plhyp/parallel.hpp"
#include "plhyp/subdivision.hpp"

using namespace plhyp;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return seconds(start, std::chrono::steady_clock::now());
}

}  // namespace

int main() {
    std::printf("threads: %d\n", thread_count());

    ComplexPtr base = boundary_delta(4);
    SecondDerived sd;
    double t_build = timed([&] { sd = second_derived(base); });
    const Complex& big = *sd.second.complex;
    std::printf("second derived of the boundary 4-sphere: %d top cells, %zu simplices (%.2fs)\n",
                big.f_vector().back(), big.size(), t_build);

    DerivedComplex serial_out, parallel_out;
    double t_serial = timed([&] { serial_out = reference::barycentric_serial(sd.second.complex); });
    double t_parallel = timed([&] { parallel_out = barycentric(sd.second.complex); });
    bool agree = serial_out.complex->same_as(*parallel_out.complex);
    std::printf("barycentric subdivision (%zu simplices out): serial %.2fs, openmp %.2fs, agree %s\n",
                parallel_out.complex->size(), t_serial, t_parallel, agree ? "yes" : "NO");

    HomologyGroups hz;
    double t_hom = timed([&] { hz = homology(big, Coeff::Z); });
    std::printf("integral homology of the big complex: betti (%d", hz.betti[0]);
    for (std::size_t i = 1; i < hz.betti.size(); ++i) std::printf(", %d", hz.betti[i]);
    std::printf(") in %.2fs\n", t_hom);

    // fiber product kernel on a mid-size hyperbolization
    ComplexPtr torus = torus7();
    HyperbolizedSimplex id2 = identity_hypersimplex(2);
    FoldingMap fold = folding_map(torus);
    PullbackRefinement refined = pullback_refinement(fold, id2.t);
    FiberProduct fp_serial, fp_parallel;
    double t_fp_serial =
        timed([&] { fp_serial = reference::fiber_product_serial(refined.ppp, id2.f); });
    double t_fp_parallel = timed([&] { fp_parallel = fiber_product(refined.ppp, id2.f); });
    bool fp_agree = fp_serial.complex->same_as(*fp_parallel.complex);
    std::printf("fiber product over the torus (%zu simplices): pair scan %.3fs, bucketed openmp %.3fs, agree %s\n",
                fp_parallel.complex->size(), t_fp_serial, t_fp_parallel,
                fp_agree ? "yes" : "NO");
    return agree && fp_agree ? 0 : 1;
}
