// bench_kernels.cpp - serial vs. parallel timings for the three hot kernels:
// the rotation-grid search, sample verification, and region rasterization.
#include <chrono>
#include <cstdio>

#include "pugs/findpugs.hpp"
#include "pugs/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double seconds(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name,
                serial, parallel, parallel > 0.0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    using pugs::ExecMode;

    pugs::PrototypeSolution serial_sol, parallel_sol;
    const double t_search_serial = seconds(
        [&] { serial_sol = pugs::find_pugs(14, 1.0, true, ExecMode::kSerial); });
    const double t_search_parallel = seconds(
        [&] { parallel_sol = pugs::find_pugs(14, 1.0, true, ExecMode::kParallel); });
    report("count search T=14", t_search_serial, t_search_parallel);
    if (serial_sol.counts != parallel_sol.counts)
        std::printf("MISMATCH: serial and parallel searches disagree\n");

    const double t_verify_serial = seconds([&] {
        (void)pugs::verify_separation(serial_sol, 20000, ExecMode::kSerial);
    });
    const double t_verify_parallel = seconds([&] {
        (void)pugs::verify_separation(serial_sol, 20000, ExecMode::kParallel);
    });
    report("verify 20k/circle", t_verify_serial, t_verify_parallel);

    pugs::RasterGrid grid_serial, grid_parallel;
    const double extent = pugs::default_extent(serial_sol);
    const double t_raster_serial = seconds([&] {
        grid_serial = pugs::rasterize_regions(serial_sol, 1536, 1536, extent,
                                              ExecMode::kSerial);
    });
    const double t_raster_parallel = seconds([&] {
        grid_parallel = pugs::rasterize_regions(serial_sol, 1536, 1536, extent,
                                                ExecMode::kParallel);
    });
    report("raster 1536x1536", t_raster_serial, t_raster_parallel);
    if (grid_serial.labels != grid_parallel.labels)
        std::printf("MISMATCH: serial and parallel rasters disagree\n");

    return 0;
}
