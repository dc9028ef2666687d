// Timing comparison of the serial reference kernels against the OpenMP path:
// state-vector phase kernels at large register sizes, diagonal energy tables,
// and the Monte Carlo estimation loop.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcs/estimator.hpp"
#include "qcs/hamiltonian.hpp"
#include "qcs/state_vector.hpp"
#include "qcs/states.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <class F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = clock_type::now();
        f();
        const double elapsed = seconds_since(start);
        if (elapsed < best) best = elapsed;
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-34s %10.4f ms %10.4f ms %8.2fx\n", name, serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int n = 20;
        qcs::StateVector state(n);
        const double serial = time_best_of(3, [&] {
            qcs::kernels::phase_rotation_inplace(state, 3, 0.123, qcs::Exec::serial);
        });
        const double parallel = time_best_of(3, [&] {
            qcs::kernels::phase_rotation_inplace(state, 3, 0.123, qcs::Exec::parallel);
        });
        report("phase rotation, n=20", serial, parallel);
    }
    {
        const int n = 20;
        qcs::StateVector state(n);
        const double serial = time_best_of(
            3, [&] { qcs::kernels::ry_pi_inplace(state, 5, qcs::Exec::serial); });
        const double parallel = time_best_of(
            3, [&] { qcs::kernels::ry_pi_inplace(state, 5, qcs::Exec::parallel); });
        report("ry(pi), n=20", serial, parallel);
    }
    {
        const int n = 20;
        const qcs::StateVector state = qcs::prepare_dicke(n, n / 2);
        volatile double sink = 0.0;
        const double serial = time_best_of(
            3, [&] { sink = qcs::kernels::pos_probability(state, 2, qcs::Exec::serial); });
        const double parallel = time_best_of(
            3, [&] { sink = qcs::kernels::pos_probability(state, 2, qcs::Exec::parallel); });
        (void)sink;
        report("dual-basis probability, n=20", serial, parallel);
    }
    {
        qcs::MoleculeSpec molecule = qcs::MoleculeSpec::zero(14);
        for (int q = 0; q < molecule.n; ++q) {
            molecule.omega[q] = 100.0 * (q + 1);
            for (int r = q + 1; r < molecule.n; ++r) {
                molecule.j_coupling[q][r] = molecule.j_coupling[r][q] = 1.5 * (q + r);
            }
        }
        std::vector<double> table;
        const double serial = time_best_of(
            3, [&] { table = qcs::internal_energy_table(molecule, qcs::Exec::serial); });
        const double parallel = time_best_of(
            3, [&] { table = qcs::internal_energy_table(molecule, qcs::Exec::parallel); });
        report("internal energy table, n=14", serial, parallel);
    }
    {
        const auto kind = qcs::EntangledStateKind::dicke(4, 2);
        const double omega = 2.0 * 3.141592653589793 * 250.0;
        const double delta = 0.001;
        const double serial = time_best_of(2, [&] {
            qcs::monte_carlo_std(kind, omega, delta, 4096, 100, 7, qcs::Exec::serial);
        });
        const double parallel = time_best_of(2, [&] {
            qcs::monte_carlo_std(kind, omega, delta, 4096, 100, 7, qcs::Exec::parallel);
        });
        report("monte carlo, 4096 shots x 100", serial, parallel);
    }
    return 0;
}
