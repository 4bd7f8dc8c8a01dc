// Timing harness for the two parallel kernels: orbit-matrix assembly and the
// spectral table scan.  Run with no arguments; prints serial vs parallel
// wall times and the speedup.

#include <chrono>
#include <cstdio>

#include "kht/oracle/isotypic.hpp"
#include "kht/table.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        const double t = seconds(t0, t1);
        if (t < best) best = t;
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

}  // namespace

int main() {
    using namespace kht;
    using namespace kht::oracle;

    // Kernel 1: orbit-matrix assembly (the dominant oracle cost).
    {
        const DomainSpec spec = make_type_iii(4);
        const Signature s({3, 1});
        const GradeBasis gb = GradeBasis::make(spec.dim, s.weight());
        const int samples = 2 * gb.size();
        const SeedPair seed{7, 7};
        Eigen::MatrixXcd ref, par;
        const double ts = time_best_of(3, [&] {
            ref = orbit_columns(spec, s, gb, samples, seed, Execution::Serial);
        });
        const double tp = time_best_of(3, [&] {
            par = orbit_columns(spec, s, gb, samples, seed, Execution::Parallel);
        });
        const double dev = (ref - par).cwiseAbs().maxCoeff();
        report("orbit assembly", ts, tp);
        std::printf("%-24s max serial/parallel deviation %.3e\n", "", dev);
    }

    // Kernel 2: closed-form table scan.
    {
        const DomainSpec spec = make_type_i(6, 6);
        std::vector<TableRow> ref, par;
        // Fresh sequence per run so the weight memo does not tilt the timing.
        const double ts = time_best_of(3, [&] {
            ref = spectral_table(WeightSequence::bergman(spec, Rational(9)), 24,
                                 Execution::Serial);
        });
        const double tp = time_best_of(3, [&] {
            par = spectral_table(WeightSequence::bergman(spec, Rational(9)), 24,
                                 Execution::Parallel);
        });
        bool same = ref.size() == par.size();
        for (std::size_t i = 0; same && i < ref.size(); ++i)
            same = ref[i].s == par[i].s && ref[i].tau == par[i].tau &&
                   ref[i].delta.value == par[i].delta.value;
        report("table scan", ts, tp);
        std::printf("%-24s rows %zu, serial == parallel: %s\n", "", ref.size(),
                    same ? "yes" : "NO");
    }
    return 0;
}
