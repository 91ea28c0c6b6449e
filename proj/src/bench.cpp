#include "exactgauss/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "exactgauss/random_source.hpp"

namespace exactgauss {

std::string bench_algorithm_name(NormalAlgorithm alg) {
    switch (alg) {
        case NormalAlgorithm::karney: return "karney";
        case NormalAlgorithm::improved_a: return "improved-a";
        default: return "improved-b";
    }
}

namespace {

volatile double g_sink = 0; // keeps the finalized values from being optimized out

struct RunResult {
    double seconds = 0;
    Counters used;
    std::uint64_t attempts = 0;
};

RunResult run_once(NormalAlgorithm alg, unsigned bits, std::uint64_t n, std::uint64_t seed,
                   unsigned precision) {
    RandomSource src(seed, bits);
    double sink = 0;
    std::uint64_t attempts = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < n; ++i) {
        NormalSampleStats s = sample_normal(alg, src);
        attempts += s.attempts;
        sink += finalize(s.sample, precision).to_double();
    }
    auto stop = std::chrono::steady_clock::now();
    g_sink = sink;
    return {std::chrono::duration<double>(stop - start).count(), src.counters(), attempts};
}

} // namespace

std::vector<BenchRecord> run_bench(const std::vector<NormalAlgorithm>& algorithms,
                                   const std::vector<unsigned>& digit_sizes, std::uint64_t n,
                                   std::uint64_t seed, unsigned reps, unsigned precision) {
    std::vector<BenchRecord> records;
    for (NormalAlgorithm alg : algorithms) {
        for (unsigned bits : digit_sizes) {
            std::vector<double> times;
            RunResult last;
            for (unsigned r = 0; r < reps; ++r) {
                last = run_once(alg, bits, n, seed, precision);
                times.push_back(last.seconds);
            }
            std::sort(times.begin(), times.end());
            double median = times[times.size() / 2];
            double dn = static_cast<double>(n);
            records.push_back({bench_algorithm_name(alg), bits, n, dn / median,
                               static_cast<double>(last.used.deviates_created) / dn,
                               static_cast<double>(last.used.bits_drawn) / dn,
                               static_cast<double>(last.attempts) / dn, seed});
        }
    }
    return records;
}

void print_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "algorithm,bits,n,samples_per_second,mean_deviates,mean_bits,mean_attempts,seed\n";
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.bits << ',' << r.n << ',' << r.samples_per_second << ','
            << r.mean_deviates << ',' << r.mean_bits << ',' << r.mean_attempts << ',' << r.seed
            << "\n";
    }
}

} // namespace exactgauss
