#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "exactgauss/normal.hpp"

namespace exactgauss {

struct BenchRecord {
    std::string algorithm;
    unsigned bits = 0;
    std::uint64_t n = 0;
    double samples_per_second = 0;
    double mean_deviates = 0;
    double mean_bits = 0;
    double mean_attempts = 0;
    std::uint64_t seed = 0;
};

// Times n samples per (algorithm, digit size), each finalized to
// `precision` fraction bits; reports the median of `reps` repetitions.
// The per-sample work is deterministic given the seed, so the median mostly
// cancels scheduling noise.
std::vector<BenchRecord> run_bench(const std::vector<NormalAlgorithm>& algorithms,
                                   const std::vector<unsigned>& digit_sizes, std::uint64_t n,
                                   std::uint64_t seed, unsigned reps = 5,
                                   unsigned precision = 32);

std::string bench_algorithm_name(NormalAlgorithm alg);

void print_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace exactgauss
