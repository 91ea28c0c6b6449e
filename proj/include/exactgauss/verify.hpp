#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace exactgauss {

// One prediction/measurement pair. Rows flagged warn_only report but never
// fail the run (used for the empirical bit-count band).
struct VerifyRecord {
    std::string name;
    double predicted = 0;
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
    bool warn_only = false;
};

// Monte Carlo reproduction of the analytic cost model, one suite per area.
// Deterministic given (n, seed, digit_size); n >= 1e5 keeps the stated
// tolerances meaningful.
std::vector<VerifyRecord> verify_bernoulli(std::uint64_t n, std::uint64_t seed,
                                           unsigned digit_size = 8);
std::vector<VerifyRecord> verify_dgauss(std::uint64_t n, std::uint64_t seed,
                                        unsigned digit_size = 8);
std::vector<VerifyRecord> verify_normal(std::uint64_t n, std::uint64_t seed,
                                        unsigned digit_size = 8);
std::vector<VerifyRecord> verify_all(std::uint64_t n, std::uint64_t seed,
                                     unsigned digit_size = 8);

// Aligned table with one row per record; returns false if any non-warn row
// failed.
bool print_verify_table(std::ostream& out, const std::vector<VerifyRecord>& records,
                        std::uint64_t n, std::uint64_t seed);

} // namespace exactgauss
