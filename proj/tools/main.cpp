#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exactgauss/bench.hpp"
#include "exactgauss/cost_oracle.hpp"
#include "exactgauss/discrete_gaussian.hpp"
#include "exactgauss/enumeration.hpp"
#include "exactgauss/normal.hpp"
#include "exactgauss/stats.hpp"
#include "exactgauss/verify.hpp"

namespace {

using namespace exactgauss;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct SampleOptions {
    std::string distribution;
    std::string algorithm = "improved";
    std::string variant = "b";
    std::string sigma = "1/1";
    std::string format = "csv";
    std::uint64_t n = 10;
    std::uint64_t seed = 1;
    unsigned bits = 16;
    unsigned precision = 53;
};

NormalAlgorithm normal_algorithm(const SampleOptions& opt) {
    if (opt.algorithm == "karney") return NormalAlgorithm::karney;
    return opt.variant == "a" ? NormalAlgorithm::improved_a : NormalAlgorithm::improved_b;
}

int cmd_sample(const SampleOptions& opt) {
    RandomSource src(opt.seed, opt.bits);
    bool jsonl = opt.format == "jsonl";
    if (opt.distribution == "normal") {
        NormalAlgorithm alg = normal_algorithm(opt);
        if (!jsonl) std::cout << "sign,k,frac_bits_hex,precision,value\n";
        for (std::uint64_t i = 0; i < opt.n; ++i) {
            NormalSampleStats s = sample_normal(alg, src);
            Dyadic d = finalize(s.sample, opt.precision);
            if (jsonl) {
                nlohmann::json j = {{"sign", d.sign},
                                    {"k", s.sample.k},
                                    {"frac_bits_hex", d.frac_hex()},
                                    {"precision", opt.precision},
                                    {"value", d.to_decimal_string()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << d.sign << ',' << s.sample.k << ',' << d.frac_hex() << ','
                          << opt.precision << ',' << d.to_decimal_string() << "\n";
            }
        }
    } else {
        SigmaParam p = SigmaParam::make(Rational::parse(opt.sigma));
        DGaussVariant variant =
            opt.variant == "karney" ? DGaussVariant::karney : DGaussVariant::improved;
        if (!jsonl) std::cout << "k\n";
        for (std::uint64_t i = 0; i < opt.n; ++i) {
            DiscreteSampleStats s = variant == DGaussVariant::improved
                                        ? sample_dplus_improved(p, src)
                                        : sample_dplus_karney(p, src);
            if (jsonl)
                std::cout << nlohmann::json{{"k", s.value}}.dump() << "\n";
            else
                std::cout << s.value << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t n, std::uint64_t seed, unsigned bits) {
    std::vector<VerifyRecord> rows;
    if (suite == "bernoulli")
        rows = verify_bernoulli(n, seed, bits);
    else if (suite == "dgauss")
        rows = verify_dgauss(n, seed, bits);
    else if (suite == "normal")
        rows = verify_normal(n, seed, bits);
    else
        rows = verify_all(n, seed, bits);
    bool ok = print_verify_table(std::cout, rows, n, seed);
    return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_oracle(bool list, const std::string& name) {
    std::vector<oracle::OracleValue> values = oracle::all_oracle_values();
    bool found = false;
    for (const auto& v : values) {
        if (!list && v.name != name) continue;
        found = true;
        std::cout << v.name << " = " << v.value << "  [" << v.method << "]";
        if (v.expected) std::cout << "  target " << *v.expected;
        std::cout << "\n";
    }
    if (!list && !found) {
        std::cerr << "unknown oracle value: " << name << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& fixture, unsigned depth) {
    EnumerationResult r;
    std::map<int, std::pair<std::string, double>> outcomes;
    if (fixture == "bern_exp_half") {
        r = enumerate_bern_exp_half(depth);
        outcomes = {{1, {"true", 0.60653066}}, {0, {"false", 0.39346934}}};
    } else {
        r = enumerate_selector_c4(depth);
        outcomes = {{-1, {"-1", 0.25}}, {0, {"0", 0.25}}, {1, {"+1", 0.5}}};
    }
    std::cout << "fixture " << fixture << " depth " << depth << " undecided " << r.undecided
              << "/2^" << depth << " (gap " << r.gap() << ")\n";
    for (const auto& [code, info] : outcomes) {
        std::cout << "  outcome " << info.first << ": [" << r.low(code) << ", "
                  << r.high(code) << "]  target " << info.second << "\n";
    }
    return kExitOk;
}

int cmd_stat(const std::string& test, const std::string& who, const std::string& sigma,
             std::uint64_t n, unsigned precision, std::uint64_t seed, unsigned bits) {
    stats::GofResult r;
    if (test == "chi2") {
        SigmaParam p = SigmaParam::make(Rational::parse(sigma));
        DGaussVariant variant =
            who == "karney" ? DGaussVariant::karney : DGaussVariant::improved;
        r = stats::chi2_dgauss(variant, p, n, seed, bits);
        std::cout << "chi2 statistic " << r.statistic << " threshold " << r.threshold;
    } else {
        NormalAlgorithm alg = NormalAlgorithm::improved_b;
        if (who == "karney") alg = NormalAlgorithm::karney;
        if (who == "improved-a") alg = NormalAlgorithm::improved_a;
        r = stats::ks_normal(alg, n, precision, seed, bits);
        std::cout << "ks statistic " << r.statistic << " critical " << r.threshold;
    }
    std::cout << (r.pass ? "  PASS" : "  FAIL") << "\n";
    return r.pass ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact normal / discrete Gaussian sampling with randomness accounting"};
    app.require_subcommand(1);

    SampleOptions sopt;
    CLI::App* sample = app.add_subcommand("sample", "emit finalized samples");
    sample->add_option("distribution", sopt.distribution, "normal or dgauss")
        ->required()
        ->check(CLI::IsMember({"normal", "dgauss"}));
    sample->add_option("--algorithm", sopt.algorithm)->check(CLI::IsMember({"karney", "improved"}));
    sample->add_option("--variant", sopt.variant,
                       "a|b for normal, karney|improved for dgauss");
    sample->add_option("--sigma", sopt.sigma, "rational NUM/DEN (dgauss)");
    sample->add_option("--n", sopt.n)->check(CLI::PositiveNumber);
    sample->add_option("--seed", sopt.seed);
    sample->add_option("--bits", sopt.bits)->check(CLI::IsMember({1, 4, 8, 16}));
    sample->add_option("--precision", sopt.precision)->check(CLI::Range(1u, 4096u));
    sample->add_option("--format", sopt.format)->check(CLI::IsMember({"csv", "jsonl"}));

    std::string vsuite = "all";
    std::uint64_t vn = 1000000, vseed = 1;
    unsigned vbits = 8;
    CLI::App* verify = app.add_subcommand("verify", "Monte Carlo vs analytic cost model");
    verify->add_option("--suite", vsuite)
        ->check(CLI::IsMember({"bernoulli", "dgauss", "normal", "all"}));
    verify->add_option("--n", vn)->check(CLI::Range(std::uint64_t{100000}, std::uint64_t{1} << 40));
    verify->add_option("--seed", vseed);
    verify->add_option("--bits", vbits)->check(CLI::IsMember({1, 4, 8, 16}));

    std::vector<std::string> balgs = {"karney", "improved-a", "improved-b"};
    std::vector<unsigned> bbits = {1, 4, 8, 16};
    std::uint64_t bn = 200000, bseed = 1;
    unsigned breps = 5, bprec = 32;
    CLI::App* bench = app.add_subcommand("bench", "throughput per algorithm and digit size");
    bench->add_option("--algorithms", balgs)->delimiter(',');
    bench->add_option("--bits", bbits)->delimiter(',')->check(CLI::IsMember({1, 4, 8, 16}));
    bench->add_option("--n", bn)->check(CLI::PositiveNumber);
    bench->add_option("--seed", bseed);
    bench->add_option("--reps", breps)->check(CLI::PositiveNumber);
    bench->add_option("--precision", bprec)->check(CLI::Range(1u, 64u));

    bool olist = false;
    std::string oname;
    CLI::App* orc = app.add_subcommand("oracle", "analytic cost-model values");
    orc->add_flag("--list", olist);
    orc->add_option("name", oname);

    std::string efixture = "bern_exp_half";
    unsigned edepth = 20;
    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive bit-tree bounds");
    enumerate->add_option("--fixture", efixture)
        ->check(CLI::IsMember({"bern_exp_half", "selector_c4"}));
    enumerate->add_option("--depth", edepth)->check(CLI::Range(1u, 30u));

    std::string stest, swho = "improved", ssigma = "1/1";
    std::uint64_t stn = 1000000, stseed = 1;
    unsigned stprec = 53, stbits = 8;
    CLI::App* stat = app.add_subcommand("stat", "goodness-of-fit tests");
    stat->add_option("test", stest, "chi2 or ks")
        ->required()
        ->check(CLI::IsMember({"chi2", "ks"}));
    stat->add_option("--sampler", swho, "karney|improved (chi2), karney|improved-a|improved-b (ks)");
    stat->add_option("--sigma", ssigma);
    stat->add_option("--n", stn)->check(CLI::PositiveNumber);
    stat->add_option("--precision", stprec)->check(CLI::Range(1u, 64u));
    stat->add_option("--seed", stseed);
    stat->add_option("--bits", stbits)->check(CLI::IsMember({1, 4, 8, 16}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sample) return cmd_sample(sopt);
        if (*verify) return cmd_verify(vsuite, vn, vseed, vbits);
        if (*bench) {
            std::vector<NormalAlgorithm> algs;
            for (const auto& name : balgs) {
                if (name == "karney")
                    algs.push_back(NormalAlgorithm::karney);
                else if (name == "improved-a")
                    algs.push_back(NormalAlgorithm::improved_a);
                else if (name == "improved-b")
                    algs.push_back(NormalAlgorithm::improved_b);
                else
                    throw std::invalid_argument("unknown algorithm: " + name);
            }
            auto records = run_bench(algs, bbits, bn, bseed, breps, bprec);
            print_bench_csv(std::cout, records);
            return kExitOk;
        }
        if (*orc) {
            if (!olist && oname.empty()) {
                std::cerr << "oracle: need a name or --list\n";
                return kExitUsage;
            }
            return cmd_oracle(olist, oname);
        }
        if (*enumerate) return cmd_enumerate(efixture, edepth);
        if (*stat) return cmd_stat(stest, swho, ssigma, stn, stprec, stseed, stbits);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
