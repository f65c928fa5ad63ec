#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffhyper/check.hpp"
#include "ffhyper/ff.hpp"

namespace ffhyper {

enum class Suite {
    Floors,
    GammaLemmas,
    GfunProps,
    SumEven,
    SumOdd,
    Transform2G2,
    Counts,
    Roots,
    Specials,
    GaussComplex,
    GrossKoblitz,
};

const char* suite_name(Suite suite);
std::optional<Suite> parse_suite(const std::string& name);
const std::vector<Suite>& all_suites();

// Exhaustive over all (a, b) in (F_q^x)^2, a fixed-size sample, or (nullopt samples) the
// suite's default: exhaustive up to a q threshold, 50 samples above it.
struct Grid {
    bool exhaustive = false;
    std::optional<u64> samples;

    static Grid parse(const std::string& text);
    std::string str() const;
};

struct SuiteConfig {
    Suite suite = Suite::Floors;
    std::uint32_t p = 5;
    std::uint32_t r = 1;
    std::vector<int> degrees;  // empty selects the suite default
    int precision = 4;
    Grid grid;
    u64 seed = 1;
    int pi_precision = 12;
    double tolerance = 1e-8;
};

struct SkippedCase {
    std::vector<std::pair<std::string, ParamValue>> params;
    std::string reason;
};

struct Report {
    // header
    std::uint32_t p = 0, r = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> generator;
    int n_req = 0;
    int n_work = 0;
    std::string suite;
    u64 seed = 0;
    std::string grid;

    std::vector<CheckCase> cases;
    std::vector<SkippedCase> skipped;
    std::map<std::string, std::pair<u64, u64>> tallies;  // group -> (passed, failed)
    u64 passed = 0;
    u64 failed = 0;
    i64 wall_millis = 0;

    void add(const std::string& group, CheckCase c);
    void add_all(const std::string& group, std::vector<CheckCase> cs);
    void skip(std::vector<std::pair<std::string, ParamValue>> params, std::string reason);
    bool ok() const { return failed == 0; }

    std::string to_json(bool include_wall_time = true) const;
};

// The documented sampling generator: s <- s * 6364136223846793005 + 1442695040888963407 (mod 2^64),
// each draw is s >> 33.
class Lcg {
public:
    explicit Lcg(u64 seed) : state_(seed) {}
    u64 next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

private:
    u64 state_;
};

// (a, b) pairs of nonzero elements; the first `exhaustive_limit` q values use every pair.
std::vector<std::pair<FqElem, FqElem>> pair_grid(const FieldDesc& field, const Grid& grid, u64 seed, u64 exhaustive_limit);

Report run_suite(const SuiteConfig& config);

}  // namespace ffhyper
