#pragma once

#include "cobord/omega.hpp"

#include <vector>

namespace cobord {

struct SweepOptions {
    std::uint32_t max_m = 3;
    std::uint32_t max_d = 3;
    std::uint32_t max_mult = 2;
    unsigned jobs = 0;  // 0: use hardware concurrency
};

// Every frame with at most max_m components and ambient dimension at
// most max_d, one per downward-closed face collection.
std::vector<SncConfig> enumerate_configs(std::uint32_t max_m, std::uint32_t max_d);

// FGL axioms and the series-engine identities behind them.
std::vector<Report> axiom_suite(std::uint32_t trunc);

// The identity sweep: divisor-class and intersection identities over
// all small frames, every side cross-checked against the brute-force
// expander. One summary report per (config, identity).
std::vector<Report> identity_sweep(const SweepOptions& opt = {});

// Predicate contracts: good position implies admissibility, the
// subdivisor bound for passing prefix intersections, and monotonicity
// of good position under support shrinking.
std::vector<Report> contract_sweep(const SweepOptions& opt = {});

// Component-splitting checks: coarse-transported versus fine divisor
// classes on a fixed catalogue of configurations.
std::vector<Report> split_suite();

// Randomized operator-algebra properties: Chern commutation,
// nilpotence beyond the ambient dimension, linearity of the
// intersection map and its commutation with Chern operators.
std::vector<Report> property_suite(std::uint32_t classes_per_family, std::uint64_t seed = 1);

}  // namespace cobord
