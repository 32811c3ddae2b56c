#pragma once

// Seeded law suites aggregating the per-instance checkers over generated
// data.  Each suite returns one report line per law with instance counts
// in the witness field; a fixed seed reproduces a run exactly.

#include "reals/generators.hpp"
#include "reals/report.hpp"

#include <cstdint>

namespace reals {

struct SuiteConfig {
    std::uint64_t seed = 20260819;
    int instances = 200;
    int budget = 64;
    Rational slack = Rational::pow2(-20);
    unsigned ladder = 20;  // eq ladder runs down to 2^-ladder
};

// The four closeness laws relating rat and lim, instantiated with exact
// rational data; the concluded closeness must never be refuted.
CheckReport check_distance_laws(const SuiteConfig& cfg);

// Modulus contract of generated reals under rat/lim/add/neg/abs/midpoint.
CheckReport check_modulus_suite(const SuiteConfig& cfg);

// limit-is-limit sampling, limit uniqueness across two constructions,
// and the shift-by-a-constant law.
CheckReport check_limits(const SuiteConfig& cfg);

// Midpoint algebra: frozen towers, tower rebuilds of limits, interval
// map endpoint and midpoint-compatibility laws at dyadic arguments.
CheckReport check_midpoints(const SuiteConfig& cfg);

// Kernel arithmetic vs the finite cut oracle on a dyadic window.
CheckReport check_cut_agreement(const SuiteConfig& cfg);

// Exhaustive finite models: subtype poset laws, join/meet bounds,
// embedding triangle.
CheckReport check_finite_model_suite(const SuiteConfig& cfg);

}  // namespace reals
