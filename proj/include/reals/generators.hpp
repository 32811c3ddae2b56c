#pragma once

// Seeded generators for reals and Cauchy families with exactly known
// values.  Every family here carries its exact member-value function and
// its exact limit, so law drivers can instantiate hypotheses with true
// rational data instead of trusting the kernel they are testing.

#include "reals/arith.hpp"
#include "reals/rational.hpp"
#include "reals/real.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace reals {

struct KnownFamily {
    CauchyApproximation family;
    // exact value of family.at(eps), independent of the kernel
    std::function<Rational(const PositiveRational&)> member_value;
    Rational limit;
    Rational member_bound;  // |member values| <= member_bound
    std::string label;
};

struct KnownReal {
    Real value;
    Rational exact;
    std::string label;
};

// at(eps) = rat(q) for every eps.
KnownFamily constant_family(const Rational& q);

// at(eps) = rat(floor(q * 2^k) / 2^k) for the smallest k with 2^-k <= eps.
KnownFamily truncation_family(const Rational& q);

// at(eps) = rat(q + offset(eps)) with |offset(eps)| <= eps / 4, offset a
// pure hash of (tag, eps); members drift on both sides of the limit.
KnownFamily jitter_family(const Rational& q, std::uint64_t tag);

// Partial sums ratio + ratio^2 + ... + ratio^n, cut off once the exact
// tail bound drops under eps.  Limit ratio / (1 - ratio).  |ratio| < 1.
KnownFamily geometric_family(const Rational& ratio);

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    long integer(long lo, long hi);  // inclusive
    Rational rational(long max_num = 64, long max_den = 16);
    PositiveRational dyadic_eps(long min_exp = 0, long max_exp = 12);  // 2^-j
    PositiveRational precision();  // mixed dyadic and general shapes, <= 2

    // bounded: |limit| <= 3/4 (and |exact| <= 3/4 for real()), so sums of
    // two stay well inside a [-2, 2] window
    KnownFamily family(bool bounded = false);
    KnownReal real(unsigned depth, bool bounded = false);

private:
    std::mt19937_64 rng_;
};

}  // namespace reals
