#include "reals/generators.hpp"

#include <cstdlib>
#include <stdexcept>

namespace reals {

namespace {

// smallest k >= 0 with 2^-k <= eps
unsigned dyadic_level(const PositiveRational& eps) {
    unsigned k = 0;
    Rational p = Rational(1);
    while (p > eps.value()) {
        p = p / 2;
        ++k;
        if (k > 100000) throw std::logic_error("dyadic_level: runaway precision");
    }
    return k;
}

std::uint64_t fnv1a(std::uint64_t tag, const std::string& text) {
    std::uint64_t h = 1469598103934665603ull ^ tag;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

KnownFamily constant_family(const Rational& q) {
    auto value = [q](const PositiveRational&) { return q; };
    return {CauchyApproximation(
                [q](const PositiveRational&) { return rat(q); }),
            value, q, abs(q) + 1, "const(" + q.to_string() + ")"};
}

KnownFamily truncation_family(const Rational& q) {
    auto value = [q](const PositiveRational& eps) {
        unsigned k = dyadic_level(eps);
        Rational scale = Rational::pow2(static_cast<long>(k));
        return Rational((q * scale).floor()) / scale;
    };
    return {CauchyApproximation(
                [value](const PositiveRational& eps) { return rat(value(eps)); }),
            value, q, abs(q) + 1, "trunc(" + q.to_string() + ")"};
}

KnownFamily jitter_family(const Rational& q, std::uint64_t tag) {
    auto value = [q, tag](const PositiveRational& eps) {
        std::uint64_t h = fnv1a(tag, eps.value().to_string());
        long steps = static_cast<long>(h % 33) - 16;  // in [-16, 16]
        return q + eps.value() * Rational(Int(steps)) / 64;
    };
    return {CauchyApproximation(
                [value](const PositiveRational& eps) { return rat(value(eps)); }),
            value, q, abs(q) + 1, "jitter(" + q.to_string() + ")"};
}

KnownFamily geometric_family(const Rational& ratio) {
    if (!(abs(ratio) < Rational(1)))
        throw std::domain_error("geometric_family: |ratio| must be < 1");
    Rational limit = ratio / (Rational(1) - ratio);
    auto value = [ratio](const PositiveRational& eps) {
        // sum ratio^1..ratio^n with tail |ratio|^(n+1) / (1 - |ratio|) <= eps
        Rational a = abs(ratio);
        Rational tail = a * a / (Rational(1) - a);
        Rational term = ratio;
        Rational sum = ratio;
        while (tail > eps.value()) {
            term *= ratio;
            sum += term;
            tail *= a;
        }
        return sum;
    };
    return {CauchyApproximation(
                [value](const PositiveRational& eps) { return rat(value(eps)); }),
            value, limit, abs(limit) + 1, "geo(" + ratio.to_string() + ")"};
}

long Sampler::integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Sampler::rational(long max_num, long max_den) {
    return Rational(Int(integer(-max_num, max_num)), Int(integer(1, max_den)));
}

PositiveRational Sampler::dyadic_eps(long min_exp, long max_exp) {
    return PositiveRational::pow2(-integer(min_exp, max_exp));
}

PositiveRational Sampler::precision() {
    switch (integer(0, 2)) {
        case 0:
            return dyadic_eps(0, 16);
        case 1:
            return PositiveRational(Rational(1, integer(1, 1000)));
        default:
            return PositiveRational(Rational(integer(1, 5), integer(1, 9)) *
                                    Rational::pow2(-integer(0, 10)));
    }
}

KnownFamily Sampler::family(bool bounded) {
    long cap = bounded ? 2 : 8;
    Rational q(Int(integer(-cap, cap)), Int(integer(1, bounded ? 4 : 8)));
    if (bounded && abs(q) > Rational(1, 2)) q = q / 2;
    switch (integer(0, 3)) {
        case 0:
            return constant_family(q);
        case 1:
            return truncation_family(q);
        case 2:
            return jitter_family(q, raw());
        default: {
            long num = integer(-2, bounded ? 1 : 2);
            if (num == 0) num = 1;
            long den = integer(std::labs(num) * 2 + 1, 8);
            return geometric_family(Rational(Int(num), Int(den)));
        }
    }
}

KnownReal Sampler::real(unsigned depth, bool bounded) {
    if (depth == 0) {
        if (integer(0, 1) == 0) {
            Rational q = bounded ? rational(3, 4) / 4 : rational();
            return {rat(q), q, "rat(" + q.to_string() + ")"};
        }
        KnownFamily f = family(bounded);
        return {lim(f.family), f.limit, "lim(" + f.label + ")"};
    }
    KnownReal a = real(depth - 1, bounded);
    switch (integer(0, 3)) {
        case 0: {
            KnownReal b = real(depth - 1, bounded);
            Rational sum = a.exact + b.exact;
            if (bounded && abs(sum) > Rational(3, 4))
                return {midpoint(a.value, b.value), (a.exact + b.exact) / 2,
                        "mid(" + a.label + "," + b.label + ")"};
            return {a.value + b.value, sum, "add(" + a.label + "," + b.label + ")"};
        }
        case 1:
            return {-a.value, -a.exact, "neg(" + a.label + ")"};
        case 2:
            return {abs(a.value), abs(a.exact), "abs(" + a.label + ")"};
        default: {
            KnownReal b = real(depth - 1, bounded);
            return {midpoint(a.value, b.value), (a.exact + b.exact) / 2,
                    "mid(" + a.label + "," + b.label + ")"};
        }
    }
}

}  // namespace reals
