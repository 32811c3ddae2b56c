#pragma once

// The exact real kernel.
//
// A Real is a function: for every rational eps > 0, approximate(eps)
// returns a rational within eps of the represented value.  Any two
// approximants are therefore compatible:
//
//     |approximate(d) - approximate(e)| <= d + e
//
// That inequality is the whole correctness contract; every operation in
// the library preserves it and the checkers below sample it.  Reals are
// immutable; approximants are memoized per requested precision, so
// repeated queries at one precision cost one evaluation.

#include "reals/rational.hpp"
#include "reals/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reals {

class Real;

// An eps-indexed family of reals.  The library-wide convention is that a
// family is Cauchy: members at(d) and at(e) lie within d + e of each
// other.  That property is the caller's obligation; check_is_cauchy
// samples it after the fact.
class CauchyApproximation {
public:
    using AtFn = std::function<Real(const PositiveRational&)>;

    explicit CauchyApproximation(AtFn at);

    Real at(const PositiveRational& eps) const;

private:
    std::shared_ptr<const AtFn> at_;
};

enum class ProvKind { Rational, Limit, Derived };

// Where a Real came from.  Arithmetic uses this to short-circuit to
// exact rational results when every input is rational.
struct Provenance {
    ProvKind kind = ProvKind::Derived;
    std::optional<Rational> value;                      // ProvKind::Rational
    std::shared_ptr<const CauchyApproximation> family;  // ProvKind::Limit
    std::string op;                                     // ProvKind::Derived
    std::vector<Real> operands;                         // ProvKind::Derived
};

class Real {
public:
    using ApproxFn = std::function<Rational(const PositiveRational&)>;

    // Rational within eps of the value; memoized per eps.
    Rational approximate(const PositiveRational& eps) const;

    const Provenance& provenance() const;

    static Real from_rational(Rational q);
    static Real from_limit(CauchyApproximation x);
    static Real derived(std::string op, std::vector<Real> operands, ApproxFn approx);

private:
    struct Impl;
    explicit Real(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Embeds a rational exactly: approximate(eps) == q for every eps.
Real rat(Rational q);

// Limit of a Cauchy family: approximate(eps) = x.at(eps/2).approximate(eps/2).
// If x is Cauchy, lim(x) is within eps + theta of x.at(eps) for all theta.
Real lim(const CauchyApproximation& x);

// ---------------------------------------------------------------------------
// Closeness

enum class Closeness { ProvedClose, ProvedApart, Undecided };

struct ClosenessVerdict {
    Closeness outcome = Closeness::Undecided;
    // The probe delta at which the verdict was reached (the last probe
    // tried when Undecided).
    Rational witness_precision;

    bool proved_close() const { return outcome == Closeness::ProvedClose; }
    bool proved_apart() const { return outcome == Closeness::ProvedApart; }
    bool undecided() const { return outcome == Closeness::Undecided; }
};

// Semi-decision of |u - v| < eps by probing both sides at
// delta = eps/4, eps/8, ... for `budget` rounds.  Sound both ways:
// ProvedClose implies |u - v| < eps and ProvedApart implies
// |u - v| >= eps.  Values within ~2*delta of the threshold stay
// Undecided; equality is never provable.
ClosenessVerdict close(const Real& u, const Real& v, const PositiveRational& eps,
                       int budget);

struct EqVerdict {
    bool consistent = false;
    // RefutedAt epsilon when !consistent; the consistency level 2^-k
    // otherwise.
    Rational epsilon;
};

// Equality ladder: runs close at eps = 1, 1/2, ..., 2^-k and reports the
// first refutation.  consistent means "not refuted down to 2^-k", not a
// proof of equality.
EqVerdict eq_check(const Real& u, const Real& v, unsigned k, int budget = 64);

// ---------------------------------------------------------------------------
// Sampled checkers (report-valued, never throw on law failure)

using PrecisionPair = std::pair<PositiveRational, PositiveRational>;

// Samples the approximation contract of a single Real:
// |approximate(d) - approximate(e)| <= d + e + slack for each sampled pair.
CheckReport check_modulus(const Real& u, std::span<const PrecisionPair> samples,
                          const Rational& slack);

// Samples the Cauchy property of a family: close(x.at(d), x.at(e),
// d + e + slack, budget) must never be ProvedApart.
CheckReport check_is_cauchy(const CauchyApproximation& x,
                            std::span<const PrecisionPair> samples, int budget,
                            const Rational& slack);

// Samples the limit property: close(x.at(eps), lim(x), eps + theta + slack,
// budget) must never be ProvedApart, for sampled (eps, theta).
CheckReport check_limit_is_limit(const CauchyApproximation& x,
                                 std::span<const PrecisionPair> samples, int budget,
                                 const Rational& slack);

}  // namespace reals
