#pragma once

// Arithmetic, order, and the midpoint algebra on exact reals.
//
// Order against rationals is semi-decidable: lt_q narrows until it can
// prove a strict inequality or runs out of budget.  located trades the
// possibility of "don't know" for a widened disjunction: given q < r it
// always answers, and the answer is sound (Left implies q < u, Right
// implies u < r), but between q and r either answer may come back.

#include "reals/rational.hpp"
#include "reals/real.hpp"
#include "reals/report.hpp"

#include <functional>
#include <optional>

namespace reals {

Real operator+(const Real& u, const Real& v);
Real operator-(const Real& u);
Real operator-(const Real& u, const Real& v);
Real abs(const Real& u);

// (u + v) / 2, exact on rationals.
Real midpoint(const Real& u, const Real& v);

enum class OrderVerdict { Holds, Fails, Undecided };

// Semi-decides q < u probing at delta = 1/2, 1/4, ... for budget rounds.
// Holds and Fails are sound; Undecided means the budget ran out (always
// the case when u equals q exactly).
OrderVerdict lt_q(const Rational& q, const Real& u, int budget);

// Semi-decides u < r.
OrderVerdict lt_q_upper(const Real& u, const Rational& r, int budget);

// Semi-decides u < v (via the sign of v - u).
OrderVerdict lt_r(const Real& u, const Real& v, int budget);

enum class Side { Left, Right };

// Total comparison against an open cover: requires q < r, probes once at
// delta = (r - q) / 4 (or the caller's finer probe) and answers
//   Left  => q < u        Right => u < r.
// Both can be true; which one comes back depends on the approximant.
Side located(const Rational& q, const Rational& r, const Real& u,
             std::optional<PositiveRational> probe = std::nullopt);

struct Bounds {
    Rational lower;
    Rational upper;
    Rational width() const { return upper - lower; }
};

// Rational bracket lower < u < upper with width < 2^-n, found by
// locating u on a dyadic grid around approximate(1).  The located
// predicate is monotone along the grid because every cell uses the same
// probe, so the boundary cell is found by bisection and re-verified
// directly.
Bounds rational_bounds(const Real& u, unsigned n);

// Shifts a family by a constant: members at(eps) + u.  Checks that
// lim of the shifted family agrees with lim(x) + u on the eq ladder
// down to 2^-k.
CheckReport check_lim_plus_const(const CauchyApproximation& x, const Real& u,
                                 unsigned k, int budget);

// Infinite midpoint tower M(s) = midpoint(s0, midpoint(s1, ...)) for a
// sequence bounded by |s_i| <= bound, realized as the limit of finite
// towers: the tail after k terms moves the value by less than
// bound * 2^-k.
Real big_midpoint(std::function<Real(unsigned)> seq, const PositiveRational& bound);

// Re-expresses lim(x) as a midpoint tower: t0 = 2 * x.at(1/2) and
// difference terms s_k = clamp(2^{k+1} (x.at(2^-(k+1)) - x.at(2^-k))),
// so the k-th partial tower telescopes back to x.at(2^-k).  Checks the
// rebuilt value against lim(x) down to 2^-k.  `bound` bounds |members|.
CheckReport check_lim_via_midpoint(const CauchyApproximation& x,
                                   const PositiveRational& bound, unsigned k,
                                   int budget);

// u * c for dyadic c with |c| <= 1, built purely from midpoint-with-zero
// halvings, negation, and addition.  Rejects non-dyadic or out-of-range c.
Real dyadic_scale(const Real& u, const Rational& c);

// The affine map [-1,1] -> [a,b] determined by the midpoint structure:
// h(-1) = a, h(1) = b, h(t) = midpoint(a,b) + (t/2)(b-a).  Only dyadic
// arguments are representable without full multiplication, so operator()
// rejects non-dyadic t and |t| > 1.
class IntervalHom {
public:
    IntervalHom(Real a, Real b);

    Real operator()(const Rational& t) const;

    const Real& endpoint_low() const { return a_; }
    const Real& endpoint_high() const { return b_; }

private:
    Real a_, b_, mid_, span_;
};

inline IntervalHom interval_hom(Real a, Real b) {
    return IntervalHom(std::move(a), std::move(b));
}

}  // namespace reals
