#include "reals/arith.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace reals {

Real operator+(const Real& u, const Real& v) {
    const Provenance& pu = u.provenance();
    const Provenance& pv = v.provenance();
    if (pu.kind == ProvKind::Rational && pv.kind == ProvKind::Rational)
        return rat(*pu.value + *pv.value);
    return Real::derived("add", {u, v}, [u, v](const PositiveRational& eps) {
        PositiveRational half = eps.half();
        return u.approximate(half) + v.approximate(half);
    });
}

Real operator-(const Real& u) {
    const Provenance& pu = u.provenance();
    if (pu.kind == ProvKind::Rational) return rat(-*pu.value);
    return Real::derived("neg", {u}, [u](const PositiveRational& eps) {
        return -u.approximate(eps);
    });
}

Real operator-(const Real& u, const Real& v) { return u + (-v); }

Real abs(const Real& u) {
    const Provenance& pu = u.provenance();
    if (pu.kind == ProvKind::Rational) return rat(abs(*pu.value));
    return Real::derived("abs", {u}, [u](const PositiveRational& eps) {
        return abs(u.approximate(eps));
    });
}

Real midpoint(const Real& u, const Real& v) {
    const Provenance& pu = u.provenance();
    const Provenance& pv = v.provenance();
    if (pu.kind == ProvKind::Rational && pv.kind == ProvKind::Rational)
        return rat((*pu.value + *pv.value) / 2);
    // (a + b)/2 averages the two errors, so the same eps serves both sides
    return Real::derived("midpoint", {u, v}, [u, v](const PositiveRational& eps) {
        return (u.approximate(eps) + v.approximate(eps)) / 2;
    });
}

OrderVerdict lt_q(const Rational& q, const Real& u, int budget) {
    if (budget < 1) throw std::invalid_argument("lt_q: budget must be >= 1");
    PositiveRational delta = PositiveRational::pow2(-1);
    for (int i = 0; i < budget; ++i) {
        Rational a = u.approximate(delta);
        if (a - delta.value() > q) return OrderVerdict::Holds;
        if (a + delta.value() < q) return OrderVerdict::Fails;
        delta = delta.half();
    }
    return OrderVerdict::Undecided;
}

OrderVerdict lt_q_upper(const Real& u, const Rational& r, int budget) {
    if (budget < 1) throw std::invalid_argument("lt_q_upper: budget must be >= 1");
    PositiveRational delta = PositiveRational::pow2(-1);
    for (int i = 0; i < budget; ++i) {
        Rational a = u.approximate(delta);
        if (a + delta.value() < r) return OrderVerdict::Holds;
        if (a - delta.value() > r) return OrderVerdict::Fails;
        delta = delta.half();
    }
    return OrderVerdict::Undecided;
}

OrderVerdict lt_r(const Real& u, const Real& v, int budget) {
    return lt_q(Rational(0), v - u, budget);
}

Side located(const Rational& q, const Rational& r, const Real& u,
             std::optional<PositiveRational> probe) {
    if (!(q < r)) throw std::invalid_argument("located: requires q < r");
    PositiveRational delta = probe ? *probe : PositiveRational((r - q) / 4);
    // Right-soundness (u < r) needs q + 2*delta < r
    if (!(delta.value() * 4 <= r - q))
        throw std::invalid_argument("located: probe must be <= (r - q) / 4");
    Rational a = u.approximate(delta);
    return a - delta.value() > q ? Side::Left : Side::Right;
}

Bounds rational_bounds(const Real& u, unsigned n) {
    Rational a1 = u.approximate(PositiveRational::one());
    Rational lo = a1 - 2;  // u lies in [a1 - 1, a1 + 1], one cell of margin each side
    Rational step = Rational::pow2(-static_cast<long>(n) - 2);
    Int cells = Int(1) << (n + 4);  // 4 / step

    auto point = [&](const Int& i) { return lo + step * Rational(i); };
    PositiveRational probe = PositiveRational(step / 4);
    auto right_at = [&](const Int& i) {
        return located(point(i), point(i + 1), u, probe) == Side::Right;
    };

    // Every cell shares one probe, hence one memoized approximant, so
    // right_at is monotone in i and the first Right cell is found by
    // bisection.  The boundary is re-verified directly below.
    if (!right_at(cells - 1)) return {point(cells - 1), point(cells)};

    Int lo_i = 0, hi_i = cells - 1;
    while (lo_i < hi_i) {
        Int mid = (lo_i + hi_i) / 2;
        if (right_at(mid))
            hi_i = mid;
        else
            lo_i = mid + 1;
    }
    if (!right_at(lo_i) || (lo_i > 0 && right_at(lo_i - 1)))
        throw std::logic_error("rational_bounds: located scan not monotone");

    if (lo_i == 0) return {point(0), point(1)};
    return {point(lo_i - 1), point(lo_i + 1)};
}

CheckReport check_lim_plus_const(const CauchyApproximation& x, const Real& u,
                                 unsigned k, int budget) {
    CauchyApproximation shifted(
        [x, u](const PositiveRational& eps) { return x.at(eps) + u; });
    EqVerdict v = eq_check(lim(shifted), lim(x) + u, k, budget);
    CheckReport rep;
    rep.add("lim-plus-const", v.consistent,
            (v.consistent ? "consistent-to " : "refuted-at ") + v.epsilon.to_string());
    return rep;
}

namespace {

// Memoizes a Real-valued sequence so tower rebuilds share members (and
// their approximant caches).
struct SeqCache {
    std::function<Real(unsigned)> f;
    std::mutex mu;
    std::map<unsigned, Real> cache;

    Real get(unsigned i) {
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = cache.find(i);
            if (it != cache.end()) return it->second;
        }
        Real r = f(i);
        std::lock_guard<std::mutex> lk(mu);
        return cache.emplace(i, std::move(r)).first->second;
    }
};

Real max_const(const Real& u, const Rational& c) {
    // max(u, c) = (u + c + |u - c|) / 2
    return midpoint(u + rat(c), abs(u - rat(c)));
}

Real min_const(const Real& u, const Rational& c) {
    // min(u, c) = (u + c - |u - c|) / 2
    return midpoint(u + rat(c), -abs(u - rat(c)));
}

Real clamp_sym(const Real& u, const Rational& c) {
    return min_const(max_const(u, -c), c);
}

}  // namespace

Real big_midpoint(std::function<Real(unsigned)> seq, const PositiveRational& bound) {
    if (!seq) throw std::invalid_argument("big_midpoint: empty sequence");
    auto cache = std::make_shared<SeqCache>();
    cache->f = std::move(seq);
    Rational b = bound.value();
    CauchyApproximation towers([cache, b](const PositiveRational& eps) {
        // smallest k with b * 2^-k < eps/2: truncating the tower after k
        // terms moves the value by at most b * 2^-k
        unsigned k = 0;
        Rational tail = b;
        Rational target = eps.value() / 2;
        while (!(tail < target)) {
            tail /= 2;
            ++k;
        }
        Real acc = rat(Rational(0));
        for (unsigned i = k; i-- > 0;) acc = midpoint(cache->get(i), acc);
        return acc;
    });
    return lim(towers);
}

CheckReport check_lim_via_midpoint(const CauchyApproximation& x,
                                   const PositiveRational& bound, unsigned k,
                                   int budget) {
    // Members y_i = x.at(2^-i).  The tower sequence
    //   s_0 = 2 y_1,   s_i = 2^{i+1} (y_{i+1} - y_i)  for i >= 1
    // telescopes: the k-term partial tower equals y_k, so the full tower
    // is lim(x).  Cauchyness bounds |s_i| <= 3 for i >= 1 and
    // |s_0| <= 2|y_1|; clamping to `big` keeps the bound hard even on
    // junk input without moving any in-range value.
    auto ys = std::make_shared<SeqCache>();
    CauchyApproximation xc = x;
    ys->f = [xc](unsigned i) { return xc.at(PositiveRational::pow2(-static_cast<long>(i))); };
    Rational big = std::max(bound.value() * 2 + 1, Rational(3));

    auto seq = [ys, big](unsigned i) -> Real {
        if (i == 0) {
            Real y1 = ys->get(1);
            return clamp_sym(y1 + y1, big);
        }
        Real diff = ys->get(i + 1) - ys->get(i);
        for (unsigned j = 0; j <= i; ++j) diff = diff + diff;
        return clamp_sym(diff, big);
    };

    Real rebuilt = big_midpoint(seq, PositiveRational(big));
    EqVerdict v = eq_check(rebuilt, lim(x), k, budget);
    CheckReport rep;
    rep.add("lim-via-midpoint", v.consistent,
            (v.consistent ? "consistent-to " : "refuted-at ") + v.epsilon.to_string());
    return rep;
}

Real dyadic_scale(const Real& u, const Rational& c) {
    if (!c.is_dyadic()) throw std::domain_error("dyadic_scale: scalar must be dyadic");
    if (abs(c) > Rational(1)) throw std::domain_error("dyadic_scale: |scalar| must be <= 1");
    if (c.is_zero()) return rat(Rational(0));

    // |c| = n / 2^m reduced; each set bit j of n contributes u * 2^(j-m),
    // built as (m - j)-fold halving
    Int n = c.numerator() < 0 ? Int(-c.numerator()) : c.numerator();
    unsigned m = c.denominator() == 1 ? 0u : boost::multiprecision::msb(c.denominator());
    std::optional<Real> acc;
    for (unsigned j = 0; j <= boost::multiprecision::msb(n); ++j) {
        if (!boost::multiprecision::bit_test(n, j)) continue;
        Real term = u;
        for (unsigned h = 0; h < m - j; ++h) term = midpoint(term, rat(Rational(0)));
        acc = acc ? *acc + term : term;
    }
    return c.is_negative() ? -*acc : *acc;
}

IntervalHom::IntervalHom(Real a, Real b)
    : a_(std::move(a)),
      b_(std::move(b)),
      mid_(midpoint(a_, b_)),
      span_(b_ - a_) {}

Real IntervalHom::operator()(const Rational& t) const {
    if (!t.is_dyadic()) throw std::domain_error("IntervalHom: argument must be dyadic");
    if (abs(t) > Rational(1)) throw std::domain_error("IntervalHom: argument outside [-1, 1]");
    // h(t) = midpoint(a, b) + (t/2)(b - a); endpoints land exactly on a, b
    return mid_ + dyadic_scale(span_, t / 2);
}

}  // namespace reals
