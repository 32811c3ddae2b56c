#include "reals/real.hpp"

#include <sstream>
#include <stdexcept>

namespace reals {

CauchyApproximation::CauchyApproximation(AtFn at)
    : at_(std::make_shared<const AtFn>(std::move(at))) {
    if (!*at_) throw std::invalid_argument("CauchyApproximation: empty function");
}

Real CauchyApproximation::at(const PositiveRational& eps) const { return (*at_)(eps); }

struct Real::Impl {
    ApproxFn approx;
    Provenance prov;
    mutable std::mutex mu;
    mutable std::map<Rational, Rational> memo;
};

Rational Real::approximate(const PositiveRational& eps) const {
    const Rational& key = eps.value();
    {
        std::lock_guard<std::mutex> lk(impl_->mu);
        auto it = impl_->memo.find(key);
        if (it != impl_->memo.end()) return it->second;
    }
    // Computed outside the lock: approx may recurse into other Reals
    // (or this one at another precision) without holding anything.
    Rational a = impl_->approx(eps);
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->memo.emplace(key, std::move(a)).first->second;
}

const Provenance& Real::provenance() const { return impl_->prov; }

Real Real::from_rational(Rational q) {
    auto impl = std::make_shared<Impl>();
    Rational v = q;
    impl->approx = [v](const PositiveRational&) { return v; };
    impl->prov.kind = ProvKind::Rational;
    impl->prov.value = std::move(q);
    return Real(std::move(impl));
}

Real Real::from_limit(CauchyApproximation x) {
    auto fam = std::make_shared<const CauchyApproximation>(std::move(x));
    auto impl = std::make_shared<Impl>();
    impl->approx = [fam](const PositiveRational& eps) {
        PositiveRational half = eps.half();
        return fam->at(half).approximate(half);
    };
    impl->prov.kind = ProvKind::Limit;
    impl->prov.family = fam;
    return Real(std::move(impl));
}

Real Real::derived(std::string op, std::vector<Real> operands, ApproxFn approx) {
    if (!approx) throw std::invalid_argument("Real::derived: empty function");
    auto impl = std::make_shared<Impl>();
    impl->approx = std::move(approx);
    impl->prov.kind = ProvKind::Derived;
    impl->prov.op = std::move(op);
    impl->prov.operands = std::move(operands);
    return Real(std::move(impl));
}

Real rat(Rational q) { return Real::from_rational(std::move(q)); }

Real lim(const CauchyApproximation& x) { return Real::from_limit(x); }

ClosenessVerdict close(const Real& u, const Real& v, const PositiveRational& eps,
                       int budget) {
    if (budget < 1) throw std::invalid_argument("close: budget must be >= 1");
    PositiveRational delta = PositiveRational(eps.value() / 4);
    Rational last = delta.value();
    for (int i = 0; i < budget; ++i) {
        last = delta.value();
        Rational d = abs(u.approximate(delta) - v.approximate(delta));
        Rational two_delta = delta.value() * 2;
        // d is within 2*delta of the true distance, both ways
        if (d + two_delta < eps.value()) return {Closeness::ProvedClose, last};
        if (d - two_delta >= eps.value()) return {Closeness::ProvedApart, last};
        delta = delta.half();
    }
    return {Closeness::Undecided, last};
}

EqVerdict eq_check(const Real& u, const Real& v, unsigned k, int budget) {
    for (unsigned i = 0; i <= k; ++i) {
        PositiveRational eps = PositiveRational::pow2(-static_cast<long>(i));
        if (close(u, v, eps, budget).proved_apart()) return {false, eps.value()};
    }
    return {true, Rational::pow2(-static_cast<long>(k))};
}

namespace {

std::string pair_text(const Rational& d, const Rational& e) {
    return "(" + d.to_string() + "," + e.to_string() + ")";
}

}  // namespace

CheckReport check_modulus(const Real& u, std::span<const PrecisionPair> samples,
                          const Rational& slack) {
    CheckReport rep;
    bool ok = true;
    std::string witness;
    for (const auto& [d, e] : samples) {
        Rational gap = abs(u.approximate(d) - u.approximate(e));
        Rational bound = d.value() + e.value() + slack;
        if (gap > bound) {
            ok = false;
            witness = pair_text(d.value(), e.value()) + " gap=" + gap.to_string();
            break;
        }
    }
    rep.add("modulus", ok, witness);
    return rep;
}

CheckReport check_is_cauchy(const CauchyApproximation& x,
                            std::span<const PrecisionPair> samples, int budget,
                            const Rational& slack) {
    CheckReport rep;
    bool ok = true;
    std::string witness;
    for (const auto& [d, e] : samples) {
        PositiveRational radius = PositiveRational(d.value() + e.value() + slack);
        if (close(x.at(d), x.at(e), radius, budget).proved_apart()) {
            ok = false;
            witness = pair_text(d.value(), e.value());
            break;
        }
    }
    rep.add("cauchy", ok, witness);
    return rep;
}

CheckReport check_limit_is_limit(const CauchyApproximation& x,
                                 std::span<const PrecisionPair> samples, int budget,
                                 const Rational& slack) {
    CheckReport rep;
    Real u = lim(x);
    bool ok = true;
    std::string witness;
    for (const auto& [eps, theta] : samples) {
        PositiveRational radius = PositiveRational(eps.value() + theta.value() + slack);
        if (close(x.at(eps), u, radius, budget).proved_apart()) {
            ok = false;
            witness = pair_text(eps.value(), theta.value());
            break;
        }
    }
    rep.add("limit-is-limit", ok, witness);
    return rep;
}

}  // namespace reals
