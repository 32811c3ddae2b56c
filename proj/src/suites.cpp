#include "reals/suites.hpp"

#include "reals/cut_oracle.hpp"
#include "reals/finite_models.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace reals {

namespace {

std::string counted(const std::string& witness, int n) {
    return witness.empty() ? "instances=" + std::to_string(n) : witness;
}

// Second limit construction for uniqueness checks: splits eps unevenly
// instead of halving, so it shares nothing with lim's diagonal.
Real alt_limit(const CauchyApproximation& x) {
    return Real::derived("lim-alt", {}, [x](const PositiveRational& eps) {
        PositiveRational third = PositiveRational(eps.value() / 3);
        PositiveRational rest = PositiveRational(eps.value() * 2 / 3);
        return x.at(third).approximate(rest);
    });
}

}  // namespace

CheckReport check_distance_laws(const SuiteConfig& cfg) {
    Sampler s(cfg.seed);
    CheckReport rep;
    int bad_rr = 0, bad_rl = 0, bad_lr = 0, bad_ll = 0;
    std::string w_rr, w_rl, w_lr, w_ll;

    for (int i = 0; i < cfg.instances; ++i) {
        // each hypothesis is made true by exact construction: the radius
        // is the exact distance plus a positive gap
        {
            Rational q = s.rational(), r = s.rational();
            PositiveRational eps(abs(q - r) + s.dyadic_eps(0, 10).value());
            if (close(rat(q), rat(r), eps, cfg.budget).proved_apart()) {
                ++bad_rr;
                if (w_rr.empty())
                    w_rr = q.to_string() + " vs " + r.to_string() + " at " +
                           eps.value().to_string();
            }
        }
        {
            Rational q = s.rational(4, 8);
            KnownFamily y = s.family();
            PositiveRational delta = s.precision();
            Rational dist = abs(q - y.member_value(delta));
            PositiveRational eps(dist + s.dyadic_eps(0, 10).value());
            PositiveRational radius = eps + delta;
            if (close(rat(q), lim(y.family), radius, cfg.budget).proved_apart()) {
                ++bad_rl;
                if (w_rl.empty())
                    w_rl = q.to_string() + " vs " + y.label + " at " +
                           radius.value().to_string();
            }
        }
        {
            KnownFamily x = s.family();
            PositiveRational delta = s.precision();
            Rational r = s.rational(4, 8);
            Rational dist = abs(x.member_value(delta) - r);
            PositiveRational eps(dist + s.dyadic_eps(0, 10).value());
            PositiveRational radius = eps + delta;
            if (close(lim(x.family), rat(r), radius, cfg.budget).proved_apart()) {
                ++bad_lr;
                if (w_lr.empty())
                    w_lr = x.label + " vs " + r.to_string() + " at " +
                           radius.value().to_string();
            }
        }
        {
            KnownFamily x = s.family(), y = s.family();
            PositiveRational delta = s.precision(), eta = s.precision();
            Rational dist = abs(x.member_value(delta) - y.member_value(eta));
            PositiveRational eps(dist + s.dyadic_eps(0, 10).value());
            PositiveRational radius = eps + delta + eta;
            if (close(lim(x.family), lim(y.family), radius, cfg.budget).proved_apart()) {
                ++bad_ll;
                if (w_ll.empty())
                    w_ll = x.label + " vs " + y.label + " at " +
                           radius.value().to_string();
            }
        }
    }
    rep.add("law-rat-rat", bad_rr == 0, counted(w_rr, cfg.instances));
    rep.add("law-rat-lim", bad_rl == 0, counted(w_rl, cfg.instances));
    rep.add("law-lim-rat", bad_lr == 0, counted(w_lr, cfg.instances));
    rep.add("law-lim-lim", bad_ll == 0, counted(w_ll, cfg.instances));
    return rep;
}

CheckReport check_modulus_suite(const SuiteConfig& cfg) {
    Sampler s(cfg.seed);
    CheckReport rep;
    int bad_pairs = 0, bad_value = 0;
    std::string w_pairs, w_value;

    for (int i = 0; i < cfg.instances; ++i) {
        KnownReal u = s.real(static_cast<unsigned>(s.integer(0, 3)));
        for (int j = 0; j < 10; ++j) {
            PositiveRational d = s.precision(), e = s.precision();
            Rational gap = abs(u.value.approximate(d) - u.value.approximate(e));
            if (gap > d.value() + e.value() + cfg.slack) {
                ++bad_pairs;
                if (w_pairs.empty())
                    w_pairs = u.label + " at (" + d.value().to_string() + "," +
                              e.value().to_string() + ")";
            }
            if (abs(u.value.approximate(e) - u.exact) > e.value() + cfg.slack) {
                ++bad_value;
                if (w_value.empty()) w_value = u.label + " at " + e.value().to_string();
            }
        }
    }
    rep.add("modulus-compatible", bad_pairs == 0, counted(w_pairs, cfg.instances));
    rep.add("modulus-within-eps", bad_value == 0, counted(w_value, cfg.instances));
    return rep;
}

CheckReport check_limits(const SuiteConfig& cfg) {
    Sampler s(cfg.seed);
    CheckReport rep;
    int bad_limit = 0, bad_unique = 0, bad_shift = 0;
    std::string w_limit, w_unique, w_shift;

    for (int i = 0; i < cfg.instances; ++i) {
        KnownFamily f = s.family();
        Real u = lim(f.family);
        for (int j = 0; j < 8; ++j) {
            PositiveRational eps = s.precision(), theta = s.precision();
            PositiveRational radius(eps.value() + theta.value() + cfg.slack);
            if (close(f.family.at(eps), u, radius, cfg.budget).proved_apart()) {
                ++bad_limit;
                if (w_limit.empty())
                    w_limit = f.label + " at (" + eps.value().to_string() + "," +
                              theta.value().to_string() + ")";
            }
        }
        EqVerdict uq = eq_check(u, alt_limit(f.family), cfg.ladder, cfg.budget);
        if (!uq.consistent) {
            ++bad_unique;
            if (w_unique.empty())
                w_unique = f.label + " refuted-at " + uq.epsilon.to_string();
        }
        KnownReal c = s.real(1);
        CauchyApproximation base = f.family;
        Real cv = c.value;
        CauchyApproximation shifted(
            [base, cv](const PositiveRational& eps) { return base.at(eps) + cv; });
        EqVerdict sh = eq_check(lim(shifted), u + cv, cfg.ladder, cfg.budget);
        if (!sh.consistent) {
            ++bad_shift;
            if (w_shift.empty())
                w_shift = f.label + " + " + c.label + " refuted-at " +
                          sh.epsilon.to_string();
        }
    }
    rep.add("limit-is-limit", bad_limit == 0, counted(w_limit, cfg.instances));
    rep.add("limit-unique", bad_unique == 0, counted(w_unique, cfg.instances));
    rep.add("lim-plus-const", bad_shift == 0, counted(w_shift, cfg.instances));
    return rep;
}

CheckReport check_midpoints(const SuiteConfig& cfg) {
    Sampler s(cfg.seed);
    CheckReport rep;

    {
        // tower of (1, 0, 0, ...) halves once: exactly 1/2
        Real t = big_midpoint(
            [](unsigned i) { return rat(Rational(i == 0 ? 1 : 0)); },
            PositiveRational::one());
        EqVerdict v = eq_check(t, rat(Rational(1, 2)), cfg.ladder, cfg.budget);
        rep.add("midpoint-tower-unit", v.consistent,
                (v.consistent ? "consistent-to " : "refuted-at ") + v.epsilon.to_string());
    }
    {
        // alternating signs sum to 1/2 - 1/4 + 1/8 - ... = 1/3
        Real t = big_midpoint(
            [](unsigned i) { return rat(Rational(i % 2 == 0 ? 1 : -1)); },
            PositiveRational::one());
        EqVerdict v = eq_check(t, rat(Rational(1, 3)), cfg.ladder, cfg.budget);
        rep.add("midpoint-tower-alternating", v.consistent,
                (v.consistent ? "consistent-to " : "refuted-at ") + v.epsilon.to_string());
    }

    int bad_algebra = 0, bad_rebuild = 0, bad_end = 0, bad_affine = 0, bad_hom = 0;
    std::string w_algebra, w_rebuild, w_end, w_affine, w_hom;
    const int rebuilds = std::max(cfg.instances / 4, 8);

    for (int i = 0; i < cfg.instances; ++i) {
        KnownReal a = s.real(2), b = s.real(2);
        // midpoint algebra: idempotent, commutative
        if (!eq_check(midpoint(a.value, a.value), a.value, cfg.ladder, cfg.budget)
                 .consistent ||
            !eq_check(midpoint(a.value, b.value), midpoint(b.value, a.value),
                      cfg.ladder, cfg.budget)
                 .consistent) {
            ++bad_algebra;
            if (w_algebra.empty()) w_algebra = a.label + " | " + b.label;
        }
    }
    {
        // medial law on a fixed sample: mid(mid(a,b), mid(c,d)) = mid(mid(a,c), mid(b,d))
        Sampler s2(cfg.seed + 1);
        for (int i = 0; i < std::max(cfg.instances / 8, 4); ++i) {
            KnownReal a = s2.real(1), b = s2.real(1), c = s2.real(1), d = s2.real(1);
            Real lhs = midpoint(midpoint(a.value, b.value), midpoint(c.value, d.value));
            Real rhs = midpoint(midpoint(a.value, c.value), midpoint(b.value, d.value));
            if (!eq_check(lhs, rhs, cfg.ladder, cfg.budget).consistent) {
                ++bad_algebra;
                if (w_algebra.empty()) w_algebra = "medial " + a.label;
            }
        }
    }
    rep.add("midpoint-algebra", bad_algebra == 0, counted(w_algebra, cfg.instances));

    for (int i = 0; i < rebuilds; ++i) {
        KnownFamily f = s.family();
        CheckReport one = check_lim_via_midpoint(f.family, PositiveRational(f.member_bound),
                                                 cfg.ladder, cfg.budget);
        if (!one.all_pass()) {
            ++bad_rebuild;
            if (w_rebuild.empty()) w_rebuild = f.label;
        }
    }
    rep.add("lim-via-midpoint", bad_rebuild == 0, counted(w_rebuild, rebuilds));

    const int pairs = std::max(cfg.instances / 10, 4);
    for (int i = 0; i < pairs; ++i) {
        KnownReal a = s.real(2), b = s.real(2);
        IntervalHom h = interval_hom(a.value, b.value);
        if (!eq_check(h(Rational(-1)), a.value, cfg.ladder, cfg.budget).consistent ||
            !eq_check(h(Rational(1)), b.value, cfg.ladder, cfg.budget).consistent) {
            ++bad_end;
            if (w_end.empty()) w_end = "[" + a.label + "," + b.label + "]";
        }
        for (int j = 0; j < 4; ++j) {
            long m = s.integer(0, 6);
            Rational t(Int(s.integer(-(1L << m), 1L << m)), Int(1) << m);
            Rational expected =
                ((Rational(1) - t) * a.exact + (Rational(1) + t) * b.exact) / 2;
            if (!eq_check(h(t), rat(expected), cfg.ladder, cfg.budget).consistent) {
                ++bad_affine;
                if (w_affine.empty())
                    w_affine = "t=" + t.to_string() + " on [" + a.label + "," + b.label + "]";
            }
            long m2 = s.integer(0, 6);
            Rational t2(Int(s.integer(-(1L << m2), 1L << m2)), Int(1) << m2);
            Real lhs = h((t + t2) / 2);
            Real rhs = midpoint(h(t), h(t2));
            if (!eq_check(lhs, rhs, cfg.ladder, cfg.budget).consistent) {
                ++bad_hom;
                if (w_hom.empty()) w_hom = "t=" + t.to_string() + " t'=" + t2.to_string();
            }
        }
    }
    rep.add("interval-endpoints", bad_end == 0, counted(w_end, pairs));
    rep.add("interval-affine-value", bad_affine == 0, counted(w_affine, pairs * 4));
    rep.add("interval-midpoint-hom", bad_hom == 0, counted(w_hom, pairs * 4));
    return rep;
}

CheckReport check_cut_agreement(const SuiteConfig& cfg) {
    Sampler s(cfg.seed);
    CheckReport rep;
    GridPtr grid = Grid::dyadic(Rational(-2), Rational(2), 8);

    int bad_valid = 0, bad_add = 0, bad_neg = 0, bad_abs = 0, bad_lim = 0;
    std::string w_valid, w_add, w_neg, w_abs, w_lim;

    for (int i = 0; i < cfg.instances; ++i) {
        KnownReal u = s.real(static_cast<unsigned>(s.integer(0, 2)), true);
        KnownReal v = s.real(static_cast<unsigned>(s.integer(0, 2)), true);
        FiniteCut cu = cut_of_real(u.value, grid);
        FiniteCut cv = cut_of_real(v.value, grid);

        if (!check_is_cut(cu).all_pass()) {
            ++bad_valid;
            if (w_valid.empty()) w_valid = u.label;
        }
        std::size_t d_add =
            cells_differing(cut_add(cu, cv), cut_of_real(u.value + v.value, grid));
        if (d_add > 2) {
            ++bad_add;
            if (w_add.empty())
                w_add = u.label + " + " + v.label + " cells=" + std::to_string(d_add);
        }
        std::size_t d_neg = cells_differing(cut_neg(cu), cut_of_real(-u.value, grid));
        if (d_neg > 2) {
            ++bad_neg;
            if (w_neg.empty()) w_neg = u.label + " cells=" + std::to_string(d_neg);
        }
        std::size_t d_abs = cells_differing(cut_abs(cu), cut_of_real(abs(u.value), grid));
        if (d_abs > 2) {
            ++bad_abs;
            if (w_abs.empty()) w_abs = u.label + " cells=" + std::to_string(d_abs);
        }
    }
    rep.add("cut-tables-valid", bad_valid == 0, counted(w_valid, cfg.instances));
    rep.add("cut-add-agree", bad_add == 0, counted(w_add, cfg.instances));
    rep.add("cut-neg-agree", bad_neg == 0, counted(w_neg, cfg.instances));
    rep.add("cut-abs-agree", bad_abs == 0, counted(w_abs, cfg.instances));

    const int lim_instances = std::max(cfg.instances / 4, 8);
    for (int i = 0; i < lim_instances; ++i) {
        KnownFamily f = s.family(true);
        CutFamily members;
        for (long e = 9; e >= 6; --e) {
            PositiveRational eps = PositiveRational::pow2(-e);
            members.emplace_back(eps, cut_of_real(f.family.at(eps), grid));
        }
        std::size_t d =
            cells_differing(cut_lim(members), cut_of_real(lim(f.family), grid));
        if (d > 2) {
            ++bad_lim;
            if (w_lim.empty()) w_lim = f.label + " cells=" + std::to_string(d);
        }
    }
    rep.add("cut-lim-agree", bad_lim == 0, counted(w_lim, lim_instances));
    return rep;
}

CheckReport check_finite_model_suite(const SuiteConfig& cfg) {
    CheckReport rep;
    // poset laws per n, folded into one line per law (result order of
    // check_poset_laws: reflexive, antisymmetric, transitive)
    const char* law_names[3] = {"poset-reflexive", "poset-antisymmetric",
                                "poset-transitive"};
    bool law_ok[3] = {true, true, true};
    std::string law_witness[3];
    for (unsigned n = 0; n <= 5; ++n) {
        CheckReport one = check_subtype_poset(n);
        for (int j = 0; j < 3; ++j) {
            if (!one.results()[j].pass && law_ok[j]) {
                law_ok[j] = false;
                law_witness[j] = "n=" + std::to_string(n) + " " + one.results()[j].witness;
            }
        }
    }
    for (int j = 0; j < 3; ++j)
        rep.add(law_names[j], law_ok[j], law_ok[j] ? "n<=5" : law_witness[j]);

    bool jm_ok = true;
    std::string jm_witness;
    unsigned long families = 0;
    for (unsigned n = 0; n <= 3; ++n) {
        CheckReport one = check_joins_meets(n, 0, 0);
        const CheckResult& r = one.results()[0];
        if (!r.pass && jm_ok) {
            jm_ok = false;
            jm_witness = "n=" + std::to_string(n) + " " + r.witness;
        }
        if (r.pass) families += 1ul << (1u << n);
    }
    rep.add("join-meet-exhaustive", jm_ok,
            jm_ok ? "n<=3 families=" + std::to_string(families) : jm_witness);

    unsigned samples = static_cast<unsigned>(std::max(cfg.instances, 10000));
    rep.merge(check_joins_meets(4, samples, cfg.seed));
    rep.merge(check_triangle_lemma(3, 4));
    return rep;
}

}  // namespace reals
