// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes.  Counts, tolerances, and time limits are pinned; check sources
// use exact rational oracles so a pass is a zero-tolerance statement.

#include "reals/arith.hpp"
#include "reals/cut_oracle.hpp"
#include "reals/expr.hpp"
#include "reals/generators.hpp"
#include "reals/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace reals;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Criterion> criteria;

void record(const std::string& name, bool pass, const std::string& detail) {
    criteria.push_back({name, pass, detail});
}

bool line_passes(const CheckReport& rep, const std::string& name) {
    for (const auto& r : rep.results())
        if (r.name == name) return r.pass;
    return false;
}

std::string took(double secs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    return buf;
}

// 1: every generated real keeps |approximate(d) - approximate(e)| within
// d + e + 2^-20 over 1000 reals x 10 precision pairs, under 30 seconds.
void criterion_approximants() {
    auto start = Clock::now();
    const Rational slack = Rational::pow2(-20);
    Sampler s(101);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        KnownReal u = s.real(static_cast<unsigned>(s.integer(0, 3)));
        for (int j = 0; j < 10; ++j) {
            PositiveRational d = s.precision(), e = s.precision();
            Rational gap = abs(u.value.approximate(d) - u.value.approximate(e));
            if (gap > d.value() + e.value() + slack) ++bad;
        }
    }
    double secs = seconds_since(start);
    record("approximant-compatibility", bad == 0 && secs < 30.0,
           "1000 reals x 10 pairs, bad=" + std::to_string(bad) + ", " + took(secs) +
               " (limit 30s)");
}

// 2: the four closeness laws on 1000 exactly-instantiated instances must
// produce zero refutations, under 60 seconds.
void criterion_distance_laws() {
    auto start = Clock::now();
    SuiteConfig cfg;
    cfg.seed = 202;
    cfg.instances = 250;  // 4 laws per instance = 1000 law instances
    CheckReport rep = check_distance_laws(cfg);
    double secs = seconds_since(start);
    record("closeness-laws", rep.all_pass() && secs < 60.0,
           "1000 instances, " + took(secs) + " (limit 60s)");
}

CheckReport limits_report() {
    SuiteConfig cfg;
    cfg.seed = 303;
    cfg.instances = 100;
    return check_limits(cfg);
}

// 3: on 100 families, lim is a limit of its family and agrees with an
// independently built second limit on the eq ladder.
void criterion_limits(const CheckReport& rep) {
    record("limit-laws",
           line_passes(rep, "limit-is-limit") && line_passes(rep, "limit-unique"),
           "100 families, 8 probes each, ladder 2^-20");
}

// 5: lim commutes with adding a constant on 100 instances.
void criterion_limit_shift(const CheckReport& rep) {
    record("limit-shift", line_passes(rep, "lim-plus-const"), "100 instances");
}

// 4: rational_bounds brackets the exact value strictly with width < 2^-n
// for n = 1..20, five sampled reals per n, exact comparisons only.
void criterion_bounds() {
    Sampler s(404);
    int bad = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (int k = 0; k < 5; ++k) {
            KnownReal u = s.real(2);
            Bounds b = rational_bounds(u.value, n);
            bool ok = b.lower < u.exact && u.exact < b.upper &&
                      b.width() < Rational::pow2(-static_cast<long>(n));
            if (!ok) ++bad;
        }
    }
    record("rational-bounds", bad == 0,
           "100 reals over n=1..20, bad=" + std::to_string(bad));
}

// 6: over 100 pairs, whenever the eq ladder does not refute equality the
// approximants stay within 2*delta + 2^-20; refutations are sound.
void criterion_eq_extensionality() {
    const Rational slack = Rational::pow2(-20);
    Sampler s(606);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        KnownReal u = s.real(2);
        Real v = u.value;
        Rational v_exact = u.exact;
        switch (i % 5) {
            case 0: v = -(-u.value); break;
            case 1: v = midpoint(u.value, u.value); break;
            case 2: v = u.value + rat(Rational(0)); break;
            case 3: {
                Rational q = s.rational();
                v = (u.value - rat(q)) + rat(q);
                break;
            }
            default: {
                Rational gap = Rational::pow2(-s.integer(1, 6));
                v = u.value + rat(gap);
                v_exact = u.exact + gap;
                break;
            }
        }
        EqVerdict eq = eq_check(u.value, v, 10, 64);
        if (eq.consistent) {
            for (int j = 0; j < 10; ++j) {
                PositiveRational d = s.precision();
                Rational gap = abs(u.value.approximate(d) - v.approximate(d));
                if (gap > d.value() * 2 + slack) ++bad;
            }
        } else if (abs(u.exact - v_exact) < eq.epsilon) {
            ++bad;  // refutation would be unsound
        }
    }
    record("eq-extensionality", bad == 0, "100 pairs, bad=" + std::to_string(bad));
}

// 7: the frozen towers hit 1/2 and 1/3 and 50 sampled limits rebuild as
// midpoint towers on the eq ladder.
void criterion_towers() {
    bool unit = eq_check(big_midpoint([](unsigned i) { return rat(Rational(i == 0 ? 1 : 0)); },
                                      PositiveRational::one()),
                         rat(Rational(1, 2)), 20)
                    .consistent;
    bool alt = eq_check(big_midpoint([](unsigned i) { return rat(Rational(i % 2 == 0 ? 1 : -1)); },
                                     PositiveRational::one()),
                        rat(Rational(1, 3)), 20)
                   .consistent;
    Sampler s(707);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
        KnownFamily f = s.family();
        if (!check_lim_via_midpoint(f.family, PositiveRational(f.member_bound), 10, 64)
                 .all_pass())
            ++bad;
    }
    record("midpoint-towers", unit && alt && bad == 0,
           "towers 1/2 and 1/3, 50 rebuilds, bad=" + std::to_string(bad));
}

// 8: 20 interval maps hit both endpoints and match the exact affine
// oracle at dyadic arguments with denominator exponent <= 6.
void criterion_interval_maps() {
    Sampler s(808);
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
        KnownReal a = s.real(2), b = s.real(2);
        IntervalHom h(a.value, b.value);
        bool ok = eq_check(h(Rational(-1)), a.value, 16).consistent &&
                  eq_check(h(Rational(1)), b.value, 16).consistent;
        for (int j = 0; j < 3 && ok; ++j) {
            long m = s.integer(0, 6);
            Rational t(Int(s.integer(-(1L << m), 1L << m)), Int(1) << m);
            Rational expected =
                ((Rational(1) - t) * a.exact + (Rational(1) + t) * b.exact) / 2;
            ok = eq_check(h(t), rat(expected), 16).consistent;
        }
        if (!ok) ++bad;
    }
    record("interval-maps", bad == 0,
           "20 endpoint pairs, dyadics m<=6, bad=" + std::to_string(bad));
}

// 9: the finite models check exhaustively (posets n<=5, families n<=3,
// triangle |C|,|D|<=3,|A|<=4) plus 10000 sampled n=4 families, with zero
// counterexamples, under 60 seconds.
void criterion_models() {
    auto start = Clock::now();
    SuiteConfig cfg;
    cfg.seed = 909;
    cfg.instances = 10000;
    CheckReport rep = check_finite_model_suite(cfg);
    double secs = seconds_since(start);
    record("finite-models", rep.all_pass() && secs < 60.0,
           "exhaustive + 10000 sampled, " + took(secs) + " (limit 60s)");
}

// 10: kernel arithmetic agrees with the finite cut oracle within two
// boundary cells on 100 generated reals.
void criterion_cuts() {
    SuiteConfig cfg;
    cfg.seed = 1010;
    cfg.instances = 100;
    CheckReport rep = check_cut_agreement(cfg);
    record("cut-agreement", rep.all_pass(), "100 reals, <=2 cells per operation");
}

// 11: 20 fixed expressions, digits 3, 6, 9: the printed decimal is within
// 10^-d of the exact value, by exact rational comparison.
void criterion_calculator() {
    const std::vector<std::pair<std::string, Rational>> table = {
        {"1/3 + 1/6", Rational(1, 2)},
        {"1 - 2 - 3", Rational(-4)},
        {"mid(1/2, 1/4)", Rational(3, 8)},
        {"abs(-2/3)", Rational(2, 3)},
        {"third", Rational(1, 3)},
        {"quarter", Rational(1, 4)},
        {"geo(1/2)", Rational(1)},
        {"geo(-1/3)", Rational(-1, 4)},
        {"bigmid(unit)", Rational(1, 2)},
        {"bigmid(alt)", Rational(1, 3)},
        {"third + quarter", Rational(7, 12)},
        {"mid(third, quarter)", Rational(7, 24)},
        {"abs(quarter - third)", Rational(1, 12)},
        {"-third", Rational(-1, 3)},
        {"geo(1/4) - geo(-1/4)", Rational(8, 15)},
        {"0.125 + 1/8", Rational(1, 4)},
        {"mid(bigmid(alt), third)", Rational(1, 3)},
        {"third - 1/3", Rational(0)},
        {"geo(2/3)", Rational(2)},
        {"mid(geo(1/2), -1)", Rational(0)},
    };
    int bad = 0;
    for (const auto& [src, exact] : table) {
        Real u = evaluate(*parse_expression(src));
        for (unsigned d : {3u, 6u, 9u}) {
            Rational printed = Rational::from_string(eval_decimal(u, d));
            Rational tol(Int(1), [&] {
                Int t(1);
                for (unsigned j = 0; j < d; ++j) t *= 10;
                return t;
            }());
            if (!(abs(printed - exact) < tol)) ++bad;
        }
    }
    record("calculator-digits", bad == 0,
           "20 expressions x digits {3,6,9}, bad=" + std::to_string(bad));
}

}  // namespace

int main() {
    criterion_approximants();
    criterion_distance_laws();
    CheckReport limits = limits_report();
    criterion_limits(limits);
    criterion_bounds();
    criterion_limit_shift(limits);
    criterion_eq_extensionality();
    criterion_towers();
    criterion_interval_maps();
    criterion_models();
    criterion_cuts();
    criterion_calculator();

    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        if (c.pass) ++passed;
        std::printf("ACCEPT %02zu %-26s %s  %s\n", i + 1, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
    }
    std::printf("ACCEPTANCE %d/%zu criteria pass\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
