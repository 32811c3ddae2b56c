#include <doctest.h>

#include "reals/cut_oracle.hpp"
#include "reals/generators.hpp"

#include <algorithm>
#include <stdexcept>

using namespace reals;

namespace {
PositiveRational pr(long n, long d = 1) { return PositiveRational(n, d); }

std::size_t count_true(const std::vector<bool>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

bool result_named(const CheckReport& rep, const std::string& name, bool expect_pass) {
    for (const auto& r : rep.results())
        if (r.name == name) return r.pass == expect_pass;
    return false;
}

// conservative tables: everything a claims, b claims too
bool tables_subset(const FiniteCut& a, const FiniteCut& b) {
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        if (a.lower[i] && !b.lower[i]) return false;
        if (a.upper[i] && !b.upper[i]) return false;
    }
    return true;
}
}

TEST_CASE("grid geometry and membership") {
    GridPtr g = Grid::uniform(Rational(0), Rational(1), pr(1, 4));
    CHECK(g->size() == 5);
    CHECK(g->point(0) == Rational(0));
    CHECK(g->point(2) == Rational(1, 2));
    CHECK(g->point(4) == Rational(1));
    CHECK(g->index_of(Rational(3, 4)) == std::size_t{3});
    CHECK(!g->index_of(Rational(1, 3)).has_value());
    CHECK(!g->index_of(Rational(2)).has_value());
    CHECK(!g->index_of(Rational(-1, 4)).has_value());
    CHECK(!g->symmetric());
    CHECK_THROWS_AS(g->point(5), std::out_of_range);

    GridPtr d = Grid::dyadic(Rational(-1), Rational(1), 3);
    CHECK(d->size() == 17);
    CHECK(d->step() == Rational(1, 8));
    CHECK(d->symmetric());
    CHECK(*d == *Grid::dyadic(Rational(-1), Rational(1), 3));
}

TEST_CASE("grid construction rejects bad windows") {
    CHECK_THROWS_AS(Grid::uniform(Rational(1), Rational(0), pr(1, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(Rational(0), Rational(0), pr(1, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(Rational(0), Rational(1), pr(2, 7)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Grid::uniform(Rational(0), Rational(1), pr(1, 1L << 27)),
                    std::invalid_argument);
}

TEST_CASE("exact rational cut satisfies every cut law") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut c = cut_of_rational(Rational(1, 3), g);
    CHECK(check_is_cut(c).all_pass());
    // points -1 + i/16 below 1/3 are i <= 21, above are i >= 22
    CHECK(count_true(c.lower) == 22);
    CHECK(count_true(c.upper) == 11);
}

TEST_CASE("cut law checker isolates each violation") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut base = cut_of_rational(Rational(1, 3), g);

    FiniteCut holey = base;
    holey.lower[3] = false;
    CheckReport r1 = check_is_cut(holey);
    CHECK(!r1.all_pass());
    CHECK(result_named(r1, "cut-rounded-lower", false));
    CHECK(result_named(r1, "cut-rounded-upper", true));

    FiniteCut overlapping = base;
    for (std::size_t i = 22; i <= 25; ++i) overlapping.lower[i] = true;
    CheckReport r2 = check_is_cut(overlapping);
    CHECK(result_named(r2, "cut-rounded-lower", true));
    CHECK(result_named(r2, "cut-transitive", false));

    FiniteCut gappy;
    gappy.grid = g;
    gappy.lower.assign(g->size(), false);
    gappy.upper.assign(g->size(), false);
    gappy.lower[0] = true;
    gappy.upper[g->size() - 1] = true;
    CheckReport r3 = check_is_cut(gappy);
    CHECK(result_named(r3, "cut-inhabited-lower", true));
    CHECK(result_named(r3, "cut-rounded-lower", true));
    CHECK(result_named(r3, "cut-transitive", true));
    CHECK(result_named(r3, "cut-located", false));

    FiniteCut empty_side = base;
    empty_side.lower.assign(g->size(), false);
    CHECK(result_named(check_is_cut(empty_side), "cut-inhabited-lower", false));

    FiniteCut malformed = base;
    malformed.upper.pop_back();
    CHECK_THROWS_AS(check_is_cut(malformed), std::invalid_argument);
}

TEST_CASE("probed cut of an on-grid rational matches the oracle exactly") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut probed = cut_of_real(rat(Rational(1, 2)), g);
    FiniteCut oracle = cut_of_rational(Rational(1, 2), g);
    CHECK(cells_differing(probed, oracle) == 0);
    CHECK(check_is_cut(probed).all_pass());
}

TEST_CASE("probed cut of an off-grid rational leaves one ambiguous cell") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut probed = cut_of_real(rat(Rational(1, 3)), g);
    FiniteCut oracle = cut_of_rational(Rational(1, 3), g);
    CHECK(check_is_cut(probed).all_pass());
    CHECK(tables_subset(probed, oracle));
    CHECK(cells_differing(probed, oracle) == 1);
}

TEST_CASE("probed cut of a limit stays within two cells of the oracle") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut probed = cut_of_real(lim(truncation_family(Rational(1, 3)).family), g);
    FiniteCut oracle = cut_of_rational(Rational(1, 3), g);
    CHECK(check_is_cut(probed).all_pass());
    CHECK(cells_differing(probed, oracle) <= 2);
}

TEST_CASE("probed cuts are sound for sampled rationals") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    Sampler s(4242);
    for (int i = 0; i < 60; ++i) {
        Rational v(Int(s.integer(-20, 20)), Int(24));
        FiniteCut probed = cut_of_real(rat(v), g);
        FiniteCut oracle = cut_of_rational(v, g);
        CHECK(tables_subset(probed, oracle));
        CHECK(cells_differing(probed, oracle) <= 2);
        CHECK(check_is_cut(probed).all_pass());
    }
}

TEST_CASE("cut_of_real validates its probe") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    CHECK_THROWS_AS(cut_of_real(rat(Rational(0)), g, pr(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(cut_of_real(rat(Rational(0)), nullptr), std::invalid_argument);
}

TEST_CASE("sum cut misses at most one cell per side") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut quarter = cut_of_rational(Rational(1, 4), g);
    FiniteCut sum = cut_add(quarter, quarter);
    FiniteCut oracle = cut_of_rational(Rational(1, 2), g);
    CHECK(tables_subset(sum, oracle));
    CHECK(cells_differing(sum, oracle) == 2);
    // the sum keeps every law except locatedness, whose unclassified band
    // widens to the three cells around 1/2
    CheckReport rep = check_is_cut(sum);
    CHECK(result_named(rep, "cut-inhabited-lower", true));
    CHECK(result_named(rep, "cut-inhabited-upper", true));
    CHECK(result_named(rep, "cut-rounded-lower", true));
    CHECK(result_named(rep, "cut-rounded-upper", true));
    CHECK(result_named(rep, "cut-transitive", true));
    CHECK(result_named(rep, "cut-located", false));
}

TEST_CASE("sum cut agrees for sampled rational pairs") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    Sampler s(4343);
    for (int i = 0; i < 60; ++i) {
        Rational a(Int(s.integer(-5, 5)), Int(16));
        Rational b(Int(s.integer(-5, 5)), Int(16));
        FiniteCut sum = cut_add(cut_of_rational(a, g), cut_of_rational(b, g));
        FiniteCut oracle = cut_of_rational(a + b, g);
        CHECK(tables_subset(sum, oracle));
        CHECK(cells_differing(sum, oracle) <= 2);
    }
}

TEST_CASE("cut_add rejects mismatched grids") {
    FiniteCut a = cut_of_rational(Rational(0), Grid::dyadic(Rational(-1), Rational(1), 4));
    FiniteCut b = cut_of_rational(Rational(0), Grid::dyadic(Rational(-1), Rational(1), 3));
    CHECK_THROWS_AS(cut_add(a, b), std::invalid_argument);
}

TEST_CASE("negation cut mirrors exactly") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    FiniteCut c = cut_of_rational(Rational(1, 3), g);
    CHECK(cells_differing(cut_neg(c), cut_of_rational(Rational(-1, 3), g)) == 0);
    CHECK(cells_differing(cut_neg(cut_neg(c)), c) == 0);

    GridPtr lopsided = Grid::uniform(Rational(0), Rational(1), pr(1, 4));
    CHECK_THROWS_AS(cut_neg(cut_of_rational(Rational(1, 2), lopsided)),
                    std::invalid_argument);
}

TEST_CASE("absolute value cut folds exactly") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    CHECK(cells_differing(cut_abs(cut_of_rational(Rational(-1, 3), g)),
                          cut_of_rational(Rational(1, 3), g)) == 0);
    CHECK(cells_differing(cut_abs(cut_of_rational(Rational(1, 3), g)),
                          cut_of_rational(Rational(1, 3), g)) == 0);
    CHECK(cells_differing(cut_abs(cut_of_rational(Rational(0), g)),
                          cut_of_rational(Rational(0), g)) == 0);

    GridPtr lopsided = Grid::uniform(Rational(0), Rational(1), pr(1, 4));
    CHECK_THROWS_AS(cut_abs(cut_of_rational(Rational(1, 2), lopsided)),
                    std::invalid_argument);
}

TEST_CASE("coherent cut families pass the coherence report") {
    GridPtr g = Grid::dyadic(Rational(-2), Rational(2), 8);
    KnownFamily f = truncation_family(Rational(1, 3));
    CutFamily members;
    for (long e = 9; e >= 6; --e) {
        PositiveRational eps = PositiveRational::pow2(-e);
        members.emplace_back(eps, cut_of_rational(f.member_value(eps), g));
    }
    CHECK(check_family_coherence(members).all_pass());

    FiniteCut limit = cut_lim(members);
    FiniteCut oracle = cut_of_rational(Rational(1, 3), g);
    // shifted membership eats eps_i + eps_j per side: two lower cells and
    // one upper cell stay unclaimed on this family
    CHECK(tables_subset(limit, oracle));
    CHECK(cells_differing(limit, oracle) == 3);
}

TEST_CASE("incoherent families are rejected") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 4);
    CutFamily members;
    members.emplace_back(PositiveRational::pow2(-8),
                         cut_of_rational(Rational(-1, 2), g));
    members.emplace_back(PositiveRational::pow2(-7),
                         cut_of_rational(Rational(1, 2), g));
    CHECK(!check_family_coherence(members).all_pass());
    CHECK_THROWS_AS(cut_lim(members), std::domain_error);

    CutFamily empty;
    CHECK(!check_family_coherence(empty).all_pass());
    CHECK_THROWS_AS(cut_lim(empty), std::domain_error);
}

TEST_CASE("cells_differing counts table disagreements") {
    GridPtr g = Grid::dyadic(Rational(-1), Rational(1), 3);
    FiniteCut a = cut_of_rational(Rational(1, 4), g);
    CHECK(cells_differing(a, a) == 0);
    FiniteCut b = a;
    b.lower[0] = !b.lower[0];
    b.upper[5] = !b.upper[5];
    b.upper[6] = !b.upper[6];
    CHECK(cells_differing(a, b) == 3);

    FiniteCut other = cut_of_rational(Rational(1, 4), Grid::dyadic(Rational(-1), Rational(1), 4));
    CHECK_THROWS_AS(cells_differing(a, other), std::invalid_argument);
}
