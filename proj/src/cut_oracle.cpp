#include "reals/cut_oracle.hpp"

#include "reals/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace reals {

GridPtr Grid::uniform(const Rational& lo, const Rational& hi,
                      const PositiveRational& step) {
    if (!(lo < hi)) throw std::invalid_argument("Grid: requires lo < hi");
    Rational span = (hi - lo) / step.value();
    if (!span.is_integer())
        throw std::invalid_argument("Grid: step must divide hi - lo");
    Int count = span.numerator() + 1;
    if (count > Int(1) << 26) throw std::invalid_argument("Grid: too many points");
    return GridPtr(new Grid(lo, hi, step.value(),
                            static_cast<std::size_t>(static_cast<unsigned long>(count))));
}

GridPtr Grid::dyadic(const Rational& lo, const Rational& hi, unsigned m) {
    return uniform(lo, hi, PositiveRational::pow2(-static_cast<long>(m)));
}

Rational Grid::point(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("Grid::point");
    return lo_ + step_ * Rational(Int(i));
}

std::optional<std::size_t> Grid::index_of(const Rational& q) const {
    Rational rel = (q - lo_) / step_;
    if (!rel.is_integer() || rel.is_negative()) return std::nullopt;
    if (rel.numerator() >= Int(n_)) return std::nullopt;
    return static_cast<std::size_t>(static_cast<unsigned long>(rel.numerator()));
}

namespace {

std::string cell(const Grid& g, std::size_t i) {
    return "q[" + std::to_string(i) + "]=" + g.point(i).to_string();
}

void require_same_grid(const FiniteCut& a, const FiniteCut& b, const char* op) {
    if (a.grid == b.grid) return;
    if (a.grid && b.grid && *a.grid == *b.grid) return;
    throw std::invalid_argument(std::string(op) + ": cuts must share a grid");
}

void require_tables(const FiniteCut& c, const char* op) {
    if (!c.grid || c.lower.size() != c.grid->size() || c.upper.size() != c.grid->size())
        throw std::invalid_argument(std::string(op) + ": malformed cut tables");
}

// hi == -lo and lo/step integral make point(i) <-> point(n-1-i) exact mirrors
std::size_t mirror_index(const Grid& g, std::size_t i) { return g.size() - 1 - i; }

}  // namespace

CheckReport check_is_cut(const FiniteCut& c) {
    require_tables(c, "check_is_cut");
    const Grid& g = *c.grid;
    const std::size_t n = g.size();
    CheckReport rep;

    bool any_lower = std::find(c.lower.begin(), c.lower.end(), true) != c.lower.end();
    bool any_upper = std::find(c.upper.begin(), c.upper.end(), true) != c.upper.end();
    rep.add("cut-inhabited-lower", any_lower, any_lower ? "" : "no lower witness");
    rep.add("cut-inhabited-upper", any_upper, any_upper ? "" : "no upper witness");

    // lower must be a prefix of the grid
    {
        bool ok = true;
        std::string witness;
        std::size_t first_false = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!c.lower[i] && first_false == n) first_false = i;
            if (c.lower[i] && first_false < i) {
                ok = false;
                witness = cell(g, first_false) + " out " + cell(g, i) + " in";
                break;
            }
        }
        rep.add("cut-rounded-lower", ok, witness);
    }
    // upper must be a suffix
    {
        bool ok = true;
        std::string witness;
        std::size_t last_false = n;
        for (std::size_t i = n; i-- > 0;) {
            if (!c.upper[i] && last_false == n) last_false = i;
            if (c.upper[i] && last_false != n && last_false > i) {
                ok = false;
                witness = cell(g, last_false) + " out " + cell(g, i) + " in";
                break;
            }
        }
        rep.add("cut-rounded-upper", ok, witness);
    }
    // every lower point strictly precedes every upper point
    {
        bool ok = true;
        std::string witness;
        std::size_t max_lower = n, min_upper = n;
        for (std::size_t i = 0; i < n; ++i)
            if (c.lower[i]) max_lower = i;
        for (std::size_t i = n; i-- > 0;)
            if (c.upper[i]) min_upper = i;
        if (max_lower != n && min_upper != n && max_lower >= min_upper) {
            ok = false;
            witness = cell(g, max_lower) + " lower vs " + cell(g, min_upper) + " upper";
        }
        rep.add("cut-transitive", ok, witness);
    }
    // for grid q < r: q in lower or r in upper
    {
        bool ok = true;
        std::string witness;
        std::size_t first_not_lower = n, last_not_upper = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!c.lower[i]) {
                first_not_lower = i;
                break;
            }
        for (std::size_t i = n; i-- > 0;)
            if (!c.upper[i]) {
                last_not_upper = i;
                break;
            }
        if (first_not_lower != n && last_not_upper != n &&
            first_not_lower < last_not_upper) {
            ok = false;
            witness = cell(g, first_not_lower) + " and " + cell(g, last_not_upper) +
                      " both unclassified";
        }
        rep.add("cut-located", ok, witness);
    }
    return rep;
}

FiniteCut cut_of_real(const Real& u, const GridPtr& grid,
                      std::optional<PositiveRational> probe) {
    if (!grid) throw std::invalid_argument("cut_of_real: null grid");
    const Grid& g = *grid;
    PositiveRational delta = probe ? *probe
                                   : PositiveRational(g.step() * Rational::pow2(-8));
    if (!(delta.value() * 4 <= g.step()))
        throw std::invalid_argument("cut_of_real: probe must be <= step / 4");
    FiniteCut c;
    c.grid = grid;
    c.lower.resize(g.size());
    c.upper.resize(g.size());
    // One probe value classifies every boundary; located soundness makes
    // lower/upper sound, and at most one point per side stays out.
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rational q = g.point(i);
        c.lower[i] = located(q, q + g.step(), u, delta) == Side::Left;
        c.upper[i] = located(q - g.step(), q, u, delta) == Side::Right;
    }
    return c;
}

FiniteCut cut_of_rational(const Rational& v, const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("cut_of_rational: null grid");
    const Grid& g = *grid;
    FiniteCut c;
    c.grid = grid;
    c.lower.resize(g.size());
    c.upper.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rational q = g.point(i);
        c.lower[i] = q < v;
        c.upper[i] = v < q;
    }
    return c;
}

FiniteCut cut_add(const FiniteCut& a, const FiniteCut& b) {
    require_tables(a, "cut_add");
    require_tables(b, "cut_add");
    require_same_grid(a, b, "cut_add");
    const Grid& g = *a.grid;
    const long n = static_cast<long>(g.size());
    // point(i) + point(j) = point(i + j + lo/step): index arithmetic
    // replaces rational sums inside the search
    Rational lo_cells = g.low() / g.step();
    if (!lo_cells.is_integer())
        throw std::invalid_argument("cut_add: grid origin must be step-aligned");
    const long off = static_cast<long>(lo_cells.numerator());

    FiniteCut c;
    c.grid = a.grid;
    c.lower.assign(g.size(), false);
    c.upper.assign(g.size(), false);
    for (long q = 0; q < n; ++q) {
        for (long s = 0; s < n; ++s) {
            long t = q - off - s;
            if (t < 0 || t >= n) continue;
            if (a.lower[s] && b.lower[t]) {
                c.lower[q] = true;
                break;
            }
        }
        for (long s = 0; s < n; ++s) {
            long t = q - off - s;
            if (t < 0 || t >= n) continue;
            if (a.upper[s] && b.upper[t]) {
                c.upper[q] = true;
                break;
            }
        }
    }
    return c;
}

FiniteCut cut_neg(const FiniteCut& a) {
    require_tables(a, "cut_neg");
    if (!a.grid->symmetric())
        throw std::invalid_argument("cut_neg: grid must be symmetric around zero");
    const std::size_t n = a.grid->size();
    FiniteCut c;
    c.grid = a.grid;
    c.lower.resize(n);
    c.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.lower[i] = a.upper[mirror_index(*a.grid, i)];
        c.upper[i] = a.lower[mirror_index(*a.grid, i)];
    }
    return c;
}

FiniteCut cut_abs(const FiniteCut& a) {
    require_tables(a, "cut_abs");
    if (!a.grid->symmetric())
        throw std::invalid_argument("cut_abs: grid must be symmetric around zero");
    const std::size_t n = a.grid->size();
    FiniteCut c;
    c.grid = a.grid;
    c.lower.resize(n);
    c.upper.resize(n);
    // q < |v|  iff  q < v or -q > v;  |v| < r  iff  v < r and -r < v
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t mi = mirror_index(*a.grid, i);
        c.lower[i] = a.lower[i] || a.upper[mi];
        c.upper[i] = a.upper[i] && a.lower[mi];
    }
    return c;
}

namespace {

struct Bracket {
    bool inhabited = false;
    Rational lo, hi;  // tightest grid bracket the tables give
};

Bracket bracket_of(const FiniteCut& c) {
    const Grid& g = *c.grid;
    Bracket b;
    std::size_t max_lower = g.size(), min_upper = g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (c.lower[i]) max_lower = i;
    for (std::size_t i = g.size(); i-- > 0;)
        if (c.upper[i]) min_upper = i;
    if (max_lower == g.size() || min_upper == g.size()) return b;
    b.inhabited = true;
    b.lo = g.point(max_lower);
    b.hi = g.point(min_upper);
    return b;
}

}  // namespace

CheckReport check_family_coherence(const CutFamily& members) {
    CheckReport rep;
    if (members.empty()) {
        rep.add("cut-family-nonempty", false, "no members");
        return rep;
    }
    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i < members.size(); ++i) {
        require_tables(members[i].second, "check_family_coherence");
        if (i > 0) require_same_grid(members[0].second, members[i].second,
                                     "check_family_coherence");
        brackets.push_back(bracket_of(members[i].second));
        rep.add("cut-member-inhabited[" + std::to_string(i) + "]",
                brackets.back().inhabited);
    }
    const Rational two_cells = members[0].second.grid->step() * 2;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!brackets[i].inhabited || !brackets[j].inhabited) continue;
            Rational allowed =
                members[i].first.value() + members[j].first.value() + two_cells;
            Rational gap = std::max(brackets[i].lo - brackets[j].hi,
                                    brackets[j].lo - brackets[i].hi);
            bool ok = gap <= allowed;
            rep.add("cut-family-coherent[" + std::to_string(i) + "," +
                        std::to_string(j) + "]",
                    ok, ok ? "" : "gap=" + gap.to_string());
        }
    }
    return rep;
}

FiniteCut cut_lim(const CutFamily& members) {
    CheckReport coherence = check_family_coherence(members);
    if (!coherence.all_pass()) {
        for (const auto& r : coherence.results())
            if (!r.pass)
                throw std::domain_error("cut_lim: incoherent family: " + r.name +
                                        (r.witness.empty() ? "" : " " + r.witness));
    }
    const Grid& g = *members[0].second.grid;
    const long n = static_cast<long>(g.size());
    FiniteCut c;
    c.grid = members[0].second.grid;
    c.lower.assign(g.size(), false);
    c.upper.assign(g.size(), false);
    // Shifted membership: q is below the limit if some member at eps puts
    // q + eps + theta below itself.  Only grid-aligned shifts land on the
    // table; others are skipped.
    for (const auto& [eps, member] : members) {
        for (const auto& [theta, other] : members) {
            (void)other;
            Rational shift_cells = (eps.value() + theta.value()) / g.step();
            if (!shift_cells.is_integer()) continue;
            if (shift_cells.numerator() > Int(n)) continue;
            const long off = static_cast<long>(shift_cells.numerator());
            for (long q = 0; q < n; ++q) {
                if (q + off < n && member.lower[q + off]) c.lower[q] = true;
                if (q - off >= 0 && member.upper[q - off]) c.upper[q] = true;
            }
        }
    }
    return c;
}

std::size_t cells_differing(const FiniteCut& a, const FiniteCut& b) {
    require_tables(a, "cells_differing");
    require_tables(b, "cells_differing");
    require_same_grid(a, b, "cells_differing");
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        count += a.lower[i] != b.lower[i];
        count += a.upper[i] != b.upper[i];
    }
    return count;
}

}  // namespace reals
