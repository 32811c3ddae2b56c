#pragma once

// Finite Dedekind-style cut oracle.
//
// A FiniteCut restricts a cut of the line to a uniform rational grid:
// boolean tables saying which grid points are provably below (lower) and
// provably above (upper) the value.  Everything here is finite and
// exhaustively checkable, which makes the oracle an independent witness
// for the kernel's arithmetic: operations on cuts are defined by
// existential search over grid points, not by approximation, and the two
// results must agree up to documented boundary cells.

#include "reals/rational.hpp"
#include "reals/real.hpp"
#include "reals/report.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace reals {

// Uniform ascending grid lo, lo+step, ..., hi.  Points are computed on
// demand; index_of answers exact membership.
class Grid {
public:
    static std::shared_ptr<const Grid> uniform(const Rational& lo, const Rational& hi,
                                               const PositiveRational& step);
    // Dyadic window with step 2^-m.
    static std::shared_ptr<const Grid> dyadic(const Rational& lo, const Rational& hi,
                                              unsigned m);

    std::size_t size() const { return n_; }
    const Rational& low() const { return lo_; }
    const Rational& high() const { return hi_; }
    const Rational& step() const { return step_; }

    Rational point(std::size_t i) const;
    std::optional<std::size_t> index_of(const Rational& q) const;

    // hi == -lo, as needed by negation/absolute value tables
    bool symmetric() const { return hi_ == -lo_; }

    bool operator==(const Grid& rhs) const {
        return lo_ == rhs.lo_ && hi_ == rhs.hi_ && step_ == rhs.step_;
    }

private:
    Grid(Rational lo, Rational hi, Rational step, std::size_t n)
        : lo_(std::move(lo)), hi_(std::move(hi)), step_(std::move(step)), n_(n) {}

    Rational lo_, hi_, step_;
    std::size_t n_;
};

using GridPtr = std::shared_ptr<const Grid>;

struct FiniteCut {
    GridPtr grid;
    std::vector<bool> lower;  // grid point provably below the value
    std::vector<bool> upper;  // grid point provably above the value
};

// Exhaustive cut laws on the grid: inhabitedness of both tables,
// roundedness (lower downward closed, upper upward closed along the
// grid), transitivity (every lower point strictly precedes every upper
// point), locatedness (for grid points q < r, q is lower or r is upper).
// Counterexample cells are reported as witnesses.
CheckReport check_is_cut(const FiniteCut& c);

// Cut of a Real on a grid, probing located once per boundary at a fine
// probe (default step / 2^8).  At most one grid point per side stays
// unclassified around the true value.
FiniteCut cut_of_real(const Real& u, const GridPtr& grid,
                      std::optional<PositiveRational> probe = std::nullopt);

// Exact-comparison cut of a rational: lower[q] = (q < v), upper[r] = (v < r).
// The test oracle the probe-based tables are held against.
FiniteCut cut_of_rational(const Rational& v, const GridPtr& grid);

// Sum cut by existential search over grid pairs:
// lower[q] iff some grid s, t with s + t = q have lower_a[s] and lower_b[t].
// Requires both cuts on the same grid.
FiniteCut cut_add(const FiniteCut& a, const FiniteCut& b);

// Mirror cut: lower[q] = upper_a[-q].  Requires a symmetric grid.
FiniteCut cut_neg(const FiniteCut& a);

// lower[q] = lower_a[q] or upper_a[-q]; upper[r] = upper_a[r] and lower_a[-r].
// Requires a symmetric grid.
FiniteCut cut_abs(const FiniteCut& a);

// An eps-indexed finite family of cuts, all on one grid.
using CutFamily = std::vector<std::pair<PositiveRational, FiniteCut>>;

// Brackets of consecutive members must overlap up to eps_i + eps_j plus
// two grid cells; reports one line per pair.
CheckReport check_family_coherence(const CutFamily& members);

// Limit cut: lower[q] iff some member at eps has lower[q + eps + theta]
// for eps, theta drawn from the family's index set (grid-aligned shifts
// only), and dually for upper.  Throws std::domain_error on an
// incoherent family.
FiniteCut cut_lim(const CutFamily& members);

// Hamming distance between the two tables; the "k boundary cells"
// currency of every oracle-vs-kernel comparison.
std::size_t cells_differing(const FiniteCut& a, const FiniteCut& b);

}  // namespace reals
