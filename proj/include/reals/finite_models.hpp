#pragma once

// Finite combinatorial models for the order-theoretic lemmas.
//
// Subtypes of an n-element carrier are bitmasks; maps between carriers
// are image tables.  Everything is small enough to check exhaustively,
// so these checkers certify the lemmas on all instances up to the stated
// sizes rather than sampling them.

#include "reals/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reals {

// Subtype of a carrier {0, ..., n-1} as a membership mask.
struct FiniteSubtype {
    unsigned n = 0;
    std::uint32_t bits = 0;

    bool contains(unsigned e) const { return (bits >> e) & 1u; }
    bool subset_of(const FiniteSubtype& other) const {
        return n == other.n && (bits & ~other.bits) == 0;
    }
};

// Map between finite carriers {0..dom-1} -> {0..cod-1}.
struct FiniteMap {
    unsigned dom = 0;
    unsigned cod = 0;
    std::vector<unsigned> img;  // img.size() == dom, entries < cod

    bool injective() const;
    bool operator==(const FiniteMap& rhs) const = default;
};

// outer(inner(x)); requires inner.cod == outer.dom.
FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner);
FiniteMap identity_map(unsigned n);

// Poset laws of inclusion on all 2^n subtypes, exhaustively: reflexivity,
// antisymmetry, transitivity.  n <= 5.
CheckReport check_subtype_poset(unsigned n);

// Same laws on an explicit relation table over 2^n subtypes; the
// mutation tests feed perturbed tables through this to prove the checker
// catches them.
CheckReport check_poset_laws(unsigned n, const std::vector<std::vector<bool>>& rel);

// Join/meet by the pointwise formulas, validated against the full
// least-upper-bound / greatest-lower-bound obligations over every
// candidate subtype.  Exhaustive over all families for n <= 3; `samples`
// seeded random families for n == 4.
CheckReport check_joins_meets(unsigned n, unsigned samples, std::uint64_t seed);

std::uint32_t join_of(const std::vector<std::uint32_t>& family);
std::uint32_t meet_of(const std::vector<std::uint32_t>& family, unsigned n);

// Empty string when candidate is exactly the least upper bound (resp.
// greatest lower bound) of the family within carrier n; a witness
// otherwise.
std::string verify_join(unsigned n, const std::vector<std::uint32_t>& family,
                        std::uint32_t candidate);
std::string verify_meet(unsigned n, const std::vector<std::uint32_t>& family,
                        std::uint32_t candidate);

// The embedding triangle over a common ambient carrier A: given
// f: D -> C, g: C -> D and injections iC: C -> A, iD: D -> A with
// iC(f(x)) == iD(x) and iD(g(y)) == iC(y), the maps f and g must be
// mutually inverse.  Shapes that do not compose are rejected; instances
// whose hypotheses fail pass vacuously.
CheckReport check_triangle(const FiniteMap& f, const FiniteMap& g,
                           const FiniteMap& iC, const FiniteMap& iD);

// Exhausts every instance with |C|, |D| <= max_side and |A| <= max_amb
// and asserts no counterexample to the triangle conclusion exists.
CheckReport check_triangle_lemma(unsigned max_side, unsigned max_amb);

}  // namespace reals
