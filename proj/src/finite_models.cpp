#include "reals/finite_models.hpp"

#include <random>
#include <stdexcept>

namespace reals {

bool FiniteMap::injective() const {
    std::vector<bool> seen(cod, false);
    for (unsigned v : img) {
        if (v >= cod) return false;
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner) {
    if (inner.cod != outer.dom)
        throw std::invalid_argument("compose: shapes do not match");
    FiniteMap out;
    out.dom = inner.dom;
    out.cod = outer.cod;
    out.img.reserve(inner.dom);
    for (unsigned v : inner.img) out.img.push_back(outer.img.at(v));
    return out;
}

FiniteMap identity_map(unsigned n) {
    FiniteMap f;
    f.dom = f.cod = n;
    f.img.resize(n);
    for (unsigned i = 0; i < n; ++i) f.img[i] = i;
    return f;
}

namespace {

std::string mask_text(std::uint32_t m, unsigned n) {
    std::string s = "{";
    bool first = true;
    for (unsigned e = 0; e < n; ++e) {
        if (!((m >> e) & 1u)) continue;
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

}  // namespace

CheckReport check_poset_laws(unsigned n, const std::vector<std::vector<bool>>& rel) {
    const std::uint32_t count = 1u << n;
    if (rel.size() != count)
        throw std::invalid_argument("check_poset_laws: relation table size mismatch");
    CheckReport rep;

    bool ok = true;
    std::string witness;
    for (std::uint32_t p = 0; p < count && ok; ++p)
        if (!rel[p][p]) {
            ok = false;
            witness = mask_text(p, n);
        }
    rep.add("poset-reflexive", ok, witness);

    ok = true;
    witness.clear();
    for (std::uint32_t p = 0; p < count && ok; ++p)
        for (std::uint32_t q = 0; q < count && ok; ++q)
            if (p != q && rel[p][q] && rel[q][p]) {
                ok = false;
                witness = mask_text(p, n) + " vs " + mask_text(q, n);
            }
    rep.add("poset-antisymmetric", ok, witness);

    ok = true;
    witness.clear();
    for (std::uint32_t p = 0; p < count && ok; ++p)
        for (std::uint32_t q = 0; q < count && ok; ++q) {
            if (!rel[p][q]) continue;
            for (std::uint32_t r = 0; r < count; ++r)
                if (rel[q][r] && !rel[p][r]) {
                    ok = false;
                    witness = mask_text(p, n) + " <= " + mask_text(q, n) + " <= " +
                              mask_text(r, n);
                    break;
                }
            if (!ok) break;
        }
    rep.add("poset-transitive", ok, witness);
    return rep;
}

CheckReport check_subtype_poset(unsigned n) {
    if (n > 5) throw std::invalid_argument("check_subtype_poset: n must be <= 5");
    const std::uint32_t count = 1u << n;
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count));
    for (std::uint32_t p = 0; p < count; ++p)
        for (std::uint32_t q = 0; q < count; ++q)
            rel[p][q] = FiniteSubtype{n, p}.subset_of(FiniteSubtype{n, q});
    return check_poset_laws(n, rel);
}

std::uint32_t join_of(const std::vector<std::uint32_t>& family) {
    std::uint32_t j = 0;
    for (std::uint32_t m : family) j |= m;
    return j;
}

std::uint32_t meet_of(const std::vector<std::uint32_t>& family, unsigned n) {
    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t m = full;
    for (std::uint32_t f : family) m &= f;
    return m;
}

std::string verify_join(unsigned n, const std::vector<std::uint32_t>& family,
                        std::uint32_t candidate) {
    const std::uint32_t count = 1u << n;
    for (std::uint32_t m : family)
        if ((m & ~candidate) != 0)
            return "not an upper bound of " + mask_text(m, n);
    for (std::uint32_t x = 0; x < count; ++x) {
        bool upper = true;
        for (std::uint32_t m : family)
            if ((m & ~x) != 0) {
                upper = false;
                break;
            }
        if (upper && (candidate & ~x) != 0)
            return "not least: " + mask_text(x, n) + " is a smaller upper bound";
    }
    return "";
}

std::string verify_meet(unsigned n, const std::vector<std::uint32_t>& family,
                        std::uint32_t candidate) {
    const std::uint32_t count = 1u << n;
    for (std::uint32_t m : family)
        if ((candidate & ~m) != 0)
            return "not a lower bound of " + mask_text(m, n);
    for (std::uint32_t x = 0; x < count; ++x) {
        bool lower = true;
        for (std::uint32_t m : family)
            if ((x & ~m) != 0) {
                lower = false;
                break;
            }
        if (lower && (x & ~candidate) != 0)
            return "not greatest: " + mask_text(x, n) + " is a larger lower bound";
    }
    return "";
}

namespace {

// All families over carrier n checked against the bound obligations.
// Returns a witness for the first failure, empty otherwise.
std::string sweep_families(unsigned n, const std::vector<std::vector<std::uint32_t>>& fams) {
    for (const auto& fam : fams) {
        std::string w = verify_join(n, fam, join_of(fam));
        if (!w.empty()) return "join of family size " + std::to_string(fam.size()) + ": " + w;
        w = verify_meet(n, fam, meet_of(fam, n));
        if (!w.empty()) return "meet of family size " + std::to_string(fam.size()) + ": " + w;
    }
    return "";
}

}  // namespace

CheckReport check_joins_meets(unsigned n, unsigned samples, std::uint64_t seed) {
    CheckReport rep;
    if (n <= 3) {
        // every family = every subset of the 2^n subtypes, empty included
        const std::uint32_t count = 1u << n;
        const std::uint32_t family_count = 1u << count;
        std::vector<std::vector<std::uint32_t>> fams;
        fams.reserve(family_count);
        for (std::uint32_t sel = 0; sel < family_count; ++sel) {
            std::vector<std::uint32_t> fam;
            for (std::uint32_t m = 0; m < count; ++m)
                if ((sel >> m) & 1u) fam.push_back(m);
            fams.push_back(std::move(fam));
        }
        std::string w = sweep_families(n, fams);
        rep.add("join-meet-exhaustive", w.empty(),
                w.empty() ? "families=" + std::to_string(family_count) : w);
        return rep;
    }
    if (n > 5) throw std::invalid_argument("check_joins_meets: n must be <= 5");
    const std::uint32_t count = 1u << n;
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint32_t>> fams;
    fams.reserve(samples + 2);
    fams.push_back({});                      // join = empty, meet = full
    fams.push_back({0u, count - 1});
    for (unsigned i = 0; i + 2 < samples + 2; ++i) {
        std::uint32_t size = static_cast<std::uint32_t>(rng() % (count / 2)) + 1;
        std::vector<std::uint32_t> fam;
        fam.reserve(size);
        for (std::uint32_t j = 0; j < size; ++j)
            fam.push_back(static_cast<std::uint32_t>(rng() % count));
        fams.push_back(std::move(fam));
    }
    std::string w = sweep_families(n, fams);
    rep.add("join-meet-sampled", w.empty(),
            w.empty() ? "families=" + std::to_string(fams.size()) : w);
    return rep;
}

CheckReport check_triangle(const FiniteMap& f, const FiniteMap& g,
                           const FiniteMap& iC, const FiniteMap& iD) {
    // f: D -> C, g: C -> D, iC: C -> A, iD: D -> A
    const unsigned C = f.cod, D = f.dom;
    if (g.dom != C || g.cod != D || iC.dom != C || iD.dom != D || iC.cod != iD.cod ||
        f.img.size() != f.dom || g.img.size() != g.dom || iC.img.size() != iC.dom ||
        iD.img.size() != iD.dom)
        throw std::invalid_argument("check_triangle: shapes do not compose");

    CheckReport rep;
    bool hyp = iC.injective() && iD.injective() && compose(iC, f) == iD &&
               compose(iD, g) == iC;
    if (!hyp) {
        rep.add("triangle-vacuous", true, "hypotheses not satisfied");
        return rep;
    }
    bool left = compose(g, f) == identity_map(D);
    bool right = compose(f, g) == identity_map(C);
    rep.add("triangle-inverse-left", left, left ? "" : "g(f(x)) is not the identity");
    rep.add("triangle-inverse-right", right, right ? "" : "f(g(y)) is not the identity");
    return rep;
}

namespace {

// Enumerates all maps dom -> cod in lexicographic image order.
std::vector<FiniteMap> all_maps(unsigned dom, unsigned cod) {
    std::vector<FiniteMap> out;
    if (dom == 0) {
        out.push_back({0, cod, {}});
        return out;
    }
    if (cod == 0) return out;  // no map from a nonempty domain into nothing
    FiniteMap f;
    f.dom = dom;
    f.cod = cod;
    f.img.assign(dom, 0);
    while (true) {
        out.push_back(f);
        unsigned i = 0;
        while (i < dom && f.img[i] + 1 == cod) f.img[i++] = 0;
        if (i == dom) break;
        ++f.img[i];
    }
    return out;
}

std::vector<FiniteMap> injective_maps(unsigned dom, unsigned cod) {
    std::vector<FiniteMap> out;
    for (auto& f : all_maps(dom, cod))
        if (f.injective()) out.push_back(std::move(f));
    return out;
}

}  // namespace

CheckReport check_triangle_lemma(unsigned max_side, unsigned max_amb) {
    CheckReport rep;
    unsigned long long instances = 0, proven = 0;
    std::string witness;
    for (unsigned C = 0; C <= max_side && witness.empty(); ++C)
        for (unsigned D = 0; D <= max_side && witness.empty(); ++D)
            for (unsigned A = 0; A <= max_amb && witness.empty(); ++A) {
                auto iCs = injective_maps(C, A);
                auto iDs = injective_maps(D, A);
                auto fs = all_maps(D, C);
                auto gs = all_maps(C, D);
                for (const auto& iC : iCs)
                    for (const auto& iD : iDs)
                        for (const auto& f : fs) {
                            // iC(f(x)) == iD(x) prunes g-independent misses early
                            if (!(compose(iC, f) == iD)) continue;
                            for (const auto& g : gs) {
                                if (!(compose(iD, g) == iC)) continue;
                                ++instances;
                                if (!(compose(g, f) == identity_map(D)) ||
                                    !(compose(f, g) == identity_map(C))) {
                                    witness = "C=" + std::to_string(C) +
                                              " D=" + std::to_string(D) +
                                              " A=" + std::to_string(A);
                                    break;
                                }
                                ++proven;
                            }
                            if (!witness.empty()) break;
                        }
            }
    rep.add("triangle-lemma", witness.empty(),
            witness.empty() ? "instances=" + std::to_string(proven) : witness);
    (void)instances;
    return rep;
}

}  // namespace reals
