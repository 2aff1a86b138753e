#pragma once

#include <cassert>

#include "lnk/groebner.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// Finitely generated graded modules as cokernels of homogeneous matrices
// between twisted free modules.  twists[i] is the degree of the i-th
// generator of the cover; rels are the presentation columns.
// ---------------------------------------------------------------------------

struct ModulePres {
    QR R;
    std::vector<int64_t> twists;
    std::vector<Vec> rels;

    int rank() const { return static_cast<int>(twists.size()); }
};

inline ModulePres make_module(QR R, std::vector<int64_t> twists, std::vector<Vec> rels) {
    for (const auto& v : rels) {
        if (v.rank() != static_cast<int>(twists.size()))
            throw LnkError("make_module: column rank mismatch");
        if (!vec_is_homogeneous(v, twists)) throw LnkError("make_module: inhomogeneous column");
    }
    return ModulePres{std::move(R), std::move(twists), std::move(rels)};
}

inline ModulePres free_module(QR R, std::vector<int64_t> twists) {
    return ModulePres{std::move(R), std::move(twists), {}};
}

inline ModulePres zero_module(QR R) { return ModulePres{std::move(R), {}, {}}; }

/// The residue field k = R/m as a module.
inline ModulePres residue_field(QR R) {
    std::vector<Vec> rels;
    for (int i = 0; i < R->amb->nvars(); ++i) rels.push_back(Vec{{poly_var(R->amb, i)}});
    return ModulePres{std::move(R), {0}, std::move(rels)};
}

/// R/I as a module.
inline ModulePres cyclic_module(QR R, const Ideal& I) {
    std::vector<Vec> rels;
    for (const auto& f : I)
        if (!f.is_zero()) rels.push_back(Vec{{f}});
    return make_module(std::move(R), {0}, std::move(rels));
}

/// An ideal I viewed as a module: generators = the given polys, relations
/// computed as their syzygies over R.
inline ModulePres ideal_as_module(QR R, const Ideal& I) {
    std::vector<Vec> gens;
    std::vector<int64_t> src;
    for (const auto& f : I) {
        if (f.is_zero()) continue;
        gens.push_back(Vec{{f}});
        src.push_back(f.degree());
    }
    if (gens.empty()) return zero_module(R);
    auto syz = rel_syzygies(R, {0}, gens, {});
    return make_module(std::move(R), std::move(src), std::move(syz));
}

/// Degree shift: shift(M, s) places M_{d} in degree d+s.
inline ModulePres shift_module(ModulePres M, int64_t s) {
    for (auto& t : M.twists) t += s;
    return M;
}

inline ModulePres direct_sum(const ModulePres& A, const ModulePres& B) {
    if (!same_qr(A.R, B.R)) throw RingMismatch("direct_sum: different rings");
    ModulePres M{A.R, A.twists, {}};
    M.twists.insert(M.twists.end(), B.twists.begin(), B.twists.end());
    RingPtr amb = A.R->amb;
    for (const auto& v : A.rels) {
        Vec w = v;
        for (int i = 0; i < B.rank(); ++i) w.c.push_back(poly_zero(amb));
        M.rels.push_back(std::move(w));
    }
    for (const auto& v : B.rels) {
        Vec w = vec_zero(amb, A.rank());
        w.c.insert(w.c.end(), v.c.begin(), v.c.end());
        M.rels.push_back(std::move(w));
    }
    return M;
}

/// Reinterpret M over another quotient of the same ambient ring.  The
/// result presents M/JM where J is the extra part of the defining ideal;
/// for J-annihilated M this is M itself.
inline ModulePres change_ring(const ModulePres& M, QR R2) {
    if (M.R->amb != R2->amb) throw RingMismatch("change_ring: different ambient rings");
    GBasis ig = module_gb(R2, std::vector<int64_t>(M.rank(), 0), {});
    ModulePres out{R2, M.twists, {}};
    for (const auto& v : M.rels) {
        Vec w = ig.nf(v);
        if (!w.is_zero()) out.rels.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minimal generators and minimal presentations.
// ---------------------------------------------------------------------------

/// Reduces a generating set of a submodule of a twisted free module to a
/// minimal one: entries normalized mod the defining ideal, redundant
/// generators (those in the span of the rest) dropped, ascending degree.
inline std::vector<Vec> minimal_generators(QR R, const std::vector<int64_t>& twists,
                                           const std::vector<Vec>& gens) {
    GBasis ig = module_gb(R, twists, {});
    std::vector<Vec> cur;
    for (const auto& g : gens) {
        Vec w = ig.nf(g);
        if (!w.is_zero()) cur.push_back(std::move(w));
    }
    std::stable_sort(cur.begin(), cur.end(), [&](const Vec& a, const Vec& b) {
        return vec_degree(a, twists).value() < vec_degree(b, twists).value();
    });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::vector<Vec> rest;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i) rest.push_back(cur[j]);
            GBasis gb = module_gb(R, twists, rest);
            if (gb.member(cur[i])) {
                cur.erase(cur.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return cur;
}

/// Minimal presentation: no presentation entry has a constant term, and
/// the relations minimally generate.  Idempotent up to column order.
inline ModulePres minimalize(const ModulePres& M) {
    QR R = M.R;
    RingPtr amb = R->amb;
    std::vector<int64_t> twists = M.twists;
    GBasis ig = module_gb(R, std::vector<int64_t>(M.rank(), 0), {});
    std::vector<Vec> cols;
    for (const auto& v : M.rels) {
        Vec w = R->defining.empty() ? v : ig.nf(v);
        if (!w.is_zero()) cols.push_back(std::move(w));
    }

    // pivot away unit (degree-0, hence constant) entries
    while (true) {
        int pj = -1, pi = -1;
        for (std::size_t j = 0; j < cols.size() && pj < 0; ++j)
            for (int i = 0; i < static_cast<int>(twists.size()); ++i) {
                int64_t c0 = cols[j].c[i].constant_coeff();
                if (c0 != 0) {
                    pj = static_cast<int>(j);
                    pi = i;
                    break;
                }
            }
        if (pj < 0) break;
        int64_t inv = fp::inv(cols[pj].c[pi].constant_coeff(), amb->p);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (static_cast<int>(k) == pj) continue;
            const Poly& a = cols[k].c[pi];
            if (a.is_zero()) continue;
            cols[k] = vec_sub(cols[k], vec_poly_mul(cols[pj], poly_scale(a, inv)));
        }
        cols.erase(cols.begin() + pj);
        for (auto& v : cols) v.c.erase(v.c.begin() + pi);
        twists.erase(twists.begin() + pi);
    }

    std::vector<Vec> mins = minimal_generators(R, twists, cols);
    return ModulePres{R, std::move(twists), std::move(mins)};
}

inline bool is_zero_module(const ModulePres& M) {
    if (M.rank() == 0) return true;
    GBasis gb = module_gb(M.R, M.twists, M.rels);
    for (int i = 0; i < M.rank(); ++i)
        if (!gb.member(vec_unit(M.R->amb, M.rank(), i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Maps of presented modules (given on covers) and subquotients.
// ---------------------------------------------------------------------------

/// A map between free modules; also the data of a map of presented
/// modules when read on covers.  cols[j] = image of basis vector j.
struct FreeMap {
    QR R;
    std::vector<int64_t> src, tgt;
    std::vector<Vec> cols;
};

inline FreeMap transpose_map(const FreeMap& d) {
    FreeMap t;
    t.R = d.R;
    for (auto v : d.tgt) t.src.push_back(-v);
    for (auto v : d.src) t.tgt.push_back(-v);
    const int r0 = static_cast<int>(d.tgt.size());
    const int r1 = static_cast<int>(d.src.size());
    for (int i = 0; i < r0; ++i) {
        Vec col = vec_zero(d.R->amb, r1);
        for (int j = 0; j < r1; ++j) col.c[j] = d.cols[j].c[i];
        t.cols.push_back(std::move(col));
    }
    return t;
}

/// A map src -> tgt of presented modules, specified by images of the
/// cover basis vectors of src inside the cover of tgt.
struct ModMap {
    ModulePres src, tgt;
    std::vector<Vec> cols;
};

/// Checks the map is well defined: relations of src land in relations of tgt.
inline bool map_well_defined(const ModMap& f) {
    GBasis gb = module_gb(f.tgt.R, f.tgt.twists, f.tgt.rels);
    for (const auto& r : f.src.rels) {
        Vec img = vec_zero(f.tgt.R->amb, f.tgt.rank());
        for (int j = 0; j < f.src.rank(); ++j)
            img = vec_add(img, vec_poly_mul(f.cols[j], r.c[j]));
        if (!gb.member(img)) return false;
    }
    return true;
}

inline Vec apply_map(const ModMap& f, const Vec& v) {
    Vec img = vec_zero(f.tgt.R->amb, f.tgt.rank());
    for (int j = 0; j < f.src.rank(); ++j) img = vec_add(img, vec_poly_mul(f.cols[j], v.c[j]));
    return img;
}

inline ModulePres cokernel(const ModMap& f) {
    ModulePres out{f.tgt.R, f.tgt.twists, f.tgt.rels};
    out.rels.insert(out.rels.end(), f.cols.begin(), f.cols.end());
    return out;
}

/// A submodule of an ambient presented module: generators inside the
/// ambient cover plus an intrinsic presentation.
struct Submodule {
    ModulePres ambient;
    std::vector<Vec> gens; // in ambient cover
    ModulePres pres;       // intrinsic presentation (cover = one gen per entry)
};

inline Submodule submodule_of(const ModulePres& M, std::vector<Vec> gens) {
    std::vector<Vec> mg = minimal_generators(M.R, M.twists, gens);
    std::vector<int64_t> src;
    for (const auto& g : mg) src.push_back(vec_degree(g, M.twists).value());
    auto rels = rel_syzygies(M.R, M.twists, mg, M.rels);
    Submodule s;
    s.ambient = M;
    s.gens = std::move(mg);
    s.pres = make_module(M.R, std::move(src), std::move(rels));
    return s;
}

/// Kernel of a map of presented modules.
inline Submodule kernel(const ModMap& f) {
    std::vector<Vec> pre = rel_syzygies(f.src.R, f.tgt.twists, f.cols, f.tgt.rels);
    // pre-images are coefficient vectors in the cover of src
    return submodule_of(f.src, std::move(pre));
}

inline bool submodule_is_zero(const Submodule& s) {
    GBasis gb = module_gb(s.ambient.R, s.ambient.twists, s.ambient.rels);
    for (const auto& g : s.gens)
        if (!gb.member(g)) return false;
    return true;
}

/// Homology ker(g)/im(f) of a pair with g(f(x)) = 0 in the middle module.
inline ModulePres homology(const ModMap& f, const ModMap& g) {
    Submodule K = kernel(g);
    std::vector<Vec> denom = f.cols;
    denom.insert(denom.end(), g.src.rels.begin(), g.src.rels.end());
    auto rels = rel_syzygies(g.src.R, g.src.twists, K.gens, denom);
    std::vector<int64_t> src;
    for (const auto& v : K.gens) src.push_back(vec_degree(v, g.src.twists).value());
    return minimalize(make_module(g.src.R, std::move(src), std::move(rels)));
}

/// ann(M) = intersection over cover generators of (relations : e_j).
inline Ideal ann_module(const ModulePres& M) {
    QR R = M.R;
    if (M.rank() == 0) return Ideal{poly_const(R->amb, 1)};
    std::optional<Ideal> acc;
    for (int j = 0; j < M.rank(); ++j) {
        auto syz = rel_syzygies(R, M.twists, {vec_unit(R->amb, M.rank(), j)}, M.rels);
        Ideal part;
        for (const auto& s : syz) part.push_back(s.c[0]);
        part = ideal_reduce(R, part);
        acc = acc ? ideal_intersection(R, *acc, part) : part;
    }
    return *acc;
}

// ---------------------------------------------------------------------------
// Resolutions.
// ---------------------------------------------------------------------------

struct Resolution {
    std::vector<int64_t> cover;     // F0 of the minimal presentation
    std::vector<FreeMap> steps;     // d_1 .. d_k, d_1 : F_1 -> F_0
    bool complete = false;          // true when the last syzygy module was 0
};

/// k steps of the minimal graded free resolution, minimizing the
/// generating set after every syzygy step.
inline Resolution resolve(const ModulePres& M, int k) {
    if (k < 1) throw LnkError("resolve: step count must be >= 1");
    QR R = M.R;
    ModulePres Mm = minimalize(M);
    Resolution res;
    res.cover = Mm.twists;
    std::vector<int64_t> tgt = Mm.twists;
    std::vector<Vec> cols = Mm.rels;
    for (int step = 0; step < k; ++step) {
        FreeMap d;
        d.R = R;
        d.tgt = tgt;
        d.cols = cols;
        for (const auto& c : cols) d.src.push_back(vec_degree(c, tgt).value());
        res.steps.push_back(d);
        if (cols.empty()) {
            res.complete = true;
            // pad remaining steps with zero maps from the zero free module
            for (int s = step + 1; s < k; ++s) {
                FreeMap z;
                z.R = R;
                z.tgt = d.src; // empty
                res.steps.push_back(z);
            }
            break;
        }
        std::vector<Vec> syz = rel_syzygies(R, tgt, cols, {});
        std::vector<Vec> mins = minimal_generators(R, d.src, syz);
        for (const auto& v : mins)
            for (const auto& f : v.c)
                if (f.constant_coeff() != 0)
                    throw LnkError("resolve: non-minimal syzygy step (unit entry)");
        tgt = d.src;
        cols = std::move(mins);
        if (cols.empty()) {
            // next differential is zero: record it and stop
            if (step + 1 < k) {
                FreeMap z;
                z.R = R;
                z.tgt = tgt;
                res.steps.push_back(z);
                for (int s = step + 2; s < k; ++s) {
                    FreeMap z2;
                    z2.R = R;
                    res.steps.push_back(z2);
                }
            }
            res.complete = true;
            break;
        }
    }
    return res;
}

inline std::vector<int64_t> betti_numbers(const Resolution& r) {
    std::vector<int64_t> b;
    b.push_back(static_cast<int64_t>(r.cover.size()));
    for (const auto& d : r.steps) b.push_back(static_cast<int64_t>(d.src.size()));
    return b;
}

// ---------------------------------------------------------------------------
// Graded dimension counts.
// ---------------------------------------------------------------------------

struct DimTable {
    int64_t lo = 0, hi = -1;
    std::map<int64_t, int64_t> dims;

    int64_t at(int64_t d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    bool all_zero() const {
        for (const auto& [d, v] : dims)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const DimTable& o) const { return lo == o.lo && hi == o.hi && dims == o.dims; }
};

namespace detail {

/// All exponent vectors of the given weighted degree.
inline void enumerate_monomials(const PolyRing& R, int var, int64_t remaining, Expo& cur,
                                std::vector<Expo>& out) {
    if (var == R.nvars()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (var == R.nvars() - 1) {
        if (remaining >= 0 && remaining % R.weights[var] == 0) {
            cur[var] = static_cast<int32_t>(remaining / R.weights[var]);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    for (int64_t e = 0; e * R.weights[var] <= remaining; ++e) {
        cur[var] = static_cast<int32_t>(e);
        enumerate_monomials(R, var + 1, remaining - e * R.weights[var], cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Expo> monomials_of_degree(const PolyRing& R, int64_t d) {
    std::vector<Expo> out;
    if (d < 0) return out;
    Expo cur(R.nvars(), 0);
    enumerate_monomials(R, 0, d, cur, out);
    return out;
}

} // namespace detail

/// dim_k(M_d) over a window, counted as standard monomials off the lead
/// terms of the presentation Groebner basis.
inline DimTable hilbert_dims(const ModulePres& M, int64_t lo, int64_t hi) {
    DimTable t;
    t.lo = lo;
    t.hi = hi;
    if (M.rank() == 0) {
        for (int64_t d = lo; d <= hi; ++d) t.dims[d] = 0;
        return t;
    }
    GBasis gb = module_gb(M.R, M.twists, M.rels);
    std::vector<std::vector<Expo>> leads(M.rank());
    for (const auto& e : gb.els) {
        auto l = *vec_lead(e, gb.ord);
        leads[l.comp].push_back(l.mono);
    }
    const PolyRing& S = *M.R->amb;
    for (int64_t d = lo; d <= hi; ++d) {
        int64_t count = 0;
        for (int i = 0; i < M.rank(); ++i) {
            for (const auto& m : detail::monomials_of_degree(S, d - M.twists[i])) {
                bool divisible = false;
                for (const auto& l : leads[i])
                    if (mono_divides(l, m)) {
                        divisible = true;
                        break;
                    }
                if (!divisible) ++count;
            }
        }
        t.dims[d] = count;
    }
    return t;
}

} // namespace lnk
