#pragma once

#include <random>

#include "lnk/modpres.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// The operator algebra on presented modules: Hom, dual, tensor, transpose,
// syzygy, the linkage operator, their versions relative to a semidualizing
// module, stability via the trace ideal, and an isomorphism probe.
// ---------------------------------------------------------------------------

/// First differential of the minimal resolution, as a free-module map.
inline FreeMap minimal_presentation_map(const ModulePres& M) {
    ModulePres Mm = minimalize(M);
    FreeMap d;
    d.R = Mm.R;
    d.tgt = Mm.twists;
    d.cols = Mm.rels;
    for (const auto& c : Mm.rels) d.src.push_back(vec_degree(c, Mm.twists).value());
    return d;
}

/// Hom(M, N) with generator witnesses.  `gens[t]` lives in the cover of
/// Hom(F0, N) = N^{r0}; entry index i*nr + j is the coefficient of
/// (e_i of F0)* tensor (e_j of N's cover).
struct HomResult {
    ModulePres pres;
    ModulePres Mmin, Nmin;
    std::vector<int64_t> cover_twists; // of Hom(F0, N)'s cover
    std::vector<Vec> gens;
};

inline HomResult hom_module(const ModulePres& M, const ModulePres& N) {
    if (!same_qr(M.R, N.R)) throw RingMismatch("hom_module: different rings");
    QR R = M.R;
    RingPtr amb = R->amb;
    ModulePres Mm = minimalize(M);
    ModulePres Nm = minimalize(N);
    const int r0 = Mm.rank();
    const int r1 = static_cast<int>(Mm.rels.size());
    const int nr = Nm.rank();

    // H0 = Hom(F0, N) = N^{r0}, H1 = Hom(F1, N) = N^{r1}
    auto block_module = [&](const std::vector<int64_t>& ftw) {
        ModulePres H{R, {}, {}};
        for (int64_t t : ftw)
            for (int j = 0; j < nr; ++j) H.twists.push_back(Nm.twists[j] - t);
        for (std::size_t b = 0; b < ftw.size(); ++b)
            for (const auto& rho : Nm.rels) {
                Vec v = vec_zero(amb, static_cast<int>(ftw.size()) * nr);
                for (int j = 0; j < nr; ++j) v.c[b * nr + j] = rho.c[j];
                H.rels.push_back(std::move(v));
            }
        return H;
    };
    std::vector<int64_t> f1tw;
    for (const auto& c : Mm.rels) f1tw.push_back(vec_degree(c, Mm.twists).value());
    ModulePres H0 = block_module(Mm.twists);
    ModulePres H1 = block_module(f1tw);

    // composition with d1: e_(i,j) maps to the element with (k,j)-entry
    // equal to the (i,k) presentation entry
    std::vector<Vec> cols;
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < nr; ++j) {
            Vec v = vec_zero(amb, r1 * nr);
            for (int k = 0; k < r1; ++k) v.c[k * nr + j] = Mm.rels[k].c[i];
            cols.push_back(std::move(v));
        }

    HomResult out;
    out.Mmin = Mm;
    out.Nmin = Nm;
    out.cover_twists = H0.twists;
    if (r0 == 0 || nr == 0) {
        out.pres = zero_module(R);
        return out;
    }
    Submodule K = kernel(ModMap{H0, H1, std::move(cols)});
    out.pres = K.pres;
    out.gens = K.gens;
    return out;
}

/// Reads a Hom element (in the Hom(F0,N) cover) as an actual map.
inline ModMap hom_element_as_map(const HomResult& h, const Vec& elem) {
    const int nr = h.Nmin.rank();
    ModMap f;
    f.src = h.Mmin;
    f.tgt = h.Nmin;
    for (int i = 0; i < h.Mmin.rank(); ++i) {
        Vec col = vec_zero(h.Mmin.R->amb, nr);
        for (int j = 0; j < nr; ++j) col.c[j] = elem.c[i * nr + j];
        f.cols.push_back(std::move(col));
    }
    return f;
}

inline HomResult dual(const ModulePres& M) { return hom_module(M, free_module(M.R, {0})); }

inline ModulePres tensor(const ModulePres& M, const ModulePres& N) {
    if (!same_qr(M.R, N.R)) throw RingMismatch("tensor: different rings");
    QR R = M.R;
    RingPtr amb = R->amb;
    ModulePres Mm = minimalize(M);
    ModulePres Nm = minimalize(N);
    const int rm = Mm.rank(), rn = Nm.rank();
    ModulePres T{R, {}, {}};
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) T.twists.push_back(Mm.twists[i] + Nm.twists[j]);
    for (const auto& rho : Mm.rels)
        for (int j = 0; j < rn; ++j) {
            Vec v = vec_zero(amb, rm * rn);
            for (int i = 0; i < rm; ++i) v.c[i * rn + j] = rho.c[i];
            T.rels.push_back(std::move(v));
        }
    for (const auto& rho : Nm.rels)
        for (int i = 0; i < rm; ++i) {
            Vec v = vec_zero(amb, rm * rn);
            for (int j = 0; j < rn; ++j) v.c[i * rn + j] = rho.c[j];
            T.rels.push_back(std::move(v));
        }
    return T;
}

/// Tr M = coker of the dual of the first minimal differential.
inline ModulePres transpose(const ModulePres& M) {
    FreeMap d1 = minimal_presentation_map(M);
    FreeMap t = transpose_map(d1);
    return make_module(M.R, t.tgt, t.cols);
}

/// Omega^i M, the image of the i-th minimal differential.
inline ModulePres syzygy(const ModulePres& M, int i) {
    if (i < 1) throw LnkError("syzygy: index must be >= 1");
    Resolution res = resolve(M, i + 1);
    const FreeMap& di1 = res.steps[static_cast<std::size_t>(i)];
    if (di1.tgt.empty()) return zero_module(M.R);
    return make_module(M.R, di1.tgt, di1.cols);
}

/// The linkage operator: the first syzygy of the transpose.  Only
/// meaningful for stable modules; callers wanting the flag use is_stable
/// alongside.
inline ModulePres lambda(const ModulePres& M) {
    ModulePres tr = transpose(M);
    if (is_zero_module(tr)) return zero_module(M.R);
    ModulePres trm = minimalize(tr);
    if (trm.rels.empty()) return zero_module(M.R);
    return syzygy(trm, 1);
}

/// Alternative route: coker(M* -> P_0*), the image of the dual witnesses
/// inside the dual cover.  Agrees with lambda for stable M.
inline ModulePres lambda_via_cover(const ModulePres& M) {
    HomResult D = dual(M);
    std::vector<int64_t> tw;
    for (int64_t t : D.Mmin.twists) tw.push_back(-t);
    return minimalize(make_module(M.R, tw, D.gens));
}

/// Tr_C M = coker(Hom(d1, C) : Hom(F0, C) -> Hom(F1, C)).
inline ModulePres transpose_C(const ModulePres& M, const ModulePres& C) {
    if (!same_qr(M.R, C.R)) throw RingMismatch("transpose_C: different rings");
    QR R = M.R;
    RingPtr amb = R->amb;
    ModulePres Mm = minimalize(M);
    ModulePres Cm = minimalize(C);
    const int r0 = Mm.rank();
    const int r1 = static_cast<int>(Mm.rels.size());
    const int nc = Cm.rank();
    if (r1 == 0 || nc == 0) return zero_module(R);
    std::vector<int64_t> f1tw;
    for (const auto& c : Mm.rels) f1tw.push_back(vec_degree(c, Mm.twists).value());
    ModulePres H1{R, {}, {}};
    for (int64_t t : f1tw)
        for (int j = 0; j < nc; ++j) H1.twists.push_back(Cm.twists[j] - t);
    for (int k = 0; k < r1; ++k)
        for (const auto& rho : Cm.rels) {
            Vec v = vec_zero(amb, r1 * nc);
            for (int j = 0; j < nc; ++j) v.c[k * nc + j] = rho.c[j];
            H1.rels.push_back(std::move(v));
        }
    // image of Hom(F0, C): columns of the composed map
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < nc; ++j) {
            Vec v = vec_zero(amb, r1 * nc);
            for (int k = 0; k < r1; ++k) v.c[k * nc + j] = Mm.rels[k].c[i];
            H1.rels.push_back(std::move(v));
        }
    return H1;
}

/// lambda_C M = coker(Hom(M,C) -> Hom(F0, C)), via the Hom witnesses.
inline ModulePres lambda_C(const ModulePres& M, const ModulePres& C) {
    HomResult H = hom_module(M, C);
    ModulePres out{M.R, H.cover_twists, H.Nmin.rels};
    // Hom(F0,C) = C^{r0}: its relations are the C-relations per block
    out.rels.clear();
    RingPtr amb = M.R->amb;
    const int nc = H.Nmin.rank();
    for (int i = 0; i < H.Mmin.rank(); ++i)
        for (const auto& rho : H.Nmin.rels) {
            Vec v = vec_zero(amb, H.Mmin.rank() * nc);
            for (int j = 0; j < nc; ++j) v.c[i * nc + j] = rho.c[j];
            out.rels.push_back(std::move(v));
        }
    out.rels.insert(out.rels.end(), H.gens.begin(), H.gens.end());
    return out;
}

/// Trace ideal: the ideal generated by all values of all maps M -> R.
inline Ideal trace_ideal(const ModulePres& M) {
    HomResult D = dual(M);
    Ideal gens;
    for (const auto& g : D.gens)
        for (const auto& f : g.c)
            if (!f.is_zero()) gens.push_back(f);
    return ideal_reduce(M.R, gens);
}

/// Stable = no nonzero free direct summand; graded-locally this is
/// exactly properness of the trace ideal.
inline bool is_stable(const ModulePres& M) { return !ideal_is_unit(M.R, trace_ideal(M)); }

/// cM as a submodule of M.
inline Submodule ideal_times_module(const Ideal& c, const ModulePres& M) {
    ModulePres Mm = minimalize(M);
    std::vector<Vec> gens;
    for (const auto& f : c) {
        if (f.is_zero()) continue;
        for (int i = 0; i < Mm.rank(); ++i)
            gens.push_back(vec_poly_mul(vec_unit(Mm.R->amb, Mm.rank(), i), f));
    }
    return submodule_of(Mm, std::move(gens));
}

/// M / cM.
inline ModulePres quotient_by_ideal(const ModulePres& M, const Ideal& c) {
    ModulePres Mm = minimalize(M);
    ModulePres out = Mm;
    for (const auto& f : c) {
        if (f.is_zero()) continue;
        for (int i = 0; i < Mm.rank(); ++i)
            out.rels.push_back(vec_poly_mul(vec_unit(Mm.R->amb, Mm.rank(), i), f));
    }
    return out;
}

/// Universal pushforward 0 -> M -> F -> M1 -> 0, where F is the dual of
/// the free cover of M* and M -> F evaluates the dual generators.
struct Pushforward {
    std::vector<int64_t> F;
    ModulePres M1;
    ModMap embedding; // M -> F
};

inline Pushforward pushforward(const ModulePres& M) {
    HomResult D = dual(M);
    QR R = M.R;
    RingPtr amb = R->amb;
    const int s = static_cast<int>(D.gens.size());
    std::vector<int64_t> ftw;
    std::vector<int64_t> h0tw;
    for (int64_t t : D.Mmin.twists) h0tw.push_back(-t);
    for (const auto& g : D.gens) ftw.push_back(-vec_degree(g, h0tw).value());
    ModulePres F = free_module(R, ftw);
    ModMap emb;
    emb.src = D.Mmin;
    emb.tgt = F;
    for (int i = 0; i < D.Mmin.rank(); ++i) {
        Vec col = vec_zero(amb, s);
        for (int t = 0; t < s; ++t) col.c[t] = D.gens[t].c[i];
        emb.cols.push_back(std::move(col));
    }
    Pushforward out;
    out.F = ftw;
    out.M1 = minimalize(cokernel(emb));
    out.embedding = std::move(emb);
    return out;
}

/// Strips free direct summands: a dual witness hitting a cover generator
/// in a unit splits off that generator.
inline ModulePres strip_free(const ModulePres& M) {
    ModulePres cur = minimalize(M);
    bool changed = true;
    while (changed && cur.rank() > 0) {
        changed = false;
        HomResult D = dual(cur);
        for (const auto& g : D.gens) {
            for (int i = 0; i < cur.rank() && !changed; ++i) {
                if (g.c[i].constant_coeff() != 0) {
                    ModulePres q = cur;
                    q.rels.push_back(vec_unit(cur.R->amb, cur.rank(), i));
                    cur = minimalize(q);
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Isomorphism probe.
// ---------------------------------------------------------------------------

struct IsoOptions {
    uint64_t seed = 0;
    int budget = 64;
    int twist_window = 0; // 0 = exact-degree comparison only
};

struct IsoVerdict {
    enum class Kind { Isomorphic, DistinguishedBy, Unknown } kind;
    std::string detail;
    int64_t twist = 0; // N was shifted by this amount

    bool isomorphic() const { return kind == Kind::Isomorphic; }
    bool distinguished() const { return kind == Kind::DistinguishedBy; }
};

namespace detail {

inline std::pair<int64_t, int64_t> probe_window(const ModulePres& A, const ModulePres& B) {
    int64_t lo = 0, hi = 0;
    bool any = false;
    for (const auto& m : {A, B})
        for (int64_t t : m.twists) {
            if (!any) lo = hi = t, any = true;
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    return {lo - 1, hi + 8};
}

/// Attempts to certify an isomorphism at one fixed twist.  Hilbert tables
/// are assumed equal already.
inline std::optional<ModMap> probe_at_twist(const ModulePres& Mm, const ModulePres& Nt,
                                            std::mt19937_64& rng, int budget) {
    HomResult H = hom_module(Mm, Nt);
    if (H.gens.empty()) return std::nullopt;
    // span of the degree-0 part: monomial multiples of the witnesses
    std::vector<Vec> deg0;
    const PolyRing& S = *Mm.R->amb;
    for (const auto& g : H.gens) {
        auto d = vec_degree(g, H.cover_twists);
        if (!d || *d > 0) continue;
        for (const auto& m : monomials_of_degree(S, -*d)) deg0.push_back(vec_mono_mul(g, m, 1));
    }
    if (deg0.empty()) return std::nullopt;
    std::uniform_int_distribution<int64_t> cf(0, S.p - 1);
    for (int attempt = 0; attempt < budget; ++attempt) {
        Vec cand = vec_zero(Mm.R->amb, static_cast<int>(H.cover_twists.size()));
        if (attempt < static_cast<int>(deg0.size()))
            cand = deg0[attempt];
        else
            for (const auto& b : deg0) cand = vec_add(cand, vec_scale(b, cf(rng)));
        if (cand.is_zero()) continue;
        ModMap phi = hom_element_as_map(H, cand);
        if (!is_zero_module(cokernel(phi))) continue;
        if (!submodule_is_zero(kernel(phi))) continue;
        return phi;
    }
    return std::nullopt;
}

} // namespace detail

inline IsoVerdict iso_probe(const ModulePres& M, const ModulePres& N, IsoOptions opt = {}) {
    if (!same_qr(M.R, N.R)) throw RingMismatch("iso_probe: different rings");
    ModulePres Mm = minimalize(M);
    ModulePres Nm = minimalize(N);
    const bool mz = Mm.rank() == 0, nz = Nm.rank() == 0;
    if (mz && nz) return {IsoVerdict::Kind::Isomorphic, "both zero", 0};
    if (mz != nz) return {IsoVerdict::Kind::DistinguishedBy, "zero vs nonzero", 0};

    std::vector<int64_t> twists{0};
    for (int w = 1; w <= opt.twist_window; ++w) {
        twists.push_back(w);
        twists.push_back(-w);
    }
    auto [lo, hi] = detail::probe_window(Mm, Nm);
    DimTable hm = hilbert_dims(Mm, lo - opt.twist_window, hi + opt.twist_window);

    std::mt19937_64 rng(opt.seed);
    bool any_hilbert_match = false;
    for (int64_t t : twists) {
        ModulePres Nt = shift_module(Nm, t);
        DimTable hn = hilbert_dims(Nt, lo - opt.twist_window, hi + opt.twist_window);
        bool match = true;
        for (int64_t d = lo; d <= hi && match; ++d)
            if (hm.at(d) != hn.at(d)) match = false;
        if (!match) continue;
        any_hilbert_match = true;
        // second invariant: first Betti numbers
        bool betti_ok = true;
        try {
            auto bm = betti_numbers(resolve(Mm, 2));
            auto bn = betti_numbers(resolve(Nt, 2));
            betti_ok = bm == bn;
        } catch (const CapExceeded&) {
            // inconclusive invariant; fall through to the probe
        }
        if (!betti_ok) {
            if (opt.twist_window == 0) return {IsoVerdict::Kind::DistinguishedBy, "betti", t};
            continue;
        }
        if (auto phi = detail::probe_at_twist(Mm, Nt, rng, opt.budget))
            return {IsoVerdict::Kind::Isomorphic, "witness map", t};
    }
    if (!any_hilbert_match) return {IsoVerdict::Kind::DistinguishedBy, "hilbert", 0};
    return {IsoVerdict::Kind::Unknown, "budget exhausted", 0};
}

} // namespace lnk
