#pragma once

#include "lnk/modops.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// Ext, Tor, depth, dimension, grade, pointwise depth at candidate primes,
// Serre conditions, torsionfreeness, G-dimension machinery relative to a
// semidualizing module, and Auslander-class membership.
// ---------------------------------------------------------------------------

namespace detail {

/// Hom(F, N) for a free module with the given twists: the block module
/// N^{rank F} with cover index i*nr + j.
inline ModulePres hom_free(QR R, const std::vector<int64_t>& ftw, const ModulePres& Nm) {
    RingPtr amb = R->amb;
    const int nr = Nm.rank();
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
}

/// Hom(d, N) : Hom(tgt, N) -> Hom(src, N), contravariant in the free map.
inline ModMap hom_induced(const FreeMap& d, const ModulePres& Nm) {
    RingPtr amb = d.R->amb;
    const int nr = Nm.rank();
    const int r_tgt = static_cast<int>(d.tgt.size());
    const int r_src = static_cast<int>(d.src.size());
    ModMap f;
    f.src = hom_free(d.R, d.tgt, Nm);
    f.tgt = hom_free(d.R, d.src, Nm);
    for (int i = 0; i < r_tgt; ++i)
        for (int j = 0; j < nr; ++j) {
            Vec v = vec_zero(amb, r_src * nr);
            for (int k = 0; k < r_src; ++k) v.c[k * nr + j] = d.cols[k].c[i];
            f.cols.push_back(std::move(v));
        }
    return f;
}

/// F (x) N for a free module: the block module with cover index t*nr + j.
inline ModulePres tensor_free(QR R, const std::vector<int64_t>& ftw, const ModulePres& Nm) {
    RingPtr amb = R->amb;
    const int nr = Nm.rank();
    ModulePres T{R, {}, {}};
    for (int64_t t : ftw)
        for (int j = 0; j < nr; ++j) T.twists.push_back(t + Nm.twists[j]);
    for (std::size_t b = 0; b < ftw.size(); ++b)
        for (const auto& rho : Nm.rels) {
            Vec v = vec_zero(amb, static_cast<int>(ftw.size()) * nr);
            for (int j = 0; j < nr; ++j) v.c[b * nr + j] = rho.c[j];
            T.rels.push_back(std::move(v));
        }
    return T;
}

/// d (x) id_N : src-block -> tgt-block, covariant.
inline ModMap tensor_induced(const FreeMap& d, const ModulePres& Nm) {
    RingPtr amb = d.R->amb;
    const int nr = Nm.rank();
    const int r_tgt = static_cast<int>(d.tgt.size());
    const int r_src = static_cast<int>(d.src.size());
    ModMap f;
    f.src = tensor_free(d.R, d.src, Nm);
    f.tgt = tensor_free(d.R, d.tgt, Nm);
    for (int t = 0; t < r_src; ++t)
        for (int j = 0; j < nr; ++j) {
            Vec v = vec_zero(amb, r_tgt * nr);
            for (int i = 0; i < r_tgt; ++i) v.c[i * nr + j] = d.cols[t].c[i];
            f.cols.push_back(std::move(v));
        }
    return f;
}

} // namespace detail

/// Ext^i(M, N) from i+1 steps of the minimal resolution of M.
inline ModulePres ext(int i, const ModulePres& M, const ModulePres& N) {
    if (i < 0) throw LnkError("ext: negative index");
    if (!same_qr(M.R, N.R)) throw RingMismatch("ext: different rings");
    if (i == 0) return hom_module(M, N).pres;
    ModulePres Nm = minimalize(N);
    Resolution res = resolve(M, i + 1);
    const FreeMap& di = res.steps[static_cast<std::size_t>(i - 1)];
    const FreeMap& di1 = res.steps[static_cast<std::size_t>(i)];
    ModMap f = detail::hom_induced(di, Nm);  // Hom(F_{i-1},N) -> Hom(F_i,N)
    ModMap g = detail::hom_induced(di1, Nm); // Hom(F_i,N) -> Hom(F_{i+1},N)
    return homology(f, g);
}

/// Tor_i(M, N) from the same resolution tensored with N.
inline ModulePres tor(int i, const ModulePres& M, const ModulePres& N) {
    if (i < 0) throw LnkError("tor: negative index");
    if (!same_qr(M.R, N.R)) throw RingMismatch("tor: different rings");
    if (i == 0) return tensor(M, N);
    ModulePres Nm = minimalize(N);
    Resolution res = resolve(M, i + 1);
    const FreeMap& di = res.steps[static_cast<std::size_t>(i - 1)];
    const FreeMap& di1 = res.steps[static_cast<std::size_t>(i)];
    ModMap f = detail::tensor_induced(di1, Nm); // F_{i+1} (x) N -> F_i (x) N
    ModMap g = detail::tensor_induced(di, Nm);  // F_i (x) N -> F_{i-1} (x) N
    return homology(f, g);
}

inline ModulePres ext_R(int i, const ModulePres& M) {
    return ext(i, M, free_module(M.R, {0}));
}

/// The same module regarded over the ambient polynomial ring (the
/// defining relations become honest relations).
inline ModulePres as_ambient(const ModulePres& M) {
    QR S = QuotientRing::make(M.R->amb, {});
    ModulePres out{S, M.twists, M.rels};
    for (const auto& f : M.R->defining)
        for (int i = 0; i < M.rank(); ++i)
            out.rels.push_back(vec_poly_mul(vec_unit(M.R->amb, M.rank(), i), f));
    return out;
}

/// Projective dimension over the ambient ring (always finite).
inline int pd_ambient(const ModulePres& M) {
    const int n = M.R->amb->nvars();
    Resolution res = resolve(as_ambient(M), n + 1);
    auto b = betti_numbers(res);
    int pd = 0;
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
        if (b[j] > 0) pd = j;
    return pd;
}

/// Graded depth with respect to the irrelevant maximal ideal, computed by
/// the graded Auslander-Buchsbaum formula over the ambient ring.  depth
/// is the same measured over R or over S.
inline int depth_module(const ModulePres& M) {
    if (is_zero_module(M)) throw LnkError("depth of the zero module");
    return M.R->amb->nvars() - pd_ambient(M);
}

/// Krull dimension via the leading-term ideal of the annihilator: the
/// largest coordinate subspace missing every leading monomial.  Returns
/// -1 for the zero module.
inline int krull_dim(const ModulePres& M) {
    if (is_zero_module(M)) return -1;
    QR S = QuotientRing::make(M.R->amb, {});
    Ideal J = ann_module(M);
    for (const auto& f : M.R->defining) J.push_back(f);
    GBasis gb = ideal_gb(S, J);
    const int n = M.R->amb->nvars();
    std::vector<std::vector<int>> supports;
    for (const auto& e : gb.els) {
        std::vector<int> s;
        const Expo& m = e.c[0].lt().e;
        for (int i = 0; i < n; ++i)
            if (m[i] > 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& s : supports) {
            bool inside = true;
            for (int v : s)
                if (!(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) { // a leading monomial survives on this subspace
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

struct DepthProfile {
    int depth;
    int dim;
    bool cm;
};

inline DepthProfile depth_profile(const ModulePres& M) {
    int d = depth_module(M);
    int k = krull_dim(M);
    return DepthProfile{d, k, d == k};
}

inline ModulePres ring_as_module(QR R) { return cyclic_module(R, {}); }

inline int ring_depth(QR R) { return depth_module(ring_as_module(R)); }
inline int ring_dim(QR R) { return krull_dim(ring_as_module(R)); }

/// grade(I, M) = min{ i : Ext^i(R/I, M) != 0 }, nullopt when IM = M
/// (all Ext vanish through the search bound).
inline std::optional<int> grade_ideal(const Ideal& I, const ModulePres& M) {
    QR R = M.R;
    ModulePres Q = cyclic_module(R, I);
    const int bound = R->amb->nvars() + 1;
    for (int i = 0; i <= bound; ++i)
        if (!is_zero_module(ext(i, Q, M))) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Candidate primes and pointwise localization data.
// ---------------------------------------------------------------------------

struct PrimeCandidate {
    std::string name;
    Ideal gens; // over R (reduced)
    enum class Prov { corpus_declared, monomial_computed } prov = Prov::corpus_declared;
    bool verified = false;
};

/// Verifies primality for variable-generated ideals: R/p must be a
/// polynomial ring, i.e. every generator is a variable and the defining
/// ideal is contained in the span of those variables.  The zero ideal is
/// never verified here (domain-ness is corpus knowledge).
inline bool verify_monomial_prime(QR R, const Ideal& gens) {
    RingPtr amb = R->amb;
    std::vector<int> vars;
    for (const auto& f : gens) {
        if (f.is_zero()) return false;
        if (f.terms.size() != 1 || f.lt().c != 1) return false;
        const Expo& e = f.lt().e;
        int idx = -1;
        for (int i = 0; i < amb->nvars(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] != 1 || idx >= 0) return false;
            idx = i;
        }
        if (idx < 0) return false;
        vars.push_back(idx);
    }
    if (vars.empty()) return false;
    // defining ideal must vanish modulo the selected variables
    GBasis gb = module_gb(QuotientRing::make(amb, {}), {0}, [&] {
        std::vector<Vec> g;
        for (int v : vars) g.push_back(Vec{{poly_var(amb, v)}});
        return g;
    }());
    for (const auto& f : R->defining)
        if (!gb.member(Vec{{f}})) return false;
    return true;
}

inline PrimeCandidate make_prime(QR R, std::string name, const Ideal& gens,
                                 bool corpus_trusted = false) {
    PrimeCandidate p;
    p.name = std::move(name);
    p.gens = ideal_reduce(R, gens);
    if (verify_monomial_prime(R, p.gens)) {
        p.prov = PrimeCandidate::Prov::monomial_computed;
        p.verified = true;
    } else {
        p.prov = PrimeCandidate::Prov::corpus_declared;
        p.verified = corpus_trusted;
    }
    return p;
}

inline PrimeCandidate irrelevant_ideal(QR R) {
    Ideal m;
    for (int i = 0; i < R->amb->nvars(); ++i) m.push_back(poly_var(R->amb, i));
    return make_prime(R, "m", m);
}

/// depth of M_p as min{ i : ann(Ext^i(R/p, M)) is contained in p };
/// nullopt when p is outside the support of M.
inline std::optional<int> depth_at_prime(const ModulePres& M, const PrimeCandidate& p) {
    if (!p.verified) throw LnkError("depth_at_prime: unverified prime candidate " + p.name);
    QR R = M.R;
    // M_p = 0 unless ann(M) is contained in p; skips the Ext scan entirely
    // for primes outside the support
    if (!ideal_contains(R, p.gens, ann_module(M))) return std::nullopt;
    ModulePres Q = p.gens.empty() ? ring_as_module(R) : cyclic_module(R, p.gens);
    const int bound = R->amb->nvars() + 1;
    for (int i = 0; i <= bound; ++i) {
        ModulePres E = ext(i, Q, M);
        if (is_zero_module(E)) continue;
        if (ideal_contains(R, p.gens, ann_module(E))) return i;
    }
    return std::nullopt;
}

struct SerreReport {
    std::map<std::string, bool> per_prime;
    bool all = true;
};

/// S~_n at each candidate: depth M_p >= min(n, depth R_p); primes
/// outside Supp(M) pass vacuously.
inline SerreReport serre_check(const ModulePres& M, int n,
                               const std::vector<PrimeCandidate>& primes) {
    SerreReport rep;
    ModulePres Rm = ring_as_module(M.R);
    for (const auto& p : primes) {
        auto dm = depth_at_prime(M, p);
        bool ok = true;
        if (dm) {
            auto dr = depth_at_prime(Rm, p);
            int need = dr ? std::min<int>(n, *dr) : n;
            ok = *dm >= need;
        }
        rep.per_prime[p.name] = ok;
        rep.all = rep.all && ok;
    }
    return rep;
}

/// Ext^i(TrM, R) = 0 for 1 <= i <= n.
inline bool n_torsionfree(const ModulePres& M, int n) {
    ModulePres tr = transpose(M);
    for (int i = 1; i <= n; ++i)
        if (!is_zero_module(ext_R(i, tr))) return false;
    return true;
}

/// Same criterion; valid as a syzygy test under finite G-dimension.
inline bool nth_syzygy_test(const ModulePres& M, int n) { return n_torsionfree(M, n); }

// ---------------------------------------------------------------------------
// Semidualizing modules, G_C-dimension, Auslander class.
// ---------------------------------------------------------------------------

/// Expresses a Hom element as a column in the Hom presentation's cover,
/// by lifting through the witness generators.
inline std::optional<Vec> hom_coordinates(const HomResult& H, const Vec& elem) {
    if (H.gens.empty()) return std::nullopt;
    ModulePres H0 = detail::hom_free(H.pres.R, H.Mmin.twists, H.Nmin);
    AugEngine eng(H.pres.R, H0.twists, H.gens, H0.rels);
    auto coeffs = eng.lift(elem);
    if (!coeffs) return std::nullopt;
    Vec col;
    col.c = *coeffs;
    return col;
}

inline int verification_bound(QR R) { return ring_depth(R) + 1; }

/// Bounded semidualizing check: the homothety witness (the identity
/// endomorphism) generates Hom(C,C) freely, and Ext^i(C,C) = 0 in the
/// verified range.
inline bool is_semidualizing(const ModulePres& C, int bound = -1) {
    QR R = C.R;
    if (is_zero_module(C)) return false;
    if (bound < 0) bound = verification_bound(R);
    HomResult E = hom_module(C, C);
    const int r0 = E.Mmin.rank();
    const int nr = E.Nmin.rank();
    Vec id = vec_zero(R->amb, r0 * nr);
    for (int i = 0; i < r0; ++i) id.c[i * nr + i] = poly_const(R->amb, 1);
    auto col = hom_coordinates(E, id);
    if (!col) return false;
    ModMap homothety{free_module(R, {0}), E.pres, {*col}};
    if (!is_zero_module(cokernel(homothety))) return false;
    if (!submodule_is_zero(kernel(homothety))) return false;
    for (int i = 1; i <= bound; ++i)
        if (!is_zero_module(ext(i, C, C))) return false;
    return true;
}

/// Total C-reflexivity, verified in the bounded range with the biduality
/// certified by the isomorphism probe.
inline bool is_totally_C_reflexive(const ModulePres& M, const ModulePres& C, int bound = -1,
                                   uint64_t seed = 0) {
    QR R = M.R;
    if (bound < 0) bound = verification_bound(R);
    if (is_zero_module(M)) return true;
    HomResult Md = hom_module(M, C);
    for (int i = 1; i <= bound; ++i) {
        if (!is_zero_module(ext(i, M, C))) return false;
        if (!is_zero_module(ext(i, Md.pres, C))) return false;
    }
    ModulePres bidual = hom_module(Md.pres, C).pres;
    IsoOptions opt;
    opt.seed = seed;
    return iso_probe(M, bidual, opt).isomorphic();
}

struct GdimResult {
    bool finite;
    int value; // meaningful when finite
    std::string reason;
};

/// G_C-dimension: the last nonvanishing Ext^i(M, C) in the bounded range
/// is the candidate value; finiteness is certified by total reflexivity
/// of the corresponding syzygy.  AB-formula consistency is the caller's
/// cross-check.
inline GdimResult gdim(const ModulePres& M, const ModulePres& C, uint64_t seed = 0) {
    QR R = M.R;
    if (is_zero_module(M)) return {true, 0, "zero module"};
    const int bound = verification_bound(R);
    int g = 0;
    for (int i = 1; i <= bound; ++i)
        if (!is_zero_module(ext(i, M, C))) g = i;
    ModulePres K = (g == 0) ? minimalize(M) : syzygy(M, g);
    if (is_zero_module(K)) return {true, g, "syzygy free"};
    if (is_totally_C_reflexive(K, C, bound, seed))
        return {true, g, "syzygy totally reflexive"};
    return {false, -1, "reflexivity not certified at candidate value"};
}

/// Auslander-class membership: the natural map M -> Hom(C, M (x) C) is
/// an isomorphism (explicit witness) and Tor_i(M,C), Ext^i(C, M (x) C)
/// vanish in the bounded range.
inline bool in_auslander_class(const ModulePres& M, const ModulePres& C, int bound = -1) {
    QR R = M.R;
    RingPtr amb = R->amb;
    if (bound < 0) bound = verification_bound(R);
    if (is_zero_module(M)) return true;
    ModulePres Mm = minimalize(M);
    ModulePres Cm = minimalize(C);
    ModulePres T = tensor(Mm, Cm); // cover index i*nc + j, not re-minimalized
    for (int i = 1; i <= bound; ++i) {
        if (!is_zero_module(tor(i, Mm, Cm))) return false;
        if (!is_zero_module(ext(i, Cm, T))) return false;
    }
    HomResult H = hom_module(Cm, T);
    // natural map: e_i of M goes to (e_j of C maps to e_i (x) e_j)
    const int nc = H.Mmin.rank(); // = Cm.rank()
    const int nt = H.Nmin.rank(); // = T.rank() = Mm.rank()*nc
    if (H.Mmin.rank() != Cm.rank() || H.Nmin.rank() != T.rank())
        throw LnkError("in_auslander_class: cover drift during minimalization");
    std::vector<Vec> cols;
    for (int i = 0; i < Mm.rank(); ++i) {
        Vec elem = vec_zero(amb, nc * nt);
        for (int j = 0; j < nc; ++j) elem.c[j * nt + (i * nc + j)] = poly_const(amb, 1);
        auto col = hom_coordinates(H, elem);
        if (!col) return false;
        cols.push_back(*col);
    }
    ModMap mu{Mm, H.pres, std::move(cols)};
    if (!is_zero_module(cokernel(mu))) return false;
    if (!submodule_is_zero(kernel(mu))) return false;
    return true;
}

/// a is G_K-perfect when grade(a, R) equals gdim(R/a, K).
inline bool gc_perfect(const Ideal& a, const ModulePres& K) {
    QR R = K.R;
    auto g = grade_ideal(a, ring_as_module(R));
    if (!g) return false;
    auto gd = gdim(cyclic_module(R, a), K);
    return gd.finite && gd.value == *g;
}

/// C = Ext^{grade a}(R/a, K), re-presented over R/a.  Theorem-level
/// guarantee: semidualizing over R/a when a is G_K-perfect.
inline ModulePres semidualizing_from_perfect_ideal(const Ideal& a, const ModulePres& K) {
    QR R = K.R;
    auto g = grade_ideal(a, ring_as_module(R));
    if (!g) throw LnkError("semidualizing_from_perfect_ideal: grade undefined (aM = M)");
    ModulePres E = ext(*g, cyclic_module(R, a), K);
    Ideal newdef = R->defining;
    for (const auto& f : a) newdef.push_back(f);
    QR R2 = QuotientRing::make(R->amb, newdef);
    return minimalize(change_ring(E, R2));
}

} // namespace lnk
