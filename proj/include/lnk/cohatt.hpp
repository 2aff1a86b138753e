#pragma once

#include "lnk/homlat.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// Graded local cohomology at the irrelevant ideal via duality over the
// ambient polynomial ring, canonical modules, associated primes, and
// attached primes of local cohomology.
// ---------------------------------------------------------------------------

/// The duality partner: Ext^{n-i}_S(M, S(-n)) presented over R.  Its
/// graded dual (degree negation) is H^i_m(M).
inline ModulePres cohomology_dual(const ModulePres& M, int i) {
    QR R = M.R;
    const int n = R->amb->nvars();
    if (i < 0 || i > n) return zero_module(R);
    QR S = QuotientRing::make(R->amb, {});
    ModulePres E = ext(n - i, as_ambient(M), free_module(S, {n}));
    return minimalize(change_ring(E, R));
}

inline bool local_cohomology_nonzero(const ModulePres& M, int i) {
    return !is_zero_module(cohomology_dual(M, i));
}

/// dims of H^i_m(M) on a degree window.
inline DimTable local_cohomology(const ModulePres& M, int i, int64_t lo, int64_t hi) {
    DimTable t;
    t.lo = lo;
    t.hi = hi;
    ModulePres E = cohomology_dual(M, i);
    DimTable ed = hilbert_dims(E, -hi, -lo);
    for (int64_t d = lo; d <= hi; ++d) t.dims[d] = ed.at(-d);
    return t;
}

struct CohomologyTable {
    int depth = 0, dim = 0;
    std::map<int, DimTable> h; // cohomological index -> graded dims
};

inline CohomologyTable cohomology_table(const ModulePres& M, int64_t lo, int64_t hi) {
    CohomologyTable t;
    auto pr = depth_profile(M);
    t.depth = pr.depth;
    t.dim = pr.dim;
    const int n = M.R->amb->nvars();
    for (int i = 0; i <= n; ++i) t.h[i] = local_cohomology(M, i, lo, hi);
    return t;
}

/// c(M) = sup{ i < dim M : H^i_m(M) != 0 }, nullopt for CM modules.
inline std::optional<int> c_value(const ModulePres& M) {
    int d = krull_dim(M);
    std::optional<int> best;
    for (int i = 0; i < d; ++i)
        if (local_cohomology_nonzero(M, i)) best = i;
    return best;
}

/// omega_R = Ext^codim_S(R, S(-n)), for Cohen-Macaulay R.
inline ModulePres canonical_module(QR R) {
    ModulePres Rm = ring_as_module(R);
    auto pr = depth_profile(Rm);
    if (!pr.cm) throw LnkError("canonical_module: ring is not Cohen-Macaulay");
    const int n = R->amb->nvars();
    const int c = n - pr.dim;
    QR S = QuotientRing::make(R->amb, {});
    ModulePres E = ext(c, as_ambient(Rm), free_module(S, {n}));
    return minimalize(change_ring(E, R));
}

// ---------------------------------------------------------------------------
// Candidate primes for Ass/Att scans.
// ---------------------------------------------------------------------------

inline bool ideal_is_monomial(QR R, const Ideal& I) {
    for (const auto& f : ideal_reduce(R, I))
        if (f.terms.size() != 1) return false;
    return true;
}

/// Minimal variable-generated primes over a monomial ideal: minimal
/// vertex covers of the generator supports.
inline std::vector<PrimeCandidate> monomial_minimal_primes(QR R, const Ideal& I) {
    RingPtr amb = R->amb;
    Ideal red = ideal_reduce(R, I);
    if (!ideal_is_monomial(R, red)) throw LnkError("monomial_minimal_primes: non-monomial ideal");
    const int n = amb->nvars();
    std::vector<std::vector<int>> supports;
    for (const auto& f : red) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (f.lt().e[i] > 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    std::vector<unsigned> covers;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool covers_all = true;
        for (const auto& s : supports) {
            bool hit = false;
            for (int v : s)
                if (mask & (1u << v)) hit = true;
            if (!hit) {
                covers_all = false;
                break;
            }
        }
        if (covers_all) covers.push_back(mask);
    }
    // keep the inclusion-minimal covers
    std::vector<PrimeCandidate> out;
    for (unsigned a : covers) {
        bool minimal = true;
        for (unsigned b : covers)
            if (b != a && (b & a) == b) minimal = false;
        if (!minimal) continue;
        Ideal gens;
        std::string name = "(";
        for (int i = 0; i < n; ++i)
            if (a & (1u << i)) {
                gens.push_back(poly_var(amb, i));
                if (name.size() > 1) name += ",";
                name += amb->vars[i];
            }
        name += ")";
        PrimeCandidate p = make_prime(R, name, gens);
        p.prov = PrimeCandidate::Prov::monomial_computed;
        out.push_back(std::move(p));
    }
    return out;
}

/// All verified variable-generated primes containing `a`, plus the zero
/// ideal when the ring is the (domain) ambient ring and a = 0.
inline std::vector<PrimeCandidate> monomial_candidates_containing(QR R, const Ideal& a) {
    RingPtr amb = R->amb;
    const int n = amb->nvars();
    std::vector<PrimeCandidate> out;
    if (R->is_ambient() && ideal_reduce(R, a).empty()) {
        PrimeCandidate zero;
        zero.name = "(0)";
        zero.prov = PrimeCandidate::Prov::monomial_computed;
        zero.verified = true; // polynomial rings are domains
        out.push_back(std::move(zero));
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Ideal gens;
        std::string name = "(";
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                gens.push_back(poly_var(amb, i));
                if (name.size() > 1) name += ",";
                name += amb->vars[i];
            }
        name += ")";
        if (!ideal_contains(R, gens, a)) continue;
        PrimeCandidate p = make_prime(R, name, gens);
        if (p.verified) out.push_back(std::move(p));
    }
    return out;
}

struct AttAssReport {
    enum class Kind { Ass, Att } kind;
    std::vector<PrimeCandidate> members;
    std::string method;

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& p : members) out.push_back(p.name);
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Associated primes among the candidates: p with depth(M_p) = 0.
inline AttAssReport ass_module(const ModulePres& M, const std::vector<PrimeCandidate>& candidates,
                               std::string method = "candidate-scan") {
    AttAssReport rep;
    rep.kind = AttAssReport::Kind::Ass;
    rep.method = std::move(method);
    if (is_zero_module(M)) return rep;
    for (const auto& p : candidates) {
        auto d = depth_at_prime(M, p);
        if (d && *d == 0) rep.members.push_back(p);
    }
    return rep;
}

/// Ass with auto-generated monomial candidates; requires the annihilator
/// (and the defining ideal) to be monomial so the scan is complete.
inline AttAssReport ass_module_auto(const ModulePres& M) {
    QR R = M.R;
    if (is_zero_module(M)) {
        AttAssReport rep;
        rep.kind = AttAssReport::Kind::Ass;
        rep.method = "monomial-auto";
        return rep;
    }
    Ideal a = ann_module(M);
    if (!ideal_is_monomial(R, a) || !ideal_is_monomial(R, R->defining))
        throw LnkError("ass_module_auto: non-monomial data, declare candidates explicitly");
    return ass_module(M, monomial_candidates_containing(R, a), "monomial-auto");
}

/// Att(H^i_m(M)) = Ass of the duality partner module.
inline AttAssReport att_local_cohomology(const ModulePres& M, int i,
                                         const std::vector<PrimeCandidate>& candidates) {
    AttAssReport rep = ass_module(cohomology_dual(M, i), candidates, "duality");
    rep.kind = AttAssReport::Kind::Att;
    return rep;
}

inline AttAssReport att_local_cohomology_auto(const ModulePres& M, int i) {
    AttAssReport rep = ass_module_auto(cohomology_dual(M, i));
    rep.kind = AttAssReport::Kind::Att;
    rep.method = "duality+monomial-auto";
    return rep;
}

} // namespace lnk
