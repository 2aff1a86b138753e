#pragma once

#include <climits>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "lnk/poly.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// Quotient rings R = S/I.  The defining ideal is stored as a reduced
// Groebner basis; all module computations over R lift to S by appending
// defining-ideal multiples of the free-module basis rows.
// ---------------------------------------------------------------------------

struct QuotientRing;
using QR = std::shared_ptr<const QuotientRing>;

struct QuotientRing {
    RingPtr amb;
    std::vector<Poly> defining; // reduced GB; empty for R = S

    bool is_ambient() const { return defining.empty(); }
    static QR make(RingPtr amb, const std::vector<Poly>& gens);
};

/// Quotient rings compare structurally: same ambient ring object, same
/// reduced defining basis.  Distinct QuotientRing objects with equal data
/// present the same ring.
inline bool same_qr(const QR& a, const QR& b) {
    if (a == b) return true;
    if (a->amb != b->amb) return false;
    if (a->defining.size() != b->defining.size()) return false;
    for (std::size_t i = 0; i < a->defining.size(); ++i)
        if (to_string(a->defining[i]) != to_string(b->defining[i])) return false;
    return true;
}

/// An element of a free module R^r, stored densely per component.
struct Vec {
    std::vector<Poly> c;

    bool is_zero() const {
        for (const auto& f : c)
            if (!f.is_zero()) return false;
        return true;
    }
    int rank() const { return static_cast<int>(c.size()); }
};

inline Vec vec_zero(RingPtr R, int rank) {
    Vec v;
    v.c.assign(rank, poly_zero(R));
    return v;
}

inline Vec vec_unit(RingPtr R, int rank, int comp) {
    Vec v = vec_zero(R, rank);
    v.c[comp] = poly_const(R, 1);
    return v;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r.c[i] = poly_add(r.c[i], b.c[i]);
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.rank(); ++i) r.c[i] = poly_sub(r.c[i], b.c[i]);
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r = a;
    for (auto& f : r.c) f = poly_neg(f);
    return r;
}

inline Vec vec_scale(const Vec& a, int64_t s) {
    Vec r = a;
    for (auto& f : r.c) f = poly_scale(f, s);
    return r;
}

inline Vec vec_mono_mul(const Vec& a, const Expo& e, int64_t s) {
    Vec r = a;
    for (auto& f : r.c) f = poly_mono_mul(f, e, s);
    return r;
}

inline Vec vec_poly_mul(const Vec& a, const Poly& f) {
    Vec r = a;
    for (auto& g : r.c) g = poly_mul(g, f);
    return r;
}

/// Degree of a homogeneous vector in a twisted free module (component i
/// carries twist t_i, i.e. its generator has degree t_i).  Returns nullopt
/// for the zero vector, throws if inhomogeneous.
inline std::optional<int64_t> vec_degree(const Vec& v, const std::vector<int64_t>& twists) {
    std::optional<int64_t> d;
    for (int i = 0; i < v.rank(); ++i) {
        for (const auto& t : v.c[i].terms) {
            int64_t td = wdeg(*v.c[i].ring, t.e) + twists[i];
            if (!d)
                d = td;
            else if (*d != td)
                throw LnkError("inhomogeneous module element");
        }
    }
    return d;
}

inline bool vec_is_homogeneous(const Vec& v, const std::vector<int64_t>& twists) {
    try {
        (void)vec_degree(v, twists);
        return true;
    } catch (const LnkError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Module monomial orders.  Within a component block, terms compare by the
// ring order (term-over-position), ties broken by smaller component.  When
// split < rank, components < split strictly dominate the rest; this is the
// elimination order used for syzygy and lifting computations.
// ---------------------------------------------------------------------------

struct ModOrder {
    int split = INT_MAX;
};

struct LeadPos {
    int comp;
    Expo mono;
    int64_t coeff;
};

inline int modterm_cmp(const PolyRing& R, const ModOrder& ord, int c1, const Expo& e1, int c2,
                       const Expo& e2) {
    int b1 = c1 < ord.split ? 0 : 1;
    int b2 = c2 < ord.split ? 0 : 1;
    if (b1 != b2) return b1 < b2 ? 1 : -1;
    int c = mono_cmp(R, e1, e2);
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
}

inline std::optional<LeadPos> vec_lead(const Vec& v, const ModOrder& ord) {
    std::optional<LeadPos> best;
    for (int i = 0; i < v.rank(); ++i) {
        if (v.c[i].is_zero()) continue;
        const Term& t = v.c[i].lt();
        if (!best || modterm_cmp(*v.c[i].ring, ord, i, t.e, best->comp, best->mono) > 0)
            best = LeadPos{i, t.e, t.c};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Buchberger over free modules.
// ---------------------------------------------------------------------------

class GBasis {
  public:
    QR R;
    std::vector<int64_t> twists;
    ModOrder ord;
    std::vector<Vec> els; // monic, inter-reduced, deterministic order

    /// Full normal form: no term of the result is divisible by any leading
    /// term of the basis.  Idempotent.
    Vec nf(Vec v) const {
        RingPtr amb = R->amb;
        Vec rem = vec_zero(amb, static_cast<int>(twists.size()));
        while (true) {
            auto lead = vec_lead(v, ord);
            if (!lead) break;
            const Vec* red = find_reducer(lead->comp, lead->mono);
            if (red) {
                auto rl = vec_lead(*red, ord);
                Expo q = mono_div(lead->mono, rl->mono);
                v = vec_sub(v, vec_mono_mul(*red, q, lead->coeff));
            } else {
                // move the irreducible lead term to the remainder
                Poly t = poly_term(amb, lead->mono, lead->coeff);
                rem.c[lead->comp] = poly_add(rem.c[lead->comp], t);
                v.c[lead->comp] = poly_sub(v.c[lead->comp], t);
            }
        }
        return rem;
    }

    bool member(const Vec& v) const { return nf(v).is_zero(); }

    /// For rank-1 (ideal) bases: the ideal is the unit ideal iff the reduced
    /// basis contains a nonzero constant.
    bool contains_unit() const {
        for (const auto& g : els)
            for (const auto& f : g.c)
                if (!f.is_zero() && f.lt().e == Expo(R->amb->nvars(), 0)) return true;
        return false;
    }

    const Vec* find_reducer(int comp, const Expo& mono) const {
        for (int idx : by_comp_.at(comp)) {
            auto l = vec_lead(els[idx], ord);
            if (mono_divides(l->mono, mono)) return &els[idx];
        }
        return nullptr;
    }

    void rebuild_index() {
        by_comp_.assign(twists.size(), {});
        for (std::size_t i = 0; i < els.size(); ++i) {
            auto l = vec_lead(els[i], ord);
            by_comp_[l->comp].push_back(static_cast<int>(i));
        }
    }

  private:
    std::vector<std::vector<int>> by_comp_;
};

namespace detail {

inline Vec make_monic(const Vec& v, const ModOrder& ord, int64_t p) {
    auto l = vec_lead(v, ord);
    return vec_scale(v, fp::inv(l->coeff, p));
}

/// Core Buchberger loop: sugar-degree selection, chain-criterion pair
/// pruning, full inter-reduction at the end.
inline std::vector<Vec> buchberger_core(QR R, const std::vector<int64_t>& twists,
                                        std::vector<Vec> gens, const ModOrder& ord) {
    const int64_t p = R->amb->p;
    std::vector<Vec> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!vec_is_homogeneous(g, twists)) throw LnkError("buchberger: inhomogeneous generator");
        G.push_back(make_monic(g, ord, p));
    }

    auto lead_of = [&](int i) { return *vec_lead(G[i], ord); };

    struct PairKey {
        int64_t sugar;
        int i, j;
        bool operator<(const PairKey& o) const {
            return std::tie(sugar, i, j) < std::tie(o.sugar, o.i, o.j);
        }
    };
    std::set<PairKey> pending;
    std::set<std::pair<int, int>> processed; // pairs whose S-vector was actually reduced

    auto add_pairs = [&](int j) {
        auto lj = lead_of(j);
        for (int i = 0; i < j; ++i) {
            auto li = lead_of(i);
            if (li.comp != lj.comp) continue;
            Expo l = mono_lcm(li.mono, lj.mono);
            int64_t sugar = wdeg(*R->amb, l) + twists[li.comp];
            pending.insert(PairKey{sugar, i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) add_pairs(j);

    // a temporary basis object for reductions
    GBasis work;
    work.R = R;
    work.twists = twists;
    work.ord = ord;
    work.els = G;
    work.rebuild_index();

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        if (pk.sugar > caps().max_degree)
            throw CapExceeded("buchberger: S-pair degree " + std::to_string(pk.sugar) +
                              " exceeds max-degree cap");
        auto li = lead_of(pk.i), lj = lead_of(pk.j);
        Expo l = mono_lcm(li.mono, lj.mono);
        // chain criterion: a third element whose lead divides the lcm, with
        // both companion S-pairs already reduced, makes this pair redundant
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            auto lk = lead_of(k);
            if (lk.comp != li.comp || !mono_divides(lk.mono, l)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (processed.count(key(pk.i, k)) && processed.count(key(pk.j, k))) skip = true;
        }
        if (skip) continue;
        processed.insert({pk.i, pk.j});

        Vec sp = vec_sub(vec_mono_mul(G[pk.i], mono_div(l, li.mono), 1),
                         vec_mono_mul(G[pk.j], mono_div(l, lj.mono), 1));
        Vec h = work.nf(sp);
        if (h.is_zero()) continue;
        G.push_back(make_monic(h, ord, p));
        if (G.size() > caps().max_basis) throw CapExceeded("buchberger: basis size cap exceeded");
        work.els = G;
        work.rebuild_index();
        add_pairs(static_cast<int>(G.size()) - 1);
    }

    // inter-reduce: drop elements whose lead divides by another lead, then
    // tail-reduce the survivors
    std::vector<Vec> reduced;
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto li = *vec_lead(G[i], ord);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            auto lj = *vec_lead(G[j], ord);
            if (lj.comp != li.comp || !mono_divides(lj.mono, li.mono)) continue;
            if (lj.mono == li.mono && j > i) continue; // keep the earlier of equal leads
            redundant = true;
        }
        if (!redundant) reduced.push_back(G[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        GBasis others;
        others.R = R;
        others.twists = twists;
        others.ord = ord;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.els.push_back(reduced[j]);
        others.rebuild_index();
        reduced[i] = make_monic(others.nf(reduced[i]), ord, p);
    }
    // canonical sort: descending leading term
    std::sort(reduced.begin(), reduced.end(), [&](const Vec& a, const Vec& b) {
        auto la = *vec_lead(a, ord), lb = *vec_lead(b, ord);
        return modterm_cmp(*R->amb, ord, la.comp, la.mono, lb.comp, lb.mono) > 0;
    });
    return reduced;
}

} // namespace detail

/// Reduced Groebner basis of the submodule of R^r generated by `gens`,
/// computed over R = S/I by appending defining-ideal multiples of the
/// basis rows.  Deterministic: output is independent of generator order.
inline GBasis module_gb(QR R, const std::vector<int64_t>& twists, std::vector<Vec> gens,
                        ModOrder ord = ModOrder{}) {
    const int rank = static_cast<int>(twists.size());
    for (const auto& f : R->defining)
        for (int j = 0; j < rank; ++j) {
            Vec v = vec_zero(R->amb, rank);
            v.c[j] = f;
            gens.push_back(std::move(v));
        }
    GBasis gb;
    gb.R = R;
    gb.twists = twists;
    gb.ord = ord;
    gb.els = detail::buchberger_core(R, twists, std::move(gens), ord);
    gb.rebuild_index();
    return gb;
}

inline QR QuotientRing::make(RingPtr amb, const std::vector<Poly>& gens) {
    auto S = std::make_shared<QuotientRing>();
    S->amb = amb;
    QR base = S; // R = S view used to reduce the generators
    std::vector<Vec> vgens;
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw LnkError("QuotientRing: inhomogeneous defining ideal");
        vgens.push_back(Vec{{g}});
    }
    GBasis gb = module_gb(base, {0}, std::move(vgens));
    auto R = std::make_shared<QuotientRing>();
    R->amb = amb;
    for (const auto& v : gb.els) R->defining.push_back(v.c[0]);
    return R;
}

// ---------------------------------------------------------------------------
// Syzygies and lifts via the augmented module F (+) R^s with the
// elimination order: basis elements (g_i, e_i) plus defining multiples.
// GB elements supported entirely on the auxiliary block are syzygies;
// normal forms of (v, 0) read off representation coefficients.
// ---------------------------------------------------------------------------

class AugEngine {
  public:
    AugEngine(QR R, const std::vector<int64_t>& ftwists, const std::vector<Vec>& gens,
              const std::vector<Vec>& extra)
        : R_(std::move(R)), rank_(static_cast<int>(ftwists.size())),
          ngens_(static_cast<int>(gens.size())) {
        std::vector<int64_t> twists = ftwists;
        for (const auto& g : gens) {
            auto d = vec_degree(g, ftwists);
            twists.push_back(d.value_or(0));
        }
        const int total = rank_ + ngens_;
        std::vector<Vec> aug;
        for (int i = 0; i < ngens_; ++i) {
            Vec v = vec_zero(R_->amb, total);
            for (int j = 0; j < rank_; ++j) v.c[j] = gens[i].c[j];
            v.c[rank_ + i] = poly_const(R_->amb, 1);
            aug.push_back(std::move(v));
        }
        for (const auto& w : extra) {
            Vec v = vec_zero(R_->amb, total);
            for (int j = 0; j < rank_; ++j) v.c[j] = w.c[j];
            aug.push_back(std::move(v));
        }
        gb_ = module_gb(R_, twists, std::move(aug), ModOrder{rank_});
    }

    /// Generators of { c in R^s : sum c_i g_i  in  span(extra) + I*F }.
    std::vector<Vec> syzygies() const {
        std::vector<Vec> out;
        // the trailing aux block is reduced modulo I; drop elements that are
        // zero as R-vectors
        for (const auto& e : gb_.els) {
            bool fzero = true;
            for (int j = 0; j < rank_; ++j)
                if (!e.c[j].is_zero()) fzero = false;
            if (!fzero) continue;
            Vec c;
            for (int i = 0; i < ngens_; ++i) c.c.push_back(e.c[rank_ + i]);
            if (!reduce_mod_ideal(c).is_zero()) out.push_back(std::move(c));
        }
        return out;
    }

    /// Coefficients c with v = sum c_i g_i modulo span(extra)+I*F, if any.
    std::optional<std::vector<Poly>> lift(const Vec& v) const {
        Vec aug = vec_zero(R_->amb, rank_ + ngens_);
        for (int j = 0; j < rank_; ++j) aug.c[j] = v.c[j];
        Vec r = gb_.nf(aug);
        for (int j = 0; j < rank_; ++j)
            if (!r.c[j].is_zero()) return std::nullopt;
        std::vector<Poly> coeffs;
        for (int i = 0; i < ngens_; ++i) coeffs.push_back(poly_neg(r.c[rank_ + i]));
        return coeffs;
    }

  private:
    Vec reduce_mod_ideal(const Vec& c) const {
        if (R_->defining.empty()) return c;
        GBasis ig = module_gb(R_, std::vector<int64_t>(c.rank(), 0), {});
        return ig.nf(c);
    }

    QR R_;
    int rank_, ngens_;
    GBasis gb_;
};

/// Syzygies of `gens` relative to the submodule spanned by `extra`
/// (both inside the free module with the given twists), over R.
inline std::vector<Vec> rel_syzygies(QR R, const std::vector<int64_t>& ftwists,
                                     const std::vector<Vec>& gens, const std::vector<Vec>& extra) {
    if (gens.empty()) return {};
    AugEngine eng(std::move(R), ftwists, gens, extra);
    return eng.syzygies();
}

// ---------------------------------------------------------------------------
// Homogeneous ideals of R, as plain generator lists; all ops return
// reduced Groebner bases so results are order-independent.
// ---------------------------------------------------------------------------

using Ideal = std::vector<Poly>;

inline GBasis ideal_gb(QR R, const Ideal& I) {
    std::vector<Vec> gens;
    for (const auto& f : I) gens.push_back(Vec{{f}});
    return module_gb(R, {0}, std::move(gens));
}

inline Ideal ideal_reduce(QR R, const Ideal& I) {
    GBasis gb = ideal_gb(R, I);
    Ideal out;
    for (const auto& v : gb.els) out.push_back(v.c[0]);
    return out;
}

inline Ideal ideal_sum(QR R, const Ideal& I, const Ideal& J) {
    Ideal g = I;
    g.insert(g.end(), J.begin(), J.end());
    return ideal_reduce(R, g);
}

inline Ideal ideal_product(QR R, const Ideal& I, const Ideal& J) {
    Ideal g;
    for (const auto& f : I)
        for (const auto& h : J) g.push_back(poly_mul(f, h));
    if (I.empty() || J.empty()) g.clear();
    return ideal_reduce(R, g);
}

inline Ideal ideal_intersection(QR R, const Ideal& I, const Ideal& J) {
    // kernel of R -> R/I (+) R/J
    std::vector<int64_t> tw{0, 0};
    Vec diag;
    diag.c = {poly_const(R->amb, 1), poly_const(R->amb, 1)};
    std::vector<Vec> extra;
    for (const auto& f : I) extra.push_back(Vec{{f, poly_zero(R->amb)}});
    for (const auto& f : J) extra.push_back(Vec{{poly_zero(R->amb), f}});
    auto syz = rel_syzygies(R, tw, {diag}, extra);
    Ideal out;
    for (const auto& s : syz) out.push_back(s.c[0]);
    return ideal_reduce(R, out);
}

/// (I : J) = { f : f J is contained in I }.
inline Ideal ideal_quotient(QR R, const Ideal& I, const Ideal& J) {
    if (J.empty()) throw LnkError("ideal_quotient: empty divisor");
    std::optional<Ideal> acc;
    for (const auto& h : J) {
        if (h.is_zero()) continue;
        std::vector<Vec> extra;
        for (const auto& f : I) extra.push_back(Vec{{f}});
        auto syz = rel_syzygies(R, std::vector<int64_t>{0}, {Vec{{h}}}, extra);
        Ideal part;
        for (const auto& s : syz) part.push_back(s.c[0]);
        part = ideal_reduce(R, part);
        acc = acc ? ideal_intersection(R, *acc, part) : part;
    }
    if (!acc) return Ideal{poly_const(R->amb, 1)}; // J = (0): quotient is all of R
    return *acc;
}

inline bool ideal_member(QR R, const Ideal& I, const Poly& f) {
    GBasis gb = ideal_gb(R, I);
    return gb.member(Vec{{f}});
}

inline bool ideal_is_unit(QR R, const Ideal& I) { return ideal_gb(R, I).contains_unit(); }

inline bool ideal_contains(QR R, const Ideal& big, const Ideal& small) {
    GBasis gb = ideal_gb(R, big);
    for (const auto& f : small)
        if (!gb.member(Vec{{f}})) return false;
    return true;
}

inline bool ideal_equal(QR R, const Ideal& I, const Ideal& J) {
    auto a = ideal_reduce(R, I), b = ideal_reduce(R, J);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (to_string(a[i]) != to_string(b[i])) return false;
    return true;
}

} // namespace lnk
