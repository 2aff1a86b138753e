#pragma once

#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lnk/modpres.hpp"
#include "lnk/oracle.hpp"

namespace th {

using namespace lnk;

inline RingPtr S_xy() {
    static RingPtr r = PolyRing::make(32003, {"x", "y"});
    return r;
}
inline RingPtr S_xyz() {
    static RingPtr r = PolyRing::make(32003, {"x", "y", "z"});
    return r;
}
inline RingPtr S_abcd() {
    static RingPtr r = PolyRing::make(32003, {"a", "b", "c", "d"});
    return r;
}
/// Coordinate ring of the twisted cubic cone: 2x2 minors of [[a,b,c],[b,c,d]].
inline QR twisted_cubic() {
    static QR R = QuotientRing::make(S_abcd(), {parse_poly(S_abcd(), "a*c - b^2"),
                                                parse_poly(S_abcd(), "a*d - b*c"),
                                                parse_poly(S_abcd(), "b*d - c^2")});
    return R;
}

inline QR quotient(RingPtr S, const std::vector<std::string>& gens) {
    std::vector<Poly> g;
    for (const auto& s : gens) g.push_back(parse_poly(S, s));
    return QuotientRing::make(S, g);
}

inline QR ambient(RingPtr S) { return QuotientRing::make(S, {}); }

inline Poly pp(RingPtr S, const std::string& s) { return parse_poly(S, s); }

inline Vec vv(RingPtr S, const std::vector<std::string>& comps) {
    Vec v;
    for (const auto& s : comps) v.c.push_back(parse_poly(S, s));
    return v;
}

inline std::vector<std::string> gb_strings(const GBasis& gb) {
    std::vector<std::string> out;
    for (const auto& e : gb.els) {
        std::string s;
        for (int i = 0; i < e.rank(); ++i) {
            if (i) s += " | ";
            s += to_string(e.c[i]);
        }
        out.push_back(s);
    }
    return out;
}

inline std::vector<std::string> ideal_strings(QR R, const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& f : ideal_reduce(R, I)) out.push_back(to_string(f));
    return out;
}

/// Same submodule of a twisted free module, generator-set agnostic.
inline bool same_span(QR R, const std::vector<int64_t>& tw, const std::vector<Vec>& A,
                      const std::vector<Vec>& B) {
    GBasis ga = module_gb(R, tw, A), gbb = module_gb(R, tw, B);
    for (const auto& v : A)
        if (!gbb.member(v)) return false;
    for (const auto& v : B)
        if (!ga.member(v)) return false;
    return true;
}

inline Poly random_poly(RingPtr S, std::mt19937_64& rng, int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<int64_t> cf(0, S->p - 1);
    Poly f = poly_zero(S);
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        Expo e(S->nvars());
        for (int i = 0; i < S->nvars(); ++i) e[i] = ex(rng);
        f = poly_add(f, poly_term(S, e, cf(rng)));
    }
    return f;
}

inline bool dims_match(const DimTable& a, const DimTable& b) { return a == b; }

/// Compares GB-based and dense-oracle dimension counts over a window.
inline void check_oracle(const ModulePres& M, int64_t lo, int64_t hi) {
    DimTable g = hilbert_dims(M, lo, hi);
    DimTable o = oracle::dims(M, lo, hi);
    INFO("gb vs oracle dims");
    for (int64_t d = lo; d <= hi; ++d) {
        INFO("degree " << d);
        CHECK(g.at(d) == o.at(d));
    }
}

} // namespace th
