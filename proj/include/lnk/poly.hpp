#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lnk/fp.hpp"

namespace lnk {

struct LnkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingMismatch : LnkError {
    using LnkError::LnkError;
};
struct ParseError : LnkError {
    using LnkError::LnkError;
};
/// Raised when a configurable resource cap (degree, basis size) is hit.
/// Always an explicit error, never a silently truncated answer.
struct CapExceeded : LnkError {
    using LnkError::LnkError;
};

/// Global resource caps, adjustable from the CLI.
struct Caps {
    int64_t max_degree = 24;
    std::size_t max_basis = 20000;
};
inline Caps& caps() {
    static Caps c;
    return c;
}

enum class MonOrder { grevlex, lex };

using Expo = std::vector<int32_t>;

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring F_p[x_1..x_n] with a monomial order and a
/// positive weight per variable (standard grading by default).
struct PolyRing {
    int64_t p;
    std::vector<std::string> vars;
    MonOrder order;
    std::vector<int32_t> weights;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }

    static RingPtr make(int64_t p, std::vector<std::string> vars,
                        MonOrder order = MonOrder::grevlex,
                        std::vector<int32_t> weights = {}) {
        if (!fp::is_prime(p) || p == 2)
            throw LnkError("PolyRing: modulus must be an odd prime");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw LnkError("PolyRing: duplicate variable name");
        auto r = std::make_shared<PolyRing>();
        r->p = p;
        r->vars = std::move(vars);
        r->order = order;
        if (weights.empty())
            r->weights.assign(r->vars.size(), 1);
        else {
            if (weights.size() != r->vars.size())
                throw LnkError("PolyRing: weight count mismatch");
            for (auto w : weights)
                if (w <= 0) throw LnkError("PolyRing: weights must be positive");
            r->weights = std::move(weights);
        }
        return r;
    }
};

inline int64_t wdeg(const PolyRing& R, const Expo& e) {
    int64_t d = 0;
    for (int i = 0; i < R.nvars(); ++i) d += int64_t(R.weights[i]) * e[i];
    return d;
}

/// Total order on exponent vectors: -1 if a < b, 0 if equal, 1 if a > b.
inline int mono_cmp(const PolyRing& R, const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw LnkError("mono_cmp: length mismatch");
    switch (R.order) {
        case MonOrder::lex:
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        case MonOrder::grevlex: {
            int64_t da = wdeg(R, a), db = wdeg(R, b);
            if (da != db) return da > db ? 1 : -1;
            // ties: last nonzero entry of a-b negative  =>  a > b
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

inline bool mono_divides(const Expo& a, const Expo& b) {
    // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo mono_mul(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) + b[i];
        if (s > INT32_MAX) throw CapExceeded("exponent overflow");
        r[i] = static_cast<int32_t>(s);
    }
    return r;
}

inline Expo mono_div(const Expo& a, const Expo& b) {
    // a / b, assumes b | a
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

struct Term {
    Expo e;
    int64_t c; // nonzero, in [1, p-1]
};

/// A polynomial in canonical form: terms strictly descending in the
/// ring's monomial order, no zero coefficients.
struct Poly {
    RingPtr ring;
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const {
        if (terms.empty()) throw LnkError("lt of zero polynomial");
        return terms.front();
    }

    /// Weighted degree of the leading term; throws on zero.
    int64_t degree() const { return wdeg(*ring, lt().e); }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int64_t d = wdeg(*ring, terms[0].e);
        for (const auto& t : terms)
            if (wdeg(*ring, t.e) != d) return false;
        return true;
    }

    /// Coefficient of the constant monomial (0 if absent).
    int64_t constant_coeff() const {
        for (const auto& t : terms) {
            bool all0 = std::all_of(t.e.begin(), t.e.end(), [](int32_t x) { return x == 0; });
            if (all0) return t.c;
        }
        return 0;
    }
};

inline void check_same_ring(const Poly& a, const Poly& b) {
    if (a.ring != b.ring) throw RingMismatch("polynomials from different rings");
}

inline Poly poly_zero(RingPtr R) { return Poly{std::move(R), {}}; }

inline Poly poly_const(RingPtr R, int64_t c) {
    c = fp::normalize(c, R->p);
    Poly f{R, {}};
    if (c != 0) f.terms.push_back(Term{Expo(R->nvars(), 0), c});
    return f;
}

inline Poly poly_term(RingPtr R, Expo e, int64_t c) {
    c = fp::normalize(c, R->p);
    Poly f{R, {}};
    if (c != 0) f.terms.push_back(Term{std::move(e), c});
    return f;
}

inline Poly poly_var(RingPtr R, int i) {
    Expo e(R->nvars(), 0);
    e[i] = 1;
    return poly_term(R, std::move(e), 1);
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    const PolyRing& R = *a.ring;
    Poly r{a.ring, {}};
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int cmp = mono_cmp(R, a.terms[i].e, b.terms[j].e);
        if (cmp > 0)
            r.terms.push_back(a.terms[i++]);
        else if (cmp < 0)
            r.terms.push_back(b.terms[j++]);
        else {
            int64_t c = fp::add(a.terms[i].c, b.terms[j].c, R.p);
            if (c != 0) r.terms.push_back(Term{a.terms[i].e, c});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

inline Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms) t.c = fp::neg(t.c, a.ring->p);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_scale(const Poly& a, int64_t c) {
    c = fp::normalize(c, a.ring->p);
    if (c == 0) return poly_zero(a.ring);
    Poly r = a;
    for (auto& t : r.terms) t.c = fp::mul(t.c, c, a.ring->p);
    return r;
}

/// a * (c * x^e), the monomial-multiplication workhorse of reduction.
inline Poly poly_mono_mul(const Poly& a, const Expo& e, int64_t c) {
    c = fp::normalize(c, a.ring->p);
    if (c == 0) return poly_zero(a.ring);
    Poly r{a.ring, {}};
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(Term{mono_mul(t.e, e), fp::mul(t.c, c, a.ring->p)});
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    Poly r = poly_zero(a.ring);
    for (const auto& t : b.terms) r = poly_add(r, poly_mono_mul(a, t.e, t.c));
    return r;
}

// ---------------------------------------------------------------------------
// Printing and parsing.  Canonical print is bit-exact: terms descending,
// coefficients as least nonnegative residues, '^' for powers, '*' separators.
// ---------------------------------------------------------------------------

inline std::string mono_to_string(const PolyRing& R, const Expo& e) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < R.nvars(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        os << R.vars[i];
        if (e[i] > 1) os << '^' << e[i];
        first = false;
    }
    return os.str();
}

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const PolyRing& R = *f.ring;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms) {
        if (!first) os << " + ";
        std::string m = mono_to_string(R, t.e);
        if (m.empty())
            os << t.c;
        else if (t.c == 1)
            os << m;
        else
            os << t.c << '*' << m;
        first = false;
    }
    return os.str();
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

} // namespace detail

/// Parses the textual syntax `3*x^2*y - z`.  Implicit coefficient 1,
/// '^' for powers; '+'/'-' separate terms.
inline Poly parse_poly(RingPtr R, const std::string& text) {
    detail::PolyLexer lx(text);
    Poly result = poly_zero(R);
    bool expect_term = true;
    int64_t sign = 1;
    while (!lx.eof()) {
        char ch = lx.peek();
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '+')
                throw ParseError("unexpected '+' in polynomial: " + text);
            sign = (ch == '-') ? -sign : sign;
            ++lx.i;
            expect_term = true;
            continue;
        }
        // one term: factors joined by '*'
        int64_t coef = 1;
        Expo e(R->nvars(), 0);
        bool saw_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                int64_t v = 0;
                while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
                    v = v * 10 + (lx.s[lx.i] - '0');
                    if (v > (int64_t(1) << 50)) throw ParseError("coefficient too large");
                    ++lx.i;
                }
                coef = fp::mul(fp::normalize(coef, R->p), fp::normalize(v, R->p), R->p);
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (lx.i < lx.s.size() &&
                       (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
                    name += lx.s[lx.i++];
                int vi = R->var_index(name);
                if (vi < 0) throw ParseError("unknown variable '" + name + "'");
                int64_t exp = 1;
                if (lx.peek() == '^') {
                    ++lx.i;
                    if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                        throw ParseError("expected exponent after '^'");
                    exp = 0;
                    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
                        exp = exp * 10 + (lx.s[lx.i] - '0');
                        if (exp > INT32_MAX) throw ParseError("exponent too large");
                        ++lx.i;
                    }
                }
                e[vi] += static_cast<int32_t>(exp);
                saw_factor = true;
            } else {
                break;
            }
            if (lx.peek() == '*') {
                ++lx.i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("malformed polynomial: " + text);
        result = poly_add(result, poly_term(R, std::move(e), sign * coef));
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !result.is_zero())
        throw ParseError("trailing operator in polynomial: " + text);
    return result;
}

} // namespace lnk
