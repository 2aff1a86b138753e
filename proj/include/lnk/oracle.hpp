#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lnk/modpres.hpp"

namespace lnk {

// ---------------------------------------------------------------------------
// Independent graded dimension oracle.  Counts dim_k(M_d) by dense rank
// computations degree by degree, touching no Groebner machinery: the
// spanning set of the relation submodule in degree d is enumerated
// directly and reduced by Gaussian elimination.
// ---------------------------------------------------------------------------

namespace oracle {

/// Exponent vectors of total weighted degree d, enumerated iteratively
/// (odometer style, independent of the recursive counter elsewhere).
inline std::vector<Expo> degree_monomials(const PolyRing& R, int64_t d) {
    std::vector<Expo> out;
    if (d < 0) return out;
    const int n = R.nvars();
    if (n == 0) {
        if (d == 0) out.push_back(Expo{});
        return out;
    }
    Expo e(n, 0);
    // stack of remaining degree budget per position
    int pos = 0;
    std::vector<int64_t> budget(n + 1, 0);
    budget[0] = d;
    e.assign(n, 0);
    while (true) {
        if (pos == n - 1) {
            if (budget[pos] % R.weights[pos] == 0) {
                e[pos] = static_cast<int32_t>(budget[pos] / R.weights[pos]);
                out.push_back(e);
            }
            e[pos] = 0;
            // backtrack
            --pos;
            while (pos >= 0) {
                e[pos] += 1;
                if (int64_t(e[pos]) * R.weights[pos] <= budget[pos]) break;
                e[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            budget[pos + 1] = budget[pos] - int64_t(e[pos]) * R.weights[pos];
            ++pos;
        } else {
            budget[pos + 1] = budget[pos] - int64_t(e[pos]) * R.weights[pos];
            ++pos;
        }
    }
    return out;
}

/// Row-echelon rank of a dense matrix over F_p; rows are modified in place.
inline int rank_fp(std::vector<std::vector<int64_t>>& rows, int64_t p) {
    int rank = 0;
    if (rows.empty()) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int64_t inv = fp::inv(rows[rank][col], p);
        for (int c = col; c < ncols; ++c) rows[rank][c] = fp::mul(rows[rank][c], inv, p);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            int64_t f = fp::normalize(rows[r][col], p);
            if (f == 0) continue;
            for (int c = col; c < ncols; ++c)
                rows[r][c] = fp::sub(rows[r][c], fp::mul(f, rows[rank][c], p), p);
        }
        ++rank;
    }
    return rank;
}

/// dim_k(M_d) for each degree in [lo, hi].
inline DimTable dims(const ModulePres& M, int64_t lo, int64_t hi) {
    DimTable t;
    t.lo = lo;
    t.hi = hi;
    const PolyRing& S = *M.R->amb;
    const int64_t p = S.p;

    // spanning vectors of the relation submodule: presentation columns and
    // defining-ideal multiples of each free basis row
    struct SpanVec {
        Vec v;
        int64_t deg;
    };
    std::vector<SpanVec> span;
    for (const auto& col : M.rels) {
        auto d = vec_degree(col, M.twists);
        if (d) span.push_back({col, *d});
    }
    for (const auto& f : M.R->defining)
        for (int i = 0; i < M.rank(); ++i) {
            Vec v = vec_zero(M.R->amb, M.rank());
            v.c[i] = f;
            span.push_back({std::move(v), f.degree() + M.twists[i]});
        }

    for (int64_t d = lo; d <= hi; ++d) {
        // basis of F0 in degree d: (component, monomial) pairs
        std::map<std::pair<int, Expo>, int> index;
        std::vector<std::vector<Expo>> basis(M.rank());
        int total = 0;
        for (int i = 0; i < M.rank(); ++i) {
            basis[i] = degree_monomials(S, d - M.twists[i]);
            for (const auto& m : basis[i]) index[{i, m}] = total++;
        }
        if (total == 0) {
            t.dims[d] = 0;
            continue;
        }
        std::vector<std::vector<int64_t>> rows;
        for (const auto& sv : span) {
            for (const auto& m : degree_monomials(S, d - sv.deg)) {
                std::vector<int64_t> row(total, 0);
                for (int i = 0; i < M.rank(); ++i)
                    for (const auto& term : sv.v.c[i].terms) {
                        auto it = index.find({i, mono_mul(term.e, m)});
                        if (it == index.end())
                            throw LnkError("oracle: degree bookkeeping mismatch");
                        row[it->second] = fp::add(row[it->second], term.c, p);
                    }
                rows.push_back(std::move(row));
            }
        }
        t.dims[d] = total - rank_fp(rows, p);
    }
    return t;
}

} // namespace oracle
} // namespace lnk
