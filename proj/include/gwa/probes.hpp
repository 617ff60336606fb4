#pragma once

// Structural verification tools: degree-bounded center scans, normality
// checks via exact linear solving, and the q-integers (p^d - 1)/(p - 1).

#include <functional>
#include <optional>
#include <vector>

#include "gwa/localization.hpp"

namespace gwa {

/// [d]_p = 1 + p + ... + p^(d-1), in canonical form.
inline ParamScalar q_integer(int d, const ParamScalar& base = ParamScalar::p()) {
    if (d < 0) throw Error("q_integer requires d >= 0");
    ParamScalar acc(0);
    for (int i = 0; i < d; ++i) acc = acc * base + ParamScalar(1);
    return acc;
}

// ---------------------------------------------------------------------------
// Exact dense linear algebra over the scalar field
// ---------------------------------------------------------------------------

namespace linalg {

using Matrix = std::vector<std::vector<ParamScalar>>;

/// Row-reduce in place with full pivoting on the smallest-weight nonzero
/// entry (fraction growth is the practical bottleneck).  Returns the pivot
/// (row, col) pairs in elimination order.
inline std::vector<std::pair<size_t, size_t>> reduce(Matrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<std::pair<size_t, size_t>> pivots;

    while (true) {
        size_t best_r = rows, best_c = cols;
        size_t best_w = 0;
        for (size_t r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            for (size_t c = 0; c < cols; ++c) {
                if (col_used[c] || m[r][c].is_zero()) continue;
                const size_t w = m[r][c].weight();
                if (best_r == rows || w < best_w) {
                    best_r = r;
                    best_c = c;
                    best_w = w;
                }
            }
        }
        if (best_r == rows) break;
        row_used[best_r] = true;
        col_used[best_c] = true;
        pivots.emplace_back(best_r, best_c);

        const ParamScalar inv = m[best_r][best_c].inverse();
        for (size_t c = 0; c < cols; ++c)
            if (!m[best_r][c].is_zero()) m[best_r][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == best_r || m[r][best_c].is_zero()) continue;
            const ParamScalar factor = m[r][best_c];
            for (size_t c = 0; c < cols; ++c) {
                if (m[best_r][c].is_zero()) continue;
                m[r][c] -= factor * m[best_r][c];
            }
        }
    }
    return pivots;
}

/// Basis of the solution space of M x = 0 (M given by rows over `ncols`
/// unknowns).  Basis vectors are normalized with leading free coordinate 1.
inline std::vector<std::vector<ParamScalar>> nullspace(Matrix m, size_t ncols) {
    for (auto& row : m) row.resize(ncols, ParamScalar(0));
    const auto pivots = reduce(m);
    std::vector<bool> is_pivot_col(ncols, false);
    for (const auto& [r, c] : pivots) is_pivot_col[c] = true;

    std::vector<std::vector<ParamScalar>> basis;
    for (size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot_col[free_c]) continue;
        std::vector<ParamScalar> v(ncols, ParamScalar(0));
        v[free_c] = ParamScalar(1);
        for (const auto& [r, c] : pivots) v[c] = -m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve M x = rhs exactly; empty result when the system is inconsistent.
/// Free coordinates are set to zero.
inline std::optional<std::vector<ParamScalar>> solve(Matrix m, std::vector<ParamScalar> rhs) {
    const size_t rows = m.size();
    size_t ncols = 0;
    for (const auto& row : m) ncols = std::max(ncols, row.size());
    for (auto& row : m) row.resize(ncols + 1, ParamScalar(0));
    rhs.resize(rows, ParamScalar(0));
    for (size_t r = 0; r < rows; ++r) m[r][ncols] = rhs[r];

    // eliminate on the coefficient columns only
    std::vector<bool> row_used(rows, false), col_used(ncols, false);
    std::vector<std::pair<size_t, size_t>> pivots;
    while (true) {
        size_t best_r = rows, best_c = ncols, best_w = 0;
        for (size_t r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            for (size_t c = 0; c < ncols; ++c) {
                if (col_used[c] || m[r][c].is_zero()) continue;
                const size_t w = m[r][c].weight();
                if (best_r == rows || w < best_w) {
                    best_r = r;
                    best_c = c;
                    best_w = w;
                }
            }
        }
        if (best_r == rows) break;
        row_used[best_r] = true;
        col_used[best_c] = true;
        pivots.emplace_back(best_r, best_c);
        const ParamScalar inv = m[best_r][best_c].inverse();
        for (size_t c = 0; c <= ncols; ++c)
            if (!m[best_r][c].is_zero()) m[best_r][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == best_r || m[r][best_c].is_zero()) continue;
            const ParamScalar factor = m[r][best_c];
            for (size_t c = 0; c <= ncols; ++c) {
                if (m[best_r][c].is_zero()) continue;
                m[r][c] -= factor * m[best_r][c];
            }
        }
    }
    for (size_t r = 0; r < rows; ++r) {
        if (row_used[r]) continue;
        if (!m[r][ncols].is_zero()) return std::nullopt;
    }
    std::vector<ParamScalar> x(ncols, ParamScalar(0));
    for (const auto& [r, c] : pivots) x[c] = m[r][ncols];
    return x;
}

}  // namespace linalg

// ---------------------------------------------------------------------------
// Center scans
// ---------------------------------------------------------------------------

struct CenterScanResult {
    int max_degree = 0;
    int dimension = 0;
    std::vector<PbwElement> basis;
};

namespace detail {

inline std::vector<PbwMonomial> monomials_up_to(int max_degree, bool with_w) {
    std::vector<PbwMonomial> out;
    for (int l = 0; l <= max_degree; ++l)
        for (int m = 0; l + m <= max_degree; ++m)
            for (int n = 0; l + m + n <= max_degree; ++n)
                for (int o = 0; l + m + n + o <= max_degree; ++o) {
                    if (!with_w) {
                        out.push_back(PbwMonomial{l, m, n, o, 0});
                        continue;
                    }
                    for (int r = 0; l + m + n + o + r <= max_degree; ++r)
                        out.push_back(PbwMonomial{l, m, n, o, r});
                }
    return out;
}

}  // namespace detail

/// Solve [E, g] = 0 for all generators g over the monomials of total degree
/// <= max_degree, by exact elimination.  Every returned basis element is
/// re-verified to commute with the generators.
inline CenterScanResult center_scan(const Algebra& alg, int max_degree) {
    if (max_degree < 1) throw Error("center_scan requires max_degree >= 1");
    if (alg.kind() == AlgebraKind::ALoc)
        throw MismatchError("center_scan runs on A, A[w] or the torus");
    if (alg.config().is_generic()) {
        // generic parameters are never roots of unity
    } else if (alg.config().p_is_root_of_unity() || alg.config().q_is_root_of_unity()) {
        throw ConfigError("center_scan requires a non-root-of-unity configuration");
    }
    const bool with_w = alg.kind() == AlgebraKind::AW;
    const auto monos = detail::monomials_up_to(max_degree, with_w);

    std::vector<GenLetter> gens{GenLetter::X, GenLetter::Y, GenLetter::S, GenLetter::T};
    if (with_w) gens.push_back(GenLetter::W);

    std::map<std::pair<size_t, PbwMonomial>, size_t> row_of;
    linalg::Matrix matrix;
    for (size_t j = 0; j < monos.size(); ++j) {
        const PbwElement ej = PbwElement::monomial(alg, monos[j]);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const PbwElement comm = commutator(ej, PbwElement::generator(alg, gens[gi]));
            for (const auto& [mono, coeff] : comm.terms()) {
                const auto key = std::make_pair(gi, mono);
                auto it = row_of.find(key);
                if (it == row_of.end()) {
                    it = row_of.emplace(key, matrix.size()).first;
                    matrix.emplace_back(monos.size(), ParamScalar(0));
                }
                matrix[it->second][j] += coeff;
            }
        }
    }

    CenterScanResult result;
    result.max_degree = max_degree;
    for (const auto& v : linalg::nullspace(std::move(matrix), monos.size())) {
        PbwElement e = PbwElement::zero(alg);
        for (size_t j = 0; j < monos.size(); ++j) e.add_term(monos[j], v[j]);
        for (GenLetter g : gens) {
            if (!commutator(e, PbwElement::generator(alg, g)).is_zero())
                throw Error("center_scan produced a non-central element");
        }
        result.basis.push_back(std::move(e));
    }
    result.dimension = static_cast<int>(result.basis.size());
    return result;
}

struct TorusCenterScanResult {
    int max_degree = 0;
    int dimension = 0;
    std::vector<TorusElement> basis;
};

/// Center scan over the Laurent ball |a|+|b|+|c|+|d| <= max_degree.  Every
/// commutator [monomial, generator] is a scalar twist of a single monomial,
/// so the system is diagonal; it is still solved by the exact eliminator.
inline TorusCenterScanResult center_scan_torus(const Torus& ctx, int max_degree) {
    if (max_degree < 1) throw Error("center_scan requires max_degree >= 1");
    std::vector<TorusExp> monos;
    for (int a = -max_degree; a <= max_degree; ++a)
        for (int b = -max_degree; b <= max_degree; ++b)
            for (int c = -max_degree; c <= max_degree; ++c)
                for (int d = -max_degree; d <= max_degree; ++d) {
                    const TorusExp e{a, b, c, d};
                    if (torus_grade(e) <= max_degree) monos.push_back(e);
                }

    std::map<std::pair<size_t, TorusExp>, size_t> row_of;
    linalg::Matrix matrix;
    for (size_t j = 0; j < monos.size(); ++j) {
        const TorusElement ej = TorusElement::monomial(ctx, monos[j]);
        for (size_t gi = 0; gi < 4; ++gi) {
            const TorusElement g = TorusElement::generator(ctx, static_cast<int>(gi));
            const TorusElement comm = ej * g - g * ej;
            for (const auto& [mono, coeff] : comm.terms()) {
                const auto key = std::make_pair(gi, mono);
                auto it = row_of.find(key);
                if (it == row_of.end()) {
                    it = row_of.emplace(key, matrix.size()).first;
                    matrix.emplace_back(monos.size(), ParamScalar(0));
                }
                matrix[it->second][j] += coeff;
            }
        }
    }

    TorusCenterScanResult result;
    result.max_degree = max_degree;
    for (const auto& v : linalg::nullspace(std::move(matrix), monos.size())) {
        TorusElement e = TorusElement::zero(ctx);
        for (size_t j = 0; j < monos.size(); ++j) e.add_term(monos[j], v[j]);
        for (int gi = 0; gi < 4; ++gi) {
            const TorusElement g = TorusElement::generator(ctx, gi);
            if (!(e * g - g * e).is_zero()) throw Error("center_scan produced a non-central element");
        }
        result.basis.push_back(std::move(e));
    }
    result.dimension = static_cast<int>(result.basis.size());
    return result;
}

// ---------------------------------------------------------------------------
// Normality
// ---------------------------------------------------------------------------

/// Whether u is normal: for each generator g there is a v_g with u g = v_g u.
/// Any solution v_g has total degree exactly deg(u g) - deg(u), so a single
/// exact linear solve at that degree decides existence.
inline bool normality_check(const PbwElement& u, const Algebra& alg) {
    if (u.is_zero()) throw Error("normality_check requires a nonzero element");
    std::vector<GenLetter> gens{GenLetter::X, GenLetter::Y, GenLetter::S, GenLetter::T};
    if (alg.kind() == AlgebraKind::AW) gens.push_back(GenLetter::W);

    for (GenLetter g : gens) {
        const PbwElement rhs = u * PbwElement::generator(alg, g);
        const int dv = rhs.degree() - u.degree();
        if (dv < 0) return false;
        const auto monos = detail::monomials_up_to(dv, alg.kind() == AlgebraKind::AW);

        std::map<PbwMonomial, size_t> row_of;
        linalg::Matrix matrix;
        std::vector<ParamScalar> b;
        auto row_index = [&](const PbwMonomial& mono) {
            auto it = row_of.find(mono);
            if (it == row_of.end()) {
                it = row_of.emplace(mono, matrix.size()).first;
                matrix.emplace_back(monos.size(), ParamScalar(0));
                b.emplace_back(0);
            }
            return it->second;
        };
        for (size_t j = 0; j < monos.size(); ++j) {
            const PbwElement col = PbwElement::monomial(alg, monos[j]) * u;
            for (const auto& [mono, coeff] : col.terms()) matrix[row_index(mono)][j] += coeff;
        }
        for (const auto& [mono, coeff] : rhs.terms()) b[row_index(mono)] += coeff;
        if (!linalg::solve(std::move(matrix), std::move(b))) return false;
    }
    return true;
}

}  // namespace gwa
