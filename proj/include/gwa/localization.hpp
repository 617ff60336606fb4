#pragma once

// The localization A_S at S = {z^i s^j t^k}: Laurent z-basis arithmetic,
// units and their inverses, membership in the principal ideals (z), (s), (t),
// and the McConnell-Pettit torus C with its commutation matrix.

#include <array>
#include <memory>

#include "gwa/zbasis.hpp"

namespace gwa {

/// Move a plain z-basis element into the localized basis.
inline LocElement to_loc(const GwaElement& e) {
    if (e.basis() == ZBasis::Loc) return e;
    LocElement out(e.algebra().with_kind(AlgebraKind::ALoc), ZBasis::Loc);
    for (const auto& [mono, c] : e.terms()) out.add_term(mono, c);
    return out;
}

inline LocElement loc_multiply(const LocElement& a, const LocElement& b) {
    if (a.basis() != ZBasis::Loc) throw MismatchError("loc_multiply expects the localized basis");
    return a * b;
}

/// Whether the element is a unit of A_S, i.e. a single term a z^l s^m t^n.
inline bool is_unit(const LocElement& e) {
    return e.term_count() == 1 && e.terms().begin()->first.d == 0;
}

/// Two-sided inverse of a unit a z^l s^m t^n:
///   (a z^l s^m t^n)^-1 = a^-1 q^(-m n) z^-l s^-m t^-n.
inline LocElement invert_unit(const LocElement& e) {
    if (e.basis() != ZBasis::Loc) throw MismatchError("invert_unit expects the localized basis");
    if (!is_unit(e)) throw NotAUnitError();
    const auto& [mono, coeff] = *e.terms().begin();
    const ParamScalar c = coeff.inverse() * e.algebra().q().pow(-static_cast<long>(mono.b) * mono.c);
    return LocElement::monomial(e.algebra(), GwaMonomial{-mono.a, -mono.b, -mono.c, 0}, c, ZBasis::Loc);
}

/// The three normal elements whose principal ideals are the height-one primes.
enum class NormalGen { Z, S, T };

/// Membership in the principal two-sided ideal generated by z, s or t.  The
/// generators are normal and the basis is monomial, so an element lies in the
/// ideal exactly when every term carries the generator.
inline bool ideal_membership(const GwaElement& e, NormalGen gen) {
    if (e.basis() != ZBasis::Gwa)
        throw MismatchError("ideal membership is decided in the unlocalized basis");
    for (const auto& [mono, c] : e.terms()) {
        int exp = 0;
        switch (gen) {
            case NormalGen::Z: exp = mono.a; break;
            case NormalGen::S: exp = mono.b; break;
            case NormalGen::T: exp = mono.c; break;
        }
        if (exp < 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quantum torus
// ---------------------------------------------------------------------------

/// q-commutation table: g_i g_j = M[i][j] g_j g_i.
struct CommutationMatrix {
    std::array<std::array<ParamScalar, 4>, 4> m;

    const ParamScalar& at(int i, int j) const {
        return m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    void validate() const {
        for (int i = 0; i < 4; ++i) {
            if (!(at(i, i) == ParamScalar(1))) throw ConfigError("commutation matrix diagonal must be 1");
            for (int j = 0; j < 4; ++j) {
                if (at(i, j).is_zero()) throw ConfigError("commutation factors must be nonzero");
                if (!(at(i, j) * at(j, i) == ParamScalar(1)))
                    throw ConfigError("commutation matrix must satisfy M[j][i] = M[i][j]^-1");
            }
        }
    }

    friend bool operator==(const CommutationMatrix& a, const CommutationMatrix& b) { return a.m == b.m; }
};

/// The torus C obtained from A_S by inverting y, with generators ordered
/// z, y, s, t and the commutation matrix
///   [ 1    p    1    1 ]
///   [ p^-1 1    l    u ]
///   [ 1    l^-1 1    q ]
///   [ 1    u^-1 q^-1 1 ]
inline CommutationMatrix torus_commutation_matrix(const AlgebraParams& params) {
    const ParamScalar one(1);
    CommutationMatrix M;
    M.m = {{{one, params.p, one, one},
            {params.p.inverse(), one, params.lam, params.mu},
            {one, params.lam.inverse(), one, params.q},
            {one, params.mu.inverse(), params.q.inverse(), one}}};
    return M;
}

/// Shared context for torus elements: the matrix plus the configuration.
class Torus {
  public:
    Torus(CommutationMatrix matrix, ParamConfig config)
        : impl_(std::make_shared<const Impl>(make_impl(std::move(matrix), std::move(config)))) {}

    static Torus standard(const Algebra& alg) {
        return Torus(torus_commutation_matrix(alg.params()), alg.config());
    }

    const CommutationMatrix& matrix() const { return impl_->matrix; }
    const ParamConfig& config() const { return impl_->config; }

    bool same_as(const Torus& o) const {
        return impl_ == o.impl_ ||
               (impl_->matrix == o.impl_->matrix && impl_->config == o.impl_->config);
    }

  private:
    struct Impl {
        CommutationMatrix matrix;
        ParamConfig config;
    };
    static Impl make_impl(CommutationMatrix matrix, ParamConfig config) {
        if (!config.is_generic())
            for (auto& row : matrix.m)
                for (auto& entry : row) entry = specialize(entry, config);
        matrix.validate();
        return Impl{std::move(matrix), std::move(config)};
    }
    std::shared_ptr<const Impl> impl_;
};

/// Laurent exponent vector in the generator order z, y, s, t.
using TorusExp = std::array<int, 4>;

inline int torus_grade(const TorusExp& e) {
    return std::abs(e[0]) + std::abs(e[1]) + std::abs(e[2]) + std::abs(e[3]);
}

struct TorusExpLess {
    bool operator()(const TorusExp& a, const TorusExp& b) const {
        const int ga = torus_grade(a), gb = torus_grade(b);
        if (ga != gb) return ga < gb;
        return a < b;
    }
};

class TorusElement {
  public:
    using TermMap = std::map<TorusExp, ParamScalar, TorusExpLess>;

    explicit TorusElement(Torus ctx) : ctx_(std::move(ctx)) {}

    static TorusElement zero(const Torus& ctx) { return TorusElement(ctx); }
    static TorusElement one(const Torus& ctx) { return monomial(ctx, TorusExp{0, 0, 0, 0}); }
    static TorusElement monomial(const Torus& ctx, const TorusExp& e,
                                 const ParamScalar& c = ParamScalar(1)) {
        TorusElement t(ctx);
        t.add_term(e, c);
        return t;
    }
    /// Generators in the fixed order: 0 = z, 1 = y, 2 = s, 3 = t.
    static TorusElement generator(const Torus& ctx, int idx) {
        TorusExp e{0, 0, 0, 0};
        e[static_cast<size_t>(idx)] = 1;
        return monomial(ctx, e);
    }

    const Torus& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TorusExp& e, const ParamScalar& c) {
        if (c.is_zero()) return;
        const ParamScalar cc =
            ctx_.config().is_generic() || c.is_constant() ? c : specialize(c, ctx_.config());
        if (cc.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, cc);
        } else {
            it->second += cc;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TorusElement operator-() const {
        TorusElement r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    TorusElement& operator+=(const TorusElement& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TorusElement& operator-=(const TorusElement& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const ParamScalar& c, const TorusElement& t) {
        TorusElement r(t.ctx_);
        for (const auto& [e, k] : t.terms_) r.add_term(e, c * k);
        return r;
    }

    friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
        a.require_same(b);
        const CommutationMatrix& M = a.ctx_.matrix();
        TorusElement out(a.ctx_);
        for (const auto& [u, cu] : a.terms_) {
            for (const auto& [v, cv] : b.terms_) {
                // move each v-letter left through the higher-indexed u-letters
                ParamScalar swaps(1);
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        swaps *= M.at(j, i).pow(static_cast<long>(u[static_cast<size_t>(j)]) *
                                                v[static_cast<size_t>(i)]);
                TorusExp e{u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
                out.add_term(e, cu * cv * swaps);
            }
        }
        return out;
    }

    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        if (!a.ctx_.same_as(b.ctx_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  private:
    void require_same(const TorusElement& o) const {
        if (!ctx_.same_as(o.ctx_)) throw MismatchError("torus contexts differ");
    }

    Torus ctx_;
    TermMap terms_;
};

inline TorusElement torus_multiply(const TorusElement& a, const TorusElement& b) { return a * b; }

/// Every single-term torus element is a unit; the reorder scalar is fixed by
/// multiplying the candidate against the input.
inline TorusElement invert_torus_monomial(const TorusElement& e) {
    if (e.terms().size() != 1) throw NotAUnitError("only single-term torus elements are inverted");
    const auto& [exp, coeff] = *e.terms().begin();
    const TorusExp neg{-exp[0], -exp[1], -exp[2], -exp[3]};
    const TorusElement candidate = TorusElement::monomial(e.context(), neg);
    const TorusElement prod = e * candidate;
    const ParamScalar fix = prod.terms().begin()->second;
    return (coeff * fix).inverse() * candidate;
}

}  // namespace gwa
