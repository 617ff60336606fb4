#pragma once

// The generalized-Weyl-algebra presentation over the base ring K[z]_q[s,t]:
// elements are combinations of z^a s^b t^c X^d with X^d = x^d for d >= 0 and
// y^(-d) for d < 0.  The same term representation, with Laurent exponents in
// z, s, t, realizes the localization at {z^i s^j t^k}; a basis tag keeps the
// two apart.  Defining data:
//
//   y x = (z - 1)/(p - 1),   x y = (p z - 1)/(p - 1),
//   sigma(z) = p z,  sigma(s) = l^-1 s,  sigma(t) = u^-1 t,
//   X^d r = sigma^d(r) X^d  for base-ring r.

#include <map>
#include <string>

#include "gwa/pbw.hpp"

namespace gwa {

enum class ZBasis { Gwa, Loc };

struct GwaMonomial {
    int a = 0, b = 0, c = 0;  // exponents of z, s, t
    int d = 0;                // signed degree: x^d or y^(-d)

    int grade() const { return std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d); }

    friend bool operator==(const GwaMonomial& x, const GwaMonomial& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const GwaMonomial& x, const GwaMonomial& y) { return !(x == y); }
    friend bool operator<(const GwaMonomial& x, const GwaMonomial& y) {
        if (x.grade() != y.grade()) return x.grade() < y.grade();
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }

    std::string to_string() const {
        std::string out;
        auto app = [&out](const char* g, int e) {
            if (e == 0) return;
            if (!out.empty()) out += "*";
            out += g;
            if (e != 1) out += "^" + std::to_string(e);
        };
        app("z", a);
        app("s", b);
        app("t", c);
        if (d > 0) app("x", d);
        if (d < 0) app("y", -d);
        return out.empty() ? "1" : out;
    }
};

/// An element in the z-basis; `ZBasis::Gwa` values live in the plain algebra
/// (nonnegative base exponents), `ZBasis::Loc` values in the localization.
class GwaElement {
  public:
    using TermMap = std::map<GwaMonomial, ParamScalar>;

    GwaElement(Algebra alg, ZBasis basis) : alg_(std::move(alg)), basis_(basis) {
        check_context();
        alg_.require_p_not_one("the z-basis");
    }

    static GwaElement zero(const Algebra& alg, ZBasis basis = ZBasis::Gwa) {
        return GwaElement(alg, basis);
    }
    static GwaElement scalar(const Algebra& alg, const ParamScalar& c, ZBasis basis = ZBasis::Gwa) {
        GwaElement e(alg, basis);
        e.add_term(GwaMonomial{}, c);
        return e;
    }
    static GwaElement one(const Algebra& alg, ZBasis basis = ZBasis::Gwa) {
        return scalar(alg, ParamScalar(1), basis);
    }
    static GwaElement monomial(const Algebra& alg, const GwaMonomial& mono,
                               const ParamScalar& c = ParamScalar(1), ZBasis basis = ZBasis::Gwa) {
        GwaElement e(alg, basis);
        e.add_term(mono, c);
        return e;
    }

    static GwaElement generator(const Algebra& alg, GenLetter g, ZBasis basis = ZBasis::Gwa) {
        GwaMonomial mono;
        switch (g) {
            case GenLetter::X: mono.d = 1; break;
            case GenLetter::Y: mono.d = -1; break;
            case GenLetter::S: mono.b = 1; break;
            case GenLetter::T: mono.c = 1; break;
            case GenLetter::W: throw MismatchError("the z-basis has no w generator");
        }
        return monomial(alg, mono, ParamScalar(1), basis);
    }

    const Algebra& algebra() const { return alg_; }
    ZBasis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const GwaMonomial& mono, const ParamScalar& c) {
        if (c.is_zero()) return;
        if (basis_ == ZBasis::Gwa && (mono.a < 0 || mono.b < 0 || mono.c < 0))
            throw MismatchError("negative base exponents require the localized basis");
        const ParamScalar cc = adjust(c);
        if (cc.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, cc);
        } else {
            it->second += cc;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GwaElement operator-() const {
        GwaElement r(*this);
        for (auto& [mono, c] : r.terms_) c = -c;
        return r;
    }

    GwaElement& operator+=(const GwaElement& o) {
        require_compatible(o, "add");
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    GwaElement& operator-=(const GwaElement& o) {
        require_compatible(o, "sub");
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend GwaElement operator+(GwaElement a, const GwaElement& b) { return a += b; }
    friend GwaElement operator-(GwaElement a, const GwaElement& b) { return a -= b; }

    friend GwaElement operator*(const ParamScalar& c, const GwaElement& e) {
        GwaElement r(e.alg_, e.basis_);
        for (const auto& [mono, k] : e.terms_) r.add_term(mono, c * k);
        return r;
    }
    friend GwaElement operator*(const GwaElement& e, const ParamScalar& c) { return c * e; }

    friend GwaElement operator*(const GwaElement& a, const GwaElement& b);

    GwaElement pow(int n) const {
        if (n < 0) throw Error("negative power of a z-basis element");
        GwaElement r = one(alg_, basis_);
        GwaElement base(*this);
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const GwaElement& a, const GwaElement& b) {
        if (a.basis_ != b.basis_ || !a.alg_.same_as(b.alg_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second) return false;
        return true;
    }
    friend bool operator!=(const GwaElement& a, const GwaElement& b) { return !(a == b); }

    void require_compatible(const GwaElement& o, const char* what) const {
        if (basis_ != o.basis_) throw MismatchError(std::string(what) + ": basis mismatch");
        alg_.require_same(o.alg_, what);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            ParamScalar c = it->second;
            const bool neg = !c.num().is_zero() && c.num().lead_coeff() < 0;
            if (out.empty()) {
                if (neg) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += neg ? " - " : " + ";
                if (neg) c = -c;
            }
            const std::string mono = it->first.to_string();
            if (mono == "1") {
                const std::string cs = c.to_string();
                out += (c.num().term_count() > 1) ? "(" + cs + ")" : cs;
            } else if (c.is_one()) {
                out += mono;
            } else {
                const std::string cs = c.to_string();
                out += ((c.num().term_count() > 1 && c.den().is_one()) ? "(" + cs + ")" : cs);
                out += "*" + mono;
            }
        }
        return out;
    }

  private:
    void check_context() const {
        if (basis_ == ZBasis::Gwa && alg_.kind() != AlgebraKind::A)
            throw MismatchError("the plain z-basis represents the algebra A");
        if (basis_ == ZBasis::Loc && alg_.kind() != AlgebraKind::ALoc)
            throw MismatchError("the Laurent z-basis represents the localization");
    }

    ParamScalar adjust(const ParamScalar& c) const {
        if (alg_.config().is_generic() || c.is_constant()) return c;
        return specialize(c, alg_.config());
    }

    Algebra alg_;
    ZBasis basis_;
    TermMap terms_;
};

using LocElement = GwaElement;

namespace detail {

/// p^(k a) l^(-k b) u^(-k c): the scalar by which sigma^k twists z^a s^b t^c.
inline ParamScalar sigma_twist(const Algebra& alg, long k, int a, int b, int c) {
    return alg.p().pow(k * a) * alg.lam().pow(-k * b) * alg.mu().pow(-k * c);
}

/// Product over i in [lo, hi] of sigma^i((z-1)/(p-1)) = (p^i z - 1)/(p - 1),
/// returned as a z-polynomial (exponent -> coefficient).
inline std::map<int, ParamScalar> crossing_factor(const Algebra& alg, int lo, int hi) {
    const ParamScalar pm1_inv = (alg.p() - ParamScalar(1)).inverse();
    std::map<int, ParamScalar> acc{{0, ParamScalar(1)}};
    for (int i = lo; i <= hi; ++i) {
        const ParamScalar hi_coeff = alg.p().pow(i) * pm1_inv;
        const ParamScalar lo_coeff = -pm1_inv;
        std::map<int, ParamScalar> next;
        for (const auto& [e, k] : acc) {
            next[e + 1] += hi_coeff * k;
            next[e] += lo_coeff * k;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

/// sigma^k applied per term to the base part z^a s^b t^c (d is untouched).
inline GwaElement sigma_apply(const GwaElement& e, long k) {
    GwaElement out(e.algebra(), e.basis());
    for (const auto& [mono, c] : e.terms())
        out.add_term(mono, c * detail::sigma_twist(e.algebra(), k, mono.a, mono.b, mono.c));
    return out;
}

inline GwaElement operator*(const GwaElement& a, const GwaElement& b) {
    a.require_compatible(b, "multiply");
    const Algebra& alg = a.algebra();
    GwaElement out(alg, a.basis());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // X^d1 (z^a2 s^b2 t^c2) = sigma^d1(...) X^d1 ; then reorder the
            // base parts, where only t^c1 s^b2 contributes q^(-c1 b2).
            ParamScalar coeff = ca * cb * detail::sigma_twist(alg, ma.d, mb.a, mb.b, mb.c) *
                                alg.q().pow(-static_cast<long>(ma.c) * mb.b);
            const int base_a = ma.a + mb.a, base_b = ma.b + mb.b, base_c = ma.c + mb.c;
            const int dd = ma.d + mb.d;
            if (ma.d == 0 || mb.d == 0 || (ma.d > 0) == (mb.d > 0)) {
                out.add_term(GwaMonomial{base_a, base_b, base_c, dd}, coeff);
                continue;
            }
            const int k = std::min(std::abs(ma.d), std::abs(mb.d));
            const int lo = ma.d > 0 ? ma.d - k + 1 : ma.d + 1;
            const int hi = ma.d > 0 ? ma.d : ma.d + k;
            for (const auto& [ze, zc] : detail::crossing_factor(alg, lo, hi))
                out.add_term(GwaMonomial{base_a + ze, base_b, base_c, dd}, coeff * zc);
        }
    }
    return out;
}

inline GwaElement gwa_multiply(const GwaElement& a, const GwaElement& b) {
    if (a.basis() != ZBasis::Gwa) throw MismatchError("gwa_multiply expects the plain z-basis");
    return a * b;
}

/// (z - 1)/(p - 1) as a base-ring element: the GWA defining element.
inline GwaElement gwa_defining_element(const Algebra& alg, ZBasis basis = ZBasis::Gwa) {
    const ParamScalar pm1_inv = (alg.p() - ParamScalar(1)).inverse();
    GwaElement e(alg, basis);
    e.add_term(GwaMonomial{1, 0, 0, 0}, pm1_inv);
    e.add_term(GwaMonomial{0, 0, 0, 0}, -pm1_inv);
    return e;
}

/// Exact change of basis: peel xy = (pz-1)/(p-1) out of each x^l y^m block.
inline GwaElement to_gwa(const PbwElement& e) {
    if (e.algebra().kind() != AlgebraKind::A)
        throw MismatchError("to_gwa expects an element of the plain algebra");
    e.algebra().require_p_not_one("to_gwa");
    const Algebra& alg = e.algebra();
    GwaElement out(alg, ZBasis::Gwa);
    for (const auto& [mono, c] : e.terms()) {
        const int k = std::min(mono.l, mono.m);
        const int d = mono.l - mono.m;
        // x^l y^m = prod_{i=l-k+1}^{l} sigma^i((z-1)/(p-1)) * X^d
        auto zpoly = detail::crossing_factor(alg, mono.l - k + 1, mono.l);
        // then X^d s^n t^o = sigma^d(s^n t^o) X^d
        const ParamScalar twist = detail::sigma_twist(alg, d, 0, mono.n, mono.o);
        for (const auto& [ze, zc] : zpoly)
            out.add_term(GwaMonomial{ze, mono.n, mono.o, d}, c * zc * twist);
    }
    return out;
}

/// Substitute z = (1 - p^-1) x y + p^-1 and expand to the PBW basis.
inline PbwElement from_gwa(const GwaElement& e) {
    if (e.basis() != ZBasis::Gwa) throw MismatchError("from_gwa expects the plain z-basis");
    const Algebra& alg = e.algebra();
    const PbwElement z = z_element(alg);
    std::map<int, PbwElement> zpow{{0, PbwElement::one(alg)}};
    auto z_power = [&](int k) {
        auto it = zpow.find(k);
        if (it != zpow.end()) return it->second;
        PbwElement acc = zpow.rbegin()->second;
        for (int i = zpow.rbegin()->first; i < k; ++i) {
            acc = acc * z;
            zpow.emplace(i + 1, acc);
        }
        return acc;
    };
    PbwElement out = PbwElement::zero(alg);
    for (const auto& [mono, c] : e.terms()) {
        PbwMonomial base;
        base.n = mono.b;
        base.o = mono.c;
        PbwMonomial xpart;
        if (mono.d >= 0) xpart.l = mono.d; else xpart.m = -mono.d;
        // z^a * s^b t^c * X^d, reordered into PBW form by the engine
        out += c * (z_power(mono.a) * PbwElement::monomial(alg, base) * PbwElement::monomial(alg, xpart));
    }
    return out;
}

}  // namespace gwa
