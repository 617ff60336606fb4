#pragma once

// Construction, verification, composition and inversion of the morphism
// families of the algebra: scalar automorphisms, triangular automorphisms of
// A[w], the four isomorphism shapes between two parameter tuples, the
// positive-type endomorphisms of the localization with their constructive
// inversion, the negative involution, and the affine classification at
// numeric parameters.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwa/localization.hpp"

namespace gwa {

/// Images live either in a PBW algebra (A, A[w]) or in the localization.
using AnyElement = std::variant<PbwElement, LocElement>;

inline bool any_is_zero(const AnyElement& e) {
    return std::visit([](const auto& x) { return x.is_zero(); }, e);
}
inline std::string any_to_string(const AnyElement& e) {
    return std::visit([](const auto& x) { return x.to_string(); }, e);
}
inline bool any_equal(const AnyElement& a, const AnyElement& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<PbwElement>(a))
        return std::get<PbwElement>(a) == std::get<PbwElement>(b);
    return std::get<LocElement>(a) == std::get<LocElement>(b);
}

/// A candidate algebra morphism given by generator images.  Maps start out
/// unverified and become usable only through verify_relations.
struct GenMap {
    Algebra domain;
    Algebra codomain;
    std::map<GenLetter, AnyElement> images;
    bool verified = false;

    const AnyElement& image(GenLetter g) const {
        auto it = images.find(g);
        if (it == images.end())
            throw MismatchError(std::string("no image for generator ") + letter_name(g));
        return it->second;
    }
    const PbwElement& pbw_image(GenLetter g) const {
        const AnyElement& e = image(g);
        if (!std::holds_alternative<PbwElement>(e))
            throw MismatchError("image is not in a PBW algebra");
        return std::get<PbwElement>(e);
    }
    const LocElement& loc_image(GenLetter g) const {
        const AnyElement& e = image(g);
        if (!std::holds_alternative<LocElement>(e))
            throw MismatchError("image is not in the localization");
        return std::get<LocElement>(e);
    }
};

inline std::vector<GenLetter> domain_generators(AlgebraKind kind) {
    std::vector<GenLetter> gens{GenLetter::X, GenLetter::Y, GenLetter::S, GenLetter::T};
    if (kind == AlgebraKind::AW) gens.push_back(GenLetter::W);
    return gens;
}

inline GenMap make_genmap(Algebra domain, Algebra codomain, std::map<GenLetter, AnyElement> images) {
    if (domain.config() != codomain.config())
        throw MismatchError("domain and codomain must share the parameter configuration");
    GenMap f{std::move(domain), std::move(codomain), std::move(images), false};
    for (GenLetter g : domain_generators(f.domain.kind())) f.image(g);
    for (const auto& [g, img] : f.images) {
        const bool want_loc = f.codomain.kind() == AlgebraKind::ALoc;
        if (want_loc != std::holds_alternative<LocElement>(img))
            throw MismatchError("image basis does not match the codomain");
        std::visit([&](const auto& e) { e.algebra().require_same(f.codomain, "image"); }, img);
    }
    return f;
}

struct Residual {
    std::string relation;
    AnyElement value;
};

struct VerifyResult {
    bool ok = false;
    GenMap map;  // verified flag set when ok
    std::vector<Residual> failures;
};

namespace detail {

template <typename Elem, typename One>
void check_defining_relations(const GenMap& f, const One& one, std::vector<Residual>& failures,
                              const Elem& x, const Elem& y, const Elem& s, const Elem& t) {
    const AlgebraParams& par = f.domain.params();
    auto push = [&failures](const char* name, Elem r) {
        if (!r.is_zero()) failures.push_back({name, AnyElement(std::move(r))});
    };
    push("x*y - p*y*x - 1", x * y - par.p * (y * x) - one);
    push("s*t - q*t*s", s * t - par.q * (t * s));
    push("s*x - l*x*s", s * x - par.lam * (x * s));
    push("s*y - l^-1*y*s", s * y - par.lam.inverse() * (y * s));
    push("t*x - u*x*t", t * x - par.mu * (x * t));
    push("t*y - u^-1*y*t", t * y - par.mu.inverse() * (y * t));
}

}  // namespace detail

/// Evaluate every defining relation of the domain on the images.  The map is
/// marked verified exactly when all residuals vanish (and, for maps on the
/// localization, the images of z, s, t are units).
inline VerifyResult verify_relations(const GenMap& f) {
    VerifyResult result;
    result.map = f;
    result.map.verified = false;

    if (f.domain.kind() == AlgebraKind::ALoc) {
        if (f.codomain.kind() != AlgebraKind::ALoc)
            throw MismatchError("maps from the localization land in the localization");
        const LocElement& x = f.loc_image(GenLetter::X);
        const LocElement& y = f.loc_image(GenLetter::Y);
        const LocElement& s = f.loc_image(GenLetter::S);
        const LocElement& t = f.loc_image(GenLetter::T);
        detail::check_defining_relations(f, LocElement::one(f.codomain, ZBasis::Loc),
                                         result.failures, x, y, s, t);
        const LocElement z_img = x * y - y * x;
        for (const auto& [name, img] :
             {std::pair<const char*, const LocElement&>{"phi(z) must be a unit", z_img},
              {"phi(s) must be a unit", s},
              {"phi(t) must be a unit", t}}) {
            if (!is_unit(img)) result.failures.push_back({name, AnyElement(img)});
        }
    } else {
        const PbwElement& x = f.pbw_image(GenLetter::X);
        const PbwElement& y = f.pbw_image(GenLetter::Y);
        const PbwElement& s = f.pbw_image(GenLetter::S);
        const PbwElement& t = f.pbw_image(GenLetter::T);
        detail::check_defining_relations(f, PbwElement::one(f.codomain), result.failures, x, y, s, t);
        if (f.domain.kind() == AlgebraKind::AW) {
            const PbwElement& w = f.pbw_image(GenLetter::W);
            for (GenLetter g : {GenLetter::X, GenLetter::Y, GenLetter::S, GenLetter::T}) {
                PbwElement r = w * f.pbw_image(g) - f.pbw_image(g) * w;
                if (!r.is_zero())
                    result.failures.push_back(
                        {std::string("w*") + letter_name(g) + " - " + letter_name(g) + "*w",
                         AnyElement(std::move(r))});
            }
        }
    }
    result.ok = result.failures.empty();
    result.map.verified = result.ok;
    return result;
}

/// verify_relations with failures promoted to exceptions.
inline GenMap verify_or_throw(const GenMap& f, const char* what) {
    VerifyResult r = verify_relations(f);
    if (!r.ok) {
        std::string msg = std::string(what) + ": relation check failed:";
        for (const auto& fail : r.failures) msg += " [" + fail.relation + "]";
        throw ConstraintError(msg);
    }
    return r.map;
}

// ---------------------------------------------------------------------------
// Application and composition
// ---------------------------------------------------------------------------

inline PbwElement apply_morphism(const GenMap& f, const PbwElement& e);
inline LocElement apply_morphism(const GenMap& f, const LocElement& e);

inline AnyElement apply_morphism(const GenMap& f, const AnyElement& e) {
    if (std::holds_alternative<PbwElement>(e)) return AnyElement(apply_morphism(f, std::get<PbwElement>(e)));
    return AnyElement(apply_morphism(f, std::get<LocElement>(e)));
}

inline PbwElement apply_morphism(const GenMap& f, const PbwElement& e) {
    if (!f.verified) throw ConstraintError("apply_morphism requires a verified map");
    if (f.domain.kind() == AlgebraKind::ALoc)
        throw MismatchError("element basis does not match the domain");
    e.algebra().require_same(f.domain, "apply_morphism");
    const PbwElement& x = f.pbw_image(GenLetter::X);
    const PbwElement& y = f.pbw_image(GenLetter::Y);
    const PbwElement& s = f.pbw_image(GenLetter::S);
    const PbwElement& t = f.pbw_image(GenLetter::T);
    PbwElement out = PbwElement::zero(f.codomain);
    for (const auto& [mono, c] : e.terms()) {
        PbwElement term = x.pow(mono.l) * y.pow(mono.m) * s.pow(mono.n) * t.pow(mono.o);
        if (mono.r > 0) term = term * f.pbw_image(GenLetter::W).pow(mono.r);
        out += c * term;
    }
    return out;
}

inline LocElement apply_morphism(const GenMap& f, const LocElement& e) {
    if (!f.verified) throw ConstraintError("apply_morphism requires a verified map");
    if (f.domain.kind() != AlgebraKind::ALoc)
        throw MismatchError("element basis does not match the domain");
    e.algebra().require_same(f.domain, "apply_morphism");
    const LocElement& x = f.loc_image(GenLetter::X);
    const LocElement& y = f.loc_image(GenLetter::Y);
    const LocElement& s = f.loc_image(GenLetter::S);
    const LocElement& t = f.loc_image(GenLetter::T);
    const LocElement z = x * y - y * x;
    const LocElement z_inv = invert_unit(z);
    const LocElement s_inv = invert_unit(s);
    const LocElement t_inv = invert_unit(t);
    auto power = [](const LocElement& base, const LocElement& base_inv, int k) {
        return k >= 0 ? base.pow(k) : base_inv.pow(-k);
    };
    LocElement out = LocElement::zero(f.codomain, ZBasis::Loc);
    for (const auto& [mono, c] : e.terms()) {
        LocElement term = power(z, z_inv, mono.a) * power(s, s_inv, mono.b) * power(t, t_inv, mono.c);
        if (mono.d >= 0) term = term * x.pow(mono.d);
        else term = term * y.pow(-mono.d);
        out += c * term;
    }
    return out;
}

/// f after g.  The verified flag is inherited from the factors.
inline GenMap compose(const GenMap& f, const GenMap& g) {
    if (!g.codomain.same_as(f.domain)) throw MismatchError("compose: codomain of g is not the domain of f");
    GenMap h;
    h.domain = g.domain;
    h.codomain = f.codomain;
    h.verified = f.verified && g.verified;
    for (const auto& [gen, img] : g.images) h.images.emplace(gen, apply_morphism(f, img));
#ifdef GWA_RECHECK_COMPOSE
    if (h.verified) h = verify_or_throw(h, "compose recheck");
#endif
    return h;
}

inline GenMap identity_map(const Algebra& alg) {
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    for (GenLetter g : domain_generators(alg.kind())) {
        if (alg.kind() == AlgebraKind::ALoc)
            f.images.emplace(g, AnyElement(LocElement::generator(alg, g, ZBasis::Loc)));
        else
            f.images.emplace(g, AnyElement(PbwElement::generator(alg, g)));
    }
    f.verified = true;
    return f;
}

// ---------------------------------------------------------------------------
// The scalar and triangular automorphism families
// ---------------------------------------------------------------------------

/// x -> a x, y -> a^-1 y, s -> b s, t -> c t on the plain algebra.
inline GenMap make_scalar_aut(const Algebra& alg, const ParamScalar& alpha, const ParamScalar& beta,
                              const ParamScalar& gamma) {
    if (alg.kind() != AlgebraKind::A) throw MismatchError("scalar automorphisms act on the plain algebra");
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
        throw ConstraintError("scalar automorphisms need nonzero scalars");
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    f.images.emplace(GenLetter::X, AnyElement(alpha * PbwElement::generator(alg, GenLetter::X)));
    f.images.emplace(GenLetter::Y, AnyElement(alpha.inverse() * PbwElement::generator(alg, GenLetter::Y)));
    f.images.emplace(GenLetter::S, AnyElement(beta * PbwElement::generator(alg, GenLetter::S)));
    f.images.emplace(GenLetter::T, AnyElement(gamma * PbwElement::generator(alg, GenLetter::T)));
    return verify_or_throw(f, "make_scalar_aut");
}

/// Triangular automorphism of A[w]: generators scale as in the scalar family
/// and w -> a w + b with a nonzero and b a scalar.
inline GenMap make_triangular_aut(const Algebra& alg, const ParamScalar& alpha, const ParamScalar& beta,
                                  const ParamScalar& gamma, const ParamScalar& a,
                                  const PbwElement& b_poly) {
    if (alg.kind() != AlgebraKind::AW)
        throw MismatchError("triangular automorphisms act on the polynomial extension");
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
        throw ConstraintError("triangular automorphisms need nonzero scalars");
    if (a.is_zero()) throw ConstraintError("the w-coefficient must be nonzero");
    b_poly.algebra().require_same(alg, "make_triangular_aut");
    for (const auto& [mono, c] : b_poly.terms()) {
        if (mono.r > 0) throw ConstraintError("the w-image offset must have w-degree 0");
        if (mono.l + mono.m + mono.n + mono.o > 0)
            throw ConstraintError("the w-image offset must be central, hence a scalar");
    }
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    f.images.emplace(GenLetter::X, AnyElement(alpha * PbwElement::generator(alg, GenLetter::X)));
    f.images.emplace(GenLetter::Y, AnyElement(alpha.inverse() * PbwElement::generator(alg, GenLetter::Y)));
    f.images.emplace(GenLetter::S, AnyElement(beta * PbwElement::generator(alg, GenLetter::S)));
    f.images.emplace(GenLetter::T, AnyElement(gamma * PbwElement::generator(alg, GenLetter::T)));
    f.images.emplace(GenLetter::W, AnyElement(a * PbwElement::generator(alg, GenLetter::W) + b_poly));
    return verify_or_throw(f, "make_triangular_aut");
}

// ---------------------------------------------------------------------------
// Isomorphisms between two parameter tuples
// ---------------------------------------------------------------------------

/// Which of the four parameter relations connects the two algebras, plus the
/// free scalars of the generator images.
struct IsoCase {
    int id = 1;  // 1..4
    ParamScalar alpha{1}, beta{1}, gamma{1};
};

inline bool iso_case_equations_hold(int id, const AlgebraParams& a, const AlgebraParams& b) {
    const ParamScalar one(1);
    switch (id) {
        case 1: return a.p == b.p && a.q == b.q && a.lam == b.lam && a.mu == b.mu;
        case 2: return a.p * b.p == one && a.q == b.q && a.lam * b.lam == one && a.mu * b.mu == one;
        case 3: return a.p == b.p && a.q * b.q == one && a.lam == b.mu && b.lam == a.mu;
        case 4: return a.p * b.p == one && a.q * b.q == one && a.lam * b.mu == one && b.lam * a.mu == one;
    }
    throw ConstraintError("isomorphism case must be 1, 2, 3 or 4");
}

/// Generator images for the four cases; all maps are re-verified.
inline GenMap make_isomorphism(const IsoCase& iso, const Algebra& source, const Algebra& target) {
    if (source.kind() != AlgebraKind::A || target.kind() != AlgebraKind::A)
        throw MismatchError("isomorphisms are built between plain algebras");
    if (iso.alpha.is_zero() || iso.beta.is_zero() || iso.gamma.is_zero())
        throw ConstraintError("isomorphism scalars must be nonzero");
    if (!iso_case_equations_hold(iso.id, source.params(), target.params()))
        throw ConstraintError("case equations violated for case " + std::to_string(iso.id));

    const PbwElement x2 = PbwElement::generator(target, GenLetter::X);
    const PbwElement y2 = PbwElement::generator(target, GenLetter::Y);
    const PbwElement s2 = PbwElement::generator(target, GenLetter::S);
    const PbwElement t2 = PbwElement::generator(target, GenLetter::T);
    const bool swap_xy = iso.id == 2 || iso.id == 4;
    const bool swap_st = iso.id == 3 || iso.id == 4;

    GenMap f;
    f.domain = source;
    f.codomain = target;
    if (swap_xy) {
        f.images.emplace(GenLetter::X, AnyElement(iso.alpha * y2));
        f.images.emplace(GenLetter::Y,
                         AnyElement(-(iso.alpha.inverse() * source.p().inverse()) * x2));
    } else {
        f.images.emplace(GenLetter::X, AnyElement(iso.alpha * x2));
        f.images.emplace(GenLetter::Y, AnyElement(iso.alpha.inverse() * y2));
    }
    if (swap_st) {
        f.images.emplace(GenLetter::S, AnyElement(iso.beta * t2));
        f.images.emplace(GenLetter::T, AnyElement(iso.gamma * s2));
    } else {
        f.images.emplace(GenLetter::S, AnyElement(iso.beta * s2));
        f.images.emplace(GenLetter::T, AnyElement(iso.gamma * t2));
    }
    return verify_or_throw(f, "make_isomorphism");
}

// ---------------------------------------------------------------------------
// Positive-type endomorphisms of the localization (l = u = 1)
// ---------------------------------------------------------------------------

/// The localization of A_p(1, 1, K_q[s,t]), the tensor product of the rank-one
/// quantized Weyl algebra with the quantum plane.
inline Algebra tensor_localization(const ParamConfig& cfg = ParamConfig::generic()) {
    AlgebraParams params;
    params.lam = ParamScalar(1);
    params.mu = ParamScalar(1);
    return Algebra(AlgebraKind::ALoc, params, cfg);
}

/// Data of a positive-type endomorphism
///   phi(x) = alpha z^i s^j t^k x,
///   phi(y) = alpha^-1 p^i q^(-jk) z^-i s^-j t^-k y,
///   phi(s) = beta z^m s^c t^d,   phi(t) = gamma z^n s^e t^f,
/// subject to cf - de = 1, p^m q^(dj-ck) = 1 and p^n q^(fj-ek) = 1.
struct EndoData {
    ParamScalar alpha{1}, beta{1}, gamma{1};
    int i = 0, j = 0, k = 0;
    int m = 0, n = 0;
    int c = 1, d = 0, e = 0, f = 1;
};

namespace detail {

inline void require_section3_algebra(const Algebra& alg, const char* what) {
    if (alg.kind() != AlgebraKind::ALoc)
        throw MismatchError(std::string(what) + " acts on the localization");
    if (!(alg.lam() == ParamScalar(1)) || !(alg.mu() == ParamScalar(1)))
        throw ConfigError(std::string(what) + " requires l = u = 1");
    const bool standard_pq =
        alg.config().is_generic()
            ? alg.p() == ParamScalar::p() && alg.q() == ParamScalar::q()
            : alg.p() == ParamScalar(alg.config().value(0)) && alg.q() == ParamScalar(alg.config().value(1));
    if (!standard_pq) throw ConfigError(std::string(what) + " requires the standard parameters p, q");
}

inline void require_power_constraint(const Algebra& alg, int m, int r, const std::string& label) {
    const auto sols = solve_power_identity(m, m, r, r, alg.config());
    if (sols.find({m, r}) == sols.end())
        throw ConstraintError("constraint violated: " + label + " (exponents " + std::to_string(m) +
                              ", " + std::to_string(r) + ")");
}

}  // namespace detail

inline GenMap make_positive_endo(const Algebra& alg, const EndoData& data) {
    detail::require_section3_algebra(alg, "make_positive_endo");
    if (data.alpha.is_zero() || data.beta.is_zero() || data.gamma.is_zero())
        throw ConstraintError("endomorphism scalars must be nonzero");
    if (data.c * data.f - data.d * data.e != 1)
        throw ConstraintError("constraint violated: cf - de = 1");
    detail::require_power_constraint(alg, data.m, data.d * data.j - data.c * data.k,
                                     "p^m q^(dj-ck) = 1");
    detail::require_power_constraint(alg, data.n, data.f * data.j - data.e * data.k,
                                     "p^n q^(fj-ek) = 1");

    auto mono = [&](int a, int b, int c2, int d2, const ParamScalar& coeff) {
        return LocElement::monomial(alg, GwaMonomial{a, b, c2, d2}, coeff, ZBasis::Loc);
    };
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    f.images.emplace(GenLetter::X, AnyElement(mono(data.i, data.j, data.k, 1, data.alpha)));
    f.images.emplace(
        GenLetter::Y,
        AnyElement(mono(-data.i, -data.j, -data.k, -1,
                        data.alpha.inverse() * alg.p().pow(data.i) *
                            alg.q().pow(-static_cast<long>(data.j) * data.k))));
    f.images.emplace(GenLetter::S, AnyElement(mono(data.m, data.c, data.d, 0, data.beta)));
    f.images.emplace(GenLetter::T, AnyElement(mono(data.n, data.e, data.f, 0, data.gamma)));
    GenMap out = verify_or_throw(f, "make_positive_endo");

    // the construction fixes z
    const LocElement z_img = out.loc_image(GenLetter::X) * out.loc_image(GenLetter::Y) -
                             out.loc_image(GenLetter::Y) * out.loc_image(GenLetter::X);
    if (!(z_img == LocElement::monomial(alg, GwaMonomial{1, 0, 0, 0}, ParamScalar(1), ZBasis::Loc)))
        throw ConstraintError("make_positive_endo: image of z is not z");
    return out;
}

enum class ZImageType { Positive, Negative, Other };

/// Positive maps send z to a scalar multiple of z, negative ones to a scalar
/// multiple of z^-1.
inline ZImageType z_image_type(const GenMap& f) {
    if (f.domain.kind() != AlgebraKind::ALoc) return ZImageType::Other;
    const LocElement z_img = f.loc_image(GenLetter::X) * f.loc_image(GenLetter::Y) -
                             f.loc_image(GenLetter::Y) * f.loc_image(GenLetter::X);
    if (z_img.term_count() != 1) return ZImageType::Other;
    const GwaMonomial mono = z_img.terms().begin()->first;
    if (mono.b != 0 || mono.c != 0 || mono.d != 0) return ZImageType::Other;
    if (mono.a == 1) return ZImageType::Positive;
    if (mono.a == -1) return ZImageType::Negative;
    return ZImageType::Other;
}

/// Pattern-read the defining data back from a positive-type map.
inline EndoData extract_endo_data(const GenMap& f) {
    detail::require_section3_algebra(f.domain, "extract_endo_data");
    auto single = [&](GenLetter g) -> std::pair<GwaMonomial, ParamScalar> {
        const LocElement& img = f.loc_image(g);
        if (img.term_count() != 1)
            throw ConstraintError("map is not of the positive monomial shape");
        return *img.terms().begin();
    };
    const auto [mx, cx] = single(GenLetter::X);
    const auto [my, cy] = single(GenLetter::Y);
    const auto [ms, cs] = single(GenLetter::S);
    const auto [mt, ct] = single(GenLetter::T);
    if (mx.d != 1 || my.d != -1 || ms.d != 0 || mt.d != 0 || my.a != -mx.a || my.b != -mx.b ||
        my.c != -mx.c)
        throw ConstraintError("map is not of the positive monomial shape");
    EndoData data;
    data.alpha = cx;
    data.beta = cs;
    data.gamma = ct;
    data.i = mx.a;
    data.j = mx.b;
    data.k = mx.c;
    data.m = ms.a;
    data.c = ms.b;
    data.d = ms.c;
    data.n = mt.a;
    data.e = mt.b;
    data.f = mt.c;
    return data;
}

struct DixmierInversion {
    GenMap psi;       // the correcting endomorphism
    GenMap residual;  // f composed with psi, of the reduced invertible shape
    EndoData psi_data;
};

/// The constructive inversion step: from the data of f build
///   psi = phi_{1,1,1,0,j',k'}^{c',d',e',f',m',n'}
/// with j' = ek - fj, k' = dj - ck, m' = dn - fm, n' = em - cn, c' = f,
/// f' = c, e' = -e, d' = -d; then f o psi has the reduced form
///   x -> a' z^i'' x, y -> a'^-1 p^i'' z^-i'' y, s -> b' s, t -> c' t.
inline DixmierInversion dixmier_invert(const GenMap& f) {
    if (!f.verified) throw ConstraintError("dixmier_invert requires a verified map");
    const EndoData d = extract_endo_data(f);
    EndoData pd;
    pd.j = d.e * d.k - d.f * d.j;
    pd.k = d.d * d.j - d.c * d.k;
    pd.m = d.d * d.n - d.f * d.m;
    pd.n = d.e * d.m - d.c * d.n;
    pd.c = d.f;
    pd.f = d.c;
    pd.d = -d.d;
    pd.e = -d.e;
    DixmierInversion out{make_positive_endo(f.domain, pd), GenMap{}, pd};
    out.residual = compose(f, out.psi);
    return out;
}

/// Whether a map has the reduced shape produced by dixmier_invert.
inline bool is_reduced_positive_form(const GenMap& f) {
    try {
        const EndoData d = extract_endo_data(f);
        if (d.j != 0 || d.k != 0 || d.m != 0 || d.n != 0) return false;
        if (d.c != 1 || d.d != 0 || d.e != 0 || d.f != 1) return false;
        // phi(y) coefficient is forced to alpha^-1 p^i by the relation check
        return true;
    } catch (const ConstraintError&) {
        return false;
    }
}

/// Explicit inverse of a reduced-form map: x -> a^-1 z^-i x scaled back.
inline GenMap invert_reduced(const GenMap& f) {
    const EndoData d = extract_endo_data(f);
    if (!is_reduced_positive_form(f)) throw ConstraintError("map is not of the reduced form");
    EndoData inv;
    inv.alpha = d.alpha.inverse();
    inv.beta = d.beta.inverse();
    inv.gamma = d.gamma.inverse();
    inv.i = -d.i;
    return make_positive_endo(f.domain, inv);
}

// ---------------------------------------------------------------------------
// The negative involution and negative-type automorphisms
// ---------------------------------------------------------------------------

/// psi_-: x -> y, y -> -p^-1 z^-1 x, s -> s, t -> t (negative type).
inline GenMap make_psi_minus(const Algebra& alg) {
    detail::require_section3_algebra(alg, "make_psi_minus");
    auto mono = [&](int a, int b, int c, int d, const ParamScalar& coeff) {
        return LocElement::monomial(alg, GwaMonomial{a, b, c, d}, coeff, ZBasis::Loc);
    };
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    f.images.emplace(GenLetter::X, AnyElement(mono(0, 0, 0, -1, ParamScalar(1))));
    f.images.emplace(GenLetter::Y, AnyElement(mono(-1, 0, 0, 1, -alg.p().inverse())));
    f.images.emplace(GenLetter::S, AnyElement(mono(0, 1, 0, 0, ParamScalar(1))));
    f.images.emplace(GenLetter::T, AnyElement(mono(0, 0, 1, 0, ParamScalar(1))));
    return verify_or_throw(f, "make_psi_minus");
}

/// psi_-^-1: x -> -z^-1 y, y -> x, s -> s, t -> t.
inline GenMap make_psi_minus_inverse(const Algebra& alg) {
    detail::require_section3_algebra(alg, "make_psi_minus_inverse");
    auto mono = [&](int a, int b, int c, int d, const ParamScalar& coeff) {
        return LocElement::monomial(alg, GwaMonomial{a, b, c, d}, coeff, ZBasis::Loc);
    };
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    f.images.emplace(GenLetter::X, AnyElement(mono(-1, 0, 0, -1, ParamScalar(-1))));
    f.images.emplace(GenLetter::Y, AnyElement(mono(0, 0, 0, 1, ParamScalar(1))));
    f.images.emplace(GenLetter::S, AnyElement(mono(0, 1, 0, 0, ParamScalar(1))));
    f.images.emplace(GenLetter::T, AnyElement(mono(0, 0, 1, 0, ParamScalar(1))));
    return verify_or_throw(f, "make_psi_minus_inverse");
}

/// psi_-^-1 composed with a positive map: a negative-type automorphism.
inline GenMap make_negative_aut(const GenMap& positive) {
    if (z_image_type(positive) != ZImageType::Positive)
        throw ConstraintError("make_negative_aut requires a positive-type map");
    return compose(make_psi_minus_inverse(positive.domain), positive);
}

// ---------------------------------------------------------------------------
// Affine classification at numeric parameters
// ---------------------------------------------------------------------------

struct AffineCandidate {
    // phi(g_i) = sum_j matrix[i][j] g_j + constants[i], generators ordered x, y, s, t
    std::array<std::array<ParamScalar, 4>, 4> matrix;
    std::array<ParamScalar, 4> constants;
};

struct ClassifyOutcome {
    bool verified = false;
    std::string family;  // diagonal | xy-swap | st-swap | xy-st-swap | other
    GenMap map;
    std::vector<Residual> failures;
};

/// Build the affine map from the matrix, verify the relations, and name the
/// family it belongs to.  Requires a numeric configuration with p != 1 and
/// q != 1 on the l = u = 1 algebra.
inline ClassifyOutcome classify_affine(const AffineCandidate& cand, const Algebra& alg) {
    if (alg.kind() != AlgebraKind::A) throw MismatchError("classify_affine acts on the plain algebra");
    if (alg.config().is_generic()) throw ConfigError("classify_affine requires numeric parameters");
    if (alg.config().p_is_one() || alg.config().q_is_one())
        throw ConfigError("classify_affine requires p != 1 and q != 1");
    if (!(alg.lam() == ParamScalar(1)) || !(alg.mu() == ParamScalar(1)))
        throw ConfigError("classify_affine requires l = u = 1");

    const std::array<GenLetter, 4> gens{GenLetter::X, GenLetter::Y, GenLetter::S, GenLetter::T};
    GenMap f;
    f.domain = alg;
    f.codomain = alg;
    for (size_t row = 0; row < 4; ++row) {
        PbwElement img = PbwElement::scalar(alg, cand.constants[row]);
        for (size_t col = 0; col < 4; ++col)
            img += cand.matrix[row][col] * PbwElement::generator(alg, gens[col]);
        f.images.emplace(gens[row], AnyElement(std::move(img)));
    }

    ClassifyOutcome out;
    VerifyResult vr = verify_relations(f);
    out.verified = vr.ok;
    out.map = vr.map;
    out.failures = std::move(vr.failures);
    if (!out.verified) return out;

    auto zero_at = [&](size_t r, size_t c) { return cand.matrix[r][c].is_zero(); };
    bool consts_zero = true;
    for (const auto& c : cand.constants) consts_zero &= c.is_zero();
    bool off_blocks_zero = true;
    for (size_t r : {0u, 1u})
        for (size_t c : {2u, 3u}) off_blocks_zero &= zero_at(r, c) && zero_at(c, r);
    const bool xy_diag = !zero_at(0, 0) && !zero_at(1, 1) && zero_at(0, 1) && zero_at(1, 0);
    const bool xy_swap = zero_at(0, 0) && zero_at(1, 1) && !zero_at(0, 1) && !zero_at(1, 0);
    const bool st_diag = !zero_at(2, 2) && !zero_at(3, 3) && zero_at(2, 3) && zero_at(3, 2);
    const bool st_swap = zero_at(2, 2) && zero_at(3, 3) && !zero_at(2, 3) && !zero_at(3, 2);

    if (!consts_zero || !off_blocks_zero) out.family = "other";
    else if (xy_diag && st_diag) out.family = "diagonal";
    else if (xy_swap && st_diag) out.family = "xy-swap";
    else if (xy_diag && st_swap) out.family = "st-swap";
    else if (xy_swap && st_swap) out.family = "xy-st-swap";
    else out.family = "other";
    return out;
}

}  // namespace gwa
