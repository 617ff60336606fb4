#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gwa/morphisms.hpp"

using namespace gwa;

namespace {

const Algebra& A() {
    static const Algebra alg = Algebra::plain();
    return alg;
}
const Algebra& AW() {
    static const Algebra alg = Algebra::poly_ext();
    return alg;
}
const Algebra& AL11() {
    static const Algebra alg = tensor_localization();
    return alg;
}

ParamScalar P() { return ParamScalar::p(); }

ParamScalar rand_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    int n = num(rng);
    if (n == 0) n = 3;
    return ParamScalar(Rational(n, den(rng)));
}

bool images_equal(const GenMap& f, const GenMap& g) {
    if (f.images.size() != g.images.size()) return false;
    for (const auto& [gen, img] : f.images)
        if (!any_equal(img, g.image(gen))) return false;
    return true;
}

// random (c, d, e, f) with cf - de = 1, as a short product of elementary
// matrices
std::array<int, 4> random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shear(-2, 2), count(1, 3);
    long c = 1, d = 0, e = 0, f = 1;
    const int steps = count(rng);
    for (int i = 0; i < steps; ++i) {
        const int k = shear(rng);
        if (i % 2 == 0) {
            c += static_cast<long>(k) * e;
            d += static_cast<long>(k) * f;
        } else {
            e += static_cast<long>(k) * c;
            f += static_cast<long>(k) * d;
        }
    }
    return {static_cast<int>(c), static_cast<int>(d), static_cast<int>(e), static_cast<int>(f)};
}

EndoData random_generic_endo(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> zi(-3, 3);
    const auto cd = random_unimodular(rng);
    EndoData data;
    data.alpha = rand_nonzero(rng);
    data.beta = rand_nonzero(rng);
    data.gamma = rand_nonzero(rng);
    data.i = zi(rng);
    data.c = cd[0];
    data.d = cd[1];
    data.e = cd[2];
    data.f = cd[3];
    return data;
}

}  // namespace

TEST_CASE("scalar automorphisms verify; generator swaps do not", "[morphisms]") {
    const GenMap phi = make_scalar_aut(A(), ParamScalar(2), ParamScalar(3), ParamScalar(5));
    CHECK(phi.verified);

    // x <-> y swap at generic p: residual of xy - p yx - 1 is yx - p xy - 1
    GenMap swap;
    swap.domain = A();
    swap.codomain = A();
    swap.images.emplace(GenLetter::X, AnyElement(PbwElement::generator(A(), GenLetter::Y)));
    swap.images.emplace(GenLetter::Y, AnyElement(PbwElement::generator(A(), GenLetter::X)));
    swap.images.emplace(GenLetter::S, AnyElement(PbwElement::generator(A(), GenLetter::S)));
    swap.images.emplace(GenLetter::T, AnyElement(PbwElement::generator(A(), GenLetter::T)));
    const VerifyResult vr = verify_relations(swap);
    CHECK_FALSE(vr.ok);
    REQUIRE_FALSE(vr.failures.empty());
    const PbwElement x = PbwElement::generator(A(), GenLetter::X);
    const PbwElement y = PbwElement::generator(A(), GenLetter::Y);
    CHECK(any_equal(vr.failures[0].value, AnyElement(y * x - P() * (x * y) - PbwElement::one(A()))));

    CHECK_THROWS_AS(make_scalar_aut(A(), ParamScalar(0), ParamScalar(1), ParamScalar(1)),
                    ConstraintError);
}

TEST_CASE("psi_minus verifies on the l = u = 1 localization", "[morphisms]") {
    const GenMap psi = make_psi_minus(AL11());
    CHECK(psi.verified);
    CHECK(z_image_type(psi) == ZImageType::Negative);

    // psi_-(z) = p^-1 z^-1
    const LocElement z_img = apply_morphism(
        psi, LocElement::monomial(AL11(), GwaMonomial{1, 0, 0, 0}, ParamScalar(1), ZBasis::Loc));
    CHECK(z_img == LocElement::monomial(AL11(), GwaMonomial{-1, 0, 0, 0}, P().inverse(), ZBasis::Loc));

    // psi_- does not verify when l is generic
    CHECK_THROWS_AS(make_psi_minus(Algebra::localized()), ConfigError);
}

TEST_CASE("apply_morphism is unital and multiplicative", "[morphisms]") {
    std::mt19937_64 rng(31u);
    const GenMap phi = make_scalar_aut(A(), rand_nonzero(rng), rand_nonzero(rng), rand_nonzero(rng));
    CHECK(apply_morphism(phi, PbwElement::one(A())) == PbwElement::one(A()));

    // phi_{a,b,c}(x^2 s) = a^2 b x^2 s
    const ParamScalar a(2), b(3), c(5);
    const GenMap f = make_scalar_aut(A(), a, b, c);
    const PbwElement x2s = PbwElement::monomial(A(), PbwMonomial{2, 0, 1, 0, 0});
    CHECK(apply_morphism(f, x2s) == a.pow(2) * b * x2s);

    std::uniform_int_distribution<int> e(0, 3), num(-9, 9);
    for (int iter = 0; iter < 20; ++iter) {
        PbwElement u = PbwElement::zero(A()), v = PbwElement::zero(A());
        for (int t = 0; t < 3; ++t) {
            u += ParamScalar(num(rng)) * PbwElement::monomial(A(), PbwMonomial{e(rng), e(rng), e(rng), e(rng), 0});
            v += ParamScalar(num(rng)) * PbwElement::monomial(A(), PbwMonomial{e(rng), e(rng), e(rng), e(rng), 0});
        }
        CHECK(apply_morphism(phi, u * v) == apply_morphism(phi, u) * apply_morphism(phi, v));
    }

    GenMap raw;
    raw.domain = A();
    raw.codomain = A();
    for (GenLetter g : domain_generators(AlgebraKind::A))
        raw.images.emplace(g, AnyElement(PbwElement::generator(A(), g)));
    CHECK_THROWS_AS(apply_morphism(raw, x2s), ConstraintError);  // unverified maps are inert
}

TEST_CASE("scalar family follows the componentwise group law", "[morphisms]") {
    std::mt19937_64 rng(47u);
    for (int iter = 0; iter < 15; ++iter) {
        const ParamScalar a1 = rand_nonzero(rng), b1 = rand_nonzero(rng), c1 = rand_nonzero(rng);
        const ParamScalar a2 = rand_nonzero(rng), b2 = rand_nonzero(rng), c2 = rand_nonzero(rng);
        const GenMap f = make_scalar_aut(A(), a1, b1, c1);
        const GenMap g = make_scalar_aut(A(), a2, b2, c2);
        CHECK(images_equal(compose(f, g), make_scalar_aut(A(), a1 * a2, b1 * b2, c1 * c2)));
        CHECK(images_equal(compose(f, make_scalar_aut(A(), a1.inverse(), b1.inverse(), c1.inverse())),
                           identity_map(A())));
    }
    // phi_{1,1,1} is the identity
    CHECK(images_equal(make_scalar_aut(A(), ParamScalar(1), ParamScalar(1), ParamScalar(1)),
                       identity_map(A())));
}

TEST_CASE("triangular automorphisms of the polynomial extension", "[morphisms]") {
    const PbwElement b3 = ParamScalar(3) * PbwElement::one(AW());
    const GenMap f = make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1),
                                         ParamScalar(2), b3);
    CHECK(f.verified);
    // w -> 2w + 3
    CHECK(any_equal(f.image(GenLetter::W),
                    AnyElement(ParamScalar(2) * PbwElement::generator(AW(), GenLetter::W) + b3)));

    const GenMap id = make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1),
                                          ParamScalar(1), PbwElement::zero(AW()));
    CHECK(images_equal(id, identity_map(AW())));

    // applying (a, b) first and then (a', b') gives the w-image aa'w + (ab' + b)
    std::mt19937_64 rng(7u);
    const ParamScalar a = rand_nonzero(rng), b = rand_nonzero(rng);
    const ParamScalar a2 = rand_nonzero(rng), b2 = rand_nonzero(rng);
    const GenMap f1 = make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1), a,
                                          b * PbwElement::one(AW()));
    const GenMap f2 = make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1), a2,
                                          b2 * PbwElement::one(AW()));
    const GenMap comp = compose(f2, f1);
    CHECK(any_equal(comp.image(GenLetter::W),
                    AnyElement((a * a2) * PbwElement::generator(AW(), GenLetter::W) +
                               (a * b2 + b) * PbwElement::one(AW()))));

    // non-scalar offsets are rejected
    CHECK_THROWS_AS(make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1),
                                        ParamScalar(1), PbwElement::generator(AW(), GenLetter::W)),
                    ConstraintError);
    CHECK_THROWS_AS(make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1),
                                        ParamScalar(1), PbwElement::generator(AW(), GenLetter::S)),
                    ConstraintError);
    CHECK_THROWS_AS(make_triangular_aut(AW(), ParamScalar(1), ParamScalar(1), ParamScalar(1),
                                        ParamScalar(0), PbwElement::zero(AW())),
                    ConstraintError);
}

TEST_CASE("the four isomorphism cases verify; mismatched tuples reject", "[morphisms]") {
    const ParamConfig cfg = ParamConfig::generic();
    const IsoCase iso1{1, ParamScalar(2), ParamScalar(3), ParamScalar(5)};
    CHECK(make_isomorphism(iso1, A(), A()).verified);

    // case 2: p2 = p1^-1, l2 = l1^-1, u2 = u1^-1
    AlgebraParams par2;
    par2.p = ParamScalar::p().inverse();
    par2.lam = ParamScalar::lam().inverse();
    par2.mu = ParamScalar::mu().inverse();
    const Algebra target2(AlgebraKind::A, par2, cfg);
    CHECK(make_isomorphism(IsoCase{2, ParamScalar(2), ParamScalar(1), ParamScalar(1)}, A(), target2).verified);

    // case 3: q2 = q1^-1 and the quantum-plane parameters swap
    AlgebraParams par3;
    par3.q = ParamScalar::q().inverse();
    par3.lam = ParamScalar::mu();
    par3.mu = ParamScalar::lam();
    const Algebra target3(AlgebraKind::A, par3, cfg);
    CHECK(make_isomorphism(IsoCase{3, ParamScalar(1), ParamScalar(2), ParamScalar(3)}, A(), target3).verified);

    // case 4: both inversions
    AlgebraParams par4;
    par4.p = ParamScalar::p().inverse();
    par4.q = ParamScalar::q().inverse();
    par4.lam = ParamScalar::mu().inverse();
    par4.mu = ParamScalar::lam().inverse();
    const Algebra target4(AlgebraKind::A, par4, cfg);
    CHECK(make_isomorphism(IsoCase{4, ParamScalar(1), ParamScalar(1), ParamScalar(1)}, A(), target4).verified);

    // a tuple fitting no case is rejected by all four constructors
    AlgebraParams bad;
    bad.p = ParamScalar(3) * ParamScalar::p();
    const Algebra target_bad(AlgebraKind::A, bad, cfg);
    for (int id = 1; id <= 4; ++id)
        CHECK_THROWS_AS(make_isomorphism(IsoCase{id, ParamScalar(1), ParamScalar(1), ParamScalar(1)},
                                         A(), target_bad),
                        ConstraintError);
}

TEST_CASE("positive endomorphisms: construction and constraints", "[morphisms]") {
    // scalar case extends phi_{a,b,c}
    EndoData scalar_case;
    scalar_case.alpha = ParamScalar(2);
    scalar_case.beta = ParamScalar(3);
    scalar_case.gamma = ParamScalar(5);
    const GenMap f0 = make_positive_endo(AL11(), scalar_case);
    CHECK(f0.verified);
    CHECK(z_image_type(f0) == ZImageType::Positive);

    // i = 1: x -> a z x, y -> a^-1 p z^-1 y
    EndoData twist;
    twist.alpha = ParamScalar(7);
    twist.i = 1;
    const GenMap f1 = make_positive_endo(AL11(), twist);
    CHECK(any_equal(f1.image(GenLetter::Y),
                    AnyElement(LocElement::monomial(AL11(), GwaMonomial{-1, 0, 0, -1},
                                                    ParamScalar(7).inverse() * P(), ZBasis::Loc))));

    // m = 1 violates p^m q^0 = 1 generically
    EndoData bad;
    bad.m = 1;
    CHECK_THROWS_WITH(make_positive_endo(AL11(), bad),
                      Catch::Matchers::ContainsSubstring("p^m q^(dj-ck)"));

    // cf - de must be 1
    EndoData det;
    det.c = 2;
    CHECK_THROWS_WITH(make_positive_endo(AL11(), det), Catch::Matchers::ContainsSubstring("cf - de"));

    // specialized p = 2, q = 4 admits m = 2 with dj - ck = -1
    const Algebra spec = tensor_localization(ParamConfig::specialized(2, 4, 1, 1));
    EndoData sp;
    sp.j = 0;
    sp.k = 1;
    sp.c = 1;
    sp.d = 0;
    sp.e = 0;
    sp.f = 1;          // dj - ck = -1, fj - ek = 0
    sp.m = 2;
    sp.n = 0;
    CHECK(make_positive_endo(spec, sp).verified);
    // but not generically
    CHECK_THROWS_AS(make_positive_endo(AL11(), sp), ConstraintError);
}

TEST_CASE("dixmier inversion produces the reduced form and a two-sided inverse", "[morphisms]") {
    std::mt19937_64 rng(1729u);
    for (int iter = 0; iter < 12; ++iter) {
        const EndoData data = random_generic_endo(rng);
        const GenMap f = make_positive_endo(AL11(), data);
        const DixmierInversion inv = dixmier_invert(f);
        CHECK(is_reduced_positive_form(inv.residual));

        const GenMap rho_inv = invert_reduced(inv.residual);
        const GenMap full_inverse = compose(inv.psi, rho_inv);
        CHECK(images_equal(compose(f, full_inverse), identity_map(AL11())));
        CHECK(images_equal(compose(full_inverse, f), identity_map(AL11())));
    }

    // the scalar case inverts through psi = identity
    EndoData sc;
    sc.alpha = ParamScalar(2);
    const DixmierInversion inv = dixmier_invert(make_positive_endo(AL11(), sc));
    CHECK(images_equal(inv.psi, identity_map(AL11())));
    CHECK(images_equal(inv.residual, make_positive_endo(AL11(), sc)));
}

TEST_CASE("negative maps match the stated shape and parity", "[morphisms]") {
    const GenMap psi = make_psi_minus(AL11());
    const GenMap psi_inv = make_psi_minus_inverse(AL11());
    CHECK(images_equal(compose(psi, psi_inv), identity_map(AL11())));
    CHECK(images_equal(compose(psi_inv, psi), identity_map(AL11())));

    std::mt19937_64 rng(4242u);
    for (int iter = 0; iter < 8; ++iter) {
        const EndoData data = random_generic_endo(rng);
        const GenMap pos = make_positive_endo(AL11(), data);
        const GenMap neg = make_negative_aut(pos);
        CHECK(z_image_type(neg) == ZImageType::Negative);

        // phi(x) = -alpha p^-i z^(-i-1) s^j t^k y per the negative shape
        const LocElement& nx = neg.loc_image(GenLetter::X);
        REQUIRE(nx.term_count() == 1);
        const auto& [mono, coeff] = *nx.terms().begin();
        CHECK(mono == GwaMonomial{-data.i - 1, data.j, data.k, -1});
        CHECK(coeff == -(data.alpha * P().pow(-data.i)));

        // phi(y) = alpha^-1 p^2i q^-jk z^i s^-j t^-k x
        const LocElement& ny = neg.loc_image(GenLetter::Y);
        REQUIRE(ny.term_count() == 1);
        const auto& [mono_y, coeff_y] = *ny.terms().begin();
        CHECK(mono_y == GwaMonomial{data.i, -data.j, -data.k, 1});
        CHECK(coeff_y == data.alpha.inverse() * P().pow(2 * data.i) *
                             ParamScalar::q().pow(-static_cast<long>(data.j) * data.k));

        // negative composed with negative is positive
        const GenMap nn = compose(neg, neg);
        CHECK(z_image_type(nn) == ZImageType::Positive);
        // psi_- o f o psi_- is positive
        CHECK(z_image_type(compose(psi, compose(pos, psi))) == ZImageType::Positive);
    }
}

TEST_CASE("affine classification across parameter cases", "[morphisms]") {
    auto diag = [](const ParamScalar& a, const ParamScalar& b, const ParamScalar& c) {
        AffineCandidate cand;
        for (auto& row : cand.matrix) row = {ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
        cand.constants = {ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
        cand.matrix[0][0] = a;
        cand.matrix[1][1] = a.inverse();
        cand.matrix[2][2] = b;
        cand.matrix[3][3] = c;
        return cand;
    };
    auto swap_xy = [](const ParamScalar& a, const ParamScalar& b, const ParamScalar& c) {
        AffineCandidate cand;
        for (auto& row : cand.matrix) row = {ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
        cand.constants = {ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
        cand.matrix[0][1] = a;
        cand.matrix[1][0] = a.inverse();
        cand.matrix[2][2] = b;
        cand.matrix[3][3] = c;
        return cand;
    };

    const Algebra at35 =
        Algebra(AlgebraKind::A, AlgebraParams{ParamScalar::p(), ParamScalar::q(), ParamScalar(1), ParamScalar(1)},
                ParamConfig::specialized(3, 5, 1, 1));
    const ClassifyOutcome d = classify_affine(diag(ParamScalar(2), ParamScalar(3), ParamScalar(5)), at35);
    CHECK(d.verified);
    CHECK(d.family == "diagonal");

    // x <-> y swap verifies at p = -1 (the relation becomes symmetric)
    const Algebra atm1 =
        Algebra(AlgebraKind::A, AlgebraParams{ParamScalar::p(), ParamScalar::q(), ParamScalar(1), ParamScalar(1)},
                ParamConfig::specialized(-1, 5, 1, 1));
    const ClassifyOutcome sw = classify_affine(swap_xy(ParamScalar(2), ParamScalar(1), ParamScalar(1)), atm1);
    CHECK(sw.verified);
    CHECK(sw.family == "xy-swap");

    // and fails at p = 3 with a nonzero residual
    const ClassifyOutcome bad = classify_affine(swap_xy(ParamScalar(2), ParamScalar(1), ParamScalar(1)), at35);
    CHECK_FALSE(bad.verified);
    CHECK_FALSE(bad.failures.empty());

    // constants must vanish: a translated diagonal map fails
    AffineCandidate shifted = diag(ParamScalar(1), ParamScalar(1), ParamScalar(1));
    shifted.constants[0] = ParamScalar(1);
    CHECK_FALSE(classify_affine(shifted, at35).verified);

    CHECK_THROWS_AS(classify_affine(diag(ParamScalar(1), ParamScalar(1), ParamScalar(1)), A()), ConfigError);
}
