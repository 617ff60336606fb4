#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gwa/serialize.hpp"

using namespace gwa;

namespace {

const Algebra& A() {
    static const Algebra alg = Algebra::plain();
    return alg;
}

PbwElement random_pbw(std::mt19937_64& rng, const Algebra& alg) {
    std::uniform_int_distribution<int> e(0, 3), num(-9, 9), den(1, 5), nt(1, 4), pe(-1, 1);
    PbwElement out = PbwElement::zero(alg);
    for (int i = 0, n = nt(rng); i < n; ++i) {
        const ParamScalar c = ParamScalar(Rational(num(rng), den(rng))) * ParamScalar::p().pow(pe(rng)) *
                              ParamScalar::lam().pow(pe(rng));
        out += c * PbwElement::monomial(alg, PbwMonomial{e(rng), e(rng), e(rng), e(rng), 0});
    }
    return out;
}

}  // namespace

TEST_CASE("scalar grammar round trips", "[io]") {
    const ParamScalar s = (ParamScalar::p().pow(2) - ParamScalar(1)) / (ParamScalar::p() - ParamScalar(1));
    CHECK(parse_scalar(s.to_string()) == s);
    CHECK(parse_scalar("(p^2-1)/(p-1)") == ParamScalar::p() + ParamScalar(1));
    CHECK(parse_scalar("2*p^2*q - 3") == ParamScalar(2) * ParamScalar::p().pow(2) * ParamScalar::q() - ParamScalar(3));
    CHECK(parse_scalar("-5/3") == ParamScalar(Rational(-5, 3)));
    CHECK(parse_scalar("l*u^2") == ParamScalar::lam() * ParamScalar::mu().pow(2));
    CHECK(parse_scalar("p^-1") == ParamScalar::p().inverse());
}

TEST_CASE("parse errors carry positions and offending tokens", "[io]") {
    using parsing::Parser;
    try {
        parse_scalar("p + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
    try {
        parse_scalar("p + ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_pbw(A(), "x + v"), ParseError);
    CHECK_THROWS_AS(parse_pbw(A(), "x ^ -2"), ParseError);   // x is not a unit
    CHECK_THROWS_AS(parse_pbw(A(), "1 / x"), ParseError);    // nor invertible
    CHECK_THROWS_AS(parse_pbw(A(), "w"), ParseError);        // no w in the plain algebra
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("element expressions evaluate in each algebra", "[io]") {
    // the defining relation collapses to zero
    CHECK(parse_pbw(A(), "x*y - p*y*x - 1").is_zero());
    CHECK(parse_pbw(A(), "s*t - q*t*s").is_zero());

    const PbwElement yx = parse_pbw(A(), "y*x");
    CHECK(yx == normalize_word(A(), {GenLetter::Y, GenLetter::X}));

    // w in the polynomial extension
    const Algebra aw = Algebra::poly_ext();
    CHECK(parse_pbw(aw, "w*x - x*w").is_zero());

    // Laurent powers in the localization
    const Algebra al = Algebra::localized();
    const LocElement lhs = parse_loc(al, "x * z^-1");
    CHECK(lhs == ParamScalar::p().inverse() *
                     LocElement::monomial(al, GwaMonomial{-1, 0, 0, 1}, ParamScalar(1), ZBasis::Loc));
    CHECK(parse_loc(al, "(s*t) * (s*t)^-1") == LocElement::one(al, ZBasis::Loc));

    // torus atoms (z, y, s, t)
    const Torus C = Torus::standard(al);
    CHECK(parse_torus(C, "y*z - p^-1*z*y").is_zero());
    CHECK(parse_torus(C, "s*t - q*t*s").is_zero());

    // gwa basis arithmetic through the parser
    CHECK(parse_gwa(A(), "y*x") == gwa_defining_element(A()));
}

TEST_CASE("serialize, parse, serialize is the identity", "[io]") {
    std::mt19937_64 rng(808u);
    for (int iter = 0; iter < 60; ++iter) {
        const PbwElement e = random_pbw(rng, A());
        const std::string text = e.to_string();
        CHECK(parse_pbw(A(), text) == e);
        CHECK(parse_pbw(A(), text).to_string() == text);
    }
}

TEST_CASE("JSON round trips for elements", "[io]") {
    std::mt19937_64 rng(909u);
    for (int iter = 0; iter < 20; ++iter) {
        const PbwElement e = random_pbw(rng, A());
        CHECK(pbw_from_json(to_json(e), A()) == e);
    }
    const GwaElement g = to_gwa(parse_pbw(A(), "x^2*y^2 + 3*s*t"));
    CHECK(zbasis_from_json(to_json(g), A()) == g);

    const Algebra al = Algebra::localized();
    const LocElement loc = parse_loc(al, "z^-2*s^-1*t + 5*y");
    CHECK(zbasis_from_json(to_json(loc), al) == loc);

    const Torus C = Torus::standard(al);
    const TorusElement t = parse_torus(C, "z^-1*y^2 - 7*s*t^-3");
    CHECK(torus_from_json(to_json(t), C) == t);

    // specialized config travels with the element
    const Algebra spec = Algebra::plain(ParamConfig::specialized(2, 3, 1, 1));
    const PbwElement se = parse_pbw(spec, "p*x + 1/2");
    const Json j = to_json(se);
    CHECK(config_from_json(j.at("config")) == spec.config());
    CHECK(pbw_from_json(j, spec) == se);
}

TEST_CASE("GenMap files round trip and re-verify", "[io]") {
    const GenMap phi = make_scalar_aut(A(), ParamScalar(2), ParamScalar(3), ParamScalar(5));
    const Json j = to_json(phi);
    const GenMap back = genmap_from_json(j);
    CHECK_FALSE(back.verified);  // disk flag is advisory
    const VerifyResult vr = verify_relations(back);
    CHECK(vr.ok);
    for (const auto& [g, img] : phi.images) CHECK(any_equal(img, back.image(g)));

    // localization map with Laurent images
    const Algebra al11 = tensor_localization();
    const GenMap psi = make_psi_minus(al11);
    const GenMap psi_back = genmap_from_json(to_json(psi));
    CHECK(verify_relations(psi_back).ok);
    for (const auto& [g, img] : psi.images) CHECK(any_equal(img, psi_back.image(g)));
}

TEST_CASE("algebra descriptors round trip through JSON", "[io]") {
    AlgebraParams par;
    par.p = ParamScalar::p().inverse();
    par.lam = ParamScalar::lam().inverse();
    par.mu = ParamScalar::mu().inverse();
    const Algebra target(AlgebraKind::A, par, ParamConfig::generic());
    const Algebra back = algebra_from_json(to_json(target));
    CHECK(back.same_as(target));

    const Algebra spec = tensor_localization(ParamConfig::specialized(2, 4, 1, 1));
    CHECK(algebra_from_json(to_json(spec)).same_as(spec));
}
