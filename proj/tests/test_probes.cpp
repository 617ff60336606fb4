#include <catch2/catch_amalgamated.hpp>

#include "gwa/probes.hpp"

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

ParamScalar P() { return ParamScalar::p(); }

}  // namespace

TEST_CASE("q_integer values and recurrence", "[probes]") {
    CHECK(q_integer(0) == ParamScalar(0));
    CHECK(q_integer(1) == ParamScalar(1));
    CHECK(q_integer(3) == ParamScalar(1) + P() + P().pow(2));
    // closed form: divide p^3 - 1 by p - 1
    CHECK(q_integer(3) == (P().pow(3) - ParamScalar(1)) / (P() - ParamScalar(1)));

    for (int d = 0; d <= 12; ++d) CHECK(q_integer(d + 1) == P() * q_integer(d) + ParamScalar(1));
}

TEST_CASE("exact nullspace and solve", "[probes]") {
    // x + y = 0, y + z = 0 over the scalar field -> one-dimensional nullspace
    linalg::Matrix m{{ParamScalar(1), ParamScalar(1), ParamScalar(0)},
                     {ParamScalar(0), ParamScalar(1), ParamScalar(1)}};
    const auto basis = linalg::nullspace(m, 3);
    REQUIRE(basis.size() == 1);
    // the kernel is spanned by (1, -1, 1)
    const auto& v = basis[0];
    CHECK(v[0] * ParamScalar(-1) == v[1]);
    CHECK(v[1] * ParamScalar(-1) == v[2]);

    // parametric system: p*x = p^2 has solution x = p
    linalg::Matrix m2{{P()}};
    const auto sol = linalg::solve(m2, {P().pow(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == P());

    // inconsistent system
    linalg::Matrix m3{{ParamScalar(1)}, {ParamScalar(1)}};
    CHECK_FALSE(linalg::solve(m3, {ParamScalar(1), ParamScalar(2)}).has_value());
}

TEST_CASE("center of A at degree 2 is the scalars", "[probes]") {
    const CenterScanResult r = center_scan(A(), 2);
    REQUIRE(r.dimension == 1);
    CHECK(r.basis[0].is_scalar());
}

TEST_CASE("center of A[w] is spanned by powers of w", "[probes]") {
    const CenterScanResult r = center_scan(AW(), 2);
    REQUIRE(r.dimension == 3);
    for (const PbwElement& e : r.basis) {
        REQUIRE(e.term_count() == 1);
        const PbwMonomial mono = e.terms().begin()->first;
        CHECK(mono.l + mono.m + mono.n + mono.o == 0);
    }
    // dimension is monotone non-decreasing in the degree bound
    CHECK(center_scan(AW(), 1).dimension == 2);
    CHECK(center_scan(AW(), 3).dimension == 4);
}

TEST_CASE("center scan rejects root-of-unity specializations", "[probes]") {
    const Algebra bad = Algebra::plain(ParamConfig::specialized(-1, 3, 1, 1));
    CHECK_THROWS_AS(center_scan(bad, 2), ConfigError);
    // non-root-of-unity specialization passes and still has scalar center
    const Algebra ok = Algebra::plain(ParamConfig::specialized(2, 3, 5, 7));
    CHECK(center_scan(ok, 2).dimension == 1);
}

TEST_CASE("torus center at Laurent degree 2 is the scalars", "[probes]") {
    const Torus C = Torus::standard(Algebra::localized());
    const TorusCenterScanResult r = center_scan_torus(C, 2);
    REQUIRE(r.dimension == 1);
    REQUIRE(r.basis[0].terms().size() == 1);
    CHECK(r.basis[0].terms().begin()->first == TorusExp{0, 0, 0, 0});
}

TEST_CASE("normality of z, s, t and their products", "[probes]") {
    const PbwElement z = z_element(A());
    const PbwElement s = PbwElement::generator(A(), GenLetter::S);
    const PbwElement t = PbwElement::generator(A(), GenLetter::T);

    CHECK(normality_check(z, A()));
    CHECK(normality_check(s, A()));
    CHECK(normality_check(t, A()));
    // witness for s against x is the twist s x = l x s
    CHECK((s * PbwElement::generator(A(), GenLetter::X)) ==
          ParamScalar::lam() * (PbwElement::generator(A(), GenLetter::X) * s));

    // products of normal elements are normal
    CHECK(normality_check(z * s, A()));
    CHECK(normality_check(s * t, A()));
    CHECK(normality_check(z * t, A()));
    CHECK(normality_check(z * s * t, A()));
}

TEST_CASE("x and y are not normal", "[probes]") {
    CHECK_FALSE(normality_check(PbwElement::generator(A(), GenLetter::X), A()));
    CHECK_FALSE(normality_check(PbwElement::generator(A(), GenLetter::Y), A()));
}
