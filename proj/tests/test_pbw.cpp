#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "gwa/pbw.hpp"

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

PbwElement gen(const Algebra& alg, GenLetter g) { return PbwElement::generator(alg, g); }

ParamScalar P() { return ParamScalar::p(); }
ParamScalar L() { return ParamScalar::lam(); }

// --- independent single-step rewriter used as the confluence/termination oracle

using TermSum = std::map<Word, ParamScalar>;

void oracle_add(TermSum& sum, const Word& w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto it = sum.find(w);
    if (it == sum.end()) {
        sum.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) sum.erase(it);
    }
}

int rank(GenLetter g) { return static_cast<int>(g); }

std::vector<size_t> rewritable_positions(const Word& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rank(w[i]) > rank(w[i + 1])) out.push_back(i);
    return out;
}

// apply the defining relation at position i of w, writing the result into out
void oracle_step(const Algebra& alg, const Word& w, size_t i, const ParamScalar& c, TermSum& out) {
    using G = GenLetter;
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    const GenLetter a = w[i], b = w[i + 1];
    if (a == G::Y && b == G::X) {
        // yx = p^-1 xy - p^-1
        oracle_add(out, swapped, c * alg.p().inverse());
        Word dropped(w.begin(), w.begin() + static_cast<long>(i));
        dropped.insert(dropped.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        oracle_add(out, dropped, -(c * alg.p().inverse()));
    } else if (a == G::S && b == G::X) {
        oracle_add(out, swapped, c * alg.lam());
    } else if (a == G::S && b == G::Y) {
        oracle_add(out, swapped, c * alg.lam().inverse());
    } else if (a == G::T && b == G::X) {
        oracle_add(out, swapped, c * alg.mu());
    } else if (a == G::T && b == G::Y) {
        oracle_add(out, swapped, c * alg.mu().inverse());
    } else if (a == G::T && b == G::S) {
        oracle_add(out, swapped, c * alg.q().inverse());
    } else if (a == G::W) {
        oracle_add(out, swapped, c);
    } else {
        FAIL("oracle_step called on an ordered pair");
    }
}

// normalize with a random choice of redex at every step
PbwElement oracle_normalize_random(const Algebra& alg, const Word& start, std::mt19937_64& rng) {
    TermSum pending{{start, ParamScalar(1)}};
    PbwElement done = PbwElement::zero(alg);
    while (!pending.empty()) {
        std::uniform_int_distribution<size_t> pick_term(0, pending.size() - 1);
        auto it = std::next(pending.begin(), static_cast<long>(pick_term(rng)));
        const Word w = it->first;
        const ParamScalar c = it->second;
        pending.erase(it);
        const auto positions = rewritable_positions(w);
        if (positions.empty()) {
            PbwMonomial mono;
            for (GenLetter g : w) {
                switch (g) {
                    case GenLetter::X: ++mono.l; break;
                    case GenLetter::Y: ++mono.m; break;
                    case GenLetter::S: ++mono.n; break;
                    case GenLetter::T: ++mono.o; break;
                    case GenLetter::W: ++mono.r; break;
                }
            }
            done += c * PbwElement::monomial(alg, mono);
            continue;
        }
        std::uniform_int_distribution<size_t> pick_pos(0, positions.size() - 1);
        oracle_step(alg, w, positions[pick_pos(rng)], c, pending);
    }
    return done;
}

long inversion_count(const Word& w) {
    long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (rank(w[i]) > rank(w[j])) ++inv;
    return inv;
}

Word random_word(std::mt19937_64& rng, size_t len, bool with_w) {
    std::uniform_int_distribution<int> pick(0, with_w ? 4 : 3);
    Word w;
    for (size_t i = 0; i < len; ++i) w.push_back(static_cast<GenLetter>(pick(rng)));
    return w;
}

PbwElement random_element(std::mt19937_64& rng, const Algebra& alg, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> pexp(-1, 1);
    PbwElement e = PbwElement::zero(alg);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> d(0, max_deg);
        int budget = d(rng);
        auto take = [&](int& slot) {
            std::uniform_int_distribution<int> part(0, budget);
            slot = part(rng);
            budget -= slot;
        };
        PbwMonomial mono;
        take(mono.l);
        take(mono.m);
        take(mono.n);
        take(mono.o);
        if (alg.kind() == AlgebraKind::AW) take(mono.r);
        ParamScalar c = ParamScalar(Rational(num(rng), den(rng))) * ParamScalar::p().pow(pexp(rng)) *
                        ParamScalar::q().pow(pexp(rng));
        e += c * PbwElement::monomial(alg, mono);
    }
    return e;
}

PbwElement relation_residual(const Algebra& alg, int which) {
    const PbwElement x = gen(alg, GenLetter::X), y = gen(alg, GenLetter::Y);
    const PbwElement s = gen(alg, GenLetter::S), t = gen(alg, GenLetter::T);
    switch (which) {
        case 0: return x * y - alg.p() * (y * x) - PbwElement::one(alg);
        case 1: return s * t - alg.q() * (t * s);
        case 2: return s * x - alg.lam() * (x * s);
        case 3: return s * y - alg.lam().inverse() * (y * s);
        case 4: return t * x - alg.mu() * (x * t);
        case 5: return t * y - alg.mu().inverse() * (y * t);
    }
    FAIL("bad relation index");
    return PbwElement::zero(alg);
}

}  // namespace

TEST_CASE("normalize_word on the defining rearrangements", "[pbw]") {
    // yx -> p^-1 xy - p^-1
    const PbwElement yx = normalize_word(A(), {GenLetter::Y, GenLetter::X});
    PbwElement expect = P().inverse() * PbwElement::monomial(A(), PbwMonomial{1, 1, 0, 0, 0}) -
                        P().inverse() * PbwElement::one(A());
    CHECK(yx == expect);

    // sx -> l xs
    CHECK(normalize_word(A(), {GenLetter::S, GenLetter::X}) ==
          L() * PbwElement::monomial(A(), PbwMonomial{1, 0, 1, 0, 0}));

    // y y x -> p^-2 x y^2 - (p^-2 + p^-1) y
    const PbwElement yyx = normalize_word(A(), {GenLetter::Y, GenLetter::Y, GenLetter::X});
    const ParamScalar pi = P().inverse();
    PbwElement expect2 = pi * pi * PbwElement::monomial(A(), PbwMonomial{1, 2, 0, 0, 0}) -
                         (pi * pi + pi) * PbwElement::monomial(A(), PbwMonomial{0, 1, 0, 0, 0});
    CHECK(yyx == expect2);

    // cross-check against d = 2 in the commutation identity:
    // y^2 x = p^-2 (x y^2 - (p^2-1)/(p-1) y)
    const PbwElement x = gen(A(), GenLetter::X), y = gen(A(), GenLetter::Y);
    const ParamScalar q2 = (P().pow(2) - ParamScalar(1)) / (P() - ParamScalar(1));
    CHECK(yyx == P().pow(-2) * (x * y.pow(2) - q2 * y));
}

TEST_CASE("multiply matches the stated examples", "[pbw]") {
    const PbwElement x = gen(A(), GenLetter::X), y = gen(A(), GenLetter::Y);
    const PbwElement s = gen(A(), GenLetter::S), t = gen(A(), GenLetter::T);

    CHECK(x * y == PbwElement::monomial(A(), PbwMonomial{1, 1, 0, 0, 0}));

    const PbwElement xy = x * y;
    const PbwElement prod = xy * xy;
    PbwElement expect = P().inverse() * PbwElement::monomial(A(), PbwMonomial{2, 2, 0, 0, 0}) -
                        P().inverse() * PbwElement::monomial(A(), PbwMonomial{1, 1, 0, 0, 0});
    CHECK(prod == expect);
    CHECK(prod == normalize_word(A(), {GenLetter::X, GenLetter::Y, GenLetter::X, GenLetter::Y}));

    CHECK((s * t - ParamScalar::q() * (t * s)).is_zero());
}

TEST_CASE("commutators: z, centrality of w, and [z, s]", "[pbw]") {
    const PbwElement z = z_element(A());
    PbwElement expect = (ParamScalar(1) - P().inverse()) * PbwElement::monomial(A(), PbwMonomial{1, 1, 0, 0, 0}) +
                        P().inverse() * PbwElement::one(A());
    CHECK(z == expect);

    CHECK(commutator(gen(AW(), GenLetter::S), gen(AW(), GenLetter::W)).is_zero());
    CHECK(commutator(z_element(A()), gen(A(), GenLetter::S)).is_zero());
    CHECK(commutator(z_element(A()), gen(A(), GenLetter::T)).is_zero());
}

TEST_CASE("q-identity residual vanishes for d = 1, 2, 7", "[pbw]") {
    for (int d : {1, 2, 7}) CHECK(q_identity_check(A(), d).is_zero());
    CHECK_THROWS_AS(q_identity_check(Algebra::plain(ParamConfig::specialized(1, 2, 3, 5)), 3), ConfigError);
}

TEST_CASE("all six defining relations normalize to zero", "[pbw]") {
    for (int i = 0; i < 6; ++i) CHECK(relation_residual(A(), i).is_zero());

    std::mt19937_64 rng(99u);
    std::uniform_int_distribution<int> v(-6, 6);
    for (int iter = 0; iter < 10; ++iter) {
        Rational vals[4];
        for (auto& r : vals) {
            int n;
            do {
                n = v(rng);
            } while (n == 0);
            int d;
            do {
                d = v(rng);
            } while (d == 0);
            r = Rational(n) / Rational(d);
        }
        const Algebra alg = Algebra::plain(ParamConfig::specialized(vals[0], vals[1], vals[2], vals[3]));
        for (int i = 0; i < 6; ++i) CHECK(relation_residual(alg, i).is_zero());
    }
}

TEST_CASE("multiply agrees with the word-rewriting oracle", "[pbw]") {
    std::mt19937_64 rng(1234u);
    for (int iter = 0; iter < 40; ++iter) {
        const Word wa = random_word(rng, 3, true);
        const Word wb = random_word(rng, 3, true);
        const PbwElement a = normalize_word(AW(), wa);
        const PbwElement b = normalize_word(AW(), wb);
        Word cat = wa;
        cat.insert(cat.end(), wb.begin(), wb.end());
        CHECK(a * b == normalize_word(AW(), cat));
    }
}

TEST_CASE("multiplication is associative on random triples", "[pbw]") {
    std::mt19937_64 rng(5150u);
    for (int iter = 0; iter < 50; ++iter) {
        const PbwElement a = random_element(rng, A(), 4, 4);
        const PbwElement b = random_element(rng, A(), 4, 4);
        const PbwElement c = random_element(rng, A(), 4, 4);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("rewriting terminates: (length, inversions) strictly decreases", "[pbw]") {
    std::mt19937_64 rng(31337u);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<size_t> len(2, 7);
        const Word w = random_word(rng, len(rng), true);
        for (size_t pos : rewritable_positions(w)) {
            TermSum result;
            oracle_step(AW(), w, pos, ParamScalar(1), result);
            for (const auto& [w2, c] : result) {
                const bool shorter = w2.size() < w.size();
                const bool same_len_less_inv =
                    w2.size() == w.size() && inversion_count(w2) < inversion_count(w);
                CHECK((shorter || same_len_less_inv));
            }
        }
    }
}

TEST_CASE("confluence witness: random rule order yields the same normal form", "[pbw]") {
    std::mt19937_64 rng(2718u);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<size_t> len(1, 6);
        const Word w = random_word(rng, len(rng), true);
        const PbwElement reference = normalize_word(AW(), w);
        for (int rep = 0; rep < 3; ++rep) CHECK(oracle_normalize_random(AW(), w, rng) == reference);
    }
}

TEST_CASE("grading: l - m is additive on pure x/y products", "[pbw]") {
    std::mt19937_64 rng(1618u);
    std::uniform_int_distribution<int> e(0, 4);
    for (int iter = 0; iter < 40; ++iter) {
        const int l1 = e(rng), m1 = e(rng), l2 = e(rng), m2 = e(rng);
        const PbwElement prod = PbwElement::monomial(A(), PbwMonomial{l1, m1, 0, 0, 0}) *
                                PbwElement::monomial(A(), PbwMonomial{l2, m2, 0, 0, 0});
        REQUIRE(!prod.is_zero());
        for (const auto& [mono, c] : prod.terms()) CHECK(mono.l - mono.m == (l1 + l2) - (m1 + m2));
    }
}

TEST_CASE("algebra and config mixing is rejected", "[pbw]") {
    const Algebra spec = Algebra::plain(ParamConfig::specialized(2, 3, 1, 1));
    CHECK_THROWS_AS(gen(A(), GenLetter::X) * gen(spec, GenLetter::X), MismatchError);
    CHECK_THROWS_AS(gen(A(), GenLetter::X) + gen(AW(), GenLetter::X), MismatchError);
    CHECK_THROWS_AS(PbwElement::monomial(A(), PbwMonomial{0, 0, 0, 0, 1}), MismatchError);
}

TEST_CASE("p = 1 degenerate config is allowed in the rewriting engine", "[pbw]") {
    const Algebra alg = Algebra::plain(ParamConfig::specialized(1, 3, 2, 5));
    // yx -> xy - 1 when p = 1
    const PbwElement yx = normalize_word(alg, {GenLetter::Y, GenLetter::X});
    CHECK(yx == PbwElement::monomial(alg, PbwMonomial{1, 1, 0, 0, 0}) - PbwElement::one(alg));
    for (int i = 0; i < 6; ++i) CHECK(relation_residual(alg, i).is_zero());
}
