#pragma once

// Deterministic random generation of scalars, elements and morphism data,
// shared by the randomized unit tests and the acceptance suite.  The seed
// comes from GWA_SEED when set.

#include <cstdlib>
#include <random>

#include "gwa/morphisms.hpp"

namespace gwa {

inline uint64_t env_seed(uint64_t fallback = 0x67a5eedULL) {
    if (const char* s = std::getenv("GWA_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
    }
    return fallback;
}

class Sampler {
  public:
    explicit Sampler(uint64_t seed = env_seed()) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational nonzero_rational(int max_num = 9, int max_den = 5) {
        int n = uniform(-max_num, max_num);
        if (n == 0) n = 1 + uniform(0, max_num - 1);
        return Rational(n) / Rational(uniform(1, max_den));
    }

    /// A small nonzero rational times a monomial in p, q (invertible content).
    ParamScalar nonzero_coeff(bool with_params = true) {
        ParamScalar c(nonzero_rational());
        if (with_params)
            c = c * ParamScalar::p().pow(uniform(-1, 1)) * ParamScalar::q().pow(uniform(-1, 1));
        return c;
    }

    PbwMonomial pbw_monomial(int max_deg, bool with_w) {
        int budget = uniform(0, max_deg);
        auto take = [&](int& slot) {
            slot = uniform(0, budget);
            budget -= slot;
        };
        PbwMonomial mono;
        take(mono.l);
        take(mono.m);
        take(mono.n);
        take(mono.o);
        if (with_w) take(mono.r);
        return mono;
    }

    PbwElement pbw(const Algebra& alg, int max_deg, int max_terms) {
        const bool with_w = alg.kind() == AlgebraKind::AW;
        PbwElement e = PbwElement::zero(alg);
        for (int i = 0, n = uniform(1, max_terms); i < n; ++i)
            e += nonzero_coeff(alg.config().is_generic()) *
                 PbwElement::monomial(alg, pbw_monomial(max_deg, with_w));
        return e;
    }

    GwaElement gwa(const Algebra& alg, int max_e, int max_terms) {
        GwaElement e = GwaElement::zero(alg);
        for (int i = 0, n = uniform(1, max_terms); i < n; ++i)
            e += nonzero_coeff(alg.config().is_generic()) *
                 GwaElement::monomial(alg, GwaMonomial{uniform(0, max_e), uniform(0, max_e),
                                                       uniform(0, max_e), uniform(-max_e, max_e)});
        return e;
    }

    LocElement loc_unit(const Algebra& alg, int max_e) {
        return LocElement::monomial(
            alg, GwaMonomial{uniform(-max_e, max_e), uniform(-max_e, max_e), uniform(-max_e, max_e), 0},
            nonzero_coeff(alg.config().is_generic()), ZBasis::Loc);
    }

    TorusElement torus(const Torus& ctx, int max_e, int max_terms) {
        TorusElement e = TorusElement::zero(ctx);
        for (int i = 0, n = uniform(1, max_terms); i < n; ++i)
            e += nonzero_coeff(ctx.config().is_generic()) *
                 TorusElement::monomial(ctx, TorusExp{uniform(-max_e, max_e), uniform(-max_e, max_e),
                                                      uniform(-max_e, max_e), uniform(-max_e, max_e)});
        return e;
    }

    /// (c, d, e, f) with cf - de = 1, as a short product of shears.
    std::array<int, 4> unimodular() {
        long c = 1, d = 0, e = 0, f = 1;
        for (int i = 0, steps = uniform(1, 3); i < steps; ++i) {
            const int k = uniform(-2, 2);
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

    /// Endomorphism data accepted in generic mode (j = k = m = n = 0 forced).
    EndoData endo_generic() {
        const auto cd = unimodular();
        EndoData data;
        data.alpha = ParamScalar(nonzero_rational());
        data.beta = ParamScalar(nonzero_rational());
        data.gamma = ParamScalar(nonzero_rational());
        data.i = uniform(-3, 3);
        data.c = cd[0];
        data.d = cd[1];
        data.e = cd[2];
        data.f = cd[3];
        return data;
    }

    /// Endomorphism data accepted at p = 2, q = 4 via 2^(-2r) 4^r = 1.
    EndoData endo_p2q4() {
        EndoData data = endo_generic();
        data.j = uniform(-2, 2);
        data.k = uniform(-2, 2);
        data.m = -2 * (data.d * data.j - data.c * data.k);
        data.n = -2 * (data.f * data.j - data.e * data.k);
        return data;
    }

    ParamConfig random_specialization(int bound = 6) {
        std::array<Rational, 4> vals;
        for (auto& v : vals) {
            int n = uniform(-bound, bound);
            if (n == 0) n = 2;
            int d = uniform(1, bound);
            v = Rational(n) / Rational(d);
        }
        return ParamConfig::specialized(vals);
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace gwa
