#pragma once

// Algebra descriptors shared by every basis representation: which algebra a
// value lives in (A, its polynomial extension A[w], or the localization at
// {z^i s^j t^k}), the structure constants (p, q, l, u) as exact scalars, and
// the parameter configuration.

#include <memory>
#include <string>

#include "gwa/scalars.hpp"

namespace gwa {

enum class AlgebraKind { A, AW, ALoc };

inline const char* kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::A: return "A";
        case AlgebraKind::AW: return "A-w";
        case AlgebraKind::ALoc: return "A-loc";
    }
    return "?";
}

/// The four structure constants of the presentation.  For the standard
/// algebra these are the master indeterminates; isomorphism targets may carry
/// transformed tuples such as (1/p, q, 1/l, 1/u).
struct AlgebraParams {
    ParamScalar p = ParamScalar::p();
    ParamScalar q = ParamScalar::q();
    ParamScalar lam = ParamScalar::lam();
    ParamScalar mu = ParamScalar::mu();

    friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
        return a.p == b.p && a.q == b.q && a.lam == b.lam && a.mu == b.mu;
    }
    friend bool operator!=(const AlgebraParams& a, const AlgebraParams& b) { return !(a == b); }
};

/// Cheap-to-copy immutable handle for an algebra descriptor.
class Algebra {
  public:
    Algebra() : Algebra(AlgebraKind::A, AlgebraParams{}, ParamConfig::generic()) {}

    Algebra(AlgebraKind kind, AlgebraParams params, ParamConfig config)
        : impl_(std::make_shared<const Impl>(make_impl(kind, std::move(params), std::move(config)))) {}

    static Algebra plain(ParamConfig cfg = ParamConfig::generic()) {
        return Algebra(AlgebraKind::A, AlgebraParams{}, std::move(cfg));
    }
    static Algebra poly_ext(ParamConfig cfg = ParamConfig::generic()) {
        return Algebra(AlgebraKind::AW, AlgebraParams{}, std::move(cfg));
    }
    static Algebra localized(ParamConfig cfg = ParamConfig::generic()) {
        return Algebra(AlgebraKind::ALoc, AlgebraParams{}, std::move(cfg));
    }

    /// Same parameters and configuration, different kind.
    Algebra with_kind(AlgebraKind k) const { return Algebra(k, impl_->params, impl_->config); }

    AlgebraKind kind() const { return impl_->kind; }
    const AlgebraParams& params() const { return impl_->params; }
    const ParamConfig& config() const { return impl_->config; }

    const ParamScalar& p() const { return impl_->params.p; }
    const ParamScalar& q() const { return impl_->params.q; }
    const ParamScalar& lam() const { return impl_->params.lam; }
    const ParamScalar& mu() const { return impl_->params.mu; }

    bool p_is_one() const { return impl_->params.p == ParamScalar(1); }

    bool same_as(const Algebra& o) const {
        if (impl_ == o.impl_) return true;
        return impl_->kind == o.impl_->kind && impl_->params == o.impl_->params &&
               impl_->config == o.impl_->config;
    }

    void require_same(const Algebra& o, const char* what) const {
        if (!same_as(o)) throw MismatchError(std::string(what) + ": operands belong to different algebras");
    }

    void require_p_not_one(const char* what) const {
        if (p_is_one()) throw ConfigError(std::string(what) + " requires p != 1");
    }

  private:
    struct Impl {
        AlgebraKind kind;
        AlgebraParams params;
        ParamConfig config;
    };

    static Impl make_impl(AlgebraKind kind, AlgebraParams params, ParamConfig config) {
        if (!config.is_generic()) {
            params.p = specialize(params.p, config);
            params.q = specialize(params.q, config);
            params.lam = specialize(params.lam, config);
            params.mu = specialize(params.mu, config);
        }
        for (const ParamScalar* s : {&params.p, &params.q, &params.lam, &params.mu})
            if (s->is_zero()) throw ConfigError("algebra parameters must be nonzero");
        if (kind == AlgebraKind::ALoc && params.p == ParamScalar(1))
            throw ConfigError("the localization requires p != 1");
        return Impl{kind, std::move(params), std::move(config)};
    }

    std::shared_ptr<const Impl> impl_;
};

}  // namespace gwa
