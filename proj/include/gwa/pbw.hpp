#pragma once

// Canonical-form arithmetic over the PBW basis x^l y^m s^n t^o (w^r) of the
// extended quantized Weyl algebra and its central polynomial extension.
//
// Defining relations, oriented into rewrite rules towards the normal order
// x < y < s < t < w:
//
//   y x -> p^-1 x y - p^-1        s x -> l x s        t x -> u x t
//   t s -> q^-1 s t               s y -> l^-1 y s     t y -> u^-1 y t
//   w g -> g w  for every generator g
//
// normalize_word applies the rules one at a time and is the testing oracle;
// multiply runs an exponent-level fast path for the commuting twists and a
// small recurrence for the y^m x^l crossings.

#include <map>
#include <string>
#include <vector>

#include "gwa/algebra.hpp"

namespace gwa {

enum class GenLetter { X, Y, S, T, W };

inline const char* letter_name(GenLetter g) {
    switch (g) {
        case GenLetter::X: return "x";
        case GenLetter::Y: return "y";
        case GenLetter::S: return "s";
        case GenLetter::T: return "t";
        case GenLetter::W: return "w";
    }
    return "?";
}

/// A raw word over the generators, in any order; input to normalization.
using Word = std::vector<GenLetter>;

struct PbwMonomial {
    int l = 0, m = 0, n = 0, o = 0, r = 0;

    int degree() const { return l + m + n + o + r; }

    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) {
        return a.l == b.l && a.m == b.m && a.n == b.n && a.o == b.o && a.r == b.r;
    }
    friend bool operator!=(const PbwMonomial& a, const PbwMonomial& b) { return !(a == b); }
    /// Graded lexicographic order on (l, m, n, o, r).
    friend bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.l != b.l) return a.l < b.l;
        if (a.m != b.m) return a.m < b.m;
        if (a.n != b.n) return a.n < b.n;
        if (a.o != b.o) return a.o < b.o;
        return a.r < b.r;
    }

    std::string to_string() const {
        std::string out;
        auto app = [&out](const char* g, int e) {
            if (e == 0) return;
            if (!out.empty()) out += "*";
            out += g;
            if (e > 1) out += "^" + std::to_string(e);
        };
        app("x", l);
        app("y", m);
        app("s", n);
        app("t", o);
        app("w", r);
        return out.empty() ? "1" : out;
    }
};

class PbwElement {
  public:
    using TermMap = std::map<PbwMonomial, ParamScalar>;

    explicit PbwElement(Algebra alg) : alg_(std::move(alg)) { check_kind(); }

    static PbwElement zero(const Algebra& alg) { return PbwElement(alg); }

    static PbwElement scalar(const Algebra& alg, const ParamScalar& c) {
        PbwElement e(alg);
        e.add_term(PbwMonomial{}, c);
        return e;
    }

    static PbwElement one(const Algebra& alg) { return scalar(alg, ParamScalar(1)); }

    static PbwElement monomial(const Algebra& alg, const PbwMonomial& mono,
                               const ParamScalar& c = ParamScalar(1)) {
        PbwElement e(alg);
        e.add_term(mono, c);
        return e;
    }

    static PbwElement generator(const Algebra& alg, GenLetter g) {
        PbwMonomial mono;
        switch (g) {
            case GenLetter::X: mono.l = 1; break;
            case GenLetter::Y: mono.m = 1; break;
            case GenLetter::S: mono.n = 1; break;
            case GenLetter::T: mono.o = 1; break;
            case GenLetter::W: mono.r = 1; break;
        }
        return monomial(alg, mono);
    }

    const Algebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == PbwMonomial{});
    }
    ParamScalar scalar_value() const {
        if (terms_.empty()) return ParamScalar(0);
        if (!is_scalar()) throw Error("element is not a scalar");
        return terms_.begin()->second;
    }

    void add_term(const PbwMonomial& mono, const ParamScalar& c) {
        if (c.is_zero()) return;
        if (mono.r > 0 && alg_.kind() == AlgebraKind::A)
            throw MismatchError("the plain algebra has no w generator");
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

    PbwElement operator-() const {
        PbwElement r(*this);
        for (auto& [mono, c] : r.terms_) c = -c;
        return r;
    }

    PbwElement& operator+=(const PbwElement& o) {
        alg_.require_same(o.alg_, "add");
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    PbwElement& operator-=(const PbwElement& o) {
        alg_.require_same(o.alg_, "sub");
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }

    friend PbwElement operator*(const ParamScalar& c, const PbwElement& e) {
        PbwElement r(e.alg_);
        for (const auto& [mono, k] : e.terms_) r.add_term(mono, c * k);
        return r;
    }
    friend PbwElement operator*(const PbwElement& e, const ParamScalar& c) { return c * e; }

    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);

    PbwElement pow(int n) const {
        if (n < 0) throw Error("negative power of a PBW element");
        PbwElement r = one(alg_);
        PbwElement base(*this);
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const PbwElement& a, const PbwElement& b) {
        if (!a.alg_.same_as(b.alg_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || ia->second != ib->second) return false;
        }
        return true;
    }
    friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

    std::string to_string() const;

  private:
    void check_kind() const {
        if (alg_.kind() == AlgebraKind::ALoc)
            throw MismatchError("PBW elements live in A or A[w], not the localization");
    }

    /// In specialized mode every stored coefficient is a constant.
    ParamScalar adjust(const ParamScalar& c) const {
        if (alg_.config().is_generic() || c.is_constant()) return c;
        return specialize(c, alg_.config());
    }

    Algebra alg_;
    TermMap terms_;
};

namespace detail {

/// Coefficients of the normal form of y^m x^j:
///   y^m x^j = sum_k  c_k  x^(j-k) y^(m-k),   0 <= k <= min(m, j),
/// from the one-letter push y^m x = p^-m x y^m - p^-m [m]_p y^(m-1).
inline std::vector<ParamScalar> weyl_cross_coeffs(const Algebra& alg, int m, int j) {
    const ParamScalar p_inv = alg.p().inverse();
    std::vector<ParamScalar> qint(static_cast<size_t>(m) + 1, ParamScalar(0));
    for (int d = 1; d <= m; ++d) qint[static_cast<size_t>(d)] = qint[static_cast<size_t>(d) - 1] * alg.p() + ParamScalar(1);

    // table[mm] = coefficient vector of y^mm x^jj for the current jj
    std::vector<std::vector<ParamScalar>> table(static_cast<size_t>(m) + 1);
    for (int mm = 0; mm <= m; ++mm) table[static_cast<size_t>(mm)] = {ParamScalar(1)};
    std::vector<ParamScalar> pinv_pow(static_cast<size_t>(m) + 1, ParamScalar(1));
    for (int mm = 1; mm <= m; ++mm) pinv_pow[static_cast<size_t>(mm)] = pinv_pow[static_cast<size_t>(mm) - 1] * p_inv;

    for (int jj = 1; jj <= j; ++jj) {
        for (int mm = m; mm >= 1; --mm) {
            const auto& cur = table[static_cast<size_t>(mm)];        // y^mm x^(jj-1)
            const auto& below = table[static_cast<size_t>(mm) - 1];  // y^(mm-1) x^(jj-1)
            const ParamScalar& pim = pinv_pow[static_cast<size_t>(mm)];
            std::vector<ParamScalar> next(static_cast<size_t>(std::min(mm, jj)) + 1, ParamScalar(0));
            for (size_t k = 0; k < next.size(); ++k) {
                if (k < cur.size()) next[k] += pim * cur[k];
                if (k >= 1 && k - 1 < below.size())
                    next[k] -= pim * qint[static_cast<size_t>(mm)] * below[k - 1];
            }
            table[static_cast<size_t>(mm)] = std::move(next);
        }
        // mm = 0 row stays {1}: y^0 x^jj = x^jj.
    }
    return table[static_cast<size_t>(m)];
}

}  // namespace detail

inline PbwElement operator*(const PbwElement& a, const PbwElement& b) {
    a.algebra().require_same(b.algebra(), "multiply");
    const Algebra& alg = a.algebra();
    PbwElement out(alg);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Commuting twists from moving x^l2 y^m2 s^n2 past s^n1 t^o1.
            ParamScalar twist = alg.lam().pow(static_cast<long>(ma.n) * (mb.l - mb.m)) *
                                alg.mu().pow(static_cast<long>(ma.o) * (mb.l - mb.m)) *
                                alg.q().pow(-static_cast<long>(ma.o) * mb.n);
            const ParamScalar coeff = ca * cb * twist;
            const auto cross = detail::weyl_cross_coeffs(alg, ma.m, mb.l);
            for (size_t k = 0; k < cross.size(); ++k) {
                if (cross[k].is_zero()) continue;
                PbwMonomial mono{ma.l + mb.l - static_cast<int>(k), ma.m + mb.m - static_cast<int>(k),
                                 ma.n + mb.n, ma.o + mb.o, ma.r + mb.r};
                out.add_term(mono, coeff * cross[k]);
            }
        }
    }
    return out;
}

inline PbwElement multiply(const PbwElement& a, const PbwElement& b) { return a * b; }

inline PbwElement commutator(const PbwElement& a, const PbwElement& b) { return a * b - b * a; }

/// The element z = xy - yx in PBW form: (1 - p^-1) xy + p^-1.
inline PbwElement z_element(const Algebra& alg) {
    return commutator(PbwElement::generator(alg, GenLetter::X), PbwElement::generator(alg, GenLetter::Y));
}

namespace detail {

inline int letter_rank(GenLetter g) { return static_cast<int>(g); }

struct RewriteRule {
    // word u.[a b].v with rank(a) > rank(b) rewrites to
    //   swap_coeff * u.[b a].v  (+ delta_coeff * u.v  for the pair (y, x))
    ParamScalar swap_coeff;
    bool has_delta = false;
    ParamScalar delta_coeff;
};

inline RewriteRule rule_for(const Algebra& alg, GenLetter first, GenLetter second) {
    using L = GenLetter;
    if (first == L::W) return {ParamScalar(1), false, ParamScalar(0)};
    if (first == L::Y && second == L::X) {
        const ParamScalar pi = alg.p().inverse();
        return {pi, true, -pi};
    }
    if (first == L::S && second == L::X) return {alg.lam(), false, ParamScalar(0)};
    if (first == L::S && second == L::Y) return {alg.lam().inverse(), false, ParamScalar(0)};
    if (first == L::T && second == L::X) return {alg.mu(), false, ParamScalar(0)};
    if (first == L::T && second == L::Y) return {alg.mu().inverse(), false, ParamScalar(0)};
    if (first == L::T && second == L::S) return {alg.q().inverse(), false, ParamScalar(0)};
    throw Error("no rewrite rule for ordered pair");
}

inline PbwElement normalize_word_rec(const Algebra& alg, const Word& word,
                                     std::map<Word, PbwElement>& memo) {
    auto hit = memo.find(word);
    if (hit != memo.end()) return hit->second;

    size_t pos = word.size();
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (letter_rank(word[i]) > letter_rank(word[i + 1])) {
            pos = i;
            break;
        }
    }
    if (pos == word.size()) {
        PbwMonomial mono;
        for (GenLetter g : word) {
            switch (g) {
                case GenLetter::X: ++mono.l; break;
                case GenLetter::Y: ++mono.m; break;
                case GenLetter::S: ++mono.n; break;
                case GenLetter::T: ++mono.o; break;
                case GenLetter::W: ++mono.r; break;
            }
        }
        PbwElement e = PbwElement::monomial(alg, mono);
        memo.emplace(word, e);
        return e;
    }

    const RewriteRule rule = rule_for(alg, word[pos], word[pos + 1]);
    Word swapped = word;
    std::swap(swapped[pos], swapped[pos + 1]);
    PbwElement result = rule.swap_coeff * normalize_word_rec(alg, swapped, memo);
    if (rule.has_delta) {
        Word shorter;
        shorter.reserve(word.size() - 2);
        shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<long>(pos));
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
        result += rule.delta_coeff * normalize_word_rec(alg, shorter, memo);
    }
    memo.emplace(word, result);
    return result;
}

}  // namespace detail

/// Normal form of a raw generator word, by innermost-leftmost rule
/// application.  This is the rewriting oracle for the fast multiply path.
inline PbwElement normalize_word(const Algebra& alg, const Word& word) {
    std::map<Word, PbwElement> memo;
    return detail::normalize_word_rec(alg, word, memo);
}

/// Residual of the commutation identity  x y^d - p^d y^d x - [d]_p y^(d-1);
/// the contract is the zero element.
inline PbwElement q_identity_check(const Algebra& alg, int d) {
    if (d < 1) throw Error("q_identity_check requires d >= 1");
    alg.require_p_not_one("q_identity_check");
    const PbwElement x = PbwElement::generator(alg, GenLetter::X);
    const PbwElement y = PbwElement::generator(alg, GenLetter::Y);
    const PbwElement yd = y.pow(d);
    const ParamScalar qd =
        (alg.p().pow(d) - ParamScalar(1)) / (alg.p() - ParamScalar(1));
    return x * yd - alg.p().pow(d) * (yd * x) - qd * y.pow(d - 1);
}

inline std::string PbwElement::to_string() const {
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

/// Coefficient-wise specialization onto the same algebra with a specialized
/// configuration.
inline PbwElement specialize_element(const PbwElement& e, const ParamConfig& cfg) {
    Algebra target(e.algebra().kind(), e.algebra().params(), cfg);
    PbwElement out(target);
    for (const auto& [mono, c] : e.terms()) out.add_term(mono, specialize(c, cfg));
    return out;
}

}  // namespace gwa
