#pragma once

// Exact coefficient arithmetic for the algebra parameters p, q, l (= lambda)
// and u (= mu): integer multivariate polynomials Z[p,q,l,u], their fraction
// field, parameter configurations (generic vs. rational specializations), and
// the exact solver for multiplicative identities p^m q^r = 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gwa/error.hpp"

namespace gwa {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector (e_p, e_q, e_l, e_u), all nonnegative.
using ParamExp = std::array<int, 4>;

inline int total_degree(const ParamExp& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Graded lexicographic order with variable order p < q < l < u.
struct ParamExpLess {
    bool operator()(const ParamExp& a, const ParamExp& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline const std::array<const char*, 4>& param_names() {
    static const std::array<const char*, 4> names{"p", "q", "l", "u"};
    return names;
}

// ---------------------------------------------------------------------------
// ParamPoly
// ---------------------------------------------------------------------------

class ParamPoly {
  public:
    using TermMap = std::map<ParamExp, Int, ParamExpLess>;

    ParamPoly() = default;
    ParamPoly(const Int& c) {  // NOLINT: implicit by design
        if (c != 0) terms_[{0, 0, 0, 0}] = c;
    }
    ParamPoly(long c) : ParamPoly(Int(c)) {}
    ParamPoly(int c) : ParamPoly(Int(c)) {}

    static ParamPoly variable(int idx) {
        ParamPoly r;
        ParamExp e{0, 0, 0, 0};
        e[static_cast<size_t>(idx)] = 1;
        r.terms_[e] = 1;
        return r;
    }

    static ParamPoly monomial(const ParamExp& e, const Int& c) {
        ParamPoly r;
        if (c != 0) r.terms_[e] = c;
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0, 0, 0});
    }
    Int constant_value() const {
        auto it = terms_.find({0, 0, 0, 0});
        return it == terms_.end() ? Int(0) : it->second;
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }

    size_t term_count() const { return terms_.size(); }

    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
        return terms_.empty() ? -1 : d;
    }

    /// Leading term in graded-lex order.
    const ParamExp& lead_exp() const { return terms_.rbegin()->first; }
    const Int& lead_coeff() const { return terms_.rbegin()->second; }

    void add_term(const ParamExp& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ParamPoly operator-() const {
        ParamPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ParamExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly operator*(const Int& c) const {
        ParamPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    friend bool operator<(const ParamPoly& a, const ParamPoly& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& x, const auto& y) {
                ParamExpLess lt;
                if (lt(x.first, y.first)) return true;
                if (lt(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    /// gcd of the integer coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g < 0 ? Int(-g) : g;
    }

    ParamPoly divexact_int(const Int& k) const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c / k;
        return r;
    }

    ParamPoly pow(unsigned n) const {
        ParamPoly r(Int(1));
        ParamPoly base(*this);
        while (n) {
            if (n & 1u) r *= base;
            base *= base;
            n >>= 1u;
        }
        return r;
    }

    Rational evaluate(const std::array<Rational, 4>& vals) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t(c);
            for (int v = 0; v < 4; ++v)
                for (int i = 0; i < e[static_cast<size_t>(v)]; ++i) t *= vals[static_cast<size_t>(v)];
            acc += t;
        }
        return acc;
    }

    /// Terms are emitted in descending graded-lex order, leading term first.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const ParamExp& e = it->first;
            const bool has_vars = total_degree(e) > 0;
            if (c != 1 || !has_vars) {
                os << c;
                if (has_vars) os << "*";
            }
            bool need_star = false;
            for (int v = 0; v < 4; ++v) {
                const int k = e[static_cast<size_t>(v)];
                if (k == 0) continue;
                if (need_star) os << "*";
                os << param_names()[static_cast<size_t>(v)];
                if (k > 1) os << "^" << k;
                need_star = true;
            }
        }
        return os.str();
    }

  private:
    TermMap terms_;
};

// --- multivariate gcd machinery (recursive content + subresultant PRS) ------

namespace detail {

/// Split into a univariate polynomial in `var` with ParamPoly coefficients.
inline std::map<int, ParamPoly> split_univariate(const ParamPoly& a, int var) {
    std::map<int, ParamPoly> out;
    for (const auto& [e, c] : a.terms()) {
        ParamExp rest = e;
        const int d = rest[static_cast<size_t>(var)];
        rest[static_cast<size_t>(var)] = 0;
        out[d].add_term(rest, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline ParamPoly join_univariate(const std::map<int, ParamPoly>& coeffs, int var) {
    ParamPoly out;
    for (const auto& [d, c] : coeffs) {
        for (const auto& [e, k] : c.terms()) {
            ParamExp full = e;
            full[static_cast<size_t>(var)] += d;
            out.add_term(full, k);
        }
    }
    return out;
}

/// Exact division of multivariate polynomials; both operands over Z.
/// The quotient must exist; anything else is an internal logic error.
inline ParamPoly divexact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    ParamPoly rem = a;
    ParamPoly quot;
    while (!rem.is_zero()) {
        const ParamExp& ea = rem.lead_exp();
        const ParamExp& eb = b.lead_exp();
        ParamExp q;
        for (size_t i = 0; i < 4; ++i) {
            q[i] = ea[i] - eb[i];
            if (q[i] < 0) throw Error("inexact polynomial division");
        }
        if (rem.lead_coeff() % b.lead_coeff() != 0) throw Error("inexact polynomial division");
        const Int qc = rem.lead_coeff() / b.lead_coeff();
        ParamPoly t = ParamPoly::monomial(q, qc);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

/// gcd of the ParamPoly coefficients of `a` viewed in Z[lower vars][var].
inline ParamPoly content_in(const ParamPoly& a, int var) {
    ParamPoly g;
    for (const auto& [d, c] : split_univariate(a, var)) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

/// Pseudo-remainder of a by b with respect to `var`: lc(b)^(da-db+1) * a = q*b + prem.
inline ParamPoly prem(const ParamPoly& a, const ParamPoly& b, int var) {
    auto ua = split_univariate(a, var);
    auto ub = split_univariate(b, var);
    const int db = ub.rbegin()->first;
    const ParamPoly lcb = ub.rbegin()->second;
    auto deg = [](const std::map<int, ParamPoly>& u) { return u.empty() ? -1 : u.rbegin()->first; };

    int e = deg(ua) - db + 1;
    while (!ua.empty() && deg(ua) >= db) {
        const int dr = deg(ua);
        const ParamPoly lcr = ua.rbegin()->second;
        std::map<int, ParamPoly> next;
        for (const auto& [d, c] : ua) {
            if (d == dr) continue;
            ParamPoly t = c * lcb;
            auto it = next.find(d);
            if (it == next.end()) next[d] = t; else it->second += t;
        }
        for (const auto& [d, c] : ub) {
            if (d == db) continue;
            ParamPoly t = c * lcr;
            auto it = next.find(d + dr - db);
            if (it == next.end()) next[d + dr - db] = -t; else it->second -= t;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        ua = std::move(next);
        --e;
    }
    ParamPoly r = join_univariate(ua, var);
    for (int i = 0; i < e; ++i) r *= lcb;
    return r;
}

inline ParamPoly normalize_lead_sign(ParamPoly a) {
    if (!a.is_zero() && a.lead_coeff() < 0) return -a;
    return a;
}

// Modular probe: degree in `var` of gcd(a, b) after substituting small
// integers for the other variables, computed over a word-sized prime field.
// The projected degree can only overestimate the true one (when the leading
// coefficients survive the evaluation), so a result of 0 certifies that the
// primitive parts are coprime.  Returns -1 when no usable projection exists.
inline int gcd_degree_probe(const ParamPoly& a, const ParamPoly& b, int var) {
    constexpr uint64_t prime = 0x7fffffffffffffe7ull;  // largest prime < 2^63
    auto mulmod = [](uint64_t x, uint64_t y) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % prime);
    };
    auto project = [&](const ParamPoly& poly, const std::array<uint64_t, 4>& pt) {
        std::vector<uint64_t> coeffs(static_cast<size_t>(poly.degree_in(var)) + 1, 0);
        for (const auto& [e, c] : poly.terms()) {
            Int red = c % prime;
            if (red < 0) red += prime;
            uint64_t v = red.convert_to<uint64_t>();
            for (int i = 0; i < 4; ++i) {
                if (i == var) continue;
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) v = mulmod(v, pt[static_cast<size_t>(i)]);
            }
            auto& slot = coeffs[static_cast<size_t>(e[static_cast<size_t>(var)])];
            slot = (slot + v) % prime;
        }
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        return coeffs;
    };
    auto powmod = [&](uint64_t x, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1ull) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1ull;
        }
        return r;
    };
    const int deg_a = a.degree_in(var);
    const int deg_b = b.degree_in(var);
    for (uint64_t attempt = 0; attempt < 4; ++attempt) {
        std::array<uint64_t, 4> pt{};
        for (size_t i = 0; i < 4; ++i) pt[i] = 2 + ((attempt * 17 + i * 5 + 3) % 97);
        auto ua = project(a, pt);
        auto ub = project(b, pt);
        // the projection must preserve the leading terms to be conclusive
        if (static_cast<int>(ua.size()) != deg_a + 1 || static_cast<int>(ub.size()) != deg_b + 1)
            continue;
        // Euclid over F_prime
        while (!ub.empty()) {
            const uint64_t lc_inv = powmod(ub.back(), prime - 2);
            while (ua.size() >= ub.size()) {
                const uint64_t factor = mulmod(ua.back(), lc_inv);
                const size_t shift = ua.size() - ub.size();
                for (size_t i = 0; i < ub.size(); ++i) {
                    uint64_t sub = mulmod(factor, ub[i]);
                    auto& slot = ua[shift + i];
                    slot = (slot >= sub) ? slot - sub : slot + (prime - sub);
                }
                while (!ua.empty() && ua.back() == 0) ua.pop_back();
                if (ua.empty()) break;
            }
            std::swap(ua, ub);
        }
        return static_cast<int>(ua.size()) - 1;
    }
    return -1;
}

inline ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_lead_sign(b);
    if (b.is_zero()) return normalize_lead_sign(a);
    if (a.is_constant() && b.is_constant())
        return ParamPoly(boost::multiprecision::gcd(a.constant_value(), b.constant_value()));

    // monomial fast path: exponent-wise minimum and integer content
    if (a.term_count() == 1 || b.term_count() == 1) {
        auto min_exp = [](const ParamPoly& poly) {
            ParamExp low = poly.terms().begin()->first;
            for (const auto& [e, c] : poly.terms())
                for (size_t i = 0; i < 4; ++i) low[i] = std::min(low[i], e[i]);
            return low;
        };
        const ParamExp la = min_exp(a);
        const ParamExp lb = min_exp(b);
        ParamExp low{};
        for (size_t i = 0; i < 4; ++i) low[i] = std::min(la[i], lb[i]);
        return ParamPoly::monomial(low, boost::multiprecision::gcd(a.content(), b.content()));
    }

    int var = -1;
    for (int v = 3; v >= 0; --v) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    if (var < 0) return ParamPoly(boost::multiprecision::gcd(a.constant_value(), b.constant_value()));

    if (a.degree_in(var) > 0 && b.degree_in(var) > 0 && gcd_degree_probe(a, b, var) == 0) {
        // primitive parts are coprime in `var`; only the contents can match
        return normalize_lead_sign(poly_gcd(content_in(a, var), content_in(b, var)));
    }

    const ParamPoly cont_a = content_in(a, var);
    const ParamPoly cont_b = content_in(b, var);
    const ParamPoly cont = poly_gcd(cont_a, cont_b);
    ParamPoly pa = divexact(a, cont_a);
    ParamPoly pb = divexact(b, cont_b);

    ParamPoly c = pa.degree_in(var) >= pb.degree_in(var) ? pa : pb;
    ParamPoly d = pa.degree_in(var) >= pb.degree_in(var) ? pb : pa;
    if (d.degree_in(var) == 0) return normalize_lead_sign(cont);

    ParamPoly g(Int(1)), h(Int(1));
    while (true) {
        const int delta = c.degree_in(var) - d.degree_in(var);
        ParamPoly r = prem(c, d, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            d = ParamPoly(Int(1));
            break;
        }
        c = d;
        ParamPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        d = divexact(r, divisor);
        g = split_univariate(c, var).rbegin()->second;
        if (delta > 0) {
            ParamPoly gd = g.pow(static_cast<unsigned>(delta));
            ParamPoly hd = h.pow(static_cast<unsigned>(delta - 1));
            h = divexact(gd, hd);
        }
    }
    const ParamPoly pp = divexact(d, content_in(d, var));
    return normalize_lead_sign(cont * pp);
}

}  // namespace detail

inline ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) { return detail::poly_gcd(a, b); }

// ---------------------------------------------------------------------------
// ParamConfig
// ---------------------------------------------------------------------------

enum class ParamMode { Generic, Specialized };

/// Either the generic field Q(p,q,l,u) or an assignment of nonzero rationals.
class ParamConfig {
  public:
    ParamConfig() : mode_(ParamMode::Generic), values_{} {}

    static ParamConfig generic() { return ParamConfig(); }

    static ParamConfig specialized(const std::array<Rational, 4>& vals) {
        for (size_t i = 0; i < 4; ++i)
            if (vals[i] == 0)
                throw ConfigError(std::string("parameter ") + param_names()[i] + " must be nonzero");
        ParamConfig c;
        c.mode_ = ParamMode::Specialized;
        c.values_ = vals;
        return c;
    }

    static ParamConfig specialized(const Rational& p, const Rational& q, const Rational& l,
                                   const Rational& u) {
        return specialized(std::array<Rational, 4>{p, q, l, u});
    }

    ParamMode mode() const { return mode_; }
    bool is_generic() const { return mode_ == ParamMode::Generic; }
    const std::array<Rational, 4>& values() const { return values_; }
    const Rational& value(int idx) const { return values_[static_cast<size_t>(idx)]; }

    bool p_is_one() const { return !is_generic() && values_[0] == 1; }
    bool q_is_one() const { return !is_generic() && values_[1] == 1; }
    bool p_is_minus_one() const { return !is_generic() && values_[0] == -1; }
    bool q_is_minus_one() const { return !is_generic() && values_[1] == -1; }
    // For rational values the only roots of unity are +1 and -1.
    bool p_is_root_of_unity() const { return p_is_one() || p_is_minus_one(); }
    bool q_is_root_of_unity() const { return q_is_one() || q_is_minus_one(); }

    friend bool operator==(const ParamConfig& a, const ParamConfig& b) {
        if (a.mode_ != b.mode_) return false;
        return a.is_generic() || a.values_ == b.values_;
    }
    friend bool operator!=(const ParamConfig& a, const ParamConfig& b) { return !(a == b); }

  private:
    ParamMode mode_;
    std::array<Rational, 4> values_;
};

// ---------------------------------------------------------------------------
// ParamScalar
// ---------------------------------------------------------------------------

/// An element of Q(p,q,l,u) held in canonical form: numerator and denominator
/// share no factor (including integer content) and the denominator's leading
/// coefficient is positive.  Equality is nevertheless decided by
/// cross-multiplication, so it never depends on gcd completeness.
class ParamScalar {
  public:
    ParamScalar() : num_(), den_(Int(1)) {}
    ParamScalar(const Int& c) : num_(c), den_(Int(1)) {}          // NOLINT
    ParamScalar(long c) : ParamScalar(Int(c)) {}                  // NOLINT
    ParamScalar(int c) : ParamScalar(Int(c)) {}                   // NOLINT
    ParamScalar(const Rational& r)                                // NOLINT
        : num_(Int(numerator(r))), den_(Int(denominator(r))) {}
    explicit ParamScalar(const ParamPoly& p) : num_(p), den_(Int(1)) {}

    static ParamScalar from_fraction(const ParamPoly& num, const ParamPoly& den) {
        if (den.is_zero()) throw DivisionByZeroError("zero denominator");
        ParamScalar s;
        s.num_ = num;
        s.den_ = den;
        s.reduce();
        return s;
    }

    static ParamScalar param(int idx) { return ParamScalar(ParamPoly::variable(idx)); }
    static ParamScalar p() { return param(0); }
    static ParamScalar q() { return param(1); }
    static ParamScalar lam() { return param(2); }
    static ParamScalar mu() { return param(3); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const {
        if (!is_constant()) throw Error("scalar is not constant: " + to_string());
        return Rational(num_.constant_value()) / Rational(den_.constant_value());
    }

    ParamScalar operator-() const {
        ParamScalar r(*this);
        r.num_ = -r.num_;
        return r;
    }

    // Both operands are canonical, so results only need the classical small
    // pairwise gcds (as in mpq arithmetic) and come out canonical again.
    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) { return add_signed(a, b, false); }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return add_signed(a, b, true); }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        if (a.is_zero() || b.is_zero()) return ParamScalar(0);
        const ParamPoly g1 = poly_gcd(a.num_, b.den_);
        const ParamPoly g2 = poly_gcd(b.num_, a.den_);
        ParamPoly num = detail::divexact(a.num_, g1) * detail::divexact(b.num_, g2);
        ParamPoly den = detail::divexact(a.den_, g2) * detail::divexact(b.den_, g1);
        return from_canonical(std::move(num), std::move(den));
    }
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return a * b.inverse();
    }
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

    ParamScalar inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return from_canonical(den_, num_);
    }

    ParamScalar pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        // num and den are coprime, so their powers are as well
        ParamScalar r(Int(1));
        if (n == 0) return r;
        r.num_ = num_.pow(static_cast<unsigned>(n));
        r.den_ = den_.pow(static_cast<unsigned>(n));
        return r;
    }

    /// Cross-multiplication equality: a/b == c/d iff ad == cb.
    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }
    friend bool operator<(const ParamScalar& a, const ParamScalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// Size measure used for fraction-growth-aware pivoting.
    size_t weight() const { return num_.term_count() + den_.term_count(); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    /// Full canonical rendering "(num)/(den)", independent of shortcuts.
    std::string to_canonical_string() const {
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    /// num and den already coprime; only the sign needs normalizing.
    static ParamScalar from_canonical(ParamPoly num, ParamPoly den) {
        ParamScalar s;
        if (num.is_zero()) return s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        if (s.den_.lead_coeff() < 0) {
            s.num_ = -s.num_;
            s.den_ = -s.den_;
        }
        return s;
    }

    static ParamScalar add_signed(const ParamScalar& a, const ParamScalar& b, bool negate) {
        const ParamPoly& n2 = negate ? -b.num_ : b.num_;
        if (a.is_zero()) return from_canonical(n2, b.den_);
        if (b.is_zero()) return a;
        const ParamPoly g = poly_gcd(a.den_, b.den_);
        if (g.is_one()) {
            ParamPoly num = a.num_ * b.den_ + n2 * a.den_;
            if (num.is_zero()) return ParamScalar(0);
            return from_canonical(std::move(num), a.den_ * b.den_);
        }
        const ParamPoly da = detail::divexact(a.den_, g);
        const ParamPoly db = detail::divexact(b.den_, g);
        ParamPoly t = a.num_ * db + n2 * da;
        if (t.is_zero()) return ParamScalar(0);
        const ParamPoly h = poly_gcd(t, g);
        if (h.is_one()) return from_canonical(std::move(t), da * db * g);
        return from_canonical(detail::divexact(t, h), da * db * detail::divexact(g, h));
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = ParamPoly(Int(1));
            return;
        }
        ParamPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = detail::divexact(num_, g);
            den_ = detail::divexact(den_, g);
        }
        if (den_.lead_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    ParamPoly num_;
    ParamPoly den_;
};

/// Canonical representative; ParamScalar values are kept canonical, so this is
/// the identity on well-formed inputs and exists as the named operation.
inline ParamScalar canonicalize(const ParamScalar& a) {
    return ParamScalar::from_fraction(a.num(), a.den());
}

enum class FieldOp { Add, Sub, Mul, Div };

inline ParamScalar field_arith(const ParamScalar& a, const ParamScalar& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw Error("unreachable");
}

/// Evaluate at the configuration's assignment.  The result is a ParamScalar
/// with trivial parameter support.
inline ParamScalar specialize(const ParamScalar& a, const ParamConfig& cfg) {
    if (cfg.is_generic()) throw ConfigError("specialize requires a specialized configuration");
    const Rational dv = a.den().evaluate(cfg.values());
    if (dv == 0)
        throw ConfigError("denominator vanishes at the assignment: " + a.den().to_string());
    const Rational nv = a.num().evaluate(cfg.values());
    return ParamScalar(nv / dv);
}

// ---------------------------------------------------------------------------
// solve_power_identity
// ---------------------------------------------------------------------------

namespace detail {

struct RationalFactorization {
    int sign = 1;                 // +1 or -1
    std::map<Int, long> primes;   // prime -> exponent (negative for denominator primes)
};

inline void factor_into(std::map<Int, long>& out, Int n, long mult) {
    if (n < 0) n = -n;
    for (Int d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out[d] += mult;
            n /= d;
        }
    }
    if (n > 1) out[n] += mult;
}

inline RationalFactorization factor_rational(const Rational& r) {
    RationalFactorization f;
    if (r < 0) f.sign = -1;
    factor_into(f.primes, Int(numerator(r)), 1);
    factor_into(f.primes, Int(denominator(r)), -1);
    for (auto it = f.primes.begin(); it != f.primes.end();)
        it = it->second == 0 ? f.primes.erase(it) : std::next(it);
    return f;
}

}  // namespace detail

/// All (m, r) with m_lo <= m <= m_hi, r_lo <= r <= r_hi and p^m q^r = 1.
/// In generic mode p, q are independent indeterminates, so only (0, 0)
/// qualifies; in specialized mode the identity is decided exactly via the
/// prime factorizations of the two rationals.
inline std::set<std::pair<int, int>> solve_power_identity(int m_lo, int m_hi, int r_lo, int r_hi,
                                                          const ParamConfig& cfg) {
    if (m_lo > m_hi || r_lo > r_hi) throw ConfigError("empty exponent range");
    std::set<std::pair<int, int>> out;
    if (cfg.is_generic()) {
        if (m_lo <= 0 && 0 <= m_hi && r_lo <= 0 && 0 <= r_hi) out.insert({0, 0});
        return out;
    }
    const auto fp = detail::factor_rational(cfg.value(0));
    const auto fq = detail::factor_rational(cfg.value(1));
    std::set<Int> primes;
    for (const auto& [pr, e] : fp.primes) primes.insert(pr);
    for (const auto& [pr, e] : fq.primes) primes.insert(pr);
    auto expo = [](const detail::RationalFactorization& f, const Int& pr) {
        auto it = f.primes.find(pr);
        return it == f.primes.end() ? 0L : it->second;
    };
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int r = r_lo; r <= r_hi; ++r) {
            bool ok = true;
            for (const Int& pr : primes) {
                if (static_cast<long>(m) * expo(fp, pr) + static_cast<long>(r) * expo(fq, pr) != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            const int sign_p = (fp.sign < 0 && (m % 2 != 0)) ? -1 : 1;
            const int sign_q = (fq.sign < 0 && (r % 2 != 0)) ? -1 : 1;
            if (sign_p * sign_q == 1) out.insert({m, r});
        }
    }
    return out;
}

}  // namespace gwa
