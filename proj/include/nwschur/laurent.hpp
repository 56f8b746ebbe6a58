#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nwschur/errors.hpp"

namespace nwschur {

using Int = boost::multiprecision::cpp_int;

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial with exact integer coefficients.  Terms are
/// kept in a map ordered lexicographically by exponent vector; no zero
/// coefficient is ever stored.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, Int>;

    explicit LaurentPolynomial(int n_vars = 0) : n_vars_(n_vars) {}

    static LaurentPolynomial zero(int n_vars) { return LaurentPolynomial(n_vars); }

    static LaurentPolynomial constant(int n_vars, Int c) {
        LaurentPolynomial p(n_vars);
        if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(n_vars), 0), std::move(c));
        return p;
    }

    static LaurentPolynomial monomial(Exponents e, Int c = 1) {
        LaurentPolynomial p(static_cast<int>(e.size()));
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    /// x_i as a polynomial in n_vars variables (i is 1-based).
    static LaurentPolynomial variable(int n_vars, int i, int power = 1) {
        Exponents e(static_cast<std::size_t>(n_vars), 0);
        e[static_cast<std::size_t>(i) - 1] = power;
        return monomial(std::move(e));
    }

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exponents& e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
        check_vars(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
        check_vars(other);
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
        LaurentPolynomial r(a.n_vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_vars(b);
        LaurentPolynomial r(a.n_vars_);
        Exponents e(static_cast<std::size_t>(a.n_vars_));
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const Int& s) {
        LaurentPolynomial r(a.n_vars_);
        if (s != 0)
            for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend LaurentPolynomial operator*(const Int& s, const LaurentPolynomial& a) { return a * s; }

    bool operator==(const LaurentPolynomial& other) const = default;

private:
    void check_vars(const LaurentPolynomial& other) const {
        if (n_vars_ != other.n_vars_)
            throw PreconditionError("variable count mismatch");
    }

    int n_vars_ = 0;
    TermMap terms_;
};

inline LaurentPolynomial pow(const LaurentPolynomial& p, int k) {
    if (k < 0) throw PreconditionError("negative polynomial power");
    LaurentPolynomial r = LaurentPolynomial::constant(p.n_vars(), 1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

/// Substitute x_i -> x_i^{-1}: negate every exponent vector.
inline LaurentPolynomial invert_variables(const LaurentPolynomial& p) {
    LaurentPolynomial r(p.n_vars());
    Exponents e(static_cast<std::size_t>(p.n_vars()));
    for (const auto& [ep, c] : p.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = -ep[k];
        r.add_term(e, c);
    }
    return r;
}

/// Sum of coefficients = evaluation at x_1 = ... = x_N = 1.
inline Int evaluate_at_ones(const LaurentPolynomial& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

/// Relabel variables: exponent of x_i moves to x_{images[i-1]}.
inline LaurentPolynomial permute_variables(const LaurentPolynomial& p, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != p.n_vars())
        throw PreconditionError("permutation size must match variable count");
    LaurentPolynomial r(p.n_vars());
    Exponents e(static_cast<std::size_t>(p.n_vars()));
    for (const auto& [ep, c] : p.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k)
            e[static_cast<std::size_t>(images[k]) - 1] = ep[k];
        r.add_term(e, c);
    }
    return r;
}

/// Symmetric under every variable swap (adjacent transpositions suffice).
inline bool is_symmetric(const LaurentPolynomial& p) {
    const int n = p.n_vars();
    for (int i = 1; i < n; ++i) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        std::swap(images[static_cast<std::size_t>(i) - 1], images[static_cast<std::size_t>(i)]);
        if (permute_variables(p, images) != p) return false;
    }
    return true;
}

inline bool has_negative_exponent(const LaurentPolynomial& p) {
    for (const auto& [e, c] : p.terms())
        for (int x : e)
            if (x < 0) return true;
    return false;
}

namespace detail {

// Graded lexicographic order on non-negative exponent vectors.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

inline Exponents min_exponents(const LaurentPolynomial& p) {
    Exponents m(static_cast<std::size_t>(p.n_vars()), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) { m = e; first = false; continue; }
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    }
    return m;
}

} // namespace detail

/// Exact quotient p / q in the Laurent ring over the integers.  Both inputs
/// are shifted by monomials so their per-variable minimum degree is zero;
/// the per-variable valuation is additive over an integral domain, so the
/// shifted quotient is an honest polynomial and single-divisor division in
/// graded-lex order either produces it or proves non-divisibility.
inline LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (p.n_vars() != q.n_vars()) throw PreconditionError("variable count mismatch");
    if (p.is_zero()) return LaurentPolynomial::zero(p.n_vars());

    const std::size_t n = static_cast<std::size_t>(p.n_vars());
    const Exponents shift_p = detail::min_exponents(p);
    const Exponents shift_q = detail::min_exponents(q);

    using WorkMap = std::map<Exponents, Int, detail::GrlexLess>;
    WorkMap rem, div;
    {
        Exponents e(n);
        for (const auto& [ep, c] : p.terms()) {
            for (std::size_t k = 0; k < n; ++k) e[k] = ep[k] - shift_p[k];
            rem.emplace(e, c);
        }
        for (const auto& [eq, c] : q.terms()) {
            for (std::size_t k = 0; k < n; ++k) e[k] = eq[k] - shift_q[k];
            div.emplace(e, c);
        }
    }

    const Exponents& lead_q = div.rbegin()->first;
    const Int& lead_qc = div.rbegin()->second;

    LaurentPolynomial quotient(p.n_vars());
    Exponents te(n);
    while (!rem.empty()) {
        const auto& [lead_r, lead_rc] = *rem.rbegin();
        for (std::size_t k = 0; k < n; ++k) {
            te[k] = lead_r[k] - lead_q[k];
            if (te[k] < 0) throw NonExactDivisionError("leading monomial not divisible");
        }
        if (lead_rc % lead_qc != 0) throw NonExactDivisionError("leading coefficient not divisible");
        Int tc = lead_rc / lead_qc;

        // quotient term exponents in the original Laurent coordinates
        Exponents qe(n);
        for (std::size_t k = 0; k < n; ++k) qe[k] = te[k] + shift_p[k] - shift_q[k];
        quotient.add_term(qe, tc);

        Exponents se(n);
        for (const auto& [ed, cd] : div) {
            for (std::size_t k = 0; k < n; ++k) se[k] = ed[k] + te[k];
            auto [it, inserted] = rem.try_emplace(se, 0);
            it->second -= tc * cd;
            if (it->second == 0) rem.erase(it);
        }
    }
    return quotient;
}

} // namespace nwschur
