#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "nwschur/laurent.hpp"

namespace nwschur {

/// Weakly decreasing non-negative parts; trailing zeros allowed.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < 0) return false;
        if (k > 0 && p[k] > p[k - 1]) return false;
    }
    return true;
}

inline Partition trim_partition(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool partition_contains(const Partition& outer, const Partition& inner) {
    Partition in = trim_partition(inner);
    if (in.size() > outer.size()) return false;
    for (std::size_t k = 0; k < in.size(); ++k)
        if (in[k] > outer[k]) return false;
    return true;
}

namespace detail {

// Alternant sum_{pi in S_N} sgn(pi) x_{pi(1)}^{mu_1} ... x_{pi(N)}^{mu_N}.
inline LaurentPolynomial alternant(const std::vector<int>& mu, int n_vars) {
    LaurentPolynomial a(n_vars);
    std::vector<int> idx(static_cast<std::size_t>(n_vars));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) ++inversions;
        Exponents e(static_cast<std::size_t>(n_vars), 0);
        for (std::size_t k = 0; k < idx.size(); ++k)
            e[static_cast<std::size_t>(idx[k])] = mu[k];
        a.add_term(e, (inversions % 2 == 0) ? Int(1) : Int(-1));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return a;
}

} // namespace detail

/// Classical Schur polynomial s_lambda(x_1..x_N) via the bialternant ratio.
inline LaurentPolynomial schur_polynomial(const Partition& lambda, int n_vars) {
    if (!is_partition(lambda)) throw PreconditionError("not a partition");
    Partition lam = trim_partition(lambda);
    if (static_cast<int>(lam.size()) > n_vars)
        throw PreconditionError("partition has more parts than variables");
    lam.resize(static_cast<std::size_t>(n_vars), 0);

    std::vector<int> mu(static_cast<std::size_t>(n_vars));
    std::vector<int> rho(static_cast<std::size_t>(n_vars));
    for (int k = 0; k < n_vars; ++k) {
        mu[static_cast<std::size_t>(k)] = lam[static_cast<std::size_t>(k)] + n_vars - 1 - k;
        rho[static_cast<std::size_t>(k)] = n_vars - 1 - k;
    }
    return exact_divide(detail::alternant(mu, n_vars), detail::alternant(rho, n_vars));
}

/// Complete homogeneous symmetric polynomial h_k(x_1..x_N).
inline LaurentPolynomial complete_homogeneous(int k, int n_vars) {
    if (k < 0) return LaurentPolynomial::zero(n_vars);
    if (k == 0) return LaurentPolynomial::constant(n_vars, 1);
    // h_d(x_1..x_m) = h_d(x_1..x_{m-1}) + x_m h_{d-1}(x_1..x_m)
    std::vector<LaurentPolynomial> h(static_cast<std::size_t>(k) + 1, LaurentPolynomial(n_vars));
    h[0] = LaurentPolynomial::constant(n_vars, 1);
    for (int m = 1; m <= n_vars; ++m)
        for (int deg = 1; deg <= k; ++deg)
            h[static_cast<std::size_t>(deg)] +=
                LaurentPolynomial::variable(n_vars, m) * h[static_cast<std::size_t>(deg) - 1];
    return h[static_cast<std::size_t>(k)];
}

/// Skew Schur polynomial via the Jacobi-Trudi determinant
/// det( h_{lambda_i - mu_j - i + j} ).
inline LaurentPolynomial skew_schur_polynomial(const Partition& lambda, const Partition& mu, int n_vars) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw PreconditionError("not a partition");
    if (!partition_contains(lambda, mu))
        throw PreconditionError("inner shape is not contained in the outer shape");

    Partition lam = trim_partition(lambda);
    Partition inner = mu;
    inner.resize(lam.size(), 0);
    const int l = static_cast<int>(lam.size());
    if (l == 0) return LaurentPolynomial::constant(n_vars, 1);

    std::vector<int> idx(static_cast<std::size_t>(l));
    std::iota(idx.begin(), idx.end(), 0);
    LaurentPolynomial det(n_vars);
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) ++inversions;
        LaurentPolynomial prod = LaurentPolynomial::constant(n_vars, (inversions % 2 == 0) ? 1 : -1);
        bool vanished = false;
        for (int i = 0; i < l && !vanished; ++i) {
            int j = idx[static_cast<std::size_t>(i)];
            int deg = lam[static_cast<std::size_t>(i)] - inner[static_cast<std::size_t>(j)] - i + j;
            if (deg < 0) {
                vanished = true;
                break;
            }
            prod *= complete_homogeneous(deg, n_vars);
        }
        if (!vanished) det += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

/// Expansion of a symmetric polynomial in the Schur basis.
struct SchurExpansion {
    // partitions padded to n_vars parts, multiplicities non-zero
    std::vector<std::pair<Partition, Int>> terms;

    bool operator==(const SchurExpansion& other) const = default;
};

/// Greedy peeling: repeatedly remove coeff * s_lambda at the
/// lexicographically greatest exponent vector, which must be a partition.
inline SchurExpansion schur_expand(const LaurentPolynomial& p) {
    if (has_negative_exponent(p))
        throw NotPolynomialError("schur_expand requires non-negative exponents");
    if (!is_symmetric(p))
        throw NotSymmetricError("schur_expand requires a symmetric polynomial");

    SchurExpansion expansion;
    LaurentPolynomial rest = p;
    while (!rest.is_zero()) {
        const Exponents lead = rest.terms().rbegin()->first;
        const Int c = rest.terms().rbegin()->second;
        for (std::size_t k = 1; k < lead.size(); ++k)
            if (lead[k] > lead[k - 1])
                throw NonDominantLeadingTermError("leading exponent is not weakly decreasing");
        Partition lam(lead.begin(), lead.end());
        rest -= c * schur_polynomial(lam, p.n_vars());
        expansion.terms.emplace_back(std::move(lam), c);
    }
    return expansion;
}

} // namespace nwschur
