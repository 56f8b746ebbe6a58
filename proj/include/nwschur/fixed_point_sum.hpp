#pragma once

#include <vector>

#include "nwschur/laurent.hpp"

namespace nwschur {

/// One summand of the localized character sum: a weight monomial over a
/// product of factors (1 - y_ij)^{d_ij}.
struct FixedPointTerm {
    std::vector<long> weight;        // length N
    std::vector<std::vector<int>> d; // N x N, zero diagonal, entries >= 0
};

/// Chooses the variable convention of the sum.
///   SchurForm: numerator prod x_i^{+wt_i},  y_ij = x_i^{-1} x_j
///   WeylForm:  numerator prod x_i^{-wt_i},  y_ij = x_i x_j^{-1}
enum class SignForm { SchurForm, WeylForm };

/// Evaluates sum_t num_t / prod_{i != j} (1 - y_ij)^{d_ij(t)} exactly by
/// clearing to the common denominator prod (1 - y_ij)^{M_ij} with per-pair
/// maxima M_ij, then dividing out.  The inputs are supposed to make the sum
/// a Laurent polynomial; a NonExactDivision signals corrupted terms.
/// denominator_padding adds to every M_ij; the result must not change.
inline LaurentPolynomial sum_rational_terms(const std::vector<FixedPointTerm>& terms, int n_vars,
                                            SignForm form, int denominator_padding = 0) {
    if (denominator_padding < 0) throw PreconditionError("denominator padding must be non-negative");
    LaurentPolynomial numerator(n_vars);
    if (terms.empty()) return numerator;

    const std::size_t n = static_cast<std::size_t>(n_vars);
    for (const FixedPointTerm& t : terms) {
        if (t.weight.size() != n || t.d.size() != n)
            throw PreconditionError("term dimensions do not match n_vars");
        for (std::size_t i = 0; i < n; ++i) {
            if (t.d[i].size() != n || t.d[i][i] != 0)
                throw PreconditionError("d matrix must be N x N with zero diagonal");
            for (std::size_t j = 0; j < n; ++j)
                if (t.d[i][j] < 0) throw PreconditionError("d entries must be non-negative");
        }
    }

    std::vector<std::vector<int>> max_d(n, std::vector<int>(n, 0));
    for (const FixedPointTerm& t : terms)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) max_d[i][j] = std::max(max_d[i][j], t.d[i][j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) max_d[i][j] += denominator_padding;

    // 1 - y_ij and its small powers, cached per ordered pair
    auto one_minus_y = [&](std::size_t i, std::size_t j) {
        Exponents e(n, 0);
        if (form == SignForm::SchurForm) {
            e[i] = -1;
            e[j] = 1;
        } else {
            e[i] = 1;
            e[j] = -1;
        }
        return LaurentPolynomial::constant(n_vars, 1) - LaurentPolynomial::monomial(std::move(e));
    };
    std::vector<std::vector<std::vector<LaurentPolynomial>>> powers(
        n, std::vector<std::vector<LaurentPolynomial>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            powers[i][j].push_back(LaurentPolynomial::constant(n_vars, 1));
            LaurentPolynomial base = one_minus_y(i, j);
            for (int k = 1; k <= max_d[i][j]; ++k)
                powers[i][j].push_back(powers[i][j].back() * base);
        }

    for (const FixedPointTerm& t : terms) {
        Exponents we(n);
        for (std::size_t i = 0; i < n; ++i)
            we[i] = static_cast<int>(form == SignForm::SchurForm ? t.weight[i] : -t.weight[i]);
        LaurentPolynomial contrib = LaurentPolynomial::monomial(std::move(we));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                int deficit = max_d[i][j] - t.d[i][j];
                if (deficit > 0) contrib *= powers[i][j][static_cast<std::size_t>(deficit)];
            }
        numerator += contrib;
    }

    LaurentPolynomial denominator = LaurentPolynomial::constant(n_vars, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && max_d[i][j] > 0)
                denominator *= powers[i][j][static_cast<std::size_t>(max_d[i][j])];

    return exact_divide(numerator, denominator);
}

} // namespace nwschur
