#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "nwschur/diagram.hpp"
#include "nwschur/fixed_point_sum.hpp"
#include "nwschur/laurent.hpp"
#include "nwschur/tabloid.hpp"

namespace nwschur {

namespace detail {

inline std::vector<FixedPointTerm> localization_terms(const Diagram& d, int n_rows) {
    Diagram sorted = lex_sort(d);
    if (!is_northwest(sorted))
        throw NotNorthwestError("the character formula requires a northwest diagram");
    if (sorted.max_row() > n_rows)
        throw PreconditionError("diagram has more than n_rows rows");

    Blowup bh = blowup(sorted);
    std::vector<FixedPointTerm> terms;
    for (const Tabloid& t : enumerate_tabloids(bh.diagram, n_rows)) {
        FixedPointData fp = fixed_point_data(t, bh, n_rows);
        terms.push_back(FixedPointTerm{std::move(fp.weight), std::move(fp.d)});
    }
    return terms;
}

} // namespace detail

/// Localized character of the Weyl module W_D for GL(N).
inline LaurentPolynomial weyl_character(const Diagram& d, int n_rows) {
    return sum_rational_terms(detail::localization_terms(d, n_rows), n_rows, SignForm::WeylForm);
}

/// Character of the Schur module S_D for GL(N): a polynomial with
/// non-negative coefficients, symmetric in the variables.
inline LaurentPolynomial schur_character(const Diagram& d, int n_rows) {
    return sum_rational_terms(detail::localization_terms(d, n_rows), n_rows, SignForm::SchurForm);
}

inline Int module_dimension(const Diagram& d, int n_rows) {
    return evaluate_at_ones(schur_character(d, n_rows));
}

/// Searches row relabelings for one making the diagram northwest after
/// lex-sorting its columns.  Characters are invariant under both moves.
inline std::optional<Diagram> northwest_row_permutation_form(const Diagram& d) {
    Diagram sorted = lex_sort(d);
    if (is_northwest(sorted)) return sorted;
    const int n = d.n_rows();
    if (n > 8) return std::nullopt; // factorial search; beyond desk scale
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 1);
    do {
        std::vector<Column> cols;
        cols.reserve(d.column_count());
        for (const Column& c : d.columns()) {
            Column nc;
            nc.reserve(c.size());
            for (int i : c) nc.push_back(relabel[static_cast<std::size_t>(i) - 1]);
            std::sort(nc.begin(), nc.end());
            cols.push_back(std::move(nc));
        }
        Diagram candidate = lex_sort(Diagram(std::move(cols), n));
        if (is_northwest(candidate)) return candidate;
    } while (std::next_permutation(relabel.begin(), relabel.end()));
    return std::nullopt;
}

struct DualityReport {
    bool holds = false;
    LaurentPolynomial lhs; // char S_{D'}
    LaurentPolynomial rhs; // (x_1...x_N)^r * char S_D (x^{-1})
    Diagram complement;
};

/// Checks char S_{D'} = det^r * char S_D(x^{-1}) for the complement D' of D
/// inside the N x r rectangle.  Both D and D' must be northwest up to a row
/// relabeling and column reordering; otherwise this reports an error rather
/// than guessing.
inline DualityReport check_complement_duality(const Diagram& d, int n_rows, int r_cols) {
    Diagram comp = complement_in_rectangle(d, n_rows, r_cols);

    std::optional<Diagram> nf_d = northwest_row_permutation_form(
        Diagram(d.columns(), std::max(d.n_rows(), n_rows)));
    if (!nf_d)
        throw PreconditionError("diagram is not northwest up to row/column permutation");
    std::optional<Diagram> nf_comp = northwest_row_permutation_form(comp);
    if (!nf_comp)
        throw PreconditionError("complement is not northwest up to row/column permutation");

    DualityReport report;
    report.complement = comp;
    report.lhs = schur_character(*nf_comp, n_rows);
    Exponents det_exp(static_cast<std::size_t>(n_rows), r_cols);
    report.rhs = LaurentPolynomial::monomial(std::move(det_exp)) *
                 invert_variables(schur_character(*nf_d, n_rows));
    report.holds = (report.lhs == report.rhs);
    return report;
}

/// True iff the distinct columns are already closed under pairwise
/// intersection, i.e. the blowup adds no phantom column.
inline bool is_blowup_closed(const Diagram& d) {
    return blowup(d).phantom_count() == 0;
}

/// Poincare polynomial in q: sum over tabloids of q^{2 d+(t)}.  Requires the
/// smoothness precondition that the distinct columns be intersection-closed.
inline LaurentPolynomial poincare_polynomial(const Diagram& d, int n_rows) {
    Diagram sorted = lex_sort(d);
    if (!is_northwest(sorted))
        throw NotNorthwestError("poincare_polynomial requires a northwest diagram");
    if (sorted.max_row() > n_rows)
        throw PreconditionError("diagram has more than n_rows rows");
    Blowup bh = blowup(sorted);
    if (bh.phantom_count() != 0)
        throw BlowupNotClosedError("diagram is not closed under column intersections");

    LaurentPolynomial poly(1);
    for (const Tabloid& t : enumerate_tabloids(bh.diagram, n_rows)) {
        FixedPointData fp = fixed_point_data(t, bh, n_rows);
        poly.add_term({static_cast<int>(2 * fp.d_plus)}, 1);
    }
    return poly;
}

} // namespace nwschur
