#pragma once

#include <string>

#include <json.hpp>

#include "nwschur/character.hpp"
#include "nwschur/diagram_io.hpp"
#include "nwschur/oracle.hpp"
#include "nwschur/permutation.hpp"
#include "nwschur/schur.hpp"
#include "nwschur/tabloid.hpp"

namespace nwschur {

/// JSON rendering used by every command: exponent vectors with decimal
/// string coefficients, in the polynomial's deterministic term order.
inline nlohmann::json polynomial_to_json(const LaurentPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exponents"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

inline nlohmann::json expansion_to_json(const SchurExpansion& exp) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lam, mult] : exp.terms) {
        nlohmann::json t;
        t["partition"] = lam;
        t["multiplicity"] = mult.str();
        out.push_back(std::move(t));
    }
    return out;
}

inline nlohmann::json check_report(const Diagram& d) {
    nlohmann::json r;
    r["columns"] = diagram_to_json(d)["columns"];
    r["n_rows"] = d.n_rows();
    r["max_row"] = d.max_row();
    r["square_count"] = d.square_count();
    r["northwest"] = is_northwest(d);
    r["lexicographic"] = is_lexicographic(d);
    Diagram sorted = lex_sort(d);
    r["northwest_after_lex_sort"] = is_northwest(sorted);
    r["blowup_closed"] = is_blowup_closed(d);
    return r;
}

inline nlohmann::json blowup_report(const Diagram& d) {
    Blowup bh = blowup(lex_sort(d));
    nlohmann::json r;
    r["n_rows"] = bh.diagram.n_rows();
    r["columns"] = nlohmann::json::array();
    for (std::size_t k = 0; k < bh.diagram.column_count(); ++k) {
        nlohmann::json c;
        c["rows"] = bh.diagram.columns()[k];
        c["multiplicity"] = bh.multiplicity[k];
        c["phantom"] = bh.is_phantom(k);
        r["columns"].push_back(std::move(c));
    }
    r["phantom_count"] = bh.phantom_count();
    return r;
}

inline nlohmann::json tabloids_report(const Diagram& d, int n_rows) {
    Diagram sorted = lex_sort(d);
    Blowup bh = blowup(sorted);
    nlohmann::json r;
    r["n_rows"] = n_rows;
    bool oversized = false;
    for (const Column& c : bh.diagram.columns())
        if (static_cast<int>(c.size()) > n_rows) oversized = true;
    r["oversized_column"] = oversized; // true means no filling exists
    r["blowup_columns"] = nlohmann::json::array();
    for (const Column& c : bh.diagram.columns()) r["blowup_columns"].push_back(c);
    r["tabloids"] = nlohmann::json::array();
    for (const Tabloid& t : enumerate_tabloids(bh.diagram, n_rows)) {
        FixedPointData fp = fixed_point_data(t, bh, n_rows);
        nlohmann::json jt;
        jt["entries"] = t.entries;
        jt["weight"] = fp.weight;
        jt["d"] = fp.d;
        jt["d_plus"] = fp.d_plus;
        r["tabloids"].push_back(std::move(jt));
    }
    r["tabloid_count"] = r["tabloids"].size();
    return r;
}

inline nlohmann::json perms_report(const Diagram& d, int n_rows) {
    MonotoneSequence seq = monotone_sequence(d, n_rows);
    nlohmann::json r;
    r["n_rows"] = n_rows;
    r["lex_sorted_input"] = seq.input_was_lexicographic;
    r["permutations"] = nlohmann::json::array();
    Permutation prev = Permutation::identity(n_rows);
    for (std::size_t j = 0; j < seq.permutations.size(); ++j) {
        const Permutation& u = seq.permutations[j];
        const Column& col = seq.sorted_diagram.columns()[j];

        Column image;
        for (std::size_t k = 1; k <= col.size(); ++k) image.push_back(u(static_cast<int>(k)));
        std::sort(image.begin(), image.end());

        nlohmann::json ju;
        ju["images"] = u.images();
        ju["length"] = length(u);
        ju["alpha_holds"] = (length(u) == length(prev) + length(compose(prev.inverse(), u)));
        ju["beta_holds"] = (image == col);
        ju["column"] = col;
        r["permutations"].push_back(std::move(ju));
        prev = u;
    }
    return r;
}

inline nlohmann::json character_report(const Diagram& d, int n_rows, bool weyl_module,
                                       bool expand, bool with_dimension) {
    LaurentPolynomial chi = weyl_module ? weyl_character(d, n_rows) : schur_character(d, n_rows);
    Blowup bh = blowup(lex_sort(d));
    nlohmann::json r;
    r["module"] = weyl_module ? "weyl" : "schur";
    r["n_rows"] = n_rows;
    r["character"] = polynomial_to_json(chi);
    r["tabloid_count"] = enumerate_tabloids(bh.diagram, n_rows).size();
    if (expand) {
        LaurentPolynomial schur_side = weyl_module ? invert_variables(chi) : chi;
        r["schur_expansion"] = expansion_to_json(schur_expand(schur_side));
    }
    if (with_dimension) r["dimension"] = evaluate_at_ones(chi).str();
    return r;
}

inline nlohmann::json oracle_report(const Diagram& d, int n_rows, bool expand, bool with_dimension,
                                    const OracleLimits& limits = {}) {
    LaurentPolynomial chi = tensor_schur_character(d, n_rows, limits);
    nlohmann::json r;
    r["module"] = "schur";
    r["n_rows"] = n_rows;
    r["character"] = polynomial_to_json(chi);
    if (expand) r["schur_expansion"] = expansion_to_json(schur_expand(chi));
    if (with_dimension) r["dimension"] = evaluate_at_ones(chi).str();
    return r;
}

inline nlohmann::json duality_report(const Diagram& d, int n_rows, int r_cols) {
    DualityReport dr = check_complement_duality(d, n_rows, r_cols);
    nlohmann::json r;
    r["rect_rows"] = n_rows;
    r["rect_cols"] = r_cols;
    r["complement"] = diagram_to_json(dr.complement);
    r["lhs"] = polynomial_to_json(dr.lhs);
    r["rhs"] = polynomial_to_json(dr.rhs);
    r["holds"] = dr.holds;
    return r;
}

inline nlohmann::json poincare_report(const Diagram& d, int n_rows) {
    LaurentPolynomial p = poincare_polynomial(d, n_rows);
    nlohmann::json r;
    r["n_rows"] = n_rows;
    r["poincare"] = polynomial_to_json(p);
    nlohmann::json betti = nlohmann::json::array();
    int top = 0;
    for (const auto& [e, c] : p.terms()) top = std::max(top, e[0]);
    for (int k = 0; k <= top; ++k)
        betti.push_back(p.coeff({k}).str());
    r["betti"] = std::move(betti);
    r["euler_characteristic"] = evaluate_at_ones(p).str();
    return r;
}

} // namespace nwschur
