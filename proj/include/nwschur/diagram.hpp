#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "nwschur/errors.hpp"

namespace nwschur {

// A column is a non-empty set of row indices, stored strictly increasing,
// 1-based.
using Column = std::vector<int>;

inline bool is_valid_column(const Column& c) {
    if (c.empty()) return false;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 1) return false;
        if (k > 0 && c[k] <= c[k - 1]) return false;
    }
    return true;
}

/// A diagram is an ordered list of columns (repeats allowed) together with
/// an ambient row bound.  The bound matters even when no square touches the
/// last row: fillings and characters depend on it.
class Diagram {
public:
    Diagram() = default;

    Diagram(std::vector<Column> columns, int n_rows)
        : columns_(std::move(columns)), n_rows_(n_rows) {
        if (n_rows_ < 0) throw PreconditionError("n_rows must be non-negative");
        for (const Column& c : columns_) {
            if (!is_valid_column(c))
                throw PreconditionError("column must be a non-empty strictly increasing set of positive row indices");
            if (c.back() > n_rows_)
                throw PreconditionError("column row index exceeds n_rows");
        }
    }

    const std::vector<Column>& columns() const { return columns_; }
    int n_rows() const { return n_rows_; }
    std::size_t column_count() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    std::size_t square_count() const {
        std::size_t n = 0;
        for (const Column& c : columns_) n += c.size();
        return n;
    }

    int max_row() const {
        int m = 0;
        for (const Column& c : columns_) m = std::max(m, c.back());
        return m;
    }

    bool contains(int row, int col) const {
        if (col < 1 || static_cast<std::size_t>(col) > columns_.size()) return false;
        const Column& c = columns_[static_cast<std::size_t>(col) - 1];
        return std::binary_search(c.begin(), c.end(), row);
    }

    bool operator==(const Diagram& other) const = default;

private:
    std::vector<Column> columns_;
    int n_rows_ = 0;
};

/// The paper's order on columns: an initial subset precedes its supersets,
/// otherwise the first differing entry decides.  This coincides with plain
/// lexicographic comparison of the sorted element sequences.
inline std::strong_ordering lex_compare(const Column& a, const Column& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// True iff a equals the first |a| elements of b (equality counts).
inline bool is_initial_subset(const Column& a, const Column& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

inline bool is_subset(const Column& a, const Column& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Column column_intersection(const Column& a, const Column& b) {
    Column r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

/// Closure property: any two squares generate their (min row, min column).
inline bool is_northwest(const Diagram& d) {
    const auto& cols = d.columns();
    // For column positions j1 < j2 the condition reduces to:
    // every entry of C_{j2} below max(C_{j1}) also lies in C_{j1}.
    for (std::size_t j1 = 0; j1 < cols.size(); ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < cols.size(); ++j2) {
            int top = cols[j1].back();
            for (int i : cols[j2]) {
                if (i >= top) break;
                if (!std::binary_search(cols[j1].begin(), cols[j1].end(), i))
                    return false;
            }
        }
    }
    return true;
}

inline bool is_lexicographic(const Diagram& d) {
    const auto& cols = d.columns();
    for (std::size_t j = 1; j < cols.size(); ++j)
        if (lex_compare(cols[j - 1], cols[j]) == std::strong_ordering::greater)
            return false;
    return true;
}

/// Stable rearrangement into column order; preserves the northwest property.
inline Diagram lex_sort(const Diagram& d) {
    std::vector<Column> cols = d.columns();
    std::stable_sort(cols.begin(), cols.end(),
                     [](const Column& a, const Column& b) { return lex_compare(a, b) == std::strong_ordering::less; });
    return Diagram(std::move(cols), d.n_rows());
}

/// Distinct columns of a blowup in lex order, with the repetition count each
/// column had in the source diagram.  Count 0 marks a phantom column.
struct Blowup {
    Diagram diagram;
    std::vector<int> multiplicity;

    bool is_phantom(std::size_t k) const { return multiplicity[k] == 0; }

    std::size_t phantom_count() const {
        std::size_t n = 0;
        for (int m : multiplicity) n += (m == 0);
        return n;
    }
};

/// Smallest set of distinct columns containing those of d and closed under
/// pairwise intersection.  Empty intersections are dropped: an empty column
/// imposes no constraint.
inline Blowup blowup(const Diagram& d) {
    std::set<Column> closed(d.columns().begin(), d.columns().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Column> fresh;
        for (auto it = closed.begin(); it != closed.end(); ++it) {
            for (auto jt = std::next(it); jt != closed.end(); ++jt) {
                Column meet = column_intersection(*it, *jt);
                if (!meet.empty() && !closed.count(meet)) fresh.push_back(std::move(meet));
            }
        }
        for (Column& c : fresh) {
            if (closed.insert(std::move(c)).second) grew = true;
        }
    }

    std::vector<Column> cols(closed.begin(), closed.end());
    std::sort(cols.begin(), cols.end(),
              [](const Column& a, const Column& b) { return lex_compare(a, b) == std::strong_ordering::less; });

    std::vector<int> mult(cols.size(), 0);
    for (std::size_t k = 0; k < cols.size(); ++k)
        mult[k] = static_cast<int>(std::count(d.columns().begin(), d.columns().end(), cols[k]));

    return Blowup{Diagram(std::move(cols), d.n_rows()), std::move(mult)};
}

/// Distinct columns with the minimal covers of the inclusion order.
/// cover_pairs hold (lower, upper) indices into distinct_columns.
struct ColumnPoset {
    std::vector<Column> distinct_columns;
    std::vector<std::pair<int, int>> cover_pairs;
};

inline ColumnPoset column_poset(const Diagram& d) {
    std::set<Column> uniq(d.columns().begin(), d.columns().end());
    std::vector<Column> cols(uniq.begin(), uniq.end());
    std::sort(cols.begin(), cols.end(),
              [](const Column& a, const Column& b) { return lex_compare(a, b) == std::strong_ordering::less; });

    ColumnPoset poset;
    poset.distinct_columns = cols;
    const int n = static_cast<int>(cols.size());
    for (int lo = 0; lo < n; ++lo) {
        for (int hi = 0; hi < n; ++hi) {
            if (lo == hi) continue;
            if (cols[lo] == cols[hi] || !is_subset(cols[lo], cols[hi])) continue;
            bool minimal = true;
            for (int mid = 0; mid < n && minimal; ++mid) {
                if (mid == lo || mid == hi) continue;
                if (is_subset(cols[lo], cols[mid]) && is_subset(cols[mid], cols[hi]) &&
                    cols[mid] != cols[lo] && cols[mid] != cols[hi])
                    minimal = false;
            }
            if (minimal) poset.cover_pairs.emplace_back(lo, hi);
        }
    }
    return poset;
}

namespace detail {

inline std::vector<int> conjugate_parts(const std::vector<int>& parts) {
    std::vector<int> conj;
    if (!parts.empty()) conj.assign(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return conj;
}

} // namespace detail

/// Skew shape lambda/mu as a column diagram: column j holds the rows
/// mu'_j+1 .. lambda'_j.  Columns are listed right to left, which is their
/// lex order and makes the diagram northwest.
inline Diagram diagram_from_skew(const std::vector<int>& lambda, const std::vector<int>& mu, int n_rows) {
    for (std::size_t k = 1; k < lambda.size(); ++k)
        if (lambda[k] > lambda[k - 1]) throw PreconditionError("outer shape is not a partition");
    for (std::size_t k = 1; k < mu.size(); ++k)
        if (mu[k] > mu[k - 1]) throw PreconditionError("inner shape is not a partition");
    for (std::size_t k = 0; k < mu.size(); ++k)
        if (mu[k] > (k < lambda.size() ? lambda[k] : 0))
            throw PreconditionError("inner shape is not contained in the outer shape");

    std::vector<int> lc = detail::conjugate_parts(lambda);
    std::vector<int> mc = detail::conjugate_parts(mu);
    mc.resize(lc.size(), 0);

    std::vector<Column> cols;
    for (std::size_t j = lc.size(); j-- > 0;) {
        Column c;
        for (int i = mc[j] + 1; i <= lc[j]; ++i) c.push_back(i);
        if (!c.empty()) cols.push_back(std::move(c));
    }
    return Diagram(std::move(cols), n_rows);
}

inline Diagram diagram_from_partition(const std::vector<int>& lambda, int n_rows) {
    return diagram_from_skew(lambda, {}, n_rows);
}

/// Complement within the N x r rectangle.  The stored columns occupy the
/// first slots; slots beyond them count as empty, so their complements are
/// full columns.  Empty complement columns are dropped.
inline Diagram complement_in_rectangle(const Diagram& d, int n_rows, int r_cols) {
    if (n_rows < 1 || r_cols < 0)
        throw PreconditionError("rectangle dimensions must be positive");
    if (static_cast<std::size_t>(r_cols) < d.column_count())
        throw PreconditionError("diagram has more columns than the rectangle");
    if (d.max_row() > n_rows)
        throw PreconditionError("diagram does not fit inside the rectangle");

    std::vector<Column> out;
    for (int j = 0; j < r_cols; ++j) {
        Column comp;
        if (static_cast<std::size_t>(j) < d.column_count()) {
            const Column& c = d.columns()[static_cast<std::size_t>(j)];
            for (int i = 1; i <= n_rows; ++i)
                if (!std::binary_search(c.begin(), c.end(), i)) comp.push_back(i);
        } else {
            for (int i = 1; i <= n_rows; ++i) comp.push_back(i);
        }
        if (!comp.empty()) out.push_back(std::move(comp));
    }
    return Diagram(std::move(out), n_rows);
}

} // namespace nwschur
