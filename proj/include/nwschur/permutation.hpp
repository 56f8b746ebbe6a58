#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nwschur/diagram.hpp"
#include "nwschur/errors.hpp"

namespace nwschur {

/// Bijection of {1..N} in one-line notation: images()[k-1] = u(k).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v) - 1])
                throw PreconditionError("images do not form a permutation of 1..N");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<std::size_t>(k) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t k = 0; k < images_.size(); ++k)
            inv[static_cast<std::size_t>(images_[k]) - 1] = static_cast<int>(k) + 1;
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (images_[k] != static_cast<int>(k) + 1) return false;
        return true;
    }

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

/// (a o b)(k) = a(b(k)); rightmost factor acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw PreconditionError("composing permutations of different sizes");
    std::vector<int> im(static_cast<std::size_t>(a.size()));
    for (int k = 1; k <= a.size(); ++k) im[static_cast<std::size_t>(k) - 1] = a(b(k));
    return Permutation(std::move(im));
}

/// Coxeter length = inversion count.
inline long length(const Permutation& w) {
    long inv = 0;
    const auto& im = w.images();
    for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
            if (im[i] > im[j]) ++inv;
    return inv;
}

/// Largest absent row index lying below some present one; N when the column
/// is an initial segment {1..k}.
inline int gap(const Column& c, int n_rows) {
    if (c.empty()) return n_rows;
    int top = c.back();
    for (int i = top - 1; i >= 1; --i)
        if (!std::binary_search(c.begin(), c.end(), i)) return i;
    return n_rows;
}

/// Minimum length representative of the coset kappa * Sigma_{N-1}:
/// fixes 1..n-1, shifts n..N-1 up by one, sends N to n.
inline Permutation kappa(int n, int n_rows) {
    if (n < 1 || n > n_rows) throw PreconditionError("kappa index out of range");
    std::vector<int> im(static_cast<std::size_t>(n_rows));
    for (int i = 1; i < n; ++i) im[static_cast<std::size_t>(i) - 1] = i;
    for (int i = n; i < n_rows; ++i) im[static_cast<std::size_t>(i) - 1] = i + 1;
    im[static_cast<std::size_t>(n_rows) - 1] = n;
    return Permutation(std::move(im));
}

namespace detail {

inline bool is_initial_segment(const Column& c) {
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != static_cast<int>(k) + 1) return false;
    return true;
}

// Delete row `hole` from a column: entries above it stay, entries below it
// move up one place; an entry equal to the hole is dropped (full columns
// shrink at the bottom when hole = m).
inline Column squeeze(const Column& c, int hole) {
    Column out;
    out.reserve(c.size());
    for (int v : c) {
        if (v < hole) out.push_back(v);
        else if (v > hole) out.push_back(v - 1);
    }
    return out;
}

// The derivation rule shared by derived_diagram and monotone_sequence.
// Columns split into a prefix of initial segments and a tail of others; the
// tail is squeezed at one common hole, the gap row of its first column.
// The northwest property puts that row outside every tail column, keeps the
// derived diagram northwest, and makes the kappa factorizations of
// consecutive columns nest, which is what the length additivity needs.
struct LevelHoles {
    std::vector<int> hole;      // per column; hole == m means an identity factor
    std::size_t first_non_initial; // == column count when all are initial
};

inline LevelHoles level_holes(const std::vector<Column>& cols, int m) {
    LevelHoles out;
    std::size_t j = 0;
    while (j < cols.size() && is_initial_segment(cols[j])) ++j;
    out.first_non_initial = j;
    int g = (j < cols.size()) ? gap(cols[j], m) : m;
    out.hole.assign(cols.size(), m);
    for (std::size_t k = j; k < cols.size(); ++k) out.hole[k] = g;
    return out;
}

inline std::vector<Column> derive_columns(const std::vector<Column>& cols, int m) {
    LevelHoles holes = level_holes(cols, m);
    std::vector<Column> out;
    out.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) out.push_back(squeeze(cols[j], holes.hole[j]));
    return out;
}

// kappa factor of Sigma_m embedded in Sigma_N, fixing m+1..N.
inline Permutation kappa_embedded(int n, int m, int n_rows) {
    std::vector<int> im(static_cast<std::size_t>(n_rows));
    for (int i = 1; i < n; ++i) im[static_cast<std::size_t>(i) - 1] = i;
    for (int i = n; i < m; ++i) im[static_cast<std::size_t>(i) - 1] = i + 1;
    im[static_cast<std::size_t>(m) - 1] = n;
    for (int i = m + 1; i <= n_rows; ++i) im[static_cast<std::size_t>(i) - 1] = i;
    return Permutation(std::move(im));
}

} // namespace detail

/// One derivation step: push squares below the gap row up by one place,
/// using the common tail hole described above.  The result is northwest
/// with at most N-1 rows whenever the input is northwest with at most N
/// rows (columns are taken in lex order).
inline Diagram derived_diagram(const Diagram& d, int n_rows) {
    Diagram sorted = lex_sort(d);
    if (!is_northwest(sorted)) throw NotNorthwestError("derived_diagram requires a northwest diagram");
    if (sorted.max_row() > n_rows) throw PreconditionError("diagram has more than n_rows rows");
    std::vector<Column> cols = detail::derive_columns(sorted.columns(), n_rows);
    std::erase_if(cols, [](const Column& c) { return c.empty(); });
    return Diagram(std::move(cols), std::max(n_rows - 1, 0));
}

struct MonotoneSequence {
    std::vector<Permutation> permutations; // one per column of the lex-sorted diagram
    Diagram sorted_diagram;
    bool input_was_lexicographic = true;   // warning flag: false means we re-sorted
};

/// The recursive gap construction: u_j is the product of the kappa factors
/// read off the derived-diagram chain, rightmost factor acting first.  The
/// sequence is monotone in weak order and u_j carries {1..|C_j|} onto C_j.
inline MonotoneSequence monotone_sequence(const Diagram& d, int n_rows) {
    if (d.max_row() > n_rows) throw PreconditionError("diagram has more than n_rows rows");
    MonotoneSequence result;
    result.input_was_lexicographic = is_lexicographic(d);
    result.sorted_diagram = result.input_was_lexicographic ? d : lex_sort(d);
    if (!is_northwest(result.sorted_diagram))
        throw NotNorthwestError("monotone_sequence requires a northwest diagram");

    const std::size_t r = result.sorted_diagram.column_count();
    result.permutations.assign(r, Permutation::identity(n_rows));
    if (r == 0 || n_rows == 0) return result;

    // walk the derivation chain from level N down, recording per-level holes
    std::vector<std::vector<int>> holes(static_cast<std::size_t>(n_rows));
    std::vector<Column> cols = result.sorted_diagram.columns();
    for (int m = n_rows; m >= 1; --m) {
        detail::LevelHoles lh = detail::level_holes(cols, m);
        holes[static_cast<std::size_t>(m) - 1] = std::move(lh.hole);
        if (m > 1)
            for (std::size_t j = 0; j < r; ++j)
                cols[j] = detail::squeeze(cols[j], holes[static_cast<std::size_t>(m) - 1][j]);
    }

    for (std::size_t j = 0; j < r; ++j) {
        Permutation u = Permutation::identity(n_rows);
        for (int m = 1; m <= n_rows; ++m) {
            int g = holes[static_cast<std::size_t>(m) - 1][j];
            if (g == m) continue; // identity factor
            u = compose(detail::kappa_embedded(g, m, n_rows), u);
        }
        result.permutations[j] = std::move(u);
    }
    return result;
}

} // namespace nwschur
