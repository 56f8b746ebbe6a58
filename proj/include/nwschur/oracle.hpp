#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "nwschur/diagram.hpp"
#include "nwschur/laurent.hpp"

namespace nwschur {

/// Squares of a diagram listed column instance by column instance;
/// the basis of V^{tensor D} is indexed by fillings of these positions.
struct DiagramPositions {
    std::vector<int> row;       // row index of each position
    std::vector<int> column;    // 1-based column slot of each position
    std::size_t size() const { return row.size(); }
};

inline DiagramPositions diagram_positions(const Diagram& d) {
    DiagramPositions pos;
    int j = 0;
    for (const Column& c : d.columns()) {
        ++j;
        for (int i : c) {
            pos.row.push_back(i);
            pos.column.push_back(j);
        }
    }
    return pos;
}

/// A position permutation in one-line notation on 0-based position indices.
using PositionPermutation = std::vector<int>;

enum class SymmetrizerKind { Row, Column };

inline bool preserves_classes(const DiagramPositions& pos, const PositionPermutation& perm,
                              SymmetrizerKind kind) {
    const std::vector<int>& cls = (kind == SymmetrizerKind::Row) ? pos.row : pos.column;
    for (std::size_t k = 0; k < perm.size(); ++k)
        if (cls[k] != cls[static_cast<std::size_t>(perm[k])]) return false;
    return true;
}

inline int permutation_sign(const PositionPermutation& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

namespace detail {

// All permutations fixing each class setwise (the row or column group),
// as position permutations.
inline std::vector<PositionPermutation> class_group(const DiagramPositions& pos, SymmetrizerKind kind) {
    const std::vector<int>& cls = (kind == SymmetrizerKind::Row) ? pos.row : pos.column;
    std::map<int, std::vector<int>> classes;
    for (std::size_t k = 0; k < cls.size(); ++k)
        classes[cls[k]].push_back(static_cast<int>(k));

    std::vector<PositionPermutation> group;
    PositionPermutation base(pos.size());
    std::iota(base.begin(), base.end(), 0);
    group.push_back(base);
    for (auto& [label, members] : classes) {
        std::vector<int> arrangement = members;
        std::vector<PositionPermutation> extended;
        std::sort(arrangement.begin(), arrangement.end());
        do {
            for (const PositionPermutation& g : group) {
                PositionPermutation h = g;
                for (std::size_t k = 0; k < members.size(); ++k)
                    h[static_cast<std::size_t>(members[k])] = g[static_cast<std::size_t>(arrangement[k])];
                extended.push_back(std::move(h));
            }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        group = std::move(extended);
    }
    return group;
}

} // namespace detail

inline std::vector<PositionPermutation> row_group(const Diagram& d) {
    return detail::class_group(diagram_positions(d), SymmetrizerKind::Row);
}

inline std::vector<PositionPermutation> column_group(const Diagram& d) {
    return detail::class_group(diagram_positions(d), SymmetrizerKind::Column);
}

/// A filling assigns a value in {1..N} to every position; a content block
/// collects the fillings with a fixed value histogram.
using Filling = std::vector<int>;

inline std::vector<int> filling_content(const Filling& f, int n_rows) {
    std::vector<int> content(static_cast<std::size_t>(n_rows), 0);
    for (int v : f) ++content[static_cast<std::size_t>(v) - 1];
    return content;
}

inline std::vector<std::vector<int>> content_compositions(int total, int n_rows) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n_rows), 0);
    auto rec = [&](auto&& self, int k, int rest) -> void {
        if (k == n_rows - 1) {
            cur[static_cast<std::size_t>(k)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, rest - v);
        }
    };
    if (n_rows >= 1) rec(rec, 0, total);
    return out;
}

inline std::vector<Filling> fillings_with_content(std::size_t positions, const std::vector<int>& content) {
    Filling values;
    for (std::size_t v = 0; v < content.size(); ++v)
        values.insert(values.end(), static_cast<std::size_t>(content[v]), static_cast<int>(v) + 1);
    std::sort(values.begin(), values.end());
    std::vector<Filling> out;
    if (values.size() != positions) return out;
    do {
        out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

/// 0/1 matrix of the right action of one position permutation on a content
/// block: basis vector e_f maps to e_{f o pi}.
inline std::vector<std::vector<int>> permutation_action_matrix(const Diagram& d,
                                                               const PositionPermutation& perm,
                                                               SymmetrizerKind kind,
                                                               const std::vector<Filling>& block) {
    DiagramPositions pos = diagram_positions(d);
    if (perm.size() != pos.size())
        throw PreconditionError("permutation size does not match the diagram's square count");
    if (!preserves_classes(pos, perm, kind))
        throw PreconditionError("permutation does not preserve the required row/column classes");

    std::map<Filling, int> index;
    for (std::size_t k = 0; k < block.size(); ++k) index[block[k]] = static_cast<int>(k);

    std::vector<std::vector<int>> mat(block.size(), std::vector<int>(block.size(), 0));
    Filling g(pos.size());
    for (std::size_t f = 0; f < block.size(); ++f) {
        for (std::size_t k = 0; k < pos.size(); ++k)
            g[k] = block[f][static_cast<std::size_t>(perm[k])];
        auto it = index.find(g);
        if (it == index.end())
            throw PreconditionError("permutation leaves the content block");
        mat[static_cast<std::size_t>(it->second)][f] = 1;
    }
    return mat;
}

namespace detail {

// Bareiss fraction-free elimination; exact rank over the integers.
inline int rank_bareiss(std::vector<std::vector<Int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace detail

struct OracleLimits {
    std::size_t max_squares = 6;
    int max_rows = 3;
};

/// Character of S_D computed straight from the definition: on each content
/// block, the rank of the row-symmetrizer followed by the signed column
/// symmetrizer acting on position fillings.  Works for arbitrary diagrams,
/// not only northwest ones.
inline LaurentPolynomial tensor_schur_character(const Diagram& d, int n_rows,
                                                const OracleLimits& limits = {}) {
    if (d.square_count() > limits.max_squares)
        throw PreconditionError("diagram exceeds the oracle's square budget");
    if (n_rows > limits.max_rows)
        throw PreconditionError("n_rows exceeds the oracle's row budget");
    if (d.max_row() > n_rows)
        throw PreconditionError("diagram has more than n_rows rows");

    DiagramPositions pos = diagram_positions(d);
    const std::size_t np = pos.size();
    LaurentPolynomial character(n_rows);
    if (np == 0) return LaurentPolynomial::constant(n_rows, 1);

    std::vector<PositionPermutation> rows = detail::class_group(pos, SymmetrizerKind::Row);
    std::vector<PositionPermutation> cols = detail::class_group(pos, SymmetrizerKind::Column);
    std::vector<int> col_signs(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) col_signs[k] = permutation_sign(cols[k]);

    for (const std::vector<int>& content : content_compositions(static_cast<int>(np), n_rows)) {
        std::vector<Filling> block = fillings_with_content(np, content);
        if (block.empty()) continue;
        const std::size_t dim = block.size();
        std::map<Filling, int> index;
        for (std::size_t k = 0; k < dim; ++k) index[block[k]] = static_cast<int>(k);

        // unnormalized symmetrizer matrices; scalars do not change the rank
        std::vector<std::vector<Int>> ma(dim, std::vector<Int>(dim, 0));
        std::vector<std::vector<Int>> mb(dim, std::vector<Int>(dim, 0));
        Filling g(np);
        for (std::size_t f = 0; f < dim; ++f) {
            for (const PositionPermutation& p : rows) {
                for (std::size_t k = 0; k < np; ++k) g[k] = block[f][static_cast<std::size_t>(p[k])];
                ma[static_cast<std::size_t>(index[g])][f] += 1;
            }
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                for (std::size_t k = 0; k < np; ++k)
                    g[k] = block[f][static_cast<std::size_t>(cols[ci][k])];
                mb[static_cast<std::size_t>(index[g])][f] += col_signs[ci];
            }
        }

        // v . (alpha beta) = M_beta M_alpha v
        std::vector<std::vector<Int>> prod(dim, std::vector<Int>(dim, 0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                if (mb[i][k] == 0) continue;
                for (std::size_t j = 0; j < dim; ++j)
                    prod[i][j] += mb[i][k] * ma[k][j];
            }

        int rank = detail::rank_bareiss(std::move(prod));
        if (rank > 0)
            character.add_term(Exponents(content.begin(), content.end()), rank);
    }
    return character;
}

} // namespace nwschur
