#pragma once

// Shared generators and independent oracles for the test suite.  Everything
// here is deliberately written from first principles so it can disagree
// with the library when the library is wrong.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nwschur/nwschur.hpp"

namespace testsupport {

using nwschur::Column;
using nwschur::Diagram;
using nwschur::Int;
using nwschur::LaurentPolynomial;
using nwschur::Partition;

inline std::mt19937 make_rng(unsigned seed = 20250809u) { return std::mt19937(seed); }

/// Random northwest diagram: sprinkle squares on a grid, then close under
/// (min row, min column) of every pair.  Empty grid columns are dropped,
/// which preserves the northwest property.
inline Diagram random_northwest(std::mt19937& rng, int max_rows, int max_cols, double density = 0.3) {
    std::uniform_int_distribution<int> rows_dist(1, max_rows);
    std::uniform_int_distribution<int> cols_dist(1, max_cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n_rows = rows_dist(rng);
    const int n_cols = cols_dist(rng);

    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(n_rows),
                                        std::vector<bool>(static_cast<std::size_t>(n_cols), false));
    for (auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) row[c] = coin(rng) < density;

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, int>> squares;
        for (int i = 0; i < n_rows; ++i)
            for (int j = 0; j < n_cols; ++j)
                if (grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) squares.emplace_back(i, j);
        for (std::size_t a = 0; a < squares.size(); ++a)
            for (std::size_t b = a + 1; b < squares.size(); ++b) {
                int i = std::min(squares[a].first, squares[b].first);
                int j = std::min(squares[a].second, squares[b].second);
                if (!grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                    grew = true;
                }
            }
    }

    std::vector<Column> cols;
    for (int j = 0; j < n_cols; ++j) {
        Column c;
        for (int i = 0; i < n_rows; ++i)
            if (grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) c.push_back(i + 1);
        if (!c.empty()) cols.push_back(std::move(c));
    }
    return Diagram(std::move(cols), n_rows);
}

/// Weyl dimension formula for GL(N): prod_{i<j} (l_i - l_j + j - i)/(j - i).
inline Int weyl_dimension(Partition lambda, int n_rows) {
    lambda.resize(static_cast<std::size_t>(n_rows), 0);
    Int num = 1, den = 1;
    for (int i = 0; i < n_rows; ++i)
        for (int j = i + 1; j < n_rows; ++j) {
            num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    return num / den;
}

/// Gaussian binomial [n choose k]_q by the Pascal recursion
/// [n k] = [n-1 k-1] + q^k [n-1 k]; coefficient vector in q.
inline std::vector<Int> gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    std::vector<std::vector<std::vector<Int>>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::vector<Int>>(static_cast<std::size_t>(k) + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= std::min(a, k); ++b) {
            auto& cell = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (b == 0 || b == a) {
                cell = {Int(1)};
                continue;
            }
            cell = table[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1];
            const auto& upper = table[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)];
            cell.resize(std::max(cell.size(), upper.size() + static_cast<std::size_t>(b)), Int(0));
            for (std::size_t d = 0; d < upper.size(); ++d)
                cell[d + static_cast<std::size_t>(b)] += upper[d];
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// The same Gaussian binomial as a polynomial in q^2.
inline LaurentPolynomial gaussian_binomial_q2(int n, int k) {
    LaurentPolynomial p(1);
    std::vector<Int> coeffs = gaussian_binomial(n, k);
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        if (coeffs[d] != 0) p.add_term({static_cast<int>(2 * d)}, coeffs[d]);
    return p;
}

/// Independent tabloid count: filter the full product of per-column subsets
/// by the inclusion condition.  Exponential; small inputs only.
inline long brute_count_tabloids(const Diagram& dhat, int n_rows) {
    const auto& cols = dhat.columns();
    std::vector<std::vector<std::vector<int>>> per_column;
    for (const Column& c : cols) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (pick.size() == c.size()) {
                subsets.push_back(pick);
                return;
            }
            for (int v = start; v <= n_rows; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
        per_column.push_back(std::move(subsets));
    }

    long count = 0;
    std::vector<std::size_t> choice(cols.size(), 0);
    auto assignment_ok = [&]() {
        for (std::size_t a = 0; a < cols.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                if (a == b || !nwschur::is_subset(cols[a], cols[b])) continue;
                const auto& ta = per_column[a][choice[a]];
                const auto& tb = per_column[b][choice[b]];
                if (!std::includes(tb.begin(), tb.end(), ta.begin(), ta.end())) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cols.size()) {
            if (assignment_ok()) ++count;
            return;
        }
        for (std::size_t k = 0; k < per_column[pos].size(); ++k) {
            choice[pos] = k;
            self(self, pos + 1);
        }
    };
    if (cols.empty()) return 1;
    rec(rec, 0);
    return count;
}

/// All partitions of weight <= max_weight with at most max_parts parts and
/// parts bounded by max_part (0 = unbounded).
inline std::vector<Partition> partitions_up_to(int max_weight, int max_parts, int max_part = 0) {
    if (max_part == 0) max_part = max_weight;
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int bound) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(rest, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_part);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Canonical label of a diagram's row-relabeling orbit: the smallest
/// lex-sorted column multiset over all permutations of {1..n_rows}.
inline std::vector<Column> row_orbit_canonical(const Diagram& d) {
    const int n = d.n_rows();
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 1);
    std::vector<Column> best;
    bool first = true;
    do {
        std::vector<Column> cols;
        for (const Column& c : d.columns()) {
            Column nc;
            for (int i : c) nc.push_back(relabel[static_cast<std::size_t>(i) - 1]);
            std::sort(nc.begin(), nc.end());
            cols.push_back(std::move(nc));
        }
        std::sort(cols.begin(), cols.end());
        if (first || cols < best) {
            best = std::move(cols);
            first = false;
        }
    } while (std::next_permutation(relabel.begin(), relabel.end()));
    return best;
}

} // namespace testsupport
