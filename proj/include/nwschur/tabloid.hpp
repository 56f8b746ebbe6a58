#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nwschur/diagram.hpp"
#include "nwschur/errors.hpp"

namespace nwschur {

/// Assignment of a row subset t(C) to each distinct column of a blowup,
/// compatible with column inclusions.  entries[k] is parallel to the
/// blowup's column list and stored strictly increasing.
struct Tabloid {
    std::vector<std::vector<int>> entries;

    bool operator==(const Tabloid& other) const = default;
};

namespace detail {

// All k-subsets of universe \ forced that together with forced give a
// k+|forced| set, emitted in lexicographic order of the merged set.
inline void extend_subsets(const std::vector<int>& forced, const std::vector<int>& free_pool,
                           std::size_t take, std::vector<std::vector<int>>& out) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == take) {
            std::vector<int> merged(forced);
            merged.insert(merged.end(), pick.begin(), pick.end());
            std::sort(merged.begin(), merged.end());
            out.push_back(std::move(merged));
            return;
        }
        for (std::size_t k = start; k < free_pool.size(); ++k) {
            pick.push_back(free_pool[k]);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// All standard column tabloids of the blowup's distinct columns with
/// entries in {1..N}.  Columns are filled smallest-first, so only subset
/// constraints need checking; the returned list is sorted by the entry
/// tuples in blowup column order.  If some column is larger than N there is
/// no valid filling and the list is empty.
inline std::vector<Tabloid> enumerate_tabloids(const Diagram& dhat, int n_rows) {
    const auto& cols = dhat.columns();
    const std::size_t m = cols.size();

    std::vector<Tabloid> result;
    if (m == 0) {
        result.push_back(Tabloid{});
        return result;
    }
    for (const Column& c : cols)
        if (static_cast<int>(c.size()) > n_rows) return result;

    // process columns in inclusion-respecting order: size, then lex
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cols[a].size() != cols[b].size()) return cols[a].size() < cols[b].size();
        return cols[a] < cols[b];
    });

    // subset relations among columns, restricted to earlier-processed ones
    std::vector<std::vector<std::size_t>> contained(m);
    for (std::size_t pos = 0; pos < m; ++pos)
        for (std::size_t prev = 0; prev < pos; ++prev)
            if (is_subset(cols[order[prev]], cols[order[pos]]))
                contained[pos].push_back(order[prev]);

    Tabloid partial;
    partial.entries.assign(m, {});
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == m) {
            result.push_back(partial);
            return;
        }
        const std::size_t col = order[pos];
        std::vector<int> forced;
        for (std::size_t sub : contained[pos])
            for (int v : partial.entries[sub])
                if (!std::binary_search(forced.begin(), forced.end(), v)) {
                    forced.insert(std::upper_bound(forced.begin(), forced.end(), v), v);
                }
        if (forced.size() > cols[col].size()) return;

        std::vector<int> pool;
        for (int v = 1; v <= n_rows; ++v)
            if (!std::binary_search(forced.begin(), forced.end(), v)) pool.push_back(v);

        std::vector<std::vector<int>> choices;
        detail::extend_subsets(forced, pool, cols[col].size() - forced.size(), choices);
        for (auto& choice : choices) {
            partial.entries[col] = std::move(choice);
            self(self, pos + 1);
        }
        partial.entries[col].clear();
    };
    rec(rec, 0);

    std::sort(result.begin(), result.end(),
              [](const Tabloid& a, const Tabloid& b) { return a.entries < b.entries; });
    return result;
}

/// Weight vector, tangent exponent matrix and affine cell dimension of one
/// fixed point.
struct FixedPointData {
    std::vector<long> weight;        // length N
    std::vector<std::vector<int>> d; // N x N, zero diagonal
    long d_plus = 0;
};

/// wt_i counts occurrences of i weighted by column multiplicity (phantom
/// columns contribute nothing).  d_ij counts connected components of the
/// inclusion graph on columns whose filling contains i but not j.
inline FixedPointData fixed_point_data(const Tabloid& t, const Blowup& bh, int n_rows) {
    const auto& cols = bh.diagram.columns();
    const std::size_t m = cols.size();
    if (t.entries.size() != m)
        throw PreconditionError("tabloid does not match the blowup's column list");
    for (std::size_t k = 0; k < m; ++k) {
        if (t.entries[k].size() != cols[k].size())
            throw PreconditionError("tabloid entry size does not match its column");
        for (std::size_t a = 1; a < t.entries[k].size(); ++a)
            if (t.entries[k][a] <= t.entries[k][a - 1])
                throw PreconditionError("tabloid entries must be strictly increasing");
        if (!t.entries[k].empty() && (t.entries[k].front() < 1 || t.entries[k].back() > n_rows))
            throw PreconditionError("tabloid entry out of range");
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && is_subset(cols[a], cols[b]) &&
                !std::includes(t.entries[b].begin(), t.entries[b].end(),
                               t.entries[a].begin(), t.entries[a].end()))
                throw PreconditionError("tabloid violates a column inclusion");

    FixedPointData fp;
    fp.weight.assign(static_cast<std::size_t>(n_rows), 0);
    for (std::size_t k = 0; k < m; ++k)
        for (int v : t.entries[k])
            fp.weight[static_cast<std::size_t>(v) - 1] += bh.multiplicity[k];

    fp.d.assign(static_cast<std::size_t>(n_rows), std::vector<int>(static_cast<std::size_t>(n_rows), 0));
    std::vector<std::size_t> verts;
    std::vector<std::size_t> comp;
    for (int i = 1; i <= n_rows; ++i) {
        for (int j = 1; j <= n_rows; ++j) {
            if (i == j) continue;
            verts.clear();
            for (std::size_t k = 0; k < m; ++k) {
                const auto& e = t.entries[k];
                bool has_i = std::binary_search(e.begin(), e.end(), i);
                bool has_j = std::binary_search(e.begin(), e.end(), j);
                if (has_i && !has_j) verts.push_back(k);
            }
            // union-find over inclusion edges
            comp.assign(verts.size(), 0);
            std::iota(comp.begin(), comp.end(), 0);
            auto find = [&](std::size_t x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    if (is_subset(cols[verts[a]], cols[verts[b]]) ||
                        is_subset(cols[verts[b]], cols[verts[a]]))
                        comp[find(a)] = find(b);
            int components = 0;
            for (std::size_t a = 0; a < verts.size(); ++a)
                if (find(a) == a) ++components;
            fp.d[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = components;
        }
    }

    for (int i = 1; i <= n_rows; ++i)
        for (int j = i + 1; j <= n_rows; ++j)
            fp.d_plus += fp.d[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
    return fp;
}

} // namespace nwschur
