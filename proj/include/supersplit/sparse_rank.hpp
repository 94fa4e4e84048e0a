#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "supersplit/superpoly.hpp"

namespace supersplit {

using SparseVecQ = std::vector<std::pair<int, Rational>>;  // sorted by column

/// r -= c * p
inline void axpy(SparseVecQ& r, const Rational& c, const SparseVecQ& p) {
    SparseVecQ out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < p.size()) {
        if (r[i].first < p[j].first) {
            out.push_back(std::move(r[i++]));
        } else if (r[i].first > p[j].first) {
            out.emplace_back(p[j].first, -c * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(std::move(r[i]));
    for (; j < p.size(); ++j) out.emplace_back(p[j].first, -c * p[j].second);
    r = std::move(out);
}

/// Exact row-echelon workspace over Q. Rows are fed in one at a time and
/// reduced against the pivots seen so far; short rows first keeps fill low
/// on the near-diagonal matrices produced by Cech complexes.
class SparseEliminatorQ {
public:
    void add_rows(std::vector<SparseVecQ> rows) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const SparseVecQ& a, const SparseVecQ& b) {
                             return a.size() < b.size();
                         });
        for (auto& r : rows) reduce_and_insert(std::move(r));
    }

    void add_row(SparseVecQ row) { reduce_and_insert(std::move(row)); }

    long rank() const { return static_cast<long>(pivots_.size()); }

    /// Kernel basis of the assembled matrix, as sparse column vectors over
    /// 0..ncols-1. Back-substitutes the pivot rows in decreasing pivot
    /// order, after which every pivot row carries only free columns in its
    /// tail.
    std::vector<SparseVecQ> kernel_basis(int ncols) {
        std::vector<int> cols;
        cols.reserve(pivots_.size());
        for (auto& [c, row] : pivots_) cols.push_back(c);
        std::sort(cols.rbegin(), cols.rend());
        for (int c : cols) {
            SparseVecQ& row = pivots_[c];
            Rational lead = row.front().second;
            if (lead != 1)
                for (auto& [cc, v] : row) v /= lead;
            SparseVecQ tail_pivots;
            for (size_t k = 1; k < row.size(); ++k)
                if (pivots_.count(row[k].first))
                    tail_pivots.emplace_back(row[k].first, row[k].second);
            for (const auto& [tc, tv] : tail_pivots) {
                // rows with larger leading column are already reduced
                axpy(row, tv, pivots_.at(tc));
            }
        }
        std::vector<SparseVecQ> basis;
        for (int f = 0; f < ncols; ++f) {
            if (pivots_.count(f)) continue;
            SparseVecQ v;
            for (auto& [c, row] : pivots_) {
                for (const auto& [cc, val] : row) {
                    if (cc == f) {
                        v.emplace_back(c, -val);
                        break;
                    }
                    if (cc > f) break;
                }
            }
            v.emplace_back(f, 1);
            std::sort(v.begin(), v.end());
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void reduce_and_insert(SparseVecQ row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            axpy(row, row.front().second / it->second.front().second, it->second);
        }
        if (!row.empty()) pivots_.emplace(row.front().first, std::move(row));
    }

    std::map<int, SparseVecQ> pivots_;  // leading column -> row
};

inline long sparse_rank(std::vector<SparseVecQ> rows) {
    SparseEliminatorQ e;
    e.add_rows(std::move(rows));
    return e.rank();
}

}  // namespace supersplit
