#pragma once

#include <map>
#include <optional>
#include <vector>

#include "precy/rational.hpp"

namespace precy {

// Sparse exact linear algebra over Q. Rows are ordered column->value maps.
// Sizes in this engine stay in the low thousands, so straightforward
// fraction-exact Gaussian elimination with sparsity-aware pivoting is enough.
class SparseMat {
public:
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Scalar& v) {
        if (v == 0) data_[r].erase(c);
        else data_[r][c] = v;
    }
    void add(int r, int c, const Scalar& v) {
        if (v == 0) return;
        auto& row = data_[r];
        auto it = row.find(c);
        if (it == row.end()) row[c] = v;
        else {
            it->second += v;
            if (it->second == 0) row.erase(it);
        }
    }
    Scalar get(int r, int c) const {
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Scalar(0) : it->second;
    }
    const std::map<int, Scalar>& row(int r) const { return data_[r]; }

    // Row echelon elimination. Returns pivot (row,col) pairs; the matrix is
    // mutated in place. Pivot rows are chosen shortest-first to limit fill-in.
    std::vector<std::pair<int, int>> eliminate() {
        std::vector<std::pair<int, int>> pivots;
        std::vector<bool> used(rows_, false);
        for (int col = 0; col < cols_; ++col) {
            int best = -1;
            size_t best_len = 0;
            for (int r = 0; r < rows_; ++r) {
                if (used[r]) continue;
                auto it = data_[r].begin();
                if (it == data_[r].end() || it->first != col) continue;
                if (best < 0 || data_[r].size() < best_len) {
                    best = r;
                    best_len = data_[r].size();
                }
            }
            if (best < 0) continue;
            used[best] = true;
            pivots.emplace_back(best, col);
            const Scalar pv = data_[best].at(col);
            // Gauss-Jordan: clear the pivot column everywhere else, including
            // earlier pivot rows, so solutions read off without substitution.
            for (int r = 0; r < rows_; ++r) {
                if (r == best) continue;
                auto it = data_[r].find(col);
                if (it == data_[r].end()) continue;
                Scalar factor = it->second / pv;
                for (const auto& [c2, v2] : data_[best]) add(r, c2, -factor * v2);
            }
        }
        return pivots;
    }

    int rank() const {
        SparseMat tmp = *this;
        return static_cast<int>(tmp.eliminate().size());
    }

    // One exact solution of A x = b with free variables set to zero, or
    // nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        SparseMat aug(rows_, cols_ + 1);
        aug.data_ = data_;
        for (int r = 0; r < rows_; ++r)
            if (b[r] != 0) aug.data_[r][cols_] = b[r];
        auto pivots = aug.eliminate();
        std::vector<Scalar> x(cols_, Scalar(0));
        for (auto& [r, c] : pivots) {
            if (c == cols_) return std::nullopt; // pivot in the rhs column
        }
        // Gauss-Jordan leaves each pivot column only in its own row, so with
        // free variables zeroed each pivot row reads off its variable.
        for (auto& [r, c] : pivots) x[c] = aug.get(r, cols_) / aug.get(r, c);
        // verify (cheap and catches pivot bookkeeping mistakes)
        for (int r = 0; r < rows_; ++r) {
            Scalar acc(0);
            for (const auto& [c, v] : data_[r]) acc += v * x[c];
            if (acc != b[r]) return std::nullopt;
        }
        return x;
    }

    // Basis of the right kernel.
    std::vector<std::vector<Scalar>> nullspace() const {
        SparseMat tmp = *this;
        auto pivots = tmp.eliminate();
        std::vector<int> pivot_col_of_row(rows_, -1);
        std::vector<bool> is_pivot_col(cols_, false);
        for (auto& [r, c] : pivots) {
            pivot_col_of_row[r] = c;
            is_pivot_col[c] = true;
        }
        std::vector<std::vector<Scalar>> basis;
        for (int free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot_col[free_c]) continue;
            std::vector<Scalar> v(cols_, Scalar(0));
            v[free_c] = 1;
            for (auto& [r, c] : pivots) {
                Scalar coef = tmp.get(r, free_c);
                if (coef != 0) v[c] = -coef / tmp.get(r, c);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, Scalar>> data_;
};

} // namespace precy
