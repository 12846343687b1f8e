#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"

namespace qa3 {

/// Sparse vector: (column, nonzero scalar) pairs, columns strictly increasing.
using SparseVec = std::vector<std::pair<int, Scalar>>;

inline SparseVec sparse_from_dense(const std::vector<Scalar>& v, const Field& F) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!F.is_zero(v[i])) out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

/// dst += c * src (merge of sorted sparse vectors).
inline void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src, const Field& F) {
    if (F.is_zero(c) || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i >= dst.size() || src[j].first < dst[i].first) {
            Scalar v = F.mul(c, src[j].second);
            if (!F.is_zero(v)) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = F.add(dst[i].second, F.mul(c, src[j].second));
            if (!F.is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

inline void sparse_scale(SparseVec& v, const Scalar& c, const Field& F) {
    for (auto& [col, val] : v) val = F.mul(val, c);
}

/// Row-echelon accumulator with full reduction on demand. Rows are kept monic
/// with strictly increasing pivot columns; insertion reduces against existing
/// pivots only (sufficient for rank and membership), canonicalize() finishes
/// the back-substitution so equal subspaces produce identical rows.
class Echelon {
public:
    explicit Echelon(const Field& F) : F_(&F) {}

    /// Reduces v against the current rows; if a nonzero remainder survives it
    /// becomes a new pivot row. Returns true when the rank grew.
    bool insert(SparseVec v) {
        reduce_only(v);
        if (v.empty()) return false;
        Scalar lead = v.front().second;
        if (!F_->is_one(lead)) sparse_scale(v, F_->inv(lead), *F_);
        int pivot = v.front().first;
        rows_.emplace(pivot, std::move(v));
        canonical_ = false;
        return true;
    }

    /// Remainder of v modulo the row space (no insertion).
    SparseVec residue(SparseVec v) const {
        reduce_only(v);
        return v;
    }

    bool contains(const SparseVec& v) const { return residue(v).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }

    const std::map<int, SparseVec>& rows() const { return rows_; }

    /// Full reduced row-echelon form: eliminates pivot columns from all other
    /// rows. The result is the canonical basis of the row space.
    void canonicalize() {
        if (canonical_) return;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseVec& row = it->second;
            // eliminate later pivots from this row's tail
            SparseVec cleaned;
            cleaned.push_back(row.front());
            SparseVec tail(row.begin() + 1, row.end());
            // repeatedly cancel the first tail entry that is a pivot column
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t k = 0; k < tail.size(); ++k) {
                    auto p = rows_.find(tail[k].first);
                    if (p != rows_.end() && p->first > it->first) {
                        sparse_axpy(tail, F_->neg(tail[k].second), p->second, *F_);
                        changed = true;
                        break;
                    }
                }
            }
            cleaned.insert(cleaned.end(), tail.begin(), tail.end());
            row = std::move(cleaned);
        }
        canonical_ = true;
    }

    std::vector<SparseVec> basis() {
        canonicalize();
        std::vector<SparseVec> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

    std::vector<int> pivots() const {
        std::vector<int> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(p);
        return out;
    }

private:
    void reduce_only(SparseVec& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) {
                // leading column is not a pivot; later entries may still be,
                // but they cannot produce a smaller leading column, so the
                // leading entry is final. Continue cleaning the tail.
                break;
            }
            sparse_axpy(v, F_->neg(v.front().second), it->second, *F_);
        }
        if (v.empty()) return;
        // clean the tail entries that sit on pivot columns
        SparseVec head{v.front()};
        SparseVec tail(v.begin() + 1, v.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t k = 0; k < tail.size(); ++k) {
                auto p = rows_.find(tail[k].first);
                if (p != rows_.end()) {
                    sparse_axpy(tail, F_->neg(tail[k].second), p->second, *F_);
                    changed = true;
                    break;
                }
            }
        }
        head.insert(head.end(), tail.begin(), tail.end());
        v = std::move(head);
    }

    const Field* F_;
    std::map<int, SparseVec> rows_;  // pivot column -> monic row
    bool canonical_ = false;
};

/// Reduced row-echelon basis of the span of the given rows.
inline std::vector<SparseVec> rref(const std::vector<SparseVec>& rows, const Field& F) {
    Echelon e(F);
    for (const SparseVec& r : rows) e.insert(r);
    return e.basis();
}

inline int rank(const std::vector<SparseVec>& rows, const Field& F) {
    Echelon e(F);
    int rk = 0;
    for (const SparseVec& r : rows) rk += e.insert(r) ? 1 : 0;
    return rk;
}

inline bool span_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, const Field& F) {
    return rref(a, F) == rref(b, F);
}

/// Basis of {v : M v = 0} where the matrix is given by rows over `cols`
/// columns. The kernel basis is returned in canonical reduced echelon form.
inline std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int cols, const Field& F) {
    Echelon e(F);
    for (const SparseVec& r : rows) e.insert(r);
    e.canonicalize();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : e.pivots()) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<SparseVec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        SparseVec v;
        for (const auto& [p, row] : e.rows()) {
            auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(f, Scalar{}),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != row.end() && it->first == f) v.emplace_back(p, F.neg(it->second));
        }
        v.emplace_back(f, F.one());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return rref(out, F);
}

}  // namespace qa3
