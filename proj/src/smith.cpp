#include <algorithm>
#include <optional>
#include <utility>

#include "mbs/homology.hpp"

namespace mbs {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match its shape");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

namespace {

class Reducer {
public:
    explicit Reducer(IntegerMatrix& m) : m_(m) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_.at(a, c), m_.at(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_.at(r, a), m_.at(r, b));
    }
    // row[target] -= factor * row[source], touching columns >= from
    void row_axpy(std::size_t target, std::size_t source, const BigInt& factor, std::size_t from) {
        for (std::size_t c = from; c < m_.cols(); ++c) m_.at(target, c) -= factor * m_.at(source, c);
    }
    void col_axpy(std::size_t target, std::size_t source, const BigInt& factor, std::size_t from) {
        for (std::size_t r = from; r < m_.rows(); ++r) m_.at(r, target) -= factor * m_.at(r, source);
    }

    // Smallest nonzero |entry| in the trailing block, row t / column t only when `cross_only`.
    std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t, bool cross_only) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs;
        auto consider = [&](std::size_t r, std::size_t c) {
            const auto& v = m_.at(r, c);
            if (v.is_zero()) return;
            BigInt a = abs(v);
            if (!best || a < best_abs) {
                best = {r, c};
                best_abs = std::move(a);
            }
        };
        if (cross_only) {
            for (std::size_t r = t; r < m_.rows(); ++r) consider(r, t);
            for (std::size_t c = t + 1; c < m_.cols(); ++c) consider(t, c);
        } else {
            for (std::size_t r = t; r < m_.rows(); ++r)
                for (std::size_t c = t; c < m_.cols(); ++c) consider(r, c);
        }
        return best;
    }

    bool clear_cross(std::size_t t) {
        bool clean = true;
        const BigInt pivot = m_.at(t, t);
        for (std::size_t r = t + 1; r < m_.rows(); ++r) {
            if (m_.at(r, t).is_zero()) continue;
            BigInt q = m_.at(r, t) / pivot;
            if (!q.is_zero()) row_axpy(r, t, q, t);
            if (!m_.at(r, t).is_zero()) clean = false;
        }
        for (std::size_t c = t + 1; c < m_.cols(); ++c) {
            if (m_.at(t, c).is_zero()) continue;
            BigInt q = m_.at(t, c) / pivot;
            if (!q.is_zero()) col_axpy(c, t, q, t);
            if (!m_.at(t, c).is_zero()) clean = false;
        }
        return clean;
    }

    // Row of the trailing block holding an entry the pivot does not divide.
    std::optional<std::size_t> non_multiple_row(std::size_t t) const {
        const BigInt& pivot = m_.at(t, t);
        for (std::size_t r = t + 1; r < m_.rows(); ++r)
            for (std::size_t c = t + 1; c < m_.cols(); ++c)
                if (BigInt(m_.at(r, c) % pivot) != 0) return r;
        return std::nullopt;
    }

private:
    IntegerMatrix& m_;
};

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
    const std::size_t diag = std::min(m.rows(), m.cols());
    Reducer red(m);
    for (std::size_t t = 0; t < diag; ++t) {
        auto start = red.smallest(t, false);
        if (!start) break;
        red.swap_rows(t, start->first);
        red.swap_cols(t, start->second);
        for (;;) {
            if (!red.clear_cross(t)) {
                // A remainder survived; it is strictly smaller than the pivot.
                auto next = red.smallest(t, true);
                red.swap_rows(t, next->first);
                red.swap_cols(t, next->second);
                continue;
            }
            if (auto r = red.non_multiple_row(t)) {
                red.row_axpy(t, *r, BigInt(-1), t);
                continue;
            }
            break;
        }
    }
    std::vector<BigInt> result(diag);
    for (std::size_t i = 0; i < diag; ++i) result[i] = abs(m.at(i, i));
    return result;
}

}  // namespace mbs
