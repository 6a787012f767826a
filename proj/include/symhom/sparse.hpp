// Sparse matrices over the integers.
//
// A SparseIntMatrix is immutable once built: construct through a Builder (or
// from_triplets), which accumulates duplicate positions and drops zeros.  The
// entry list is kept sorted row-major, so equal matrices compare equal
// regardless of insertion order.

#pragma once

#include "symhom/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace symhom::linalg {

struct Entry {
    int row = 0;
    int col = 0;
    Int value;

    friend bool operator==(const Entry& a, const Entry& b) {
        return a.row == b.row && a.col == b.col && a.value == b.value;
    }
};

class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    }

    class Builder {
    public:
        Builder(int rows, int cols) : rows_(rows), cols_(cols) {
            if (rows < 0 || cols < 0)
                throw std::invalid_argument("matrix dimensions must be nonnegative");
        }

        void add(int row, int col, Int value) {
            if (value == 0) return;
            if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
                throw std::invalid_argument("entry index out of range");
            entries_.push_back({row, col, std::move(value)});
        }

        SparseIntMatrix build() {
            auto& e = entries_;
            std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
                return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
            std::size_t out = 0;
            for (std::size_t i = 0; i < e.size();) {
                std::size_t j = i;
                Int sum = 0;
                while (j < e.size() && e[j].row == e[i].row && e[j].col == e[i].col)
                    sum += e[j++].value;
                if (sum != 0) e[out++] = {e[i].row, e[i].col, std::move(sum)};
                i = j;
            }
            e.resize(out);
            SparseIntMatrix m(rows_, cols_);
            m.entries_ = std::move(entries_);
            return m;
        }

    private:
        int rows_, cols_;
        std::vector<Entry> entries_;
    };

    static SparseIntMatrix from_triplets(int rows, int cols, const std::vector<Entry>& triplets) {
        Builder b(rows, cols);
        for (const auto& t : triplets) b.add(t.row, t.col, t.value);
        return b.build();
    }

    static SparseIntMatrix zero(int rows, int cols) { return SparseIntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    Int at(int row, int col) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                                   [](const Entry& e, const std::pair<int, int>& p) {
                                       return e.row != p.first ? e.row < p.first : e.col < p.second;
                                   });
        if (it != entries_.end() && it->row == row && it->col == col) return it->value;
        return 0;
    }

    bool is_zero() const { return entries_.empty(); }

    SparseIntMatrix transpose() const {
        Builder b(cols_, rows_);
        for (const auto& e : entries_) b.add(e.col, e.row, e.value);
        return b.build();
    }

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("incompatible dimensions in matrix product");
        // rows of b, indexed for the row-major sweep over a
        std::vector<std::size_t> row_start(b.rows_ + 1, b.entries_.size());
        for (std::size_t i = b.entries_.size(); i-- > 0;) row_start[b.entries_[i].row] = i;
        for (int r = b.rows_; r-- > 0;)
            if (row_start[r] == b.entries_.size() && row_start[r + 1] != b.entries_.size())
                row_start[r] = row_start[r + 1];
        for (int r = b.rows_; r-- > 0;) row_start[r] = std::min(row_start[r], row_start[r + 1]);

        Builder out(a.rows_, b.cols_);
        std::vector<Int> acc(b.cols_, Int(0));
        std::vector<int> touched;
        std::size_t i = 0;
        while (i < a.entries_.size()) {
            int row = a.entries_[i].row;
            touched.clear();
            for (; i < a.entries_.size() && a.entries_[i].row == row; ++i) {
                const Entry& ea = a.entries_[i];
                for (std::size_t j = row_start[ea.col]; j < row_start[ea.col + 1]; ++j) {
                    const Entry& eb = b.entries_[j];
                    if (acc[eb.col] == 0) touched.push_back(eb.col);
                    acc[eb.col] += ea.value * eb.value;
                }
            }
            for (int c : touched) {
                out.add(row, c, std::move(acc[c]));
                acc[c] = 0;
            }
        }
        return out.build();
    }

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    // Coordinate triplet exchange format: "rows cols nnz" header, then one
    // "row col value" line per entry.
    void write_triplets(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
        for (const auto& e : entries_) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
    }

    std::string to_triplet_string() const {
        std::ostringstream os;
        write_triplets(os);
        return os.str();
    }

    static SparseIntMatrix read_triplets(std::istream& is) {
        long long rows = 0, cols = 0, nnz = 0;
        if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("bad triplet header");
        if (rows < 0 || cols < 0 || nnz < 0) throw std::invalid_argument("bad triplet header");
        Builder b(static_cast<int>(rows), static_cast<int>(cols));
        for (long long i = 0; i < nnz; ++i) {
            long long r = 0, c = 0;
            Int v;
            if (!(is >> r >> c >> v)) throw std::invalid_argument("truncated triplet data");
            b.add(static_cast<int>(r), static_cast<int>(c), std::move(v));
        }
        return b.build();
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
};

} // namespace symhom::linalg
