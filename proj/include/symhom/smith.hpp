// Smith normal form and integral homology of chain complexes.
//
// The sparse eliminator is the workhorse: it diagonalizes by unimodular row
// and column operations, picking pivots that minimize |value| first and then
// the Markowitz fill estimate (row nnz - 1)*(col nnz - 1), with ties broken by
// lowest row then lowest column.  That keeps almost every pivot at +-1 on the
// boundary matrices that show up here, which is what keeps coefficient growth
// in check.  Diagonal entries are normalized into the divisor chain
// d1 | d2 | ... afterwards.
//
// A dense variant tracks the transformation matrices; it is only meant for
// the small systems where explicit homology generators are needed.

#pragma once

#include "symhom/integer.hpp"
#include "symhom/sparse.hpp"

#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

namespace symhom::linalg {

struct SmithResult {
    std::vector<Int> divisors; // d1 | d2 | ..., all positive
    int rank = 0;              // == divisors.size()
};

// Betti rank plus normalized torsion coefficients (each > 1, d1 | d2 | ...).
struct HomologyResult {
    int betti = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

inline std::vector<Int> normalize_divisor_chain(std::vector<Int> d) {
    std::vector<Int> units, rest;
    for (auto& x : d) {
        if (x < 0) x = -x;
        if (x == 1)
            units.push_back(1);
        else
            rest.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            if (rest[j] % rest[i] == 0) continue;
            Int g = gcd(rest[i], rest[j]);
            rest[j] = rest[i] / g * rest[j];
            rest[i] = std::move(g);
        }
    units.insert(units.end(), rest.begin(), rest.end());
    return units;
}

namespace detail {

// Shared sparse elimination state.  Rows are sorted (col, value) vectors; a
// per-column set of supporting rows keeps pivot selection and column sweeps
// cheap.  Rows of eliminated pivots are cleared, so "active" means non-empty.
class Eliminator {
public:
    explicit Eliminator(const SparseIntMatrix& m)
        : nrows_(m.rows()), rows_(m.rows()), col_rows_(m.cols()) {
        for (const auto& e : m.entries()) {
            rows_[e.row].emplace_back(e.col, e.value);
            col_rows_[e.col].insert(e.row);
        }
    }

    // Repeatedly pivot until nothing is left.  In rank_only mode a pivot is
    // retired as soon as its column is clean; otherwise the pivot row is also
    // reduced so the recorded diagonal generates the correct quotient.
    std::vector<Int> run(bool rank_only) {
        std::vector<Int> diagonal;
        int r = 0, c = 0;
        while (find_pivot(r, c)) {
            const Int v = value_at(r, c);
            if (!sweep_column(r, c, v)) continue; // pivot shrank, rescan
            if (rank_only) {
                diagonal.emplace_back(1);
                discard_row(r);
                continue;
            }
            if (!reduce_pivot_row(r, c, v)) continue;
            diagonal.push_back(abs(v));
            discard_row(r);
        }
        return diagonal;
    }

private:
    Int value_at(int row, int col) const {
        const auto& r = rows_[row];
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const std::pair<int, Int>& e, int c) { return e.first < c; });
        return it != r.end() && it->first == col ? it->second : Int(0);
    }

    bool find_pivot(int& pr, int& pc) const {
        bool found = false;
        Int best_val;
        long long best_cost = 0;
        for (int i = 0; i < nrows_; ++i) {
            if (rows_[i].empty()) continue;
            for (const auto& [c, v] : rows_[i]) {
                // common case: a unit pivot is already at hand, so only other
                // units can compete
                if (found && best_val == 1 && v != 1 && v != -1) continue;
                Int av = abs(v);
                if (found && av > best_val) continue;
                long long cost = (static_cast<long long>(rows_[i].size()) - 1) *
                                 (static_cast<long long>(col_rows_[c].size()) - 1);
                if (!found || av < best_val || cost < best_cost) {
                    found = true;
                    best_val = std::move(av);
                    best_cost = cost;
                    pr = i;
                    pc = c;
                }
            }
        }
        return found;
    }

    // rows_[i] -= q * rows_[r]; maintains column support.
    void row_axpy(int i, int r, const Int& q) {
        const auto& pivot = rows_[r];
        std::vector<std::pair<int, Int>> out;
        out.reserve(rows_[i].size() + pivot.size());
        auto a = rows_[i].begin(), ae = rows_[i].end();
        auto b = pivot.begin(), be = pivot.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(std::move(*a));
                ++a;
            } else if (a == ae || b->first < a->first) {
                col_rows_[b->first].insert(i);
                out.emplace_back(b->first, -q * b->second);
                ++b;
            } else {
                Int v = a->second - q * b->second;
                if (v == 0)
                    col_rows_[a->first].erase(i);
                else
                    out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        rows_[i] = std::move(out);
    }

    // Clears column c against pivot (r, c).  Returns true if the column ends
    // up supported at r only; false means a remainder smaller than |v|
    // appeared and the global pivot search should rerun.
    bool sweep_column(int r, int c, const Int& v) {
        std::vector<int> support(col_rows_[c].begin(), col_rows_[c].end());
        bool clean = true;
        for (int i : support) {
            if (i == r) continue;
            Int q = value_at(i, c) / v;
            if (q != 0) row_axpy(i, r, q);
            if (value_at(i, c) != 0) clean = false;
        }
        return clean;
    }

    // Column c is supported at r only, so subtracting multiples of column c
    // from other columns touches row r alone.  Reduce row r mod v that way.
    bool reduce_pivot_row(int r, int c, const Int& v) {
        bool clean = true;
        std::vector<std::pair<int, Int>> kept;
        kept.reserve(rows_[r].size());
        for (auto& [j, a] : rows_[r]) {
            if (j != c) {
                a -= (a / v) * v;
                if (a == 0) {
                    col_rows_[j].erase(r);
                    continue;
                }
                clean = false;
            }
            kept.emplace_back(j, std::move(a));
        }
        rows_[r] = std::move(kept);
        return clean;
    }

    void discard_row(int r) {
        for (const auto& [j, a] : rows_[r]) col_rows_[j].erase(r);
        rows_[r].clear();
    }

    int nrows_;
    std::vector<std::vector<std::pair<int, Int>>> rows_;
    std::vector<std::set<int>> col_rows_;
};

} // namespace detail

inline SmithResult smith(const SparseIntMatrix& m) {
    detail::Eliminator e(m);
    SmithResult res;
    res.divisors = normalize_divisor_chain(e.run(false));
    res.rank = static_cast<int>(res.divisors.size());
    return res;
}

inline int rank_of(const SparseIntMatrix& m) {
    detail::Eliminator e(m);
    return static_cast<int>(e.run(true).size());
}

// H = ker(d_out) / im(d_in) for consecutive differentials of a complex of
// free Z-modules.  ker(d_out) is a saturated sublattice and the ambient
// quotient by it is free, so the torsion of H is exactly the torsion of the
// ambient quotient by im(d_in), i.e. the nontrivial Smith divisors of d_in.
inline HomologyResult homology_at(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_at: cols(d_out) != rows(d_in)");
    SparseIntMatrix prod = d_out * d_in;
    if (!prod.is_zero())
        throw verification_error("homology_at: d_out * d_in != 0 at column " +
                                 std::to_string(prod.entries().front().col));
    SmithResult s_in = smith(d_in);
    HomologyResult h;
    h.betti = d_out.cols() - rank_of(d_out) - s_in.rank;
    for (auto& d : s_in.divisors)
        if (d > 1) h.torsion.push_back(std::move(d));
    return h;
}

inline bool verify_complex(std::span<const SparseIntMatrix> differentials) {
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
        if (differentials[i].cols() != differentials[i + 1].rows())
            throw std::invalid_argument("verify_complex: dimension mismatch at position " +
                                        std::to_string(i));
        if (!(differentials[i] * differentials[i + 1]).is_zero()) return false;
    }
    return true;
}

inline bool verify_complex(const std::vector<SparseIntMatrix>& differentials) {
    return verify_complex(std::span<const SparseIntMatrix>(differentials));
}

// ---------------------------------------------------------------------------
// Dense decomposition with transforms, for explicit generators.

struct DenseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a; // row-major

    DenseIntMatrix() = default;
    DenseIntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static DenseIntMatrix identity(int n) {
        DenseIntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static DenseIntMatrix from_sparse(const SparseIntMatrix& s) {
        DenseIntMatrix m(s.rows(), s.cols());
        for (const auto& e : s.entries()) m(e.row, e.col) = e.value;
        return m;
    }

    friend DenseIntMatrix operator*(const DenseIntMatrix& x, const DenseIntMatrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("dense product: incompatible dimensions");
        DenseIntMatrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const Int& v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j)
                    if (y(k, j) != 0) r(i, j) += v * y(k, j);
            }
        return r;
    }

    std::vector<Int> column(int j) const {
        std::vector<Int> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
};

// f = u * m * v with u, v unimodular; pivots list the only nonzeros of f.
struct SmithDecomposition {
    DenseIntMatrix f, u, u_inv, v;
    std::vector<std::tuple<int, int, Int>> pivots;
};

inline SmithDecomposition smith_decompose(const DenseIntMatrix& m) {
    SmithDecomposition d;
    d.f = m;
    d.u = DenseIntMatrix::identity(m.rows);
    d.u_inv = DenseIntMatrix::identity(m.rows);
    d.v = DenseIntMatrix::identity(m.cols);
    std::vector<char> row_done(m.rows, 0), col_done(m.cols, 0);

    auto row_op = [&](int i, int r, const Int& q) { // row_i -= q * row_r
        for (int j = 0; j < d.f.cols; ++j) d.f(i, j) -= q * d.f(r, j);
        for (int j = 0; j < d.f.rows; ++j) d.u(i, j) -= q * d.u(r, j);
        for (int j = 0; j < d.f.rows; ++j) d.u_inv(j, r) += q * d.u_inv(j, i);
    };
    auto col_op = [&](int j, int c, const Int& q) { // col_j -= q * col_c
        for (int i = 0; i < d.f.rows; ++i) d.f(i, j) -= q * d.f(i, c);
        for (int i = 0; i < d.f.cols; ++i) d.v(i, j) -= q * d.v(i, c);
    };

    while (true) {
        int pr = -1, pc = -1;
        Int best;
        for (int i = 0; i < d.f.rows; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < d.f.cols; ++j) {
                if (col_done[j] || d.f(i, j) == 0) continue;
                Int av = abs(d.f(i, j));
                if (pr < 0 || av < best) {
                    best = std::move(av);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;

        const Int v = d.f(pr, pc);
        bool clean = true;
        for (int i = 0; i < d.f.rows; ++i) {
            if (i == pr || row_done[i] || d.f(i, pc) == 0) continue;
            Int q = d.f(i, pc) / v;
            if (q != 0) row_op(i, pr, q);
            if (d.f(i, pc) != 0) clean = false;
        }
        if (!clean) continue;
        for (int j = 0; j < d.f.cols; ++j) {
            if (j == pc || col_done[j] || d.f(pr, j) == 0) continue;
            Int q = d.f(pr, j) / v;
            if (q != 0) col_op(j, pc, q);
            if (d.f(pr, j) != 0) clean = false;
        }
        if (!clean) continue;

        d.pivots.emplace_back(pr, pc, v);
        row_done[pr] = 1;
        col_done[pc] = 1;
    }
    return d;
}

// Basis of the integer kernel lattice of m (a saturated sublattice, returned
// as columns).
inline DenseIntMatrix kernel_basis(const DenseIntMatrix& m) {
    SmithDecomposition d = smith_decompose(m);
    std::vector<char> pivot_col(m.cols, 0);
    for (const auto& [r, c, v] : d.pivots) pivot_col[c] = 1;
    int k = 0;
    for (int j = 0; j < m.cols; ++j)
        if (!pivot_col[j]) ++k;
    DenseIntMatrix ker(m.cols, k);
    int out = 0;
    for (int j = 0; j < m.cols; ++j) {
        if (pivot_col[j]) continue;
        for (int i = 0; i < m.cols; ++i) ker(i, out) = d.v(i, j);
        ++out;
    }
    return ker;
}

// Solves a * x = b over the integers; returns nothing when no integral
// solution exists.  Reuses a precomputed decomposition of a.
inline std::optional<DenseIntMatrix> solve_integer(const SmithDecomposition& a_dec, int a_cols,
                                                   const DenseIntMatrix& b) {
    const DenseIntMatrix c = a_dec.u * b;
    std::vector<char> pivot_row(c.rows, 0);
    DenseIntMatrix y(a_cols, b.cols);
    for (const auto& [r, cidx, v] : a_dec.pivots) {
        pivot_row[r] = 1;
        for (int j = 0; j < b.cols; ++j) {
            if (c(r, j) % v != 0) return std::nullopt;
            y(cidx, j) = c(r, j) / v;
        }
    }
    for (int i = 0; i < c.rows; ++i) {
        if (pivot_row[i]) continue;
        for (int j = 0; j < b.cols; ++j)
            if (c(i, j) != 0) return std::nullopt;
    }
    return a_dec.v * y;
}

inline std::optional<DenseIntMatrix> solve_integer(const DenseIntMatrix& a, const DenseIntMatrix& b) {
    return solve_integer(smith_decompose(a), a.cols, b);
}

// Presentation of ker(d_out)/im(d_in) with explicit generating cycles, plus
// the reduction of arbitrary cycles to generator coordinates.  Dense; use on
// small complexes only.
class HomologyBasis {
public:
    HomologyBasis(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
        if (d_out.cols() != d_in.rows())
            throw std::invalid_argument("HomologyBasis: cols(d_out) != rows(d_in)");
        if (!(d_out * d_in).is_zero()) throw verification_error("HomologyBasis: not a complex");

        kernel_ = kernel_basis(DenseIntMatrix::from_sparse(d_out));
        kernel_dec_ = smith_decompose(kernel_);
        auto x = solve_integer(kernel_dec_, kernel_.cols, DenseIntMatrix::from_sparse(d_in));
        if (!x) throw verification_error("HomologyBasis: image does not lie in the kernel lattice");

        SmithDecomposition xd = smith_decompose(*x);
        ux_ = xd.u;
        w_ = kernel_ * xd.u_inv;

        std::vector<Int> order(kernel_.cols, Int(0));
        for (const auto& [r, c, v] : xd.pivots) order[r] = abs(v);
        for (int j = 0; j < kernel_.cols; ++j) {
            if (order[j] == 1) continue; // trivial class
            gen_cols_.push_back(j);
            orders_.push_back(order[j]);
        }
    }

    int generator_count() const { return static_cast<int>(gen_cols_.size()); }

    // 0 marks a free factor, otherwise the (finite) order of the class.
    const std::vector<Int>& orders() const { return orders_; }

    std::vector<Int> generator_cycle(int g) const { return w_.column(gen_cols_[g]); }

    HomologyResult structure() const {
        HomologyResult h;
        std::vector<Int> tors;
        for (const auto& d : orders_)
            d == 0 ? void(++h.betti) : tors.push_back(d);
        h.torsion = normalize_divisor_chain(std::move(tors));
        std::erase(h.torsion, Int(1));
        return h;
    }

    // Coordinates of a cycle's class with respect to the generators; torsion
    // coordinates are reduced into [0, order).
    std::vector<Int> class_of(const std::vector<Int>& cycle) const {
        DenseIntMatrix b(kernel_.rows, 1);
        for (int i = 0; i < kernel_.rows; ++i) b(i, 0) = cycle[i];
        auto y = solve_integer(kernel_dec_, kernel_.cols, b);
        if (!y) throw std::invalid_argument("class_of: not a cycle");
        DenseIntMatrix yy = ux_ * *y;
        std::vector<Int> out(gen_cols_.size());
        for (std::size_t t = 0; t < gen_cols_.size(); ++t) {
            Int v = yy(gen_cols_[t], 0);
            if (orders_[t] != 0) {
                v %= orders_[t];
                if (v < 0) v += orders_[t];
            }
            out[t] = std::move(v);
        }
        return out;
    }

private:
    DenseIntMatrix kernel_, w_, ux_;
    SmithDecomposition kernel_dec_;
    std::vector<int> gen_cols_;
    std::vector<Int> orders_;
};

} // namespace symhom::linalg
