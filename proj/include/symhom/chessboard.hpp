// The augmented cycle-free chessboard complex Omega_n^+ and the chain
// isomorphism omega from its suspension onto Sym_*^{(n-1)}.
//
// Chains are rook placements (row, col) with strictly increasing rows and
// distinct columns, subject to cycle-freeness: the directed graph with one
// edge row -> col per placement has no directed cycle (a diagonal cell is a
// loop).  The empty placement is the (-1)-chain of the augmented complex; in
// the suspension it sits in degree 0, so degree = number of placements
// throughout.
//
// omega sends a placement list, repartitioned into maximal queues
// (l0,l1),(l1,l2),... , to the tensor of queue monomials z_{l0-1}...z_{lt-1}
// followed by singleton factors for untouched board labels.  The signs are
// the permutation sign of the queue reordering times the Sym
// canonicalization sign.

#pragma once

#include "symhom/integer.hpp"
#include "symhom/smith.hpp"
#include "symhom/sym_complex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace symhom::chess {

using linalg::HomologyResult;
using linalg::SparseIntMatrix;

struct Placement {
    int row = 0, col = 0; // 1-based board labels

    friend bool operator==(const Placement&, const Placement&) = default;
    friend auto operator<=>(const Placement&, const Placement&) = default;
};

using PlacementList = std::vector<Placement>; // canonical: rows strictly increasing

// cycle-free <=> the functional graph row -> col is acyclic; out- and
// in-degrees are at most one, so walking forward from any edge decides it
inline bool cycle_free(const PlacementList& l, int n) {
    std::vector<int> next(n + 1, 0);
    for (const auto& p : l) next[p.row] = p.col;
    for (const auto& p : l) {
        int at = p.col;
        int steps = 0;
        while (at != 0 && next[at] != 0 && steps++ <= n) {
            if (at == p.row) return false;
            at = next[at];
        }
        if (at == p.row) return false;
    }
    return true;
}

class ChessComplex {
public:
    explicit ChessComplex(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("ChessComplex: n must be >= 1");
        basis_.resize(n);
        index_.resize(n);
        PlacementList current;
        std::vector<char> col_used(n + 1, 0);
        generate(1, current, col_used);
        for (auto& level : basis_)
            std::sort(level.begin(), level.end());
        for (int k = 0; k < n; ++k)
            for (std::size_t j = 0; j < basis_[k].size(); ++j)
                index_[k].emplace(basis_[k][j], static_cast<int>(j));
    }

    int n() const { return n_; }

    // degree = number of placements; 0 is the empty board (the suspended
    // (-1)-chain), top degree is n-1
    int dimension(int degree) const {
        return degree < 0 || degree >= n_ ? 0 : static_cast<int>(basis_[degree].size());
    }
    const std::vector<PlacementList>& generators(int degree) const { return basis_[degree]; }
    int index_of(int degree, const PlacementList& l) const { return index_[degree].at(l); }

    // omit placement s with sign (-1)^s; 0-placement chains have no boundary,
    // 1-placement chains map to the empty board
    SparseIntMatrix boundary_matrix(int degree) const {
        if (degree < 1 || degree >= n_)
            throw std::invalid_argument("boundary_matrix: need 1 <= degree <= n-1");
        SparseIntMatrix::Builder b(dimension(degree - 1), dimension(degree));
        for (int col = 0; col < dimension(degree); ++col) {
            const PlacementList& l = basis_[degree][col];
            for (std::size_t s = 0; s < l.size(); ++s) {
                PlacementList face;
                face.reserve(l.size() - 1);
                for (std::size_t t = 0; t < l.size(); ++t)
                    if (t != s) face.push_back(l[t]);
                b.add(index_of(degree - 1, face), col, Int(s % 2 ? -1 : 1));
            }
        }
        return b.build();
    }

private:
    void generate(int row, PlacementList& current, std::vector<char>& col_used) {
        basis_[current.size()].push_back(current);
        if (row > n_ || static_cast<int>(current.size()) == n_ - 1) return;
        for (int r = row; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c) {
                if (col_used[c]) continue;
                current.push_back({r, c});
                if (cycle_free(current, n_)) {
                    col_used[c] = 1;
                    generate(r + 1, current, col_used);
                    col_used[c] = 0;
                }
                current.pop_back();
            }
    }

    int n_;
    std::vector<std::vector<PlacementList>> basis_;
    std::vector<std::map<PlacementList, int>> index_;
};

// Homology of the suspended augmented complex, degree by degree.
inline std::vector<HomologyResult> homology(const ChessComplex& c) {
    const int top = c.n() - 1;
    std::vector<SparseIntMatrix> d(top + 2);
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> torsion(top + 2);
    for (int k = 1; k <= top; ++k) {
        linalg::SmithResult s = linalg::smith(c.boundary_matrix(k));
        rank[k] = s.rank;
        for (auto& t : s.divisors)
            if (t > 1) torsion[k].push_back(std::move(t));
    }
    std::vector<HomologyResult> h(top + 1);
    for (int k = 0; k <= top; ++k) {
        h[k].betti = c.dimension(k) - rank[k] - rank[k + 1];
        h[k].torsion = torsion[k + 1];
    }
    return h;
}

// omega applied to one placement list: the signed canonical Sym generator.
struct OmegaImage {
    sym::Factors factors;
    int sign = 1;
};

inline OmegaImage omega_image(int p, const PlacementList& l) {
    const int n = p + 1;
    std::vector<int> next(n + 1, 0), prev(n + 1, 0), placement_at_row(n + 1, -1);
    for (std::size_t s = 0; s < l.size(); ++s) {
        next[l[s].row] = l[s].col;
        prev[l[s].col] = l[s].row;
        placement_at_row[l[s].row] = static_cast<int>(s);
    }

    // maximal queues start at rows that are nobody's column; walk forward
    sym::Factors factors;
    std::vector<int> queue_positions; // original placement positions in queue order
    for (int start = 1; start <= n; ++start) {
        if (next[start] == 0 || prev[start] != 0) continue;
        std::vector<int> monomial{start - 1};
        int at = start;
        while (next[at] != 0) {
            queue_positions.push_back(placement_at_row[at]);
            at = next[at];
            monomial.push_back(at - 1);
        }
        factors.push_back(std::move(monomial));
    }
    for (int label = 1; label <= n; ++label)
        if (next[label] == 0 && prev[label] == 0) factors.push_back({label - 1});

    int inversions = 0;
    for (std::size_t i = 0; i < queue_positions.size(); ++i)
        for (std::size_t j = i + 1; j < queue_positions.size(); ++j)
            if (queue_positions[i] > queue_positions[j]) ++inversions;

    sym::Canonical c = sym::canonicalize(p, std::move(factors));
    return {std::move(c.gen.factors), (inversions % 2 ? -1 : 1) * c.sign};
}

// Degree-wise verification of omega as a bijective chain map.
struct OmegaReport {
    int p = 0;
    bool bijective = false;
    bool chain_map = false;
    std::vector<int> degree_signs;          // global sign applied in each degree
    std::vector<SparseIntMatrix> omega;     // adjusted matrices, Sym_k x SOmega_k
    std::vector<HomologyResult> chess_homology;
    sym::SymHomology sym_homology;
};

namespace detail {

inline std::optional<int> equal_up_to_sign(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.nnz() != b.nnz()) return std::nullopt;
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        const auto& ea = a.entries()[i];
        const auto& eb = b.entries()[i];
        if (ea.row != eb.row || ea.col != eb.col) return std::nullopt;
        plus &= ea.value == eb.value;
        minus &= ea.value == -eb.value;
    }
    if (plus) return 1;
    if (minus) return -1;
    return std::nullopt;
}

} // namespace detail

inline OmegaReport omega_iso(int p) {
    OmegaReport rep;
    rep.p = p;
    sym::SymComplex sc(p);
    ChessComplex cc(p + 1);

    // raw omega matrices
    std::vector<SparseIntMatrix> raw(p + 1);
    bool bij = true;
    for (int k = 0; k <= p; ++k) {
        SparseIntMatrix::Builder b(sc.dimension(k), cc.dimension(k));
        std::vector<char> row_hit(sc.dimension(k), 0);
        for (int col = 0; col < cc.dimension(k); ++col) {
            OmegaImage img = omega_image(p, cc.generators(k)[col]);
            int row = sc.index_of(k, img.factors);
            if (row_hit[row]) bij = false;
            row_hit[row] = 1;
            b.add(row, col, Int(img.sign));
        }
        raw[k] = b.build();
        bij &= sc.dimension(k) == cc.dimension(k);
    }
    rep.bijective = bij;

    // fix per-degree global signs so the chain-map identity holds on the nose
    rep.degree_signs.assign(p + 1, 1);
    rep.chain_map = true;
    for (int k = 1; k <= p; ++k) {
        SparseIntMatrix lhs = sc.boundary_matrix(k) * raw[k];
        SparseIntMatrix rhs = raw[k - 1] * cc.boundary_matrix(k);
        auto s = detail::equal_up_to_sign(lhs, rhs);
        if (!s) {
            rep.chain_map = false;
            break;
        }
        // d.(c_k omega_k) = (c_{k-1} omega_{k-1}).d  requires c_k * s == c_{k-1}
        rep.degree_signs[k] = rep.degree_signs[k - 1] * *s;
    }
    if (rep.chain_map) {
        rep.omega.resize(p + 1);
        for (int k = 0; k <= p; ++k) {
            if (rep.degree_signs[k] == 1) {
                rep.omega[k] = raw[k];
            } else {
                SparseIntMatrix::Builder b(raw[k].rows(), raw[k].cols());
                for (const auto& e : raw[k].entries()) b.add(e.row, e.col, -e.value);
                rep.omega[k] = b.build();
            }
        }
        // recheck on the adjusted matrices
        for (int k = 1; k <= p && rep.chain_map; ++k)
            rep.chain_map = sc.boundary_matrix(k) * rep.omega[k] ==
                            rep.omega[k - 1] * cc.boundary_matrix(k);
    }

    rep.chess_homology = homology(cc);
    rep.sym_homology = sym::homology(sc);
    return rep;
}

} // namespace symhom::chess
