// Symmetric homology in degrees 0 and 1.
//
// HS_0 and HS_1 of a unital associative Z-algebra are the homology of the
// partial complex
//
//     0 <-- A <--d1-- A@A@A <--d2-- (A@A@A@A) (+) A
//
//     d1 : a@b@c     |-> abc - cba
//     d2 : a@b@c@d   |-> ab@c@d + d@ca@b + bca@1@d + d@bc@a
//          a         |-> 1@a@1
//
// obtained by tensoring a partial projective resolution over DeltaS with the
// symmetric bar construction.  Both differentials are matrices of DeltaS
// morphisms acting on simple tensors, and are built exactly that way here.
// All matrices use the lexicographic tensor-power bases (first factor most
// significant), which fixes every column order downstream.
//
// For a commutative monoid grading the complex splits into layers indexed by
// monoid elements; layered homology restricts the columns to tensors whose
// factor grades multiply to the given element.  For algebras where basis
// products can vanish (truncated polynomials), the tensors whose grade
// product is the absorbing zero form one extra direct summand, computed here
// as the layer of the zero label; it is needed for the layer sum to equal the
// unrestricted answer.
//
// The comparison with cyclic homology uses the analogous complex
// A <- A@A <- A@A@A (+) A and the partial chain map gamma; the chain-map
// identities are verified numerically as matrix equations, never assumed.

#pragma once

#include "symhom/algebra.hpp"
#include "symhom/delta_s.hpp"
#include "symhom/smith.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symhom::hs {

using alg::AlgebraZ;
using alg::Element;
using alg::SimpleTensor;
using linalg::HomologyResult;
using linalg::SparseIntMatrix;

namespace detail {

inline int pow_int(int base, int exp) {
    int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline int tuple_index(const std::vector<int>& t, int d) {
    int idx = 0;
    for (int x : t) idx = idx * d + x;
    return idx;
}

// odometer in lexicographic order, last position fastest
inline bool next_tuple(std::vector<int>& t, int d) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < d) return true;
        t[i] = 0;
    }
    return false;
}

// Rows of a simple tensor expanded in the tensor-power basis.
inline void expand_tensor(const AlgebraZ& a, const SimpleTensor& t, const Int& coeff,
                          std::vector<std::pair<int, Int>>& out) {
    const int d = a.dim();
    std::vector<std::pair<int, Int>> acc{{0, coeff}};
    std::vector<std::pair<int, Int>> next;
    for (const Element& f : t.factors) {
        next.clear();
        for (const auto& [idx, c] : acc)
            for (int i = 0; i < d; ++i)
                if (f[i] != 0) next.emplace_back(idx * d + i, c * f[i]);
        acc.swap(next);
        if (acc.empty()) return;
    }
    out.insert(out.end(), acc.begin(), acc.end());
}

} // namespace detail

// Matrix of a formal sum of DeltaS morphisms [n] -> [m] acting on the tensor
// powers: A^(n+1) -> A^(m+1).
inline SparseIntMatrix act_matrix(const AlgebraZ& a,
                                  const std::vector<std::pair<Int, deltas::DeltaSMorphism>>& terms) {
    if (terms.empty()) throw std::invalid_argument("act_matrix: no terms");
    const int n = terms.front().second.source_rank();
    const int m = terms.front().second.target_rank();
    for (const auto& [c, f] : terms)
        if (f.source_rank() != n || f.target_rank() != m)
            throw std::invalid_argument("act_matrix: mixed ranks");
    const int d = a.dim();
    const int cols = detail::pow_int(d, n + 1);
    const int rows = detail::pow_int(d, m + 1);

    SparseIntMatrix::Builder b(rows, cols);
    std::vector<int> tuple(n + 1, 0);
    std::vector<std::pair<int, Int>> entries;
    int col = 0;
    do {
        SimpleTensor t;
        t.factors.reserve(n + 1);
        for (int x : tuple) t.factors.push_back(a.basis_element(x));
        for (const auto& [c, f] : terms) {
            entries.clear();
            detail::expand_tensor(a, alg::act(a, f, t), c, entries);
            for (auto& [row, v] : entries) b.add(row, col, std::move(v));
        }
        ++col;
    } while (detail::next_tuple(tuple, d));
    return b.build();
}

namespace detail {

inline std::vector<std::pair<Int, deltas::DeltaSMorphism>> d1_terms() {
    using deltas::make_morphism;
    return {{1, make_morphism(2, {{0, 1, 2}})}, {-1, make_morphism(2, {{2, 1, 0}})}};
}

// The four [3] -> [2] morphisms of d2 restricted to A@A@A@A.
inline std::vector<std::pair<Int, deltas::DeltaSMorphism>> d2_tensor_terms() {
    using deltas::make_morphism;
    return {{1, make_morphism(3, {{0, 1}, {2}, {3}})},
            {1, make_morphism(3, {{3}, {2, 0}, {1}})},
            {1, make_morphism(3, {{1, 2, 0}, {}, {3}})},
            {1, make_morphism(3, {{3}, {1, 2}, {0}})}};
}

inline std::vector<std::pair<Int, deltas::DeltaSMorphism>> d2_unit_terms() {
    return {{1, deltas::make_morphism(0, {{}, {0}, {}})}}; // a |-> 1@a@1
}

inline SparseIntMatrix hstack(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    SparseIntMatrix::Builder out(a.rows(), a.cols() + b.cols());
    for (const auto& e : a.entries()) out.add(e.row, e.col, e.value);
    for (const auto& e : b.entries()) out.add(e.row, e.col + a.cols(), e.value);
    return out.build();
}

} // namespace detail

// The partial complex A <- A@A@A <- A@A@A@A (+) A.  Column order of
// boundary2: the d^4 tensor columns first, then the d unit-insertion columns.
struct PartialComplex {
    SparseIntMatrix boundary1; // d x d^3
    SparseIntMatrix boundary2; // d^3 x (d^4 + d)
};

inline PartialComplex partial_complex(const AlgebraZ& a) {
    PartialComplex pc;
    pc.boundary1 = act_matrix(a, detail::d1_terms());
    pc.boundary2 =
        detail::hstack(act_matrix(a, detail::d2_tensor_terms()), act_matrix(a, detail::d2_unit_terms()));
    if (!(pc.boundary1 * pc.boundary2).is_zero())
        throw verification_error("partial complex: d1 * d2 != 0");
    return pc;
}

inline HomologyResult hs0(const AlgebraZ& a) {
    PartialComplex pc = partial_complex(a);
    return linalg::homology_at(SparseIntMatrix::zero(0, a.dim()), pc.boundary1);
}

inline HomologyResult hs1(const AlgebraZ& a) {
    PartialComplex pc = partial_complex(a);
    return linalg::homology_at(pc.boundary1, pc.boundary2);
}

inline HomologyResult symmetric_homology(const AlgebraZ& a, int degree) {
    if (degree == 0) return hs0(a);
    if (degree == 1) return hs1(a);
    throw std::invalid_argument("only degrees 0 and 1 are supported");
}

// Independent route to HS_0: A modulo the ideal generated by commutators,
// spanned over Z by the products e_i (e_j e_k - e_k e_j) e_l.
inline HomologyResult hs0_commutator_quotient(const AlgebraZ& a) {
    const int d = a.dim();
    SparseIntMatrix::Builder b(d, d * d * d * d);
    int col = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Element comm = a.mul(a.basis_element(j), a.basis_element(k));
                Element rev = a.mul(a.basis_element(k), a.basis_element(j));
                for (int x = 0; x < d; ++x) comm[x] -= rev[x];
                Element left = a.mul(a.basis_element(i), comm);
                for (int l = 0; l < d; ++l) {
                    Element full = a.mul(left, a.basis_element(l));
                    for (int x = 0; x < d; ++x) b.add(x, col, full[x]);
                    ++col;
                }
            }
    return linalg::homology_at(SparseIntMatrix::zero(0, d), b.build());
}

// --- layered computations ----------------------------------------------------

namespace detail {

inline const alg::Grading& layered_grading(const AlgebraZ& a) {
    if (!a.grading())
        throw std::invalid_argument("layered computation requires a graded algebra");
    const alg::Grading& g = *a.grading();
    if (!g.commutative)
        throw std::invalid_argument("layered computation requires a commutative grading monoid");
    // the unit must be homogeneous of identity grade, else 1@a@1 leaks layers
    int unit_grade = -1;
    for (int i = 0; i < a.dim(); ++i) {
        if (a.unit()[i] == 0) continue;
        if (unit_grade >= 0 && g.basis_grade[i] != unit_grade)
            throw std::invalid_argument("layered computation requires a grade-homogeneous unit");
        unit_grade = g.basis_grade[i];
    }
    for (std::size_t x = 0; x < g.element_labels.size(); ++x)
        if (g.product[unit_grade][x] != static_cast<int>(x))
            throw std::invalid_argument("unit grade is not a monoid identity");
    return g;
}

// tuples of basis indices whose grade product is `element`, in lexicographic
// order; n = number of tensor factors
inline std::vector<std::vector<int>> layer_tuples(const AlgebraZ& a, int n, int element) {
    const alg::Grading& g = *a.grading();
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    do {
        int acc = g.basis_grade[t[0]];
        for (int i = 1; i < n; ++i) acc = g.product[acc][g.basis_grade[t[i]]];
        if (acc == element) out.push_back(t);
    } while (next_tuple(t, a.dim()));
    return out;
}

// Restriction of an act-matrix to layer bases.  Rows of the full image are
// remapped through row_of (full tensor index -> layer row, -1 outside); any
// leak outside the layer is a bug.
inline SparseIntMatrix act_matrix_layer(const AlgebraZ& a,
                                        const std::vector<std::pair<Int, deltas::DeltaSMorphism>>& terms,
                                        const std::vector<std::vector<int>>& col_tuples,
                                        const std::vector<int>& row_of, int n_layer_rows) {
    SparseIntMatrix::Builder b(n_layer_rows, static_cast<int>(col_tuples.size()));
    std::vector<std::pair<int, Int>> entries;
    for (std::size_t col = 0; col < col_tuples.size(); ++col) {
        SimpleTensor t;
        for (int x : col_tuples[col]) t.factors.push_back(a.basis_element(x));
        for (const auto& [c, f] : terms) {
            entries.clear();
            expand_tensor(a, alg::act(a, f, t), c, entries);
            for (auto& [row, v] : entries) {
                if (row_of[row] < 0) throw verification_error("layer restriction leaks");
                b.add(row_of[row], static_cast<int>(col), std::move(v));
            }
        }
    }
    return b.build();
}

} // namespace detail

// The u-restricted complex  (A)_u <- (A@A@A)_u <- (A@A@A@A)_u (+) (A)_u.
struct LayerComplex {
    std::vector<int> basis1;               // basis indices of (A)_u
    std::vector<std::vector<int>> basis3;  // tuples of (A@A@A)_u
    std::vector<std::vector<int>> basis4;
    SparseIntMatrix boundary1, boundary2;
};

inline LayerComplex layer_complex(const AlgebraZ& a, int element) {
    detail::layered_grading(a);
    const alg::Grading& g = *a.grading();
    const int d = a.dim();
    LayerComplex lc;
    for (int i = 0; i < d; ++i)
        if (g.basis_grade[i] == element) lc.basis1.push_back(i);
    lc.basis3 = detail::layer_tuples(a, 3, element);
    lc.basis4 = detail::layer_tuples(a, 4, element);

    std::vector<int> row1(d, -1);
    for (std::size_t r = 0; r < lc.basis1.size(); ++r) row1[lc.basis1[r]] = static_cast<int>(r);
    std::vector<int> row3(detail::pow_int(d, 3), -1);
    for (std::size_t r = 0; r < lc.basis3.size(); ++r)
        row3[detail::tuple_index(lc.basis3[r], d)] = static_cast<int>(r);

    lc.boundary1 = detail::act_matrix_layer(a, detail::d1_terms(), lc.basis3, row1,
                                            static_cast<int>(lc.basis1.size()));
    std::vector<std::vector<int>> unit_cols;
    for (int i : lc.basis1) unit_cols.push_back({i});
    lc.boundary2 = detail::hstack(
        detail::act_matrix_layer(a, detail::d2_tensor_terms(), lc.basis4, row3,
                                 static_cast<int>(lc.basis3.size())),
        detail::act_matrix_layer(a, detail::d2_unit_terms(), unit_cols, row3,
                                 static_cast<int>(lc.basis3.size())));
    if (!(lc.boundary1 * lc.boundary2).is_zero())
        throw verification_error("layer complex: d1 * d2 != 0");
    return lc;
}

// All layer labels in the constructor's monoid order.  Nonzero grades come
// first; when basis products can vanish, the absorbing zero label is appended
// as one extra summand.
inline std::vector<std::string> layer_labels(const AlgebraZ& a) {
    const alg::Grading& g = detail::layered_grading(a);
    std::vector<std::string> out;
    for (std::size_t e = 0; e < g.element_labels.size(); ++e)
        if (static_cast<int>(e) != g.zero_element) out.push_back(g.element_labels[e]);
    if (g.zero_element >= 0) out.push_back(g.element_labels[g.zero_element]);
    return out;
}

inline HomologyResult hs_layered(const AlgebraZ& a, const std::string& u, int degree) {
    const alg::Grading& g = detail::layered_grading(a);
    auto it = std::find(g.element_labels.begin(), g.element_labels.end(), u);
    if (it == g.element_labels.end())
        throw std::invalid_argument("unknown layer label '" + u + "'");
    LayerComplex lc = layer_complex(a, static_cast<int>(it - g.element_labels.begin()));
    if (degree == 0)
        return linalg::homology_at(
            SparseIntMatrix::zero(0, static_cast<int>(lc.basis1.size())), lc.boundary1);
    if (degree == 1) return linalg::homology_at(lc.boundary1, lc.boundary2);
    throw std::invalid_argument("only degrees 0 and 1 are supported");
}

// HS_1(Z[t])_{t^m}: the t^m layer agrees with the s^m layer of the cyclic
// monoid ring Z[M^{m+2}_{m+1}], which is finite-dimensional.
inline HomologyResult hs1_polynomial_layer(int m) {
    if (m < 0) throw std::invalid_argument("hs1_polynomial_layer requires m >= 0");
    AlgebraZ a = alg::cyclic_monoid_ring(m + 2, m + 1);
    return hs_layered(a, a.labels()[m], 1);
}

// --- comparison with cyclic homology ----------------------------------------

// The low-degree cyclic complex A <- A@A <- A@A@A (+) A.
struct CyclicComplex {
    SparseIntMatrix boundary1; // d x d^2:        a@b |-> ab - ba
    SparseIntMatrix boundary2; // d^2 x (d^3+d):  a@b@c |-> ab@c - a@bc + ca@b;  a |-> 1@a - a@1
};

inline CyclicComplex cyclic_partial_complex(const AlgebraZ& a) {
    using deltas::make_morphism;
    CyclicComplex cc;
    cc.boundary1 = act_matrix(a, {{1, make_morphism(1, {{0, 1}})}, {-1, make_morphism(1, {{1, 0}})}});
    cc.boundary2 = detail::hstack(
        act_matrix(a, {{1, make_morphism(2, {{0, 1}, {2}})},
                       {-1, make_morphism(2, {{0}, {1, 2}})},
                       {1, make_morphism(2, {{2, 0}, {1}})}}),
        act_matrix(a, {{1, make_morphism(0, {{}, {0}})}, {-1, make_morphism(0, {{0}, {}})}}));
    if (!(cc.boundary1 * cc.boundary2).is_zero())
        throw verification_error("cyclic complex: d1 * d2 != 0");
    return cc;
}

inline HomologyResult hc1(const AlgebraZ& a) {
    CyclicComplex cc = cyclic_partial_complex(a);
    return linalg::homology_at(cc.boundary1, cc.boundary2);
}

// Report of the map HC_1(A) -> HS_1(A) induced by gamma_1(a@b) = a@b@1.
// Dense generator bookkeeping: intended for small algebras.
class CyclicComparison {
public:
    explicit CyclicComparison(const AlgebraZ& a)
        : sym_(partial_complex(a)), cyc_(cyclic_partial_complex(a)),
          gamma1_(build_gamma1(a)), gamma2_(build_gamma2(a)),
          hc1_(cyc_.boundary1, cyc_.boundary2), hs1_(sym_.boundary1, sym_.boundary2) {
        // gamma_1 sends cycles to cycles: d1S(a@b@1) = ab - ba = d1C(a@b)
        gamma1_chain_map_ = sym_.boundary1 * gamma1_ == cyc_.boundary1;
        // gamma_2 makes the square commute: d2S . gamma2 == gamma1 . d2C;
        // this also certifies gamma1(im d2C) inside im d2S
        gamma2_chain_map_ = sym_.boundary2 * gamma2_ == gamma1_ * cyc_.boundary2;
        if (!gamma1_chain_map_ || !gamma2_chain_map_) return;

        for (int g = 0; g < hc1_.generator_count(); ++g) {
            std::vector<Int> cycle = hc1_.generator_cycle(g);
            induced_.push_back(hs1_.class_of(apply_gamma1(cycle)));
        }
    }

    bool gamma1_chain_map() const { return gamma1_chain_map_; }
    bool gamma2_chain_map() const { return gamma2_chain_map_; }
    const linalg::HomologyBasis& hc1_basis() const { return hc1_; }
    const linalg::HomologyBasis& hs1_basis() const { return hs1_; }

    // image classes of the HC_1 generators, in HS_1 generator coordinates
    const std::vector<std::vector<Int>>& induced_matrix() const { return induced_; }

    std::vector<Int> apply_gamma1(const std::vector<Int>& cycle) const {
        std::vector<Int> out(gamma1_.rows(), Int(0));
        for (const auto& e : gamma1_.entries()) out[e.row] += e.value * cycle[e.col];
        return out;
    }

    // class in HS_1 of gamma_1 applied to a cycle of the cyclic complex
    std::vector<Int> push_cycle(const std::vector<Int>& cycle) const {
        return hs1_.class_of(apply_gamma1(cycle));
    }

    // Isomorphism type of the image subgroup of HS_1: a generating set is the
    // induced matrix; quotient out the relation lattice of the presentation.
    HomologyResult image_structure() const {
        const auto& orders = hs1_.orders();
        const int k = static_cast<int>(orders.size());
        const int m = static_cast<int>(induced_.size());
        std::vector<Int> torsion_relations;
        std::vector<int> torsion_rows;
        for (int i = 0; i < k; ++i)
            if (orders[i] != 0) torsion_rows.push_back(i);
        // x in Z^m is a relation iff G x lies in the relation lattice of HS_1
        linalg::DenseIntMatrix stacked(k, m + static_cast<int>(torsion_rows.size()));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < k; ++i) stacked(i, j) = induced_[j][i];
        for (std::size_t t = 0; t < torsion_rows.size(); ++t)
            stacked(torsion_rows[t], m + static_cast<int>(t)) = orders[torsion_rows[t]];
        linalg::DenseIntMatrix ker = linalg::kernel_basis(stacked);
        linalg::SparseIntMatrix::Builder rel(m, ker.cols);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < ker.cols; ++j) rel.add(i, j, ker(i, j));
        return linalg::homology_at(SparseIntMatrix::zero(0, m), rel.build());
    }

    const PartialComplex& sym_complex() const { return sym_; }
    const CyclicComplex& cyclic_complex() const { return cyc_; }

private:
    static SparseIntMatrix build_gamma1(const AlgebraZ& a) {
        return act_matrix(a, {{1, deltas::make_morphism(1, {{0}, {1}, {}})}});
    }

    static SparseIntMatrix build_gamma2(const AlgebraZ& a) {
        using deltas::make_morphism;
        // on A@A@A:  a@b@c@1 - 1@a@bc@1 + 1@ca@b@1 + 1@1@abc@1 - b@ca@1@1,
        // with A-component -2abc - cab
        SparseIntMatrix top = act_matrix(a, {{1, make_morphism(2, {{0}, {1}, {2}, {}})},
                                             {-1, make_morphism(2, {{}, {0}, {1, 2}, {}})},
                                             {1, make_morphism(2, {{}, {2, 0}, {1}, {}})},
                                             {1, make_morphism(2, {{}, {}, {0, 1, 2}, {}})},
                                             {-1, make_morphism(2, {{1}, {2, 0}, {}, {}})}});
        SparseIntMatrix bottom = act_matrix(a, {{-2, make_morphism(2, {{0, 1, 2}})},
                                                {-1, make_morphism(2, {{2, 0, 1}})}});
        // on A:  -1@1@a@1, with A-component 4a
        SparseIntMatrix top_u = act_matrix(a, {{-1, make_morphism(0, {{}, {}, {0}, {}})}});
        SparseIntMatrix bottom_u = act_matrix(a, {{4, deltas::identity(0)}});

        const int d = a.dim();
        const int d3 = detail::pow_int(d, 3), d4 = detail::pow_int(d, 4);
        SparseIntMatrix::Builder b(d4 + d, d3 + d);
        for (const auto& e : top.entries()) b.add(e.row, e.col, e.value);
        for (const auto& e : bottom.entries()) b.add(d4 + e.row, e.col, e.value);
        for (const auto& e : top_u.entries()) b.add(e.row, d3 + e.col, e.value);
        for (const auto& e : bottom_u.entries()) b.add(d4 + e.row, d3 + e.col, e.value);
        return b.build();
    }

    PartialComplex sym_;
    CyclicComplex cyc_;
    SparseIntMatrix gamma1_, gamma2_;
    linalg::HomologyBasis hc1_, hs1_;
    bool gamma1_chain_map_ = false, gamma2_chain_map_ = false;
    std::vector<std::vector<Int>> induced_;
};

// --- the resolution stages over the morphism bases --------------------------

// Matrices of the partial resolution
//   0 <- k <-eps- k[Mor([n],[0])] <-rho- k[Mor([n],[2])]
//                                <-(alpha,beta)- k[Mor([n],[3])] (+) k[Mor([n],[0])]
// over the enumerated morphism bases:
//   eps(phi)  = 1
//   rho(psi)  = (x0x1x2).psi - (x2x1x0).psi
//   alpha(chi) = (x0x1@x2@x3 + x3@x2x0@x1 + x1x2x0@1@x3 + x3@x1x2@x0).chi
//   beta(phi) = (1@x0@1).phi
struct ResolutionStage {
    std::vector<deltas::DeltaSMorphism> basis0, basis2, basis3;
    SparseIntMatrix epsilon;    // 1 x |Mor([n],[0])|
    SparseIntMatrix rho;        // |Mor([n],[0])| x |Mor([n],[2])|
    SparseIntMatrix alpha_beta; // |Mor([n],[2])| x (|Mor([n],[3])| + |Mor([n],[0])|)
};

inline ResolutionStage resolution_stage_matrices(int n) {
    using deltas::DeltaSMorphism;
    using deltas::make_morphism;
    if (n < 0) throw std::invalid_argument("resolution_stage_matrices requires n >= 0");

    ResolutionStage st;
    st.basis0 = deltas::enumerate(n, 0);
    st.basis2 = deltas::enumerate(n, 2);
    st.basis3 = deltas::enumerate(n, 3);
    std::map<DeltaSMorphism, int> index0, index2;
    for (std::size_t i = 0; i < st.basis0.size(); ++i) index0.emplace(st.basis0[i], i);
    for (std::size_t i = 0; i < st.basis2.size(); ++i) index2.emplace(st.basis2[i], i);

    {
        SparseIntMatrix::Builder b(1, static_cast<int>(st.basis0.size()));
        for (std::size_t j = 0; j < st.basis0.size(); ++j) b.add(0, static_cast<int>(j), 1);
        st.epsilon = b.build();
    }
    {
        const auto fwd = make_morphism(2, {{0, 1, 2}});
        const auto rev = make_morphism(2, {{2, 1, 0}});
        SparseIntMatrix::Builder b(static_cast<int>(st.basis0.size()),
                                   static_cast<int>(st.basis2.size()));
        for (std::size_t j = 0; j < st.basis2.size(); ++j) {
            b.add(index0.at(deltas::compose(fwd, st.basis2[j])), static_cast<int>(j), 1);
            b.add(index0.at(deltas::compose(rev, st.basis2[j])), static_cast<int>(j), -1);
        }
        st.rho = b.build();
    }
    {
        const auto alpha_terms = detail::d2_tensor_terms();
        const auto beta = make_morphism(0, {{}, {0}, {}});
        SparseIntMatrix::Builder b(
            static_cast<int>(st.basis2.size()),
            static_cast<int>(st.basis3.size() + st.basis0.size()));
        for (std::size_t j = 0; j < st.basis3.size(); ++j)
            for (const auto& [c, mu] : alpha_terms)
                b.add(index2.at(deltas::compose(mu, st.basis3[j])), static_cast<int>(j), c);
        for (std::size_t j = 0; j < st.basis0.size(); ++j)
            b.add(index2.at(deltas::compose(beta, st.basis0[j])),
                  static_cast<int>(st.basis3.size() + j), 1);
        st.alpha_beta = b.build();
    }
    return st;
}

// Exactness of the resolution stages at the two middle spots, by rank
// arithmetic plus vanishing torsion.
struct ResolutionCheck {
    bool products_zero = false;
    HomologyResult at_mor0, at_mor2;
    bool exact() const { return products_zero && at_mor0.is_zero() && at_mor2.is_zero(); }
};

inline ResolutionCheck check_resolution_stage(const ResolutionStage& st) {
    ResolutionCheck c;
    c.products_zero = (st.epsilon * st.rho).is_zero() && (st.rho * st.alpha_beta).is_zero();
    if (!c.products_zero) return c;
    c.at_mor0 = linalg::homology_at(st.epsilon, st.rho);
    c.at_mor2 = linalg::homology_at(st.rho, st.alpha_beta);
    return c;
}

} // namespace symhom::hs
