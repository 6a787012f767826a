// Finite-rank unital associative Z-algebras given by structure constants,
// with the standard constructors used in the computations (truncated
// polynomial rings, group rings, cyclic monoid rings, matrix rings, the
// integral quaternions), and the DeltaS action on simple tensors.
//
// Everything is validated at construction: associativity and the unit law are
// checked exhaustively on basis elements, a grading must be compatible with
// the multiplication, an augmentation must be a ring map.

#pragma once

#include "symhom/delta_s.hpp"
#include "symhom/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace symhom::alg {

using Element = std::vector<Int>; // coordinates over the basis

// Grading of the basis by a finite commutative-or-not monoid with an optional
// absorbing zero.  Products of basis elements must land in the predicted
// grade (or vanish, when the predicted grade is the zero element).
struct Grading {
    std::vector<std::string> element_labels;
    int zero_element = -1; // index into element_labels, or -1
    std::vector<int> basis_grade;
    std::vector<std::vector<int>> product;
    bool commutative = false;
};

class AlgebraZ {
public:
    AlgebraZ(int dim, std::vector<std::string> labels, std::vector<std::vector<Element>> sc,
             Element unit, std::optional<Grading> grading = std::nullopt,
             std::optional<Element> augmentation = std::nullopt)
        : dim_(dim), labels_(std::move(labels)), sc_(std::move(sc)), unit_(std::move(unit)),
          grading_(std::move(grading)), augmentation_(std::move(augmentation)) {
        validate();
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Element& unit() const { return unit_; }
    const std::optional<Grading>& grading() const { return grading_; }
    const std::optional<Element>& augmentation() const { return augmentation_; }
    const Element& basis_product(int i, int j) const { return sc_[i][j]; }

    Element zero() const { return Element(dim_); }
    Element basis_element(int i) const {
        Element e(dim_);
        e[i] = 1;
        return e;
    }

    int label_index(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
    }

    Element mul(const Element& x, const Element& y) const {
        Element out(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                const Int c = x[i] * y[j];
                const Element& p = sc_[i][j];
                for (int k = 0; k < dim_; ++k)
                    if (p[k] != 0) out[k] += c * p[k];
            }
        }
        return out;
    }

    Int augment(const Element& x) const {
        if (!augmentation_) throw std::invalid_argument("algebra has no augmentation");
        Int s = 0;
        for (int i = 0; i < dim_; ++i) s += x[i] * (*augmentation_)[i];
        return s;
    }

    // Grade of a product of basis elements, following the grading monoid
    // (with the absorbing zero, when present).
    int grade_product(const std::vector<int>& basis_indices) const {
        const Grading& g = *grading_;
        int acc = -1;
        for (int b : basis_indices) {
            int e = g.basis_grade[b];
            acc = acc < 0 ? e : g.product[acc][e];
        }
        return acc;
    }

private:
    void validate() {
        if (dim_ <= 0) throw std::invalid_argument("algebra dimension must be positive");
        if (static_cast<int>(labels_.size()) != dim_ ||
            static_cast<int>(unit_.size()) != dim_ ||
            static_cast<int>(sc_.size()) != dim_)
            throw std::invalid_argument("algebra tables have inconsistent sizes");
        for (const auto& row : sc_) {
            if (static_cast<int>(row.size()) != dim_)
                throw std::invalid_argument("structure constant table is not dim x dim");
            for (const auto& v : row)
                if (static_cast<int>(v.size()) != dim_)
                    throw std::invalid_argument("structure constant vector has wrong length");
        }

        for (int i = 0; i < dim_; ++i) {
            Element e = basis_element(i);
            if (mul(unit_, e) != e || mul(e, unit_) != e)
                throw std::invalid_argument("unit law fails at basis element " + labels_[i]);
        }

        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Element ij = sc_[i][j];
                for (int k = 0; k < dim_; ++k) {
                    if (mul(ij, basis_element(k)) != mul(basis_element(i), sc_[j][k]))
                        throw std::invalid_argument(
                            "associativity fails at (" + labels_[i] + ", " + labels_[j] + ", " +
                            labels_[k] + ")");
                }
            }

        if (augmentation_) {
            if (static_cast<int>(augmentation_->size()) != dim_)
                throw std::invalid_argument("augmentation vector has wrong length");
            if (augment(unit_) != 1)
                throw std::invalid_argument("augmentation does not send the unit to 1");
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    if (augment(sc_[i][j]) !=
                        augment(basis_element(i)) * augment(basis_element(j)))
                        throw std::invalid_argument("augmentation is not a ring map at (" +
                                                    labels_[i] + ", " + labels_[j] + ")");
        }

        if (grading_) {
            const Grading& g = *grading_;
            const int m = static_cast<int>(g.element_labels.size());
            if (static_cast<int>(g.basis_grade.size()) != dim_)
                throw std::invalid_argument("grading does not label every basis element");
            if (static_cast<int>(g.product.size()) != m)
                throw std::invalid_argument("grading product table has wrong size");
            for (const auto& row : g.product) {
                if (static_cast<int>(row.size()) != m)
                    throw std::invalid_argument("grading product table is not square");
                for (int e : row)
                    if (e < 0 || e >= m)
                        throw std::invalid_argument("grading product table entry out of range");
            }
            bool symmetric = true;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) symmetric &= g.product[a][b] == g.product[b][a];
            if (grading_->commutative && !symmetric)
                throw std::invalid_argument("grading marked commutative but the table is not");
            grading_->commutative = symmetric;
            // monoid associativity
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c)
                        if (g.product[g.product[a][b]][c] != g.product[a][g.product[b][c]])
                            throw std::invalid_argument("grading product table is not associative");
            // compatibility: e_i e_j is supported on the predicted grade
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j) {
                    int e = g.product[g.basis_grade[i]][g.basis_grade[j]];
                    for (int k = 0; k < dim_; ++k) {
                        if (sc_[i][j][k] == 0) continue;
                        if (e == g.zero_element || g.basis_grade[k] != e)
                            throw std::invalid_argument("grading incompatible with product at (" +
                                                        labels_[i] + ", " + labels_[j] + ")");
                    }
                }
        }
    }

    int dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Element>> sc_;
    Element unit_;
    std::optional<Grading> grading_;
    std::optional<Element> augmentation_;
};

// A monomial generator of a tensor power of the algebra.
struct SimpleTensor {
    std::vector<Element> factors;
};

// The symmetric bar construction at the level of elements: factor i of the
// result is the ordered product of the input factors named by block i; an
// empty block contributes the unit.
inline SimpleTensor act(const AlgebraZ& a, const deltas::DeltaSMorphism& f, const SimpleTensor& t) {
    if (static_cast<int>(t.factors.size()) != f.source_rank() + 1)
        throw std::invalid_argument("act: tensor has " + std::to_string(t.factors.size()) +
                                    " factors but the morphism expects " +
                                    std::to_string(f.source_rank() + 1));
    SimpleTensor out;
    out.factors.reserve(f.blocks().size());
    for (const auto& block : f.blocks()) {
        Element prod = a.unit();
        for (int idx : block) prod = a.mul(prod, t.factors[idx]);
        out.factors.push_back(std::move(prod));
    }
    return out;
}

// --- constructors -----------------------------------------------------------

inline AlgebraZ from_structure_constants(int dim, std::vector<std::string> labels,
                                         std::vector<std::vector<Element>> sc, Element unit,
                                         std::optional<Grading> grading = std::nullopt,
                                         std::optional<Element> augmentation = std::nullopt) {
    return AlgebraZ(dim, std::move(labels), std::move(sc), std::move(unit), std::move(grading),
                    std::move(augmentation));
}

inline AlgebraZ integers() {
    return AlgebraZ(1, {"1"}, {{Element{1}}}, Element{1},
                    Grading{{"1"}, -1, {0}, {{0}}, true}, Element{1});
}

namespace detail {

inline std::string variable_name(int v, int nvars) {
    static const char* names[] = {"t", "u", "v", "w"};
    if (nvars <= 4) return names[v];
    return "x" + std::to_string(v + 1);
}

inline std::string monomial_label(const std::vector<int>& exps, int nvars) {
    std::string s;
    for (int v = 0; v < nvars; ++v) {
        if (exps[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(v, nvars);
        if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
    }
    return s.empty() ? "1" : s;
}

} // namespace detail

// Z[t_1,...,t_r]/(t_1^{a_1},...,t_r^{a_r}); basis monomials in lexicographic
// exponent order, graded by the monoid of monomials with an absorbing zero,
// augmented by t_i -> 0.
inline AlgebraZ truncated_polynomial(const std::vector<int>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("truncated_polynomial: no exponents");
    for (int a : exponents)
        if (a < 2) throw std::invalid_argument("truncated_polynomial: exponents must be >= 2");
    const int r = static_cast<int>(exponents.size());
    int dim = 1;
    for (int a : exponents) dim *= a;

    auto tuple_of = [&](int idx) {
        std::vector<int> t(r);
        for (int v = r - 1; v >= 0; --v) {
            t[v] = idx % exponents[v];
            idx /= exponents[v];
        }
        return t;
    };
    auto index_of = [&](const std::vector<int>& t) {
        int idx = 0;
        for (int v = 0; v < r; ++v) idx = idx * exponents[v] + t[v];
        return idx;
    };

    std::vector<std::string> labels(dim);
    for (int i = 0; i < dim; ++i) labels[i] = detail::monomial_label(tuple_of(i), r);

    std::vector<std::vector<Element>> sc(dim, std::vector<Element>(dim));
    Grading g;
    g.element_labels = labels;
    g.element_labels.push_back("0");
    g.zero_element = dim;
    g.basis_grade.resize(dim);
    std::iota(g.basis_grade.begin(), g.basis_grade.end(), 0);
    g.product.assign(dim + 1, std::vector<int>(dim + 1, dim));
    g.commutative = true;

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto a = tuple_of(i), b = tuple_of(j);
            bool vanishes = false;
            for (int v = 0; v < r; ++v) {
                a[v] += b[v];
                if (a[v] >= exponents[v]) vanishes = true;
            }
            sc[i][j] = Element(dim);
            if (!vanishes) {
                sc[i][j][index_of(a)] = 1;
                g.product[i][j] = index_of(a);
            }
        }

    Element unit(dim);
    unit[0] = 1;
    Element aug(dim);
    aug[0] = 1;
    return AlgebraZ(dim, std::move(labels), std::move(sc), std::move(unit), std::move(g),
                    std::move(aug));
}

// Group ring Z[G] from an n x n multiplication table of element indices.  The
// table is checked to be a group (identity, inverses, associativity); the
// grading is the group itself, the augmentation sends every element to 1.
inline AlgebraZ group_ring(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group_ring: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group_ring: table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group_ring: table entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n; ++g) ok &= table[e][g] == g && table[g][e] == g;
        if (ok) identity = e;
    }
    if (identity < 0) throw std::invalid_argument("group_ring: table has no identity");
    for (int g = 0; g < n; ++g) {
        bool inv = false;
        for (int h = 0; h < n; ++h) inv |= table[g][h] == identity && table[h][g] == identity;
        if (!inv)
            throw std::invalid_argument("group_ring: element " + std::to_string(g) +
                                        " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group_ring: table is not associative");

    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = i == identity ? "1" : "g" + std::to_string(i);
    }
    std::vector<std::vector<Element>> sc(n, std::vector<Element>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sc[i][j] = Element(n);
            sc[i][j][table[i][j]] = 1;
        }
    Element unit(n);
    unit[identity] = 1;
    Grading g{labels, -1, {}, table, false};
    g.basis_grade.resize(n);
    std::iota(g.basis_grade.begin(), g.basis_grade.end(), 0);
    Element aug(n, Int(1));
    return AlgebraZ(n, std::move(labels), std::move(sc), std::move(unit), std::move(g),
                    std::move(aug));
}

// The cyclic monoid M^p_q: generated by s with s^p = s^q, basis 1,s,...,s^{p-1}.
inline AlgebraZ cyclic_monoid_ring(int p, int q) {
    if (!(p > q && q >= 0)) throw std::invalid_argument("cyclic_monoid_ring requires p > q >= 0");
    std::vector<std::string> labels(p);
    for (int i = 0; i < p; ++i)
        labels[i] = i == 0 ? "1" : (i == 1 ? "s" : "s^" + std::to_string(i));
    auto reduce = [&](int e) {
        while (e >= p) e -= p - q;
        return e;
    };
    std::vector<std::vector<Element>> sc(p, std::vector<Element>(p));
    std::vector<std::vector<int>> prod(p, std::vector<int>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            prod[i][j] = reduce(i + j);
            sc[i][j] = Element(p);
            sc[i][j][prod[i][j]] = 1;
        }
    Element unit(p);
    unit[0] = 1;
    Grading g{labels, -1, {}, std::move(prod), true};
    g.basis_grade.resize(p);
    std::iota(g.basis_grade.begin(), g.basis_grade.end(), 0);
    Element aug(p, Int(1));
    return AlgebraZ(p, std::move(labels), std::move(sc), std::move(unit), std::move(g),
                    std::move(aug));
}

// M_n(A) with the matrix-unit basis E_{ij} (x) basis(A).  Not graded.
inline AlgebraZ matrix_ring(const AlgebraZ& base, int n) {
    if (n < 1) throw std::invalid_argument("matrix_ring requires n >= 1");
    const int d = base.dim();
    const int dim = n * n * d;
    auto index = [&](int i, int j, int b) { return (i * n + j) * d + b; };

    std::vector<std::string> labels(dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < d; ++b) {
                std::string s = "E" + std::to_string(i + 1) + std::to_string(j + 1);
                if (base.labels()[b] != "1") s += "*" + base.labels()[b];
                labels[index(i, j, b)] = s;
            }

    std::vector<std::vector<Element>> sc(dim, std::vector<Element>(dim, Element(dim)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < d; ++b)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        for (int c = 0; c < d; ++c) {
                            if (j != k) continue;
                            const Element& p = base.basis_product(b, c);
                            Element& out = sc[index(i, j, b)][index(k, l, c)];
                            for (int m = 0; m < d; ++m) out[index(i, l, m)] = p[m];
                        }

    Element unit(dim);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b) unit[index(i, i, b)] = base.unit()[b];
    return AlgebraZ(dim, std::move(labels), std::move(sc), std::move(unit));
}

// The integral quaternions Z[i,j,k] with i^2 = j^2 = k^2 = ijk = -1.
inline AlgebraZ quaternion_algebra() {
    const int dim = 4;
    std::vector<std::string> labels = {"1", "i", "j", "k"};
    // products of the basis quaternions as (sign, index)
    const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<Element>> sc(dim, std::vector<Element>(dim, Element(dim)));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) sc[a][b][idx[a][b]] = sgn[a][b];
    Element unit(dim);
    unit[0] = 1;
    return AlgebraZ(dim, std::move(labels), std::move(sc), std::move(unit));
}

// --- common group tables ----------------------------------------------------

inline std::vector<std::vector<int>> cyclic_group_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::vector<int>> product_group_table(const std::vector<std::vector<int>>& a,
                                                         const std::vector<std::vector<int>>& b) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    t[i * nb + j][k * nb + l] = a[i][k] * nb + b[j][l];
    return t;
}

// Sigma_n on {0,...,n-1}, elements in lexicographic one-line order.
inline std::vector<std::vector<int>> symmetric_group_table(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
            t[i][j] = index[c];
        }
    return t;
}

// Q8 = {1, -1, i, -i, j, -j, k, -k}.
inline std::vector<std::vector<int>> quaternion_group_table() {
    // encode g = (sign, axis) with axis in {1,i,j,k}
    auto enc = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
            int pa = a / 2, pb = b / 2;
            t[a][b] = enc(sa * sb * sgn[pa][pb], idx[pa][pb]);
        }
    return t;
}

inline std::vector<std::string> quaternion_group_labels() {
    return {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
}

// --- algebra spec file ------------------------------------------------------
//
// Line-oriented, versioned.  Omitted sc entries are zero; grading and
// augmentation are optional.  '#' starts a comment.

inline std::string to_spec_string(const AlgebraZ& a) {
    std::ostringstream os;
    os << "symhom-algebra 1\n";
    os << "dim " << a.dim() << "\n";
    os << "labels";
    for (const auto& l : a.labels()) os << ' ' << l;
    os << "\nunit";
    for (const auto& c : a.unit()) os << ' ' << c;
    os << "\n";
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const Element& p = a.basis_product(i, j);
            for (int k = 0; k < a.dim(); ++k)
                if (p[k] != 0) os << "sc " << i << ' ' << j << ' ' << k << ' ' << p[k] << "\n";
        }
    if (a.grading()) {
        const Grading& g = *a.grading();
        os << "grade-elements";
        for (const auto& l : g.element_labels) os << ' ' << l;
        os << "\n";
        if (g.zero_element >= 0) os << "grade-zero " << g.zero_element << "\n";
        os << "grade-basis";
        for (int e : g.basis_grade) os << ' ' << e;
        os << "\n";
        for (std::size_t r = 0; r < g.product.size(); ++r) {
            os << "grade-product " << r;
            for (int e : g.product[r]) os << ' ' << e;
            os << "\n";
        }
    }
    if (a.augmentation()) {
        os << "augmentation";
        for (const auto& c : *a.augmentation()) os << ' ' << c;
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

inline AlgebraZ parse_spec(std::istream& is) {
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        saw_header = line.rfind("symhom-algebra 1", 0) == 0;
        break;
    }
    if (!saw_header)
        throw std::invalid_argument("algebra spec: missing 'symhom-algebra 1' header");

    int dim = -1;
    std::vector<std::string> labels;
    Element unit;
    std::vector<std::vector<Element>> sc;
    std::optional<Grading> grading;
    std::optional<Element> augmentation;
    bool saw_end = false;

    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "end") {
            saw_end = true;
            break;
        }
        if (key == "dim") {
            if (!(ls >> dim) || dim <= 0) throw std::invalid_argument("algebra spec: bad dim");
            sc.assign(dim, std::vector<Element>(dim, Element(dim)));
        } else if (dim < 0) {
            throw std::invalid_argument("algebra spec: 'dim' must come before " + key);
        } else if (key == "labels") {
            std::string l;
            while (ls >> l) labels.push_back(l);
            if (static_cast<int>(labels.size()) != dim)
                throw std::invalid_argument("algebra spec: wrong number of labels");
        } else if (key == "unit") {
            Int c;
            while (ls >> c) unit.push_back(c);
            if (static_cast<int>(unit.size()) != dim)
                throw std::invalid_argument("algebra spec: wrong unit length");
        } else if (key == "sc") {
            int i, j, k;
            Int c;
            if (!(ls >> i >> j >> k >> c))
                throw std::invalid_argument("algebra spec: malformed sc line");
            if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
                throw std::invalid_argument("algebra spec: sc index out of range");
            sc[i][j][k] = c;
        } else if (key == "grade-elements") {
            grading.emplace();
            std::string l;
            while (ls >> l) grading->element_labels.push_back(l);
        } else if (key == "grade-zero") {
            if (!grading) throw std::invalid_argument("algebra spec: grade-zero before grade-elements");
            ls >> grading->zero_element;
        } else if (key == "grade-basis") {
            if (!grading) throw std::invalid_argument("algebra spec: grade-basis before grade-elements");
            int e;
            while (ls >> e) grading->basis_grade.push_back(e);
        } else if (key == "grade-product") {
            if (!grading) throw std::invalid_argument("algebra spec: grade-product before grade-elements");
            std::size_t r;
            if (!(ls >> r)) throw std::invalid_argument("algebra spec: malformed grade-product");
            grading->product.resize(grading->element_labels.size());
            if (r >= grading->product.size())
                throw std::invalid_argument("algebra spec: grade-product row out of range");
            int e;
            while (ls >> e) grading->product[r].push_back(e);
        } else if (key == "augmentation") {
            augmentation.emplace();
            Int c;
            while (ls >> c) augmentation->push_back(c);
        } else {
            throw std::invalid_argument("algebra spec: unknown key '" + key + "'");
        }
    }
    if (!saw_end) throw std::invalid_argument("algebra spec: missing 'end'");
    if (dim < 0) throw std::invalid_argument("algebra spec: missing 'dim'");
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    return AlgebraZ(dim, std::move(labels), std::move(sc), std::move(unit), std::move(grading),
                    std::move(augmentation));
}

inline AlgebraZ parse_spec_string(const std::string& text) {
    std::istringstream is(text);
    return parse_spec(is);
}

} // namespace symhom::alg
