// The chain complex Sym_*^{(p)}.
//
// Generators of Sym_i^{(p)} are epimorphisms [p] ->> [p-i] in tensor
// notation, i.e. tuples of nonempty monomials in z_0..z_p using every index
// exactly once, taken modulo the graded sign rule for swapping adjacent
// factors ((-1)^{ab} with a, b the factor degrees; deg = length - 1).  The
// canonical representative sorts factors by least contained index; the sign
// picked up is the parity of the induced permutation of odd-degree factors.
//
// The boundary splits one factor at one internal cut point; cut points are
// numbered globally across factors (each factor of degree s owns s of them)
// and contribute alternating signs, so d = sum_j (-1)^j d_j with exactly
// `degree` faces.

#pragma once

#include "symhom/integer.hpp"
#include "symhom/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace symhom::sym {

using linalg::HomologyResult;
using linalg::SparseIntMatrix;

using Factors = std::vector<std::vector<int>>;

struct SymGenerator {
    int p = 0;
    Factors factors;

    int degree() const { return p + 1 - static_cast<int>(factors.size()); }

    // factor lengths as a partition of p+1, non-increasing
    std::vector<int> partition_type() const {
        std::vector<int> t(factors.size());
        std::transform(factors.begin(), factors.end(), t.begin(),
                       [](const auto& f) { return static_cast<int>(f.size()); });
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    friend bool operator==(const SymGenerator&, const SymGenerator&) = default;
    friend auto operator<=>(const SymGenerator& a, const SymGenerator& b) {
        if (auto c = a.p <=> b.p; c != 0) return c;
        return a.factors <=> b.factors;
    }
};

struct Canonical {
    SymGenerator gen;
    int sign = 1;
};

// Sorts factors by least contained index; the sign is the parity of the
// permutation effected on the odd-degree (even-length) factors.
inline Canonical canonicalize(int p, Factors raw) {
    std::vector<char> seen(p + 1, 0);
    for (const auto& f : raw) {
        if (f.empty()) throw std::invalid_argument("canonicalize: empty factor");
        for (int idx : f) {
            if (idx < 0 || idx > p)
                throw std::invalid_argument("canonicalize: index out of range");
            if (seen[idx]) throw std::invalid_argument("canonicalize: duplicate index");
            seen[idx] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("canonicalize: indices must cover 0..p");

    const int k = static_cast<int>(raw.size());
    std::vector<int> key(k), order(k);
    for (int i = 0; i < k; ++i) key[i] = *std::min_element(raw[i].begin(), raw[i].end());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

    // original positions of odd-degree factors, read in output order
    std::vector<int> odd_seq;
    for (int pos : order)
        if (raw[pos].size() % 2 == 0) odd_seq.push_back(pos);
    int inversions = 0;
    for (std::size_t i = 0; i < odd_seq.size(); ++i)
        for (std::size_t j = i + 1; j < odd_seq.size(); ++j)
            if (odd_seq[i] > odd_seq[j]) ++inversions;

    Canonical c;
    c.gen.p = p;
    c.gen.factors.reserve(k);
    for (int pos : order) c.gen.factors.push_back(std::move(raw[pos]));
    c.sign = inversions % 2 ? -1 : 1;
    return c;
}

// rank of Sym_i^{(p)}: partitions of p+1 indices into p+1-i nonempty ordered
// sequences with an unordered collection of sequences (a Lah count)
inline Int lah_dimension(int p, int i) {
    if (i < 0 || i > p) return 0;
    const int k = p + 1 - i; // number of factors
    Int binom = 1;
    for (int j = 1; j <= k - 1; ++j) binom = binom * (p - j + 1) / j; // C(p, k-1)
    return binom * factorial(p + 1) / factorial(k);
}

namespace detail {

inline void enumerate_rec(std::vector<int>& avail, int factors_left, Factors& current,
                          std::vector<SymGenerator>& out, int p) {
    if (factors_left == 0) {
        if (avail.empty()) {
            out.push_back({p, current});
        }
        return;
    }
    const int n = static_cast<int>(avail.size());
    if (n < factors_left) return;
    const int first = avail[0];
    std::vector<int> rest(avail.begin() + 1, avail.end());

    const int max_extra = n - factors_left; // room left for this factor beyond `first`
    for (int extra = 0; extra <= max_extra; ++extra) {
        // subsets of `rest` of size `extra`, lexicographic
        std::vector<int> pick(extra);
        auto choose = [&](auto&& self, int start, int depth) -> void {
            if (depth == extra) {
                std::vector<int> members;
                members.push_back(first);
                for (int t : pick) members.push_back(rest[t]);
                std::sort(members.begin(), members.end());
                std::vector<int> remaining;
                for (int x : avail) {
                    if (!std::binary_search(members.begin(), members.end(), x))
                        remaining.push_back(x);
                }
                std::vector<int> perm = members;
                do {
                    current.push_back(perm);
                    enumerate_rec(remaining, factors_left - 1, current, out, p);
                    current.pop_back();
                } while (std::next_permutation(perm.begin(), perm.end()));
                return;
            }
            for (int s = start; s < static_cast<int>(rest.size()); ++s) {
                pick[depth] = s;
                self(self, s + 1, depth + 1);
            }
        };
        choose(choose, 0, 0);
    }
}

} // namespace detail

// All canonical generators of Sym_i^{(p)}, deterministic order.
inline std::vector<SymGenerator> enumerate_generators(int p, int i) {
    if (p < 0 || i < 0 || i > p) throw std::invalid_argument("enumerate_generators: bad (p, i)");
    std::vector<SymGenerator> out;
    std::vector<int> avail(p + 1);
    std::iota(avail.begin(), avail.end(), 0);
    Factors current;
    detail::enumerate_rec(avail, p + 1 - i, current, out, p);
    return out;
}

// A formal integer combination of canonical generators of fixed (p, degree).
class SymChain {
public:
    SymChain(int p, int degree) : p_(p), degree_(degree) {}

    int p() const { return p_; }
    int degree() const { return degree_; }
    const std::map<Factors, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // canonicalizes and accumulates; dropping to zero removes the term
    void add_raw(Factors raw, const Int& coeff) {
        if (coeff == 0) return;
        Canonical c = canonicalize(p_, std::move(raw));
        if (c.gen.degree() != degree_)
            throw std::invalid_argument("SymChain: wrong degree term");
        auto it = terms_.find(c.gen.factors);
        if (it == terms_.end()) {
            terms_.emplace(std::move(c.gen.factors), coeff * c.sign);
        } else {
            it->second += coeff * c.sign;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend SymChain operator+(SymChain a, const SymChain& b) {
        if (a.p_ != b.p_ || a.degree_ != b.degree_)
            throw std::invalid_argument("SymChain: mismatched chains");
        for (const auto& [f, c] : b.terms_) a.add_raw(f, c);
        return a;
    }

    friend SymChain operator*(const Int& c, SymChain a) {
        if (c == 0) return SymChain(a.p_, a.degree_);
        for (auto& [f, v] : a.terms_) v *= c;
        return a;
    }

    friend bool operator==(const SymChain&, const SymChain&) = default;

private:
    int p_, degree_;
    std::map<Factors, Int> terms_;
};

namespace detail {

// Faces of one generator: split factor k at cut position c, global face index
// offset_k + c, alternating sign.
template <typename F>
void for_each_face(const Factors& factors, F&& fn) {
    int offset = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        const int deg = static_cast<int>(f.size()) - 1;
        for (int cut = 0; cut < deg; ++cut) {
            Factors split;
            split.reserve(factors.size() + 1);
            for (std::size_t l = 0; l < k; ++l) split.push_back(factors[l]);
            split.emplace_back(f.begin(), f.begin() + cut + 1);
            split.emplace_back(f.begin() + cut + 1, f.end());
            for (std::size_t l = k + 1; l < factors.size(); ++l) split.push_back(factors[l]);
            fn(std::move(split), (offset + cut) % 2 ? -1 : 1);
        }
        offset += deg;
    }
}

} // namespace detail

// Permutation action: relabel every index through perm, recanonicalize.
inline SymChain sigma_action(const std::vector<int>& perm, const SymChain& c) {
    if (static_cast<int>(perm.size()) != c.p() + 1)
        throw std::invalid_argument("sigma_action: permutation size mismatch");
    SymChain out(c.p(), c.degree());
    for (const auto& [factors, coeff] : c.terms()) {
        Factors relabeled = factors;
        for (auto& f : relabeled)
            for (int& idx : f) idx = perm[idx];
        out.add_raw(std::move(relabeled), coeff);
    }
    return out;
}

// Boundary of a chain, term by term; no basis enumeration required.
inline SymChain boundary(const SymChain& c) {
    if (c.degree() < 1) throw std::invalid_argument("boundary: chain of degree 0");
    SymChain out(c.p(), c.degree() - 1);
    for (const auto& [factors, coeff] : c.terms())
        detail::for_each_face(factors,
                              [&](Factors split, int sign) { out.add_raw(std::move(split), coeff * sign); });
    return out;
}

// b_p = sum_j (-1)^{jp} tau_p^j(z_0 z_1 ... z_p), a cycle generating the
// alternating representation of C_{p+1} in top degree.
inline SymChain b_generator(int p) {
    std::vector<int> tau(p + 1);
    tau[0] = p;
    for (int i = 1; i <= p; ++i) tau[i] = i - 1;

    SymChain out(p, p);
    std::vector<int> word(p + 1);
    std::iota(word.begin(), word.end(), 0);
    Int sign = 1;
    for (int j = 0; j <= p; ++j) {
        out.add_raw({word}, sign);
        for (int& idx : word) idx = tau[idx];
        if (p % 2) sign = -sign;
    }
    return out;
}

// The standard element of partition type lambda: indices in numerical order,
// factor sizes non-increasing.
inline SymChain standard_element(int p, std::vector<int> lambda) {
    std::sort(lambda.rbegin(), lambda.rend());
    int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (total != p + 1 || lambda.empty() || lambda.back() <= 0)
        throw std::invalid_argument("standard_element: not a partition of p+1");
    Factors factors;
    int next = 0;
    for (int part : lambda) {
        std::vector<int> f(part);
        std::iota(f.begin(), f.end(), next);
        next += part;
        factors.push_back(std::move(f));
    }
    SymChain out(p, p + 1 - static_cast<int>(lambda.size()));
    out.add_raw(std::move(factors), 1);
    return out;
}

enum class RepKind { alternating, trivial };

// V = sum_sigma sign(sigma) sigma(W)  or  U = sum_sigma sigma(W) for the
// standard W of type lambda.  Vanishes exactly when lambda has a repeated
// component (alternating) resp. a repeated even component (trivial).
inline SymChain rep_generator(int p, const std::vector<int>& lambda, RepKind kind) {
    SymChain w = standard_element(p, lambda);
    SymChain out(p, w.degree());
    std::vector<int> perm(p + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        if (kind == RepKind::alternating) {
            int inv = 0;
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    if (perm[i] > perm[j]) ++inv;
            sign = inv % 2 ? -1 : 1;
        }
        for (const auto& [factors, coeff] : w.terms()) {
            Factors relabeled = factors;
            for (auto& f : relabeled)
                for (int& idx : f) idx = perm[idx];
            out.add_raw(std::move(relabeled), coeff * sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// W (x) V with V's indices shifted past W's; lands in Sym_{i+j}^{(p+q+1)}.
inline SymChain boxtimes(const SymChain& w, const SymChain& v) {
    const int p = w.p(), q = v.p();
    SymChain out(p + q + 1, w.degree() + v.degree());
    for (const auto& [wf, wc] : w.terms())
        for (const auto& [vf, vc] : v.terms()) {
            Factors joined = wf;
            for (const auto& f : vf) {
                std::vector<int> shifted(f);
                for (int& idx : shifted) idx += p + 1;
                joined.push_back(std::move(shifted));
            }
            out.add_raw(std::move(joined), wc * vc);
        }
    return out;
}

// Bases and boundary matrices of Sym_*^{(p)}, built once per degree.
class SymComplex {
public:
    explicit SymComplex(int p) : p_(p) {
        if (p < 0) throw std::invalid_argument("SymComplex: p must be >= 0");
        basis_.resize(p + 1);
        index_.resize(p + 1);
        for (int i = 0; i <= p; ++i) {
            basis_[i] = enumerate_generators(p, i);
            for (std::size_t j = 0; j < basis_[i].size(); ++j)
                index_[i].emplace(basis_[i][j].factors, static_cast<int>(j));
        }
    }

    int p() const { return p_; }
    int dimension(int i) const {
        return i < 0 || i > p_ ? 0 : static_cast<int>(basis_[i].size());
    }
    const std::vector<SymGenerator>& generators(int i) const { return basis_[i]; }

    int index_of(int i, const Factors& canonical) const {
        auto it = index_[i].find(canonical);
        if (it == index_[i].end()) throw std::invalid_argument("index_of: not a basis element");
        return it->second;
    }

    // d : Sym_i -> Sym_{i-1}; face j splits one factor at one cut point, with
    // the global alternating sign and the canonicalization sign folded in
    SparseIntMatrix boundary_matrix(int i) const {
        if (i < 1 || i > p_) throw std::invalid_argument("boundary_matrix: need 1 <= i <= p");
        SparseIntMatrix::Builder b(dimension(i - 1), dimension(i));
        for (int col = 0; col < dimension(i); ++col) {
            detail::for_each_face(basis_[i][col].factors, [&](Factors split, int face_sign) {
                Canonical c = canonicalize(p_, std::move(split));
                b.add(index_of(i - 1, c.gen.factors), col, Int(face_sign * c.sign));
            });
        }
        return b.build();
    }

    std::vector<Int> chain_vector(const SymChain& c) const {
        std::vector<Int> v(dimension(c.degree()), Int(0));
        for (const auto& [f, coeff] : c.terms()) v[index_of(c.degree(), f)] = coeff;
        return v;
    }

private:
    int p_;
    std::vector<std::vector<SymGenerator>> basis_;
    std::vector<std::map<Factors, int>> index_;
};

struct SymHomology {
    std::vector<HomologyResult> by_degree; // indexed 0..p
    std::vector<Int> poincare;             // poincare[i] = betti_i
    bool torsion_free = true;
};

// Integral homology in every degree.  Torsion is computed honestly and
// reported; callers that rely on freeness must check `torsion_free`.
inline SymHomology homology(const SymComplex& c) {
    const int p = c.p();
    std::vector<SparseIntMatrix> d(p + 2); // d[i] : Sym_i -> Sym_{i-1}
    for (int i = 1; i <= p; ++i) d[i] = c.boundary_matrix(i);

    std::vector<int> rank(p + 2, 0);
    std::vector<std::vector<Int>> torsion(p + 2);
    for (int i = 1; i <= p; ++i) {
        linalg::SmithResult s = linalg::smith(d[i]);
        rank[i] = s.rank;
        for (auto& t : s.divisors)
            if (t > 1) torsion[i].push_back(std::move(t));
    }

    SymHomology h;
    h.by_degree.resize(p + 1);
    h.poincare.resize(p + 1);
    for (int i = 0; i <= p; ++i) {
        h.by_degree[i].betti = c.dimension(i) - rank[i] - rank[i + 1];
        h.by_degree[i].torsion = torsion[i + 1];
        h.poincare[i] = h.by_degree[i].betti;
        if (!h.by_degree[i].torsion.empty()) h.torsion_free = false;
    }
    return h;
}

inline SymHomology homology(int p) { return homology(SymComplex(p)); }

// Homological shadow of the connectivity theorem: H_i = 0 for all
// 0 <= i <= floor(2(p-1)/3).
inline bool connectivity_check(const SymHomology& h, int p) {
    const int bound = 2 * (p - 1) >= 0 ? (2 * (p - 1)) / 3 : -1;
    for (int i = 0; i <= bound && i < static_cast<int>(h.by_degree.size()); ++i)
        if (!h.by_degree[i].is_zero()) return false;
    return true;
}

inline bool connectivity_check(int p) {
    if (p < 1) throw std::invalid_argument("connectivity_check requires p >= 1");
    return connectivity_check(homology(p), p);
}

// lowest degree that can carry an alternating representation: p+1-r with
// r = floor(sqrt(2p + 9/4) - 1/2)
inline int lowest_alternating_degree(int p) {
    int r = 0;
    while ((r + 1) * (r + 2) <= 2 * p + 2) ++r; // largest r with r(r+1)/2 <= p+1
    return p + 1 - r;
}

} // namespace symhom::sym
