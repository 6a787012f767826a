// The category DeltaS (and the monoidal structure of DeltaS_+).
//
// A morphism [n] -> [m] is stored in tensor notation only: m+1 blocks of
// indices that together list {0,...,n} exactly once.  Block i is the ordered
// preimage of i, so "x_1x_0 (x) x_3x_4 (x) 1 (x) x_2" is
// {{1,0},{3,4},{},{2}}.  The (phi, g) pair form is derived on demand: phi is
// the block sizes, g the flattened index order.
//
// Source rank -1 (the empty object of DeltaS_+) is supported throughout; the
// unique morphism iota_m : [-1] -> [m] has m+1 empty blocks.

#pragma once

#include "symhom/integer.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace symhom::deltas {

using Blocks = std::vector<std::vector<int>>;

class DeltaSMorphism {
public:
    // Validates that the blocks partition {0,...,source_rank}.
    DeltaSMorphism(int source_rank, Blocks blocks)
        : source_rank_(source_rank), blocks_(std::move(blocks)) {
        if (source_rank_ < -1) throw std::invalid_argument("source rank must be >= -1");
        if (blocks_.empty() && source_rank_ != -1)
            throw std::invalid_argument("only [-1] admits a morphism with no blocks");
        std::vector<char> seen(source_rank_ + 1, 0);
        int total = 0;
        for (const auto& block : blocks_)
            for (int idx : block) {
                if (idx < 0 || idx > source_rank_)
                    throw std::invalid_argument("index " + std::to_string(idx) +
                                                " out of range for source [" +
                                                std::to_string(source_rank_) + "]");
                if (seen[idx])
                    throw std::invalid_argument("duplicate index " + std::to_string(idx));
                seen[idx] = 1;
                ++total;
            }
        if (total != source_rank_ + 1)
            throw std::invalid_argument("blocks must contain every index of the source exactly once");
    }

    int source_rank() const { return source_rank_; }
    int target_rank() const { return static_cast<int>(blocks_.size()) - 1; }
    const Blocks& blocks() const { return blocks_; }

    bool is_epi() const {
        return std::all_of(blocks_.begin(), blocks_.end(),
                           [](const auto& b) { return !b.empty(); });
    }
    bool is_mono() const {
        return std::all_of(blocks_.begin(), blocks_.end(),
                           [](const auto& b) { return b.size() <= 1; });
    }
    bool is_iso() const { return source_rank_ == target_rank() && is_epi() && is_mono(); }
    bool is_identity() const {
        if (!is_iso()) return false;
        for (int i = 0; i <= target_rank(); ++i)
            if (blocks_[i][0] != i) return false;
        return true;
    }

    // Pair form (phi, g): phi as block sizes, g as the flattened index order.
    std::vector<int> delta_map_sizes() const {
        std::vector<int> sizes(blocks_.size());
        std::transform(blocks_.begin(), blocks_.end(), sizes.begin(),
                       [](const auto& b) { return static_cast<int>(b.size()); });
        return sizes;
    }
    std::vector<int> flattened_order() const {
        std::vector<int> order;
        order.reserve(source_rank_ + 1);
        for (const auto& b : blocks_) order.insert(order.end(), b.begin(), b.end());
        return order;
    }

    friend bool operator==(const DeltaSMorphism& a, const DeltaSMorphism& b) {
        return a.source_rank_ == b.source_rank_ && a.blocks_ == b.blocks_;
    }
    friend std::strong_ordering operator<=>(const DeltaSMorphism& a, const DeltaSMorphism& b) {
        if (auto c = a.source_rank_ <=> b.source_rank_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    int source_rank_;
    Blocks blocks_;
};

inline DeltaSMorphism make_morphism(int source_rank, Blocks blocks) {
    return DeltaSMorphism(source_rank, std::move(blocks));
}

inline DeltaSMorphism identity(int n) {
    Blocks b(n + 1);
    for (int i = 0; i <= n; ++i) b[i] = {i};
    return DeltaSMorphism(n, std::move(b));
}

// iota_m : [-1] -> [m], the unique morphism out of the empty object.
inline DeltaSMorphism iota(int m) { return DeltaSMorphism(-1, Blocks(m + 1)); }

// Composition by tensor substitution: block i of outer names which blocks of
// inner get concatenated, in order.
inline DeltaSMorphism compose(const DeltaSMorphism& outer, const DeltaSMorphism& inner) {
    if (outer.source_rank() != inner.target_rank())
        throw std::invalid_argument("compose: outer source [" +
                                    std::to_string(outer.source_rank()) +
                                    "] != inner target [" +
                                    std::to_string(inner.target_rank()) + "]");
    Blocks result(outer.blocks().size());
    for (std::size_t i = 0; i < result.size(); ++i)
        for (int j : outer.blocks()[i]) {
            const auto& b = inner.blocks()[j];
            result[i].insert(result[i].end(), b.begin(), b.end());
        }
    return DeltaSMorphism(inner.source_rank(), std::move(result));
}

// |Mor([n],[m])| = (m+n+1)!/m!  (choose the block boundaries, order the
// n+1 indices).  Exact: overflows 64 bits already at small ranks.
inline Int count(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("count requires n, m >= 0");
    Int r = 1;
    for (int k = m + 1; k <= m + n + 1; ++k) r *= k;
    return r;
}

enum class MorphismFilter { all, epi, mono, iso };

// All morphisms [n] -> [m], ordered by (block-size composition, index
// permutation), both lexicographic.  This is a deliberate canonical order; it
// does not reproduce any external tool's listing.
inline std::vector<DeltaSMorphism> enumerate(int n, int m,
                                             MorphismFilter filter = MorphismFilter::all) {
    if (n < 0 || m < 0) throw std::invalid_argument("enumerate requires n, m >= 0");
    std::vector<DeltaSMorphism> out;

    std::vector<int> sizes(m + 1, 0);
    std::vector<int> perm(n + 1);
    // lexicographically next composition of n+1 into m+1 nonnegative parts:
    // bump the rightmost position with mass strictly to its right, dump the
    // remainder into the last part
    auto next_composition = [&]() {
        int rest = sizes[m];
        for (int i = m - 1; i >= 0; --i) {
            if (rest > 0) {
                ++sizes[i];
                for (int j = i + 1; j <= m; ++j) sizes[j] = 0;
                sizes[m] = rest - 1;
                return true;
            }
            rest += sizes[i];
            sizes[i] = 0;
        }
        return false;
    };

    sizes[m] = n + 1;
    do {
        if (filter == MorphismFilter::epi || filter == MorphismFilter::iso) {
            if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; })) continue;
        }
        if (filter == MorphismFilter::mono || filter == MorphismFilter::iso) {
            if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 1; })) continue;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Blocks blocks(m + 1);
            int pos = 0;
            for (int i = 0; i <= m; ++i) {
                blocks[i].assign(perm.begin() + pos, perm.begin() + pos + sizes[i]);
                pos += sizes[i];
            }
            out.emplace_back(n, std::move(blocks));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_composition());
    return out;
}

// Epi-mono factorization: f = mono . epi with epi in DeltaS_+, mono the
// order-preserving Delta-injection hitting exactly the nonempty block
// positions.  The decomposition is unique.
struct EpiMonoFactorization {
    DeltaSMorphism epi;
    DeltaSMorphism mono;
};

inline EpiMonoFactorization decompose_epi_mono(const DeltaSMorphism& f) {
    Blocks epi_blocks;
    Blocks mono_blocks(f.blocks().size());
    for (std::size_t i = 0; i < f.blocks().size(); ++i) {
        if (f.blocks()[i].empty()) continue;
        mono_blocks[i] = {static_cast<int>(epi_blocks.size())};
        epi_blocks.push_back(f.blocks()[i]);
    }
    int mid_rank = static_cast<int>(epi_blocks.size()) - 1;
    return {DeltaSMorphism(f.source_rank(), std::move(epi_blocks)),
            DeltaSMorphism(mid_rank, std::move(mono_blocks))};
}

// Monoidal product on DeltaS_+: f acts on indices 0..n, g shifted by n+1 on
// the rest.  Unit: iota(-1) = identity of [-1].
inline DeltaSMorphism monoidal_product(const DeltaSMorphism& f, const DeltaSMorphism& g) {
    const int shift = f.source_rank() + 1;
    Blocks blocks = f.blocks();
    for (const auto& b : g.blocks()) {
        auto& nb = blocks.emplace_back(b);
        for (int& idx : nb) idx += shift;
    }
    return DeltaSMorphism(f.source_rank() + g.source_rank() + 1, std::move(blocks));
}

inline DeltaSMorphism monoidal_unit() { return DeltaSMorphism(-1, {}); }

// The automorphism of [n] whose tensor notation is x_{g(0)},...,x_{g(n)}
// (singleton blocks); as a set map it takes i to g^{-1}(i).
inline DeltaSMorphism permutation_morphism(const std::vector<int>& g) {
    Blocks blocks(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) blocks[i] = {g[i]};
    return DeltaSMorphism(static_cast<int>(g.size()) - 1, std::move(blocks));
}

// tau_n = (0, n, n-1, ..., 1): the generator of C_{n+1} inside Sigma_{n+1}.
inline std::vector<int> tau_permutation(int n) {
    std::vector<int> g(n + 1);
    g[0] = n;
    for (int i = 1; i <= n; ++i) g[i] = i - 1;
    return g;
}

inline DeltaSMorphism tau(int n) { return permutation_morphism(tau_permutation(n)); }

// Block transposition gamma_{n,m} : [n+m+1] -> [m+n+1] switching the first
// block of size n+1 with the second of size m+1.
inline DeltaSMorphism block_transposition(int n, int m) {
    std::vector<int> g(n + m + 2);
    for (int i = 0; i <= m; ++i) g[i] = n + 1 + i;
    for (int i = 0; i <= n; ++i) g[m + 1 + i] = i;
    return permutation_morphism(g);
}

// --- text format -----------------------------------------------------------
//
// Blocks as bracketed comma-separated lists, e.g. "[[],[3,0],[2,4,1]]".  The
// source rank is inferred from the indices present; an explicit "n=4:" prefix
// is accepted and cross-checked.

inline std::string to_string(const DeltaSMorphism& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.blocks().size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < f.blocks()[i].size(); ++j) {
            if (j) os << ',';
            os << f.blocks()[i][j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

inline DeltaSMorphism parse_morphism(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("morphism parse error: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos) + " in " + text);
        ++pos;
    };

    skip_ws();
    int declared_rank = -2;
    if (pos + 1 < text.size() && text[pos] == 'n' && text[pos + 1] == '=') {
        pos += 2;
        skip_ws();
        std::size_t end = pos;
        if (end < text.size() && (text[end] == '-' || text[end] == '+')) ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw std::invalid_argument("morphism parse error: bad rank after n=");
        declared_rank = std::stoi(text.substr(pos, end - pos));
        pos = end;
        expect(':');
    }

    expect('[');
    Blocks blocks;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            expect('[');
            std::vector<int> block;
            skip_ws();
            while (pos < text.size() && text[pos] != ']') {
                std::size_t end = pos;
                if (text[end] == '-' || text[end] == '+') ++end;
                while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
                if (end == pos)
                    throw std::invalid_argument("morphism parse error: expected index at position " +
                                                std::to_string(pos) + " in " + text);
                block.push_back(std::stoi(text.substr(pos, end - pos)));
                pos = end;
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    skip_ws();
                }
            }
            expect(']');
            blocks.push_back(std::move(block));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
    }
    skip_ws();
    if (pos != text.size())
        throw std::invalid_argument("morphism parse error: trailing characters in " + text);

    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    int inferred_rank = total - 1;
    if (declared_rank != -2 && declared_rank != inferred_rank)
        throw std::invalid_argument("morphism parse error: declared rank n=" +
                                    std::to_string(declared_rank) + " does not match indices");
    return DeltaSMorphism(inferred_rank, std::move(blocks));
}

} // namespace symhom::deltas
