#include "symhom/render.hpp"
#include "symhom/sym_complex.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symhom;
using namespace symhom::sym;
using linalg::SparseIntMatrix;

namespace {

// matrix of a permutation action on the degree-i basis
SparseIntMatrix action_matrix(const SymComplex& c, const std::vector<int>& perm, int degree) {
    SparseIntMatrix::Builder b(c.dimension(degree), c.dimension(degree));
    for (int col = 0; col < c.dimension(degree); ++col) {
        Factors relabeled = c.generators(degree)[col].factors;
        for (auto& f : relabeled)
            for (int& idx : f) idx = perm[idx];
        Canonical cn = canonicalize(c.p(), std::move(relabeled));
        b.add(c.index_of(degree, cn.gen.factors), col, Int(cn.sign));
    }
    return b.build();
}

std::vector<Int> boundary_of(const SymComplex& c, const SymChain& chain) {
    auto v = c.chain_vector(chain);
    auto d = c.boundary_matrix(chain.degree());
    std::vector<Int> out(d.rows(), Int(0));
    for (const auto& e : d.entries()) out[e.row] += e.value * v[e.col];
    return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool has_repeat(const std::vector<int>& lambda, bool even_only) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] == lambda[i - 1] && (!even_only || lambda[i] % 2 == 0)) return true;
    return false;
}

} // namespace

TEST_CASE("canonicalize: signs from the graded swap rule") {
    // (z1, z0z2): one factor of odd length -> sign +1
    auto c1 = canonicalize(2, {{1}, {0, 2}});
    CHECK(c1.gen.factors == Factors{{0, 2}, {1}});
    CHECK(c1.sign == 1);

    // two degree-1 factors swap: sign -1
    auto c2 = canonicalize(3, {{2, 3}, {0, 1}});
    CHECK(c2.gen.factors == Factors{{0, 1}, {2, 3}});
    CHECK(c2.sign == -1);

    // canonical input: idempotent with sign +1
    auto c3 = canonicalize(3, c2.gen.factors);
    CHECK(c3.gen.factors == c2.gen.factors);
    CHECK(c3.sign == 1);

    CHECK(c1.gen.partition_type() == std::vector<int>{2, 1});
    CHECK(c1.gen.degree() == 1);

    CHECK_THROWS_AS(canonicalize(2, {{0, 1}}), std::invalid_argument);        // missing 2
    CHECK_THROWS_AS(canonicalize(2, {{0, 1}, {1, 2}}), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(canonicalize(2, {{0, 1, 2}, {}}), std::invalid_argument);  // empty factor
}

TEST_CASE("canonicalize: double swap is the identity (random)") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int p = std::uniform_int_distribution<int>(1, 6)(rng);
        int k = std::uniform_int_distribution<int>(2, p + 1)(rng);
        // random canonical generator: random ordered set partition, canonicalized
        std::vector<int> idx(p + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        Factors f(k);
        for (int i = 0; i <= p; ++i)
            f[i < k ? i : std::uniform_int_distribution<int>(0, k - 1)(rng)].push_back(idx[i]);
        auto canon = canonicalize(p, f);

        // swap a random adjacent pair twice; total sign must be +1
        int s = std::uniform_int_distribution<int>(0, k - 2)(rng);
        Factors g = canon.gen.factors;
        std::swap(g[s], g[s + 1]);
        auto once = canonicalize(p, g);
        CHECK(once.gen.factors == canon.gen.factors);
        std::swap(g[s], g[s + 1]);
        auto twice = canonicalize(p, g);
        CHECK(twice.sign == 1);
        CHECK(twice.gen.factors == canon.gen.factors);
    }
}

TEST_CASE("generator counts match the closed form and the known dimensions") {
    SymComplex c5(5);
    std::vector<int> dims;
    for (int i = 0; i <= 5; ++i) dims.push_back(c5.dimension(i));
    CHECK(dims == std::vector<int>{1, 30, 300, 1200, 1800, 720});

    CHECK(enumerate_generators(1, 0).size() == 1);
    CHECK(enumerate_generators(1, 0)[0].factors == Factors{{0}, {1}});
    CHECK(enumerate_generators(2, 2).size() == 6);

    for (int p = 0; p <= 6; ++p)
        for (int i = 0; i <= p; ++i)
            CHECK(Int(enumerate_generators(p, i).size()) == lah_dimension(p, i));
}

TEST_CASE("boundary matrices") {
    SECTION("p = 1: both top generators hit the single degree-0 generator with +1") {
        SymComplex c(1);
        auto d1 = c.boundary_matrix(1);
        REQUIRE(d1.rows() == 1);
        REQUIRE(d1.cols() == 2);
        CHECK(d1.at(0, 0) == 1);
        CHECK(d1.at(0, 1) == 1);
    }

    SECTION("the boundary of z1z0z2") {
        SymComplex c(2);
        auto d2 = c.boundary_matrix(2);
        int col = c.index_of(2, {{1, 0, 2}});
        // d(z1z0z2) = (z1 @ z0z2) - (z1z0 @ z2): canonically +[z0z2, z1] - [z1z0, z2]
        CHECK(d2.at(c.index_of(1, {{0, 2}, {1}}), col) == 1);
        CHECK(d2.at(c.index_of(1, {{1, 0}, {2}}), col) == -1);
    }

    SECTION("d.d = 0 for p <= 5") {
        for (int p = 2; p <= 5; ++p) {
            SymComplex c(p);
            std::vector<SparseIntMatrix> chain;
            for (int i = 1; i <= p; ++i) chain.push_back(c.boundary_matrix(i));
            REQUIRE(linalg::verify_complex(chain));
        }
    }
}

TEST_CASE("chain-level boundary agrees with the boundary matrices") {
    std::mt19937 rng(606);
    for (int p = 1; p <= 4; ++p) {
        SymComplex c(p);
        for (int i = 1; i <= p; ++i) {
            SymChain w(p, i);
            const auto& gens = c.generators(i);
            for (int t = 0; t < 3; ++t)
                w.add_raw(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]
                              .factors,
                          std::uniform_int_distribution<int>(-2, 2)(rng));
            REQUIRE(c.chain_vector(boundary(w)) == boundary_of(c, w));
        }
    }
}

TEST_CASE("Poincare polynomials for p <= 5, all torsion-free") {
    std::vector<std::vector<int>> expected{
        {1}, {0, 1}, {0, 1, 2}, {0, 0, 7, 6}, {0, 0, 0, 43, 24}, {0, 0, 0, 1, 272, 120}};
    for (int p = 0; p <= 5; ++p) {
        auto h = homology(p);
        REQUIRE(h.torsion_free);
        REQUIRE(h.poincare.size() == expected[p].size());
        for (std::size_t i = 0; i < h.poincare.size(); ++i)
            CHECK(h.poincare[i] == expected[p][i]);
    }
}

TEST_CASE("poincare rendering") {
    auto h5 = homology(5);
    CHECK(render::poincare_human(h5.poincare) == "120*t^5+272*t^4+t^3");
    CHECK(render::poincare_machine(h5.poincare) == "[0,0,0,1,272,120]");
    auto h0 = homology(0);
    CHECK(render::poincare_human(h0.poincare) == "1");
    auto h2 = homology(2);
    CHECK(render::poincare_human(h2.poincare) == "2*t^2+t");
}

TEST_CASE("sigma action") {
    SECTION("identity fixes chains; a transposition moves z0z1 to z1z0") {
        SymChain c(1, 1);
        c.add_raw({{0, 1}}, 1);
        std::vector<int> id{0, 1};
        CHECK(sigma_action(id, c) == c);
        std::vector<int> swap01{1, 0};
        SymChain expect(1, 1);
        expect.add_raw({{1, 0}}, 1);
        CHECK(sigma_action(swap01, c) == expect);
    }

    SECTION("the action commutes with the boundary, p <= 4") {
        std::mt19937 rng(2718);
        for (int p = 2; p <= 4; ++p) {
            SymComplex c(p);
            std::vector<int> perm(p + 1);
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 3; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                for (int i = 1; i <= p; ++i) {
                    auto lhs = c.boundary_matrix(i) * action_matrix(c, perm, i);
                    auto rhs = action_matrix(c, perm, i - 1) * c.boundary_matrix(i);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("b_p generators") {
    auto b1 = b_generator(1);
    SymChain expect1(1, 1);
    expect1.add_raw({{0, 1}}, 1);
    expect1.add_raw({{1, 0}}, -1);
    CHECK(b1 == expect1);

    auto b2 = b_generator(2);
    SymChain expect2(2, 2);
    expect2.add_raw({{0, 1, 2}}, 1);
    expect2.add_raw({{2, 0, 1}}, 1);
    expect2.add_raw({{1, 2, 0}}, 1);
    CHECK(b2 == expect2);

    SECTION("d(b_p) = 0 and the orbit spans rank p!, p <= 4") {
        for (int p = 1; p <= 4; ++p) {
            SymComplex c(p);
            auto bp = b_generator(p);
            for (const auto& x : boundary_of(c, bp)) REQUIRE(x == 0);

            std::vector<int> perm(p + 1);
            std::iota(perm.begin(), perm.end(), 0);
            SparseIntMatrix::Builder span(c.dimension(p), 0);
            std::vector<linalg::Entry> entries;
            int col = 0;
            do {
                auto v = c.chain_vector(sigma_action(perm, bp));
                for (int r = 0; r < c.dimension(p); ++r)
                    if (v[r] != 0) entries.push_back({r, col, v[r]});
                ++col;
            } while (std::next_permutation(perm.begin(), perm.end()));
            auto m = SparseIntMatrix::from_triplets(c.dimension(p), col, entries);
            Int pfact = factorial(p);
            CHECK(Int(linalg::rank_of(m)) == pfact);
        }
    }
}

TEST_CASE("representation generators") {
    SECTION("alternating generator for [2,1] is a nonzero cycle") {
        auto v = rep_generator(2, {2, 1}, RepKind::alternating);
        REQUIRE_FALSE(v.is_zero());
        SymComplex c(2);
        for (const auto& x : boundary_of(c, v)) CHECK(x == 0);
    }

    SECTION("vanishing matches the repeated-component criteria, p+1 <= 6") {
        for (int n = 2; n <= 6; ++n) {
            int p = n - 1;
            for (const auto& lambda : partitions_of(n)) {
                auto v = rep_generator(p, lambda, RepKind::alternating);
                auto u = rep_generator(p, lambda, RepKind::trivial);
                REQUIRE(v.is_zero() == has_repeat(lambda, false));
                REQUIRE(u.is_zero() == has_repeat(lambda, true));
            }
        }
    }

    SECTION("specific examples") {
        CHECK(rep_generator(3, {2, 2}, RepKind::alternating).is_zero());
        CHECK(rep_generator(3, {2, 2}, RepKind::trivial).is_zero());
        CHECK_FALSE(rep_generator(5, {3, 3}, RepKind::trivial).is_zero());
    }

    SECTION("lowest alternating degree formula") {
        for (int p = 1; p <= 7; ++p) {
            // smallest degree carrying a distinct-parts partition of p+1
            int best = p + 1;
            for (const auto& lambda : partitions_of(p + 1))
                if (!has_repeat(lambda, false))
                    best = std::min(best, p + 1 - static_cast<int>(lambda.size()));
            CHECK(lowest_alternating_degree(p) == best);
        }
    }
}

TEST_CASE("boxtimes") {
    SECTION("singletons concatenate") {
        SymChain z0(0, 0);
        z0.add_raw({{0}}, 1);
        auto prod = boxtimes(z0, z0);
        SymChain expect(1, 0);
        expect.add_raw({{0}, {1}}, 1);
        CHECK(prod == expect);
    }

    SECTION("Leibniz rule on random small chains") {
        std::mt19937 rng(909);
        for (int trial = 0; trial < 20; ++trial) {
            int p = std::uniform_int_distribution<int>(1, 2)(rng);
            int q = std::uniform_int_distribution<int>(1, 2)(rng);
            SymComplex cp(p), cq(q), cpq(p + q + 1);
            int i = std::uniform_int_distribution<int>(1, p)(rng);
            int j = std::uniform_int_distribution<int>(1, q)(rng);
            const auto& gw = cp.generators(i);
            const auto& gv = cq.generators(j);
            SymChain w(p, i), v(q, j);
            w.add_raw(gw[std::uniform_int_distribution<std::size_t>(0, gw.size() - 1)(rng)].factors,
                      std::uniform_int_distribution<int>(1, 3)(rng));
            v.add_raw(gv[std::uniform_int_distribution<std::size_t>(0, gv.size() - 1)(rng)].factors,
                      std::uniform_int_distribution<int>(1, 3)(rng));

            // d(W x V) = dW x V + (-1)^i W x dV, as vectors in Sym_{i+j-1}^{(p+q+1)}
            auto lhs = boundary_of(cpq, boxtimes(w, v));

            SymChain dw(p, i - 1), dv(q, j - 1);
            {
                auto vec = boundary_of(cp, w);
                for (int r = 0; r < cp.dimension(i - 1); ++r)
                    if (vec[r] != 0) dw.add_raw(cp.generators(i - 1)[r].factors, vec[r]);
                auto vec2 = boundary_of(cq, v);
                for (int r = 0; r < cq.dimension(j - 1); ++r)
                    if (vec2[r] != 0) dv.add_raw(cq.generators(j - 1)[r].factors, vec2[r]);
            }
            auto rhs_chain = boxtimes(dw, v) + Int(i % 2 ? -1 : 1) * boxtimes(w, dv);
            auto rhs = cpq.chain_vector(rhs_chain);
            REQUIRE(lhs == rhs);
        }
    }

    SECTION("twisted skew commutativity W x V = (-1)^{ij} tau(V x W)") {
        std::mt19937 rng(4321);
        for (int trial = 0; trial < 20; ++trial) {
            int p = std::uniform_int_distribution<int>(0, 2)(rng);
            int q = std::uniform_int_distribution<int>(0, 2)(rng);
            int i = std::uniform_int_distribution<int>(0, p)(rng);
            int j = std::uniform_int_distribution<int>(0, q)(rng);
            auto gw = enumerate_generators(p, i);
            auto gv = enumerate_generators(q, j);
            SymChain w(p, i), v(q, j);
            w.add_raw(gw[std::uniform_int_distribution<std::size_t>(0, gw.size() - 1)(rng)].factors, 1);
            v.add_raw(gv[std::uniform_int_distribution<std::size_t>(0, gv.size() - 1)(rng)].factors, 1);

            // tau moves the first q+1 indices past the last p+1
            std::vector<int> tau(p + q + 2);
            for (int x = 0; x <= q; ++x) tau[x] = x + p + 1;
            for (int x = q + 1; x <= p + q + 1; ++x) tau[x] = x - q - 1;
            auto lhs = boxtimes(w, v);
            auto rhs = Int((i * j) % 2 ? -1 : 1) * sigma_action(tau, boxtimes(v, w));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("connectivity shadow") {
    CHECK(connectivity_check(2)); // bound 0: H_0 = 0
    CHECK(connectivity_check(4)); // H_0 = H_1 = H_2 = 0
    CHECK(connectivity_check(5)); // bound 2, and H_3 = Z shows tightness
    auto h5 = homology(5);
    CHECK(h5.by_degree[3].betti == 1);
}
