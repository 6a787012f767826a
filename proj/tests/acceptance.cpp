// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// The default run covers every required criterion.  --slow adds the stretch
// computations (the dim-12 algebra row, the layer sweep to m = 18, and the
// Sym complex at p = 6); p = 7 is supported by the CLI but takes hours of
// elimination time, so it is documented rather than tested.

#include "symhom/algebra.hpp"
#include "symhom/chessboard.hpp"
#include "symhom/delta_s.hpp"
#include "symhom/hs_low.hpp"
#include "symhom/render.hpp"
#include "symhom/sym_complex.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace symhom;
using linalg::HomologyResult;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-58s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), dt);
    if (!ok) {
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

HomologyResult group(int betti, std::vector<int> torsion) {
    HomologyResult h;
    h.betti = betti;
    for (int t : torsion) h.torsion.emplace_back(t);
    return h;
}

std::vector<int> twos(int k) { return std::vector<int>(k, 2); }

alg::AlgebraZ cyclic(int n) { return alg::group_ring(alg::cyclic_group_table(n)); }

bool check_hs1(const alg::AlgebraZ& a, const HomologyResult& expected, const char* what) {
    auto h = hs::hs1(a);
    if (h == expected) return true;
    std::printf("      %s: got %s, expected %s\n", what, render::homology_machine(h).c_str(),
                render::homology_machine(expected).c_str());
    return false;
}

std::vector<alg::AlgebraZ> golden_algebras() {
    std::vector<alg::AlgebraZ> as;
    for (int n = 2; n <= 6; ++n) as.push_back(alg::truncated_polynomial({n}));
    for (int n = 2; n <= 6; ++n) as.push_back(cyclic(n));
    as.push_back(alg::truncated_polynomial({2, 2}));
    as.push_back(alg::quaternion_algebra());
    as.push_back(alg::group_ring(
        alg::product_group_table(alg::cyclic_group_table(2), alg::cyclic_group_table(2))));
    as.push_back(alg::group_ring(
        alg::product_group_table(alg::cyclic_group_table(3), alg::cyclic_group_table(3))));
    as.push_back(alg::group_ring(alg::symmetric_group_table(3)));
    return as;
}

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    // 1. HS_1 golden tables
    criterion("1a HS_1(Z[t]/(t^n)), n = 2..6", [] {
        const std::vector<std::vector<int>> expect{twos(2), twos(2), twos(4), twos(4), twos(6)};
        bool ok = true;
        for (int n = 2; n <= 6; ++n)
            ok &= check_hs1(alg::truncated_polynomial({n}), group(0, expect[n - 2]),
                            ("Z[t]/(t^" + std::to_string(n) + ")").c_str());
        return ok;
    });
    criterion("1b HS_1(Z[C_n]), n = 2..6", [] {
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            auto expected = n % 2 == 0 ? group(0, twos(n)) : group(0, {});
            ok &= check_hs1(cyclic(n), expected, ("Z[C_" + std::to_string(n) + "]").c_str());
        }
        return ok;
    });
    criterion("1c HS_1 of the second-table rows (dim <= 9)", [] {
        bool ok = true;
        ok &= check_hs1(alg::truncated_polynomial({2, 2}), group(1, twos(11)), "Z[t,u]/(t^2,u^2)");
        ok &= check_hs1(alg::quaternion_algebra(), group(0, twos(8)), "Z[i,j,k]");
        ok &= check_hs1(alg::group_ring(alg::product_group_table(alg::cyclic_group_table(2),
                                                                 alg::cyclic_group_table(2))),
                        group(0, twos(12)), "Z[C_2 x C_2]");
        ok &= check_hs1(alg::group_ring(alg::product_group_table(alg::cyclic_group_table(3),
                                                                 alg::cyclic_group_table(3))),
                        group(0, std::vector<int>(9, 3)), "Z[C_3 x C_3]");
        ok &= check_hs1(alg::group_ring(alg::symmetric_group_table(3)), group(0, twos(2)),
                        "Z[S_3]");
        return ok;
    });
    criterion("1e HS_1 of the remaining table rows (beyond required)", [] {
        bool ok = true;
        {
            auto expected = group(4, {});
            expected.torsion = linalg::normalize_divisor_chain({2, 2, 2, 2, 2, 2, 2, 6, 6, 6, 6, 6});
            ok &= check_hs1(alg::truncated_polynomial({3, 3}), expected, "Z[t,u]/(t^3,u^3)");
        }
        {
            auto expected = group(3, {});
            expected.torsion = linalg::normalize_divisor_chain(
                {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4});
            ok &= check_hs1(alg::truncated_polynomial({2, 4}), expected, "Z[t,u]/(t^2,u^4)");
        }
        ok &= check_hs1(alg::truncated_polynomial({2, 2, 2}), group(6, std::vector<int>(42, 2)),
                        "Z[t,u,v]/(t^2,u^2,v^2)");
        ok &= check_hs1(alg::group_ring(alg::product_group_table(alg::cyclic_group_table(3),
                                                                 alg::cyclic_group_table(2))),
                        group(0, twos(6)), "Z[C_3 x C_2]");
        {
            // Z[t,u]/(t^3, u^2, t^2u) is not a pure truncation; exercise the
            // spec-file interface with it
            static const char* spec_text =
                "symhom-algebra 1\n"
                "dim 5\n"
                "labels 1 t u t*u t^2\n"
                "unit 1 0 0 0 0\n"
                "sc 0 0 0 1\nsc 0 1 1 1\nsc 0 2 2 1\nsc 0 3 3 1\nsc 0 4 4 1\n"
                "sc 1 0 1 1\nsc 2 0 2 1\nsc 3 0 3 1\nsc 4 0 4 1\n"
                "sc 1 1 4 1\nsc 1 2 3 1\nsc 2 1 3 1\n"
                "grade-elements 1 t u t*u t^2 0\n"
                "grade-zero 5\n"
                "grade-basis 0 1 2 3 4\n"
                "grade-product 0 0 1 2 3 4 5\n"
                "grade-product 1 1 4 3 5 5 5\n"
                "grade-product 2 2 3 5 5 5 5\n"
                "grade-product 3 3 5 5 5 5 5\n"
                "grade-product 4 4 5 5 5 5 5\n"
                "grade-product 5 5 5 5 5 5 5\n"
                "augmentation 1 0 0 0 0\n"
                "end\n";
            ok &= check_hs1(alg::parse_spec_string(spec_text), group(2, twos(10)),
                            "Z[t,u]/(t^3,u^2,t^2u)");
        }
        return ok;
    });
    if (slow)
        criterion("1f (slow) HS_1(Z[t,u,v]/(t^2,u^2,v^3)), dim 12", [] {
            auto expected = group(11, {});
            expected.torsion = linalg::normalize_divisor_chain(
                {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                 6, 6, 6, 6});
            return check_hs1(alg::truncated_polynomial({2, 2, 3}), expected,
                             "Z[t,u,v]/(t^2,u^2,v^3)");
        });
    if (slow)
        criterion("1d (slow) HS_1(Z[t,u]/(t^4,u^3)), dim 12", [] {
            auto expected = group(6, {});
            expected.torsion = linalg::normalize_divisor_chain(
                {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 6, 12, 12});
            return check_hs1(alg::truncated_polynomial({4, 3}), expected, "Z[t,u]/(t^4,u^3)");
        });

    // 2. HS_0 theorem check
    criterion("2  HS_0 = A/([A,A]) on all golden algebras; HS_0(M_2(Z)) = 0", [] {
        bool ok = true;
        for (const auto& a : golden_algebras()) {
            auto direct = hs::hs0(a);
            ok &= direct == hs::hs0_commutator_quotient(a);
            if (a.grading() && a.grading()->commutative) {
                // commutative algebra: HS_0 is the algebra itself
                bool commutative = true;
                for (int i = 0; i < a.dim() && commutative; ++i)
                    for (int j = 0; j < a.dim(); ++j)
                        commutative &= a.basis_product(i, j) == a.basis_product(j, i);
                if (commutative) ok &= direct == group(a.dim(), {});
            }
        }
        auto m2 = alg::matrix_ring(alg::integers(), 2);
        ok &= hs::hs0(m2) == group(0, {});
        ok &= hs::hs0_commutator_quotient(m2) == group(0, {});
        return ok;
    });

    // 3. layered sweep
    criterion("3  HS_1(Z[t])_{t^m}: 0, 0, then Z/2 for m = 2..10", [] {
        bool ok = true;
        for (int m = 0; m <= 10; ++m) {
            auto expected = m < 2 ? group(0, {}) : group(0, {2});
            auto h = hs::hs1_polynomial_layer(m);
            if (!(h == expected)) {
                std::printf("      m = %d: got %s\n", m, render::homology_machine(h).c_str());
                ok = false;
            }
        }
        return ok;
    });
    if (slow)
        criterion("3s (slow) layer sweep extended to m = 18", [] {
            bool ok = true;
            for (int m = 11; m <= 18; ++m) ok &= hs::hs1_polynomial_layer(m) == group(0, {2});
            return ok;
        });

    // 4 + 6. Sym Poincare polynomials and the connectivity shadow
    criterion("4  Poincare polynomials of Sym^(p), p = 0..5, torsion-free", [] {
        const std::vector<std::vector<int>> expect{
            {1}, {0, 1}, {0, 1, 2}, {0, 0, 7, 6}, {0, 0, 0, 43, 24}, {0, 0, 0, 1, 272, 120}};
        bool ok = true;
        for (int p = 0; p <= 5; ++p) {
            auto h = sym::homology(p);
            ok &= h.torsion_free;
            for (int i = 0; i <= p; ++i) ok &= h.poincare[i] == expect[p][i];
            if (p >= 1) ok &= sym::connectivity_check(h, p);
        }
        return ok;
    });
    if (slow)
        criterion("4s (slow) Sym^(6): 36t^4 + 1847t^5 + 720t^6, torsion-free", [] {
            auto h = sym::homology(6);
            const std::vector<int> expect{0, 0, 0, 0, 36, 1847, 720};
            bool ok = h.torsion_free && sym::connectivity_check(h, 6);
            for (int i = 0; i <= 6; ++i) ok &= h.poincare[i] == expect[i];
            if (!ok)
                std::printf("      got %s\n", render::poincare_machine(h.poincare).c_str());
            return ok;
        });

    // 5. chessboard equivalence
    criterion("5  suspended Omega_{p+1}^+ = Sym^(p) via omega, p = 0..4", [] {
        bool ok = true;
        for (int p = 0; p <= 4; ++p) {
            auto rep = chess::omega_iso(p);
            ok &= rep.bijective && rep.chain_map;
            for (int k = 0; k <= p; ++k) ok &= rep.chess_homology[k] == rep.sym_homology.by_degree[k];
        }
        return ok;
    });

    // 6. connectivity (subsumed by criterion 4 data; restated explicitly)
    criterion("6  H_i(Sym^(p)) = 0 for i <= floor(2(p-1)/3), p <= 5", [] {
        bool ok = true;
        for (int p = 1; p <= 5; ++p) ok &= sym::connectivity_check(p);
        return ok;
    });

    // 7. representation suite
    criterion("7a sigma(b_p) over C_{p+1}-cosets is a basis of H_p, p <= 5", [] {
        bool ok = true;
        for (int p = 1; p <= 5; ++p) {
            sym::SymComplex c(p);
            auto bp = sym::b_generator(p);
            ok &= sym::boundary(bp).is_zero();

            // one representative per coset sigma C_{p+1}
            std::vector<int> tau(p + 1);
            tau[0] = p;
            for (int i = 1; i <= p; ++i) tau[i] = i - 1;
            std::vector<std::vector<int>> reps;
            std::set<std::vector<int>> seen;
            std::vector<int> perm(p + 1);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                if (seen.count(perm)) continue;
                reps.push_back(perm);
                std::vector<int> q = perm;
                for (int j = 0; j <= p; ++j) {
                    seen.insert(q);
                    std::vector<int> next(p + 1);
                    for (int x = 0; x <= p; ++x) next[x] = q[tau[x]];
                    q = next; // q . tau
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            ok &= Int(reps.size()) == factorial(p);

            linalg::SparseIntMatrix::Builder b(c.dimension(p), static_cast<int>(reps.size()));
            for (std::size_t col = 0; col < reps.size(); ++col) {
                auto w = c.chain_vector(sym::sigma_action(reps[col], bp));
                for (int r = 0; r < c.dimension(p); ++r)
                    if (w[r] != 0) b.add(r, static_cast<int>(col), w[r]);
            }
            auto span = b.build();
            auto s = linalg::smith(span);
            // rank p! and unimodular image: a basis of the kernel lattice H_p
            ok &= Int(s.rank) == factorial(p);
            for (const auto& d : s.divisors) ok &= d == 1;
            ok &= Int(sym::homology(p).by_degree[p].betti) == factorial(p);
        }
        return ok;
    });
    criterion("7b rep_generator vanishing on all partitions of p+1 <= 7", [] {
        bool ok = true;
        for (int n = 2; n <= 7; ++n) {
            int p = n - 1;
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            auto rec = [&](auto&& self, int rest, int maxp) -> void {
                if (rest == 0) {
                    parts.push_back(cur);
                    return;
                }
                for (int k = std::min(rest, maxp); k >= 1; --k) {
                    cur.push_back(k);
                    self(self, rest - k, k);
                    cur.pop_back();
                }
            };
            rec(rec, n, n);
            for (const auto& lambda : parts) {
                bool rep_any = false, rep_even = false;
                for (std::size_t i = 1; i < lambda.size(); ++i) {
                    if (lambda[i] == lambda[i - 1]) rep_any = true;
                    if (lambda[i] == lambda[i - 1] && lambda[i] % 2 == 0) rep_even = true;
                }
                auto v = sym::rep_generator(p, lambda, sym::RepKind::alternating);
                auto u = sym::rep_generator(p, lambda, sym::RepKind::trivial);
                ok &= v.is_zero() == rep_any;
                ok &= u.is_zero() == rep_even;
                // every nonzero alternating generator is a cycle
                if (!v.is_zero() && v.degree() >= 1) ok &= sym::boundary(v).is_zero();
            }
        }
        return ok;
    });

    // 8. resolution exactness
    criterion("8  partial resolution stages exact for n = 0..3", [] {
        bool ok = true;
        for (int n = 0; n <= 3; ++n) {
            auto st = hs::resolution_stage_matrices(n);
            auto ck = hs::check_resolution_stage(st);
            ok &= ck.exact();
            ok &= Int(st.basis0.size()) == deltas::count(n, 0);
            ok &= Int(st.basis2.size()) == deltas::count(n, 2);
            ok &= Int(st.basis3.size()) == deltas::count(n, 3);
        }
        return ok;
    });

    // 9. always-on property suites
    criterion("9a composition associativity (exhaustive <= 2, random <= 4)", [] {
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c)
                    for (int d = 0; d <= 2; ++d)
                        for (const auto& h : deltas::enumerate(a, b))
                            for (const auto& g : deltas::enumerate(b, c))
                                for (const auto& f : deltas::enumerate(c, d))
                                    if (deltas::compose(deltas::compose(f, g), h) !=
                                        deltas::compose(f, deltas::compose(g, h)))
                                        return false;
        std::mt19937 rng(1);
        std::uniform_int_distribution<int> rank(0, 4);
        for (int trial = 0; trial < 1000; ++trial) {
            int a = rank(rng), b = rank(rng), c = rank(rng), d = rank(rng);
            auto pick = [&](int n, int m) {
                auto ms = deltas::enumerate(n, m);
                return ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
            };
            auto h = pick(a, b), g = pick(b, c), f = pick(c, d);
            if (deltas::compose(deltas::compose(f, g), h) !=
                deltas::compose(f, deltas::compose(g, h)))
                return false;
        }
        return true;
    });
    criterion("9b enumeration length = (m+n+1)!/m! for n+m <= 6", [] {
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; n + m <= 6; ++m)
                if (Int(deltas::enumerate(n, m).size()) != deltas::count(n, m)) return false;
        return true;
    });
    criterion("9c epi-mono recomposition, exhaustive ranks <= 3", [] {
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m)
                for (const auto& f : deltas::enumerate(n, m)) {
                    auto fac = deltas::decompose_epi_mono(f);
                    if (!fac.epi.is_epi() || !fac.mono.is_mono()) return false;
                    if (deltas::compose(fac.mono, fac.epi) != f) return false;
                    auto order = fac.mono.flattened_order();
                    if (!std::is_sorted(order.begin(), order.end())) return false;
                }
        return true;
    });
    criterion("9d act functoriality (exhaustive ranks <= 2 over Z[t]/(t^2))", [] {
        auto a = alg::truncated_polynomial({2});
        for (int p = 0; p <= 2; ++p)
            for (int n = 0; n <= 2; ++n)
                for (int m = 0; m <= 2; ++m)
                    for (const auto& g : deltas::enumerate(p, n))
                        for (const auto& f : deltas::enumerate(n, m))
                            for (int mask = 0; mask < (1 << (p + 1)); ++mask) {
                                alg::SimpleTensor t;
                                for (int i = 0; i <= p; ++i)
                                    t.factors.push_back(a.basis_element((mask >> i) & 1));
                                if (alg::act(a, deltas::compose(f, g), t).factors !=
                                    alg::act(a, f, alg::act(a, g, t)).factors)
                                    return false;
                            }
        return true;
    });
    criterion("9e d1.d2 = 0 for every constructed algebra", [] {
        for (const auto& a : golden_algebras()) {
            auto pc = hs::partial_complex(a);
            if (!(pc.boundary1 * pc.boundary2).is_zero()) return false;
            auto cc = hs::cyclic_partial_complex(a);
            if (!(cc.boundary1 * cc.boundary2).is_zero()) return false;
        }
        return true;
    });
    criterion("9f d.d = 0 for Sym (p <= 5) and chessboards (n <= 6)", [] {
        for (int p = 2; p <= 5; ++p) {
            sym::SymComplex c(p);
            std::vector<linalg::SparseIntMatrix> chain;
            for (int i = 1; i <= p; ++i) chain.push_back(c.boundary_matrix(i));
            if (!linalg::verify_complex(chain)) return false;
        }
        for (int n = 2; n <= 6; ++n) {
            chess::ChessComplex c(n);
            std::vector<linalg::SparseIntMatrix> chain;
            for (int k = 1; k <= n - 1; ++k) chain.push_back(c.boundary_matrix(k));
            if (!linalg::verify_complex(chain)) return false;
        }
        return true;
    });
    criterion("9g Smith divisor chain + minor-gcd oracle on random <= 6x6", [] {
        std::mt19937 rng(20260809);
        std::uniform_int_distribution<int> dim(1, 6), val(-5, 5);
        auto det = [](auto&& self, const std::vector<std::vector<Int>>& m) -> Int {
            const std::size_t n = m.size();
            if (n == 0) return 1;
            if (n == 1) return m[0][0];
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (m[0][j] == 0) continue;
                std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
                for (std::size_t r = 1; r < n; ++r) {
                    std::size_t cc = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (c != j) minor[r - 1][cc++] = m[r][c];
                }
                Int term = m[0][j] * self(self, minor);
                acc += (j % 2 ? -term : term);
            }
            return acc;
        };
        for (int trial = 0; trial < 40; ++trial) {
            int r = dim(rng), c = dim(rng);
            std::vector<std::vector<Int>> m(r, std::vector<Int>(c));
            linalg::SparseIntMatrix::Builder b(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    m[i][j] = val(rng);
                    b.add(i, j, m[i][j]);
                }
            auto s = linalg::smith(b.build());
            for (std::size_t i = 1; i < s.divisors.size(); ++i)
                if (s.divisors[i] % s.divisors[i - 1] != 0) return false;
            // gcd of k x k minors = d1...dk
            Int prod = 1;
            for (int k = 1; k <= std::min(r, c); ++k) {
                Int g = 0;
                std::vector<int> rs(k), cs(k);
                auto loop = [&](auto&& self, int start, int depth, int limit,
                                std::vector<int>& sel, auto&& body) -> void {
                    if (depth == k) {
                        body();
                        return;
                    }
                    for (int i = start; i < limit; ++i) {
                        sel[depth] = i;
                        self(self, i + 1, depth + 1, limit, sel, body);
                    }
                };
                loop(loop, 0, 0, r, rs, [&] {
                    loop(loop, 0, 0, c, cs, [&] {
                        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
                        g = gcd(g, det(det, sub));
                    });
                });
                if (k <= s.rank) {
                    prod *= s.divisors[k - 1];
                    if (g != prod) return false;
                } else if (g != 0) {
                    return false;
                }
            }
        }
        return true;
    });

    // 10. cyclic comparison
    criterion("10 HC_1 values and the gamma-induced map images", [] {
        bool ok = true;
        ok &= hs::hc1(alg::truncated_polynomial({2})) == group(0, {2});
        ok &= hs::hc1(alg::truncated_polynomial({3})) == group(0, {6});
        ok &= hs::hc1(alg::truncated_polynomial({4})) == group(0, {2, 12});

        {
            hs::CyclicComparison cmp(alg::truncated_polynomial({2}));
            ok &= cmp.gamma1_chain_map() && cmp.gamma2_chain_map();
            std::vector<Int> tt(4, Int(0));
            tt[3] = 1; // t @ t
            bool nonzero = false;
            for (const auto& x : cmp.push_cycle(tt)) nonzero |= x != 0;
            ok &= nonzero;
        }
        {
            hs::CyclicComparison cmp(alg::truncated_polynomial({3}));
            ok &= cmp.gamma1_chain_map() && cmp.gamma2_chain_map();
            std::vector<Int> c(9, Int(0));
            c[4] = 1; // t @ t
            c[5] = 1; // t @ t^2
            bool nonzero = false;
            for (const auto& x : cmp.push_cycle(c)) nonzero |= x != 0;
            ok &= nonzero;
        }
        {
            hs::CyclicComparison cmp(alg::truncated_polynomial({4}));
            ok &= cmp.gamma1_chain_map() && cmp.gamma2_chain_map();
            ok &= cmp.hs1_basis().structure() == group(0, {2, 2, 2, 2});
            ok &= cmp.image_structure() == group(0, {2, 2});
        }
        return ok;
    });

    std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
