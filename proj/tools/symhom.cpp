// Command-line front end: symmetric homology in low degrees, the Sym
// complexes, chessboard complexes, DeltaS calculus, and the supporting
// checks, as scriptable subcommands.
//
// Exit codes: 0 success, 2 usage error, 3 input validation error, 4 internal
// verification failure (a failed self-check such as d.d != 0).

#include "symhom/algebra.hpp"
#include "symhom/chessboard.hpp"
#include "symhom/delta_s.hpp"
#include "symhom/hs_low.hpp"
#include "symhom/render.hpp"
#include "symhom/sym_complex.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace symhom;

// --- built-in algebra mini-language -----------------------------------------
//
//   trunc:3,2     Z[t,u]/(t^3, u^2)
//   group:C4      cyclic group ring; products like C2xC2, C3xC2 allowed,
//                 also S3 and Q8 factors
//   quat          the integral quaternions Z[i,j,k]
//   monoid:4,3    cyclic monoid ring Z[M^4_3] (s^4 = s^3)
//   matrix:2      M_2(Z)
//   Z             the integers
//   file:PATH     algebra spec file

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw std::invalid_argument("bad integer '" + tok + "' in " + what);
        }
    }
    if (out.empty()) throw std::invalid_argument(what + ": empty parameter list");
    return out;
}

std::vector<std::vector<int>> parse_group_token(const std::string& tok,
                                                std::vector<std::string>* labels) {
    if (tok == "Q8") {
        if (labels) *labels = alg::quaternion_group_labels();
        return alg::quaternion_group_table();
    }
    if (tok.size() >= 2 && tok[0] == 'C') {
        int n = std::stoi(tok.substr(1));
        if (n < 1) throw std::invalid_argument("group: order must be >= 1");
        return alg::cyclic_group_table(n);
    }
    if (tok.size() >= 2 && tok[0] == 'S') {
        int n = std::stoi(tok.substr(1));
        if (n < 1 || n > 5) throw std::invalid_argument("group: S" + std::to_string(n) +
                                                        " not supported (need 1 <= n <= 5)");
        return alg::symmetric_group_table(n);
    }
    throw std::invalid_argument("unknown group '" + tok + "' (use C<n>, S<n>, Q8, products with x)");
}

alg::AlgebraZ make_group_algebra(const std::string& spec) {
    std::vector<std::string> toks;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, 'x')) toks.push_back(tok);
    if (toks.empty()) throw std::invalid_argument("group: empty specification");
    std::vector<std::string> labels;
    auto table = parse_group_token(toks[0], toks.size() == 1 ? &labels : nullptr);
    for (std::size_t i = 1; i < toks.size(); ++i)
        table = alg::product_group_table(table, parse_group_token(toks[i], nullptr));
    return alg::group_ring(table, labels);
}

alg::AlgebraZ load_algebra(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "trunc") return alg::truncated_polynomial(parse_int_list(rest, "trunc"));
    if (kind == "group") return make_group_algebra(rest);
    if (kind == "quat") return alg::quaternion_algebra();
    if (kind == "Z") return alg::integers();
    if (kind == "monoid") {
        auto pq = parse_int_list(rest, "monoid");
        if (pq.size() != 2) throw std::invalid_argument("monoid: expected monoid:p,q");
        return alg::cyclic_monoid_ring(pq[0], pq[1]);
    }
    if (kind == "matrix") {
        auto n = parse_int_list(rest, "matrix");
        if (n.size() != 1) throw std::invalid_argument("matrix: expected matrix:n");
        return alg::matrix_ring(alg::integers(), n[0]);
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open algebra spec file '" + rest + "'");
        return alg::parse_spec(in);
    }
    throw std::invalid_argument("unknown algebra spec '" + spec + "'");
}

// --- output helpers ----------------------------------------------------------

bool machine_mode = false;

void print_homology(const std::string& name, const linalg::HomologyResult& h) {
    if (machine_mode)
        std::cout << render::homology_machine(h) << "\n";
    else
        std::cout << name << " = " << render::homology_human(h) << "   "
                  << render::homology_machine(h) << "\n";
}

std::string element_string(const alg::AlgebraZ& a, const alg::Element& e) {
    std::string s;
    for (int i = 0; i < a.dim(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (e[i] != 1) s += e[i].str() + "*";
        s += a.labels()[i];
    }
    return s.empty() ? "0" : s;
}

alg::Element parse_element(const alg::AlgebraZ& a, const std::string& tok) {
    if (tok.size() > 1 && tok[0] == 'e') {
        bool digits = std::all_of(tok.begin() + 1, tok.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (digits) {
            int i = std::stoi(tok.substr(1));
            if (i < 0 || i >= a.dim())
                throw std::invalid_argument("basis index " + tok + " out of range");
            return a.basis_element(i);
        }
    }
    int i = a.label_index(tok);
    if (i < 0) throw std::invalid_argument("unknown basis label '" + tok + "'");
    return a.basis_element(i);
}

void check_memory_budget(int p) {
    // size estimate calibrated against measured peaks (p = 6 runs at ~310 MB);
    // elimination fill dominates the raw generator storage by a wide margin
    Int gens = 0;
    for (int i = 0; i <= p; ++i) gens += sym::lah_dimension(p, i);
    Int est_mb = gens * (p + 2) / 1000;
    const char* env = std::getenv("SYMHOM_MEMORY_LIMIT_MB");
    if (env) {
        Int limit(env);
        if (est_mb > limit)
            throw std::invalid_argument("estimated " + est_mb.str() + " MB exceeds SYMHOM_MEMORY_LIMIT_MB=" +
                                        limit.str());
    }
    if (!machine_mode && p >= 6)
        std::cout << "# note: p=" << p << " builds " << gens
                  << " generators (rough estimate " << est_mb << " MB); this can take minutes\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of symmetric homology of unital algebras in low degrees,\n"
                 "the homology of the Sym complexes / cycle-free chessboard complexes, and the\n"
                 "supporting DeltaS-category calculus, all over the integers."};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags after the subcommand
    app.add_flag("--machine", machine_mode, "machine-readable output only");
    app.footer("Homology groups print as 'Z^b + Z/d1 + ...' plus the machine list\n"
               "[d1,d2,...,0,..,0] (torsion divisors in chain order, one 0 per free factor).\n"
               "Set SYMHOM_MEMORY_LIMIT_MB to refuse large-p Sym runs above a budget.\n"
               "Exit codes: 0 ok, 2 usage, 3 invalid input, 4 internal verification failure.");

    // enumerate
    auto* c_enum = app.add_subcommand(
        "enumerate", "List or count the DeltaS morphisms [n] -> [m] in tensor notation");
    int en_n = 0, en_m = 0;
    bool en_epi = false, en_mono = false, en_iso = false, en_count = false;
    c_enum->add_option("n", en_n, "source rank")->required();
    c_enum->add_option("m", en_m, "target rank")->required();
    c_enum->add_flag("--epi", en_epi, "only epimorphisms (no empty block)");
    c_enum->add_flag("--mono", en_mono, "only monomorphisms (blocks of size <= 1)");
    c_enum->add_flag("--iso", en_iso, "only isomorphisms");
    c_enum->add_flag("--count-only", en_count, "print only the count");

    // compose
    auto* c_comp = app.add_subcommand(
        "compose", "Compose two DeltaS morphisms (outer inner) by tensor substitution");
    std::string comp_f, comp_g;
    c_comp->add_option("outer", comp_f, "outer morphism, e.g. [[],[3,0,2],[1]]")->required();
    c_comp->add_option("inner", comp_g, "inner morphism")->required();

    // act
    auto* c_act = app.add_subcommand(
        "act", "Act by a DeltaS morphism on a simple tensor (the symmetric bar construction)");
    std::string act_f, act_tensor, act_alg;
    c_act->add_option("morphism", act_f, "morphism in tensor notation")->required();
    c_act->add_option("tensor", act_tensor, "comma-separated factors (basis labels or e<i>)")
        ->required();
    c_act->add_option("--algebra", act_alg, "algebra spec")->required();

    // hs
    auto* c_hs = app.add_subcommand(
        "hs", "Symmetric homology HS_0 / HS_1 of a unital algebra over Z");
    std::string hs_alg, hs_layer, hs_dump_dir;
    int hs_degree = -1;
    c_hs->add_option("--algebra", hs_alg, "algebra spec")->required();
    c_hs->add_option("--degree", hs_degree, "0 or 1 (default: both)");
    c_hs->add_option("--layer", hs_layer, "restrict to one layer of the grading monoid");
    c_hs->add_option("--dump", hs_dump_dir, "write boundary matrices in triplet format to DIR");

    // layers
    auto* c_layers = app.add_subcommand(
        "layers", "Layered symmetric homology: one summand per element of the grading monoid");
    std::string layers_alg;
    int layers_degree = -1;
    c_layers->add_option("--algebra", layers_alg, "algebra spec (graded, commutative monoid)")
        ->required();
    c_layers->add_option("--degree", layers_degree, "0 or 1 (default: both)");

    // poly-layers
    auto* c_poly = app.add_subcommand(
        "poly-layers", "HS_1(Z[t])_{t^m} for m = 0..M via cyclic monoid rings");
    int poly_max = 10;
    c_poly->add_option("--max-m", poly_max, "largest layer exponent m")->required();

    // sym
    auto* c_sym = app.add_subcommand(
        "sym", "Poincare polynomial and torsion report of the complex Sym^(p) of DeltaS\n"
               "epimorphisms out of [p] modulo the graded sign relation");
    int sym_p = 0;
    bool sym_large = false;
    c_sym->add_option("--p", sym_p, "the rank p")->required();
    c_sym->add_flag("--large-p", sym_large, "allow p >= 6 (heavy; see memory note)");

    // chess
    auto* c_chess = app.add_subcommand(
        "chess", "The augmented cycle-free chessboard complex Omega_n^+ (suspended): "
                 "dimensions, d.d = 0, homology");
    int chess_n = 0;
    c_chess->add_option("--n", chess_n, "board size")->required();

    // omega-check
    auto* c_omega = app.add_subcommand(
        "omega-check", "Verify the chain isomorphism omega from the suspended chessboard\n"
                       "complex Omega_{p+1}^+ onto Sym^(p)");
    int omega_p = 0;
    c_omega->add_option("--p", omega_p, "the rank p")->required();

    // hc-map
    auto* c_hc = app.add_subcommand(
        "hc-map", "The map HC_1 -> HS_1 induced by gamma(a@b) = a@b@1, with chain-map\n"
                  "verification and the image subgroup");
    std::string hc_alg;
    c_hc->add_option("--algebra", hc_alg, "algebra spec")->required();

    // resolution-check
    auto* c_res = app.add_subcommand(
        "resolution-check", "Exactness of the partial resolution stages over Mor([n],-) by rank\n"
                            "arithmetic (eps, rho, (alpha,beta))");
    int res_n = 0;
    c_res->add_option("--n", res_n, "source rank n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_enum) {
            auto filter = deltas::MorphismFilter::all;
            if (en_epi + en_mono + en_iso > 1)
                throw std::invalid_argument("choose at most one of --epi/--mono/--iso");
            if (en_epi) filter = deltas::MorphismFilter::epi;
            if (en_mono) filter = deltas::MorphismFilter::mono;
            if (en_iso) filter = deltas::MorphismFilter::iso;
            if (en_count && filter == deltas::MorphismFilter::all) {
                std::cout << deltas::count(en_n, en_m) << "\n";
                return 0;
            }
            auto ms = deltas::enumerate(en_n, en_m, filter);
            if (en_count) {
                std::cout << ms.size() << "\n";
                return 0;
            }
            for (const auto& f : ms) std::cout << deltas::to_string(f) << "\n";
            if (!machine_mode) std::cout << "# " << ms.size() << " morphisms\n";
        } else if (*c_comp) {
            auto outer = deltas::parse_morphism(comp_f);
            auto inner = deltas::parse_morphism(comp_g);
            std::cout << deltas::to_string(deltas::compose(outer, inner)) << "\n";
        } else if (*c_act) {
            auto a = load_algebra(act_alg);
            auto f = deltas::parse_morphism(act_f);
            alg::SimpleTensor t;
            std::stringstream ss(act_tensor);
            std::string tok;
            while (std::getline(ss, tok, ',')) t.factors.push_back(parse_element(a, tok));
            auto out = alg::act(a, f, t);
            std::string sep;
            for (const auto& fac : out.factors) {
                std::cout << sep << "(" << element_string(a, fac) << ")";
                sep = " @ ";
            }
            std::cout << "\n";
        } else if (*c_hs) {
            auto a = load_algebra(hs_alg);
            if (!hs_dump_dir.empty()) {
                auto pc = hs::partial_complex(a);
                std::filesystem::create_directories(hs_dump_dir);
                std::ofstream d1(hs_dump_dir + "/boundary1.txt"), d2(hs_dump_dir + "/boundary2.txt");
                pc.boundary1.write_triplets(d1);
                pc.boundary2.write_triplets(d2);
                if (!machine_mode)
                    std::cout << "# wrote boundary1.txt, boundary2.txt to " << hs_dump_dir << "\n";
            }
            auto run = [&](int deg) {
                auto h = hs_layer.empty() ? hs::symmetric_homology(a, deg) : hs::hs_layered(a, hs_layer, deg);
                std::string name = "HS_" + std::to_string(deg);
                if (!hs_layer.empty()) name += "(layer " + hs_layer + ")";
                print_homology(name, h);
            };
            if (hs_degree == -1) {
                run(0);
                run(1);
            } else {
                run(hs_degree);
            }
        } else if (*c_layers) {
            auto a = load_algebra(layers_alg);
            for (const auto& label : hs::layer_labels(a)) {
                auto run = [&](int deg) {
                    print_homology("HS_" + std::to_string(deg) + "(layer " + label + ")",
                                   hs::hs_layered(a, label, deg));
                };
                if (layers_degree == -1) {
                    run(0);
                    run(1);
                } else {
                    run(layers_degree);
                }
            }
        } else if (*c_poly) {
            if (poly_max < 0) throw std::invalid_argument("--max-m must be >= 0");
            for (int m = 0; m <= poly_max; ++m) {
                auto h = hs::hs1_polynomial_layer(m);
                if (machine_mode)
                    std::cout << render::homology_machine(h) << "\n";
                else
                    std::cout << "HS_1(Z[t])_{t^" << m << "} : " << render::homology_machine(h)
                              << "\n";
            }
        } else if (*c_sym) {
            if (sym_p < 0) throw std::invalid_argument("--p must be >= 0");
            if (sym_p >= 6 && !sym_large)
                throw std::invalid_argument("p >= 6 is expensive; pass --large-p to confirm");
            check_memory_budget(sym_p);
            auto h = sym::homology(sym_p);
            if (machine_mode) {
                std::cout << render::poincare_machine(h.poincare) << "\n";
            } else {
                std::cout << render::poincare_human(h.poincare) << "\n";
                std::cout << "# machine: " << render::poincare_machine(h.poincare) << "\n";
            }
            if (!h.torsion_free) {
                std::cerr << "internal verification failure: torsion in H_*(Sym^(p)):\n";
                for (int i = 0; i <= sym_p; ++i)
                    if (!h.by_degree[i].torsion.empty())
                        std::cerr << "  degree " << i << ": "
                                  << render::homology_machine(h.by_degree[i]) << "\n";
                return 4;
            }
            if (!machine_mode) std::cout << "# torsion-free in every degree\n";
        } else if (*c_chess) {
            chess::ChessComplex cc(chess_n);
            std::vector<linalg::SparseIntMatrix> chain;
            for (int k = 1; k <= chess_n - 1; ++k) chain.push_back(cc.boundary_matrix(k));
            bool dd = linalg::verify_complex(chain);
            if (!machine_mode) {
                std::cout << "suspended Omega_" << chess_n << "^+ dimensions:";
                for (int k = 0; k <= chess_n - 1; ++k) std::cout << " " << cc.dimension(k);
                std::cout << "\nd.d = 0: " << (dd ? "yes" : "NO") << "\n";
            }
            if (!dd) {
                std::cerr << "internal verification failure: d.d != 0\n";
                return 4;
            }
            auto h = chess::homology(cc);
            for (std::size_t k = 0; k < h.size(); ++k)
                print_homology("H_" + std::to_string(k), h[k]);
        } else if (*c_omega) {
            auto rep = chess::omega_iso(omega_p);
            bool match = true;
            for (int k = 0; k <= omega_p; ++k)
                match &= rep.chess_homology[k] == rep.sym_homology.by_degree[k];
            if (machine_mode) {
                std::cout << rep.bijective << " " << rep.chain_map << " " << match << "\n";
            } else {
                std::cout << "omega: suspended Omega_" << omega_p + 1 << "^+ -> Sym^(" << omega_p
                          << ")\n";
                std::cout << "degree-wise bijection on generators: " << (rep.bijective ? "yes" : "NO")
                          << "\n";
                std::cout << "chain map (after per-degree sign fix): "
                          << (rep.chain_map ? "yes" : "NO") << "\n";
                std::cout << "homology agrees degree-wise: " << (match ? "yes" : "NO") << "\n";
            }
            if (!(rep.bijective && rep.chain_map && match)) {
                std::cerr << "internal verification failure in omega\n";
                return 4;
            }
        } else if (*c_hc) {
            auto a = load_algebra(hc_alg);
            hs::CyclicComparison cmp(a);
            print_homology("HC_1", cmp.hc1_basis().structure());
            print_homology("HS_1", cmp.hs1_basis().structure());
            if (!machine_mode) {
                std::cout << "gamma_1 chain map: " << (cmp.gamma1_chain_map() ? "yes" : "NO") << "\n";
                std::cout << "gamma_2 chain map: " << (cmp.gamma2_chain_map() ? "yes" : "NO") << "\n";
            }
            if (!cmp.gamma1_chain_map() || !cmp.gamma2_chain_map()) {
                std::cerr << "internal verification failure: gamma is not a chain map\n";
                return 4;
            }
            if (!machine_mode) {
                std::cout << "induced map on generators (columns = HC_1 generators):\n";
                const auto& m = cmp.induced_matrix();
                for (std::size_t r = 0; r < cmp.hs1_basis().orders().size(); ++r) {
                    std::cout << "  [";
                    for (std::size_t c = 0; c < m.size(); ++c)
                        std::cout << (c ? "," : "") << m[c][r];
                    std::cout << "]\n";
                }
            }
            print_homology("image", cmp.image_structure());
        } else if (*c_res) {
            auto st = hs::resolution_stage_matrices(res_n);
            auto ck = hs::check_resolution_stage(st);
            if (!machine_mode) {
                std::cout << "bases: |Mor([n],[0])| = " << st.basis0.size()
                          << ", |Mor([n],[2])| = " << st.basis2.size()
                          << ", |Mor([n],[3])| = " << st.basis3.size() << "\n";
                std::cout << "eps.rho = 0 and rho.(alpha,beta) = 0: "
                          << (ck.products_zero ? "yes" : "NO") << "\n";
                std::cout << "exact at Mor([n],[0]): " << render::homology_machine(ck.at_mor0)
                          << "\n";
                std::cout << "exact at Mor([n],[2]): " << render::homology_machine(ck.at_mor2)
                          << "\n";
            }
            std::cout << (ck.exact() ? "exact" : "NOT EXACT") << "\n";
            if (!ck.exact()) {
                std::cerr << "internal verification failure: resolution stage not exact\n";
                return 4;
            }
        }
    } catch (const verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
