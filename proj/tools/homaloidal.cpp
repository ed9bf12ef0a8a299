#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "homaloidal/covar.hpp"
#include "homaloidal/mldeg.hpp"
#include "homaloidal/pd.hpp"
#include "homaloidal/sdr.hpp"

using namespace homaloidal;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json json_file(const std::string& path) { return json::parse(slurp(path)); }

// --poly accepts either an inline expression or a path to a file holding an
// expression or polynomial JSON.
MPoly load_poly(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::string text = slurp(arg);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (text[first] == '{' || text[first] == '"'))
            return MPoly::from_json(json::parse(text));
        return MPoly::parse(text);
    }
    return MPoly::parse(arg);
}

unsigned resolve_seed(unsigned seed, bool seed_given) {
    if (seed_given) return seed;
    if (const char* env = std::getenv("HOMALOIDAL_SEED")) return std::stoul(env);
    return 0;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json report_json(const SdrReport& r) {
    return {{"pass", r.pass},
            {"symbolic", r.symbolic},
            {"max_deviation", r.max_deviation},
            {"trials", r.trials},
            {"detail", r.detail}};
}

json pd_report_json(const PDReport& r) {
    json j{{"verdict", pd_verdict_name(r.verdict)},
           {"samples", r.samples},
           {"seed", r.seed}};
    if (r.obstruction) j["obstruction"] = *r.obstruction;
    if (r.witness) {
        json w;
        for (const auto& [v, q] : r.witness->assignment) w[v] = rational_to_string(q);
        j["witness"] = w;
    }
    return j;
}

int cmd_graph(const std::string& file) {
    Graph g = Graph::from_json(json_file(file));
    auto [chordal, peo] = is_chordal(g);
    MLDegreeCertificate cert = ml_degree_certificate(g);
    json out{{"n", g.vertex_count()},
             {"chordal", chordal},
             {"spanning_tree_poly", spanning_tree_poly(g).str()},
             {"certificate", cert.note}};
    if (peo) out["elimination_order"] = *peo;
    if (cert.ml_degree) out["ml_degree"] = *cert.ml_degree;
    emit(out);
    return 0;
}

int cmd_mldeg_cycle(int n, bool verify) {
    json out{{"n", n}, {"ml_degree", eulerian_count(n)}};
    auto fiber = cycle_fiber(n);
    json fj = json::array();
    for (const auto& pt : fiber) {
        json e{{"J", json::array()},
               {"a", rational_to_string(pt.a)},
               {"b", rational_to_string(pt.b)}};
        for (int v : pt.J) e["J"].push_back(v);
        fj.push_back(e);
    }
    out["fiber"] = fj;
    if (verify) {
        long long deg = ml_degree_cycle(n);  // throws VerificationFailed on mismatch
        out["all_verified"] = (deg == eulerian_count(n));
    }
    emit(out);
    return 0;
}

int cmd_covar(const std::string& file, int k, int samples, unsigned seed) {
    Graph g = Graph::from_json(json_file(file));
    auto gens = rk_generators(g, k);
    auto minors = rank_constraint_minors(g, k);
    std::vector<ModelSample> pts;
    pts.reserve(samples);
    for (int s = 0; s < samples; ++s)
        pts.push_back(sample_model_point(g, k, seed + static_cast<unsigned>(s)));
    std::vector<MPoly> all = gens;
    all.insert(all.end(), minors.begin(), minors.end());
    VanishingReport rep = verify_vanishing(all, pts);

    json out{{"k", k}, {"samples", samples}, {"seed", seed}};
    json gj = json::array(), mj = json::array();
    for (const auto& p : gens) gj.push_back(p.str());
    for (const auto& p : minors) mj.push_back(p.str());
    out["generators"] = gj;
    out["rank_constraint_minors"] = mj;
    out["all_zero"] = rep.all_zero;
    out["note"] = rep.note;
    if (!rep.violations.empty()) {
        json vj = json::array();
        for (auto [pi, si] : rep.violations) vj.push_back({pi, si});
        out["violations"] = vj;
    }
    emit(out);
    return rep.all_zero ? 0 : 2;
}

int cmd_sdr_quad(const std::string& poly, int trials, unsigned seed, double tol) {
    MPoly q = load_poly(poly);
    QuadraticSdr s = quadratic_sdr(q);
    SdrReport rep = verify_sdr(s.pencil, q, trials, seed, tol);
    json out{{"pencil", pencil_to_json(s.pencil)},
             {"rank", s.rank},
             {"rank_deficient", s.rank_deficient},
             {"lambdas", s.lambdas},
             {"verify", report_json(rep)},
             {"seed", seed}};
    emit(out);
    return rep.pass ? 0 : 2;
}

int cmd_sdr_powersum(const std::string& file, int trials, unsigned seed) {
    PowerSumForm p = PowerSumForm::from_json(json_file(file));
    PencilQ pencil = power_sum_sdr(p);
    SdrReport rep = verify_sdr(pencil, p.expand(), trials, seed);
    SizeBound bound = size_bound(p.degree, static_cast<int>(p.terms.size()));
    json out{{"pencil", pencil_to_json(pencil)},
             {"size", pencil.size},
             {"bound_general", bound.general},
             {"verify", report_json(rep)},
             {"seed", seed}};
    if (bound.power_of_two) out["bound_power_of_two"] = *bound.power_of_two;
    emit(out);
    return rep.pass ? 0 : 2;
}

int cmd_sdr_product(const std::string& a, const std::string& b) {
    PencilQ pa = pencil_q_from_json(json_file(a));
    PencilQ pb = pencil_q_from_json(json_file(b));
    emit(pencil_to_json(product_sdr(pa, pb)));
    return 0;
}

int cmd_sdr_verify(const std::string& pencil_file, const std::string& poly, int trials,
                   unsigned seed, double tol) {
    MPoly p = load_poly(poly);
    json pj = json_file(pencil_file);
    SdrReport rep = pencil_json_is_exact(pj)
                        ? verify_sdr(pencil_q_from_json(pj), p, trials, seed)
                        : verify_sdr(pencil_d_from_json(pj), p, trials, seed, tol);
    json out{{"verify", report_json(rep)}, {"seed", seed}};
    emit(out);
    return rep.pass ? 0 : 2;
}

int cmd_sdr_bound(int d, int r) {
    SizeBound b = size_bound(d, r);
    json out{{"d", d}, {"r", r}, {"m", b.m}, {"general", b.general}};
    if (b.power_of_two) out["power_of_two"] = *b.power_of_two;
    emit(out);
    return 0;
}

int cmd_pd(const std::string& pencil_file, int samples, unsigned seed,
           const std::string& box) {
    PencilQ p = pencil_q_from_json(json_file(pencil_file));
    PDReport rep = pd_feasibility_sample(p, samples, seed, rational_from_string(box));
    emit(pd_report_json(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spanning-tree models, ML-degree certificates and "
                 "symmetric determinantal representations"};
    app.require_subcommand(1);

    std::string graph_file, pencil_file, pencil_file2, poly_arg, psum_file, box = "10";
    int n = 0, k = 1, d = 1, r = 1, samples = 100, trials = 50;
    unsigned seed = 0;
    bool verify = false;
    double tol = 1e-8;

    auto* sc_graph = app.add_subcommand("graph", "chordality, spanning-tree polynomial, "
                                                 "ML-degree certificate");
    sc_graph->add_option("--file", graph_file, "graph JSON")->required();

    auto* sc_mldeg = app.add_subcommand("mldeg", "ML degree tools");
    auto* sc_cycle = sc_mldeg->add_subcommand("cycle", "cycle-graph ML degree and fiber");
    sc_cycle->add_option("--n", n, "cycle length (>= 3)")->required();
    sc_cycle->add_flag("--verify", verify, "run exact fiber and Hessian checks");

    auto* sc_covar = app.add_subcommand("covar", "covariance-model generators");
    auto* sc_gens = sc_covar->add_subcommand("generators", "R_k generators and "
                                                           "vanishing verification");
    sc_gens->add_option("--graph", graph_file)->required();
    sc_gens->add_option("--k", k)->required();
    sc_gens->add_option("--samples", samples);
    auto* covar_seed = sc_gens->add_option("--seed", seed);

    auto* sc_sdr = app.add_subcommand("sdr", "symmetric determinantal representations");
    auto* sc_quad = sc_sdr->add_subcommand("quad", "bordered SDR of a quadratic");
    sc_quad->add_option("--poly", poly_arg)->required();
    sc_quad->add_option("--trials", trials);
    sc_quad->add_option("--tol", tol);
    auto* quad_seed = sc_quad->add_option("--seed", seed);
    auto* sc_psum = sc_sdr->add_subcommand("powersum", "SDR of a power-sum form");
    sc_psum->add_option("--file", psum_file)->required();
    sc_psum->add_option("--trials", trials);
    auto* psum_seed = sc_psum->add_option("--seed", seed);
    auto* sc_prod = sc_sdr->add_subcommand("product", "block-diagonal product pencil");
    sc_prod->add_option("--pencil", pencil_file)->required();
    sc_prod->add_option("--pencil2", pencil_file2)->required();
    auto* sc_verify = sc_sdr->add_subcommand("verify", "check det(pencil) against a "
                                                       "polynomial");
    sc_verify->add_option("--pencil", pencil_file)->required();
    sc_verify->add_option("--poly", poly_arg)->required();
    sc_verify->add_option("--trials", trials);
    sc_verify->add_option("--tol", tol);
    auto* verify_seed = sc_verify->add_option("--seed", seed);
    auto* sc_bound = sc_sdr->add_subcommand("bound", "size bounds for the pipeline");
    sc_bound->add_option("--d", d)->required();
    sc_bound->add_option("--r", r)->required();

    auto* sc_pd = app.add_subcommand("pd", "positive-definiteness analysis");
    auto* sc_check = sc_pd->add_subcommand("check", "obstruction scan and feasibility "
                                                    "sampling");
    sc_check->add_option("--pencil", pencil_file)->required();
    sc_check->add_option("--samples", samples);
    sc_check->add_option("--box", box);
    auto* pd_seed = sc_check->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sc_graph) return cmd_graph(graph_file);
        if (*sc_cycle) return cmd_mldeg_cycle(n, verify);
        if (*sc_gens)
            return cmd_covar(graph_file, k, samples, resolve_seed(seed, !covar_seed->empty()));
        if (*sc_quad)
            return cmd_sdr_quad(poly_arg, trials, resolve_seed(seed, !quad_seed->empty()), tol);
        if (*sc_psum)
            return cmd_sdr_powersum(psum_file, trials, resolve_seed(seed, !psum_seed->empty()));
        if (*sc_prod) return cmd_sdr_product(pencil_file, pencil_file2);
        if (*sc_verify)
            return cmd_sdr_verify(pencil_file, poly_arg, trials,
                                  resolve_seed(seed, !verify_seed->empty()), tol);
        if (*sc_bound) return cmd_sdr_bound(d, r);
        if (*sc_check)
            return cmd_pd(pencil_file, samples, resolve_seed(seed, !pd_seed->empty()), box);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
