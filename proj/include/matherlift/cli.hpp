#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matherlift/json_io.hpp"

namespace matherlift {
namespace cli {

// exit-code contract: 0 success, 1 input error, 2 genericity/degeneracy,
// 3 property or scenario violation
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitViolation = 3;

struct RunConfig {
    std::string input;
    std::uint64_t seed = 0xC0FFEE;
    std::string format = "json";
    std::size_t truncation = kDefaultTruncation;
    bool verbose = false;
    std::size_t samples = 200;
};

namespace detail {

inline void emit_table_row(std::ostream& out, const std::string& label, const std::string& value) {
    out << std::left << std::setw(24) << label << value << "\n";
}

inline void emit_class_table(std::ostream& out, const std::string& label, const GradedClass& c) {
    std::ostringstream line;
    bool first = true;
    for (const auto& [key, value] : c.support()) {
        if (!first) line << " + ";
        first = false;
        if (value != 1) line << rational_to_string(value) << "*";
        line << key.second;
    }
    if (first) line << "0";
    emit_table_row(out, label, line.str());
}

inline void emit(std::ostream& out, const RunConfig& cfg, const Json& j,
                 const std::vector<std::pair<std::string, std::string>>& table_rows) {
    if (cfg.format == "table") {
        for (const auto& [label, value] : table_rows) emit_table_row(out, label, value);
    } else {
        out << j.dump(2) << "\n";
    }
}

inline std::string profile_string(const PolarChain& chain) {
    std::ostringstream s;
    for (const PolarStep& step : chain.steps)
        s << "N^" << step.i << ": dim " << step.proj_dimension << ", deg " << step.degree << "; ";
    if (!chain.complete()) s << "N^" << chain.first_empty << " empty";
    return s.str();
}

} // namespace detail

inline int cmd_polar(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Hypersurface h = load_hypersurface(cfg.input);
    if (cfg.verbose) err << "certifying a good flag for seed " << cfg.seed << "\n";
    GoodFlagCertificate cert = certify_good_flag(h, cfg.seed);
    Json j = chain_to_json(cert.chain, cfg.seed);
    detail::emit(out, cfg, j, {{"input", cfg.input},
                               {"seed", std::to_string(cfg.seed)},
                               {"chain", detail::profile_string(cert.chain)}});
    return kExitOk;
}

inline int cmd_chern(const RunConfig& cfg, const std::string& builtin_name, std::ostream& out,
                     std::ostream& err) {
    Json j;
    std::vector<std::pair<std::string, std::string>> rows;
    if (builtin_name == "verdier" || builtin_name == "quadric_cone") {
        VerdierReport r = verdier_scenario();
        j["chain"] = chain_to_json(r.chain, cfg.seed);
        j["mather"] = graded_class_to_json(r.c_hat);
        j["csm"] = graded_class_to_json(r.csm);
        rows = {{"chain", detail::profile_string(r.chain)}};
    } else if (builtin_name == "node") {
        Hypersurface h = builtin::node_curve();
        GoodFlagCertificate cert = certify_good_flag(h, cfg.seed);
        std::vector<GradedClass> lifted =
            canonical_lift(cert.chain, {}, builtin::node_table());
        GradedClass mather = mather_from_polar(lifted, h.n, builtin::node_table());
        j["chain"] = chain_to_json(cert.chain, cfg.seed);
        j["mather"] = graded_class_to_json(mather);
        rows = {{"chain", detail::profile_string(cert.chain)}};
    } else if (builtin_name == "cusp") {
        Hypersurface h = builtin::cusp_curve();
        GoodFlagCertificate cert = certify_good_flag(h, cfg.seed);
        std::vector<ChainLiftStage> stages = builtin::curve_lift_stage(
            builtin::cusp_table(), Rational(cert.chain.steps.at(1).degree));
        std::vector<GradedClass> lifted =
            canonical_lift(cert.chain, stages, builtin::cusp_table());
        GradedClass mather = mather_from_polar(lifted, h.n, builtin::cusp_table());
        const std::size_t n_w = jacobian_multiplicity(builtin::cusp_branch(cfg.truncation), cfg.seed);
        const Rational eu = eu_from_jacobian_multiplicity(n_w);
        GradedClass csm = csm_isolated(mather, {{"pt", eu}});
        j["chain"] = chain_to_json(cert.chain, cfg.seed);
        j["mather"] = graded_class_to_json(mather);
        j["jacobian_multiplicity"] = n_w;
        j["euler_obstruction"] = rational_to_string(eu);
        j["csm"] = graded_class_to_json(csm);
        rows = {{"chain", detail::profile_string(cert.chain)},
                {"jacobian multiplicity", std::to_string(n_w)}};
        if (cfg.verbose) err << "cusp Euler obstruction " << rational_to_string(eu) << "\n";
    } else {
        throw parse_error("chern: unknown builtin '" + builtin_name +
                          "' (use verdier, node, or cusp)");
    }
    detail::emit(out, cfg, j, rows);
    return kExitOk;
}

inline int cmd_cone_ih(const RunConfig& cfg, const std::vector<std::size_t>& base,
                       std::size_t middle_rank, std::size_t a1_degree, std::ostream& out,
                       std::ostream&) {
    Json j;
    std::vector<std::pair<std::string, std::string>> rows;
    if (a1_degree > 0) {
        const std::size_t b1 = (a1_degree - 1) * (a1_degree - 2);
        GradedBetti link = a1_link_betti(a1_degree, 1, b1, 1);
        const bool rhm = is_rational_homology_manifold_a_d(a1_degree);
        j["link"] = betti_to_json(link);
        j["rational_homology_manifold"] = rhm;
        std::ostringstream b;
        for (std::size_t v : link.betti) b << v << " ";
        rows = {{"link Betti", b.str()}, {"rational homology manifold", rhm ? "yes" : "no"}};
    } else {
        GradedBetti base_betti{base};
        if (base.empty()) throw parse_error("cone-ih: provide --base or --a1-degree");
        ConeInput input{base_betti, base.size() - 1, middle_rank};
        GradedBetti ih = cone_ih_betti(input);
        GradedBetti h = thom_homology(base_betti);
        j["base"] = betti_to_json(base_betti);
        j["homology"] = betti_to_json(h);
        j["ih"] = betti_to_json(ih);
        std::ostringstream hs, ihs;
        for (std::size_t v : h.betti) hs << v << " ";
        for (std::size_t v : ih.betti) ihs << v << " ";
        rows = {{"H", hs.str()}, {"IH", ihs.str()}};
    }
    detail::emit(out, cfg, j, rows);
    return kExitOk;
}

/// Sampled checks of the classical Schubert-variety properties on G(2,4)
/// and G(2,5): downward nesting of memberships, regular-stratum boundary
/// behavior, the two extreme cases, and the regular-overlap witnesses.
inline int cmd_schubert_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::size_t checked = 0, violations = 0, witnesses = 0;
    std::vector<std::pair<std::size_t, std::size_t>> spaces{{2, 4}, {2, 5}};
    std::uint64_t draw = 0;
    for (const auto& [n, m] : spaces) {
        for (std::size_t sample = 0; sample < cfg.samples; ++sample) {
            const std::uint64_t s = derive_seed(cfg.seed, draw++);
            Flag flag = random_flag(m, s);
            GrassmannPoint w = random_grassmann_point(n, m, derive_seed(s, 1));
            std::vector<long long> defect(n + 2);
            for (std::size_t i = 0; i <= n + 1; ++i) defect[i] = schubert_defect(w, flag, i);
            for (std::size_t i = 0; i + 1 <= n + 1; ++i) {
                if (defect[i + 1] >= 0 && defect[i] < 0) ++violations;           // nesting
                if (defect[i + 1] >= 0 && defect[i] == 0 && defect[i + 1] != 0)  // boundary
                    ++violations;
            }
            if (defect[0] < 0) ++violations;      // the 0-th variety is everything
            if (defect[n + 1] != -1) ++violations; // the (n+1)-st is empty
            ++checked;
        }
        // witnesses for the regular overlap at every i < n
        for (std::size_t i = 0; i < n; ++i) {
            Flag flag = random_flag(m, derive_seed(cfg.seed, 0xF1A9 + i));
            GrassmannPoint w = regular_overlap_witness(flag, i, n, derive_seed(cfg.seed, i));
            if (schubert_defect(w, flag, i) == 0 && schubert_defect(w, flag, i + 1) == 0)
                ++witnesses;
            else
                ++violations;
        }
    }
    Json j;
    j["samples"] = checked;
    j["witnesses"] = witnesses;
    j["violations"] = violations;
    j["seed"] = cfg.seed;
    detail::emit(out, cfg, j, {{"samples", std::to_string(checked)},
                               {"witnesses", std::to_string(witnesses)},
                               {"violations", std::to_string(violations)}});
    if (violations != 0) {
        err << "schubert-check: " << violations << " violation(s)\n";
        return kExitViolation;
    }
    return kExitOk;
}

inline int cmd_verdier(const RunConfig& cfg, bool corrupt_table, std::ostream& out,
                       std::ostream& err) {
    VerdierOptions options;
    options.corrupt_table = corrupt_table;
    VerdierReport r;
    try {
        r = verdier_scenario(options);
    } catch (const scenario_failure_error& e) {
        err << e.what() << "\n";
        return kExitViolation;
    }
    Json j = verdier_report_to_json(r);
    if (cfg.format == "table") {
        detail::emit_table_row(out, "chain", detail::profile_string(r.chain));
        detail::emit_class_table(out, "[N1]", r.n1_class);
        detail::emit_class_table(out, "[N2]", r.n2_class);
        detail::emit_class_table(out, "c_hat", r.c_hat);
        detail::emit_class_table(out, "csm", r.csm);
        detail::emit_class_table(out, "c(X1)", r.c_x1);
        detail::emit_class_table(out, "c(X2)", r.c_x2);
        detail::emit_class_table(out, "[N2~]", r.n2_tilde);
    } else {
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

inline int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    LiftStep step;
    if (cfg.input.empty()) {
        // default: the classical A_1 step of the Verdier chain
        step = LiftStep{"N1", builtin::verdier_n1_table(), 2, {2}};
    } else {
        std::ifstream in(cfg.input);
        if (!in) throw parse_error("cannot open input file '" + cfg.input + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw parse_error(std::string("bad JSON lift input: ") + e.what());
        }
        IntersectionTable t;
        t.ambient_dim = j.at("ambient_dim").get<int>();
        const int degree = j.at("degree").get<int>();
        std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
        std::vector<std::string> dual = j.at("dual_generators").get<std::vector<std::string>>();
        t.gens[degree] = gens;
        if (2 * t.ambient_dim - degree != degree) t.gens[2 * t.ambient_dim - degree] = dual;
        RationalMatrix p(gens.size(), dual.size());
        const Json& pj = j.at("pairing");
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t c = 0; c < dual.size(); ++c)
                p.at(r, c) = parse_rational(pj.at(r).at(c).get<std::string>());
        t.pairing[degree] = p;
        std::vector<Rational> cycle;
        for (const Json& v : j.at("cycle")) cycle.push_back(parse_rational(v.get<std::string>()));
        step = LiftStep{"input", t, degree, cycle};
    }
    GradedClass lifted = lift_codim1(step);
    Json j;
    j["class"] = graded_class_to_json(lifted);
    std::vector<std::pair<std::string, std::string>> rows;
    if (cfg.format == "table") {
        detail::emit_class_table(out, "lift", lifted);
        return kExitOk;
    }
    detail::emit(out, cfg, j, rows);
    return kExitOk;
}

/// Parses arguments and dispatches; all output goes to `out`, diagnostics
/// to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polar varieties, Chern-Mather classes, and their canonical lifts "
                 "to intersection homology, over exact rationals"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env_seed = std::getenv("MATHERLIFT_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed, nullptr, 0);
        } catch (const std::exception&) {
            err << "ignoring malformed MATHERLIFT_SEED\n";
        }
    }
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "seed for all deterministic draws");
        sub->add_option("--format", cfg.format, "output format: json|table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--truncation", cfg.truncation, "power series truncation");
        sub->add_flag("--verbose", cfg.verbose, "progress diagnostics on stderr");
    };

    CLI::App* polar = app.add_subcommand("polar", "polar chain of a hypersurface");
    polar->add_option("--input", cfg.input, "hypersurface JSON (path or builtin:<name>)")
        ->required();
    add_common(polar);

    std::string chern_builtin = "verdier";
    CLI::App* chern = app.add_subcommand("chern", "Chern-Mather / CSM classes of a builtin");
    chern->add_option("--builtin", chern_builtin, "verdier|node|cusp");
    add_common(chern);

    std::vector<std::size_t> cone_base;
    std::size_t cone_middle = 0, cone_a1 = 0;
    CLI::App* cone = app.add_subcommand("cone-ih", "IH Betti numbers of a projective cone");
    cone->add_option("--base", cone_base, "Betti numbers of the smooth base");
    cone->add_option("--middle-rank", cone_middle, "rank of the middle Poincare map");
    cone->add_option("--a1-degree", cone_a1, "instead: link of the cone over a degree-d plane curve");
    add_common(cone);

    CLI::App* schubert = app.add_subcommand("schubert-check", "sampled Schubert-variety properties");
    schubert->add_option("--samples", cfg.samples, "samples per Grassmannian");
    add_common(schubert);

    bool corrupt_table = false;
    CLI::App* verdier = app.add_subcommand("verdier", "the full Verdier-example computation");
    verdier->add_flag("--corrupt-table", corrupt_table)->group(""); // test hook
    add_common(verdier);

    CLI::App* lift = app.add_subcommand("lift", "solve one codimension-one pairing system");
    lift->add_option("--input", cfg.input, "pairing-system JSON (default: the builtin A_1 step)");
    add_common(lift);

    std::vector<const char*> argv;
    argv.push_back("matherlift");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            std::ostringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (polar->parsed()) return cmd_polar(cfg, out, err);
        if (chern->parsed()) return cmd_chern(cfg, chern_builtin, out, err);
        if (cone->parsed()) return cmd_cone_ih(cfg, cone_base, cone_middle, cone_a1, out, err);
        if (schubert->parsed()) return cmd_schubert_check(cfg, out, err);
        if (verdier->parsed()) return cmd_verdier(cfg, corrupt_table, out, err);
        if (lift->parsed()) return cmd_lift(cfg, out, err);
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const precondition_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const homogeneity_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const variable_context_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const bad_flag_error& e) {
        err << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const degenerate_input_error& e) {
        err << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const genericity_error& e) {
        err << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const property_violation_error& e) {
        err << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const scenario_failure_error& e) {
        err << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const non_unique_lift_error& e) {
        err << "violation: " << e.what() << "\n";
        return kExitViolation;
    }
    err << "no subcommand\n";
    return kExitInput;
}

} // namespace cli
} // namespace matherlift
