#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "matherlift/builtin.hpp"
#include "matherlift/ihcone.hpp"
#include "matherlift/verdier.hpp"

namespace matherlift {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// polynomials and ideals:
//   { "vars": ["z0",...], "terms": [ { "c": "num/den", "e": [e0,...] } ] }
// ---------------------------------------------------------------------------

inline Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["c"] = rational_to_string(c);
        t["e"] = e;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MultiPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw parse_error("polynomial JSON needs 'vars' and 'terms'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly p = MultiPoly::zero(vars);
    for (const Json& t : j.at("terms")) {
        Exponents e = t.at("e").get<Exponents>();
        if (e.size() != vars.size())
            throw parse_error("polynomial JSON: exponent tuple length mismatch");
        p.add_term(e, parse_rational(t.at("c").get<std::string>()));
    }
    return p;
}

inline Json ideal_to_json(const Ideal& ideal) {
    Json arr = Json::array();
    for (const MultiPoly& g : ideal.gens) arr.push_back(poly_to_json(g));
    return arr;
}

inline Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Flags serialize as the list of stages 1..m, each a row list.
inline Json flag_to_json(const Flag& f) {
    Json stages = Json::array();
    for (std::size_t j = 1; j <= f.m; ++j) stages.push_back(matrix_to_json(f.stage(j)));
    return stages;
}

inline Json graded_class_to_json(const GradedClass& c) {
    Json j = Json::object();
    for (const auto& [deg, part] : c.parts()) {
        Json inner = Json::object();
        for (std::size_t i = 0; i < part.gens.size(); ++i)
            inner[part.gens[i]] = rational_to_string(part.coeff[i]);
        j[std::to_string(deg)] = std::move(inner);
    }
    return j;
}

inline Json betti_to_json(const GradedBetti& b) { return Json(b.betti); }

inline Json chain_to_json(const PolarChain& chain, std::uint64_t flag_seed) {
    Json j;
    Json steps = Json::array();
    for (const PolarStep& s : chain.steps) {
        Json step;
        step["i"] = s.i;
        step["dim"] = s.proj_dimension;
        step["deg"] = s.degree;
        step["generators"] = ideal_to_json(s.ideal);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["first_empty"] = chain.first_empty <= chain.hypersurface.n
                           ? Json(chain.first_empty)
                           : Json(nullptr);
    j["flag_seed"] = flag_seed;
    j["flag"] = flag_to_json(chain.flag);
    return j;
}

inline Json verdier_report_to_json(const VerdierReport& r) {
    Json j;
    j["N1"] = {{"ideal", ideal_to_json(r.n1_ideal)},
               {"dim", r.chain.steps[1].proj_dimension},
               {"deg", r.chain.steps[1].degree},
               {"class", graded_class_to_json(r.n1_class)}};
    j["N2"] = {{"ideal", ideal_to_json(r.n2_ideal)},
               {"dim", r.chain.steps[2].proj_dimension},
               {"deg", r.chain.steps[2].degree},
               {"class", graded_class_to_json(r.n2_class)}};
    j["K"] = {{"class_in_N1", graded_class_to_json(r.n2_in_n1)},
              {"N2_dot_K", rational_to_string(r.n2_dot_k)},
              {"K_dot_K", rational_to_string(r.k_dot_k)}};
    j["p1"] = graded_class_to_json(GradedClass::single(4, "p1", 1));
    j["p2"] = graded_class_to_json(GradedClass::single(4, "p2", 1));
    j["d1"] = graded_class_to_json(GradedClass::single(2, "d1", 1));
    j["d2"] = graded_class_to_json(GradedClass::single(2, "d2", 1));
    j["c_hat"] = graded_class_to_json(r.c_hat);
    j["csm"] = graded_class_to_json(r.csm);
    j["c_X1"] = graded_class_to_json(r.c_x1);
    j["c_X2"] = graded_class_to_json(r.c_x2);
    j["N2_tilde"] = graded_class_to_json(r.n2_tilde);
    j["IH_betti"] = betti_to_json(r.ih_betti);
    j["N1_rational_homology_manifold"] = r.n1_is_rational_homology_manifold;
    return j;
}

// ---------------------------------------------------------------------------
// hypersurface inputs (files or embedded built-ins)
// ---------------------------------------------------------------------------

inline Hypersurface hypersurface_from_json(const Json& j) {
    return Hypersurface::from_poly(poly_from_json(j));
}

/// Accepts a path, or "builtin:<name>" for an embedded input.
inline Hypersurface load_hypersurface(const std::string& spec) {
    const std::string prefix = "builtin:";
    std::string text;
    if (spec.rfind(prefix, 0) == 0) {
        const std::string name = spec.substr(prefix.size());
        for (const builtin::BuiltinInput& input : builtin::builtin_inputs())
            if (input.name == name) { text = input.json; break; }
        if (text.empty())
            throw parse_error("unknown builtin input '" + name + "'");
    } else {
        std::ifstream in(spec);
        if (!in) throw parse_error("cannot open input file '" + spec + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw parse_error("bad JSON in '" + spec + "': " + e.what());
    }
    return hypersurface_from_json(j);
}

} // namespace matherlift
