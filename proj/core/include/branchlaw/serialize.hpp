// JSON wire formats.  Exact quantities serialise as rational strings
// ("p/q", or "p" when the denominator is 1); floats are emitted as JSON
// numbers.  Key order is fixed, so identical inputs produce identical
// documents.
#pragma once

#include "branchlaw/geometry.hpp"
#include "branchlaw/hahn.hpp"
#include "branchlaw/plancherel.hpp"
#include "branchlaw/radial_ops.hpp"
#include "branchlaw/spectral_transform.hpp"
#include "branchlaw/sym_poly.hpp"

#include <json.hpp>

namespace branchlaw {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

inline Json to_json(const EvenSymPoly& p) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : p.terms())
        terms.push_back({{"partition", lambda.parts()}, {"coeff", to_string(c)}});
    return Json{{"m", p.var_count()}, {"terms", std::move(terms)}};
}

inline EvenSymPoly evensympoly_from_json(const Json& j) {
    EvenSymPoly p(j.at("m").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(Partition(term.at("partition").get<std::vector<int>>()),
                   parse_rational(term.at("coeff").get<std::string>()));
    return p;
}

inline Json to_json(const JacobiCoeffs& c) {
    return Json{{"A", to_string(c.A)},   {"B", to_string(c.B)},   {"C", to_string(c.C)},
                {"Ap", to_string(c.Ap)}, {"Bp", to_string(c.Bp)}, {"Cp", to_string(c.Cp)}};
}

inline Json to_json(const RecurrenceReport& r) {
    Json results = Json::array();
    for (const auto& e : r.results) {
        Json entry{{"k", e.k}, {"pass", e.pass}};
        if (!e.pass) entry["detail"] = e.detail;
        results.push_back(std::move(entry));
    }
    return Json{{"n", r.n}, {"m", r.m}, {"results", std::move(results)}};
}

inline Json to_json(const HahnParams& p) {
    return Json{{"n", p.n},
                {"m", p.m},
                {"a", to_string(p.a)},
                {"b", to_string(p.b)},
                {"c", to_string(p.c)}};
}

inline Json to_json(const Atom& atom) {
    return Json{{"j", atom.j},
                {"y", to_string(atom.y)},
                {"mass", atom.mass},
                {"casimir", to_string(atom.casimir)}};
}

inline Json to_json(const std::vector<Atom>& atoms) {
    Json arr = Json::array();
    for (const auto& a : atoms) arr.push_back(to_json(a));
    return arr;
}

inline Json to_json(const OrthogonalityReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"k_max", r.k_max},
                {"tol", r.tol},
                {"max_diag_rel_err", r.max_diag_rel_err},
                {"max_offdiag_over_scale", r.max_offdiag_over_scale},
                {"pass", r.pass}};
}

inline Json to_json(const UnitarityReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"k_max", r.k_max},
                {"tol", r.tol},
                {"max_gram_deviation", r.max_gram_deviation},
                {"pass", r.pass}};
}

inline Json to_json(const BranchingSummary& s) {
    Json discrete = Json::array();
    for (const auto& atom : s.discrete) {
        Json entry = to_json(atom);
        // spectral parameter i(c+j): record the imaginary part c+j exactly
        entry["spectral_param_imag"] = to_string(s.params.c + atom.j);
        discrete.push_back(std::move(entry));
    }
    return Json{{"n", s.n},
                {"m", s.m},
                {"params", to_json(s.params)},
                {"continuous", Json{{"support", "(0,inf)"},
                                    {"total_mass", s.continuous_total_mass}}},
                {"total_mass", s.total_mass},
                {"discrete", std::move(discrete)}};
}

inline Json to_json(const McResult& r) {
    return Json{{"estimate", r.estimate},
                {"std_error", r.std_error},
                {"N", r.samples},
                {"seed", r.seed}};
}

inline Json to_json(const GroupVerifyReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"trials", r.trials},
                {"tol", r.tol},
                {"seed", r.seed},
                {"max_composition_dev", r.max_composition_dev},
                {"max_chain_rule_dev", r.max_chain_rule_dev},
                {"max_bergman_dev", r.max_bergman_dev},
                {"max_a0_jacobian_dev", r.max_a0_jacobian_dev},
                {"pass", r.pass}};
}

inline Json to_json(const ExpansionVerifyReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"converges", r.converges},
                {"norm_identity_ok", r.norm_identity_ok},
                {"slope", r.slope},
                {"slope_target", r.slope_target},
                {"slope_ok", r.slope_ok},
                {"mc_estimate", r.mc_estimate},
                {"mc_std_error", r.mc_std_error},
                {"series_value", r.series_value},
                {"mc_ok", r.mc_ok},
                {"casimir_ok", r.casimir_ok},
                {"N", r.samples},
                {"seed", r.seed},
                {"pass", r.pass}};
}

}  // namespace branchlaw
