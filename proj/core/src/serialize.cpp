#include "flagbundle/serialize.hpp"

#include "flagbundle/errors.hpp"

namespace flagbundle {

json rational_json(const Rational& q) {
    if (is_integer(q)) return q.numerator();
    return to_string(q);
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (const Rational& q : w.coeffs) a.push_back(rational_json(q));
    return a;
}

json roots_json(const std::vector<Root>& roots) {
    json a = json::array();
    for (const Root& r : roots) a.push_back(r);
    return a;
}

json to_json(const FlagInvariants& f, const ParabolicDatum& p) {
    json minuscule = json::object();
    for (int i : p.complement()) minuscule[std::to_string(i + 1)] = static_cast<bool>(f.minuscule_flags[i]);
    json pairings = json::object();
    for (int i : p.complement()) pairings[std::to_string(i + 1)] = rational_json(f.delta_p_weight.coeffs[i]);
    return {
        {"datum", p.to_string()},
        {"type", p.type().name()},
        {"theta", [&] {
             json t = json::array();
             for (int i : p.theta()) t.push_back(i + 1);
             return t;
         }()},
        {"m_theta", f.m_theta},
        {"complement_pos_roots", roots_json(f.complement_pos_roots)},
        {"delta_p_root", f.delta_p_root},
        {"delta_p_weight", weight_json(f.delta_p_weight)},
        {"delta_p_pairings", pairings},
        {"fano_index", f.fano_index},
        {"picard_rank", f.picard_rank},
        {"minuscule", minuscule},
    };
}

json to_json(const BundleVector& q) { return {{"base", q.base().to_string()}, {"ell", q.ell()}}; }

BundleVector bundle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("ell"))
        throw ParseError("bundle JSON needs \"base\" and \"ell\"", 0);
    return BundleVector(ParabolicDatum::parse(j.at("base").get<std::string>()),
                        j.at("ell").get<std::vector<long>>());
}

json to_json(const CytDatum& d) {
    json terms = json::array();
    for (const ConnectionTerm& t : d.eta.terms)
        terms.push_back({{"simple_index", t.simple_index + 1}, {"norm_exponent", t.norm_exponent}});
    return {
        {"datum", d.parabolic.to_string()},
        {"ell", d.ell},
        {"m", d.m},
        {"fano_index", d.I},
        {"lambda", rational_json(d.lambda)},
        {"omega0_scale", rational_json(d.omega0_scale)},
        {"psi_scale", rational_json(d.psi_scale)},
        {"trace_psi", rational_json(d.trace_psi)},
        {"lee_coefficient", rational_json(d.lee_coefficient)},
        {"stated_lee_coefficient", rational_json(d.stated_lee_coefficient)},
        {"bundle", to_json(d.bundle)},
        {"connection", terms},
    };
}

json to_json(const AsthenoLocus& l) {
    json j = {
        {"m1", l.m1},
        {"m2", l.m2},
        {"degenerate", l.degenerate},
        {"has_solutions", l.has_solutions},
        {"dimension_warning", l.dimension_warning},
    };
    if (l.degenerate) {
        j["kind"] = "line";
        j["line_a"] = rational_json(*l.line_a);
    } else {
        j["kind"] = "circle";
        j["center_a"] = rational_json(l.center_a);
        j["radius_sq"] = rational_json(l.radius_sq);
    }
    return j;
}

json to_json(const Table1Row& r) {
    json j = {
        {"manifold", r.manifold},
        {"datum", r.datum},
        {"holonomy", r.holonomy},
    };
    if (r.m > 0) {
        j["ell"] = r.ell;
        j["m"] = r.m;
        j["fano_index"] = r.fano;
        j["euler"] = r.euler;
        j["lambda"] = rational_json(r.lambda);
        j["omega0_scale"] = rational_json(r.omega0_scale);
        j["su_index"] = r.su_index;
    }
    return j;
}

json to_json(const Table1& t) {
    json rows = json::array();
    for (const Table1Row& r : t.rows) rows.push_back(to_json(r));
    json inst = json::array();
    for (const Table1Row& r : t.generic_instances) inst.push_back(to_json(r));
    return {{"rows", rows}, {"generic_instances", inst}};
}

json to_json(const SasakiPairReport& r) {
    json sols = json::array();
    for (const auto& [a, b] : r.solutions) sols.push_back({{"a", a}, {"b", b}});
    json j = {{"m1", r.m1}, {"m2", r.m2}, {"locus", to_json(r.locus)}, {"solutions", sols}, {"numeric", r.numeric}};
    if (r.numeric) {
        j["a"] = r.a;
        j["b"] = r.b;
        j["real_dim"] = r.real_dim;
        j["dOmega_witness"] = r.witness;
        j["metric_consistency"] = r.metric_consistency;
    }
    return j;
}

}  // namespace flagbundle
