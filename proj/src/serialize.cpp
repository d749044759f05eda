#include "ramper/serialize.hpp"

#include <stdexcept>

namespace ramper {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: \"" + s + "\"");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

json quad_to_json(const QuadElem& e) {
    return json{{"x", rational_to_string(e.x())},
                {"y", rational_to_string(e.y())},
                {"p", e.p()}};
}

json ramified_to_json(const RamifiedElem& e) {
    json j;
    if (e.is_zero_at_precision())
        j["valuation"] = nullptr;
    else
        j["valuation"] = e.valuation();
    j["digits"] = e.pi_digits();
    j["precision"] = e.precision();
    return j;
}

json pell_to_json(const PellSolution& s) {
    return json{{"x", s.x.get_str()}, {"y", s.y.get_str()}};
}

json certificate_to_json(const Certificate& c) {
    return json{{"d", c.d.get_si()},
                {"d_odd", c.d_odd},
                {"norm_v", c.norm_v},
                {"identity_v2g2", c.identity_v2g2},
                {"alpha_rel", c.alpha_rel},
                {"c_rational", c.c_rational},
                {"valid", c.valid},
                {"proposition_ref", c.proposition_ref},
                {"alpha_normalization", c.alpha_normalization}};
}

json refutation_to_json(const RefutationLog& log) {
    json undecided = json::array();
    for (const auto& [x, y] : log.undecided) undecided.push_back(json::array({x, y}));
    return json{{"height_bound", log.height_bound},
                {"precision", log.precision},
                {"pairs_checked", log.pairs_checked},
                {"refuted", log.refuted},
                {"undecided", std::move(undecided)},
                {"all_refuted", log.all_refuted}};
}

json period_to_json(const MinimalPeriod& m, const QuadElem& a, long c) {
    return json{{"p", a.p()},
                {"g", m.g},
                {"a", quad_to_json(a)},
                {"c", c},
                {"d", m.d.get_si()},
                {"value", ramified_to_json(m.value)}};
}

json report_to_json(const ObstructionReport& r) {
    json j;
    j["p"] = r.ex.p;
    j["g"] = r.ex.g;
    j["pell_index"] = r.ex.k;
    j["v"] = quad_to_json(r.ex.v);
    j["b"] = quad_to_json(r.ex.b);
    j["n"] = r.ex.n;
    j["a"] = quad_to_json(r.ex.a);
    j["c"] = r.ex.c;
    j["precision"] = r.precision;
    j["alpha"] = ramified_to_json(r.alpha);
    j["minimal_period"] = period_to_json(r.period, r.ex.a, r.ex.c);
    j["d"] = r.certificate.d.get_si();
    j["certificate"] = certificate_to_json(r.certificate);
    j["witness_refutation"] = refutation_to_json(r.refutation);
    j["conclusion"] = r.conclusion;
    j["schema_version"] = r.schema_version;
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ramper
