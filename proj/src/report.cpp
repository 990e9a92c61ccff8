#include "wsa/report.hpp"

#include "wsa/semigroup.hpp"

namespace wsa {

nlohmann::json radius_to_json(const SpectralRadiusEstimate& est, const std::string& system,
                              const std::string& weight) {
    nlohmann::json j;
    j["system"] = system;
    j["weight"] = weight;
    j["element"] = est.s.str();
    j["k"] = est.k;
    j["N"] = est.max_power;
    j["log_seq"] = est.log_seq;
    j["running_min_seq"] = est.running_min_seq;
    j["running_min"] = est.running_min;
    j["value_at_N"] = est.value_at_N;
    return j;
}

nlohmann::json verified_rows_to_json(const std::string& id, const std::vector<VerifiedRow>& rows) {
    nlohmann::json j;
    j["id"] = id;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const VerifiedRow& row : rows) {
        nlohmann::json r;
        r["quantity"] = row.quantity;
        r["provenance"] = row.provenance;
        r["tolerance"] = row.tolerance;
        r["measured"] = row.measured;
        r["expected"] = row.expected;
        r["pass"] = row.pass;
        arr.push_back(r);
        all = all && row.pass;
    }
    j["rows"] = arr;
    j["pass"] = all;
    return j;
}

namespace {

nlohmann::json probe_line(const std::string& system, int window) {
    auto sg = make_semigroup(system);
    nlohmann::json j;
    j["system"] = system;
    j["window"] = window;
    auto assoc = probe_associative(*sg, window);
    j["associative"] = assoc ? "counterexample (" + assoc->a.str() + "," + assoc->b.str() + "," +
                                   assoc->c.str() + ")"
                             : "clean";
    auto cancel = probe_right_cancellative(*sg, window);
    j["right_cancellative"] = cancel ? "counterexample (" + cancel->a.str() + "," + cancel->b.str() + "," +
                                           cancel->c.str() + ")"
                                     : "clean";
    if (sg->totally_ordered()) {
        auto order = probe_order_compatibility(*sg, window);
        j["order_compatible"] = order ? "counterexample (" + order->a.str() + "," + order->b.str() + "," +
                                            order->c.str() + ")"
                                      : "clean";
    }
    // declared flags are assertions; the probe columns above are the evidence
    auto declared = sg->declared();
    j["declared_right_cancellative"] = declared.right_cancellative;
    j["declared_commutative"] = declared.commutative;
    j["declared_totally_ordered"] = declared.totally_ordered;
    return j;
}

} // namespace

nlohmann::json build_claims_report() {
    nlohmann::json doc;
    nlohmann::json entries = nlohmann::json::array();
    for (const std::string& id : catalog_ids()) {
        nlohmann::json e = verified_rows_to_json(id, run_expected_table(id));
        e["mode"] = catalog_preferred_mode(id);
        e["notes"] = entry_notes(id);
        entries.push_back(std::move(e));
    }
    doc["entries"] = entries;

    nlohmann::json probes = nlohmann::json::array();
    // structural hypotheses behind the theory, probed instead of trusted
    probes.push_back(probe_line("nat-add", 12));
    probes.push_back(probe_line("nat-min", 12));
    probes.push_back(probe_line("nat-leftzero", 12));
    probes.push_back(probe_line("qpos-add", 8));
    doc["probes"] = probes;
    return doc;
}

} // namespace wsa
