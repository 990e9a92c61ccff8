#pragma once

#include "wsa/catalog.hpp"
#include "wsa/fproperty.hpp"
#include "wsa/iterated.hpp"
#include "wsa/opnorm.hpp"

#include <json.hpp>

#include <string>

namespace wsa {

/// Exact scalars serialize as decimal/rational strings so reports diff
/// byte-identically; log scalars carry the log plus a display decimal.
template <ScalarMode S>
nlohmann::json scalar_to_json(const S& v) {
    if constexpr (S::is_exact) {
        return v.str();
    } else {
        nlohmann::json j;
        j["log"] = v.is_zero() ? nullptr : nlohmann::json(v.log_magnitude());
        if (v.sign() < 0) j["sign"] = -1;
        j["approx"] = v.str();
        return j;
    }
}

template <ScalarMode S>
nlohmann::json tilde_bound_to_json(const IteratedWeightBound<S>& b, const std::string& system,
                                   const std::string& weight) {
    nlohmann::json j;
    j["system"] = system;
    j["weight"] = weight;
    j["k"] = b.k;
    j["element"] = b.s.str();
    j["window"] = b.window_m;
    j["lower"] = scalar_to_json(b.lower);
    j["witness"] = b.witness_t.str();
    j["converged"] = b.converged;
    j["exact_on_S"] = b.exact_on_S;
    j["certified"] = b.certified;
    if (b.closed_value) j["closed_form"] = scalar_to_json(*b.closed_value);
    return j;
}

template <ScalarMode S>
nlohmann::json interval_to_json(const NormInterval<S>& n, const std::string& system, const std::string& weight,
                                const std::string& element) {
    nlohmann::json j;
    j["system"] = system;
    j["weight"] = weight;
    j["element"] = element;
    j["window"] = n.window_m;
    j["lower"] = scalar_to_json(n.lower);
    j["lower_witness"] = n.lower_witness.str();
    j["upper"] = scalar_to_json(n.upper);
    j["upper_method"] = n.upper_method;
    j["exact"] = n.exact;
    j["flags"] = n.flags;
    return j;
}

template <ScalarMode S>
nlohmann::json verdict_to_json(const FPropertyVerdict<S>& v, const FPropertyQuery& q, const std::string& system,
                               const std::string& weight) {
    nlohmann::json j;
    j["system"] = system;
    j["weight"] = weight;
    nlohmann::json set = nlohmann::json::array();
    for (const Element& t : q.T) set.push_back(t.str());
    j["T"] = set;
    j["r"] = q.r.str();
    j["window"] = q.window_m;
    j["status"] = to_string(v.status);
    if (v.witness) j["witness"] = v.witness->str();
    nlohmann::json ratio_sets = nlohmann::json::object();
    for (const auto& [t, elems] : v.ratio_sets) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Element& e : elems) arr.push_back(e.str());
        ratio_sets[t.str()] = arr;
    }
    j["ratio_sets"] = ratio_sets;
    j["tail_note"] = v.tail_note;
    j["tilde1_certified"] = v.tilde1_certified;
    return j;
}

nlohmann::json radius_to_json(const SpectralRadiusEstimate& est, const std::string& system,
                              const std::string& weight);

nlohmann::json verified_rows_to_json(const std::string& id, const std::vector<VerifiedRow>& rows);

/// Consolidated claims document: every catalog expected-value row, the
/// structural probe results, and all discrepancy annotations.
nlohmann::json build_claims_report();

} // namespace wsa
