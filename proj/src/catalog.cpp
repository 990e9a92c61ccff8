#include "wsa/catalog.hpp"

namespace wsa {

std::vector<std::string> catalog_ids() {
    return {"QPOS-GAUSS", "NAT-GAUSS", "QPOS-DENOM", "NMIN-UNIT", "NLEFT-UNIT", "NMIN-PIECEWISE"};
}

std::string catalog_preferred_mode(const std::string& id) {
    if (id == "QPOS-GAUSS" || id == "NAT-GAUSS") return "log";
    if (id == "QPOS-DENOM" || id == "NMIN-UNIT" || id == "NLEFT-UNIT" || id == "NMIN-PIECEWISE") return "exact";
    throw ConfigError("unknown catalog id '" + id + "'");
}

namespace {

template <ScalarMode S>
std::vector<VerifiedRow> run_rows(const std::string& id) {
    auto entry = catalog_build<S>(id);
    std::vector<VerifiedRow> rows;
    rows.reserve(entry.expected.size());
    for (const ExpectedRow& row : entry.expected) {
        RowResult result = row.run();
        rows.push_back({row.quantity, row.provenance, row.tolerance, result.measured, result.expected,
                        result.pass});
    }
    return rows;
}

template <ScalarMode S>
std::vector<std::string> notes_of(const std::string& id) {
    return catalog_build<S>(id).notes;
}

} // namespace

std::vector<VerifiedRow> run_expected_table(const std::string& id) {
    if (catalog_preferred_mode(id) == "log") return run_rows<LogFloat>(id);
    return run_rows<Rational>(id);
}

std::vector<std::string> entry_notes(const std::string& id) {
    if (catalog_preferred_mode(id) == "log") return notes_of<LogFloat>(id);
    return notes_of<Rational>(id);
}

std::vector<CatalogInfo> catalog_list() {
    std::vector<CatalogInfo> out;
    for (const std::string& id : catalog_ids()) {
        CatalogInfo info;
        info.id = id;
        info.preferred_mode = catalog_preferred_mode(id);
        if (info.preferred_mode == "log") {
            auto entry = catalog_build<LogFloat>(id);
            info.description = entry.description;
            info.has_notes = !entry.notes.empty();
        } else {
            auto entry = catalog_build<Rational>(id);
            info.description = entry.description;
            info.has_notes = !entry.notes.empty();
        }
        out.push_back(std::move(info));
    }
    return out;
}

} // namespace wsa
