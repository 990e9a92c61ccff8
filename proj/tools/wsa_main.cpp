// Command-line surface for the weighted semigroup algebra toolkit:
//   compute {tilde|opnorm|fprop|radius}   one quantity, with certificates
//   verify {id|all}                       catalog expected-value tables
//   report                                consolidated claims + probe document
//   catalog list                          built-in systems
#include "wsa/catalog.hpp"
#include "wsa/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace wsa;

struct CommonOpts {
    std::string system;
    std::string weight;
    std::vector<std::string> overrides;
    std::string mode; // "", "exact", "log"
    int window = 8;
    std::string tol;
    std::string out = "table";
};

struct ComputeOpts {
    CommonOpts common;
    std::string element;
    int k = 1;
    int radius_k = 0;
    int max_power = 20;
    bool uncertified = false;
    std::string fprop_set;
    std::string r;
    int bisect = 10;
    std::string tail = "auto";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--system", opts.system,
                    "nat-add|nat-min|nat-leftzero|qpos-add|cayley:<path>|id:<catalog-id>")
        ->required();
    cmd->add_option("--weight", opts.weight, "expr:<src> or id:<catalog-id>; implied when --system is id:");
    cmd->add_option("--override", opts.overrides, "element=value overrides for expression weights");
    cmd->add_option("--mode", opts.mode, "exact|log (default: catalog preference, else exact)")
        ->check(CLI::IsMember({"exact", "log"}));
    cmd->add_option("--window", opts.window, "window index m")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opts.tol, "tolerance (rational like 1/1000000000 or decimal)");
    cmd->add_option("--out", opts.out, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
}

double resolve_rtol(const std::string& tol) {
    if (tol.empty()) return kDefaultTolerance;
    try {
        return Rational::parse(tol).to_double();
    } catch (const Error&) {
        return std::stod(tol);
    }
}

Rational resolve_exact_tol(const std::string& tol) {
    if (tol.empty()) return Rational(1, 1000000000);
    return Rational::parse(tol);
}

std::string resolve_mode(const CommonOpts& opts) {
    if (!opts.mode.empty()) return opts.mode;
    if (opts.system.rfind("id:", 0) == 0) return catalog_preferred_mode(opts.system.substr(3));
    return "exact";
}

template <ScalarMode S>
struct Resolved {
    std::shared_ptr<const Semigroup> sg;
    Weight<S> weight;
    std::string system_id;
    std::string weight_id;
};

template <ScalarMode S>
Resolved<S> resolve_system(const CommonOpts& opts) {
    Resolved<S> out;
    if (opts.system.rfind("id:", 0) == 0) {
        auto entry = catalog_build<S>(opts.system.substr(3));
        if (!opts.weight.empty() && opts.weight != "id:" + entry.id)
            throw ConfigError("--weight conflicts with the catalog system " + entry.id);
        if (!opts.overrides.empty())
            throw ConfigError("--override applies to expression weights, not catalog entries");
        out.sg = entry.semigroup;
        out.weight = entry.weight;
        out.system_id = entry.id;
        out.weight_id = entry.id;
        return out;
    }
    out.sg = make_semigroup(opts.system);
    out.system_id = opts.system;
    if (opts.weight.empty()) throw ConfigError("--weight is required unless --system names a catalog entry");
    if (opts.weight.rfind("id:", 0) == 0) {
        auto entry = catalog_build<S>(opts.weight.substr(3));
        if (entry.semigroup->id() != out.sg->id())
            throw ConfigError("catalog weight " + entry.id + " belongs to semigroup " + entry.semigroup->id());
        out.weight = entry.weight;
        out.weight_id = entry.id;
        return out;
    }
    if (opts.weight.rfind("expr:", 0) != 0)
        throw ConfigError("--weight must be expr:<src> or id:<catalog-id>, got '" + opts.weight + "'");
    auto expr = parse_weight_expr(opts.weight.substr(5), out.sg->element_kind());
    for (const std::string& item : opts.overrides) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("overrides are element=value, got '" + item + "'");
        expr.overrides[Element::parse(item.substr(0, eq))] = Rational::parse(item.substr(eq + 1));
    }
    out.weight = weight_from_expr<S>(expr, opts.weight);
    out.weight_id = opts.weight;
    return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array()) {
        bool scalar_only = true;
        for (const auto& item : j)
            if (item.is_object() || item.is_array()) scalar_only = false;
        if (scalar_only) {
            std::ostringstream os;
            for (std::size_t i = 0; i < j.size(); ++i)
                os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            rows.emplace_back(prefix, os.str());
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        }
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit(const json& j, const std::string& out) {
    if (out == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (out == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows) {
            std::string cell = v;
            if (cell.find(',') != std::string::npos || cell.find('"') != std::string::npos) {
                std::string quoted = "\"";
                for (char c : cell) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
                cell = quoted + "\"";
            }
            std::cout << k << "," << cell << "\n";
        }
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

std::vector<Element> parse_element_set(const std::string& csv) {
    std::vector<Element> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        auto comma = csv.find(',', pos);
        out.push_back(
            Element::parse(csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ConfigError("empty element set");
    return out;
}

template <ScalarMode S>
json run_tilde(const ComputeOpts& opts) {
    auto resolved = resolve_system<S>(opts.common);
    auto bound = tilde_bound<S>(resolved.weight, *resolved.sg, opts.k, Element::parse(opts.element),
                                opts.common.window, resolve_rtol(opts.common.tol), opts.uncertified);
    return tilde_bound_to_json(bound, resolved.system_id, resolved.weight_id);
}

template <ScalarMode S>
json run_opnorm(const ComputeOpts& opts) {
    auto resolved = resolve_system<S>(opts.common);
    auto f = FinSupp<S>::parse(opts.element);
    IntervalOptions interval_opts;
    if (!opts.r.empty()) interval_opts.alpha_r = Rational::parse(opts.r);
    interval_opts.bisect_steps = opts.bisect;
    interval_opts.use_tail = opts.tail != "none";
    interval_opts.rtol = resolve_rtol(opts.common.tol);
    if constexpr (S::is_exact) interval_opts.exact_tol = resolve_exact_tol(opts.common.tol);
    auto interval = opnorm_interval<S>(*resolved.sg, resolved.weight, f, opts.common.window, interval_opts);
    return interval_to_json(interval, resolved.system_id, resolved.weight_id, opts.element);
}

template <ScalarMode S>
json run_fprop(const ComputeOpts& opts) {
    auto resolved = resolve_system<S>(opts.common);
    FPropertyQuery query{parse_element_set(opts.fprop_set), Rational::parse(opts.r), opts.common.window};
    auto verdict = fproperty_search<S>(resolved.weight, *resolved.sg, query, opts.tail != "none",
                                       resolve_rtol(opts.common.tol));
    return verdict_to_json(verdict, query, resolved.system_id, resolved.weight_id);
}

template <ScalarMode S>
json run_radius(const ComputeOpts& opts) {
    auto resolved = resolve_system<S>(opts.common);
    auto est = spectral_radius_estimate<S>(resolved.weight, *resolved.sg, opts.radius_k,
                                           Element::parse(opts.element), opts.max_power);
    return radius_to_json(est, resolved.system_id, resolved.weight_id);
}

template <json (*ExactFn)(const ComputeOpts&), json (*LogFn)(const ComputeOpts&)>
int dispatch_compute(const ComputeOpts& opts) {
    json result = resolve_mode(opts.common) == "log" ? LogFn(opts) : ExactFn(opts);
    emit(result, opts.common.out);
    return 0;
}

int cmd_verify(const std::string& id, const std::string& out) {
    std::vector<std::string> ids;
    if (id == "all") ids = catalog_ids();
    else ids.push_back(id);

    bool all_pass = true;
    json doc = json::array();
    for (const std::string& entry_id : ids) {
        auto rows = run_expected_table(entry_id); // unknown ids throw ConfigError
        json entry = verified_rows_to_json(entry_id, rows);
        all_pass = all_pass && entry["pass"].get<bool>();
        doc.push_back(std::move(entry));
    }
    if (out == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (id == "all") {
        for (const auto& entry : doc) {
            std::size_t passed = 0;
            for (const auto& row : entry["rows"])
                if (row["pass"].get<bool>()) ++passed;
            std::cout << (entry["pass"].get<bool>() ? "PASS " : "FAIL ") << entry["id"].get<std::string>()
                      << "  " << passed << "/" << entry["rows"].size() << " rows\n";
        }
    } else {
        for (const auto& entry : doc) {
            std::cout << entry["id"].get<std::string>() << "\n";
            for (const auto& row : entry["rows"]) {
                std::cout << "  " << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                          << row["quantity"].get<std::string>()
                          << "  measured=" << row["measured"].get<std::string>()
                          << "  expected=" << row["expected"].get<std::string>() << "  ["
                          << row["provenance"].get<std::string>() << ", "
                          << row["tolerance"].get<std::string>() << "]\n";
            }
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_report(const std::string& out) {
    json doc = build_claims_report();
    if (out == "table") {
        for (const auto& entry : doc["entries"]) {
            std::cout << (entry["pass"].get<bool>() ? "PASS " : "FAIL ") << entry["id"].get<std::string>()
                      << " (" << entry["mode"].get<std::string>() << " mode)\n";
            for (const auto& row : entry["rows"])
                std::cout << "  " << (row["pass"].get<bool>() ? "ok  " : "FAIL") << "  "
                          << row["quantity"].get<std::string>() << ": " << row["measured"].get<std::string>()
                          << "\n";
            for (const auto& note : entry["notes"])
                std::cout << "  note: " << note.get<std::string>() << "\n";
        }
        std::cout << "structural probes:\n";
        for (const auto& probe : doc["probes"]) {
            std::cout << "  " << probe["system"].get<std::string>()
                      << "  associative=" << probe["associative"].get<std::string>()
                      << "  right-cancellative=" << probe["right_cancellative"].get<std::string>();
            if (probe.contains("order_compatible"))
                std::cout << "  order-compatible=" << probe["order_compatible"].get<std::string>();
            std::cout << "\n";
        }
        return 0;
    }
    emit(doc, out);
    return 0;
}

int cmd_catalog_list(const std::string& out) {
    json doc = json::array();
    for (const auto& info : catalog_list()) {
        json j;
        j["id"] = info.id;
        j["description"] = info.description;
        j["mode"] = info.preferred_mode;
        j["has_discrepancy_notes"] = info.has_notes;
        doc.push_back(j);
    }
    if (out == "table") {
        for (const auto& j : doc)
            std::cout << j["id"].get<std::string>() << "  [" << j["mode"].get<std::string>() << "]"
                      << (j["has_discrepancy_notes"].get<bool>() ? " [notes]" : "") << "  "
                      << j["description"].get<std::string>() << "\n";
        return 0;
    }
    emit(doc, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified bounds for weighted discrete semigroup algebras"};
    app.require_subcommand(1);

    ComputeOpts tilde_opts, opnorm_opts, fprop_opts, radius_opts;
    std::string verify_id, verify_out = "table", report_out = "table", list_out = "table";

    auto* compute = app.add_subcommand("compute", "compute one quantity");
    compute->require_subcommand(1);

    auto* tilde = compute->add_subcommand("tilde", "window-certified iterated weight bound");
    add_common(tilde, tilde_opts.common);
    tilde->add_option("--element", tilde_opts.element, "element, e.g. 3 or 2/3")->required();
    tilde->add_option("--k", tilde_opts.k, "iteration depth (default 1)")->check(CLI::PositiveNumber);
    tilde->add_flag("--uncertified", tilde_opts.uncertified,
                    "allow raw window recursion when no closed form exists");

    auto* opnorm = compute->add_subcommand("opnorm", "certified operator-norm interval");
    add_common(opnorm, opnorm_opts.common);
    opnorm->add_option("--element", opnorm_opts.element, "finite support literal, e.g. \"1:1,3:1\"")->required();
    opnorm->add_option("--r", opnorm_opts.r, "alpha-bound threshold in (0,1), e.g. 51/100");
    opnorm->add_option("--bisect", opnorm_opts.bisect, "bisection steps refining r (default 10)");
    opnorm->add_option("--tail", opnorm_opts.tail, "auto|none")->check(CLI::IsMember({"auto", "none"}));

    auto* fprop = compute->add_subcommand("fprop", "F-property verdict");
    add_common(fprop, fprop_opts.common);
    fprop->add_option("--fprop-set", fprop_opts.fprop_set, "finite set, e.g. \"1,3\"")->required();
    fprop->add_option("--r", fprop_opts.r, "threshold in (0,1)")->required();
    fprop->add_option("--tail", fprop_opts.tail, "auto|none")->check(CLI::IsMember({"auto", "none"}));

    auto* radius = compute->add_subcommand("radius", "spectral-radius estimate via running minima");
    add_common(radius, radius_opts.common);
    radius->add_option("--element", radius_opts.element, "element to power up")->required();
    radius->add_option("--k", radius_opts.radius_k, "iterate level (0 = the weight itself)");
    radius->add_option("--N", radius_opts.max_power, "largest power (default 20)")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run catalog expected-value tables");
    verify->add_option("id", verify_id, "catalog id or 'all'")->required();
    verify->add_option("--out", verify_out, "table|json")->check(CLI::IsMember({"table", "json"}));

    auto* report = app.add_subcommand("report", "consolidated claims and probe document");
    report->add_option("--out", report_out, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));

    auto* catalog = app.add_subcommand("catalog", "built-in systems");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog entries");
    list->add_option("--out", list_out, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (tilde->parsed()) return dispatch_compute<run_tilde<Rational>, run_tilde<LogFloat>>(tilde_opts);
        if (opnorm->parsed()) return dispatch_compute<run_opnorm<Rational>, run_opnorm<LogFloat>>(opnorm_opts);
        if (fprop->parsed()) return dispatch_compute<run_fprop<Rational>, run_fprop<LogFloat>>(fprop_opts);
        if (radius->parsed()) return dispatch_compute<run_radius<Rational>, run_radius<LogFloat>>(radius_opts);
        if (verify->parsed()) return cmd_verify(verify_id, verify_out);
        if (report->parsed()) return cmd_report(report_out);
        if (list->parsed()) return cmd_catalog_list(list_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
