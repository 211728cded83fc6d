#include "ybmaps/report.hpp"

#include <sstream>

namespace ybmaps {

using nlohmann::ordered_json;

ordered_json check_report_json(const CheckReport& r) {
    ordered_json j;
    j["name"] = r.check;
    j["status"] = r.status;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    if (r.first_counterexample) j["counterexample"] = *r.first_counterexample;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json full_report(int trials, std::uint64_t seed, bool parallel) {
    const Catalog& catalog = Catalog::instance();
    SuiteOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.parallel = parallel;

    ordered_json doc;
    doc["version"] = 1;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["maps"] = ordered_json::array();
    for (const std::string& name : catalog.names()) {
        const MapDescriptor& d = catalog.get(name);
        ordered_json m;
        m["name"] = name;
        m["checks"] = ordered_json::array();
        for (Check c : all_checks())
            m["checks"].push_back(check_report_json(run_check(d, c, opts)));
        doc["maps"].push_back(std::move(m));
    }
    const int conv_trials = trials < 25 ? trials : 25;
    doc["conventions"] = {
        {"vector_nls_sign", resolve_vector_nls_convention(seed, conv_trials)},
        {"leaf_pairing_nls", resolve_leaf_pairing("adler-yamilov", seed, conv_trials)},
        {"leaf_pairing_dnls", resolve_leaf_pairing("dnls4", seed, conv_trials)},
    };
    return doc;
}

std::string listing_text(const Catalog& catalog) {
    std::ostringstream os;
    for (const std::string& name : catalog.names()) {
        const MapDescriptor& d = catalog.get(name);
        os << name;
        if (d.vector_blocks)
            os << " dim=4N";
        else
            os << " dim=" << d.dim();
        os << " params=" << d.param_arity << " lax=" << (d.lax_name.empty() ? "no" : "yes")
           << " poisson=" << (d.has_poisson() ? "yes" : "no") << "\n";
    }
    return os.str();
}

ordered_json listing_json(const Catalog& catalog) {
    ordered_json arr = ordered_json::array();
    for (const std::string& name : catalog.names()) {
        const MapDescriptor& d = catalog.get(name);
        ordered_json j;
        j["name"] = name;
        j["dim"] = d.vector_blocks ? ordered_json("4N") : ordered_json(d.dim());
        j["params"] = d.param_arity;
        j["aux"] = d.has_aux;
        j["lax"] = !d.lax_name.empty();
        j["poisson"] = d.has_poisson();
        j["invariants"] = d.invariant_names;
        j["casimirs"] = d.casimir_names;
        j["expected_involutive"] = d.expected_involutive;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace ybmaps
