#include "commands.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "files.hpp"
#include "tsdq/catalog.hpp"
#include "tsdq/quantum.hpp"
#include "tsdq/statesum.hpp"

namespace tsdq::cli {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    int workers = 0;
    std::uint64_t budget = Budget{}.max_identities;

    std::string structure, coeffs = "Z", cocycle, braid, hopf, object, system;
    bool ribbon = false, frobenius = false, braiding = false;
    int char_order = 0;
};

Budget make_budget(const Options& o) {
    Budget b;
    b.seed = o.seed;
    b.exhaustive = o.exhaustive;
    b.max_identities = o.budget;
    return b;
}

ordered check_json(const CheckResult& r) {
    ordered j;
    j["pass"] = r.pass;
    if (!r.pass) {
        j["counterexample"] = r.counterexample;
        if (!r.detail.empty()) j["detail"] = r.detail;
    }
    return j;
}

ordered coverage_json(const std::vector<CheckResult>& checks, std::uint64_t seed) {
    std::uint64_t checked = 0, total = 0;
    bool sampled = false;
    for (const auto& c : checks) {
        checked += c.checked;
        total += c.total;
        sampled = sampled || c.sampled;
    }
    ordered j;
    j["checked"] = checked;
    j["total"] = total;
    // Fixed precision keeps the report byte-stable.
    std::ostringstream f;
    f.precision(6);
    f << std::fixed << (total == 0 ? 1.0 : static_cast<double>(checked) / static_cast<double>(total));
    j["fraction"] = f.str();
    j["sampled"] = sampled;
    j["seed"] = seed;
    return j;
}

ordered cyclotomic_json(const Cyclotomic& c) {
    ordered j;
    j["order"] = c.order();
    j["coords"] = c.coords();
    j["text"] = c.to_string();
    return j;
}

ordered invariant_json(const InvariantValue& v, const AbelianGroup& coeffs) {
    ordered j;
    j["components"] = v.components;
    j["colorings"] = v.colorings;
    j["group"] = coeffs.to_string();
    ordered terms = ordered::array();
    const std::size_t width = 2 * coeffs.rank();
    for (const auto& [key, c] : v.value.terms()) {
        ordered k = ordered::array();
        for (int comp = 0; comp < v.components; ++comp)
            k.push_back(std::vector<std::int64_t>(key.begin() + comp * width, key.begin() + (comp + 1) * width));
        terms.push_back({{"key", k}, {"coeff", c}});
    }
    j["terms"] = terms;
    return j;
}

std::string cochain_hash(const Cochain2& c) {
    std::string bytes = c.coeffs.to_string() + ":";
    for (auto v : c.values) bytes += std::to_string(v) + ",";
    return fnv1a(bytes);
}

void flatten(const ordered& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

TernaryStructure need_ternary(const LoadedObject& o) {
    if (!o.ternary) throw SchemaError(o.name, "expected a ternary structure, got a " + o.kind);
    return *o.ternary;
}

BraidSequence need_braid(const std::string& text) {
    if (text.empty()) throw SchemaError("--braid", "required");
    return parse_sequence(text);
}

struct Context {
    Options opt;
    ordered inputs = ordered::object();
    ordered result = ordered::object();
    std::vector<CheckResult> checks;
    bool pass = true;

    void add_check(const std::string& key, const CheckResult& r) {
        result[key] = check_json(r);
        checks.push_back(r);
        pass = pass && r.pass;
    }
    void input(const std::string& key, const std::string& name, const std::string& hash) {
        inputs[key] = {{"name", name}, {"hash", hash}};
    }
};

struct WeightSetup {
    TernaryStructure s;
    Cochain2 psi;
    WeightContext ctx;
};

WeightSetup weight_setup(Context& c) {
    const auto obj = resolve_object(c.opt.structure);
    c.input("structure", obj.name, obj.hash);
    auto s = need_ternary(obj);
    if (c.opt.cocycle.empty()) throw SchemaError("--cocycle", "required");
    auto psi = resolve_cocycle(c.opt.cocycle, s);
    c.input("cocycle", c.opt.cocycle, cochain_hash(psi));
    auto chi = catalog_character(psi, c.opt.char_order);
    c.inputs["char_order"] = chi.root_order();
    try {
        auto ctx = WeightContext::make(s, psi, chi);
        return {s, psi, ctx};
    } catch (const std::invalid_argument& e) {
        throw SchemaError("--char-order", e.what());
    }
}

void cmd_verify(Context& c) {
    const auto obj = resolve_object(c.opt.structure);
    c.input("structure", obj.name, obj.hash);
    c.result["kind"] = obj.kind;
    if (obj.ternary) {
        auto s = *obj.ternary;
        c.result["size"] = s.m;
        c.add_check("tsd", check_tsd(s));
        auto rack = check_rack(s);
        c.result["rack"] = rack.pass;
        c.checks.push_back(rack);
    } else if (obj.gfamily) {
        c.result["size"] = obj.gfamily->m;
        c.result["operations"] = obj.gfamily->group.order;
        c.add_check("gfamily", gfamily_check(*obj.gfamily));
    } else {
        c.result["sizes"] = obj.system->sizes;
        c.add_check("compatible", check_compatible_system(*obj.system, make_budget(c.opt)));
    }
}

void cmd_cohomology(Context& c) {
    const auto obj = resolve_object(c.opt.structure);
    c.input("structure", obj.name, obj.hash);
    const auto s = need_ternary(obj);
    const auto a = parse_coeffs(c.opt.coeffs);
    c.inputs["coeffs"] = a.to_string();
    const auto h = compute_H2(s, a);
    c.result["H2"] = h.group_string();
    c.result["free_rank"] = h.free_rank;
    c.result["torsion"] = h.torsion;
}

void cmd_cocycle(Context& c) {
    const auto obj = resolve_object(c.opt.structure);
    c.input("structure", obj.name, obj.hash);
    const auto s = need_ternary(obj);
    if (c.opt.cocycle.empty()) throw SchemaError("--cocycle", "required");
    const auto psi = resolve_cocycle(c.opt.cocycle, s);
    c.input("cocycle", c.opt.cocycle, cochain_hash(psi));
    c.result["coeffs"] = psi.coeffs.to_string();
    const auto r = check_cocycle2(psi);
    c.add_check("cocycle", r);
    if (r.pass) c.result["coboundary"] = is_coboundary2(psi).is_coboundary;
}

void cmd_invariant(Context& c) {
    const auto obj = resolve_object(c.opt.structure);
    c.input("structure", obj.name, obj.hash);
    const auto s = need_ternary(obj);
    if (c.opt.cocycle.empty()) throw SchemaError("--cocycle", "required");
    const auto psi = resolve_cocycle(c.opt.cocycle, s);
    c.input("cocycle", c.opt.cocycle, cochain_hash(psi));
    const auto b = need_braid(c.opt.braid);
    c.input("braid", sequence_to_string(b), fnv1a(sequence_to_string(b)));
    InvariantValue v;
    if (c.opt.ribbon) {
        try {
            v = ribbon_invariant(b, s, psi);
        } catch (const std::invalid_argument& e) {
            throw SchemaError("--ribbon", e.what());
        }
    } else {
        v = vector_invariant(b, s, psi);
    }
    c.result["invariant"] = invariant_json(v, psi.coeffs);
}

void cmd_quantum(Context& c) {
    auto w = weight_setup(c);
    const auto b = need_braid(c.opt.braid);
    c.input("braid", sequence_to_string(b), fnv1a(sequence_to_string(b)));
    c.result["quantum"] = cyclotomic_json(quantum_invariant(w.ctx, b));
}

void cmd_compare(Context& c) {
    auto w = weight_setup(c);
    const auto b = need_braid(c.opt.braid);
    c.input("braid", sequence_to_string(b), fnv1a(sequence_to_string(b)));
    const auto r = compare_invariants(w.ctx, b);
    c.result["state_sum"] = cyclotomic_json(r.state_sum);
    c.result["quantum"] = cyclotomic_json(r.quantum);
    c.result["equal"] = r.equal;
    c.pass = c.pass && r.equal;
}

std::string group_of(const std::string& name, const std::string& prefix) {
    return name.rfind(prefix, 0) == 0 ? name.substr(prefix.size()) : std::string();
}

void cmd_hopf(Context& c) {
    if (c.opt.hopf.empty() && c.opt.object.empty()) throw SchemaError("--hopf", "need --hopf or --object");
    const bool from_file = c.opt.hopf.size() > 5 && c.opt.hopf.compare(c.opt.hopf.size() - 5, 5, ".json") == 0;

    // The group behind a group algebra or a quantum heap, when known.
    std::string group = group_of(c.opt.hopf, "group-algebra:");
    if (group.empty()) group = group_of(c.opt.object, "quantum-heap:");
    if (group.empty()) group = group_of(c.opt.object, "double-conjugation:");

    std::optional<Cochain2> psi;
    std::optional<Character> chi;
    int order = c.opt.char_order > 0 ? c.opt.char_order : 1;
    if (!c.opt.cocycle.empty()) {
        if (group.empty() || c.opt.object.rfind("double-conjugation", 0) == 0)
            throw SchemaError("--cocycle", "cocycles lift only onto the quantum heap of a catalog group algebra");
        psi = resolve_cocycle(c.opt.cocycle, catalog_structure("heap:" + group));
        chi = catalog_character(*psi, c.opt.char_order);
        order = chi->root_order();
        c.input("cocycle", c.opt.cocycle, cochain_hash(*psi));
        c.inputs["char_order"] = order;
    }

    std::optional<HopfData> h;
    if (from_file) {
        h = load_hopf_file(c.opt.hopf);
        c.input("hopf", c.opt.hopf, fnv1a(read_json_file(c.opt.hopf).dump()));
    } else if (!c.opt.hopf.empty()) {
        h = catalog_hopf(c.opt.hopf, order);
        c.input("hopf", c.opt.hopf, fnv1a(c.opt.hopf));
    } else if (!group.empty()) {
        h = catalog_hopf("group-algebra:" + group, order);
    }

    if (h) {
        const auto v = validate_hopf(*h);
        c.result["dim"] = h->dim;
        c.result["hopf"] = {{"pass", v.pass}, {"involutory", v.involutory}, {"cocommutative", v.cocommutative}};
        if (!v.pass) c.result["hopf"]["failing_axiom"] = v.failing_axiom;
        c.pass = c.pass && v.pass;
        if (!v.pass) return;
        if (c.opt.frobenius) {
            const auto f = frobenius_suite(*h);
            c.result["frobenius"] = {{"pass", f.pass()},
                                     {"integrals", f.integrals},
                                     {"normalization", f.normalization},
                                     {"frobenius_axiom", f.frobenius_axiom},
                                     {"snake", f.snake},
                                     {"pairing_commutes", f.pairing_commutes},
                                     {"theta_commutes", f.theta_commutes}};
            if (!f.failure.empty()) c.result["frobenius"]["failure"] = f.failure;
            c.pass = c.pass && f.pass();
        }
    }

    if (c.opt.object.empty()) return;
    TsdObject d;
    if (c.opt.object == "quantum-heap" || c.opt.object == "double-conjugation") {
        if (!h) throw SchemaError("--object", "needs --hopf");
        try {
            d = c.opt.object == "quantum-heap" ? quantum_heap(*h) : double_conjugation(*h);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what(), {});
        }
    } else {
        d = catalog_tsd_object(c.opt.object, order);
    }
    c.input("object", c.opt.object, fnv1a(c.opt.object));
    c.result["object_dim"] = d.dim;
    c.result["object_cocommutative"] = is_cocommutative(d);
    c.add_check("tsd_object", check_tsd_object(d));
    if (d.T_inv) c.add_check("rack_object", check_rack_object(d));

    if (psi) {
        const auto a = lift_cocycle(*psi, *chi);
        const auto r = check_categorical_cocycle(d, a);
        c.result["categorical_cocycle"] = {{"pass", r.pass()},
                                           {"cocycle", r.cocycle.pass},
                                           {"invertible", r.invertible},
                                           {"normalized", r.normalized}};
        if (!r.cocycle.pass) c.result["categorical_cocycle"]["counterexample"] = r.cocycle.counterexample;
        c.checks.push_back(r.cocycle);
        c.pass = c.pass && r.pass();
        if (c.opt.braiding && r.pass()) {
            try {
                const auto bc = check_braid_eq_dense(d, a);
                c.add_check("braid_equation", bc.ybe);
                c.add_check("braid_inverse", bc.inverse);
                c.add_check("braid_twist", bc.twist);
            } catch (const std::length_error& e) {
                throw SchemaError("--braiding", e.what());
            }
        }
    }
}

void cmd_system(Context& c) {
    const auto obj = resolve_object(c.opt.system);
    if (!obj.system && !obj.gfamily) throw SchemaError(c.opt.system, "expected a system or a G-family");
    c.input("system", obj.name, obj.hash);
    const auto budget = make_budget(c.opt);
    CompatibleSystem sys;
    if (obj.system) {
        sys = *obj.system;
        c.result["indices"] = sys.q();
        c.add_check("compatible", check_compatible_system(sys, budget));
    } else {
        const auto g = gfamily_to_compatible(*obj.gfamily, budget);
        sys = g.system();
        c.result["indices"] = sys.q();
        c.result["formula"] = g.chosen;
        c.add_check("compatible", g.chosen == "variant" ? g.variant_check : g.literal_check);
    }
    if (c.opt.cocycle.empty()) return;

    c.inputs["cocycle"] = c.opt.cocycle;
    if (c.opt.cocycle == "nosaka") {
        if (!obj.gfamily) throw SchemaError("--cocycle", "nosaka needs alexander-gfamily:SL2Z3");
        const auto n = nosaka_system_cocycle(*obj.gfamily, sys);
        c.result["admissible"] = n.admissible.size();
        c.result["excluded"] = n.excluded.size();
        c.result["nonzero_values"] = n.nonzero_values;
        c.add_check("system_cocycle", check_system_cocycle(n.cocycle, budget));
    } else if (c.opt.cocycle == "indicator") {
        c.add_check("system_cocycle", check_system_cocycle(augmented_indicator_cocycle(sys), budget));
    } else if (c.opt.cocycle.rfind("phi:", 0) == 0) {
        int i = 0;
        try {
            i = std::stoi(c.opt.cocycle.substr(4));
        } catch (const std::exception&) {
            throw SchemaError("--cocycle", "bad index");
        }
        c.add_check("system_cocycle", check_system_cocycle(system_phi_cocycle(sys, i), budget));
    } else {
        throw SchemaError("--cocycle", "expected phi:i, indicator or nosaka");
    }
}

std::string render(const Context& c, const std::string& command, bool json_out) {
    ordered report;
    report["command"] = command;
    report["inputs"] = c.inputs;
    report["result"] = c.result;
    report["coverage"] = coverage_json(c.checks, c.opt.seed);
    report["status"] = c.pass ? "pass" : "fail";
    if (json_out) return report.dump(2) + "\n";
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
    RunResult res;
    Options opt;
    CLI::App app{"Ternary self-distributive structures, cocycles and invariants", "tsdq"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Machine-readable report");
    app.add_flag("--exhaustive", opt.exhaustive, "Lift sampling budgets");
    app.add_option("--seed", opt.seed, "Sampling seed");
    app.add_option("--workers", opt.workers, "Worker threads (0 = hardware)");
    app.add_option("--budget", opt.budget, "Identities checked before sampling kicks in");

    auto* verify = app.add_subcommand("verify", "Check a structure, G-family or system");
    verify->add_option("--structure", opt.structure)->required();
    auto* cohom = app.add_subcommand("cohomology", "Second cohomology group");
    cohom->add_option("--structure", opt.structure)->required();
    cohom->add_option("--coeffs", opt.coeffs, "Z, Zk or sums like Z2+Z3");
    auto* cocycle = app.add_subcommand("cocycle", "Cocycle and coboundary test");
    cocycle->add_option("--structure", opt.structure)->required();
    cocycle->add_option("--cocycle", opt.cocycle)->required();
    auto* invariant = app.add_subcommand("invariant", "State-sum invariant of a braid closure");
    invariant->add_option("--structure", opt.structure)->required();
    invariant->add_option("--cocycle", opt.cocycle)->required();
    invariant->add_option("--braid", opt.braid)->required();
    invariant->add_flag("--ribbon", opt.ribbon, "Knot-only ribbon version");
    auto* quantum = app.add_subcommand("quantum", "Trace of the braid operator");
    auto* compare = app.add_subcommand("compare", "State sum against quantum trace");
    for (auto* sub : {quantum, compare}) {
        sub->add_option("--structure", opt.structure)->required();
        sub->add_option("--cocycle", opt.cocycle)->required();
        sub->add_option("--braid", opt.braid)->required();
        sub->add_option("--char-order", opt.char_order, "Root of unity order for the character");
    }
    auto* hopf = app.add_subcommand("hopf", "Hopf algebra and TSD object checks");
    hopf->add_option("--hopf", opt.hopf, "group-algebra:<G> or a .json file");
    hopf->add_option("--object", opt.object, "quantum-heap[:G], double-conjugation[:G], lie:<name>");
    hopf->add_option("--cocycle", opt.cocycle, "Set-theoretic cocycle lifted to the object");
    hopf->add_option("--char-order", opt.char_order);
    hopf->add_flag("--frobenius", opt.frobenius, "Integrals and Frobenius identities");
    hopf->add_flag("--braiding", opt.braiding, "Dense braid equation checks");
    auto* system = app.add_subcommand("system", "Compatible systems and their cocycles");
    system->add_option("--system", opt.system)->required();
    system->add_option("--cocycle", opt.cocycle, "phi:i, indicator or nosaka");

    std::vector<const char*> argv{"tsdq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit_code = code == 0 ? 0 : 2;
        return res;
    }
    if (opt.workers > 0) set_worker_count(opt.workers);

    Context c;
    c.opt = opt;
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "verify") cmd_verify(c);
        else if (command == "cohomology") cmd_cohomology(c);
        else if (command == "cocycle") cmd_cocycle(c);
        else if (command == "invariant") cmd_invariant(c);
        else if (command == "quantum") cmd_quantum(c);
        else if (command == "compare") cmd_compare(c);
        else if (command == "hopf") cmd_hopf(c);
        else cmd_system(c);
    } catch (const ValidationError& e) {
        res.err = std::string("validation failed: ") + e.what() + "\n";
        res.exit_code = 1;
        return res;
    } catch (const SchemaError& e) {
        res.err = std::string("input error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const ParseError& e) {
        res.err = std::string("braid syntax: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const CatalogError& e) {
        res.err = std::string("catalog: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const std::length_error& e) {
        res.err = std::string("too large: ") + e.what() + " (raise TSD_MAX_CELLS)\n";
        res.exit_code = 2;
        return res;
    } catch (const std::invalid_argument& e) {
        res.err = std::string("invalid input: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const std::runtime_error& e) {
        res.err = std::string("failed: ") + e.what() + "\n";
        res.exit_code = 1;
        return res;
    }
    res.out = render(c, command, opt.json);
    res.exit_code = c.pass ? 0 : 1;
    return res;
}

}  // namespace tsdq::cli
