#include "files.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tsdq::cli {

using nlohmann::json;

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const json& field(const json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) throw SchemaError(at.empty() ? "/" : at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(at + "/" + key, "missing");
    return *it;
}

int as_int(const json& j, const std::string& at, long lo, long hi) {
    if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
    const long v = j.get<long>();
    if (v < lo || v > hi) throw SchemaError(at, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<std::uint8_t> byte_table(const json& j, const std::string& at, std::size_t len, int bound) {
    if (!j.is_array()) throw SchemaError(at, "expected an array");
    if (j.size() != len) throw SchemaError(at, "expected " + std::to_string(len) + " entries");
    std::vector<std::uint8_t> t(len);
    for (std::size_t k = 0; k < len; ++k)
        t[k] = static_cast<std::uint8_t>(as_int(j[k], at + "/" + std::to_string(k), 0, bound - 1));
    return t;
}

Rational parse_rational(const json& j, const std::string& at) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError(at, "bad rational '" + j.get<std::string>() + "'");
        }
    }
    throw SchemaError(at, "expected an integer or a \"p/q\" string");
}

Scalar parse_scalar(const json& j, const std::string& at, int order) {
    if (j.is_array()) {
        std::vector<Rational> poly;
        for (std::size_t k = 0; k < j.size(); ++k) poly.push_back(parse_rational(j[k], at + "/" + std::to_string(k)));
        return Scalar::from_poly(order, std::move(poly));
    }
    return Scalar::constant(order, parse_rational(j, at));
}

std::string check_message(const std::string& what, const CheckResult& r) {
    std::string s = what;
    if (!r.detail.empty()) s += " (" + r.detail + ")";
    if (!r.counterexample.empty()) {
        s += " at [";
        for (std::size_t k = 0; k < r.counterexample.size(); ++k)
            s += (k ? "," : "") + std::to_string(r.counterexample[k]);
        s += "]";
    }
    return s;
}

}  // namespace

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
}

LoadedObject parse_structure_json(const json& j, const std::string& name) {
    LoadedObject out;
    out.name = name;
    out.hash = fnv1a(j.dump());
    const json& kind = field(j, "kind", "");
    if (!kind.is_string()) throw SchemaError("/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "ternary" || k == "quandle" || k == "rack") {
        const int m = as_int(field(j, "size", ""), "/size", 1, 255);
        TernaryStructure s;
        s.name = name;
        s.m = m;
        s.table = byte_table(field(j, "table", ""), "/table", static_cast<std::size_t>(m) * m * m, m);
        if (auto r = check_tsd(s); !r) throw ValidationError(check_message("not self-distributive", r), r.counterexample);
        TernaryStructure probe = s;
        if (check_rack(probe)) s.left_inverse = std::move(probe.left_inverse);
        out.kind = "ternary";
        out.ternary = std::move(s);
    } else if (k == "binary") {
        const int m = as_int(field(j, "size", ""), "/size", 1, 255);
        BinaryQuandle q;
        q.name = name;
        q.m = m;
        q.table = byte_table(field(j, "table", ""), "/table", static_cast<std::size_t>(m) * m, m);
        if (auto r = check_binary_sd(q); !r)
            throw ValidationError(check_message("not self-distributive", r), r.counterexample);
        auto s = compose_binary(q);
        s.name = name;
        out.kind = "ternary";
        out.ternary = std::move(s);
    } else if (k == "gfamily") {
        GFamily f;
        f.name = name;
        f.m = as_int(field(j, "size", ""), "/size", 1, 255);
        const json& g = field(j, "group", "");
        if (g.is_string()) {
            try {
                f.group = catalog_group(g.get<std::string>());
            } catch (const CatalogError& e) {
                throw SchemaError("/group", e.what());
            }
        } else {
            const int n = as_int(field(g, "order", "/group"), "/group/order", 1, 255);
            auto mul = byte_table(field(g, "table", "/group"), "/group/table", static_cast<std::size_t>(n) * n, n);
            try {
                f.group = make_group("G", n, std::vector<int>(mul.begin(), mul.end()));
            } catch (const std::invalid_argument& e) {
                throw ValidationError(std::string("group table: ") + e.what(), {});
            }
        }
        const json& ops = field(j, "ops", "");
        if (!ops.is_array() || ops.size() != static_cast<std::size_t>(f.group.order))
            throw SchemaError("/ops", "expected one table per group element");
        for (std::size_t g2 = 0; g2 < ops.size(); ++g2)
            f.ops.push_back(byte_table(ops[g2], "/ops/" + std::to_string(g2), static_cast<std::size_t>(f.m) * f.m, f.m));
        if (auto r = gfamily_check(f); !r) throw ValidationError(check_message("not a G-family", r), r.counterexample);
        out.kind = "gfamily";
        out.gfamily = std::move(f);
    } else if (k == "system") {
        CompatibleSystem c;
        c.name = name;
        const json& sizes = field(j, "sizes", "");
        if (!sizes.is_array() || sizes.empty()) throw SchemaError("/sizes", "expected a non-empty array");
        for (std::size_t i = 0; i < sizes.size(); ++i)
            c.sizes.push_back(as_int(sizes[i], "/sizes/" + std::to_string(i), 1, 255));
        const json& tables = field(j, "tables", "");
        const std::size_t q = c.sizes.size();
        if (!tables.is_array() || tables.size() != q * q) throw SchemaError("/tables", "expected q^2 tables");
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t jj = 0; jj < q; ++jj) {
                const std::size_t len = static_cast<std::size_t>(c.sizes[i]) * c.sizes[jj] * c.sizes[jj];
                c.tables.push_back(
                    byte_table(tables[i * q + jj], "/tables/" + std::to_string(i * q + jj), len, c.sizes[i]));
            }
        if (auto r = check_compatible_system(c); !r)
            throw ValidationError(check_message("not a compatible system", r), r.counterexample);
        out.kind = "system";
        out.system = std::move(c);
    } else {
        throw SchemaError("/kind", "unknown kind '" + k + "'");
    }
    return out;
}

LoadedObject load_structure_file(const std::string& path) { return parse_structure_json(read_json_file(path), path); }

LoadedObject resolve_object(const std::string& ref) {
    if (ends_with(ref, ".json")) return load_structure_file(ref);
    LoadedObject out;
    out.name = ref;
    try {
        if (ref.rfind("alexander-gfamily:", 0) == 0 || ref.rfind("dihedral-gfamily:", 0) == 0) {
            out.kind = "gfamily";
            out.gfamily = catalog_gfamily(ref);
            out.hash = fnv1a(ref);
            return out;
        }
        if (ref.rfind("mutual:", 0) == 0 || ref.rfind("augmented", 0) == 0) {
            out.kind = "system";
            out.system = catalog_system(ref);
            out.hash = fnv1a(ref);
            return out;
        }
        out.kind = "ternary";
        out.ternary = catalog_structure(ref);
    } catch (const CatalogError& e) {
        throw SchemaError(ref, e.what());
    }
    out.hash = fnv1a(std::string(out.ternary->table.begin(), out.ternary->table.end()));
    return out;
}

HopfData parse_hopf_json(const json& j, const std::string& name) {
    HopfData h;
    h.name = name;
    h.dim = as_int(field(j, "dim", ""), "/dim", 1, 64);
    const int d = h.dim;
    int order = 1;
    if (j.contains("scalars")) {
        const json& s = j["scalars"];
        const json& kind = field(s, "kind", "/scalars");
        if (kind == "cyclotomic")
            order = as_int(field(s, "order", "/scalars"), "/scalars/order", 1, 1000);
        else if (kind != "rational")
            throw SchemaError("/scalars/kind", "expected \"rational\" or \"cyclotomic\"");
    }
    h.order = order;
    h.mu = Tensor(order, {d, d}, {d});
    h.delta = Tensor(order, {d}, {d, d});
    h.eta = Tensor(order, {}, {d});
    h.eps = Tensor(order, {d}, {});
    h.antipode = Tensor(order, {d}, {d});
    // Each entry lists basis indices then the value.
    auto entries = [&](const char* key, std::size_t arity, auto&& put) {
        const std::string at = std::string("/") + key;
        const json& arr = field(j, key, "");
        if (!arr.is_array()) throw SchemaError(at, "expected an array");
        for (std::size_t n = 0; n < arr.size(); ++n) {
            const std::string p = at + "/" + std::to_string(n);
            if (!arr[n].is_array() || arr[n].size() != arity + 1)
                throw SchemaError(p, "expected " + std::to_string(arity + 1) + " entries");
            std::vector<int> idx;
            for (std::size_t k = 0; k < arity; ++k) idx.push_back(as_int(arr[n][k], p + "/" + std::to_string(k), 0, d - 1));
            put(idx, parse_scalar(arr[n][arity], p + "/" + std::to_string(arity), order));
        }
    };
    entries("mu", 3, [&](const std::vector<int>& i, const Scalar& v) {
        h.mu.add(static_cast<std::size_t>(i[0]) * d + i[1], i[2], v);
    });
    entries("delta", 3, [&](const std::vector<int>& i, const Scalar& v) {
        h.delta.add(i[0], static_cast<std::size_t>(i[1]) * d + i[2], v);
    });
    entries("eta", 1, [&](const std::vector<int>& i, const Scalar& v) { h.eta.add(0, i[0], v); });
    entries("eps", 1, [&](const std::vector<int>& i, const Scalar& v) { h.eps.add(i[0], 0, v); });
    entries("antipode", 2, [&](const std::vector<int>& i, const Scalar& v) { h.antipode.add(i[0], i[1], v); });
    return h;
}

HopfData load_hopf_file(const std::string& path) { return parse_hopf_json(read_json_file(path), path); }

AbelianGroup parse_coeffs(const std::string& text) {
    if (text == "0") return AbelianGroup(std::vector<std::int64_t>{});
    std::vector<std::int64_t> f;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto plus = text.find('+', start);
        const std::string part = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (part == "Z") {
            f.push_back(0);
        } else if (part.size() > 1 && part[0] == 'Z' && part.find_first_not_of("0123456789", 1) == std::string::npos) {
            const auto k = std::stoll(part.substr(1));
            if (k < 2) throw SchemaError(text, "cyclic factors need order >= 2");
            f.push_back(k);
        } else {
            throw SchemaError(text, "expected coefficients like Z, Z2 or Z2+Z3");
        }
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return AbelianGroup(f);
}

Cochain2 parse_cocycle_json(const json& j, const TernaryStructure& s) {
    const json& cf = field(j, "coeffs", "");
    std::vector<std::int64_t> factors;
    if (cf.is_string()) {
        factors = parse_coeffs(cf.get<std::string>()).factors();
    } else if (cf.is_array()) {
        for (std::size_t k = 0; k < cf.size(); ++k)
            factors.push_back(as_int(cf[k], "/coeffs/" + std::to_string(k), 0, 1 << 20));
    } else {
        throw SchemaError("/coeffs", "expected a string or an array");
    }
    Cochain2 c(s, AbelianGroup(factors));
    const json& vals = field(j, "values", "");
    if (!vals.is_array() || vals.size() != c.values.size())
        throw SchemaError("/values", "expected " + std::to_string(c.values.size()) + " entries");
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (!vals[k].is_number_integer()) throw SchemaError("/values/" + std::to_string(k), "expected an integer");
        c.values[k] = c.coeffs.reduce_coord(k % c.rank(), vals[k].get<std::int64_t>());
    }
    return c;
}

Cochain2 resolve_cocycle(const std::string& ref, const TernaryStructure& s) {
    if (ends_with(ref, ".json")) return parse_cocycle_json(read_json_file(ref), s);
    if (ref == "zero") return Cochain2(s, AbelianGroup::integers());
    try {
        return catalog_cocycle(s.name, ref);
    } catch (const CatalogError& e) {
        throw SchemaError(ref, e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(ref, e.what());
    }
}

}  // namespace tsdq::cli
