#include "tsdq/catalog.hpp"

#include <cctype>
#include <set>

namespace tsdq {

namespace {

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

int parse_int(const std::string& s, const std::string& context) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw CatalogError("bad number in " + context);
    }
    if (used != s.size()) throw CatalogError("bad number in " + context);
    return v;
}

std::vector<int> parse_ints(const std::string& s, const std::string& context) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start), context));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Size of Z_n when the name is "Zn".
int cyclic_size(const std::string& g) {
    if (g.size() < 2 || g[0] != 'Z') return 0;
    for (std::size_t k = 1; k < g.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(g[k]))) return 0;
    return std::stoi(g.substr(1));
}

std::string group_part(const std::string& structure) {
    auto colon = structure.find(':');
    return colon == std::string::npos ? std::string() : structure.substr(colon + 1);
}

}  // namespace

FiniteGroup catalog_group(const std::string& name) {
    if (name == "D3") return dihedral3();
    if (name == "S3") return symmetric3();
    if (name == "SL2Z3") return sl2_z3();
    const int n = cyclic_size(name);
    if (n >= 1 && n <= 12) return cyclic_group(n);
    throw CatalogError("unknown group '" + name + "'");
}

std::vector<std::string> structure_names() {
    std::vector<std::string> out;
    for (int n = 2; n <= 12; ++n) out.push_back("heap:Z" + std::to_string(n));
    out.push_back("heap:D3");
    out.push_back("heap:S3");
    for (int n = 3; n <= 8; ++n) out.push_back("dihedral:Z" + std::to_string(n));
    return out;
}

TernaryStructure catalog_structure(const std::string& name) {
    if (starts_with(name, "heap:")) {
        auto s = heap_of_group(catalog_group(name.substr(5)));
        s.name = name;
        return s;
    }
    if (starts_with(name, "dihedral:")) {
        const int n = cyclic_size(name.substr(9));
        if (n < 3) throw CatalogError("dihedral structures need Zn with n >= 3");
        auto s = compose_binary(dihedral_quandle(n));
        s.name = name;
        return s;
    }
    throw CatalogError("unknown structure '" + name + "'");
}

GFamily catalog_gfamily(const std::string& name) {
    if (name == "alexander-gfamily:SL2Z3") return alexander_gfamily_sl2z3();
    if (starts_with(name, "dihedral-gfamily:")) {
        const int n = cyclic_size(name.substr(17));
        if (n < 2) throw CatalogError("bad dihedral family '" + name + "'");
        return dihedral_z2_family(n);
    }
    throw CatalogError("unknown G-family '" + name + "'");
}

Cochain2 class_cocycle(const TernaryStructure& heap, const FiniteGroup& g, int element) {
    if (heap.m != g.order || element < 0 || element >= g.order) throw CatalogError("class cocycle: bad input");
    std::set<int> cls;
    for (int h = 0; h < g.order; ++h) cls.insert(g(g(g.inv[h], element), h));
    Cochain2 c(heap, AbelianGroup::integers());
    const int m = g.order;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (cls.count(g(g.inv[y], z))) c.at(idx3(m, x, y, z))[0] = 1;
    return c;
}

std::vector<std::string> cocycle_names(const std::string& structure) {
    std::vector<std::string> out{"zero"};
    const std::string g = group_part(structure);
    const int n = cyclic_size(g);
    if (n > 0)
        for (int i = 0; i < n; ++i) out.push_back("phi:" + std::to_string(i));
    if (structure == "heap:D3") out.push_back("psi");
    if (starts_with(structure, "heap:") && n == 0) {
        const auto grp = catalog_group(g);
        for (const auto& e : grp.names) out.push_back("class:" + e);
    }
    return out;
}

Cochain2 catalog_cocycle(const std::string& structure, const std::string& cocycle) {
    const auto s = catalog_structure(structure);
    if (cocycle == "zero") return Cochain2(s, AbelianGroup::integers());
    if (starts_with(cocycle, "phi:")) {
        const int m = cyclic_size(group_part(structure));
        if (m == 0) throw CatalogError("phi:i needs a structure on Z_m");
        const int i = parse_int(cocycle.substr(4), cocycle);
        if (i < 0 || i >= m) throw CatalogError("phi:i needs 0 <= i < m");
        Cochain2 c(s, AbelianGroup::integers());
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    if (mod_floor(z - y, m) == i) c.at(idx3(m, x, y, z))[0] = 1;
        return c;
    }
    if (cocycle == "psi") {
        if (structure != "heap:D3") throw CatalogError("psi lives on heap:D3");
        auto c = d3_psi_cocycle();
        c.structure.name = structure;
        return c;
    }
    if (starts_with(cocycle, "class:") && starts_with(structure, "heap:")) {
        const auto g = catalog_group(group_part(structure));
        return class_cocycle(s, g, g.index_of(cocycle.substr(6)));
    }
    throw CatalogError("unknown cocycle '" + cocycle + "' on " + structure);
}

int default_root_order(const Cochain2& psi) {
    std::int64_t n = 1;
    for (auto k : psi.coeffs.factors()) n = lcm64(n, k == 0 ? psi.structure.m : k);
    return static_cast<int>(n);
}

Character catalog_character(const Cochain2& psi, int root_order) {
    return Character::standard(psi.coeffs, root_order > 0 ? root_order : default_root_order(psi));
}

std::vector<CatalogPair> catalog_pairs(int max_m) {
    std::vector<CatalogPair> out;
    for (const auto& s : structure_names()) {
        const auto st = catalog_structure(s);
        if (st.m > max_m) continue;
        for (const auto& c : cocycle_names(s)) out.push_back({s, c});
    }
    return out;
}

std::vector<std::string> catalog_words() {
    return {
        "n=1;",
        "n=1; t1",
        "n=1; t1^2",
        "n=1; t1^-3",
        "n=2; s1",
        "n=2; s1^-1 t1",
        "n=2; s1 s1",
        "n=2; s1 s1 s1",
        "n=2; s1 s1 s1 s1",
        "n=2; t1 s1 t2^-1 s1",
        "n=2; s1 s1^-1 t2^2",
        "n=3; s1 s2",
        "n=3; s1 s2^-1 t3",
        "n=3; s1 s2 s1 t1^2",
        "n=3; s1 s1 s2^-1",
    };
}

HopfData catalog_hopf(const std::string& name, int order) {
    if (starts_with(name, "group-algebra:")) return group_algebra(catalog_group(name.substr(14)), order);
    throw CatalogError("unknown Hopf algebra '" + name + "'");
}

TsdObject catalog_tsd_object(const std::string& name, int order) {
    if (name == "lie:abelian1") return lie_coalgebra(abelian_lie(1));
    if (name == "lie:abelian2") return lie_coalgebra(abelian_lie(2));
    if (name == "lie:sl2") return lie_coalgebra(sl2_lie());
    if (starts_with(name, "quantum-heap:"))
        return quantum_heap(group_algebra(catalog_group(name.substr(13)), order));
    if (starts_with(name, "double-conjugation:"))
        return double_conjugation(group_algebra(catalog_group(name.substr(19)), order));
    throw CatalogError("unknown TSD object '" + name + "'");
}

std::vector<std::string> hopf_names() {
    return {"group-algebra:Z1", "group-algebra:Z2", "group-algebra:Z3", "group-algebra:Z4",
            "group-algebra:Z5", "group-algebra:Z6", "group-algebra:D3", "group-algebra:S3"};
}

std::vector<std::string> tsd_object_names() {
    return {"lie:abelian1", "lie:abelian2", "lie:sl2", "quantum-heap:Z2", "quantum-heap:Z3", "quantum-heap:Z4",
            "quantum-heap:S3", "double-conjugation:S3"};
}

CompatibleSystem catalog_system(const std::string& name) {
    if (starts_with(name, "mutual:")) {
        const int m = cyclic_size(name.substr(7));
        if (m < 3) throw CatalogError("mutual systems need Z_m with m >= 3");
        auto c = mutually_distributive_system(catalog_structure("heap:Z" + std::to_string(m)),
                                              catalog_structure("dihedral:Z" + std::to_string(m)));
        c.name = name;
        return c;
    }
    if (starts_with(name, "augmented:") || starts_with(name, "augmented-heap:")) {
        const bool heap = starts_with(name, "augmented-heap:");
        const auto v = parse_ints(name.substr(name.find(':') + 1), name);
        if (v.size() != 3) throw CatalogError("augmented systems take n,m1,m2");
        return augmented_cyclic_system(v[0], v[1], v[2], heap ? DiagonalRule::Heap : DiagonalRule::Action);
    }
    if (name == "alexander-gfamily:SL2Z3") return gfamily_to_compatible(alexander_gfamily_sl2z3()).system();
    throw CatalogError("unknown system '" + name + "'");
}

std::vector<std::string> system_names() {
    return {"mutual:Z3", "mutual:Z5", "augmented:2,2,3", "augmented-heap:2,2,3"};
}

SystemCocycle system_phi_cocycle(const CompatibleSystem& c, int i) {
    const int m = c.sizes.empty() ? 0 : c.sizes[0];
    for (int s : c.sizes)
        if (s != m) throw CatalogError("phi system cocycle needs equal carriers");
    SystemCocycle a(c, AbelianGroup::integers());
    for (int p = 0; p < c.q(); ++p)
        for (int j = 0; j < c.q(); ++j)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    for (int z = 0; z < m; ++z)
                        if (mod_floor(z - y, m) == i) a.at(p, j, x, y, z)[0] = 1;
    return a;
}

std::vector<std::string> smoke_validate() {
    std::vector<std::string> bad;
    auto guard = [&](const std::string& name, auto&& fn) {
        try {
            std::string why = fn();
            if (!why.empty()) bad.push_back(name + ": " + why);
        } catch (const std::exception& e) {
            bad.push_back(name + ": " + e.what());
        }
    };
    for (const auto& s : structure_names()) {
        guard(s, [&] {
            auto st = catalog_structure(s);
            if (!check_tsd(st)) return std::string("not self-distributive");
            return std::string();
        });
        if (catalog_structure(s).m > 6) continue;
        for (const auto& c : cocycle_names(s))
            guard(s + " " + c, [&] {
                return check_cocycle2(catalog_cocycle(s, c)) ? std::string() : std::string("not a cocycle");
            });
    }
    for (const char* f : {"alexander-gfamily:SL2Z3", "dihedral-gfamily:Z3"})
        guard(f, [&] { return gfamily_check(catalog_gfamily(f)) ? std::string() : std::string("not a G-family"); });
    for (const auto& h : hopf_names())
        guard(h, [&] {
            auto r = validate_hopf(catalog_hopf(h));
            return r.pass ? std::string() : r.failing_axiom;
        });
    for (const auto& t : tsd_object_names())
        guard(t, [&] { return check_tsd_object(catalog_tsd_object(t)) ? std::string() : std::string("not TSD"); });
    for (const auto& n : system_names())
        guard(n, [&] {
            return check_compatible_system(catalog_system(n)) ? std::string() : std::string("not compatible");
        });
    for (const auto& w : catalog_words())
        guard(w, [&] {
            return word_to_string(parse_word(w)) == word_to_string(parse_word(word_to_string(parse_word(w))))
                       ? std::string()
                       : std::string("round trip");
        });
    return bad;
}

}  // namespace tsdq
