#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsdq/catalog.hpp"

namespace tsdq::cli {

// Malformed input; maps to exit code 2.
struct SchemaError : std::runtime_error {
    SchemaError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer(pointer) {}
    std::string pointer;
};

// Well-formed input that fails its axioms; maps to exit code 1.
struct ValidationError : std::runtime_error {
    ValidationError(const std::string& what, std::vector<int> cex)
        : std::runtime_error(what), counterexample(std::move(cex)) {}
    std::vector<int> counterexample;
};

struct LoadedObject {
    std::string kind;  // ternary | gfamily | system
    std::string name;
    std::string hash;
    std::optional<TernaryStructure> ternary;
    std::optional<GFamily> gfamily;
    std::optional<CompatibleSystem> system;
};

// 64-bit FNV-1a, hex.
std::string fnv1a(const std::string& bytes);

LoadedObject parse_structure_json(const nlohmann::json& j, const std::string& name);
LoadedObject load_structure_file(const std::string& path);
// Catalog name, or a path ending in .json.
LoadedObject resolve_object(const std::string& ref);

HopfData parse_hopf_json(const nlohmann::json& j, const std::string& name);
HopfData load_hopf_file(const std::string& path);

// {"coeffs":[k,...], "values":[...]} with m^3 * rank entries.
Cochain2 parse_cocycle_json(const nlohmann::json& j, const TernaryStructure& s);
Cochain2 resolve_cocycle(const std::string& ref, const TernaryStructure& s);

// "Z", "Z2", "Z2+Z3", "0"
AbelianGroup parse_coeffs(const std::string& text);

nlohmann::json read_json_file(const std::string& path);

}  // namespace tsdq::cli
