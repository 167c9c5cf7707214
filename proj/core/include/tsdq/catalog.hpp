#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tsdq/braid.hpp"
#include "tsdq/cohomology.hpp"
#include "tsdq/hopf.hpp"
#include "tsdq/tsd.hpp"

namespace tsdq {

struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Z1..Z12, D3, S3, SL2Z3
FiniteGroup catalog_group(const std::string& name);

std::vector<std::string> structure_names();
// heap:<group>, dihedral:Zn (composed dihedral quandle, n >= 3)
TernaryStructure catalog_structure(const std::string& name);

// alexander-gfamily:SL2Z3, dihedral-gfamily:Zn
GFamily catalog_gfamily(const std::string& name);

// [y^-1 z in the conjugacy class of g] on the heap of g's group, A = Z.
Cochain2 class_cocycle(const TernaryStructure& heap, const FiniteGroup& g, int element);

// Cocycle names valid on a structure: zero, phi:i, psi, class:<element>.
std::vector<std::string> cocycle_names(const std::string& structure);
Cochain2 catalog_cocycle(const std::string& structure, const std::string& cocycle);
// Order of the coefficients when finite, the carrier size over Z.
int default_root_order(const Cochain2& psi);
Character catalog_character(const Cochain2& psi, int root_order = 0);

struct CatalogPair {
    std::string structure, cocycle;
};
std::vector<CatalogPair> catalog_pairs(int max_m);

std::vector<std::string> catalog_words();

// group-algebra:<group>
HopfData catalog_hopf(const std::string& name, int order = 1);
// lie:abelian1, lie:abelian2, lie:sl2, quantum-heap:<group>, double-conjugation:<group>
TsdObject catalog_tsd_object(const std::string& name, int order = 1);
std::vector<std::string> hopf_names();
std::vector<std::string> tsd_object_names();

// mutual:Zm (heap and composed dihedral on Z_m), augmented:n,m1,m2,
// augmented-heap:n,m1,m2, alexander-gfamily:SL2Z3
CompatibleSystem catalog_system(const std::string& name);
std::vector<std::string> system_names();
// alpha_ij(x, y, z) = [z - y = i] over Z on a system with carriers Z_m.
SystemCocycle system_phi_cocycle(const CompatibleSystem& c, int i);

// Runs every entry through its validator; returns "name: reason" per failure.
std::vector<std::string> smoke_validate();

}  // namespace tsdq
