#pragma once

#include <map>
#include <string>
#include <vector>

#include "lincomb.hpp"

namespace mba {

// One defining or derived identity, stored as lhs - rhs over placeholder
// leaves a..e.  Every catalog entry is multilinear in its placeholders.
struct Identity {
    std::string name;
    LinComb body;
    int arity = 0;  // number of distinct placeholders
};

enum class Variety { MTP, MFM };

struct VarietyPreset {
    std::string name;
    std::vector<std::string> identity_names;
};

// Defining identities (com-assoc ... FMAN-MET).
const std::vector<Identity>& identity_catalog();
// Consequences (11)-(14), (21), (22): theorems, not axioms; kept apart so the
// oracle's input stays minimal.
const std::vector<Identity>& derived_catalog();

const Identity* find_identity(const std::string& name);  // searches both catalogs
const VarietyPreset& preset(Variety v);
Variety parse_variety(const std::string& s);

// Simultaneously replaces every placeholder leaf.  Throws std::invalid_argument
// if a placeholder of `id` is missing from the assignment.
LinComb substitute(const Identity& id, const std::map<int, Term>& assignment);

std::vector<int> identity_placeholders(const Identity& id);

}  // namespace mba
