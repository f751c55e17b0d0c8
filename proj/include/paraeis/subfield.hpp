// Subfield membership by the Galois correspondence: x lies in Q(generators)
// iff every sigma_a fixing all generators also fixes x.
#pragma once

#include "paraeis/cyclotomic.hpp"

#include <string>
#include <vector>

namespace paraeis {

struct SubfieldSpec {
    int64_t ambient_order = 1;
    std::vector<CycloNumber> generators;
    std::string description;

    SubfieldSpec() = default;
    SubfieldSpec(int64_t ambient, std::vector<CycloNumber> gens, std::string desc = "")
        : ambient_order(ambient), generators(std::move(gens)), description(std::move(desc)) {
        for (const auto& g : generators)
            if (ambient_order % g.order() != 0)
                throw std::domain_error("SubfieldSpec: generator order must divide ambient order");
    }
};

// Elements a of (Z/MZ)^x whose sigma_a fixes every generator.
inline std::vector<int64_t> fixing_subgroup(const SubfieldSpec& F) {
    int64_t M = F.ambient_order;
    std::vector<CycloNumber> gens;
    gens.reserve(F.generators.size());
    for (const auto& g : F.generators) gens.push_back(g.promote(M));
    std::vector<int64_t> H;
    for (int64_t a = 1; a <= M; ++a) {
        if (std::gcd(a, M) != 1) continue;
        bool fixes = true;
        for (const auto& g : gens) {
            if (g.galois(a) != g) { fixes = false; break; }
        }
        if (fixes) H.push_back(a);
    }
    return H;
}

struct MembershipResult {
    bool in_subfield = false;
    int64_t fixing_subgroup_size = 0;
};

inline MembershipResult check_subfield(const CycloNumber& x, const SubfieldSpec& F) {
    if (F.ambient_order % x.order() != 0)
        throw std::domain_error("check_subfield: element order does not divide ambient order");
    CycloNumber xp = x.promote(F.ambient_order);
    auto H = fixing_subgroup(F);
    MembershipResult r;
    r.fixing_subgroup_size = static_cast<int64_t>(H.size());
    for (int64_t a : H) {
        if (a == 1) continue;
        if (xp.galois(a) != xp) return r;
    }
    r.in_subfield = true;
    return r;
}

inline bool in_subfield(const CycloNumber& x, const SubfieldSpec& F) {
    return check_subfield(x, F).in_subfield;
}

}  // namespace paraeis
