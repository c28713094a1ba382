#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hodge/rootdata.hpp"

namespace hodge {

struct OrbitEntry {
    std::string id;
    LatticeInvolution theta_q;
    int dim = 0;
    std::vector<std::string> labels;
    bool split_formula = false;  // open orbit of a split-mod-center form
    bool theta_stable = true;
};

// A closed-world group catalog entry.  K-types are labelled by integers
// in the doubled-weight convention (metaplectic half-integers are odd);
// for the complex entry the label is the highest weight of the K-type.
struct GroupCatalogEntry {
    std::string name;  // sl2r, sl2r_metaplectic, sl2c
    RootDatum datum;
    std::vector<OrbitEntry> orbits;
    int dim_b = 0;
    std::string k_tag;  // "torus" or "sl2"

    const OrbitEntry& orbit(const std::string& id) const;
};

const GroupCatalogEntry& catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

struct HCParameter {
    std::string group;
    std::string orbit_id;
    Weight lambda;             // dominant, fundamental-weight coordinates
    std::string gamma_label;
    int weight_w = 0;          // dim of the supporting orbit
    int codim_c = 0;           // dim_b - weight_w
    std::optional<int> theta_lift;

    bool operator==(const HCParameter& o) const {
        return group == o.group && orbit_id == o.orbit_id && lambda == o.lambda &&
               gamma_label == o.gamma_label && weight_w == o.weight_w &&
               theta_lift == o.theta_lift;
    }
    bool operator<(const HCParameter& o) const;
    std::string to_json() const;
    static HCParameter from_json(const std::string& text);
};

// Validates group/orbit/label, dominance, the lattice integrality
// condition of the orbit, and fills weight_w / codim_c.
HCParameter make_parameter(const std::string& group, const std::string& orbit,
                           const Weight& lambda, const std::string& gamma,
                           std::optional<int> theta_lift = std::nullopt);

struct DeformationRay {
    HCParameter base;
    Weight direction;          // (1 - theta_Q) lambda
    bool degenerate = false;   // already tempered
};

bool is_regular(const HCParameter& p);
bool is_tempered(const HCParameter& p);

DeformationRay deformation_ray(const HCParameter& p);

// Parameter of the ray at deformation time s in [-1/2, 0].
HCParameter parameter_at(const DeformationRay& ray, const Rational& s);

// min { s in [-1/2, 0] : lambda + s * direction dominant }.
Rational s_zero(const DeformationRay& ray);

// f_weight in the (-1)-eigenspace of theta_Q on h*_S; with positivity,
// membership in (1 - theta_Q) of the S-dominant cone.
bool cone_membership(const HCParameter& p, const std::set<size_t>& simple_set,
                     const Weight& f_weight, bool positivity);

// <lambda, alpha^vee> for the first simple coroot; the rank-one family
// coordinate used throughout the catalog.
Rational family_coordinate(const HCParameter& p);

}  // namespace hodge
