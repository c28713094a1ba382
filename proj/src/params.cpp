#include "hodge/params.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace hodge {

namespace {

GroupCatalogEntry make_sl2r() {
    GroupCatalogEntry g;
    g.name = "sl2r";
    g.datum = root_datum_a1();
    g.dim_b = 1;
    g.k_tag = "torus";
    g.orbits.push_back({"open", {"theta_Q", {{-1}}}, 1, {"even", "odd"}, true, true});
    g.orbits.push_back({"closed_plus", {"theta_Q", {{1}}}, 0, {"ds"}, false, true});
    g.orbits.push_back({"closed_minus", {"theta_Q", {{1}}}, 0, {"ds"}, false, true});
    return g;
}

GroupCatalogEntry make_metaplectic() {
    GroupCatalogEntry g;
    g.name = "sl2r_metaplectic";
    g.datum = root_datum_a1();
    g.dim_b = 1;
    g.k_tag = "torus";
    g.orbits.push_back({"open", {"theta_Q", {{-1}}}, 1, {"genuine_plus", "genuine_minus"}, true, true});
    g.orbits.push_back({"closed_plus", {"theta_Q", {{1}}}, 0, {"genuine"}, false, true});
    g.orbits.push_back({"closed_minus", {"theta_Q", {{1}}}, 0, {"genuine"}, false, true});
    return g;
}

GroupCatalogEntry make_sl2c() {
    GroupCatalogEntry g;
    g.name = "sl2c";
    g.datum = root_datum_a1_complex();
    g.dim_b = 2;
    g.k_tag = "sl2";
    LatticeInvolution minus_swap{"theta_Q", {{0, -1}, {-1, 0}}};
    std::vector<std::string> closed_labels;
    for (int m = 0; m <= 12; m += 2) closed_labels.push_back("m" + std::to_string(m));
    g.orbits.push_back({"open", minus_swap, 2, {"spherical"}, false, true});
    g.orbits.push_back({"closed", minus_swap, 1, closed_labels, false, true});
    return g;
}

const std::vector<GroupCatalogEntry>& catalog() {
    static const std::vector<GroupCatalogEntry> groups = {make_sl2r(), make_metaplectic(),
                                                          make_sl2c()};
    return groups;
}

}  // namespace

const OrbitEntry& GroupCatalogEntry::orbit(const std::string& id) const {
    for (const auto& o : orbits)
        if (o.id == id) return o;
    throw std::invalid_argument("unknown orbit: " + id + " in group " + name);
}

const GroupCatalogEntry& catalog_group(const std::string& name) {
    for (const auto& g : catalog())
        if (g.name == name) return g;
    throw std::invalid_argument("unknown group: " + name);
}

std::vector<std::string> catalog_group_names() {
    std::vector<std::string> names;
    for (const auto& g : catalog()) names.push_back(g.name);
    return names;
}

bool HCParameter::operator<(const HCParameter& o) const {
    if (group != o.group) return group < o.group;
    if (orbit_id != o.orbit_id) return orbit_id < o.orbit_id;
    if (gamma_label != o.gamma_label) return gamma_label < o.gamma_label;
    if (lambda.coords != o.lambda.coords) {
        // lexicographic on exact rationals
        for (size_t i = 0; i < lambda.coords.size() && i < o.lambda.coords.size(); ++i) {
            if (lambda.coords[i] != o.lambda.coords[i])
                return lambda.coords[i] < o.lambda.coords[i];
        }
        return lambda.coords.size() < o.lambda.coords.size();
    }
    if (weight_w != o.weight_w) return weight_w < o.weight_w;
    int a = theta_lift.value_or(0), b = o.theta_lift.value_or(0);
    return a < b;
}

std::string HCParameter::to_json() const {
    nlohmann::json j;
    j["group"] = group;
    j["orbit"] = orbit_id;
    std::vector<std::string> coords;
    for (const auto& c : lambda.coords) coords.push_back(format_rational(c));
    j["lambda"] = coords;
    j["gamma"] = gamma_label;
    if (theta_lift) j["theta_lift"] = *theta_lift;
    return j.dump();
}

HCParameter HCParameter::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Weight lambda;
    for (const auto& c : j.at("lambda")) lambda.coords.push_back(parse_rational(c.get<std::string>()));
    std::optional<int> lift;
    if (j.contains("theta_lift")) lift = j.at("theta_lift").get<int>();
    HCParameter p = make_parameter(j.at("group").get<std::string>(), j.at("orbit").get<std::string>(),
                                   lambda, j.at("gamma").get<std::string>(), lift);
    if (j.contains("weight_w")) {
        // explicit override, honored as stated so that defective block
        // files surface through the verification report
        p.weight_w = j.at("weight_w").get<int>();
        p.codim_c = catalog_group(p.group).dim_b - p.weight_w;
    }
    return p;
}

HCParameter make_parameter(const std::string& group, const std::string& orbit,
                           const Weight& lambda, const std::string& gamma,
                           std::optional<int> theta_lift) {
    const auto& g = catalog_group(group);
    const auto& o = g.orbit(orbit);
    if (std::find(o.labels.begin(), o.labels.end(), gamma) == o.labels.end())
        throw std::invalid_argument("label " + gamma + " invalid for orbit " + orbit);
    if (static_cast<int>(lambda.coords.size()) != g.datum.rank)
        throw std::invalid_argument("lambda rank mismatch");
    // lattice conditions for the closed orbits
    if (group == "sl2r" && orbit != "open") {
        if (!is_integer(lambda.coords[0]))
            throw std::invalid_argument("closed-orbit parameter needs integral lambda");
    }
    if (group == "sl2r_metaplectic" && orbit != "open") {
        Rational twice = lambda.coords[0] * 2;
        if (!is_integer(twice) || to_long(twice) % 2 == 0)
            throw std::invalid_argument("metaplectic closed-orbit parameter needs half-odd lambda");
    }
    HCParameter p;
    p.group = group;
    p.orbit_id = orbit;
    p.lambda = lambda;
    p.gamma_label = gamma;
    p.weight_w = o.dim;
    p.codim_c = g.dim_b - o.dim;
    p.theta_lift = theta_lift;
    return p;
}

Rational family_coordinate(const HCParameter& p) {
    const auto& g = catalog_group(p.group);
    return pairing(g.datum, p.lambda, 1);
}

bool is_regular(const HCParameter& p) {
    const auto& g = catalog_group(p.group);
    if (!is_dominant(g.datum, p.lambda)) return false;
    if (p.group == "sl2r") {
        if (p.orbit_id == "open") {
            if (p.gamma_label == "even") return true;
            return family_coordinate(p) > 0;  // odd local system dies at lambda = 0
        }
        return true;
    }
    if (p.group == "sl2r_metaplectic") return true;
    // sl2c: open spherical parameters need strictly dominant lambda
    // (a singular coordinate produces a non-real root in the singular
    // set, which kills the sections).
    if (p.orbit_id == "open") {
        for (const auto& c : p.lambda.coords)
            if (c <= 0) return false;
        return true;
    }
    return true;
}

bool is_tempered(const HCParameter& p) {
    if (!is_regular(p)) return false;
    const auto& g = catalog_group(p.group);
    const auto& o = g.orbit(p.orbit_id);
    return o.theta_q.apply(p.lambda) == p.lambda;
}

DeformationRay deformation_ray(const HCParameter& p) {
    if (!is_regular(p)) throw std::domain_error("deformation ray of a non-regular parameter");
    const auto& g = catalog_group(p.group);
    const auto& o = g.orbit(p.orbit_id);
    DeformationRay ray;
    ray.base = p;
    ray.direction = p.lambda - o.theta_q.apply(p.lambda);
    ray.degenerate = ray.direction.is_zero();
    return ray;
}

HCParameter parameter_at(const DeformationRay& ray, const Rational& s) {
    Weight lambda = ray.base.lambda + ray.direction.scaled(s);
    return make_parameter(ray.base.group, ray.base.orbit_id, lambda, ray.base.gamma_label);
}

Rational s_zero(const DeformationRay& ray) {
    if (ray.degenerate) return Rational(0);
    const auto& g = catalog_group(ray.base.group);
    Rational lo(-1, 2);
    for (size_t r = 1; r <= g.datum.num_positive_roots(); ++r) {
        Rational a = pairing(g.datum, ray.base.lambda, r);
        Rational b = pairing(g.datum, ray.direction, r);
        if (b > 0) {
            Rational bound = -a / b;
            if (bound > lo) lo = bound;
        }
    }
    return lo;
}

namespace {

// Solve f = (1 - theta) mu with the strict positivity constraints of
// h*_{S,+} on mu; rank <= 2 suffices for the catalog.
bool positive_preimage_exists(const RootDatum& datum, const LatticeInvolution& theta,
                              const std::set<size_t>& simple_set, const Weight& f) {
    int n = datum.rank;
    // matrix of (1 - theta) on coordinates
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        M[i][i] += 1;
        for (int j = 0; j < n; ++j) M[i][j] -= Rational(theta.matrix[i][j]);
    }
    // gaussian solve M mu = f, collecting a particular solution and kernel
    std::vector<std::vector<Rational>> A = M;
    std::vector<Rational> rhs = f.coords;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (A[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[pr], A[row]);
        std::swap(rhs[pr], rhs[row]);
        Rational inv = 1 / A[row][col];
        for (int c = 0; c < n; ++c) A[row][c] *= inv;
        rhs[row] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            Rational factor = A[r][col];
            if (factor == 0) continue;
            for (int c = 0; c < n; ++c) A[r][c] -= factor * A[row][c];
            rhs[r] -= factor * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (rhs[r] != 0) return false;  // f not in the image
    // particular solution
    std::vector<Rational> mu0(n, Rational(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) mu0[pivot_col[k]] = rhs[k];
    // kernel basis: free columns
    std::vector<std::vector<Rational>> kernel;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<Rational> v(n, Rational(0));
        v[col] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -A[k][col];
        kernel.push_back(v);
    }

    auto feasible = [&](const std::vector<Rational>& mu) {
        for (size_t r = 1; r <= datum.num_positive_roots(); ++r) {
            // skip coroots in the span of S: catalog diagrams are
            // products of A1's, so those are exactly the simple ones
            // indexed by S
            const auto& combo = datum.positive_coroots[r - 1];
            bool in_span = true;
            for (int i = 0; i < n; ++i)
                if (combo[i] != 0 && simple_set.find(i) == simple_set.end()) in_span = false;
            if (in_span && !simple_set.empty()) continue;
            Weight w{mu};
            if (pairing(datum, w, r) <= 0) return false;
        }
        return true;
    };

    if (kernel.empty()) return feasible(mu0);
    if (kernel.size() == 1) {
        // 1-parameter family mu0 + t v: rational interval scan over the
        // finitely many linear constraints
        const auto& v = kernel[0];
        // constraints: <mu0, cor> + t <v, cor> > 0
        Rational lo(-1000000), hi(1000000);
        for (size_t r = 1; r <= datum.num_positive_roots(); ++r) {
            const auto& combo = datum.positive_coroots[r - 1];
            bool in_span = true;
            for (int i = 0; i < n; ++i)
                if (combo[i] != 0 && simple_set.find(i) == simple_set.end()) in_span = false;
            if (in_span && !simple_set.empty()) continue;
            Weight w0{mu0}, wv{v};
            Rational a = pairing(datum, w0, r);
            Rational b = pairing(datum, wv, r);
            if (b == 0) {
                if (a <= 0) return false;
            } else if (b > 0) {
                Rational bound = -a / b;
                if (bound > lo) lo = bound;
            } else {
                Rational bound = -a / b;
                if (bound < hi) hi = bound;
            }
        }
        return lo < hi;
    }
    // full kernel (theta = id, f = 0): any strictly dominant mu works
    std::vector<Rational> rho(n, Rational(1));
    return feasible(rho);
}

}  // namespace

bool cone_membership(const HCParameter& p, const std::set<size_t>& simple_set,
                     const Weight& f_weight, bool positivity) {
    const auto& g = catalog_group(p.group);
    const auto& o = g.orbit(p.orbit_id);
    // Phi_S must be theta_Q-stable
    for (size_t i : simple_set) {
        std::vector<Rational> alpha(g.datum.rank);
        for (int j = 0; j < g.datum.rank; ++j) alpha[j] = Rational(g.datum.cartan[i][j]);
        auto image = o.theta_q.apply_vec(alpha);
        bool ok = false;
        for (size_t k : simple_set) {
            std::vector<Rational> beta(g.datum.rank);
            for (int j = 0; j < g.datum.rank; ++j) beta[j] = Rational(g.datum.cartan[k][j]);
            bool plus = true, minus = true;
            for (int j = 0; j < g.datum.rank; ++j) {
                if (image[j] != beta[j]) plus = false;
                if (image[j] != -beta[j]) minus = false;
            }
            if (plus || minus) ok = true;
        }
        if (!ok) throw std::domain_error("Phi_S not stable under theta_Q");
    }
    // f in h*_S
    for (size_t i : simple_set)
        if (f_weight.coords[i] != 0) return false;
    // f in the (-1)-eigenspace
    auto image = o.theta_q.apply(f_weight);
    Weight neg = f_weight.scaled(Rational(-1));
    if (!(image == neg)) return false;
    if (!positivity) return true;
    return positive_preimage_exists(g.datum, o.theta_q, simple_set, f_weight);
}

}  // namespace hodge
