#include "hodge/tempered.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace hodge {

namespace {

// Monomial count on the pair of lines {xy = 0}: degree 0 holds the
// constant; degree n >= 1 holds x^n and y^n with K-weights +/- step n.
void line_pair_cone(long step, long eta_weight, long window, HodgeChar& out) {
    out.add_entry(KType{eta_weight, 0}, 0, 1);
    for (long n = 1;; ++n) {
        long up = eta_weight + step * n;
        long down = eta_weight - step * n;
        if (std::labs(up) > window && std::labs(down) > window) break;
        out.add_entry(KType{up, 0}, n, 1);
        out.add_entry(KType{down, 0}, n, 1);
    }
}

// The sign local system on the line pair: its weight points outward on
// each line, so the degree-n sections carry weights +-(|eta| + step n).
void line_pair_cone_signed(long step, long eta_abs, long window, HodgeChar& out) {
    for (long n = 0;; ++n) {
        long w = eta_abs + step * n;
        if (w > window) break;
        out.add_entry(KType{w, 0}, n, 1);
        out.add_entry(KType{-w, 0}, n, 1);
    }
}

// Monomial count on the quadric cone {x^2 + yz = 0} in C^3 with
// K-weights x: 0, y: +2, z: -2.  The basis is y^i z^j and x y^i z^j;
// per degree the weights assemble into the single K-type V(2d).
void quadric_cone(long window, HodgeChar& out) {
    for (long d = 0; 2 * d <= window; ++d) {
        std::map<long, long> weights;
        for (long i = 0; i + 0 <= d; ++i) {
            long j = d - i;
            weights[2 * (i - j)] += 1;  // y^i z^j
        }
        for (long i = 0; i + 1 <= d; ++i) {
            long j = d - 1 - i;
            weights[2 * (i - j)] += 1;  // x y^i z^j
        }
        // peel highest weights into K-types
        while (!weights.empty()) {
            long top = weights.rbegin()->first;
            if (top < 0) throw std::logic_error("cone weight multiset not a K-character");
            for (long w = -top; w <= top; w += 2) {
                auto it = weights.find(w);
                if (it == weights.end() || it->second == 0)
                    throw std::logic_error("cone weight multiset not a K-character");
                if (--it->second == 0) weights.erase(it);
            }
            out.add_entry(KType{top, 0}, d, 1);
        }
    }
}

}  // namespace

HodgeChar split_tempered_gr(const std::string& group, const KType& eta, long window) {
    const auto& g = catalog_group(group);
    HodgeChar out;
    out.window = window;
    if (group == "sl2r") {
        if (!g.orbit("open").split_formula) throw std::domain_error("group not split-type in catalog");
        if (eta.weight == 0)
            line_pair_cone(2, 0, window, out);
        else if (std::labs(eta.weight) == 1)
            line_pair_cone_signed(2, 1, window, out);
        else
            throw std::domain_error("no such local system on the open orbit");
        return out;
    }
    if (group == "sl2r_metaplectic") {
        if (!g.orbit("open").split_formula) throw std::domain_error("group not split-type in catalog");
        if (eta.weight % 2 == 0) throw std::domain_error("metaplectic eta must be genuine (odd weight)");
        line_pair_cone(4, eta.weight, window, out);
        return out;
    }
    if (group == "sl2c") {
        // split-mod-center Levi of the closed orbit; the cone is the
        // full nilpotent cone of sl2
        if (eta.weight != 0) throw std::domain_error("sl2c catalog eta is the trivial K-type");
        quadric_cone(window, out);
        return out;
    }
    throw std::invalid_argument("unknown group: " + group);
}

HodgeChar cohind_char(const HodgeChar& chi_l, const CohindEmbedding& emb, long window) {
    // p/k_P must embed in g/k
    std::multiset<long> complement(emb.gk_weights.begin(), emb.gk_weights.end());
    for (long w : emb.pk_weights) {
        auto it = complement.find(w);
        if (it == complement.end())
            throw std::invalid_argument("inconsistent embedding data: p/k_P not inside g/k");
        complement.erase(it);
    }
    if (static_cast<int>(complement.size()) != emb.codim)
        throw std::invalid_argument("inconsistent embedding data: codimension mismatch");
    for (long w : complement)
        if (w == 0) throw std::invalid_argument("embedding data with a trivial complement weight");

    HodgeChar out;
    out.window = window;
    out.kprime = chi_l.kprime;

    long span = 0;
    for (const auto& [key, m] : chi_l.entries) {
        (void)m;
        span = std::max(span, std::labs(key.first.weight));
    }
    long min_abs = window;
    for (long w : complement) min_abs = std::min(min_abs, std::labs(w));
    long max_sym = (2 * window + span) / std::max(1L, min_abs) + 2;

    // graded character of Sym(complement): weights per symmetric degree
    std::vector<std::map<long, long>> sym(static_cast<size_t>(max_sym) + 1);
    sym[0][0] = 1;
    std::vector<long> comp(complement.begin(), complement.end());
    for (long w : comp) {
        // multiply by 1/(1 - t u^w): prefix sums along the w-direction
        for (long m = 1; m <= max_sym; ++m) {
            for (const auto& [wt, mult] : sym[m - 1]) sym[m][wt + w] += mult;
        }
    }

    for (const auto& [key, lmult] : chi_l.entries) {
        for (long m = 0; m <= max_sym; ++m) {
            for (const auto& [wt, mult] : sym[m]) {
                long weight = key.first.weight + emb.det_weight + wt;
                long degree = key.second + m + emb.codim;
                int theta = key.first.theta;
                if (theta != 0 && (m + emb.codim) % 2 != 0) theta = -theta;
                if (emb.induction == "torus") {
                    out.add_entry(KType{weight, theta}, degree, lmult * mult);
                } else if (emb.induction == "sl2") {
                    if (weight >= 0) out.add_entry(KType{weight, theta}, degree, lmult * mult);
                } else {
                    throw std::invalid_argument("unknown induction tag: " + emb.induction);
                }
            }
        }
    }
    return out;
}

CohindEmbedding cohind_embedding_for(const HCParameter& p) {
    const auto& g = catalog_group(p.group);
    (void)g;
    if (p.group == "sl2r") {
        if (p.orbit_id == "closed_plus") return {{2, -2}, {-2}, 2, 1, "torus"};
        if (p.orbit_id == "closed_minus") return {{2, -2}, {2}, -2, 1, "torus"};
    }
    if (p.group == "sl2r_metaplectic") {
        if (p.orbit_id == "closed_plus") return {{4, -4}, {-4}, 4, 1, "torus"};
        if (p.orbit_id == "closed_minus") return {{4, -4}, {4}, -4, 1, "torus"};
    }
    if (p.group == "sl2c" && p.orbit_id == "closed") return {{2, 0, -2}, {0, -2}, 2, 1, "sl2"};
    throw std::invalid_argument("no cohind embedding for orbit " + p.orbit_id);
}

HodgeChar cohind_levi_char(const HCParameter& p, long window, bool kprime) {
    HodgeChar chi;
    chi.window = window;
    chi.kprime = kprime;
    long w = 0;
    if (p.group == "sl2r") {
        // lowest K-type k = lambda + 1, Levi character k - 2
        long k = to_long(family_coordinate(p)) + 1;
        w = (p.orbit_id == "closed_plus") ? k - 2 : -(k - 2);
    } else if (p.group == "sl2r_metaplectic") {
        // stored lowest weight 2(lambda + 1), Levi character 4 lower
        Rational twice = family_coordinate(p) * 2;
        long kst = to_long(twice) + 2;
        w = (p.orbit_id == "closed_plus") ? kst - 4 : -(kst - 4);
    } else if (p.group == "sl2c") {
        // label m<2k>: tempered lowest K-type V(2k), Levi weight 2k - 2
        long m = std::stol(p.gamma_label.substr(1));
        w = m - 2;
    } else {
        throw std::invalid_argument("no Levi character for group " + p.group);
    }
    chi.add_entry(KType{w, kprime ? +1 : 0}, 0, 1);
    return chi;
}

HodgeChar tempered_hodge_char(const HCParameter& p, long window, bool kprime) {
    if (!is_tempered(p)) throw std::domain_error("parameter is not tempered");
    const auto& g = catalog_group(p.group);
    const auto& orbit = g.orbit(p.orbit_id);

    HodgeChar chi;
    if (p.orbit_id == "open" && orbit.split_formula) {
        long eta = 0;
        if (p.group == "sl2r_metaplectic") eta = (p.gamma_label == "genuine_plus") ? 1 : -1;
        if (p.group == "sl2r" && p.gamma_label != "even")
            throw std::domain_error("odd open-orbit parameter is not tempered");
        chi = split_tempered_gr(p.group, KType{eta, 0}, window);
        chi = shift(chi, p.codim_c);  // c = 0 for the catalog open orbits
    } else {
        auto levi = cohind_levi_char(p, window, false);
        chi = cohind_char(levi, cohind_embedding_for(p), window);
        // the embedding data already carries the codimension shift
    }

    if (!kprime) return chi;
    // canonical extended-group structure: theta acts on degree p by
    // (-1)^(p + c), positive on the lowest piece
    std::map<std::pair<KType, long>, int> signs;
    for (const auto& [key, m] : chi.entries) {
        (void)m;
        signs[key] = ((key.second + p.codim_c) % 2 + 2) % 2 == 0 ? +1 : -1;
    }
    return extend_to_kprime(chi, KPrimeMode::sign_table, &signs);
}

}  // namespace hodge
