#include "hodge/wallcross.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hodge/tempered.hpp"

namespace hodge {

namespace {

HCParameter canonical_key(const HCParameter& p) {
    HCParameter k = p;
    k.theta_lift.reset();
    return k;
}

HodgeChar twist_theta(const HodgeChar& chi, int lift) {
    if (lift >= 0) return chi;
    HodgeChar r;
    r.window = chi.window;
    r.kprime = chi.kprime;
    r.overflow = chi.overflow;
    for (const auto& [key, m] : chi.entries) {
        KType k = key.first;
        k.theta = -k.theta;
        r.add_entry(k, key.second, m);
    }
    return r;
}

SigChar twist_theta(const SigChar& s, int lift) {
    if (lift >= 0) return s;
    SigChar r;
    r.window = s.window;
    r.kprime = s.kprime;
    for (const auto& [k, v] : s.entries) {
        KType kk = k;
        kk.theta = -kk.theta;
        r.add_entry(kk, v[0], v[1]);
    }
    return r;
}

// theta_lift of a wall constituent: (-1)^(chain distance) from the
// family's normalized lowest K-type to the constituent's lowest stored
// weight, counted in steps of the family's K-weight lattice.
int chain_lift(long eta, long lowest, long step) {
    long dist = std::labs(lowest - eta) / step;
    return dist % 2 == 0 ? +1 : -1;
}

}  // namespace

BlockData builtin_block_data(const HCParameter& p) {
    BlockData bd;
    bd.ray = deformation_ray(p);
    bd.provenance = "builtin";
    if (bd.ray.degenerate) return bd;

    const Rational nu = family_coordinate(p);

    auto wall_s = [&](const Rational& m) -> Rational { return (m - nu) / (2 * nu); };

    if (p.group == "sl2r" && p.orbit_id == "open") {
        if (p.gamma_label == "even") {
            for (long m = 1; Rational(m) <= nu; m += 2) {
                WallSpec w;
                w.s = wall_s(Rational(m));
                Weight lw{{Rational(m)}};
                long k = m + 1;
                w.layers.push_back({1, make_parameter("sl2r", "closed_plus", lw, "ds",
                                                      chain_lift(0, k, 2)),
                                    1});
                w.layers.push_back({1, make_parameter("sl2r", "closed_minus", lw, "ds",
                                                      chain_lift(0, -k, 2)),
                                    1});
                bd.walls.push_back(w);
            }
        } else {
            // the odd local system degenerates at the ray endpoint: the
            // limits of discrete series enter as a wall at s0
            WallSpec endpoint;
            endpoint.s = Rational(-1, 2);
            Weight zero{{Rational(0)}};
            endpoint.layers.push_back(
                {1, make_parameter("sl2r", "closed_plus", zero, "ds", chain_lift(1, 1, 2)), 1});
            endpoint.layers.push_back(
                {1, make_parameter("sl2r", "closed_minus", zero, "ds", chain_lift(1, -1, 2)), 1});
            bd.walls.push_back(endpoint);
            for (long m = 2; Rational(m) <= nu; m += 2) {
                WallSpec w;
                w.s = wall_s(Rational(m));
                Weight lw{{Rational(m)}};
                long k = m + 1;
                w.layers.push_back({1, make_parameter("sl2r", "closed_plus", lw, "ds",
                                                      chain_lift(1, k, 2)),
                                    1});
                w.layers.push_back({1, make_parameter("sl2r", "closed_minus", lw, "ds",
                                                      chain_lift(1, -k, 2)),
                                    1});
                bd.walls.push_back(w);
            }
        }
        return bd;
    }

    if (p.group == "sl2r_metaplectic" && p.orbit_id == "open") {
        long eta = p.gamma_label == "genuine_plus" ? 1 : -1;
        // walls at half-odd family coordinates; each splits off one
        // lowest- or highest-weight tower depending on the residue
        for (long twice = 1; make_rational(twice, 2) <= nu; twice += 2) {
            Rational w_pos = make_rational(twice, 2);
            WallSpec w;
            w.s = wall_s(w_pos);
            long stored = twice + 2;  // 2(w + 1), lowest stored weight of the split tower
            // does the upper tower (j = w+1) lie in this family?
            long residue = ((stored % 4) + 4) % 4;
            long family_residue = eta == 1 ? 1 : 3;
            Weight lw{{w_pos}};
            if (residue == family_residue) {
                w.layers.push_back({1, make_parameter("sl2r_metaplectic", "closed_plus", lw,
                                                      "genuine", chain_lift(eta, stored, 4)),
                                    1});
            } else {
                w.layers.push_back({1, make_parameter("sl2r_metaplectic", "closed_minus", lw,
                                                      "genuine", chain_lift(eta, -stored, 4)),
                                    1});
            }
            bd.walls.push_back(w);
        }
        return bd;
    }

    if (p.group == "sl2c" && p.orbit_id == "open") {
        if (p.lambda.coords[0] != p.lambda.coords[1])
            throw std::domain_error("missing block data: built-in sl2c tables cover symmetric lambda");
        // the spherical local system degenerates at lambda = 0; the
        // tempered closed-orbit parameter enters at the endpoint
        WallSpec endpoint;
        endpoint.s = Rational(-1, 2);
        Weight zero{{Rational(0), Rational(0)}};
        endpoint.layers.push_back({1, make_parameter("sl2c", "closed", zero, "m0", +1), 1});
        bd.walls.push_back(endpoint);
        for (long k = 1; Rational(k) <= nu; ++k) {
            WallSpec w;
            w.s = wall_s(Rational(k));
            Weight lw{{Rational(k), Rational(k)}};
            w.layers.push_back({1, make_parameter("sl2c", "closed", lw, "m" + std::to_string(2 * k),
                                                  k % 2 == 0 ? +1 : -1),
                                1});
            bd.walls.push_back(w);
        }
        return bd;
    }

    if (p.group == "sl2c" && p.orbit_id == "closed") {
        // closed orbits extend cleanly: the ray has no walls
        return bd;
    }

    throw std::domain_error("missing block data for group " + p.group + " orbit " + p.orbit_id);
}

std::vector<Rational> find_walls(const HCParameter& p, const BlockData* external) {
    std::vector<Rational> out;
    if (is_tempered(p)) return out;
    if (!is_regular(p)) return out;
    BlockData bd = external != nullptr ? *external : builtin_block_data(p);
    for (const auto& w : bd.walls) out.push_back(w.s);
    return out;
}

bool CharacterLedger::lookup(const HCParameter& key, HodgeChar& chi, SigChar& sig) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return false;
    chi = it->second.first;
    sig = it->second.second;
    return true;
}

void CharacterLedger::store(const HCParameter& key, const HodgeChar& chi, const SigChar& sig) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, std::make_pair(chi, sig));
}

Engine::Engine(long window, bool kprime) : window_(window), kprime_(kprime) {
    if (window < 4) throw std::invalid_argument("window must be at least 4");
}

void Engine::set_external_block_data(const BlockData& bd) { external_ = bd; }

BlockData Engine::block_data_for(const HCParameter& p) const {
    if (external_ && canonical_key(external_->ray.base) == canonical_key(p)) return *external_;
    return builtin_block_data(p);
}

std::pair<HodgeChar, SigChar> Engine::compute_pair(const HCParameter& p, int depth) {
    if (depth > 64) throw std::domain_error("wall-crossing recursion does not terminate");
    HCParameter key = canonical_key(p);
    HodgeChar chi;
    SigChar sig;
    if (ledger_.lookup(key, chi, sig)) return {chi, sig};

    chi.window = window_;
    chi.kprime = kprime_;
    sig.window = window_;
    sig.kprime = kprime_;

    if (!is_regular(p)) {
        ledger_.store(key, chi, sig);
        return {chi, sig};
    }
    if (is_tempered(p)) {
        chi = tempered_hodge_char(p, window_, kprime_);
        // tempered positivity: the signature is the parity pattern of
        // the Hodge degrees
        sig = reduce_mod(chi, p.codim_c);
        ledger_.store(key, chi, sig);
        return {chi, sig};
    }

    BlockData bd = block_data_for(p);
    Rational s0 = s_zero(bd.ray);
    HCParameter base = parameter_at(bd.ray, s0);
    if (is_regular(base) && !is_tempered(base))
        throw std::domain_error("missing block data: ray endpoint is neither tempered nor zero");

    auto [acc_chi, acc_sig] = compute_pair(base, depth + 1);

    const auto& g = catalog_group(p.group);
    int target_dim = g.orbit(p.orbit_id).dim;

    std::vector<WallSpec> walls = bd.walls;
    std::sort(walls.begin(), walls.end(),
              [](const WallSpec& a, const WallSpec& b) { return a.s < b.s; });

    for (const auto& wall : walls) {
        if (wall.s < s0 || wall.s > 0) throw std::domain_error("wall outside the deformation ray");
        HodgeChar sum_shifted{window_, kprime_, {}, {}};
        HodgeChar sum_plain{window_, kprime_, {}, {}};
        SigChar sum_sig{window_, kprime_, {}};
        SigChar sum_sig_zeta{window_, kprime_, {}};
        for (const auto& layer : wall.layers) {
            if (layer.n < 1) throw std::domain_error("block data layer index must be positive");
            const auto& cg = catalog_group(layer.constituent.group);
            int cdim = cg.orbit(layer.constituent.orbit_id).dim;
            if (is_regular(layer.constituent) && cdim >= target_dim)
                throw std::domain_error(
                    "block data violates the recursion termination rule (orbit dimension)");
            if (layer.constituent.weight_w != p.weight_w - layer.n) {
                std::ostringstream os;
                os << "layer weight rule violated at s = " << format_rational(wall.s)
                   << ": constituent weight " << layer.constituent.weight_w << ", expected "
                   << p.weight_w - layer.n;
                warnings_.push_back(os.str());
            }
            auto [lchi, lsig] = compute_pair(layer.constituent, depth + 1);
            if (kprime_) {
                if (!layer.constituent.theta_lift)
                    throw std::domain_error("layer constituent missing theta_lift");
                int lift = *layer.constituent.theta_lift;
                lchi = twist_theta(lchi, lift);
                lsig = twist_theta(lsig, lift);
            }
            sum_shifted = add(sum_shifted, scale(shift(lchi, -layer.n), layer.multiplicity));
            sum_plain = add(sum_plain, scale(lchi, layer.multiplicity));
            sum_sig = add(sum_sig, scale(lsig, layer.multiplicity));
            sum_sig_zeta = add(sum_sig_zeta, scale(zeta_shift(lsig, layer.n), layer.multiplicity));
        }
        if (wall.s == s0) {
            // crossing up from the endpoint: upper-side formulas
            acc_chi = add(acc_chi, sum_shifted);
            acc_sig = add(acc_sig, sum_sig);
        } else if (wall.s == 0) {
            // the requested parameter sits on a wall: answer for the
            // layer-0 constituent via the lower-side formulas
            warnings_.push_back("parameter lies on a wall; returning the layer-0 constituent");
            acc_chi = add(acc_chi, scale(sum_plain, -1));
            acc_sig = add(acc_sig, scale(sum_sig_zeta, -1));
        } else {
            acc_chi = add(acc_chi, add(sum_shifted, scale(sum_plain, -1)));
            acc_sig = add(acc_sig, add(sum_sig, scale(sum_sig_zeta, -1)));
        }
    }

    // refuse to memoize an entry that violates the main identity
    SigChar reduced = reduce_mod(acc_chi, p.codim_c);
    if (equal_on_window(reduced, acc_sig, window_)) {
        ledger_.store(key, acc_chi, acc_sig);
    } else {
        warnings_.push_back("character pair fails the main identity; not memoized");
    }
    return {acc_chi, acc_sig};
}

HodgeChar Engine::hodge_char(const HCParameter& p) { return compute_pair(p, 0).first; }

SigChar Engine::sig_char(const HCParameter& p) { return compute_pair(p, 0).second; }

VerifyReport Engine::verify_identity(const HCParameter& p) {
    VerifyReport report;
    auto [chi, sig] = compute_pair(p, 0);
    SigChar reduced = reduce_mod(chi, p.codim_c);

    auto collect = [](const SigChar& s, std::map<KType, std::array<long, 2>>& m) {
        for (const auto& [k, v] : s.entries) m[k] = v;
    };
    std::map<KType, std::array<long, 2>> lhs, rhs;
    collect(reduced, lhs);
    collect(sig, rhs);
    std::set<KType> keys;
    for (const auto& [k, v] : lhs) {
        (void)v;
        keys.insert(k);
    }
    for (const auto& [k, v] : rhs) {
        (void)v;
        keys.insert(k);
    }
    for (const auto& k : keys) {
        std::array<long, 2> a{0, 0}, b{0, 0};
        if (lhs.count(k)) a = lhs[k];
        if (rhs.count(k)) b = rhs[k];
        if (a != b) {
            report.ok = false;
            report.failures.push_back({k, a, b, "identity"});
        }
    }

    // multiplicity conservation at u = 1
    VirtualKChar at_one = specialize_u1(chi);
    VirtualKChar totals = total_multiplicity(sig);
    std::set<KType> mult_keys;
    for (const auto& [k, v] : at_one.entries) {
        (void)v;
        mult_keys.insert(k);
    }
    for (const auto& [k, v] : totals.entries) {
        (void)v;
        mult_keys.insert(k);
    }
    for (const auto& k : mult_keys) {
        long a = at_one.entries.count(k) ? at_one.entries.at(k) : 0;
        long b = totals.entries.count(k) ? totals.entries.at(k) : 0;
        if (a != b) {
            report.ok = false;
            report.failures.push_back({k, {a, 0}, {b, 0}, "conservation"});
        }
    }

    // a genuine signature has nonnegative entries; a defective block
    // table (for example a doubled multiplicity) violates this even
    // when the parity bookkeeping still balances
    for (const auto& [k, v] : sig.entries) {
        if (v[0] < 0 || v[1] < 0) {
            report.ok = false;
            report.failures.push_back({k, {0, 0}, v, "conservation"});
        }
    }
    report.warnings.insert(report.warnings.end(), warnings_.begin(), warnings_.end());
    return report;
}

UnitarityVerdict Engine::unitarity_test(const HCParameter& p, std::string* note) {
    if (!is_regular(p)) throw std::domain_error("unitarity test needs a regular parameter");
    const auto& g = catalog_group(p.group);
    const auto& orbit = g.orbit(p.orbit_id);
    bool hermitian = orbit.theta_stable;
    if (p.group == "sl2c" && p.lambda.coords[0] != p.lambda.coords[1]) hermitian = false;
    if (!hermitian) return UnitarityVerdict::not_hermitian;

    Engine kengine(window_, true);
    if (external_) kengine.set_external_block_data(*external_);
    HodgeChar chi = kengine.hodge_char(p);
    if (note != nullptr) {
        for (const auto& w : kengine.warnings()) {
            if (!note->empty()) *note += "; ";
            *note += w;
        }
    }
    // theta must act by sigma (-1)^p for a single sigma
    int sigma = 0;
    for (const auto& [key, m] : chi.entries) {
        if (m == 0) continue;
        int s = key.first.theta * ((key.second % 2 + 2) % 2 == 0 ? +1 : -1);
        if (sigma == 0) sigma = s;
        if (s != sigma) return UnitarityVerdict::nonunitary;
    }
    return UnitarityVerdict::unitary;
}

}  // namespace hodge
