#include "hodge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace hodge {

namespace {

bool is_sl2c(const GKModel& m) { return m.group == "sl2c"; }

// sl2c tower index from the stored weight (highest weight 2l).
long tower_index(long w) { return w / 2; }

}  // namespace

Rational GKModel::raise_coeff(long w) const {
    if (is_sl2c(*this)) {
        long l = tower_index(w);
        return Rational(l + 1) * (Rational(l + 1) + nu) / Rational(2 * l + 1);
    }
    // half-integer weight for the metaplectic cover, stored doubled
    Rational j = Rational(w) / (group == "sl2r_metaplectic" ? 2 : 1);
    if (family == Family::fd) return (Rational(k_lowest - 1) - j) / 2;
    return (nu + j + 1) / 2;
}

Rational GKModel::lower_coeff(long w) const {
    if (is_sl2c(*this)) {
        long l = tower_index(w);
        if (l == 0) return Rational(0);
        return 2 * (Rational(l) - nu);
    }
    Rational j = Rational(w) / (group == "sl2r_metaplectic" ? 2 : 1);
    if (family == Family::fd) return (Rational(k_lowest - 1) + j) / 2;
    return (nu - j + 1) / 2;
}

long GKModel::lowest_ktype() const {
    if (weights.empty()) throw std::domain_error("empty model");
    long best = weights.front();
    for (long w : weights)
        if (std::labs(w) < std::labs(best) || (std::labs(w) == std::labs(best) && w > best))
            best = w;
    return best;
}

GKModel build_model(const std::string& group, Family family, const Rational& nu, int parity,
                    long k_or_m, long window) {
    GKModel m;
    m.group = group;
    m.family = family;
    m.nu = nu;
    m.parity = parity;
    m.k_lowest = k_or_m;
    m.window = window;
    if (window < 4) throw std::invalid_argument("model window too small");

    if (group == "sl2c") {
        if (family != Family::ps) throw std::invalid_argument("sl2c oracle models the spherical family");
        m.step = 2;
        for (long w = 0; w <= window; w += 2) m.weights.push_back(w);
        return m;
    }
    if (group == "sl2r") {
        m.step = 2;
        switch (family) {
            case Family::ps:
                if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
                for (long w = -window; w <= window; ++w)
                    if (((w % 2) + 2) % 2 == parity) m.weights.push_back(w);
                return m;
            case Family::ds: {
                if (k_or_m == 0) throw std::invalid_argument("ds needs a nonzero lowest weight");
                m.nu = Rational(std::labs(k_or_m) - 1);
                if (k_or_m > 0) {
                    for (long w = k_or_m; w <= window; w += 2) m.weights.push_back(w);
                } else {
                    for (long w = k_or_m; w >= -window; w -= 2) m.weights.push_back(w);
                    std::reverse(m.weights.begin(), m.weights.end());
                }
                return m;
            }
            case Family::fd: {
                if (k_or_m < 1) throw std::invalid_argument("fd needs dimension >= 1");
                m.nu = Rational(k_or_m);
                for (long w = -(k_or_m - 1); w <= k_or_m - 1; w += 2) m.weights.push_back(w);
                return m;
            }
        }
    }
    if (group == "sl2r_metaplectic") {
        m.step = 4;
        switch (family) {
            case Family::ps: {
                if (parity != 1 && parity != 3)
                    throw std::invalid_argument("metaplectic residue class must be 1 or 3");
                long start = parity == 1 ? 1 : 3;
                for (long w = -window; w <= window; ++w)
                    if (((w - start) % 4 + 4) % 4 == 0) m.weights.push_back(w);
                return m;
            }
            case Family::ds: {
                if (k_or_m % 2 == 0) throw std::invalid_argument("metaplectic ds weight must be odd");
                m.nu = Rational(std::labs(k_or_m)) / 2 - 1;
                if (k_or_m > 0) {
                    for (long w = k_or_m; w <= window; w += 4) m.weights.push_back(w);
                } else {
                    for (long w = k_or_m; w >= -window; w -= 4) m.weights.push_back(w);
                    std::reverse(m.weights.begin(), m.weights.end());
                }
                return m;
            }
            case Family::fd:
                throw std::invalid_argument("no genuine finite-dimensional metaplectic models");
        }
    }
    throw std::invalid_argument("unknown oracle group: " + group);
}

namespace {

// Step ratio value(upper)/value(lower) for the invariant form across
// one raising step, by the invariance recursion.  For the compact form
// sigma_c(E) = -F; for the split form sigma(E) = F; the sl2c tower has
// the extra Clebsch-Gordan factor and its own sign structure.
Rational step_ratio(const GKModel& m, FormKind kind, long w_lo) {
    Rational a = m.raise_coeff(w_lo);
    Rational b = m.lower_coeff(w_lo + m.step);
    if (a == 0) throw std::domain_error("invariant form recursion degenerates (raising coefficient 0)");
    if (is_sl2c(m)) {
        long l = tower_index(w_lo);
        Rational cg = Rational(2 * l + 1) / Rational(2 * l + 3);
        Rational r = cg * b / a;
        return kind == FormKind::u_r ? -r : r;
    }
    Rational r = b / a;
    return kind == FormKind::u_r ? r : -r;
}

}  // namespace

FormTable invariant_form(const GKModel& model, FormKind kind) {
    FormTable t;
    t.kind = kind;
    const auto& ws = model.weights;
    long low = model.lowest_ktype();
    size_t li = std::find(ws.begin(), ws.end(), low) - ws.begin();
    t.values[low] = 1;
    // A step with both coefficients zero is a direct-sum break; the
    // form restarts there, normalized positive at the new block's
    // lowest weight.  A single vanishing coefficient is a genuine
    // degeneration (wall parameter).
    auto broken = [&](long w_lo) {
        return model.raise_coeff(w_lo) == 0 && model.lower_coeff(w_lo + model.step) == 0;
    };
    for (size_t i = li; i + 1 < ws.size(); ++i) {
        if (broken(ws[i])) {
            t.values[ws[i + 1]] = 1;
            continue;
        }
        Rational r = step_ratio(model, kind, ws[i]);
        if (r == 0) throw std::domain_error("invariant form degenerate at weight step");
        t.values[ws[i + 1]] = t.values[ws[i]] * r;
    }
    for (size_t i = li; i > 0; --i) {
        if (broken(ws[i - 1])) {
            t.values[ws[i - 1]] = 1;
            continue;
        }
        Rational r = step_ratio(model, kind, ws[i - 1]);
        if (r == 0) throw std::domain_error("invariant form degenerate at weight step");
        t.values[ws[i - 1]] = t.values[ws[i]] / r;
    }
    for (const auto& [w, v] : t.values) {
        (void)w;
        if (v == 0) throw std::domain_error("invariant form degenerate");
    }
    return t;
}

SigChar signature_char_direct(const GKModel& model, long window) {
    auto form = invariant_form(model, FormKind::u_r);
    SigChar s;
    s.window = window;
    for (const auto& [w, v] : form.values) {
        if (std::labs(w) > window) continue;
        if (v > 0)
            s.add_entry(KType{w, 0}, 1, 0);
        else
            s.add_entry(KType{w, 0}, 0, 1);
    }
    return s;
}

std::map<long, int> theta_eigenvalues(const GKModel& model) {
    auto u = invariant_form(model, FormKind::u_r);
    auto g = invariant_form(model, FormKind::g_r);
    std::map<long, int> out;
    for (const auto& [w, v] : u.values) out[w] = sign_of(g.values.at(w)) * sign_of(v);
    return out;
}

HodgeChar hodge_filtration_direct(const GKModel& model, long window) {
    bool tempered_ok = false;
    if (model.family == Family::ps && model.nu == 0) tempered_ok = true;
    if (model.family == Family::ds) tempered_ok = true;
    if (model.family == Family::fd && model.k_lowest == 1) tempered_ok = true;
    if (!tempered_ok) throw std::domain_error("model is not tempered");

    // generate from the lowest K-type subspace, one PBW degree per step
    const auto& ws = model.weights;
    long low_abs = std::labs(model.lowest_ktype());
    std::map<long, long> degree;
    std::deque<long> queue;
    for (long w : ws)
        if (std::labs(w) == low_abs) {
            degree[w] = 0;
            queue.push_back(w);
        }
    while (!queue.empty()) {
        long w = queue.front();
        queue.pop_front();
        long d = degree[w];
        if (std::find(ws.begin(), ws.end(), w + model.step) != ws.end() &&
            model.raise_coeff(w) != 0 && !degree.count(w + model.step)) {
            degree[w + model.step] = d + 1;
            queue.push_back(w + model.step);
        }
        if (std::find(ws.begin(), ws.end(), w - model.step) != ws.end() &&
            model.lower_coeff(w) != 0 && !degree.count(w - model.step)) {
            degree[w - model.step] = d + 1;
            queue.push_back(w - model.step);
        }
    }
    HodgeChar chi;
    chi.window = window;
    for (const auto& [w, d] : degree) {
        if (std::labs(w) > window) continue;
        chi.add_entry(KType{w, 0}, d, 1);
    }
    return chi;
}

bool g_form_definite(const GKModel& model) {
    auto g = invariant_form(model, FormKind::g_r);
    int s = 0;
    for (const auto& [w, v] : g.values) {
        (void)w;
        int sv = sign_of(v);
        if (s == 0) s = sv;
        if (sv != s) return false;
    }
    return true;
}

bool action_consistent(const GKModel& model) {
    const auto& ws = model.weights;
    if (is_sl2c(model)) {
        // bracket identity on the tower:
        //   -tau_l l/(l+1) + tau_{l-1} (2l-1)/(2l+1) = -2l,
        // tau_l = a_l b_{l+1}.
        for (size_t i = 0; i + 1 < ws.size(); ++i) {
            long l = tower_index(ws[i + 1]);
            Rational tau_l = model.raise_coeff(2 * l) * model.lower_coeff(2 * l + 2);
            Rational tau_prev = l >= 1 ? model.raise_coeff(2 * (l - 1)) * model.lower_coeff(2 * l)
                                       : Rational(0);
            Rational lhs = -tau_l * Rational(l) / Rational(l + 1);
            if (l >= 1) lhs += tau_prev * Rational(2 * l - 1) / Rational(2 * l + 1);
            if (lhs != Rational(-2 * l)) return false;
        }
        return true;
    }
    // [E,F] = h and Casimir constancy on consecutive weights
    bool have = false;
    Rational omega;
    bool metaplectic = model.group == "sl2r_metaplectic";
    for (long w : ws) {
        bool up = std::find(ws.begin(), ws.end(), w + model.step) != ws.end();
        bool down = std::find(ws.begin(), ws.end(), w - model.step) != ws.end();
        Rational j = Rational(w) / (metaplectic ? 2 : 1);
        Rational ef = down ? model.lower_coeff(w) * model.raise_coeff(w - model.step) : Rational(0);
        Rational fe = up ? model.raise_coeff(w) * model.lower_coeff(w + model.step) : Rational(0);
        // interior weights must satisfy [E,F] v = h v exactly
        if (up && down && ef - fe != j) return false;
        if (up) {
            Rational c = j * j + 2 * j + 4 * fe;
            if (!have) {
                omega = c;
                have = true;
            } else if (c != omega) {
                return false;
            }
        }
    }
    return true;
}

Rational casimir_scalar(const GKModel& model) {
    if (is_sl2c(model)) return 2 * (1 - model.nu * model.nu);  // tau_0
    return model.nu * model.nu - 1;
}

std::vector<Rational> reducibility_points(const std::string& group, Family family, int parity,
                                          const Rational& lo, const Rational& hi, long window) {
    if (family != Family::ps) throw std::invalid_argument("reducibility scan is for the ps families");
    std::set<Rational> points;
    auto consider = [&](const Rational& nu) {
        if (nu > lo && nu <= hi) points.insert(nu);
    };
    if (group == "sl2c") {
        // a_l = 0 at nu = -(l+1); b_l = 0 at nu = l
        for (long l = 0; 2 * l <= window; ++l) {
            consider(Rational(l));
            consider(Rational(-(l + 1)));
        }
    } else {
        GKModel probe = build_model(group, Family::ps, Rational(0), parity, 0, window);
        bool metaplectic = group == "sl2r_metaplectic";
        for (long w : probe.weights) {
            Rational j = Rational(w) / (metaplectic ? 2 : 1);
            consider(j - 1);    // lowering coefficient vanishes
            consider(-j - 1);   // raising coefficient vanishes
        }
    }
    return std::vector<Rational>(points.begin(), points.end());
}

}  // namespace hodge
