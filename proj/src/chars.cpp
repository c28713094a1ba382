#include "hodge/chars.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

void require_same_window(long wa, long wb) {
    if (wa != wb) throw std::invalid_argument("window mismatch");
}

void require_same_grading(bool a, bool b) {
    if (a != b) throw std::invalid_argument("cannot mix K and K' graded characters");
}

}  // namespace

void VirtualKChar::add_entry(const KType& k, long mult) {
    if (mult == 0) return;
    if (std::labs(k.weight) > window) return;
    long& m = entries[k];
    m += mult;
    if (m == 0) entries.erase(k);
}

void HodgeChar::add_entry(const KType& k, long degree, long mult) {
    if (mult == 0) return;
    if (std::labs(k.weight) > window) {
        overflow.insert(k.weight);
        return;
    }
    if (kprime && k.theta == 0) throw std::invalid_argument("K' character entry missing theta sign");
    if (!kprime && k.theta != 0) throw std::invalid_argument("plain character entry carries theta sign");
    auto key = std::make_pair(k, degree);
    long& m = entries[key];
    m += mult;
    if (m == 0) entries.erase(key);
}

long HodgeChar::degree_min() const {
    long d = 0;
    bool first = true;
    for (const auto& [key, mult] : entries) {
        (void)mult;
        if (first || key.second < d) d = key.second;
        first = false;
    }
    return d;
}

long HodgeChar::degree_max() const {
    long d = 0;
    bool first = true;
    for (const auto& [key, mult] : entries) {
        (void)mult;
        if (first || key.second > d) d = key.second;
        first = false;
    }
    return d;
}

void SigChar::add_entry(const KType& k, long plus, long minus) {
    if (plus == 0 && minus == 0) return;
    if (std::labs(k.weight) > window) return;
    auto& v = entries[k];
    v[0] += plus;
    v[1] += minus;
    if (v[0] == 0 && v[1] == 0) entries.erase(k);
}

bool SigChar::is_genuine() const {
    for (const auto& [k, v] : entries) {
        (void)k;
        if (v[0] < 0 || v[1] < 0) return false;
    }
    return true;
}

VirtualKChar add(const VirtualKChar& a, const VirtualKChar& b) {
    require_same_window(a.window, b.window);
    VirtualKChar r = a;
    for (const auto& [k, m] : b.entries) r.add_entry(k, m);
    return r;
}

HodgeChar add(const HodgeChar& a, const HodgeChar& b) {
    require_same_window(a.window, b.window);
    require_same_grading(a.kprime, b.kprime);
    HodgeChar r = a;
    for (const auto& [key, m] : b.entries) r.add_entry(key.first, key.second, m);
    r.overflow.insert(b.overflow.begin(), b.overflow.end());
    return r;
}

SigChar add(const SigChar& a, const SigChar& b) {
    require_same_window(a.window, b.window);
    require_same_grading(a.kprime, b.kprime);
    SigChar r = a;
    for (const auto& [k, v] : b.entries) r.add_entry(k, v[0], v[1]);
    return r;
}

HodgeChar scale(const HodgeChar& a, long c) {
    HodgeChar r;
    r.window = a.window;
    r.kprime = a.kprime;
    r.overflow = a.overflow;
    for (const auto& [key, m] : a.entries) r.add_entry(key.first, key.second, c * m);
    return r;
}

SigChar scale(const SigChar& a, long c) {
    SigChar r;
    r.window = a.window;
    r.kprime = a.kprime;
    for (const auto& [k, v] : a.entries) r.add_entry(k, c * v[0], c * v[1]);
    return r;
}

HodgeChar shift(const HodgeChar& chi, long k) {
    HodgeChar r;
    r.window = chi.window;
    r.kprime = chi.kprime;
    r.overflow = chi.overflow;
    for (const auto& [key, m] : chi.entries) r.add_entry(key.first, key.second + k, m);
    return r;
}

SigChar zeta_shift(const SigChar& s, long k) {
    if (((k % 2) + 2) % 2 == 0) return s;
    SigChar r;
    r.window = s.window;
    r.kprime = s.kprime;
    for (const auto& [key, v] : s.entries) r.add_entry(key, v[1], v[0]);
    return r;
}

SigChar reduce_mod(const HodgeChar& chi, long c) {
    SigChar r;
    r.window = chi.window;
    r.kprime = chi.kprime;
    for (const auto& [key, m] : chi.entries) {
        long parity = (((key.second + c) % 2) + 2) % 2;
        r.add_entry(key.first, parity == 0 ? m : 0, parity == 1 ? m : 0);
    }
    return r;
}

HodgeChar extend_to_kprime(const HodgeChar& chi, KPrimeMode mode,
                           const std::map<std::pair<KType, long>, int>* sign_table) {
    if (chi.kprime) throw std::invalid_argument("character is already K' graded");
    HodgeChar r;
    r.window = chi.window;
    r.kprime = true;
    r.overflow = chi.overflow;
    for (const auto& [key, m] : chi.entries) {
        KType k = key.first;
        if (mode == KPrimeMode::sum_with_twist) {
            k.theta = +1;
            r.add_entry(k, key.second, m);
            k.theta = -1;
            r.add_entry(k, key.second, m);
        } else {
            if (sign_table == nullptr) throw std::invalid_argument("sign table required");
            auto it = sign_table->find(key);
            if (it == sign_table->end())
                throw std::invalid_argument("sign table missing an entry present in the character");
            k.theta = it->second;
            r.add_entry(k, key.second, m);
        }
    }
    return r;
}

HodgeChar forget_kprime(const HodgeChar& chi) {
    if (!chi.kprime) return chi;
    HodgeChar r;
    r.window = chi.window;
    r.kprime = false;
    r.overflow = chi.overflow;
    for (const auto& [key, m] : chi.entries) {
        KType k = key.first;
        k.theta = 0;
        r.add_entry(k, key.second, m);
    }
    return r;
}

HodgeChar rewindow(const HodgeChar& chi, long window) {
    HodgeChar r;
    r.window = window;
    r.kprime = chi.kprime;
    r.overflow = chi.overflow;
    for (const auto& [key, m] : chi.entries) r.add_entry(key.first, key.second, m);
    return r;
}

SigChar rewindow(const SigChar& s, long window) {
    SigChar r;
    r.window = window;
    r.kprime = s.kprime;
    for (const auto& [k, v] : s.entries) r.add_entry(k, v[0], v[1]);
    return r;
}

bool equal_on_window(const VirtualKChar& a, const VirtualKChar& b, long w) {
    if (w > a.window || w > b.window) throw std::invalid_argument("window exceeds a character window");
    for (const auto& [k, m] : a.entries) {
        if (std::labs(k.weight) > w) continue;
        auto it = b.entries.find(k);
        if (it == b.entries.end() || it->second != m) return false;
    }
    for (const auto& [k, m] : b.entries) {
        (void)m;
        if (std::labs(k.weight) > w) continue;
        if (a.entries.find(k) == a.entries.end()) return false;
    }
    return true;
}

bool equal_on_window(const HodgeChar& a, const HodgeChar& b, long w) {
    if (w > a.window || w > b.window) throw std::invalid_argument("window exceeds a character window");
    for (const auto& [key, m] : a.entries) {
        if (std::labs(key.first.weight) > w) continue;
        auto it = b.entries.find(key);
        if (it == b.entries.end() || it->second != m) return false;
    }
    for (const auto& [key, m] : b.entries) {
        (void)m;
        if (std::labs(key.first.weight) > w) continue;
        if (a.entries.find(key) == a.entries.end()) return false;
    }
    return true;
}

bool equal_on_window(const SigChar& a, const SigChar& b, long w) {
    if (w > a.window || w > b.window) throw std::invalid_argument("window exceeds a character window");
    for (const auto& [k, v] : a.entries) {
        if (std::labs(k.weight) > w) continue;
        auto it = b.entries.find(k);
        if (it == b.entries.end() || it->second != v) return false;
    }
    for (const auto& [k, v] : b.entries) {
        (void)v;
        if (std::labs(k.weight) > w) continue;
        if (a.entries.find(k) == a.entries.end()) return false;
    }
    return true;
}

VirtualKChar specialize_u1(const HodgeChar& chi) {
    VirtualKChar r;
    r.window = chi.window;
    for (const auto& [key, m] : chi.entries) r.add_entry(key.first, m);
    return r;
}

VirtualKChar total_multiplicity(const SigChar& s) {
    VirtualKChar r;
    r.window = s.window;
    for (const auto& [k, v] : s.entries) r.add_entry(k, v[0] + v[1]);
    return r;
}

namespace {

nlohmann::json ktype_json(const KType& k) {
    nlohmann::json e;
    e["ktype"] = k.weight;
    if (k.theta != 0) e["theta"] = k.theta > 0 ? "+" : "-";
    return e;
}

KType ktype_from_json(const nlohmann::json& e) {
    KType k;
    k.weight = e.at("ktype").get<long>();
    if (e.contains("theta")) {
        std::string t = e.at("theta").get<std::string>();
        if (t == "+")
            k.theta = +1;
        else if (t == "-")
            k.theta = -1;
        else
            throw std::invalid_argument("bad theta sign: " + t);
    }
    return k;
}

}  // namespace

std::string to_json(const HodgeChar& chi) {
    nlohmann::json j;
    j["window"] = chi.window;
    j["kprime"] = chi.kprime;
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, m] : chi.entries) {
        auto e = ktype_json(key.first);
        e["degree"] = key.second;
        e["mult"] = m;
        j["entries"].push_back(e);
    }
    if (!chi.overflow.empty()) j["overflow"] = std::vector<long>(chi.overflow.begin(), chi.overflow.end());
    return j.dump();
}

std::string to_json(const SigChar& s) {
    nlohmann::json j;
    j["window"] = s.window;
    j["kprime"] = s.kprime;
    j["entries"] = nlohmann::json::array();
    for (const auto& [k, v] : s.entries) {
        auto e = ktype_json(k);
        e["plus"] = v[0];
        e["minus"] = v[1];
        j["entries"].push_back(e);
    }
    return j.dump();
}

HodgeChar hodge_char_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    HodgeChar chi;
    chi.window = j.at("window").get<long>();
    chi.kprime = j.value("kprime", false);
    for (const auto& e : j.at("entries"))
        chi.add_entry(ktype_from_json(e), e.at("degree").get<long>(), e.at("mult").get<long>());
    return chi;
}

SigChar sig_char_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SigChar s;
    s.window = j.at("window").get<long>();
    s.kprime = j.value("kprime", false);
    for (const auto& e : j.at("entries"))
        s.add_entry(ktype_from_json(e), e.at("plus").get<long>(), e.at("minus").get<long>());
    return s;
}

std::string to_tsv(const HodgeChar& chi) {
    std::ostringstream os;
    os << "ktype\ttheta\tdegree\tmult\n";
    for (const auto& [key, m] : chi.entries) {
        os << key.first.weight << '\t' << (key.first.theta == 0 ? "." : key.first.theta > 0 ? "+" : "-")
           << '\t' << key.second << '\t' << m << '\n';
    }
    return os.str();
}

std::string to_tsv(const SigChar& s) {
    std::ostringstream os;
    os << "ktype\ttheta\tplus\tminus\n";
    for (const auto& [k, v] : s.entries) {
        os << k.weight << '\t' << (k.theta == 0 ? "." : k.theta > 0 ? "+" : "-") << '\t' << v[0]
           << '\t' << v[1] << '\n';
    }
    return os.str();
}

}  // namespace hodge
