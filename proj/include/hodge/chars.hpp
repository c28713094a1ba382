#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hodge {

// K-type label.  `weight` uses the doubled convention so metaplectic
// half-integer weights are odd integers; for the SL2(C) entry it is the
// highest weight of the K-representation.  `theta` is 0 for plain
// K-characters and +1/-1 in extended-group (K') mode.
struct KType {
    long weight = 0;
    int theta = 0;

    auto operator<=>(const KType&) const = default;
};

// Finite virtual K-character truncated to |weight| <= window.
struct VirtualKChar {
    long window = 0;
    std::map<KType, long> entries;

    void add_entry(const KType& k, long mult);
    bool operator==(const VirtualKChar&) const = default;
};

// Window-truncated Hodge K-character: multiplicity per (K-type, u-degree).
struct HodgeChar {
    long window = 0;
    bool kprime = false;
    std::map<std::pair<KType, long>, long> entries;
    // Weights seen outside the window during construction; reported, not
    // silently forgotten.
    std::set<long> overflow;

    void add_entry(const KType& k, long degree, long mult);
    long degree_min() const;
    long degree_max() const;
    bool operator==(const HodgeChar& o) const {
        return window == o.window && kprime == o.kprime && entries == o.entries;
    }
};

// Signature K-character over Z[zeta]/(zeta^2-1): per K-type the pair
// (plus, minus).  Intermediate wall-crossing sums are virtual (entries
// may be negative); a genuine signature has nonnegative entries.
struct SigChar {
    long window = 0;
    bool kprime = false;
    std::map<KType, std::array<long, 2>> entries;

    void add_entry(const KType& k, long plus, long minus);
    bool is_genuine() const;
    bool operator==(const SigChar& o) const {
        return window == o.window && kprime == o.kprime && entries == o.entries;
    }
};

VirtualKChar add(const VirtualKChar& a, const VirtualKChar& b);
HodgeChar add(const HodgeChar& a, const HodgeChar& b);
SigChar add(const SigChar& a, const SigChar& b);

HodgeChar scale(const HodgeChar& a, long c);
SigChar scale(const SigChar& a, long c);

// Multiplication by u^k.
HodgeChar shift(const HodgeChar& chi, long k);

// Multiplication by zeta^k (mod zeta^2 - 1): swaps the two components
// when k is odd.
SigChar zeta_shift(const SigChar& s, long k);

// zeta^c * chi(zeta) mod zeta^2 - 1: entry (mu, d) lands in component
// (d + c) mod 2 of mu.
SigChar reduce_mod(const HodgeChar& chi, long c);

enum class KPrimeMode { sum_with_twist, sign_table };

// sum_with_twist: (1 + xi) * chi, duplicating each entry with theta +1
// and -1.  sign_table: attach sigma(mu, d) in {+1,-1} per entry.
HodgeChar extend_to_kprime(
    const HodgeChar& chi, KPrimeMode mode,
    const std::map<std::pair<KType, long>, int>* sign_table = nullptr);

// Forget the theta grading of a K'-character.
HodgeChar forget_kprime(const HodgeChar& chi);

// Explicit re-windowing; shrinking drops (and records) outer entries.
HodgeChar rewindow(const HodgeChar& chi, long window);
SigChar rewindow(const SigChar& s, long window);

bool equal_on_window(const VirtualKChar& a, const VirtualKChar& b, long w);
bool equal_on_window(const HodgeChar& a, const HodgeChar& b, long w);
bool equal_on_window(const SigChar& a, const SigChar& b, long w);

// chi(u = 1): total K-multiplicities.
VirtualKChar specialize_u1(const HodgeChar& chi);
// plus + minus per K-type.
VirtualKChar total_multiplicity(const SigChar& s);

std::string to_json(const HodgeChar& chi);
std::string to_json(const SigChar& s);
HodgeChar hodge_char_from_json(const std::string& text);
SigChar sig_char_from_json(const std::string& text);

std::string to_tsv(const HodgeChar& chi);
std::string to_tsv(const SigChar& s);

}  // namespace hodge
