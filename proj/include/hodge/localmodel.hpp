#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// One summand of a rank-one monodromic germ module on (C, 0):
// x^mu times a Jordan block of size `jordan`, with the Hodge filtration
// starting at `hodge_offset` and the given weight.
struct GermSummand {
    Rational mu;
    int jordan = 1;
    int hodge_offset = 0;
    int weight = 1;
};

struct GermLocalSystem {
    std::vector<GermSummand> summands;
    int truncation = 12;  // x-degrees tracked in [-D, D], del-powers <= D
};

enum class ExtensionKind { shriek, star, intermediate };

// Bigraded dimension table keyed by (x-degree, hodge level).  The
// x-degree of x^(mu+m) is the lattice offset m from the stored
// exponent, so tables vary continuously along deformations.
struct BigradedTable {
    std::map<std::pair<long, long>, long> dims;

    void add(long x_degree, long level, long count);
    bool operator==(const BigradedTable&) const = default;
    long total() const;
    std::string to_tsv(const std::string& tag) const;
};

struct ExtensionModule {
    ExtensionKind kind = ExtensionKind::shriek;
    BigradedTable table;
    // the V-threshold lattice alone: the star and shriek lattices of an
    // integral exponent differ by exactly one generator in x-degree -1
    BigradedTable lattice_table;
};

struct JantzenLayer {
    int n = 0;
    BigradedTable graded_dims;
    int weight = 0;
    int form_sign = +1;
};

// Basis element x^(mu+m) s^j of the truncated pushforward module.
struct GermBasisElement {
    size_t summand = 0;
    long m = 0;        // exponent is mu + m
    int s_power = 0;   // 0 <= s_power < jordan
};

// Basis of V^alpha(j_+ M) up to the truncation: exponents mu+m >= alpha.
std::vector<GermBasisElement> v_filtration(const GermLocalSystem& ls, const Rational& alpha);

// dim Gr_V^alpha on the truncated model.
long gr_v_dim(const GermLocalSystem& ls, const Rational& alpha);

// Checks the V-filtration axioms on the truncated model: x V^a in
// V^{a+1}, del V^a in V^{a-1}, and (alpha - x del) nilpotent on Gr_V^a
// of order at most the Jordan size.
bool v_axioms_hold(const GermLocalSystem& ls);

ExtensionModule extend(const GermLocalSystem& ls, ExtensionKind kind);

GermLocalSystem deform(const GermLocalSystem& ls, const Rational& s);

// Deformation values s in the interval where some exponent mu_i + s is
// an integer (the clean extension fails).
std::vector<Rational> walls(const GermLocalSystem& ls, const Rational& lo, const Rational& hi,
                            bool lo_closed = true, bool hi_closed = true);

enum class WallSide { left, right };

// Gr^F of the shriek extension is constant approaching s0 from the
// left; Gr^F of the star extension from the right.
bool check_semicontinuity(const GermLocalSystem& ls, const Rational& s0, WallSide side);

// Jantzen filtration of the shriek extension via the s-deformation
// lattice pair.  Layers are indexed by n >= 0 with weight = ambient
// weight - n; sizes per slot come from the elementary divisors of the
// lattice inclusion.
std::vector<JantzenLayer> jantzen(const GermLocalSystem& ls);

}  // namespace hodge
