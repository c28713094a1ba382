#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodge/chars.hpp"
#include "hodge/rational.hpp"

namespace hodge {

enum class Family { ps, ds, fd };
enum class FormKind { u_r, g_r };

// Explicit multiplicity-free (g, K)-module model on a window of stored
// K-weights.  The raising/lowering coefficients are exact rationals
// normalized so the Casimir is the catalog's quadratic function of nu
// and the nu = 0 principal series is tempered-unitary.
struct GKModel {
    std::string group;  // sl2r, sl2r_metaplectic, sl2c
    Family family = Family::ps;
    Rational nu;        // continuous parameter (= family coordinate of lambda)
    int parity = 0;     // sl2r PS parity; metaplectic residue class 1 or 3 (mod 4)
    long k_lowest = 0;  // DS lowest stored weight (signed); FD dimension
    long window = 0;
    std::vector<long> weights;  // stored weights, ascending
    long step = 2;              // stored-weight step of e and f

    // raising coefficient from stored weight w to w + step
    Rational raise_coeff(long w) const;
    // lowering coefficient from stored weight w to w - step
    Rational lower_coeff(long w) const;
    long lowest_ktype() const;  // minimal |weight|, ties to the positive one
};

GKModel build_model(const std::string& group, Family family, const Rational& nu, int parity,
                    long k_or_m, long window);

struct FormTable {
    FormKind kind = FormKind::u_r;
    std::map<long, Rational> values;
};

// Solves the invariance recursion for the u_R- or g_R-invariant
// Hermitian form, normalized positive at the lowest K-type.  Throws if
// the recursion degenerates (reducible wall parameter).
FormTable invariant_form(const GKModel& model, FormKind kind);

// Per K-type (1,0) if the u_R-form value is positive, (0,1) if negative.
SigChar signature_char_direct(const GKModel& model, long window);

// sign(g_R value) / sign(u_R value) per K-type.
std::map<long, int> theta_eigenvalues(const GKModel& model);

// F_p = image of F_p U(g) applied to the lowest K-type subspace;
// returns the degree at which each K-type first appears (before the
// global codimension shift).
HodgeChar hodge_filtration_direct(const GKModel& model, long window);

// Whether the g_R-form exists and is definite (the unitarity verdict).
bool g_form_definite(const GKModel& model);

// Exact consistency of the action table: the Casimir scalar is constant
// across the basis (for the rank-one families) or the bracket identity
// holds on every step (sl2c tower).
bool action_consistent(const GKModel& model);
Rational casimir_scalar(const GKModel& model);

// Parameters nu in (lo, hi] at which the family becomes reducible
// (some raising or lowering coefficient vanishes on the basis).
std::vector<Rational> reducibility_points(const std::string& group, Family family, int parity,
                                          const Rational& lo, const Rational& hi, long window);

}  // namespace hodge
