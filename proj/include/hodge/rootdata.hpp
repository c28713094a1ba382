#pragma once

#include <set>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// A weight of the universal Cartan, in the fundamental-weight basis:
// coords[i] = <lambda, alpha_i^vee>.
struct Weight {
    std::vector<Rational> coords;

    bool operator==(const Weight& o) const { return coords == o.coords; }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(const Rational& c) const;
    bool is_zero() const;
};

// Root datum with simple roots/coroots given by integer coordinate
// matrices and the Cartan pairing <alpha_i, alpha_j^vee>.  Positive
// coroots are stored as nonnegative integer combinations of the simple
// coroots; the catalog only needs rank <= 2.
struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<std::vector<long>> cartan;             // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<std::vector<long>> positive_coroots;   // combos of simple coroots
    Weight rho;                                        // <rho, alpha_i^vee> = 1 for all i

    static RootDatum from_cartan(const std::string& name,
                                 const std::vector<std::vector<long>>& cartan);

    size_t num_positive_roots() const { return positive_coroots.size(); }
    // Root vector in fundamental-weight coordinates (row of the Cartan
    // matrix for a simple root, sums for the others).
    std::vector<Rational> root_vector(size_t positive_index) const;

    std::string to_json() const;
    static RootDatum from_json(const std::string& text);
};

// Built-in catalog data: types A1, A1 x A1, and A1 viewed as a complex
// group (same lattice as A1 x A1, distinct name).
RootDatum root_datum_a1();
RootDatum root_datum_a1a1();
RootDatum root_datum_a1_complex();

// An involution of the weight lattice, acting on fundamental-weight
// coordinates.  Must square to the identity and permute the roots up
// to sign.
struct LatticeInvolution {
    std::string label;  // "theta_Q" or "delta"
    std::vector<std::vector<long>> matrix;

    Weight apply(const Weight& w) const;
    std::vector<Rational> apply_vec(const std::vector<Rational>& v) const;
    void validate(const RootDatum& datum) const;
};

enum class RootClass { real, imaginary, complex_root };

// <lambda, alpha^vee> for the positive coroot with the given 1-based index.
Rational pairing(const RootDatum& datum, const Weight& lambda, size_t coroot_index);

bool is_dominant(const RootDatum& datum, const Weight& lambda);

// real: theta(alpha) = -alpha; imaginary: theta(alpha) = alpha.
RootClass classify_root(const RootDatum& datum, const LatticeInvolution& theta,
                        size_t positive_index);

// S = { simple alpha : <lambda, alpha^vee> = 0 and theta(alpha) negative }.
std::set<size_t> singular_real_simple_set(const RootDatum& datum, const Weight& lambda,
                                          const LatticeInvolution& theta);

// Simple reflection s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight simple_reflection(const RootDatum& datum, size_t i, const Weight& lambda);

}  // namespace hodge
