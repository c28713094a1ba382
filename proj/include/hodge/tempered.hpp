#pragma once

#include <string>
#include <vector>

#include "hodge/chars.hpp"
#include "hodge/params.hpp"

namespace hodge {

// Catalog-supplied cohomological-induction data: K_P-weights of g/k and
// of p/k_P (a sub-multiset), the det(g/(k+p)) weight and the codimension
// shift.  `induction` is "torus" (weight bookkeeping) or "sl2"
// (dominant weights become highest-weight K-types).
struct CohindEmbedding {
    std::vector<long> gk_weights;
    std::vector<long> pk_weights;
    long det_weight = 0;
    int codim = 1;
    std::string induction = "torus";
};

// Graded K-character of the catalog nilpotent cones, tensored with eta.
// Degree 0 holds eta alone; no codimension shift is applied here.
HodgeChar split_tempered_gr(const std::string& group, const KType& eta, long window);

// Ind_{K_P}^K( Sym(g/k) (x)_{Sym(p/k_P)} chi_L (x) det ) shifted by u^c.
// K'-graded inputs propagate theta by (-1)^(Sym degree + c).
HodgeChar cohind_char(const HodgeChar& chi_l, const CohindEmbedding& emb, long window);

// The embedding data the catalog attaches to a closed-orbit parameter.
CohindEmbedding cohind_embedding_for(const HCParameter& p);
// The Levi character fed to cohind_char for a closed-orbit parameter.
HodgeChar cohind_levi_char(const HCParameter& p, long window, bool kprime);

// Full tempered Hodge character: split formula on open split orbits,
// cohomological induction over the Levi on closed orbits, with the
// global codimension shift applied exactly once.
HodgeChar tempered_hodge_char(const HCParameter& p, long window, bool kprime = false);

}  // namespace hodge
