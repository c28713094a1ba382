#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hodge/oracle.hpp"
#include "hodge/tempered.hpp"

using namespace hodge;

namespace {

// test-side monomial recount of the line-pair cone: the quotient basis
// of C[x, y]/(xy) is the set of monomials x^a y^b with a b = 0
std::map<std::pair<long, long>, long> line_pair_recount(long step, long eta, long window) {
    std::map<std::pair<long, long>, long> out;  // (weight, degree) -> mult
    long bound = 2 * window / step + 2;
    for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b) {
            if (a != 0 && b != 0) continue;  // xy = 0 kills these
            long weight = eta + step * (a - b);
            if (std::labs(weight) <= window) out[{weight, a + b}] += 1;
        }
    return out;
}

}  // namespace

TEST_CASE("split formula for the linear group") {
    long W = 16;
    auto chi = split_tempered_gr("sl2r", KType{0, 0}, W);
    CHECK(chi.entries.at({KType{0, 0}, 0}) == 1);
    for (long n = 1; 2 * n <= W; ++n) {
        CHECK(chi.entries.at({KType{2 * n, 0}, n}) == 1);
        CHECK(chi.entries.at({KType{-2 * n, 0}, n}) == 1);
    }
    // degree 0 is exactly eta
    for (const auto& [key, m] : chi.entries)
        if (key.second == 0) CHECK(key.first.weight == 0);
    // matches the independent monomial recount
    auto recount = line_pair_recount(2, 0, W);
    CHECK(chi.entries.size() == recount.size());
    for (const auto& [km, m] : recount) CHECK(chi.entries.at({KType{km.first, 0}, km.second}) == m);
}

TEST_CASE("split formula for the metaplectic cover") {
    long W = 21;
    auto chi = split_tempered_gr("sl2r_metaplectic", KType{1, 0}, W);
    CHECK(chi.entries.at({KType{1, 0}, 0}) == 1);
    CHECK(chi.entries.at({KType{5, 0}, 1}) == 1);
    CHECK(chi.entries.at({KType{-3, 0}, 1}) == 1);
    CHECK(chi.entries.at({KType{9, 0}, 2}) == 1);
    CHECK(chi.entries.at({KType{-7, 0}, 2}) == 1);
    auto recount = line_pair_recount(4, 1, W);
    for (const auto& [km, m] : recount) CHECK(chi.entries.at({KType{km.first, 0}, km.second}) == m);
    CHECK_THROWS(split_tempered_gr("sl2r_metaplectic", KType{2, 0}, W));  // not genuine
}

TEST_CASE("split formula for the complex group") {
    long W = 20;
    auto chi = split_tempered_gr("sl2c", KType{0, 0}, W);
    for (long n = 0; 2 * n <= W; ++n) CHECK(chi.entries.at({KType{2 * n, 0}, n}) == 1);
    // dimension recount: the degree-d piece of the quadric cone has
    // dimension 2d + 1 = dim V(2d)
    std::map<long, long> dim_by_degree;
    for (long d = 0; 2 * d <= W; ++d) {
        for (long i = 0; i <= d; ++i) dim_by_degree[d] += 1;          // y^i z^(d-i)
        for (long i = 0; i + 1 <= d; ++i) dim_by_degree[d] += 1;      // x y^i z^(d-1-i)
    }
    for (long d = 0; 2 * d <= W; ++d) CHECK(dim_by_degree[d] == 2 * d + 1);
}

TEST_CASE("cohomological induction transforms") {
    long W = 16;
    // identity embedding: K_P = K, no complement, no shift
    HodgeChar chi_l;
    chi_l.window = W;
    chi_l.add_entry(KType{3, 0}, 2, 1);
    CohindEmbedding trivial{{2, -2}, {2, -2}, 0, 0, "torus"};
    CHECK(cohind_char(chi_l, trivial, W) == chi_l);

    // discrete series embedding
    CohindEmbedding ds_plus{{2, -2}, {-2}, 2, 1, "torus"};
    HodgeChar levi;
    levi.window = W;
    levi.add_entry(KType{0, 0}, 0, 1);  // k = 2: Levi character k - 2 = 0
    auto ds2 = cohind_char(levi, ds_plus, W);
    for (long j = 0; 2 + 2 * j <= W; ++j) CHECK(ds2.entries.at({KType{2 + 2 * j, 0}, j + 1}) == 1);

    // additivity
    auto doubled = cohind_char(add(levi, levi), ds_plus, W);
    CHECK(doubled == add(ds2, ds2));

    // inconsistent embedding data
    CohindEmbedding bad{{2, -2}, {4}, 2, 1, "torus"};
    CHECK_THROWS(cohind_char(levi, bad, W));
}

TEST_CASE("cohind propagates the unitary theta pattern") {
    long W = 12;
    HodgeChar levi;
    levi.window = W;
    levi.kprime = true;
    levi.add_entry(KType{0, +1}, 0, 1);  // pattern (-1)^p at p = 0
    CohindEmbedding ds_plus{{2, -2}, {-2}, 2, 1, "torus"};
    auto out = cohind_char(levi, ds_plus, W);
    for (const auto& [key, m] : out.entries) {
        (void)m;
        int expect = key.second % 2 == 0 ? +1 : -1;  // (-1)^p
        CHECK(key.first.theta == expect);
    }
}

TEST_CASE("cohind is monotone") {
    long W = 12;
    HodgeChar small, big;
    small.window = big.window = W;
    small.add_entry(KType{0, 0}, 0, 1);
    big.add_entry(KType{0, 0}, 0, 2);
    big.add_entry(KType{2, 0}, 1, 1);
    CohindEmbedding emb{{2, -2}, {-2}, 2, 1, "torus"};
    auto lo = cohind_char(small, emb, W);
    auto hi = cohind_char(big, emb, W);
    for (const auto& [key, m] : lo.entries) {
        CHECK(hi.entries.count(key) == 1);
        CHECK(hi.entries.at(key) >= m);
    }
}

TEST_CASE("tempered characters across the catalog") {
    long W = 16;
    // spherical tempered principal series
    auto ps = make_parameter("sl2r", "open", Weight{{Rational(0)}}, "even");
    auto chi = tempered_hodge_char(ps, W);
    for (long n = 0; 2 * n <= W; ++n) {
        CHECK(chi.entries.at({KType{2 * n, 0}, n}) == 1);
        CHECK(chi.entries.at({KType{-2 * n, 0}, n}) == 1);
    }
    // discrete series
    auto ds2 = make_parameter("sl2r", "closed_plus", Weight{{Rational(1)}}, "ds");
    auto chi_ds = tempered_hodge_char(ds2, W);
    CHECK(chi_ds.entries.at({KType{2, 0}, 1}) == 1);
    CHECK(chi_ds.entries.at({KType{4, 0}, 2}) == 1);
    CHECK(chi_ds.entries.count({KType{-2, 0}, 1}) == 0);
    auto ds2m = make_parameter("sl2r", "closed_minus", Weight{{Rational(1)}}, "ds");
    CHECK(tempered_hodge_char(ds2m, W).entries.at({KType{-2, 0}, 1}) == 1);
    // limits of discrete series
    auto lds = make_parameter("sl2r", "closed_plus", Weight{{Rational(0)}}, "ds");
    auto chi_lds = tempered_hodge_char(lds, W);
    for (long j = 0; 1 + 2 * j <= W; ++j) CHECK(chi_lds.entries.at({KType{1 + 2 * j, 0}, j + 1}) == 1);
    // non-tempered rejected
    CHECK_THROWS(tempered_hodge_char(make_parameter("sl2r", "open", Weight{{Rational(1, 2)}}, "even"),
                                     W));
}

TEST_CASE("sl2c closed tempered parameters agree with the cone") {
    long W = 20;
    auto m0 = make_parameter("sl2c", "closed", Weight{{Rational(0), Rational(0)}}, "m0");
    auto chi = tempered_hodge_char(m0, W);
    auto cone = shift(split_tempered_gr("sl2c", KType{0, 0}, W), 1);
    CHECK(equal_on_window(chi, cone, W));
    auto m2 = make_parameter("sl2c", "closed", Weight{{Rational(0), Rational(0)}}, "m2");
    auto chi2 = tempered_hodge_char(m2, W);
    for (long j = 0; 2 + 2 * j <= W; ++j) CHECK(chi2.entries.at({KType{2 + 2 * j, 0}, j + 1}) == 1);
    CHECK(chi2.entries.count({KType{0, 0}, 1}) == 0);
}

TEST_CASE("canonical theta pattern matches the oracle eigenvalues") {
    long W = 16;
    auto ps = make_parameter("sl2r", "open", Weight{{Rational(0)}}, "even");
    auto chi = tempered_hodge_char(ps, W, true);
    auto model = build_model("sl2r", Family::ps, Rational(0), 0, 0, 2 * W);
    auto theta = theta_eigenvalues(model);
    for (const auto& [key, m] : chi.entries) {
        (void)m;
        CHECK(key.first.theta == theta.at(key.first.weight));
        // theta = (-1)^(p + c) with c = 0 on the open orbit
        CHECK(key.first.theta == (key.second % 2 == 0 ? +1 : -1));
    }
    // metaplectic tempered pattern against its oracle model
    auto mp = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(0)}}, "genuine_plus");
    auto chi_mp = tempered_hodge_char(mp, 21, true);
    auto mp_model = build_model("sl2r_metaplectic", Family::ps, Rational(0), 1, 0, 45);
    auto mp_theta = theta_eigenvalues(mp_model);
    for (const auto& [key, m] : chi_mp.entries) {
        (void)m;
        CHECK(key.first.theta == mp_theta.at(key.first.weight));
    }
}
