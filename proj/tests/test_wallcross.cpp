#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "hodge/blockdata_io.hpp"
#include "hodge/oracle.hpp"
#include "hodge/tempered.hpp"
#include "hodge/wallcross.hpp"

using namespace hodge;

namespace {

HCParameter sph(const Rational& nu) {
    return make_parameter("sl2r", "open", Weight{{nu}}, "even");
}

HCParameter odd(const Rational& nu) {
    return make_parameter("sl2r", "open", Weight{{nu}}, "odd");
}

}  // namespace

TEST_CASE("wall positions along catalog rays") {
    CHECK(find_walls(sph(Rational(2))) == std::vector<Rational>{Rational(-1, 4)});
    CHECK(find_walls(sph(Rational(1, 2))).empty());
    CHECK(find_walls(sph(Rational(0))).empty());  // tempered
    CHECK(find_walls(odd(Rational(3))) ==
          std::vector<Rational>{Rational(-1, 2), Rational(-1, 6)});
    auto mp = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(1)}}, "genuine_plus");
    CHECK(find_walls(mp) == std::vector<Rational>{Rational(-1, 4)});
    auto c = make_parameter("sl2c", "open", Weight{{Rational(3, 2), Rational(3, 2)}}, "spherical");
    CHECK(find_walls(c) == std::vector<Rational>{Rational(-1, 2), Rational(-1, 6)});
}

TEST_CASE("wall positions match the oracle reducibility scan") {
    // the built-in tables put interior walls where the family model
    // becomes reducible
    auto scan_even = reducibility_points("sl2r", Family::ps, 0, Rational(0), Rational(4), 40);
    auto p = sph(Rational(4));
    auto ray = deformation_ray(p);
    std::vector<Rational> from_engine;
    for (const auto& s : find_walls(p))
        from_engine.push_back(family_coordinate(parameter_at(ray, s)));
    std::vector<Rational> expected;
    for (const auto& nu : scan_even)
        if (nu > 0 && nu <= Rational(4)) expected.push_back(nu);
    CHECK(from_engine == expected);

    auto scan_mp =
        reducibility_points("sl2r_metaplectic", Family::ps, 1, Rational(0), Rational(2), 41);
    auto q = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(2)}}, "genuine_plus");
    auto qray = deformation_ray(q);
    std::vector<Rational> qengine;
    for (const auto& s : find_walls(q)) qengine.push_back(family_coordinate(parameter_at(qray, s)));
    CHECK(qengine == scan_mp);
}

TEST_CASE("hodge character of the complementary range is the tempered table") {
    Engine engine(16);
    auto chi = engine.hodge_char(sph(Rational(1, 2)));
    auto tempered = tempered_hodge_char(sph(Rational(0)), 16);
    CHECK(equal_on_window(chi, tempered, 16));
    // piecewise constancy across the gap
    CHECK(equal_on_window(engine.hodge_char(sph(Rational(1, 4))), chi, 16));
    CHECK(equal_on_window(engine.hodge_char(sph(Rational(3, 4))), chi, 16));
}

TEST_CASE("the trivial representation sits at the first wall") {
    Engine engine(12);
    auto chi = engine.hodge_char(sph(Rational(1)));
    REQUIRE(chi.entries.size() == 1);
    CHECK(chi.entries.at({KType{0, 0}, 0}) == 1);
    bool warned = false;
    for (const auto& w : engine.warnings())
        if (w.find("wall") != std::string::npos) warned = true;
    CHECK(warned);
    auto sig = engine.sig_char(sph(Rational(1)));
    CHECK(sig.entries.at(KType{0, 0}) == std::array<long, 2>{1, 0});
}

TEST_CASE("spherical nu = 2 beyond the wall") {
    Engine engine(16);
    auto chi = engine.hodge_char(sph(Rational(2)));
    CHECK(chi.entries.at({KType{0, 0}, 0}) == 1);
    CHECK(chi.entries.at({KType{2, 0}, 0}) == 1);
    CHECK(chi.entries.at({KType{-2, 0}, 0}) == 1);
    for (long j = 1; 2 + 2 * j <= 16; ++j) {
        CHECK(chi.entries.at({KType{2 + 2 * j, 0}, j}) == 1);
        CHECK(chi.entries.at({KType{-2 - 2 * j, 0}, j}) == 1);
    }
    // signature flips exactly where the compact-form recursion says
    auto sig = engine.sig_char(sph(Rational(2)));
    auto model = build_model("sl2r", Family::ps, Rational(2), 0, 0, 32);
    CHECK(equal_on_window(sig, signature_char_direct(model, 16), 16));
    // u = 1 conservation
    CHECK(specialize_u1(chi) == total_multiplicity(sig));
}

TEST_CASE("oracle and engine agree across the grid") {
    Engine engine(12);
    for (int num = 1; num <= 9; ++num) {
        Rational nu = make_rational(num, 4);
        if (is_integer(nu)) continue;  // off-wall grid
        auto sig = engine.sig_char(sph(nu));
        auto model = build_model("sl2r", Family::ps, nu, 0, 0, 24);
        CHECK(equal_on_window(sig, signature_char_direct(model, 12), 12));
        auto sig_odd = engine.sig_char(odd(nu));
        auto model_odd = build_model("sl2r", Family::ps, nu, 1, 0, 24);
        CHECK(equal_on_window(sig_odd, signature_char_direct(model_odd, 12), 12));
    }
}

TEST_CASE("nonspherical family assembles from the limits of discrete series") {
    Engine engine(13);
    auto chi = engine.hodge_char(odd(Rational(1)));
    for (long j = 0; 1 + 2 * j <= 13; ++j) {
        CHECK(chi.entries.at({KType{1 + 2 * j, 0}, j}) == 1);
        CHECK(chi.entries.at({KType{-1 - 2 * j, 0}, j}) == 1);
    }
    // the odd parameter dies at the tempered endpoint
    auto zero = engine.hodge_char(odd(Rational(0)));
    CHECK(zero.entries.empty());
    // beyond the nu = 2 wall
    auto chi3 = engine.hodge_char(odd(Rational(3)));
    CHECK(chi3.entries.at({KType{1, 0}, 0}) == 1);
    CHECK(chi3.entries.at({KType{3, 0}, 0}) == 1);
    CHECK(chi3.entries.at({KType{5, 0}, 1}) == 1);
    auto sig3 = engine.sig_char(odd(Rational(3)));
    auto model3 = build_model("sl2r", Family::ps, Rational(3), 1, 0, 26);
    CHECK(equal_on_window(sig3, signature_char_direct(model3, 13), 13));
}

TEST_CASE("metaplectic family beyond the oscillator wall") {
    Engine engine(13);
    auto p = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(1)}}, "genuine_plus");
    auto chi = engine.hodge_char(p);
    CHECK(chi.entries.at({KType{1, 0}, 0}) == 1);
    CHECK(chi.entries.at({KType{-3, 0}, 0}) == 1);
    CHECK(chi.entries.at({KType{5, 0}, 1}) == 1);
    CHECK(chi.entries.at({KType{-7, 0}, 1}) == 1);
    auto sig = engine.sig_char(p);
    auto model = build_model("sl2r_metaplectic", Family::ps, Rational(1), 1, 0, 29);
    CHECK(equal_on_window(sig, signature_char_direct(model, 13), 13));
}

TEST_CASE("complex group spherical family") {
    Engine engine(12);
    auto low = make_parameter("sl2c", "open", Weight{{Rational(1, 2), Rational(1, 2)}}, "spherical");
    auto chi = engine.hodge_char(low);
    for (long l = 0; 2 * l <= 12; ++l) CHECK(chi.entries.at({KType{2 * l, 0}, l}) == 1);
    auto mid = make_parameter("sl2c", "open", Weight{{Rational(3, 2), Rational(3, 2)}}, "spherical");
    auto chi2 = engine.hodge_char(mid);
    CHECK(chi2.entries.at({KType{0, 0}, 0}) == 1);
    CHECK(chi2.entries.at({KType{2, 0}, 0}) == 1);
    for (long l = 2; 2 * l <= 12; ++l) CHECK(chi2.entries.at({KType{2 * l, 0}, l - 1}) == 1);
    CHECK(engine.verify_identity(mid).ok);
}

TEST_CASE("wall-crossing additivity from ledger entries") {
    Engine engine(16);
    auto below = engine.hodge_char(sph(Rational(1, 2)));
    auto above = engine.hodge_char(sph(Rational(3, 2)));
    auto layer_plus =
        engine.hodge_char(make_parameter("sl2r", "closed_plus", Weight{{Rational(1)}}, "ds"));
    auto layer_minus =
        engine.hodge_char(make_parameter("sl2r", "closed_minus", Weight{{Rational(1)}}, "ds"));
    auto layers = add(layer_plus, layer_minus);
    auto expected = add(below, add(shift(layers, -1), scale(layers, -1)));
    CHECK(equal_on_window(above, expected, 16));
}

TEST_CASE("verification across tempered and deformed parameters") {
    Engine engine(40);
    CHECK(engine.verify_identity(sph(Rational(0))).ok);
    CHECK(engine.verify_identity(sph(Rational(5, 2))).ok);
    CHECK(engine.verify_identity(odd(Rational(7, 2))).ok);
    CHECK(engine.verify_identity(make_parameter("sl2r", "closed_plus", Weight{{Rational(3)}}, "ds"))
              .ok);
}

TEST_CASE("fault injection is caught") {
    // corrupt the layer weight by one
    auto p = sph(Rational(2));
    BlockData bd = builtin_block_data(p);
    REQUIRE(bd.walls.size() == 1);
    for (auto& layer : bd.walls[0].layers) {
        layer.constituent.weight_w += 1;
        layer.constituent.codim_c -= 1;
    }
    Engine engine(16);
    engine.set_external_block_data(bd);
    auto report = engine.verify_identity(p);
    CHECK_FALSE(report.ok);
    bool named = false;
    for (const auto& item : report.failures)
        if (item.kind == "identity") named = true;
    CHECK(named);
    bool warned = false;
    for (const auto& w : report.warnings)
        if (w.find("weight rule") != std::string::npos) warned = true;
    CHECK(warned);

    // corrupt a multiplicity: conservation breaks
    BlockData bd2 = builtin_block_data(p);
    bd2.walls[0].layers[0].multiplicity = 2;
    Engine engine2(16);
    engine2.set_external_block_data(bd2);
    auto report2 = engine2.verify_identity(p);
    CHECK_FALSE(report2.ok);
    bool conservation = false;
    for (const auto& item : report2.failures)
        if (item.kind == "conservation") conservation = true;
    CHECK(conservation);
}

TEST_CASE("block data JSON round trip") {
    auto bd = builtin_block_data(sph(Rational(7, 2)));
    auto back = block_data_from_json(to_json(bd));
    REQUIRE(back.walls.size() == bd.walls.size());
    for (size_t i = 0; i < bd.walls.size(); ++i) {
        CHECK(back.walls[i].s == bd.walls[i].s);
        REQUIRE(back.walls[i].layers.size() == bd.walls[i].layers.size());
        for (size_t j = 0; j < bd.walls[i].layers.size(); ++j) {
            CHECK(back.walls[i].layers[j].constituent == bd.walls[i].layers[j].constituent);
            CHECK(back.walls[i].layers[j].n == bd.walls[i].layers[j].n);
        }
    }
}

TEST_CASE("unitarity verdicts") {
    Engine engine(24);
    CHECK(engine.unitarity_test(sph(Rational(1, 2))) == UnitarityVerdict::unitary);
    CHECK(engine.unitarity_test(sph(Rational(2))) == UnitarityVerdict::nonunitary);
    CHECK(engine.unitarity_test(sph(Rational(1))) == UnitarityVerdict::unitary);  // trivial rep
    CHECK(engine.unitarity_test(odd(Rational(1))) == UnitarityVerdict::nonunitary);
    for (long k = 1; k <= 6; ++k) {
        auto ds = make_parameter("sl2r", "closed_plus", Weight{{Rational(k - 1)}}, "ds");
        CHECK(engine.unitarity_test(ds) == UnitarityVerdict::unitary);
    }
    auto herm = make_parameter("sl2c", "open", Weight{{Rational(1), Rational(2)}}, "spherical");
    CHECK(engine.unitarity_test(herm) == UnitarityVerdict::not_hermitian);
    auto mp_low = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(1, 4)}}, "genuine_plus");
    CHECK(engine.unitarity_test(mp_low) == UnitarityVerdict::unitary);
    auto mp_high = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(1)}}, "genuine_plus");
    CHECK(engine.unitarity_test(mp_high) == UnitarityVerdict::nonunitary);
    // cross-validation against the split-form definiteness
    CHECK(g_form_definite(build_model("sl2r_metaplectic", Family::ps, Rational(1, 4), 1, 0, 49)));
    CHECK_FALSE(g_form_definite(build_model("sl2r_metaplectic", Family::ps, Rational(1), 1, 0, 49)));
}

TEST_CASE("kprime characters carry the mixed pattern at nonunitary points") {
    Engine engine(16, true);
    auto chi = engine.hodge_char(sph(Rational(2)));
    CHECK(chi.kprime);
    CHECK(chi.entries.at({KType{0, +1}, 0}) == 1);
    CHECK(chi.entries.at({KType{2, -1}, 0}) == 1);
    // theta eigenvalues match the oracle ratios
    auto model = build_model("sl2r", Family::ps, Rational(2), 0, 0, 32);
    auto theta = theta_eigenvalues(model);
    for (const auto& [key, m] : chi.entries) {
        (void)m;
        CHECK(key.first.theta == theta.at(key.first.weight));
    }
}

TEST_CASE("engine refuses bad configuration") {
    CHECK_THROWS(Engine(2));
    Engine engine(8);
    CHECK_THROWS(engine.unitarity_test(odd(Rational(0))));  // not regular
}

TEST_CASE("oracle/engine agreement on tempered parameters") {
    Engine engine(16);
    // spherical tempered principal series
    auto sig0 = engine.sig_char(sph(Rational(0)));
    auto model0 = build_model("sl2r", Family::ps, Rational(0), 0, 0, 32);
    CHECK(equal_on_window(sig0, signature_char_direct(model0, 16), 16));
    auto chi0 = engine.hodge_char(sph(Rational(0)));
    CHECK(equal_on_window(chi0, shift(hodge_filtration_direct(model0, 16), 0), 16));
    // discrete series
    for (long k = 1; k <= 4; ++k) {
        auto p = make_parameter("sl2r", "closed_plus", Weight{{Rational(k - 1)}}, "ds");
        auto model = build_model("sl2r", Family::ds, Rational(0), 0, k, 32);
        CHECK(equal_on_window(engine.sig_char(p), signature_char_direct(model, 16), 16));
        CHECK(equal_on_window(engine.hodge_char(p),
                              shift(hodge_filtration_direct(model, 16), p.codim_c), 16));
    }
    // metaplectic tempered parameter
    auto mp = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(0)}}, "genuine_plus");
    Engine mengine(13);
    auto mmodel = build_model("sl2r_metaplectic", Family::ps, Rational(0), 1, 0, 29);
    CHECK(equal_on_window(mengine.sig_char(mp), signature_char_direct(mmodel, 13), 13));
}

TEST_CASE("extended-group identity") {
    Engine engine(16, true);
    CHECK(engine.verify_identity(sph(Rational(0))).ok);
    CHECK(engine.verify_identity(sph(Rational(2))).ok);
    CHECK(engine.verify_identity(odd(Rational(3))).ok);
    auto mp = make_parameter("sl2r_metaplectic", "open", Weight{{Rational(1)}}, "genuine_plus");
    CHECK(engine.verify_identity(mp).ok);
}

TEST_CASE("the termination rule rejects same-orbit constituents") {
    auto p = sph(Rational(2));
    BlockData bd = builtin_block_data(p);
    bd.walls[0].layers[0].constituent =
        make_parameter("sl2r", "open", Weight{{Rational(1)}}, "even", +1);
    Engine engine(12);
    engine.set_external_block_data(bd);
    CHECK_THROWS_AS(engine.hodge_char(p), std::domain_error);
}

TEST_CASE("concurrent readers against a shared engine") {
    Engine engine(16);
    std::vector<std::thread> workers;
    std::vector<HodgeChar> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&engine, &results, t]() {
            Rational nu = make_rational(t % 4 * 2 + 1, 2);  // 1/2, 3/2, 5/2, 7/2
            results[t] = engine.hodge_char(sph(nu));
        });
    for (auto& w : workers) w.join();
    for (int t = 0; t < 4; ++t) CHECK(results[t] == results[t + 4]);
}

TEST_CASE("complex group unitarity matches the oracle") {
    Engine engine(16);
    auto low = make_parameter("sl2c", "open", Weight{{Rational(1, 2), Rational(1, 2)}}, "spherical");
    auto mid = make_parameter("sl2c", "open", Weight{{Rational(3, 2), Rational(3, 2)}}, "spherical");
    CHECK(engine.unitarity_test(low) == UnitarityVerdict::unitary);
    CHECK(engine.unitarity_test(mid) == UnitarityVerdict::nonunitary);
    CHECK(g_form_definite(build_model("sl2c", Family::ps, Rational(1, 2), 0, 0, 32)));
    CHECK_FALSE(g_form_definite(build_model("sl2c", Family::ps, Rational(3, 2), 0, 0, 32)));
    // tempered closed parameter is unitary
    auto m2 = make_parameter("sl2c", "closed", Weight{{Rational(0), Rational(0)}}, "m2");
    CHECK(engine.unitarity_test(m2) == UnitarityVerdict::unitary);
    // extended-group identity along the complex ray
    Engine kengine(16, true);
    CHECK(kengine.verify_identity(low).ok);
    CHECK(kengine.verify_identity(mid).ok);
    // theta eigenvalues against the oracle at the complementary point
    auto chi = kengine.hodge_char(low);
    auto theta = theta_eigenvalues(build_model("sl2c", Family::ps, Rational(1, 2), 0, 0, 32));
    for (const auto& [key, m] : chi.entries) {
        (void)m;
        CHECK(key.first.theta == theta.at(key.first.weight));
    }
}

TEST_CASE("extended-group tables match the oracle across the grid") {
    // the chain-distance lift rule must reproduce the oracle theta
    // ratios at every off-wall grid point, arbitrarily many walls deep
    Engine engine(24, true);
    for (int q = 1; q <= 18; ++q) {
        Rational nu = make_rational(q, 4);
        if (is_integer(nu)) continue;
        for (int parity : {0, 1}) {
            auto p = parity == 0 ? sph(nu) : odd(nu);
            auto chi = engine.hodge_char(p);
            auto model = build_model("sl2r", Family::ps, nu, parity, 0, 48);
            auto theta = theta_eigenvalues(model);
            // the overall normalization of the engine character is free;
            // compare up to one global sign
            int global = 0;
            for (const auto& [key, m] : chi.entries) {
                (void)m;
                int ratio = key.first.theta * theta.at(key.first.weight);
                if (global == 0) global = ratio;
                CHECK(ratio == global);
            }
        }
    }
    // metaplectic families
    Engine mengine(21, true);
    for (int q = 1; q <= 10; ++q) {
        Rational nu = make_rational(2 * q - 1, 4);  // off the half-integer walls
        for (const char* label : {"genuine_plus", "genuine_minus"}) {
            auto p = make_parameter("sl2r_metaplectic", "open", Weight{{nu}}, label);
            auto chi = mengine.hodge_char(p);
            auto model =
                build_model("sl2r_metaplectic", Family::ps, nu, label[8] == 'p' ? 1 : 3, 0, 45);
            auto theta = theta_eigenvalues(model);
            int global = 0;
            for (const auto& [key, m] : chi.entries) {
                (void)m;
                int ratio = key.first.theta * theta.at(key.first.weight);
                if (global == 0) global = ratio;
                CHECK(ratio == global);
            }
        }
    }
}

TEST_CASE("find_walls honors external block data") {
    auto p = sph(Rational(2));
    BlockData bd = builtin_block_data(p);
    bd.walls[0].s = Rational(-1, 3);  // externally supplied position wins
    auto walls = find_walls(p, &bd);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0] == Rational(-1, 3));
}
