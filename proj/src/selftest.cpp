#include "hodge/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "hodge/localmodel.hpp"
#include "hodge/oracle.hpp"
#include "hodge/tempered.hpp"
#include "hodge/wallcross.hpp"

namespace hodge {

namespace {

constexpr long kWindow = 40;

HCParameter sph(const Rational& nu) {
    return make_parameter("sl2r", "open", Weight{{nu}}, "even");
}

HCParameter odd(const Rational& nu) {
    return make_parameter("sl2r", "open", Weight{{nu}}, "odd");
}

HCParameter ds(long k, bool plus) {
    return make_parameter("sl2r", plus ? "closed_plus" : "closed_minus",
                          Weight{{Rational(k - 1)}}, "ds");
}

// 1. Main identity on the catalog grid, exact on window 40.
bool criterion_identity(std::ostream& os) {
    auto start = std::chrono::steady_clock::now();
    Engine engine(kWindow);
    long checked = 0, failed = 0;
    for (int eighth = 0; eighth <= 18; ++eighth) {
        Rational nu = make_rational(eighth, 4);
        bool even_wall = is_integer(nu) && to_long(nu) % 2 == 1;
        bool odd_wall = is_integer(nu) && to_long(nu) % 2 == 0;
        if (!even_wall) {
            ++checked;
            if (!engine.verify_identity(sph(nu)).ok) ++failed;
        }
        if (!odd_wall && nu > 0) {
            ++checked;
            if (!engine.verify_identity(odd(nu)).ok) ++failed;
        }
    }
    for (long k = 1; k <= 6; ++k) {
        for (bool plus : {true, false}) {
            ++checked;
            if (!engine.verify_identity(ds(k, plus)).ok) ++failed;
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    os << "  identity checked on " << checked << " parameters, " << failed << " failures ("
       << elapsed << " ms)\n";
    return failed == 0 && elapsed < 10000;
}

// 2. The unitary dual at real infinitesimal character, cross-validated
// against the definiteness of the split-form recursion.
bool criterion_unitary_dual(std::ostream& os) {
    Engine engine(kWindow);
    long checked = 0, failed = 0;
    auto record = [&](bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            os << "  mismatch: " << what << "\n";
        }
    };

    for (int eighth = 0; eighth <= 32; ++eighth) {
        Rational nu = make_rational(eighth, 8);
        // spherical family
        {
            bool on_wall = is_integer(nu) && to_long(nu) % 2 == 1;
            auto verdict = engine.unitarity_test(sph(nu));
            bool expected_unitary = nu < 1 || (on_wall && nu == 1);
            bool oracle_unitary;
            if (on_wall) {
                auto fd = build_model("sl2r", Family::fd, Rational(0), 0, to_long(nu), 2 * kWindow);
                oracle_unitary = g_form_definite(fd);
            } else {
                auto model = build_model("sl2r", Family::ps, nu, 0, 0, 2 * kWindow);
                oracle_unitary = g_form_definite(model);
            }
            bool engine_unitary = verdict == UnitarityVerdict::unitary;
            record(engine_unitary == oracle_unitary,
                   "spherical nu = " + format_rational(nu) + " vs oracle");
            record(engine_unitary == expected_unitary,
                   "spherical nu = " + format_rational(nu) + " vs classical list");
        }
        // nonspherical Hermitian points
        if (nu > 0) {
            bool on_wall = is_integer(nu) && to_long(nu) % 2 == 0;
            auto verdict = engine.unitarity_test(odd(nu));
            bool oracle_unitary;
            if (on_wall) {
                auto fd = build_model("sl2r", Family::fd, Rational(0), 0, to_long(nu), 2 * kWindow);
                oracle_unitary = g_form_definite(fd);
            } else {
                auto model = build_model("sl2r", Family::ps, nu, 1, 0, 2 * kWindow);
                oracle_unitary = g_form_definite(model);
            }
            bool engine_unitary = verdict == UnitarityVerdict::unitary;
            record(engine_unitary == oracle_unitary,
                   "nonspherical nu = " + format_rational(nu) + " vs oracle");
            record(!engine_unitary, "nonspherical nu = " + format_rational(nu) + " must fail");
        }
    }
    // discrete series and their limits
    for (long k = 1; k <= 6; ++k) {
        for (bool plus : {true, false}) {
            auto verdict = engine.unitarity_test(ds(k, plus));
            auto model = build_model("sl2r", Family::ds, Rational(0), 0, plus ? k : -k, 2 * kWindow);
            record(verdict == UnitarityVerdict::unitary && g_form_definite(model),
                   "discrete series k = " + std::to_string(k));
        }
    }
    os << "  unitarity compared at " << checked << " points, " << failed << " mismatches\n";
    return failed == 0;
}

// 3. Tempered base case against the direct lowest-K-type filtration.
bool criterion_tempered_base(std::ostream& os) {
    bool ok = true;
    {
        auto lhs = split_tempered_gr("sl2r", KType{0, 0}, kWindow);
        auto model = build_model("sl2r", Family::ps, Rational(0), 0, 0, 2 * kWindow);
        auto rhs = hodge_filtration_direct(model, kWindow);
        if (!equal_on_window(lhs, rhs, kWindow)) {
            ok = false;
            os << "  spherical split formula disagrees with the direct filtration\n";
        }
    }
    {
        auto lhs = split_tempered_gr("sl2r", KType{1, 0}, kWindow);
        auto model = build_model("sl2r", Family::ps, Rational(0), 1, 0, 2 * kWindow);
        auto rhs = hodge_filtration_direct(model, kWindow);
        if (!equal_on_window(lhs, rhs, kWindow)) {
            ok = false;
            os << "  nonspherical split formula disagrees with the direct filtration\n";
        }
    }
    {
        auto lhs = split_tempered_gr("sl2c", KType{0, 0}, 20);
        auto model = build_model("sl2c", Family::ps, Rational(0), 0, 0, 40);
        auto rhs = hodge_filtration_direct(model, 20);
        if (!equal_on_window(lhs, rhs, 20)) {
            ok = false;
            os << "  complex-group split formula disagrees with the direct filtration\n";
        }
    }
    return ok;
}

// 4. Cohomological induction against the direct discrete series tables,
// with the theta-sign propagation check.
bool criterion_cohind(std::ostream& os) {
    bool ok = true;
    for (long k = 1; k <= 6; ++k) {
        for (bool plus : {true, false}) {
            auto p = ds(k, plus);
            auto engine_table = tempered_hodge_char(p, kWindow);
            auto model = build_model("sl2r", Family::ds, Rational(0), 0, plus ? k : -k, 2 * kWindow);
            auto direct = shift(hodge_filtration_direct(model, kWindow), p.codim_c);
            if (!equal_on_window(engine_table, direct, kWindow)) {
                ok = false;
                os << "  discrete series table mismatch at k = " << k << "\n";
            }
        }
    }
    // theta propagation: input pattern (-1)^p gives output pattern (-1)^p
    HodgeChar levi;
    levi.window = kWindow;
    levi.kprime = true;
    levi.add_entry(KType{0, +1}, 0, 1);
    auto out = cohind_char(levi, CohindEmbedding{{2, -2}, {-2}, 2, 1, "torus"}, kWindow);
    for (const auto& [key, m] : out.entries) {
        (void)m;
        int expect = key.second % 2 == 0 ? +1 : -1;
        if (key.first.theta != expect) {
            ok = false;
            os << "  theta propagation violated at degree " << key.second << "\n";
        }
    }
    return ok;
}

// 5. Local model property suite on random rational exponents.
bool criterion_local_model(std::ostream& os) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 8);
    long failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Rational mu = make_rational(num(rng), den(rng));
        GermLocalSystem ls{{GermSummand{mu, 1, 0, 1}}, 12};
        if (!v_axioms_hold(ls)) ++failures;
        for (const auto& w : walls(ls, Rational(-1), Rational(1))) {
            if (!check_semicontinuity(ls, w, WallSide::left)) ++failures;
            if (!check_semicontinuity(ls, w, WallSide::right)) ++failures;
        }
        auto layers = jantzen(ls);
        BigradedTable merged;
        for (const auto& layer : layers) {
            if (layer.weight != 1 - layer.n) ++failures;
            for (const auto& [k, v] : layer.graded_dims.dims) merged.add(k.first, k.second, v);
        }
        if (!(merged == extend(ls, ExtensionKind::shriek).table)) ++failures;
        if (is_integer(mu)) {
            // polynomial part of rank one plus a single extra class per
            // negative lattice degree
            if (layers.size() != 2) {
                ++failures;
            } else {
                long m0 = -to_long(mu);
                for (long d = m0; d <= 12; ++d)
                    if (layers[0].graded_dims.dims.count({d, 0}) != 1) ++failures;
                for (long i = 0; m0 - 1 - i >= -12 && i + 1 <= 12; ++i)
                    if (layers[1].graded_dims.dims.count({m0 - 1 - i, i + 1}) != 1) ++failures;
            }
        } else if (layers.size() != 1) {
            ++failures;
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (failures != 0) os << "  " << failures << " local-model property failures\n";
    os << "  50 exponents checked (" << elapsed << " ms)\n";
    return failures == 0 && elapsed < 30000;
}

// 6. Character-ring laws, 1000 randomized checks.
bool criterion_ring_laws(std::ostream& os) {
    std::mt19937 rng(1729);
    std::uniform_int_distribution<long> wdist(-10, 10);
    std::uniform_int_distribution<long> ddist(-4, 8);
    std::uniform_int_distribution<long> mdist(-5, 5);
    std::uniform_int_distribution<long> cdist(-4, 4);
    auto random_chi = [&]() {
        HodgeChar chi;
        chi.window = 10;
        for (int i = 0; i < 5; ++i) chi.add_entry(KType{wdist(rng), 0}, ddist(rng), mdist(rng));
        return chi;
    };
    long failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        HodgeChar a = random_chi(), b = random_chi();
        long c = cdist(rng), k = cdist(rng);
        if (!(add(a, b) == add(b, a))) ++failures;
        if (!(shift(add(a, b), k) == add(shift(a, k), shift(b, k)))) ++failures;
        if (!(shift(shift(a, k), -k) == a)) ++failures;
        if (!(reduce_mod(shift(a, 2), c) == reduce_mod(a, c))) ++failures;
        if (!(reduce_mod(add(a, b), c) == add(reduce_mod(a, c), reduce_mod(b, c)))) ++failures;
        if (!(specialize_u1(a) == total_multiplicity(reduce_mod(a, c)))) ++failures;
    }
    if (failures != 0) os << "  " << failures << " ring-law failures\n";
    return failures == 0;
}

// 7. Fault detection in block data.
bool criterion_fault_detection(std::ostream& os) {
    bool ok = true;
    auto p = sph(Rational(2));
    {
        BlockData bd = builtin_block_data(p);
        for (auto& layer : bd.walls[0].layers) {
            layer.constituent.weight_w += 1;
            layer.constituent.codim_c -= 1;
        }
        Engine engine(16);
        engine.set_external_block_data(bd);
        auto report = engine.verify_identity(p);
        bool named = false;
        for (const auto& item : report.failures)
            if (item.kind == "identity") named = true;
        if (report.ok || !named) {
            ok = false;
            os << "  corrupted layer weight was not caught\n";
        }
    }
    {
        BlockData bd = builtin_block_data(p);
        bd.walls[0].layers[0].multiplicity = 2;
        Engine engine(16);
        engine.set_external_block_data(bd);
        auto report = engine.verify_identity(p);
        bool named = false;
        for (const auto& item : report.failures)
            if (item.kind == "conservation") named = true;
        if (report.ok || !named) {
            ok = false;
            os << "  corrupted multiplicity was not caught\n";
        }
    }
    return ok;
}

}  // namespace

bool run_acceptance(std::ostream& os) {
    struct Criterion {
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 main identity on the catalog grid", criterion_identity},
        {"2 unitary dual at real infinitesimal character", criterion_unitary_dual},
        {"3 tempered base case", criterion_tempered_base},
        {"4 cohomological induction", criterion_cohind},
        {"5 local model property suite", criterion_local_model},
        {"6 character-ring laws", criterion_ring_laws},
        {"7 fault detection", criterion_fault_detection},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "  exception: " << e.what() << "\n";
        }
        os << (ok ? "PASS" : "FAIL") << "  criterion " << c.name << "\n";
        os << detail.str();
        all_ok = all_ok && ok;
    }
    return all_ok;
}

}  // namespace hodge
