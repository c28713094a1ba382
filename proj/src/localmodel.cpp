#include "hodge/localmodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hodge {

void BigradedTable::add(long x_degree, long level, long count) {
    if (count == 0) return;
    auto key = std::make_pair(x_degree, level);
    long& v = dims[key];
    v += count;
    if (v == 0) dims.erase(key);
}

long BigradedTable::total() const {
    long t = 0;
    for (const auto& [k, v] : dims) {
        (void)k;
        t += v;
    }
    return t;
}

std::string BigradedTable::to_tsv(const std::string& tag) const {
    std::ostringstream os;
    for (const auto& [k, v] : dims)
        os << tag << '\t' << k.first << '\t' << k.second << '\t' << v << '\n';
    return os.str();
}

namespace {

// Smallest m with mu + m > -1 (shriek) or >= -1 (star).
long lattice_start(const Rational& mu, ExtensionKind kind) {
    Rational bound = Rational(-1) - mu;
    if (kind == ExtensionKind::star) return rational_ceil(bound);
    // strictly greater
    long m = rational_floor(bound) + 1;
    return m;
}

bool summand_integral(const GermSummand& s) { return is_integer(s.mu); }

// Extension table of a single summand for shriek/star; x-degrees are
// lattice offsets m from the stored exponent.
void summand_extension_table(const GermSummand& s, int D, ExtensionKind kind, BigradedTable& out,
                             BigradedTable* lattice_out) {
    long m0 = lattice_start(s.mu, kind);
    // lattice part: degrees m0..D, full Jordan block at levels off..off+r-1
    for (long d = m0; d <= D; ++d)
        for (int j = 0; j < s.jordan; ++j) {
            out.add(d, s.hodge_offset + j, 1);
            if (lattice_out != nullptr) lattice_out->add(d, s.hodge_offset + j, 1);
        }
    // del-part below the generator: degree m0-i at levels off+i+j
    for (long i = 1; m0 - i >= -static_cast<long>(D); ++i) {
        if (i > D) break;
        for (int j = 0; j < s.jordan; ++j) out.add(m0 - i, s.hodge_offset + i + j, 1);
    }
}

// Jantzen layer tables of a single integral summand (see jantzen()).
// The stored exponent is an integer, so the shriek lattice starts at
// m0 = -mu and the slots below it are m0 - 1 - i.  Each such slot
// carries r-1 classes in layer 0 (levels off+i+1+t, t < r-1) and one
// class in layer r (level off+i+r).
void summand_jantzen_tables(const GermSummand& s, int D, BigradedTable& layer0,
                            BigradedTable& layer_r) {
    long m0 = lattice_start(s.mu, ExtensionKind::shriek);
    for (long d = m0; d <= D; ++d)
        for (int j = 0; j < s.jordan; ++j) layer0.add(d, s.hodge_offset + j, 1);
    for (long i = 0;; ++i) {
        long d = m0 - 1 - i;
        if (d < -static_cast<long>(D) || i + 1 > D) break;
        for (int t = 0; t < s.jordan - 1; ++t) layer0.add(d, s.hodge_offset + i + 1 + t, 1);
        layer_r.add(d, s.hodge_offset + i + 1 + (s.jordan - 1), 1);
    }
}

}  // namespace

std::vector<GermBasisElement> v_filtration(const GermLocalSystem& ls, const Rational& alpha) {
    std::vector<GermBasisElement> out;
    const long D = ls.truncation;
    for (size_t si = 0; si < ls.summands.size(); ++si) {
        const auto& s = ls.summands[si];
        for (long m = -D; m <= D; ++m) {
            Rational exp = s.mu + m;
            if (exp < alpha) continue;
            for (int j = 0; j < s.jordan; ++j) out.push_back({si, m, j});
        }
    }
    return out;
}

long gr_v_dim(const GermLocalSystem& ls, const Rational& alpha) {
    long count = 0;
    for (const auto& s : ls.summands) {
        Rational m = alpha - s.mu;
        if (is_integer(m)) {
            long mm = to_long(m);
            if (mm >= -ls.truncation && mm <= ls.truncation) count += s.jordan;
        }
    }
    return count;
}

namespace {

using SmallMatrix = std::vector<std::vector<Rational>>;

SmallMatrix mat_mul(const SmallMatrix& a, const SmallMatrix& b) {
    size_t n = a.size();
    SmallMatrix c(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool mat_zero(const SmallMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace

bool v_axioms_hold(const GermLocalSystem& ls) {
    const long D = ls.truncation;
    for (const auto& s : ls.summands) {
        const int r = s.jordan;
        if (r < 1) return false;
        for (long m = -D / 2; m <= D / 2; ++m) {
            Rational alpha = s.mu + m;
            // x V^a in V^{a+1} and del V^a in V^{a-1}: images of the
            // enumerated basis land in the enumerated filtration steps
            std::set<std::pair<size_t, long>> up, down;
            for (const auto& b : v_filtration(ls, alpha + 1)) up.insert({b.summand, b.m});
            for (const auto& b : v_filtration(ls, alpha - 1)) down.insert({b.summand, b.m});
            for (const auto& b : v_filtration(ls, alpha)) {
                if (std::labs(b.m + 1) <= D && up.find({b.summand, b.m + 1}) == up.end())
                    return false;
                if (std::labs(b.m - 1) <= D && down.find({b.summand, b.m - 1}) == down.end())
                    return false;
            }
            // (alpha - x del) on the Gr_V^alpha slot: x del acts by
            // (alpha + s) on x^(alpha+s) s^j, so the operator is -s,
            // the Jordan shift.  Nilpotency of order exactly r.
            SmallMatrix op(r, std::vector<Rational>(r, Rational(0)));
            for (int j = 0; j + 1 < r; ++j) op[j + 1][j] = Rational(-1);
            SmallMatrix p(r, std::vector<Rational>(r, Rational(0)));
            for (int j = 0; j < r; ++j) p[j][j] = 1;
            for (int k = 0; k < r - 1; ++k) p = mat_mul(p, op);
            if (r > 1 && mat_zero(p)) return false;  // order < r would be wrong
            p = mat_mul(p, op);
            if (!mat_zero(p)) return false;
        }
    }
    return true;
}

ExtensionModule extend(const GermLocalSystem& ls, ExtensionKind kind) {
    ExtensionModule out;
    out.kind = kind;
    if (kind == ExtensionKind::intermediate) {
        for (const auto& s : ls.summands) {
            if (!summand_integral(s)) {
                summand_extension_table(s, ls.truncation, ExtensionKind::shriek, out.table,
                                        &out.lattice_table);
            } else {
                BigradedTable layer_r;
                summand_jantzen_tables(s, ls.truncation, out.table, layer_r);
            }
        }
        return out;
    }
    for (const auto& s : ls.summands)
        summand_extension_table(s, ls.truncation, kind, out.table, &out.lattice_table);
    return out;
}

GermLocalSystem deform(const GermLocalSystem& ls, const Rational& s) {
    GermLocalSystem out = ls;
    for (auto& sm : out.summands) sm.mu += s;
    return out;
}

std::vector<Rational> walls(const GermLocalSystem& ls, const Rational& lo, const Rational& hi,
                            bool lo_closed, bool hi_closed) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    std::set<Rational> found;
    for (const auto& s : ls.summands) {
        // mu + t integral <=> t = k - mu
        long k_lo = rational_floor(lo + s.mu) - 1;
        long k_hi = rational_ceil(hi + s.mu) + 1;
        for (long k = k_lo; k <= k_hi; ++k) {
            Rational t = Rational(k) - s.mu;
            bool in_lo = lo_closed ? (t >= lo) : (t > lo);
            bool in_hi = hi_closed ? (t <= hi) : (t < hi);
            if (in_lo && in_hi) found.insert(t);
        }
    }
    return std::vector<Rational>(found.begin(), found.end());
}

bool check_semicontinuity(const GermLocalSystem& ls, const Rational& s0, WallSide side) {
    auto nearby = walls(ls, s0 - 2, s0 + 2);
    Rational eps(1, 8);
    bool have_gap = false;
    for (const auto& w : nearby) {
        if (w == s0) continue;
        Rational gap = abs(w - s0);
        if (!have_gap || gap / 2 < eps) eps = gap / 2;
        have_gap = true;
    }
    if (eps <= 0) throw std::domain_error("wall gap not positive");
    if (side == WallSide::left) {
        auto a = extend(deform(ls, s0 - eps), ExtensionKind::shriek);
        auto b = extend(deform(ls, s0), ExtensionKind::shriek);
        return a.table == b.table;
    }
    auto a = extend(deform(ls, s0 + eps), ExtensionKind::star);
    auto b = extend(deform(ls, s0), ExtensionKind::star);
    return a.table == b.table;
}

std::vector<JantzenLayer> jantzen(const GermLocalSystem& ls) {
    if (ls.summands.empty()) throw std::invalid_argument("empty local system");
    int w = ls.summands.front().weight;
    for (const auto& s : ls.summands)
        if (s.weight != w) throw std::invalid_argument("jantzen requires a uniform ambient weight");

    std::map<int, BigradedTable> tables;  // n -> dims
    for (const auto& s : ls.summands) {
        if (!summand_integral(s)) {
            BigradedTable t;
            summand_extension_table(s, ls.truncation, ExtensionKind::shriek, t, nullptr);
            for (const auto& [k, v] : t.dims) tables[0].add(k.first, k.second, v);
        } else {
            BigradedTable l0, lr;
            summand_jantzen_tables(s, ls.truncation, l0, lr);
            for (const auto& [k, v] : l0.dims) tables[0].add(k.first, k.second, v);
            for (const auto& [k, v] : lr.dims) tables[s.jordan].add(k.first, k.second, v);
        }
    }

    std::vector<JantzenLayer> out;
    for (const auto& [n, table] : tables) {
        JantzenLayer layer;
        layer.n = n;
        layer.graded_dims = table;
        layer.weight = w - n;
        // Residue signs: the raw pairing sign of the slot at x-degree
        // -1-i is (-1)^i, which is the polarization parity pattern
        // relative to the layer's lowest Hodge level.  A mismatch at
        // any slot would flip the sign.
        bool matches = true;
        if (n > 0) {
            long lowest_level = 0, top_degree = 0;
            bool first = true;
            for (const auto& [k, v] : table.dims) {
                (void)v;
                if (first || k.second < lowest_level) lowest_level = k.second;
                if (first || k.first > top_degree) top_degree = k.first;
                first = false;
            }
            for (const auto& [k, v] : table.dims) {
                (void)v;
                long i = top_degree - k.first;  // del-steps below the top slot
                long delta = k.second - lowest_level;
                int raw = (i % 2 == 0) ? +1 : -1;
                int expected = (delta % 2 == 0) ? +1 : -1;
                if (raw != expected) matches = false;
            }
        }
        layer.form_sign = matches ? +1 : -1;
        out.push_back(layer);
    }
    return out;
}

}  // namespace hodge
