#include "hodge/rootdata.hpp"

#include <json.hpp>

#include <stdexcept>

namespace hodge {

Weight Weight::operator+(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::scaled(const Rational& c) const {
    Weight r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool Weight::is_zero() const {
    for (const auto& x : coords)
        if (x != 0) return false;
    return true;
}

RootDatum RootDatum::from_cartan(const std::string& name,
                                 const std::vector<std::vector<long>>& cartan) {
    RootDatum d;
    d.name = name;
    d.rank = static_cast<int>(cartan.size());
    d.cartan = cartan;
    for (int i = 0; i < d.rank; ++i) {
        if (static_cast<int>(cartan[i].size()) != d.rank)
            throw std::invalid_argument("cartan matrix not square");
        if (cartan[i][i] != 2) throw std::invalid_argument("cartan diagonal must be 2");
        for (int j = 0; j < d.rank; ++j)
            if (i != j && cartan[i][j] > 0)
                throw std::invalid_argument("cartan off-diagonal must be <= 0");
    }
    // Positive coroots for the catalog: rank 1 and products of A1's have
    // exactly the simple coroots.  For a connected rank-2 diagram we add
    // the sum combinations that stay coroots of A2/B2-type diagrams; the
    // catalog itself never needs them, so keep the simple ones plus the
    // obvious sums when the diagram is connected.
    for (int i = 0; i < d.rank; ++i) {
        std::vector<long> c(d.rank, 0);
        c[i] = 1;
        d.positive_coroots.push_back(c);
    }
    if (d.rank == 2 && (cartan[0][1] != 0 || cartan[1][0] != 0)) {
        if (cartan[0][1] == -1 && cartan[1][0] == -1) {
            d.positive_coroots.push_back({1, 1});  // A2
        } else {
            throw std::invalid_argument("unsupported connected rank-2 diagram");
        }
    }
    d.rho.coords.assign(d.rank, Rational(1));
    return d;
}

std::vector<Rational> RootDatum::root_vector(size_t positive_index) const {
    if (positive_index >= positive_coroots.size())
        throw std::out_of_range("positive root index");
    // alpha = sum over simple parts of the coroot combination.  For the
    // simply-laced catalog a positive root has the same simple-root
    // combination as its coroot.
    const auto& combo = positive_coroots[positive_index];
    std::vector<Rational> v(rank, Rational(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) v[j] += Rational(combo[i]) * Rational(cartan[i][j]);
    return v;
}

std::string RootDatum::to_json() const {
    nlohmann::json j;
    j["rank"] = rank;
    j["cartan"] = cartan;
    j["name"] = name;
    return j.dump();
}

RootDatum RootDatum::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::vector<long>> cartan = j.at("cartan").get<std::vector<std::vector<long>>>();
    return from_cartan(j.at("name").get<std::string>(), cartan);
}

RootDatum root_datum_a1() { return RootDatum::from_cartan("A1", {{2}}); }

RootDatum root_datum_a1a1() { return RootDatum::from_cartan("A1xA1", {{2, 0}, {0, 2}}); }

RootDatum root_datum_a1_complex() {
    return RootDatum::from_cartan("A1_complex", {{2, 0}, {0, 2}});
}

Weight LatticeInvolution::apply(const Weight& w) const {
    Weight r;
    r.coords = apply_vec(w.coords);
    return r;
}

std::vector<Rational> LatticeInvolution::apply_vec(const std::vector<Rational>& v) const {
    size_t n = matrix.size();
    if (v.size() != n) throw std::invalid_argument("involution rank mismatch");
    std::vector<Rational> r(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] += Rational(matrix[i][j]) * v[j];
    return r;
}

void LatticeInvolution::validate(const RootDatum& datum) const {
    size_t n = matrix.size();
    if (static_cast<int>(n) != datum.rank) throw std::invalid_argument("involution rank mismatch");
    // matrix^2 = id
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            long acc = 0;
            for (size_t k = 0; k < n; ++k) acc += matrix[i][k] * matrix[k][j];
            if (acc != (i == j ? 1 : 0)) throw std::invalid_argument("involution does not square to id");
        }
    // permutes the roots up to sign
    for (size_t r = 0; r < datum.num_positive_roots(); ++r) {
        auto image = apply_vec(datum.root_vector(r));
        bool found = false;
        for (size_t s = 0; s < datum.num_positive_roots() && !found; ++s) {
            auto beta = datum.root_vector(s);
            bool plus = true, minus = true;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (image[j] != beta[j]) plus = false;
                if (image[j] != -beta[j]) minus = false;
            }
            found = plus || minus;
        }
        if (!found) throw std::invalid_argument("involution does not preserve the roots");
    }
}

Rational pairing(const RootDatum& datum, const Weight& lambda, size_t coroot_index) {
    if (coroot_index < 1 || coroot_index > datum.num_positive_roots())
        throw std::out_of_range("coroot index out of range");
    const auto& combo = datum.positive_coroots[coroot_index - 1];
    Rational acc(0);
    for (int i = 0; i < datum.rank; ++i) acc += Rational(combo[i]) * lambda.coords[i];
    return acc;
}

bool is_dominant(const RootDatum& datum, const Weight& lambda) {
    for (size_t r = 1; r <= datum.num_positive_roots(); ++r)
        if (pairing(datum, lambda, r) < 0) return false;
    return true;
}

RootClass classify_root(const RootDatum& datum, const LatticeInvolution& theta,
                        size_t positive_index) {
    theta.validate(datum);
    auto alpha = datum.root_vector(positive_index);
    auto image = theta.apply_vec(alpha);
    bool plus = true, minus = true;
    for (size_t j = 0; j < alpha.size(); ++j) {
        if (image[j] != alpha[j]) plus = false;
        if (image[j] != -alpha[j]) minus = false;
    }
    if (minus) return RootClass::real;
    if (plus) return RootClass::imaginary;
    return RootClass::complex_root;
}

namespace {

// theta(alpha) lies in Phi_- iff its expansion in simple roots has
// nonpositive coefficients (catalog diagrams are simply laced, so the
// fundamental-coordinate test below is equivalent for actual roots).
bool image_is_negative_root(const RootDatum& datum, const std::vector<Rational>& image) {
    for (size_t s = 0; s < datum.num_positive_roots(); ++s) {
        auto beta = datum.root_vector(s);
        bool minus = true;
        for (size_t j = 0; j < beta.size(); ++j)
            if (image[j] != -beta[j]) minus = false;
        if (minus) return true;
    }
    return false;
}

}  // namespace

std::set<size_t> singular_real_simple_set(const RootDatum& datum, const Weight& lambda,
                                          const LatticeInvolution& theta) {
    if (!is_dominant(datum, lambda)) throw std::domain_error("lambda not dominant");
    theta.validate(datum);
    std::set<size_t> out;
    for (int i = 0; i < datum.rank; ++i) {
        if (lambda.coords[i] != 0) continue;
        std::vector<Rational> alpha(datum.rank);
        for (int j = 0; j < datum.rank; ++j) alpha[j] = Rational(datum.cartan[i][j]);
        if (image_is_negative_root(datum, theta.apply_vec(alpha))) out.insert(i);
    }
    return out;
}

Weight simple_reflection(const RootDatum& datum, size_t i, const Weight& lambda) {
    if (static_cast<int>(i) >= datum.rank) throw std::out_of_range("simple index");
    Weight r = lambda;
    Rational c = lambda.coords[i];
    for (int j = 0; j < datum.rank; ++j) r.coords[j] -= c * Rational(datum.cartan[i][j]);
    return r;
}

}  // namespace hodge
