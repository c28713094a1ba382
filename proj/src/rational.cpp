#include "hodge/rational.hpp"

#include <stdexcept>

namespace hodge {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s = text;
    // mpq_class accepts "p/q" directly but not surrounding spaces.
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = s.substr(a, b - a + 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + format_rational(q));
    if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of range");
    return q.get_num().get_si();
}

long rational_floor(const Rational& q) {
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!n.fits_slong_p()) throw std::domain_error("floor out of range");
    return n.get_si();
}

long rational_ceil(const Rational& q) {
    mpz_class n;
    mpz_cdiv_q(n.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!n.fits_slong_p()) throw std::domain_error("ceil out of range");
    return n.get_si();
}

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace hodge
