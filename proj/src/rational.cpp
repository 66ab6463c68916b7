#include "ordpoly/rational.hpp"

namespace ordpoly {

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(Integer(v.get_num()), Integer(v.get_den()));
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

} // namespace ordpoly
