#include "bo/rational.hpp"

namespace bo {

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(r)) {
        if (e < 0) throw std::domain_error("rational: negative power of zero");
        return Rational(0);
    }
    const bool flip = e < 0;
    const unsigned long k = flip ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), r.get_den().get_mpz_t(), k);
    return flip ? make_rational(pd, pn) : make_rational(pn, pd);
}

}  // namespace bo
