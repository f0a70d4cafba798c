#include "p5lab/rational.hpp"

#include "p5lab/errors.hpp"

namespace p5lab {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ArgumentError("rational with zero denominator: " + text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ArgumentError("malformed rational: '" + text + "' (expected \"a\" or \"a/b\")");
    }
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // base was canonical, so num^e/den^e is canonical
}

BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow2_inv(unsigned long k) {
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return Rational(1, den);
}

}  // namespace p5lab
