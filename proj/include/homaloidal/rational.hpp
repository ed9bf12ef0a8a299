#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <random>
#include <stdexcept>
#include <string>

namespace homaloidal {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
}

// Uniform rational with numerator in [-max_num, max_num] and denominator
// in [1, max_den]. Used for randomized verification points.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 50, long max_den = 10) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

}  // namespace homaloidal
