#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ellipstab {

using Rational = mpq_class;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact decimal form, "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error("malformed rational: '" + s + "'");
    q.canonicalize();
    if (sgn(q.get_den()) == 0)
        throw Error("zero denominator: '" + s + "'");
    return q;
}

/// Uniform-ish random rational num/den with |num| <= bound, 1 <= den <= bound.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound,
                                bool nonzero = false) {
    std::uniform_int_distribution<std::int64_t> num_dist(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den_dist(1, bound);
    for (;;) {
        std::int64_t num = num_dist(rng);
        if (nonzero && num == 0)
            continue;
        Rational q(mpz_class(std::to_string(num)),
                   mpz_class(std::to_string(den_dist(rng))));
        q.canonicalize();
        return q;
    }
}

} // namespace ellipstab
