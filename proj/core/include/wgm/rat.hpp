#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wgm {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct ParseError : Error {
    using Error::Error;
};
struct NonUnitError : Error {
    using Error::Error;
};

/* Exact rational arithmetic. mpq_class keeps values canonical
 * (coprime numerator/denominator, positive denominator) as long as
 * they are built through its operators; raw constructors need an
 * explicit canonicalize(). */
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1)
{
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s)
{
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline Rat rat_pow(const Rat& q, long e)
{
    if (e < 0) {
        if (rat_is_zero(q))
            throw Error("rat_pow: negative power of zero");
        return rat_pow(Rat(1) / q, -e);
    }
    Rat acc(1), base = q;
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace wgm
