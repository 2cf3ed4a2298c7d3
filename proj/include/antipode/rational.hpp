#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace antipode {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (gcd(num, den) = 1, den >= 1) after every arithmetic op.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Nearest integer, ties toward +infinity: floor(x + 1/2).
Int round_nearest(const Rat& x);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// "p/q" when q != 1, else "p".
std::string rat_to_string(const Rat& x);

// Accepts "p", "p/q", and plain decimals like "-3.25". Rejects everything else.
std::optional<Rat> parse_rat(std::string_view text);

}  // namespace antipode
