#pragma once

#include <string>

#include "antipode/rational.hpp"

namespace antipode {

// Exact number of the form rational * sqrt(radicand), radicand a squarefree
// non-negative integer (square factors of a rational radicand are pulled
// into the rational part, the radicand's denominator is cleared). This is
// closed under the products appearing in the center-density formula and
// supports exact comparison.
class QuadSurd {
public:
    QuadSurd() : rat_(0), rad_(1) {}
    QuadSurd(const Rat& r) : rat_(r), rad_(1) { normalize_zero(); }
    QuadSurd(long v) : rat_(v), rad_(1) { normalize_zero(); }

    // value = rational_part * sqrt(radicand); canonicalizes.
    static QuadSurd make(const Rat& rational_part, const Rat& radicand);
    static QuadSurd sqrt_of(const Rat& x);  // x >= 0

    const Rat& rational_part() const { return rat_; }
    const Int& radicand() const { return rad_; }

    bool is_rational() const { return rad_ == 1; }
    bool is_zero() const { return rat_ == 0; }
    int sign() const { return sgn(rat_); }

    // value^2, always rational.
    Rat squared() const { return rat_ * rat_ * Rat(rad_); }

    QuadSurd operator*(const QuadSurd& o) const;
    QuadSurd operator*(const Rat& r) const { return QuadSurd::make(rat_ * r, Rat(rad_)); }

    // Exact three-way comparison: -1, 0, +1.
    int cmp(const QuadSurd& o) const;
    int cmp(const Rat& r) const { return cmp(QuadSurd(r)); }
    bool operator==(const QuadSurd& o) const { return rat_ == o.rat_ && rad_ == o.rad_; }
    bool operator<(const QuadSurd& o) const { return cmp(o) < 0; }
    bool operator>(const QuadSurd& o) const { return cmp(o) > 0; }

    // Factored rendering like "23^11.5 * 2^-34 * 3^-12", primes descending.
    std::string term_product() const;

    // Fixed-point decimal with the given count of significant digits
    // (default 50). Exact for rational values ending in finitely many digits.
    std::string decimal(int significant_digits = 50) const;
    // Rounded to a fixed number of digits after the decimal point
    // (round half to even).
    std::string decimal_places(int places) const;
    // Rounded to n significant digits (round half to even).
    std::string significant(int digits) const;

    double to_double() const;

private:
    void normalize_zero() {
        if (rat_ == 0) rad_ = 1;
    }
    Rat rat_;
    Int rad_;
};

}  // namespace antipode
