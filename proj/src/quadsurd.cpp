#include "antipode/quadsurd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace antipode {

namespace {

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        const unsigned limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned> out;
        for (unsigned p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (unsigned long q = static_cast<unsigned long>(p) * p; q <= limit; q += p) composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// n = s^2 * m with m squarefree. Complete for n whose square factors have
// prime divisors below the sieve limit or are perfect squares beyond it;
// everything this toolkit produces stays far inside that range.
void extract_square(Int n, Int& s, Int& m) {
    s = 1;
    m = 1;
    if (n <= 0) throw std::invalid_argument("extract_square: non-positive input");
    for (unsigned p : small_primes()) {
        if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) break;
        unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
        if (e == 0) continue;
        if (e >= 2) {
            Int pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
            s *= pw;
        }
        if (e & 1) m *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            m *= n;
        }
    }
}

// Trial-division factorization for term rendering; any leftover cofactor is
// emitted as a single factor.
std::vector<std::pair<Int, long>> factor(Int n) {
    std::vector<std::pair<Int, long>> out;
    if (n <= 1) return out;
    for (unsigned p : small_primes()) {
        if (n == 1) break;
        unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
        if (e) out.emplace_back(Int(p), static_cast<long>(e));
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

QuadSurd QuadSurd::make(const Rat& rational_part, const Rat& radicand) {
    if (radicand < 0) throw std::invalid_argument("QuadSurd: negative radicand");
    if (rational_part == 0 || radicand == 0) return QuadSurd();
    Int n = radicand.get_num() * radicand.get_den();
    Int s, m;
    extract_square(n, s, m);
    QuadSurd q;
    q.rat_ = rational_part * make_rat(s, radicand.get_den());
    q.rad_ = m;
    q.normalize_zero();
    return q;
}

QuadSurd QuadSurd::sqrt_of(const Rat& x) {
    if (x < 0) throw std::invalid_argument("QuadSurd: sqrt of negative rational");
    return make(Rat(1), x);
}

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
    if (is_zero() || o.is_zero()) return QuadSurd();
    Int g = gcd(rad_, o.rad_);
    QuadSurd q;
    q.rat_ = rat_ * o.rat_ * Rat(g);
    q.rad_ = (rad_ / g) * (o.rad_ / g);  // coprime squarefree parts, product squarefree
    q.normalize_zero();
    return q;
}

int QuadSurd::cmp(const QuadSurd& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // same nonzero sign: compare squares, orientation flips for negatives
    Rat qa = squared(), qb = o.squared();
    int c = ::cmp(qa, qb);
    if (c == 0) return 0;
    int mag = c < 0 ? -1 : 1;
    return sa > 0 ? mag : -mag;
}

std::string QuadSurd::term_product() const {
    if (is_zero()) return "0";
    // exponents in half-integer units
    std::map<Int, long> halves;
    for (auto& [p, e] : factor(abs(rat_.get_num()))) halves[p] += 2 * e;
    for (auto& [p, e] : factor(rat_.get_den())) halves[p] -= 2 * e;
    for (auto& [p, e] : factor(rad_)) halves[p] += e;
    std::string out = sign() < 0 ? "-" : "";
    bool first = true;
    for (auto it = halves.rbegin(); it != halves.rend(); ++it) {
        if (it->second == 0) continue;
        if (!first) out += " * ";
        first = false;
        out += it->first.get_str();
        long h = it->second;
        if (h != 2) {
            out += "^";
            if (h < 0) out += "-";
            long a = std::labs(h);
            out += std::to_string(a / 2);
            if (a % 2) out += ".5";
        }
    }
    if (first) out += "1";
    return out;
}

namespace {

// |value| * 10^p rounded half to even, as a non-negative integer.
// value = rat * sqrt(rad). Exact integer arithmetic throughout.
Int abs_scaled_round(const Rat& rat, const Int& rad, long p) {
    Int num = abs(rat.get_num());
    Int den = rat.get_den();
    // X = num/den * sqrt(rad) * 10^p; X^2 = P / Q
    Int P = num * num * rad;
    Int Q = den * den;
    Int pow10;
    if (p >= 0) {
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(2 * p));
        P *= pow10;
    } else {
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-2 * p));
        Q *= pow10;
    }
    // floor(X) = floor(isqrt(P*Q) / Q)
    Int k;
    {
        Int pq = P * Q;
        mpz_sqrt(k.get_mpz_t(), pq.get_mpz_t());
        mpz_fdiv_q(k.get_mpz_t(), k.get_mpz_t(), Q.get_mpz_t());
    }
    // compare X with k + 1/2: X >= k+1/2  <=>  4P >= (2k+1)^2 Q
    Int lhs = 4 * P;
    Int mid = (2 * k + 1) * (2 * k + 1) * Q;
    int c = cmp(lhs, mid);
    if (c > 0) return k + 1;
    if (c < 0) return k;
    // exact tie (value rational): half to even
    return mpz_even_p(k.get_mpz_t()) ? k : k + 1;
}

std::string render_fixed(bool negative, const Int& n, long places) {
    std::string digits = n.get_str();
    std::string out;
    if (places <= 0) {
        out = digits;
        for (long i = 0; i < -places; ++i) out += '0';
    } else {
        if (static_cast<long>(digits.size()) <= places) digits.insert(0, places - digits.size() + 1, '0');
        out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
    }
    if (negative && n != 0) out.insert(0, 1, '-');
    return out;
}

}  // namespace

std::string QuadSurd::decimal_places(int places) const {
    if (is_zero()) return render_fixed(false, Int(0), places);
    Int n = abs_scaled_round(rat_, rad_, places);
    return render_fixed(sign() < 0, n, places);
}

std::string QuadSurd::significant(int digits) const {
    if (digits < 1) throw std::invalid_argument("significant: digits < 1");
    if (is_zero()) return "0";
    // magnitude: e with 10^(e-1) <= |value| < 10^e, via exact comparison of squares
    Rat sq = squared();
    double approx = 0.5 * std::log10(std::max(1e-300, mpq_get_d(sq.get_mpq_t())));
    long e = static_cast<long>(std::floor(approx)) + 1;
    auto pow100 = [](long k) {  // 10^(2k) as a rational
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(2 * std::abs(k)));
        return k >= 0 ? Rat(p) : make_rat(Int(1), p);
    };
    while (::cmp(sq, pow100(e)) >= 0) ++e;
    while (::cmp(sq, pow100(e - 1)) < 0) --e;
    long places = digits - e;
    Int n = abs_scaled_round(rat_, rad_, places);
    return render_fixed(sign() < 0, n, places);
}

std::string QuadSurd::decimal(int significant_digits) const {
    return significant(significant_digits);
}

double QuadSurd::to_double() const {
    return mpq_get_d(rat_.get_mpq_t()) * std::sqrt(mpz_get_d(rad_.get_mpz_t()));
}

}  // namespace antipode
