#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace coinduel {

/// Arbitrary-precision signed integer. Thin value-semantic wrapper over
/// GMP's mpz_t; everything the exact solvers need and nothing more.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit for literals

    explicit BigInt(const std::string& decimal) {
        if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: cannot parse \"" + decimal + "\"");
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    static BigInt pow(unsigned long base, unsigned long exp) {
        BigInt r;
        mpz_ui_pow_ui(r.z_, base, exp);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(unsigned long m) {
        mpz_mul_ui(z_, z_, m);
        return *this;
    }

    /// *this += x * m, fused (the hot loop of the lattice DPs).
    void add_mul(const BigInt& x, unsigned long m) { mpz_addmul_ui(z_, x.z_, m); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }

    double to_double() const { return mpz_get_d(z_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

/// Exact rational number. Canonical form is maintained as an invariant:
/// denominator > 0 and gcd(numerator, denominator) = 1.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {  // NOLINT: implicit for literals
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "3", "-0.25", ".5", "5/27" into an exact value.
    static Rational from_decimal(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        if (s.find('/') != std::string::npos) {
            Rational r;
            if (mpq_set_str(r.q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(r.q_)) == 0)
                throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
            mpq_canonicalize(r.q_);
            return r;
        }
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        std::string digits;
        std::size_t frac_len = 0;
        bool seen_dot = false;
        for (; i < s.size(); ++i) {
            if (s[i] == '.') {
                if (seen_dot) throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
                seen_dot = true;
            } else if (s[i] >= '0' && s[i] <= '9') {
                digits.push_back(s[i]);
                if (seen_dot) ++frac_len;
            } else {
                throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
            }
        }
        if (digits.empty()) throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
        BigInt num(digits);
        if (neg) num = BigInt(0l) - num;
        return Rational(num, BigInt::pow(10, frac_len));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    double to_double() const { return mpq_get_d(q_); }

    /// "5/27", or just "4" for integers.
    std::string to_fraction_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    std::string to_decimal_string(int significant = 15) const {
        std::ostringstream os;
        os.precision(significant);
        os << to_double();
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_fraction_string();
    }

private:
    mpq_t q_;
};

}  // namespace coinduel
