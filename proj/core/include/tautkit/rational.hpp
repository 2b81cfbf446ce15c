#ifndef TAUTKIT_RATIONAL_HPP
#define TAUTKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautkit {

using Integer = mpz_class;

/// Exact rational scalar.  Always stored in lowest terms with a positive
/// denominator; equality is value equality.  Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on junk.
    static Rational parse(std::string_view s);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
    mpq_class q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

}  // namespace tautkit

#endif
