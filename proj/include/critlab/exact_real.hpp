#pragma once

// Exact arithmetic in Q[sqrt 2]: values a + b*sqrt(2) with rational a, b.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace critlab {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;
using decimal50 = boost::multiprecision::cpp_dec_float_50;

class exact_real {
public:
    exact_real() = default;
    exact_real(long long a) : a_(a) {}
    exact_real(rational a, rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static exact_real sqrt2() { return {rational(0), rational(1)}; }

    static exact_real fraction(long long num, long long den)
    {
        if (den == 0)
            throw std::domain_error("exact_real: zero denominator");
        return {rational(num, den)};
    }

    /// Parses "p", "p/q", or a plain decimal such as "46.75".
    static exact_real parse(std::string_view s)
    {
        std::string t(s);
        try {
            if (auto slash = t.find('/'); slash != std::string::npos)
                return {rational(big_int(t.substr(0, slash)), big_int(t.substr(slash + 1)))};
            if (auto dot = t.find('.'); dot != std::string::npos) {
                std::string digits = t.substr(0, dot) + t.substr(dot + 1);
                big_int den = boost::multiprecision::pow(big_int(10), static_cast<unsigned>(t.size() - dot - 1));
                return {rational(big_int(digits), den)};
            }
            return {rational(big_int(t))};
        } catch (const std::exception&) {
            throw std::invalid_argument("exact_real: cannot parse '" + t + "'");
        }
    }

    const rational& rational_part() const { return a_; }
    const rational& sqrt2_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const
    {
        const int sa = a_.sign(), sb = b_.sign();
        if (sb == 0)
            return sa;
        if (sa == 0)
            return sb;
        if (sa == sb)
            return sa;
        // Opposite signs: compare a^2 with 2 b^2; equality is impossible for b != 0.
        const rational lhs = a_ * a_, rhs = 2 * b_ * b_;
        return lhs > rhs ? sa : sb;
    }

    exact_real operator-() const { return {-a_, -b_}; }
    exact_real& operator+=(const exact_real& o)
    {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    exact_real& operator-=(const exact_real& o)
    {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    exact_real& operator*=(const exact_real& o)
    {
        rational a = a_ * o.a_ + 2 * b_ * o.b_;
        rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    exact_real& operator/=(const exact_real& o)
    {
        const rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
        if (norm == 0)
            throw std::domain_error("exact_real: division by zero");
        *this *= exact_real(o.a_ / norm, -o.b_ / norm);
        return *this;
    }

    friend exact_real operator+(exact_real x, const exact_real& y) { return x += y; }
    friend exact_real operator-(exact_real x, const exact_real& y) { return x -= y; }
    friend exact_real operator*(exact_real x, const exact_real& y) { return x *= y; }
    friend exact_real operator/(exact_real x, const exact_real& y) { return x /= y; }

    friend bool operator==(const exact_real& x, const exact_real& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const exact_real& x, const exact_real& y)
    {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    decimal50 approx() const
    {
        using boost::multiprecision::numerator;
        using boost::multiprecision::denominator;
        decimal50 a = decimal50(numerator(a_)) / decimal50(denominator(a_));
        decimal50 b = decimal50(numerator(b_)) / decimal50(denominator(b_));
        return a + b * boost::multiprecision::sqrt(decimal50(2));
    }

    double to_double() const { return approx().convert_to<double>(); }

    /// Greatest integer <= value, decided exactly.
    big_int floor() const
    {
        big_int guess = boost::multiprecision::floor(approx()).convert_to<big_int>();
        while (exact_real(rational(guess)) > *this)
            --guess;
        while (exact_real(rational(guess + 1)) <= *this)
            ++guess;
        return guess;
    }

    big_int ceil() const
    {
        big_int f = floor();
        return exact_real(rational(f)) == *this ? f : f + 1;
    }

    /// Decimal rendering rounded half-to-even at `digits` places. Exact: the
    /// rounding decision compares the true value, not an approximation.
    std::string to_decimal(unsigned digits) const
    {
        const big_int scale = boost::multiprecision::pow(big_int(10), digits);
        const exact_real scaled = *this * exact_real(rational(scale));
        big_int f = scaled.floor();
        const exact_real frac = scaled - exact_real(rational(f));
        const int cmp = frac.sign() == 0 ? -1 : (frac - exact_real::fraction(1, 2)).sign();
        if (cmp > 0 || (cmp == 0 && (f % 2 != 0)))
            f += 1;
        const bool neg = f < 0;
        if (neg)
            f = -f;
        std::string s = f.str();
        if (digits > 0) {
            if (s.size() <= digits)
                s.insert(0, digits - s.size() + 1, '0');
            s.insert(s.size() - digits, ".");
        }
        return neg ? "-" + s : s;
    }

    /// Symbolic form "a + b*sqrt(2)" with reduced fractions.
    std::string str() const
    {
        std::ostringstream os;
        if (b_ == 0) {
            os << a_;
        } else if (a_ == 0) {
            os << b_ << "*sqrt(2)";
        } else {
            os << a_ << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? rational(-b_) : b_) << "*sqrt(2)";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const exact_real& x) { return os << x.str(); }

private:
    rational a_{0};
    rational b_{0};
};

/// floor(num / den) for exact reals, den != 0; rounds toward minus infinity.
inline big_int floor_div(const exact_real& num, const exact_real& den) { return (num / den).floor(); }

inline exact_real abs(const exact_real& x) { return x.sign() < 0 ? -x : x; }

} // namespace critlab
