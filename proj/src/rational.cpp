#include "localg/rational.hpp"

#include <cctype>
#include <ostream>

#include "localg/error.hpp"

namespace localg {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q)
{
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || (!den.empty() && (den.front() == '-' || den.front() == '+')))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational Rational::factorial(std::uint64_t n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f, 1);
}

Rational Rational::pow2(long e)
{
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p, 1);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::reciprocal() const
{
    if (is_zero())
        throw DomainError("reciprocal of zero");
    return Rational(v_.get_den(), v_.get_num());
}

mpz_class Rational::floor() const
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return f;
}

Rational Rational::pow(unsigned e) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(n, d); // already canonical: powers of coprime integers stay coprime
    return r;
}

std::string Rational::fraction_str() const
{
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str() const
{
    return is_integer() ? v_.get_num().get_str() : fraction_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi (hi absent = +inf).
Rational simplest_nonnegative(const Rational& lo, const std::optional<Rational>& hi)
{
    const mpz_class n = lo.floor();
    const Rational next(n + 1, 1);
    if (!hi || next < *hi)
        return next;
    // No integer strictly inside: lo and hi share the integer part n.
    const Rational base(n, 1);
    const Rational inv_lo = (*hi - base).reciprocal();
    std::optional<Rational> inv_hi;
    if (lo != base)
        inv_hi = (lo - base).reciprocal();
    return base + simplest_nonnegative(inv_lo, inv_hi).reciprocal();
}

} // namespace

Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
    if (lo && hi && !(*lo < *hi))
        throw DomainError("empty interval in simplest_between");
    const bool below_zero = !lo || lo->sign() < 0;
    const bool above_zero = !hi || hi->sign() > 0;
    if (below_zero && above_zero)
        return Rational(0);
    if (!below_zero)
        return simplest_nonnegative(*lo, hi);
    // Entirely non-positive: mirror.
    std::optional<Rational> mirrored_hi;
    if (lo)
        mirrored_hi = -*lo;
    return -simplest_nonnegative(-*hi, mirrored_hi);
}

} // namespace localg
