#include "localg/atlas.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "localg/error.hpp"
#include "localg/io.hpp"

namespace localg {

namespace {

constexpr std::uint64_t sieve_limit = std::uint64_t{1} << 20;
constexpr std::uint64_t max_height = std::uint64_t{1} << 32;

const std::vector<std::uint64_t>& totient_prefix()
{
    static const std::vector<std::uint64_t> prefix = [] {
        std::vector<std::uint32_t> phi(sieve_limit + 1);
        std::iota(phi.begin(), phi.end(), 0U);
        for (std::uint64_t i = 2; i <= sieve_limit; ++i)
            if (phi[i] == i)
                for (std::uint64_t j = i; j <= sieve_limit; j += i)
                    phi[j] -= phi[j] / static_cast<std::uint32_t>(i);
        std::vector<std::uint64_t> sums(sieve_limit + 1, 0);
        for (std::uint64_t i = 1; i <= sieve_limit; ++i)
            sums[i] = sums[i - 1] + phi[i];
        return sums;
    }();
    return prefix;
}

// Phi(m) = m(m+1)/2 - sum_{d>=2} Phi(m/d), grouped by equal quotients.
std::uint64_t totient_sum_memo(std::uint64_t m, std::unordered_map<std::uint64_t, std::uint64_t>& memo)
{
    if (m <= sieve_limit)
        return totient_prefix()[m];
    if (auto it = memo.find(m); it != memo.end())
        return it->second;
    const unsigned __int128 tri = static_cast<unsigned __int128>(m) * (m + 1) / 2;
    unsigned __int128 acc = tri;
    for (std::uint64_t d = 2; d <= m;) {
        const std::uint64_t v = m / d;
        const std::uint64_t last = m / v;
        acc -= static_cast<unsigned __int128>(last - d + 1) * totient_sum_memo(v, memo);
        d = last + 1;
    }
    const auto r = static_cast<std::uint64_t>(acc);
    memo.emplace(m, r);
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t q)
{
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            ps.push_back(p);
            while (q % p == 0)
                q /= p;
        }
    }
    if (q > 1)
        ps.push_back(q);
    return ps;
}

// #{1 <= i <= m : gcd(i, q) = 1} by inclusion-exclusion over prime factors.
std::uint64_t coprime_count(std::uint64_t m, const std::vector<std::uint64_t>& primes)
{
    std::int64_t total = 0;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t{1} << i)) {
                d *= primes[i];
                ++bits;
            }
        const auto term = static_cast<std::int64_t>(m / d);
        total += (bits % 2 == 0) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

// Number of unit-interval rationals with denominator below q.
std::uint64_t count_below_height(std::uint64_t q)
{
    return totient_sum(q - 1) - 1;
}

std::uint64_t to_u64(const mpz_class& z)
{
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
        throw DomainError("integer out of 64-bit range");
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, z.get_mpz_t());
    return r;
}

mpz_class to_mpz(std::uint64_t v)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return z;
}

struct UnitFraction {
    std::uint64_t p;
    std::uint64_t q;
};

UnitFraction unit_at(std::uint64_t n)
{
    std::uint64_t hi = 2;
    while (count_below_height(hi + 1) <= n)
        hi *= 2;
    std::uint64_t lo = 2;
    // Smallest q with count_below_height(q + 1) > n.
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (count_below_height(mid + 1) > n)
            hi = mid;
        else
            lo = mid + 1;
    }
    const std::uint64_t q = lo;
    const std::uint64_t rank = n - count_below_height(q);
    const auto primes = prime_factors(q);
    std::uint64_t plo = 1, phi = q - 1;
    while (plo < phi) {
        const std::uint64_t mid = plo + (phi - plo) / 2;
        if (coprime_count(mid, primes) >= rank + 1)
            phi = mid;
        else
            plo = mid + 1;
    }
    return {plo, q};
}

} // namespace

std::uint64_t totient_sum(std::uint64_t m)
{
    std::unordered_map<std::uint64_t, std::uint64_t> memo;
    return totient_sum_memo(m, memo);
}

RationalEnumeration::RationalEnumeration(OpenBox domain) : domain_(std::move(domain))
{
    if (domain_.dim() != 1)
        throw StructuralError("rational enumeration needs a 1-D domain");
}

Rational RationalEnumeration::from_unit(const Rational& t) const
{
    const Interval& iv = domain_[0];
    if (iv.lo && iv.hi)
        return *iv.lo + (*iv.hi - *iv.lo) * t;
    const Rational one(1);
    if (iv.lo)
        return *iv.lo + t / (one - t);
    if (iv.hi)
        return *iv.hi - t / (one - t);
    const Rational u = Rational(2) * t - one;
    return u / (one - u.abs());
}

Rational RationalEnumeration::to_unit(const Rational& x) const
{
    const Interval& iv = domain_[0];
    const Rational one(1);
    if (iv.lo && iv.hi)
        return (x - *iv.lo) / (*iv.hi - *iv.lo);
    if (iv.lo) {
        const Rational s = x - *iv.lo;
        return s / (one + s);
    }
    if (iv.hi) {
        const Rational s = *iv.hi - x;
        return s / (one + s);
    }
    const Rational u = x / (one + x.abs());
    return (u + one) / Rational(2);
}

Rational RationalEnumeration::at(std::uint64_t n) const
{
    const auto [p, q] = unit_at(n);
    return from_unit(Rational(to_mpz(p), to_mpz(q)));
}

std::uint64_t RationalEnumeration::height(std::uint64_t n) const
{
    return unit_at(n).q;
}

Rational RationalEnumeration::earlier_distance(std::uint64_t n) const
{
    if (n == 0)
        throw DomainError("the first anchor has no predecessors");
    return earlier_distance(at(n));
}

Rational RationalEnumeration::earlier_distance(const Rational& x) const
{
    // Nearest earlier anchors: the Farey neighbours a/b, c/d of p/q of order
    // q - 1, with pb - qa = 1 and b + d = q.
    const Rational t = to_unit(x);
    const mpz_class p = t.numerator(), q = t.denominator();
    if (q == 2)
        throw DomainError("the first anchor has no predecessors");
    mpz_class b;
    mpz_invert(b.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    const mpz_class a = (p * b - 1) / q;
    const mpz_class d = q - b, c = p - a;
    std::optional<Rational> best;
    const auto consider = [&](const mpz_class& num, const mpz_class& den) {
        if (num == 0 || num == den)
            return;
        const Rational dist = (x - from_unit(Rational(num, den))).abs();
        if (!best || dist < *best)
            best = dist;
    };
    consider(a, b);
    consider(c, d);
    return *best;
}

std::uint64_t RationalEnumeration::index_of(const Rational& x) const
{
    if (!domain_.contains(std::span<const Rational>(&x, 1)))
        throw DomainError("rational " + x.str() + " lies outside the enumerated domain");
    const Rational t = to_unit(x);
    const std::uint64_t q = to_u64(t.denominator());
    if (q >= max_height)
        throw DomainError("rational " + x.str() + " is too deep in the enumeration");
    const std::uint64_t p = to_u64(t.numerator());
    return count_below_height(q) + coprime_count(p - 1, prime_factors(q));
}

Value ConstantSequence::at(std::uint64_t n) const
{
    switch (kind) {
    case Kind::zero:
        return Value::zero(unit.kind());
    case Kind::index:
        return unit.scaled(Rational(to_mpz(n), 1));
    case Kind::factorial:
        return unit.scaled(Rational::factorial(n));
    case Kind::enumerated:
        if (values.empty())
            throw DomainError("enumerated constant sequence without values");
        return values[n % values.size()];
    }
    return unit;
}

ValueKind ConstantSequence::value_kind() const
{
    if (kind == Kind::enumerated && !values.empty())
        return values.front().kind();
    return unit.kind();
}

bool ConstantSequence::injective() const
{
    switch (kind) {
    case Kind::zero:
        return false;
    case Kind::index:
        return !unit.is_zero();
    case Kind::factorial:
        return false; // 0! = 1!
    case Kind::enumerated:
        return false;
    }
    return false;
}

CountableAtlas::CountableAtlas(AtlasParams params) : params_(std::move(params)), enum_(params_.domain)
{
    if (params_.epsilon.sign() <= 0)
        throw DomainError("atlas epsilon must be positive");
    if (params_.constants.kind == ConstantSequence::Kind::enumerated) {
        for (const auto& v : params_.constants.values)
            if (v.kind() != params_.constants.value_kind())
                throw StructuralError("enumerated constants of mixed value kinds");
    }
}

Rational CountableAtlas::radius(std::uint64_t n) const
{
    return radius(n, anchor(n));
}

Rational CountableAtlas::radius(std::uint64_t n, const Rational& x) const
{
    const Rational geometric = params_.epsilon / (Rational(to_mpz(n + 1), 1) * Rational(to_mpz(n + 2), 1));
    if (n == 0)
        return geometric;
    const Rational half = enum_.earlier_distance(x) / Rational(2);
    return half < geometric ? half : geometric;
}

Chart CountableAtlas::chart(std::uint64_t n) const
{
    return chart(n, anchor(n));
}

Chart CountableAtlas::chart(std::uint64_t n, const Rational& x) const
{
    const Rational r = radius(n, x);
    OpenBox box = OpenBox::interval(x - r, x + r);
    const ValueKind kind = params_.constants.value_kind();
    if (params_.vanish_upto && n <= *params_.vanish_upto)
        return {std::move(box), PolyTerm(1, kind)};
    const Value c = params_.constants.at(n);
    if (params_.profile == AtlasProfile::constant)
        return {std::move(box), PolyTerm::constant(1, c)};
    PolyTerm t(1, kind);
    t.add_monomial(MultiIndex::unit(1, 0), c);
    t.add_monomial(MultiIndex(1), c.scaled(-x));
    return {std::move(box), std::move(t)};
}

std::optional<Chart> CountableAtlas::chart_at(std::span<const Rational> x) const
{
    if (x.size() != 1)
        throw StructuralError("atlas charts are 1-D");
    if (!enum_.domain().contains(x))
        return std::nullopt;
    return chart(enum_.index_of(x[0]), x[0]);
}

nlohmann::json CountableAtlas::encode() const
{
    return nlohmann::json{{"countableAtlas", localg::encode(params_)}};
}

LocalFun make_atlas(AtlasParams params)
{
    const ValueKind kind = params.constants.value_kind();
    return LocalFun(SingSet::corational(), 1, kind, std::make_shared<CountableAtlas>(std::move(params)));
}

const CountableAtlas* as_atlas(const LocalFun& f)
{
    return dynamic_cast<const CountableAtlas*>(f.rule().get());
}

namespace {

std::string_view constants_kind_name(ConstantSequence::Kind k)
{
    switch (k) {
    case ConstantSequence::Kind::zero:
        return "zero";
    case ConstantSequence::Kind::index:
        return "index";
    case ConstantSequence::Kind::factorial:
        return "factorial";
    case ConstantSequence::Kind::enumerated:
        return "enumerated";
    }
    return "index";
}

} // namespace

nlohmann::json encode(const ConstantSequence& c)
{
    json j{{"kind", constants_kind_name(c.kind)}};
    if (c.kind == ConstantSequence::Kind::enumerated) {
        json vals = json::array();
        for (const auto& v : c.values)
            vals.push_back(encode(v));
        j["values"] = std::move(vals);
    } else {
        j["unit"] = encode(c.unit);
    }
    return j;
}

nlohmann::json encode(const AtlasParams& p)
{
    json j{{"epsilon", encode(p.epsilon)},
           {"constants", encode(p.constants)},
           {"domain", encode(p.domain)},
           {"profile", p.profile == AtlasProfile::constant ? "constant" : "anchored"}};
    if (p.vanish_upto)
        j["vanishUpTo"] = *p.vanish_upto;
    return j;
}

ConstantSequence decode_constants(const nlohmann::json& j)
{
    try {
        ConstantSequence c;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "zero")
            c.kind = ConstantSequence::Kind::zero;
        else if (kind == "index")
            c.kind = ConstantSequence::Kind::index;
        else if (kind == "factorial")
            c.kind = ConstantSequence::Kind::factorial;
        else if (kind == "enumerated")
            c.kind = ConstantSequence::Kind::enumerated;
        else
            throw ParseError("unknown constant sequence kind '" + kind + "'");
        if (c.kind == ConstantSequence::Kind::enumerated) {
            for (const auto& v : j.at("values"))
                c.values.push_back(decode_value(v));
            if (c.values.empty())
                throw ParseError("enumerated constants need at least one value");
        } else if (j.contains("unit")) {
            c.unit = decode_value(j.at("unit"));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("constant sequence: ") + e.what());
    }
}

AtlasParams decode_atlas_params(const nlohmann::json& j)
{
    try {
        AtlasParams p;
        p.epsilon = decode_rational(j.at("epsilon"));
        if (j.contains("constants"))
            p.constants = decode_constants(j.at("constants"));
        if (j.contains("domain"))
            p.domain = decode_box(j.at("domain"));
        if (j.contains("profile")) {
            const std::string prof = j.at("profile").get<std::string>();
            if (prof == "constant")
                p.profile = AtlasProfile::constant;
            else if (prof == "anchored")
                p.profile = AtlasProfile::anchored;
            else
                throw ParseError("unknown atlas profile '" + prof + "'");
        }
        if (j.contains("vanishUpTo"))
            p.vanish_upto = j.at("vanishUpTo").get<std::uint64_t>();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("atlas parameters: ") + e.what());
    }
}

} // namespace localg
