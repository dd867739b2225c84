#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "localg/atlas.hpp"
#include "localg/limits.hpp"
#include "localg/local_fun.hpp"
#include "localg/report.hpp"

namespace localg {

/// Net index; the index set is N with its natural order.
using Index = std::uint64_t;

/// Pure generating rule lambda -> w_lambda.
class NetRule {
public:
    virtual ~NetRule() = default;
    virtual LocalFun component(Index lambda) const = 0;
    /// {"name": ..., "params": ...}
    virtual nlohmann::json encode() const = 0;
};

/// A net (w_lambda) of smooth local functions over one singularity set.
class Net {
public:
    struct Constant {
        LocalFun f;
    };
    /// Listed indices take their own component, every other index the tail.
    struct Eventually {
        std::vector<std::pair<Index, LocalFun>> prefix;
        LocalFun tail;
    };
    using Body = std::variant<Constant, Eventually, std::shared_ptr<const NetRule>>;

    /// Components are checked to have infinite grade and a singularity set
    /// contained in sigma; throws DomainError otherwise.
    static Net constant(LocalFun f);
    static Net eventually(SingSet sigma, std::vector<std::pair<Index, LocalFun>> prefix, LocalFun tail);
    static Net generated(SingSet sigma, std::size_t dim, ValueKind kind, std::shared_ptr<const NetRule> rule);

    const SingSet& sigma() const noexcept { return sigma_; }
    std::size_t dim() const noexcept { return dim_; }
    ValueKind kind() const noexcept { return kind_; }
    const Body& body() const noexcept { return body_; }
    bool is_constant() const noexcept { return std::holds_alternative<Constant>(body_); }
    bool is_generated() const noexcept { return std::holds_alternative<std::shared_ptr<const NetRule>>(body_); }

    /// w_lambda re-indexed over sigma.
    LocalFun component(Index lambda) const;
    /// The same net over a larger singularity set.
    Net restricted(const SingSet& sigma2) const;

    friend bool operator==(const Net& a, const Net& b);

private:
    Net(SingSet sigma, std::size_t dim, ValueKind kind, Body body);

    SingSet sigma_;
    std::size_t dim_ = 0;
    ValueKind kind_ = ValueKind::scalar;
    Body body_;
};

// Termwise operations on nets over the same singularity set. Constant and
// eventually-constant bodies stay structural; anything else composes rules.
Net operator+(const Net& u, const Net& v);
Net operator*(const Net& u, const Net& v);
Net operator-(const Net& u);
Net operator-(const Net& u, const Net& v);
Net derivative(const Net& u, const MultiIndex& p);

/// lambda -> lc(lambda * term) over sigma.
Net scaled_net(const PolyTerm& term, const SingSet& sigma);
/// lambda -> the atlas whose charts x_0..x_lambda carry the zero term. Its
/// component at x_n vanishes from lambda = n on.
Net staircase_net(AtlasParams params);

/// Certificate for membership in the vanishing ideal: beyond threshold(x),
/// every component's chart at x has the zero term.
struct VanishCert {
    std::vector<std::pair<Point, Index>> thresholds;
    Index fallback = 0;
    unsigned probe_depth = 8;

    Index threshold(std::span<const Rational> x) const;
    friend bool operator==(const VanishCert&, const VanishCert&) = default;
};

/// Pointwise maximum of two certificates.
VanishCert cert_max(const VanishCert& a, const VanishCert& b);
/// threshold(x) = enumeration index of x, listed for the given points.
VanishCert staircase_cert(const AtlasParams& params, std::span<const Point> points, unsigned probe_depth = 8);

/// Checks the certificate at every witness: for all indices mu >= threshold
/// on constant and eventually-constant bodies, for mu in
/// [threshold, threshold + probe_depth] on generated ones. Throws DomainError
/// for a singular witness.
bool in_N(const Net& w, const VanishCert& cert, std::span<const Point> witnesses);

/// Element of the reduced-power algebra: a net modulo the vanishing ideal.
struct GenFun {
    SFamily family;
    Net net;
};

LocalFun net_component(const Net& w, Index lambda);

GenFun gen_add(const GenFun& u, const GenFun& v);
GenFun gen_mul(const GenFun& u, const GenFun& v);
GenFun gen_neg(const GenFun& u);
GenFun gen_sub(const GenFun& u, const GenFun& v);
GenFun gen_derive(const GenFun& u, const MultiIndex& p);
/// The constant net of f; throws DomainError unless f has infinite grade.
GenFun diagonal_embed(const LocalFun& f, const SFamily& family);
/// u = v in the quotient, i.e. u - v is certified in the vanishing ideal.
bool gen_equal(const GenFun& u, const GenFun& v, const VanishCert& cert, std::span<const Point> witnesses);

/// Diagonal of the countable atlas with constants `growth`, over the
/// singleton family of the co-rational set.
GenFun build_dense_singular_demo(const Rational& epsilon, const ConstantSequence& growth);

/// Polynomial growth probe: r_n = |value at points[n]| / (1+n)^degree at net
/// index 0, and the growth counts as moderate when the maximum of r_n over the
/// second half of the points is at most twice that over the first half.
struct ModeratenessProbe {
    unsigned degree = 0;
    Rational first_half_max;
    Rational second_half_max;
    bool moderate = false;
};
ModeratenessProbe moderateness_probe(const GenFun& u, std::span<const Point> points, unsigned degree);

/// Vanishing ideal: absorption from both sides, closure under sums and
/// derivatives with transformed certificates, quotient soundness, and
/// refutation of non-zero constant nets.
SuiteReport net_ideal_suite(const SuiteConfig& cfg);
/// Leibniz rule for termwise derivatives of products.
SuiteReport leibniz_suite(const SuiteConfig& cfg);

nlohmann::json encode(const Net& w);
nlohmann::json encode(const VanishCert& c);
nlohmann::json encode(const GenFun& u);
Net decode_net(const nlohmann::json& j);
VanishCert decode_cert(const nlohmann::json& j);
GenFun decode_gen_fun(const nlohmann::json& j);

} // namespace localg
