#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "localg/regions.hpp"
#include "localg/sing_sets.hpp"
#include "localg/terms.hpp"

namespace localg {

/// One neighbourhood U_x together with the smooth component on it.
struct Chart {
    OpenBox box;
    PolyTerm term;

    friend bool operator==(const Chart&, const Chart&) = default;
};

/// Intensional chart assignment for families that cannot be listed, e.g. one
/// chart per rational point. Implementations must be pure functions of the
/// point and their construction parameters.
class ChartRule {
public:
    virtual ~ChartRule() = default;

    /// Chart assigned to x, or nullopt if the rule does not cover x.
    /// Regularity of x is checked by the caller.
    virtual std::optional<Chart> chart_at(std::span<const Rational> x) const = 0;
    /// Minimum grade over every chart the rule can produce.
    virtual SmoothGrade grade() const = 0;
    /// Named-constructor encoding, e.g. {"sum": [f, g]}.
    virtual nlohmann::json encode() const = 0;
};

/// A Sigma-local function: a family of charts indexed by the regular points
/// X \ Sigma, given either as a finite ordered chart list (a point gets the
/// first chart whose box contains it) or by a generating rule.
class LocalFun {
public:
    LocalFun() = default;
    LocalFun(SingSet sigma, std::size_t dim, ValueKind kind, std::vector<Chart> charts);
    LocalFun(SingSet sigma, std::size_t dim, ValueKind kind, std::shared_ptr<const ChartRule> rule);

    const SingSet& sigma() const noexcept { return sigma_; }
    std::size_t dim() const noexcept { return dim_; }
    ValueKind kind() const noexcept { return kind_; }

    bool is_finite() const noexcept { return std::holds_alternative<std::vector<Chart>>(body_); }
    /// Chart list of a finite family (empty for generated families).
    std::span<const Chart> charts() const;
    /// Rule of a generated family, nullptr for finite ones.
    const std::shared_ptr<const ChartRule>& rule() const;

    /// Chart assigned to a regular point. Throws SingularPoint or
    /// UncoveredPoint.
    Chart chart_at(std::span<const Rational> x) const;
    /// Chart lookup without the regularity check.
    std::optional<Chart> find_chart(std::span<const Rational> x) const;
    /// Position of the assigned chart in a finite family.
    std::optional<std::size_t> chart_index(std::span<const Rational> x) const;

    /// Value of the assigned component at its own anchor point x.
    Value eval(std::span<const Rational> x) const;
    /// Minimum grade over all charts (or the rule's declared grade).
    SmoothGrade grade() const;

    /// Same charts re-indexed over another singularity set, unchecked.
    LocalFun with_sigma(SingSet sigma) const;

    /// Structural equality: identical chart lists, or identical encodings of
    /// generating rules.
    friend bool operator==(const LocalFun& a, const LocalFun& b);

private:
    SingSet sigma_;
    std::size_t dim_ = 0;
    ValueKind kind_ = ValueKind::scalar;
    std::variant<std::vector<Chart>, std::shared_ptr<const ChartRule>> body_;
};

/// The embedding of a global function: one chart on the whole space.
LocalFun lc_embed(const PolyTerm& g, const SingSet& sigma);

/// The generating term when f is structurally a single whole-space chart.
std::optional<PolyTerm> is_global(const LocalFun& f);

LocalFun operator+(const LocalFun& f, const LocalFun& g);
LocalFun operator-(const LocalFun& f, const LocalFun& g);
/// Chartwise product on U_x n V_x; order-sensitive for matrix values.
LocalFun operator*(const LocalFun& f, const LocalFun& g);
LocalFun operator-(const LocalFun& f);

/// D^p applied to every chart term.
LocalFun derivative(const LocalFun& f, const MultiIndex& p);

/// Re-indexes f over a larger singularity set. Throws DomainError unless
/// f.sigma() is certainly contained in sigma2.
LocalFun restrict(const LocalFun& f, const SingSet& sigma2);

struct CompatReport {
    bool holds = true;
    std::size_t pairs_checked = 0;
    std::size_t pairs_triggered = 0;
    std::vector<std::pair<Point, Point>> violations;
};

/// Weak compatibility: for witness pairs with x in U_y and y in U_x the two
/// chart terms must coincide (polynomials agreeing on a non-empty open set
/// are syntactically equal).
CompatReport check_compat(const LocalFun& f, std::span<const Point> witnesses);
/// Strong compatibility: triggered by any non-empty overlap U_x n U_y.
CompatReport check_strong_compat(const LocalFun& f, std::span<const Point> witnesses);

/// A regular point y != x inside the chart box assigned to x (so that U_x and
/// U_y overlap), chosen as the coordinatewise simplest rational above x.
Point overlap_witness(const LocalFun& f, const Point& x);

/// The set Z of an ideal J_Z: an open box or a finite list of points.
class Zone {
public:
    Zone(OpenBox box) : v_(std::move(box)) {}                 // NOLINT(google-explicit-constructor)
    Zone(std::vector<Point> points) : v_(std::move(points)) {} // NOLINT(google-explicit-constructor)

    bool is_box() const noexcept { return std::holds_alternative<OpenBox>(v_); }
    const OpenBox& box() const { return std::get<OpenBox>(v_); }
    const std::vector<Point>& points() const { return std::get<std::vector<Point>>(v_); }

    bool contains(std::span<const Rational> x) const;
    /// Whether Z \ Sigma is witnessed non-empty.
    bool has_regular_point(const SingSet& sigma) const;

private:
    std::variant<OpenBox, std::vector<Point>> v_;
};

/// Membership in the ideal of families whose components vanish at their own
/// anchors throughout Z \ Sigma, decided at the witnesses (which must lie in
/// Z \ Sigma). For finite families over a box Z, every chart meeting Z is also
/// probed at deg+1 regular points it is assigned to; any non-zero value
/// refutes membership.
bool in_ideal(const LocalFun& f, const Zone& z, std::span<const Point> witnesses);

} // namespace localg
