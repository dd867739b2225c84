#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "localg/local_fun.hpp"
#include "localg/report.hpp"
#include "localg/sing_sets.hpp"

namespace localg {

/// k regular points of X \ sigma in the whole space (sampled from the box
/// proxy (-8, 8)^n), deterministic for a fixed seed.
std::vector<Point> witness_points(const SingSet& sigma, std::size_t dim, std::size_t k, std::uint64_t seed);

/// f ~ g in the direct limit over S: both are re-indexed over the join of
/// their singularity sets and compared there, structurally when the
/// restrictions coincide and otherwise through the chart terms assigned at
/// every witness that is regular for the join. Throws DomainError when a
/// singularity set is not a member of S.
bool approx_equiv(const LocalFun& f, const LocalFun& g, const SFamily& s, std::span<const Point> witnesses);

/// An element of the direct-limit algebra: a family of singularity sets and
/// one representative over a member.
struct EquivClass {
    SFamily family;
    LocalFun rep;
};

/// {"family": ..., "rep": ...}
nlohmann::json encode(const EquivClass& a);
EquivClass decode_class(const nlohmann::json& j);

EquivClass class_of(const LocalFun& f, const SFamily& s);

EquivClass class_add(const EquivClass& a, const EquivClass& b);
EquivClass class_mul(const EquivClass& a, const EquivClass& b);
EquivClass class_neg(const EquivClass& a);
EquivClass class_sub(const EquivClass& a, const EquivClass& b);

bool class_equal(const EquivClass& a, const EquivClass& b, std::span<const Point> witnesses);

/// The global term t with a ~ lc(t), if one is certified: the representative
/// is structurally a single whole-space chart, or every witness is assigned a
/// chart carrying the same term.
std::optional<PolyTerm> global_term(const EquivClass& a, std::span<const Point> witnesses);
bool class_in_U(const EquivClass& a, std::span<const Point> witnesses);

/// Membership in the ideal over Z. Throws DomainError unless Z has a regular
/// point for every member of the family.
bool class_in_I(const EquivClass& a, const Zone& z, std::span<const Point> witnesses);

/// Minimum grade over the charts of the representative.
SmoothGrade class_grade(const EquivClass& a);
bool in_A_l(const EquivClass& a, const SmoothGrade& l);
bool in_U_l(const EquivClass& a, const SmoothGrade& l, std::span<const Point> witnesses);
bool in_I_l(const EquivClass& a, const SmoothGrade& l, const Zone& z, std::span<const Point> witnesses);

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t cases = 0; ///< 0 selects the suite default
    std::size_t witnesses = 20;
    unsigned probe_depth = 8;
};

/// Unital algebra laws, the homomorphism from global functions, and
/// commutativity exactly for the commutative value algebra.
SuiteReport algebra_axioms_suite(const SuiteConfig& cfg);
/// The ideal over Z = (0, 1) meets the global functions only in zero.
SuiteReport off_diagonality_suite(const SuiteConfig& cfg);
/// Identity and composition laws of restriction.
SuiteReport restriction_suite(const SuiteConfig& cfg);
/// Reflexivity, symmetry and transitivity of ~ over the standard family, and
/// the embedding of global functions commuting with passage to classes.
SuiteReport equivalence_suite(const SuiteConfig& cfg);

} // namespace localg
