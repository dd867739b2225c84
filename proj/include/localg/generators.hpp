#pragma once

#include <cstddef>

#include "localg/local_fun.hpp"
#include "localg/random.hpp"
#include "localg/sing_sets.hpp"

namespace localg {

// Deterministic random fixtures for the property campaigns.

/// p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(Rng& rng, long max_num = 9, long max_den = 6);
Value random_value(Rng& rng, ValueKind kind);
Value random_nonzero_value(Rng& rng, ValueKind kind);
/// Up to max_monomials monomials of total degree <= max_degree; may be zero.
PolyTerm random_term(Rng& rng, std::size_t dim, ValueKind kind, unsigned max_degree = 3, std::size_t max_monomials = 3);
PolyTerm random_nonzero_term(Rng& rng, std::size_t dim, ValueKind kind, unsigned max_degree = 3,
                             std::size_t max_monomials = 3);

/// Weakly compatible finite family: up to max_boxes pairwise disjoint proper
/// boxes inside (-4, 4)^n followed by a whole-space chart.
LocalFun random_local_fun(Rng& rng, const SingSet& sigma, std::size_t dim, ValueKind kind, std::size_t max_boxes = 3);

/// A structurally different representative of the same class: re-indexed over
/// a random member of `family` above f's singularity set and, for finite
/// families, with a redundant sub-chart of the first chart prepended.
LocalFun perturbed(Rng& rng, const LocalFun& f, const SFamily& family);

/// {Empty, Finite{origin}, CoRational, Finite{origin} u CoRational}.
SFamily standard_family(std::size_t dim);

const SingSet& random_member(Rng& rng, const SFamily& family);
/// A random member containing s.
const SingSet& random_member_above(Rng& rng, const SFamily& family, const SingSet& s);

} // namespace localg
