#pragma once

#include <set>

#include "localg/error.hpp"

namespace localg {

template <class Pred>
std::vector<Point> sample_filtered(const OpenBox& b, std::size_t k, std::uint64_t seed, Pred keep)
{
    PointSampler sampler(b, k, seed);
    std::vector<Point> out;
    std::set<Point> seen;
    const std::size_t budget = 4096 + 256 * k;
    std::size_t attempts = 0;
    while (out.size() < k) {
        if (++attempts > budget)
            throw DomainError("sampler exhausted: no further admissible points in box");
        Point p = sampler.next();
        if (seen.contains(p) || !keep(p))
            continue;
        seen.insert(p);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace localg
