#pragma once

#include <vector>

#include "cadlag/paths.hpp"

namespace cadlag::oracles {

/// Reference implementations used to certify the fast scans. They enumerate
/// instead of scanning greedily and must stay independent of the production
/// code paths they check. Exponential in the segment count; intended for
/// paths with at most ~10 segments.

/// Max alternating below-a / above-b chain over all increasing segment-index
/// subsets.
int upcrossings_bruteforce(const std::vector<double>& values, double a,
                           double b);

/// Max chained pair count by exhaustive search; consecutive pairs may share
/// an endpoint.
int oscillations_bruteforce(const std::vector<double>& values, double eta);

/// Supremum of |v(0)| + sum |v(t_i) - v(t_{i-1})| over all partitions drawn
/// from breakpoints and segment midpoints.
double total_variation_bruteforce(const CadlagStep& v);

/// Left-endpoint Riemann-Stieltjes sum of f dv on a uniform 2^k grid plus the
/// atom at zero; converges to the exact integral at rate O(2^-k).
double riemann_stieltjes_sum(const PiecewiseLinear& f, const CadlagStep& v,
                             int k);

/// Best J1 cost over all monotone piecewise-linear time changes with nodes on
/// a uniform grid of the given resolution; an independent upper estimate of
/// the distance.
double j1_grid_search(const CadlagStep& x, const CadlagStep& y,
                      int grid_points);

}  // namespace cadlag::oracles
