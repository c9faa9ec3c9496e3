#pragma once

#include <cstdint>
#include <utility>

#include "cadlag/paths.hpp"
#include "cadlag/stieltjes.hpp"

namespace cadlag {

/// Integrator separating a path with many up-crossings from the zero path.
/// The construction places alternating-sign density windows on the crossing
/// segments and always satisfies the three certificate identities:
/// the integral is at least b - a, the variation is exactly 2 and the sup
/// norm is exactly 1 / (N - 1).
struct UpcrossingWitness {
  IntegratorPath integrator;
  double a = 0.0;
  double b = 0.0;
  int crossings = 0;     ///< N used by the construction
  double integral = 0.0; ///< integral of x dA
  double variation = 0.0;
  double sup = 0.0;
};

/// Requires N^{a,b}(x) >= 2. Window lengths are half the gap to the next
/// required crossing time, intersected with the constancy segment, so the
/// below-a / above-b requirements hold exactly on the closed windows.
UpcrossingWitness lemma_upcrossing_witness(const CadlagStep& x, double a,
                                           double b);

/// Integrator refuting a proposed uniform bound: a narrow positive density
/// window of mass 1/sqrt(a) on a constancy segment where |x| attains a, so
/// that |integral x dA| = sqrt(a) while the variation is 1/sqrt(a). Returns
/// the integrator and the attained integral magnitude.
std::pair<IntegratorPath, double> unboundedness_refuter(const CadlagStep& x,
                                                        double level);

/// Unit spike 1_{[T/2 - T/n, T/2)}: vanishes in the S sense with
/// self-cancelling jumps, but stays at J1 distance 1 from zero. n >= 3.
CadlagStep figure1_spikes(int n, double horizon);

/// Single drifting jump 1_{[T/n, T]}: converges to 1_{[0, T]} after the
/// tilde embedding but not in plain J1. n >= 1.
CadlagStep figure2_jumps(int n, double horizon);

/// Alternating low/high path with `teeth` up-crossings of any band inside
/// (low, high); 2 * teeth segments.
CadlagStep sawtooth_path(int teeth, double low, double high, double horizon);

/// Deterministic random step path: sorted uniform breakpoints, independent
/// uniform values in [-scale, scale]. Only the raw mt19937_64 stream is
/// used, so paths are identical across platforms for a given seed.
CadlagStep random_step_path(std::uint64_t seed, int segments, double value_scale,
                            double horizon);

}  // namespace cadlag
