#include "cadlag/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace cadlag::oracles {

int upcrossings_bruteforce(const std::vector<double>& values, double a,
                           double b) {
  const int m = static_cast<int>(values.size());
  if (m > 20) throw std::invalid_argument("brute force limited to 20 segments");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int picked = 0;
    bool valid = true;
    for (int i = 0; i < m && valid; ++i) {
      if (!(mask & (1u << i))) continue;
      valid = picked % 2 == 0 ? values[i] < a : values[i] > b;
      ++picked;
    }
    if (valid && picked % 2 == 0) best = std::max(best, picked / 2);
  }
  return best;
}

namespace {

int oscillation_chains(const std::vector<double>& values, double eta,
                       int start) {
  int best = 0;
  const int m = static_cast<int>(values.size());
  for (int p = start; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (std::abs(values[q] - values[p]) > eta)
        best = std::max(best, 1 + oscillation_chains(values, eta, q));
  return best;
}

}  // namespace

int oscillations_bruteforce(const std::vector<double>& values, double eta) {
  return oscillation_chains(values, eta, 0);
}

double total_variation_bruteforce(const CadlagStep& v) {
  std::vector<double> times;
  for (std::size_t i = 0; i < v.breakpoints().size(); ++i) {
    times.push_back(v.breakpoints()[i]);
    double end = i + 1 < v.breakpoints().size() ? v.breakpoints()[i + 1]
                                                : v.horizon();
    if (end > v.breakpoints()[i]) times.push_back(0.5 * (v.breakpoints()[i] + end));
  }
  const int m = static_cast<int>(times.size());
  if (m > 20) throw std::invalid_argument("brute force limited to 20 times");

  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    double sum = std::abs(v.eval(0.0));
    double prev = v.eval(0.0);
    for (int i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) continue;
      double cur = v.eval(times[i]);
      sum += std::abs(cur - prev);
      prev = cur;
    }
    sum += std::abs(v.end_value() - prev);
    best = std::max(best, sum);
  }
  return best;
}

double riemann_stieltjes_sum(const PiecewiseLinear& f, const CadlagStep& v,
                             int k) {
  const double horizon = v.horizon();
  const long cells = 1L << k;
  double sum = f.eval(0.0) * v.start_value();
  double prev_t = 0.0;
  double prev_v = v.start_value();
  for (long i = 1; i <= cells; ++i) {
    double t = horizon * static_cast<double>(i) / static_cast<double>(cells);
    double vt = v.eval(std::min(t, horizon));
    sum += f.eval(prev_t) * (vt - prev_v);
    prev_t = t;
    prev_v = vt;
  }
  return sum;
}

double j1_grid_search(const CadlagStep& x, const CadlagStep& y,
                      int grid_points) {
  // Enumerate monotone lattice time changes lambda with lambda(0) = 0 and
  // lambda(T) = T on a uniform grid, evaluating max(time shift, value sup)
  // exactly on the induced alignment. Exponential in grid_points.
  if (grid_points < 2 || grid_points > 10)
    throw std::invalid_argument("grid search supports 2..10 grid points");
  const double horizon = x.horizon();
  std::vector<double> grid;
  for (int i = 0; i <= grid_points; ++i)
    grid.push_back(horizon * i / grid_points);

  double best = std::numeric_limits<double>::infinity();
  // images[i] = index of grid point lambda maps grid[i] to.
  std::vector<int> images(grid.size());
  images.front() = 0;
  images.back() = grid_points;

  std::function<void(std::size_t)> enumerate = [&](std::size_t pos) {
    if (pos + 1 == grid.size()) {
      double cost = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i)
        cost = std::max(cost, std::abs(grid[images[i]] - grid[i]));
      // Exact sup |x(lambda(t)) - y(t)| per lattice cell: candidate times are
      // the cell ends, y's breakpoints, the preimages of x's breakpoints, and
      // the midpoints in between, which covers every co-occurring value pair.
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double t0 = grid[i], t1 = grid[i + 1];
        double l0 = grid[images[i]], l1 = grid[images[i + 1]];
        double slope = (l1 - l0) / (t1 - t0);
        std::vector<double> cand{t0, t1};
        for (double r : y.breakpoints())
          if (r > t0 && r < t1) cand.push_back(r);
        for (double s : x.breakpoints())
          if (s > l0 && s < l1) cand.push_back(t0 + (s - l0) / slope);
        std::sort(cand.begin(), cand.end());
        std::size_t base = cand.size();
        for (std::size_t c = 0; c + 1 < base; ++c)
          cand.push_back(0.5 * (cand[c] + cand[c + 1]));
        for (double t : cand) {
          double lt = std::clamp(l0 + (t - t0) * slope, 0.0, horizon);
          cost = std::max(cost,
                          std::abs(x.eval(lt) - y.eval(std::clamp(t, 0.0, horizon))));
        }
      }
      best = std::min(best, cost);
      return;
    }
    for (int img = images[pos - 1] + 1; img <= grid_points; ++img) {
      if (static_cast<int>(grid.size() - 1 - pos) > grid_points - img) continue;
      images[pos] = img;
      enumerate(pos + 1);
    }
  };
  enumerate(1);
  return best;
}

}  // namespace cadlag::oracles
