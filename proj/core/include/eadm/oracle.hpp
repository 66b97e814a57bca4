#pragma once

#include "eadm/core.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace eadm {

// Finite grid over the probability simplex: every mass function whose
// entries are multiples of 1/resolution.
struct SimplexGrid {
  std::size_t n = 3;
  unsigned resolution = 200;
};

// Number of grid points, C(resolution + n - 1, n - 1); saturates at
// UINT64_MAX.
std::uint64_t grid_point_count(const SimplexGrid& grid);

// Visits every grid point exactly once, lexicographic in the first
// coordinate's numerator. The visitor returns false to stop early.
void for_each_grid_point(const SimplexGrid& grid,
                         const std::function<bool(const MassFunction&)>& visit);

std::vector<MassFunction> grid_points(const SimplexGrid& grid);

// Brute-force under-approximation of the admissible options: the union of
// the p-maximisers of A over all grid points p inside the credal set.
// Always a subset of the exact answer; strict constraints can exclude
// boundary-adjacent witnesses the grid would need. Returned in A's order;
// may be empty.
std::vector<Option> sampled_extension(const OptionSet& a, const Assessment& assessment,
                                      const SimplexGrid& grid);

// Same one-sided check from random simplex points (normalised exponential
// draws, exactly converted) instead of a grid; for dimensions where grids
// explode.
std::vector<Option> sampled_extension_random(const OptionSet& a, const Assessment& assessment,
                                             std::size_t samples, std::mt19937_64& rng);

}  // namespace eadm
