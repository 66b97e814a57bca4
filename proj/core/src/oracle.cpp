#include "eadm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace eadm {

namespace {

void check_grid(const SimplexGrid& grid) {
  if (grid.n == 0) throw std::invalid_argument("grid needs at least one outcome");
  if (grid.resolution == 0) throw std::invalid_argument("grid resolution must be positive");
}

// Enumerates the numerator vectors c with sum(c) == resolution.
bool visit_compositions(std::vector<unsigned>& counts, std::size_t k, unsigned remaining,
                        const SimplexGrid& grid,
                        const std::function<bool(const MassFunction&)>& visit) {
  if (k + 1 == counts.size()) {
    counts[k] = remaining;
    std::vector<Rational> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      Rational p(counts[i], grid.resolution);
      p.canonicalize();
      probs[i] = std::move(p);
    }
    return visit(MassFunction(std::move(probs)));
  }
  for (unsigned c = 0; c <= remaining; ++c) {
    counts[k] = c;
    if (!visit_compositions(counts, k + 1, remaining - c, grid, visit)) return false;
  }
  return true;
}

// Appends chosen members in A's order, without duplicates.
void collect(const OptionSet& a, const OptionSet& chosen, std::vector<bool>& hit) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!hit[i] && chosen.contains(a[i])) hit[i] = true;
  }
}

std::vector<Option> hits_in_order(const OptionSet& a, const std::vector<bool>& hit) {
  std::vector<Option> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (hit[i]) out.push_back(a[i]);
  }
  return out;
}

}  // namespace

std::uint64_t grid_point_count(const SimplexGrid& grid) {
  check_grid(grid);
  // C(resolution + n - 1, n - 1) built up factor by factor.
  const std::uint64_t top = grid.resolution + grid.n - 1;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i < grid.n; ++i) {
    acc = acc * (top - i + 1) / i;  // product of i consecutive integers divides by i!
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

void for_each_grid_point(const SimplexGrid& grid,
                         const std::function<bool(const MassFunction&)>& visit) {
  check_grid(grid);
  std::vector<unsigned> counts(grid.n, 0);
  visit_compositions(counts, 0, grid.resolution, grid, visit);
}

std::vector<MassFunction> grid_points(const SimplexGrid& grid) {
  std::vector<MassFunction> out;
  out.reserve(grid_point_count(grid));
  for_each_grid_point(grid, [&](const MassFunction& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Option> sampled_extension(const OptionSet& a, const Assessment& assessment,
                                      const SimplexGrid& grid) {
  if (grid.n != a.dimension()) {
    throw DimensionMismatch("grid outcome count does not match the option set");
  }
  std::vector<bool> hit(a.size(), false);
  std::size_t found = 0;
  for_each_grid_point(grid, [&](const MassFunction& p) {
    if (!credal_member(p, assessment)) return true;
    collect(a, choice_by_mass(p, a), hit);
    found = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
    return found < a.size();  // stop once every member is confirmed
  });
  return hits_in_order(a, hit);
}

std::vector<Option> sampled_extension_random(const OptionSet& a, const Assessment& assessment,
                                             std::size_t samples, std::mt19937_64& rng) {
  const std::size_t n = a.dimension();
  std::exponential_distribution<double> exponential(1.0);
  std::vector<bool> hit(a.size(), false);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> raw(n);
    Rational total(0);
    for (std::size_t k = 0; k < n; ++k) {
      double draw = exponential(rng);
      while (draw <= 0.0) draw = exponential(rng);
      raw[k] = Rational(draw);  // exact binary-to-rational conversion
      total += raw[k];
    }
    for (auto& x : raw) x /= total;
    const MassFunction p(std::move(raw));
    if (!credal_member(p, assessment)) continue;
    collect(a, choice_by_mass(p, a), hit);
    if (std::count(hit.begin(), hit.end(), true) == static_cast<long>(a.size())) break;
  }
  return hits_in_order(a, hit);
}

}  // namespace eadm
