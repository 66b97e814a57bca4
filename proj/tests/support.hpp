#pragma once

// Shared helpers for the test binaries: deterministic random instances and
// the witness-substitution check used wherever a solver answer needs
// independent confirmation.

#include "eadm/core.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

// Integer entries in [-5, 5].
inline eadm::Option random_option(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-5, 5);
  std::vector<eadm::Rational> values(n);
  for (auto& v : values) {
    v = entry(rng);
  }
  return eadm::Option(std::move(values));
}

// Between 1 and max_size draws; duplicates collapse, so the set may be
// smaller than the draw count.
inline eadm::OptionSet random_option_set(std::mt19937_64& rng, std::size_t n,
                                         std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> count(1, max_size);
  const std::size_t draws = count(rng);
  std::vector<eadm::Option> members;
  members.reserve(draws);
  for (std::size_t i = 0; i < draws; ++i) {
    members.push_back(random_option(rng, n));
  }
  return eadm::OptionSet(std::move(members));
}

// Keep/reject sides must be value-disjoint; redraw the reject side on a
// clash. With entries in [-5,5] the clash probability is tiny, so the
// retry bound is generous.
inline eadm::AssessmentPair random_pair(std::mt19937_64& rng, std::size_t n,
                                        std::size_t max_side) {
  eadm::OptionSet keep = random_option_set(rng, n, max_side);
  for (int attempt = 0; attempt < 256; ++attempt) {
    eadm::OptionSet reject = random_option_set(rng, n, max_side);
    bool clash = false;
    for (const auto& w : reject) {
      clash = clash || keep.contains(w);
    }
    if (!clash) {
      return eadm::AssessmentPair{std::move(keep), std::move(reject)};
    }
  }
  throw std::logic_error("random_pair: could not draw disjoint sides");
}

inline eadm::Assessment random_assessment(std::mt19937_64& rng, std::size_t n,
                                          std::size_t max_pairs, std::size_t max_side) {
  std::uniform_int_distribution<std::size_t> count(0, max_pairs);
  const std::size_t pairs_wanted = count(rng);
  std::vector<eadm::AssessmentPair> pairs;
  pairs.reserve(pairs_wanted);
  for (std::size_t j = 0; j < pairs_wanted; ++j) {
    pairs.push_back(random_pair(rng, n, max_side));
  }
  return eadm::Assessment(std::move(pairs));
}

// Substitution check: p certifies u against the queried set iff p is
// compatible with the assessment and no competitor beats u under p.
inline bool witness_supports(const eadm::MassFunction& p, const eadm::Option& u,
                             const eadm::OptionSet& a, const eadm::Assessment& assessment) {
  if (!eadm::credal_member(p, assessment)) {
    return false;
  }
  const eadm::Rational score = eadm::expectation(p, u);
  for (const auto& other : a) {
    if (eadm::expectation(p, other) > score) {
      return false;
    }
  }
  return true;
}

}  // namespace testutil
