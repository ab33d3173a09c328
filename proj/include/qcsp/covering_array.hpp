#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcsp/structure.hpp"

namespace qcsp {

/// n x m matrix over a finite alphabet in which every choice of `strength`
/// rows shows every tuple of alphabet values in some column.
struct CoveringArray {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t strength = 0;
  std::vector<Vertex> alphabet;
  /// Row-major alphabet indices.
  std::vector<std::size_t> entries;

  [[nodiscard]] Vertex at(std::size_t row, std::size_t col) const {
    return alphabet[entries[row * cols + col]];
  }
  [[nodiscard]] std::vector<Vertex> row(std::size_t r) const;
};

struct CoveringArrayOptions {
  /// Random candidate columns scored per greedy step.
  std::size_t candidates_per_column = 48;
  /// Initial column budget; 0 picks one from the requirement count. The
  /// budget doubles on every retry.
  std::size_t column_budget = 0;
  std::size_t max_retries = 6;
  /// Total tabu-search moves spent deleting columns after the greedy phase;
  /// 0 keeps the greedy array.
  std::size_t improvement_steps = 20'000;
};

/// Number of (row subset, value tuple) requirements: C(n, r) * |X|^r,
/// saturating at SIZE_MAX.
std::size_t covering_requirements(std::size_t n, std::size_t r, std::size_t alphabet_size);

/// Greedy construction from sampled random columns (plus one repair column
/// per step aimed at the first uncovered requirement), followed by removal of
/// redundant columns and a tabu search that keeps deleting a column and
/// repairing coverage while its move budget lasts. The result is exhaustively
/// verified before returning.
/// Throws std::invalid_argument unless n >= r >= 1 and the alphabet is
/// nonempty; throws std::runtime_error if every retry exhausts its budget.
CoveringArray covering_array(std::size_t n, std::size_t r, std::vector<Vertex> alphabet,
                             std::mt19937_64 &rng, const CoveringArrayOptions &options = {});
CoveringArray covering_array(std::size_t n, std::size_t r, std::vector<Vertex> alphabet,
                             std::uint64_t seed = 0);

/// Exhaustive check of every row subset of size `strength` against every
/// value tuple.
bool verify_covering_array(const CoveringArray &array);

/// Rows as comma-separated alphabet values, one line per row.
std::string to_csv(const CoveringArray &array);

}  // namespace qcsp
