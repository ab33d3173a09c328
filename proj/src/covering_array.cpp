#include "qcsp/covering_array.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qcsp {
namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

class Builder {
 public:
  Builder(std::size_t n, std::size_t r, std::size_t q, std::mt19937_64 &rng)
      : n_(n), r_(r), q_(q), rng_(rng) {
    for (const auto &c : combinations(n, r)) subsets_.insert(subsets_.end(), c.begin(), c.end());
    subset_count_ = subsets_.size() / r;
    tuples_ = 1;
    for (std::size_t i = 0; i < r; ++i) tuples_ *= q;
    count_.assign(subset_count_ * tuples_, 0);
    uncovered_ = count_.size();
  }

  bool run(std::size_t budget, std::size_t candidates) {
    std::uniform_int_distribution<std::size_t> value(0, q_ - 1);
    std::vector<std::size_t> best;
    std::vector<std::size_t> candidate(n_);
    while (uncovered_ > 0) {
      if (columns_.size() >= budget) return false;
      std::size_t best_gain = 0;
      for (std::size_t c = 0; c <= candidates; ++c) {
        for (auto &v : candidate) v = value(rng_);
        if (c == candidates) {
          // Repair column: force the first uncovered requirement.
          const auto req = first_uncovered();
          const std::size_t *rows = subset(req / tuples_);
          for (std::size_t i = r_, t = req % tuples_; i-- > 0; t /= q_) candidate[rows[i]] = t % q_;
        }
        const std::size_t gain = score(candidate);
        if (gain > best_gain) {
          best_gain = gain;
          best = candidate;
        }
      }
      add(best);
    }
    prune();
    return true;
  }

  // Repeatedly deletes the column covering the fewest requirements alone and
  // repairs coverage by a weighted tabu search over column rewrites, keeping
  // the last complete array. `steps` bounds the total number of moves.
  void shrink(std::size_t steps) {
    if (columns_.size() <= 1 || steps == 0) return;
    std::vector<std::vector<std::size_t>> by_row(n_);
    for (std::size_t s = 0; s < subset_count_; ++s) {
      for (std::size_t i = 0; i < r_; ++i) by_row[subset(s)[i]].push_back(s);
    }
    row_subsets_ = std::move(by_row);
    stamp_.assign(subset_count_, 0);
    weight_.assign(count_.size(), 1);
    override_.assign(n_, kNone);
    std::size_t step = 0;
    while (step < steps && columns_.size() > 1) {
      const auto complete_columns = columns_;
      const auto complete_count = count_;
      remove_column(least_useful_column());
      tabu_until_.assign(columns_.size() * n_, 0);
      while (uncovered_ > 0 && step < steps) move(++step);
      if (uncovered_ > 0) {
        columns_ = complete_columns;
        count_ = complete_count;
        uncovered_ = 0;
        return;
      }
    }
  }

  [[nodiscard]] const std::vector<std::vector<std::size_t>> &columns() const { return columns_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  [[nodiscard]] const std::size_t *subset(std::size_t s) const { return &subsets_[s * r_]; }

  std::size_t requirement(std::size_t s, const std::vector<std::size_t> &column) const {
    std::size_t t = 0;
    const std::size_t *rows = subset(s);
    for (std::size_t i = 0; i < r_; ++i) t = t * q_ + column[rows[i]];
    return s * tuples_ + t;
  }

  // Requirement of subset s once the rows in override_ take their new values.
  std::size_t rewritten(std::size_t s, const std::vector<std::size_t> &column) const {
    std::size_t t = 0;
    const std::size_t *rows = subset(s);
    for (std::size_t i = 0; i < r_; ++i) {
      const std::size_t o = override_[rows[i]];
      t = t * q_ + (o == kNone ? column[rows[i]] : o);
    }
    return s * tuples_ + t;
  }

  std::size_t score(const std::vector<std::size_t> &column) const {
    std::size_t gain = 0;
    for (std::size_t s = 0; s < subset_count_; ++s) gain += count_[requirement(s, column)] == 0;
    return gain;
  }

  std::size_t first_uncovered() const {
    return static_cast<std::size_t>(std::find(count_.begin(), count_.end(), 0U) - count_.begin());
  }

  void add(const std::vector<std::size_t> &column) {
    for (std::size_t s = 0; s < subset_count_; ++s) {
      if (count_[requirement(s, column)]++ == 0) --uncovered_;
    }
    columns_.push_back(column);
  }

  // Drop columns whose every requirement is also covered elsewhere.
  void prune() {
    for (std::size_t c = columns_.size(); c-- > 0;) {
      bool redundant = true;
      for (std::size_t s = 0; s < subset_count_ && redundant; ++s) {
        redundant = count_[requirement(s, columns_[c])] >= 2;
      }
      if (redundant) remove_column(c);
    }
  }

  std::size_t least_useful_column() const {
    std::size_t best = 0;
    std::size_t best_unique = kNone;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      std::size_t unique = 0;
      for (std::size_t s = 0; s < subset_count_; ++s) unique += count_[requirement(s, columns_[c])] == 1;
      if (unique < best_unique) {
        best_unique = unique;
        best = c;
      }
    }
    return best;
  }

  void remove_column(std::size_t c) {
    for (std::size_t s = 0; s < subset_count_; ++s) {
      if (--count_[requirement(s, columns_[c])] == 0) ++uncovered_;
    }
    columns_.erase(columns_.begin() + static_cast<std::ptrdiff_t>(c));
  }

  // Subsets meeting the rows selected by `mask` out of `rows`, each once.
  const std::vector<std::size_t> &affected(const std::size_t *rows, std::size_t mask) {
    auto &out = affected_[mask];
    if (affected_ready_[mask]) return out;
    affected_ready_[mask] = true;
    ++epoch_;
    out.clear();
    for (std::size_t i = 0; i < r_; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t s : row_subsets_[rows[i]]) {
        if (stamp_[s] != epoch_) {
          stamp_[s] = epoch_;
          out.push_back(s);
        }
      }
    }
    return out;
  }

  struct Gain {
    long weighted = 0;
    long net = 0;
  };

  Gain rewrite_gain(std::size_t c, const std::size_t *rows, const std::size_t *values,
                    std::size_t mask) {
    const auto &column = columns_[c];
    for (std::size_t i = 0; i < r_; ++i) {
      if (mask >> i & 1U) override_[rows[i]] = values[i];
    }
    Gain g;
    for (std::size_t s : affected(rows, mask)) {
      const std::size_t before = requirement(s, column);
      const std::size_t after = rewritten(s, column);
      if (count_[after] == 0) {
        g.weighted += static_cast<long>(weight_[after]);
        ++g.net;
      }
      if (count_[before] == 1) {
        g.weighted -= static_cast<long>(weight_[before]);
        --g.net;
      }
    }
    for (std::size_t i = 0; i < r_; ++i) override_[rows[i]] = kNone;
    return g;
  }

  // One move: pick a random uncovered requirement and rewrite the column that
  // covers it with the best weighted gain, skipping recently changed cells
  // unless the rewrite completes the array.
  void move(std::size_t step) {
    std::uniform_int_distribution<std::size_t> start(0, count_.size() - 1);
    std::size_t req = start(rng_);
    while (count_[req] != 0) req = (req + 1) % count_.size();
    const std::size_t *rows = subset(req / tuples_);
    std::size_t values[8];
    for (std::size_t i = r_, t = req % tuples_; i-- > 0; t /= q_) values[i] = t % q_;
    std::fill(affected_ready_.begin(), affected_ready_.end(), false);

    long best = std::numeric_limits<long>::min();
    std::size_t best_column = kNone;
    std::size_t best_mask = 0;
    std::size_t ties = 0;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      std::size_t mask = 0;
      bool tabu = false;
      for (std::size_t i = 0; i < r_; ++i) {
        if (columns_[c][rows[i]] != values[i]) {
          mask |= std::size_t{1} << i;
          tabu = tabu || tabu_until_[c * n_ + rows[i]] > step;
        }
      }
      const Gain g = rewrite_gain(c, rows, values, mask);
      if (tabu && g.net != static_cast<long>(uncovered_)) continue;
      if (g.weighted > best) {
        best = g.weighted;
        best_column = c;
        best_mask = mask;
        ties = 1;
      } else if (g.weighted == best &&
                 std::uniform_int_distribution<std::size_t>(0, ties++)(rng_) == 0) {
        best_column = c;
        best_mask = mask;
      }
    }
    if (best_column == kNone) {
      best_column = std::uniform_int_distribution<std::size_t>(0, columns_.size() - 1)(rng_);
      best_mask = 0;
      for (std::size_t i = 0; i < r_; ++i) {
        if (columns_[best_column][rows[i]] != values[i]) best_mask |= std::size_t{1} << i;
      }
    }
    if (best <= 0) {
      for (std::size_t i = 0; i < count_.size(); ++i) weight_[i] += count_[i] == 0;
    }
    std::uniform_int_distribution<std::size_t> tenure(1, 1 + 2 * r_);
    auto &column = columns_[best_column];
    const auto &touched = affected(rows, best_mask);
    for (std::size_t s : touched) {
      if (--count_[requirement(s, column)] == 0) ++uncovered_;
    }
    for (std::size_t i = 0; i < r_; ++i) {
      if (best_mask >> i & 1U) {
        column[rows[i]] = values[i];
        tabu_until_[best_column * n_ + rows[i]] = step + tenure(rng_);
      }
    }
    for (std::size_t s : touched) {
      if (count_[requirement(s, column)]++ == 0) --uncovered_;
    }
  }

  std::size_t n_, r_, q_;
  std::mt19937_64 &rng_;
  std::vector<std::size_t> subsets_;
  std::size_t subset_count_ = 0;
  std::size_t tuples_ = 0;
  std::vector<std::uint32_t> count_;
  std::size_t uncovered_ = 0;
  std::vector<std::vector<std::size_t>> columns_;

  std::vector<std::vector<std::size_t>> row_subsets_;
  std::vector<std::size_t> stamp_;
  std::size_t epoch_ = 0;
  std::array<std::vector<std::size_t>, 256> affected_;
  std::array<bool, 256> affected_ready_{};
  std::vector<std::size_t> override_;
  std::vector<std::size_t> tabu_until_;
  std::vector<std::uint64_t> weight_;
};

}  // namespace

std::vector<Vertex> CoveringArray::row(std::size_t r) const {
  std::vector<Vertex> out(cols);
  for (std::size_t c = 0; c < cols; ++c) out[c] = at(r, c);
  return out;
}

std::size_t covering_requirements(std::size_t n, std::size_t r, std::size_t alphabet_size) {
  constexpr std::size_t max = std::numeric_limits<std::size_t>::max();
  if (r > n) return 0;
  // C(n, r) computed incrementally; each partial product is itself a binomial.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    if (c > max / (n - r + i)) return max;
    c = c * (n - r + i) / i;
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (alphabet_size != 0 && c > max / alphabet_size) return max;
    c *= alphabet_size;
  }
  return c;
}

CoveringArray covering_array(std::size_t n, std::size_t r, std::vector<Vertex> alphabet,
                             std::mt19937_64 &rng, const CoveringArrayOptions &options) {
  if (r < 1 || n < r) throw std::invalid_argument("covering array needs n >= r >= 1");
  if (alphabet.empty()) throw std::invalid_argument("covering array needs a nonempty alphabet");
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const std::size_t q = alphabet.size();
  const std::size_t requirements = covering_requirements(n, r, q);
  if (requirements > std::size_t{50'000'000}) {
    throw SizeCapExceeded("covering array requirement count too large");
  }

  std::size_t budget = options.column_budget;
  if (budget == 0) {
    // Greedy set cover stays within (1 + ln N) times the optimum, which is at
    // least |X|^r columns; start a little above that.
    double tuples = std::pow(static_cast<double>(q), static_cast<double>(r));
    budget = static_cast<std::size_t>(
        std::ceil(tuples * (1.0 + std::log(static_cast<double>(requirements)))));
  }
  for (std::size_t attempt = 0; attempt <= options.max_retries; ++attempt, budget *= 2) {
    Builder builder(n, r, q, rng);
    if (!builder.run(budget, options.candidates_per_column)) continue;
    if (r <= 8) builder.shrink(options.improvement_steps);
    CoveringArray out;
    out.rows = n;
    out.cols = builder.columns().size();
    out.strength = r;
    out.alphabet = alphabet;
    out.entries.resize(n * out.cols);
    for (std::size_t c = 0; c < out.cols; ++c) {
      for (std::size_t row = 0; row < n; ++row) out.entries[row * out.cols + c] = builder.columns()[c][row];
    }
    if (!verify_covering_array(out)) {
      throw std::logic_error("constructed covering array failed verification");
    }
    return out;
  }
  throw std::runtime_error("covering array column budget exhausted after retries");
}

CoveringArray covering_array(std::size_t n, std::size_t r, std::vector<Vertex> alphabet,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return covering_array(n, r, std::move(alphabet), rng);
}

bool verify_covering_array(const CoveringArray &array) {
  const std::size_t r = array.strength;
  const std::size_t q = array.alphabet.size();
  if (r == 0 || array.rows < r || q == 0) return false;
  if (array.entries.size() != array.rows * array.cols) return false;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < r; ++i) tuples *= q;
  std::vector<bool> seen(tuples);
  for (const auto &rows : combinations(array.rows, r)) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t distinct = 0;
    for (std::size_t c = 0; c < array.cols; ++c) {
      std::size_t t = 0;
      for (std::size_t row : rows) t = t * q + array.entries[row * array.cols + c];
      if (!seen[t]) {
        seen[t] = true;
        ++distinct;
      }
    }
    if (distinct != tuples) return false;
  }
  return true;
}

std::string to_csv(const CoveringArray &array) {
  std::ostringstream out;
  for (std::size_t row = 0; row < array.rows; ++row) {
    for (std::size_t c = 0; c < array.cols; ++c) {
      if (c) out << ',';
      out << array.at(row, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qcsp
