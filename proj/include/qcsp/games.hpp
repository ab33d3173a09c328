#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcsp/powers.hpp"
#include "qcsp/structure.hpp"

namespace qcsp {

/// Who may send a message before answering.
enum class Channel { none, alice, bob };

std::string to_string(Channel c);
/// Parses "none", "alice" or "bob".
Channel channel_from_string(const std::string &name);

// Strategies are total tables. Alice's entries are indexed by symbol, then by
// the position of the question tuple in the (sorted) relation of X.

/// No communication: a_R(x̄) and b(x).
struct NoChannelStrategy {
  std::vector<std::vector<Tuple>> answers;
  VertexMap bob;
};

/// Alice sends m_R(x̄) in [k]; Bob answers b(x, m).
struct AliceChannelStrategy {
  std::size_t k = 1;
  std::vector<std::vector<Tuple>> answers;
  std::vector<std::vector<std::size_t>> messages;
  /// bob[x * k + m]
  std::vector<Vertex> bob;

  [[nodiscard]] Vertex reply(Vertex x, std::size_t m) const { return bob[x * k + m]; }
};

/// Bob sends m(x) in [k]; Alice answers a_R(x̄, m).
struct BobChannelStrategy {
  std::size_t k = 1;
  VertexMap bob;
  std::vector<std::size_t> messages;
  /// answers[symbol][tuple_index * k + m]
  std::vector<std::vector<Tuple>> answers;

  [[nodiscard]] const Tuple &answer(std::size_t symbol, std::size_t index, std::size_t m) const {
    return answers[symbol][index * k + m];
  }
};

using Strategy = std::variant<NoChannelStrategy, AliceChannelStrategy, BobChannelStrategy>;

Channel channel_of(const Strategy &s);
std::size_t message_count(const Strategy &s);

enum class FailureReason { plausibility, consistency };

std::string to_string(FailureReason r);

/// A referee question the strategy loses on.
struct Counterexample {
  std::size_t symbol = 0;
  Tuple tuple;
  Vertex vertex = 0;
  FailureReason reason = FailureReason::plausibility;
  /// What Alice and Bob answered on this question.
  Tuple answer;
  Vertex reply = 0;
};

struct Verdict {
  bool perfect = true;
  std::optional<Counterexample> counterexample;
};

/// Plays every referee question (R, x̄ in R^X, x in X) in symbol, tuple and
/// vertex order. Plausibility (Alice's answer lies in R^Y) is checked before
/// consistency (y_i equals Bob's reply wherever x_i = x). Throws
/// SignatureMismatch if the tables do not fit X and Y.
Verdict verify_perfect(const RelationalStructure &x, const RelationalStructure &y,
                       const Strategy &s);

/// Truthful strategy from a homomorphism X -> Y.
NoChannelStrategy strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                    const RelationalStructure &y);

/// From h: X -> Alice power of Y: Alice reports the projection at the least
/// coordinate j landing in R^Y and sends j; Bob replies with coordinate j of
/// h(x). Throws std::invalid_argument if some tuple has no such coordinate.
AliceChannelStrategy alice_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                             const RelationalStructure &y, std::size_t k);

/// h(x) = (b(x, 0), ..., b(x, k-1)) as an AlicePowerView id. Throws
/// std::invalid_argument if the strategy is not perfect.
VertexMap hom_from_alice_strategy(const AliceChannelStrategy &s, const RelationalStructure &x,
                                  const RelationalStructure &y);

/// From h: X -> Bob power of Y with h(x) = (s, y): Bob replies y and sends s;
/// Alice answers with the least tuple of R^Y agreeing with h on the positions
/// whose image has slot s. Throws std::invalid_argument if h is not a
/// homomorphism.
BobChannelStrategy bob_strategy_from_hom(const VertexMap &h, const RelationalStructure &x,
                                         const RelationalStructure &y, std::size_t k);

/// h(x) = (m(x), b(x)) as a BobPowerView id. Throws std::invalid_argument if
/// the strategy is not perfect.
VertexMap hom_from_bob_strategy(const BobChannelStrategy &s, const RelationalStructure &x,
                                const RelationalStructure &y);

inline constexpr double kStrategySpaceCap = 1e7;

/// Number of strategy tables of the given variant (as a double, since it
/// overflows quickly).
double strategy_space_size(const RelationalStructure &x, const RelationalStructure &y,
                           std::size_t k, Channel channel);

/// Exhaustive search for a perfect strategy. Bob's tables are enumerated in
/// lexicographic order; for each, every Alice entry is chosen independently
/// (her entries never interact), so this decides the full product space.
/// Throws SizeCapExceeded when strategy_space_size exceeds `cap`.
std::optional<Strategy> brute_force_search(const RelationalStructure &x,
                                           const RelationalStructure &y, std::size_t k,
                                           Channel channel, double cap = kStrategySpaceCap);

}  // namespace qcsp
