#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "urns/rational.hpp"

namespace urns {

using Count = std::int64_t;

// Ball counts per color. Two-color models order the colors (m black, n white).
class State {
 public:
  State() = default;
  explicit State(std::vector<Count> counts);
  State(std::initializer_list<Count> counts);

  std::size_t colors() const { return counts_.size(); }
  Count operator[](std::size_t color) const { return counts_[color]; }
  const std::vector<Count>& counts() const { return counts_; }
  Count total() const;

  std::string to_string(char separator = ',') const;

  auto operator<=>(const State&) const = default;
  bool operator==(const State&) const = default;

 private:
  std::vector<Count> counts_;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept;
};

inline constexpr std::size_t kBlack = 0;
inline constexpr std::size_t kWhite = 1;

class UrnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
struct SpecError : UrnError {
  using UrnError::UrnError;
};
struct AbsorbingStateError : UrnError {
  using UrnError::UrnError;
};
struct NegativeCountError : UrnError {
  using UrnError::UrnError;
};
// A non-absorbing state with no ball that can be drawn.
struct DeadEndError : UrnError {
  using UrnError::UrnError;
};
struct NonTerminatingError : UrnError {
  using UrnError::UrnError;
};
struct IllegalStepError : UrnError {
  using UrnError::UrnError;
};

// Row i holds the count increments applied when a ball of color i is drawn.
// Rows and columns follow State order.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::vector<std::vector<Count>> rows);

  // Builds from the textbook 2x2 form [a b; c d]: a white draw adds a white
  // and b black balls, a black draw adds c white and d black balls.
  static TransitionMatrix from_white_black(Count a, Count b, Count c, Count d);

  std::size_t colors() const { return rows_.size(); }
  std::span<const Count> row(std::size_t color) const { return rows_[color]; }
  const std::vector<std::vector<Count>>& rows() const { return rows_; }

  bool operator==(const TransitionMatrix&) const = default;

 private:
  std::vector<std::vector<Count>> rows_;
};

// A state is absorbing iff some capped color has count <= its cap.
class AbsorbingSet {
 public:
  AbsorbingSet() = default;
  explicit AbsorbingSet(std::vector<std::optional<Count>> caps);

  const std::vector<std::optional<Count>>& caps() const { return caps_; }
  bool contains(const State& s) const;

  bool operator==(const AbsorbingSet&) const = default;

 private:
  std::vector<std::optional<Count>> caps_;
};

enum class WeightMode { Standard, CannibalShifted };

enum class TypeLabel { TypeA, TypeB, Other };

std::string to_string(WeightMode mode);
std::string to_string(TypeLabel label);

class UrnSpec {
 public:
  // Throws SpecError when dimensions disagree or the weight mode does not
  // fit the model.
  UrnSpec(TransitionMatrix matrix, AbsorbingSet absorbing,
          WeightMode weight_mode = WeightMode::Standard);

  const TransitionMatrix& matrix() const { return matrix_; }
  const AbsorbingSet& absorbing() const { return absorbing_; }
  WeightMode weight_mode() const { return weight_mode_; }
  std::size_t colors() const { return matrix_.colors(); }

  bool operator==(const UrnSpec&) const = default;

 private:
  TransitionMatrix matrix_;
  AbsorbingSet absorbing_;
  WeightMode weight_mode_;
};

struct Outcome {
  State next;
  Rational weight;
  std::size_t color;  // drawn color
};

bool is_absorbing(const UrnSpec& spec, const State& s);

// Draw weight of every color at s (zero entries included).
std::vector<Rational> draw_weights(const UrnSpec& spec, const State& s);

// One entry per color with positive draw weight; weights sum to exactly 1.
std::vector<Outcome> step_outcomes(const UrnSpec& spec, const State& s);

Rational path_weight(const UrnSpec& spec, std::span<const State> path);

TypeLabel validate(const UrnSpec& spec);

// Positive integer vector alpha (entries 1..10) with alpha . row_i < 0 for
// every row, i.e. a strictly decreasing potential. Searched for up to six
// colors.
std::optional<std::vector<Count>> find_potential(const TransitionMatrix& matrix);

Count potential_value(std::span<const Count> alpha, const State& s);

// The observed coordinate: white (n) for two colors, n_1 otherwise.
std::size_t observed_color(const UrnSpec& spec);

void check_state(const UrnSpec& spec, const State& s);

}  // namespace urns
