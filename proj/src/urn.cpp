#include "urns/urn.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace urns {

State::State(std::vector<Count> counts) : counts_(std::move(counts)) {}
State::State(std::initializer_list<Count> counts) : counts_(counts) {}

Count State::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

std::string State::to_string(char separator) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out << separator;
    out << counts_[i];
  }
  return out.str();
}

std::size_t StateHash::operator()(const State& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Count c : s.counts()) {
    h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

TransitionMatrix::TransitionMatrix(std::vector<std::vector<Count>> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw SpecError("transition matrix needs at least 2 colors");
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw SpecError("transition matrix must be square");
  }
}

TransitionMatrix TransitionMatrix::from_white_black(Count a, Count b, Count c, Count d) {
  return TransitionMatrix({{d, c}, {b, a}});
}

AbsorbingSet::AbsorbingSet(std::vector<std::optional<Count>> caps)
    : caps_(std::move(caps)) {
  if (std::none_of(caps_.begin(), caps_.end(), [](const auto& c) { return c.has_value(); })) {
    throw SpecError("absorbing set needs at least one wall");
  }
  for (const auto& c : caps_) {
    if (c && *c < 0) throw SpecError("absorbing caps must be >= 0");
  }
}

bool AbsorbingSet::contains(const State& s) const {
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (caps_[i] && s[i] <= *caps_[i]) return true;
  }
  return false;
}

std::string to_string(WeightMode mode) {
  return mode == WeightMode::Standard ? "standard" : "cannibal_shifted";
}

std::string to_string(TypeLabel label) {
  switch (label) {
    case TypeLabel::TypeA: return "TypeA";
    case TypeLabel::TypeB: return "TypeB";
    case TypeLabel::Other: break;
  }
  return "Other";
}

UrnSpec::UrnSpec(TransitionMatrix matrix, AbsorbingSet absorbing, WeightMode weight_mode)
    : matrix_(std::move(matrix)), absorbing_(std::move(absorbing)), weight_mode_(weight_mode) {
  if (matrix_.colors() < 2) throw SpecError("transition matrix needs at least 2 colors");
  if (absorbing_.caps().size() != matrix_.colors()) {
    throw SpecError("absorbing caps must have one entry per color");
  }
  if (weight_mode_ == WeightMode::CannibalShifted) {
    // The shifted black weight m-1 is only meaningful for m >= 2, so every
    // state with m <= 1 has to be absorbing.
    const auto& black_cap = absorbing_.caps()[kBlack];
    if (matrix_.colors() != 2 || !black_cap || *black_cap < 1) {
      throw SpecError("cannibal_shifted weights need 2 colors and a black wall at m <= 1");
    }
  }
}

void check_state(const UrnSpec& spec, const State& s) {
  if (s.colors() != spec.colors()) {
    throw SpecError("state has " + std::to_string(s.colors()) + " colors, model has " +
                    std::to_string(spec.colors()));
  }
  for (Count c : s.counts()) {
    if (c < 0) throw NegativeCountError("negative ball count in state (" + s.to_string() + ")");
  }
}

bool is_absorbing(const UrnSpec& spec, const State& s) { return spec.absorbing().contains(s); }

std::vector<Rational> draw_weights(const UrnSpec& spec, const State& s) {
  std::vector<Count> effective = s.counts();
  if (spec.weight_mode() == WeightMode::CannibalShifted) effective[kBlack] -= 1;
  Count total = 0;
  for (Count c : effective) total += std::max<Count>(c, 0);
  if (total <= 0) {
    throw DeadEndError("no ball can be drawn at state (" + s.to_string() + ")");
  }
  std::vector<Rational> weights;
  weights.reserve(effective.size());
  for (Count c : effective) {
    weights.emplace_back(Rational(std::max<Count>(c, 0), total));
    weights.back().canonicalize();
  }
  return weights;
}

std::vector<Outcome> step_outcomes(const UrnSpec& spec, const State& s) {
  check_state(spec, s);
  if (is_absorbing(spec, s)) {
    throw AbsorbingStateError("state (" + s.to_string() + ") is absorbing");
  }
  const auto weights = draw_weights(spec, s);
  std::vector<Outcome> outcomes;
  for (std::size_t color = 0; color < weights.size(); ++color) {
    if (weights[color] == 0) continue;
    std::vector<Count> next = s.counts();
    const auto row = spec.matrix().row(color);
    for (std::size_t j = 0; j < next.size(); ++j) {
      next[j] += row[j];
      if (next[j] < 0) {
        throw NegativeCountError("drawing color " + std::to_string(color) + " at (" +
                                 s.to_string() + ") leaves a negative count");
      }
    }
    outcomes.push_back({State(std::move(next)), weights[color], color});
  }
  return outcomes;
}

Rational path_weight(const UrnSpec& spec, std::span<const State> path) {
  if (path.empty()) throw IllegalStepError("empty path");
  Rational weight = 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (is_absorbing(spec, path[i])) {
      throw IllegalStepError("path continues past absorbing state (" + path[i].to_string() + ")");
    }
    Rational step = 0;
    for (const auto& o : step_outcomes(spec, path[i])) {
      if (o.next == path[i + 1]) step += o.weight;
    }
    if (step == 0) {
      throw IllegalStepError("no draw leads from (" + path[i].to_string() + ") to (" +
                             path[i + 1].to_string() + ")");
    }
    weight *= step;
  }
  return weight;
}

namespace {

bool nonzero(std::span<const Count> row) {
  return std::any_of(row.begin(), row.end(), [](Count x) { return x != 0; });
}

TypeLabel classify_two_color(const UrnSpec& spec) {
  const auto& m = spec.matrix();
  const Count a = m.row(kWhite)[kWhite];
  const Count b = m.row(kWhite)[kBlack];
  const Count c = m.row(kBlack)[kWhite];
  const Count d = m.row(kBlack)[kBlack];
  const auto& caps = spec.absorbing().caps();
  const bool vertical = caps[kBlack].has_value();
  const bool horizontal = caps[kWhite].has_value();
  const bool white_row_ok = a <= 0 && b <= 0 && (a != 0 || b != 0);
  if (white_row_ok && d < 0 && c > 0 && vertical && !horizontal) return TypeLabel::TypeA;
  if (white_row_ok && c <= 0 && d <= 0 && (c != 0 || d != 0) && vertical && horizontal) {
    return TypeLabel::TypeB;
  }
  return TypeLabel::Other;
}

TypeLabel classify_many_colors(const UrnSpec& spec) {
  const auto& m = spec.matrix();
  const auto& caps = spec.absorbing().caps();
  const std::size_t r = m.colors();
  std::vector<std::size_t> walled;
  for (std::size_t i = 0; i < r; ++i) {
    if (caps[i]) walled.push_back(i);
  }
  if (walled.size() == 1) {
    const std::size_t w = walled.front();
    const auto wrow = m.row(w);
    bool ok = wrow[w] < 0;
    bool feeds = false;
    for (std::size_t j = 0; j < r; ++j) feeds = feeds || (j != w && wrow[j] > 0);
    ok = ok && feeds;
    for (std::size_t i = 0; i < r && ok; ++i) {
      if (i == w) continue;
      const auto row = m.row(i);
      ok = nonzero(row) && row[i] < 0 && row[w] <= 0;
    }
    if (ok) return TypeLabel::TypeA;
  }
  if (walled.size() == r) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      const auto row = m.row(i);
      ok = nonzero(row) && std::all_of(row.begin(), row.end(), [](Count x) { return x <= 0; });
    }
    if (ok) return TypeLabel::TypeB;
  }
  return TypeLabel::Other;
}

}  // namespace

TypeLabel validate(const UrnSpec& spec) {
  return spec.colors() == 2 ? classify_two_color(spec) : classify_many_colors(spec);
}

std::optional<std::vector<Count>> find_potential(const TransitionMatrix& matrix) {
  constexpr Count kMaxEntry = 10;
  constexpr std::size_t kMaxColors = 6;
  const std::size_t r = matrix.colors();
  if (r > kMaxColors) return std::nullopt;
  std::vector<Count> alpha(r, 1);
  while (true) {
    bool decreasing = true;
    for (std::size_t i = 0; i < r && decreasing; ++i) {
      const auto row = matrix.row(i);
      Count dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += alpha[j] * row[j];
      decreasing = dot < 0;
    }
    if (decreasing) return alpha;
    std::size_t pos = 0;
    while (pos < r && alpha[pos] == kMaxEntry) alpha[pos++] = 1;
    if (pos == r) return std::nullopt;
    ++alpha[pos];
  }
}

Count potential_value(std::span<const Count> alpha, const State& s) {
  Count value = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) value += alpha[i] * s[i];
  return value;
}

std::size_t observed_color(const UrnSpec& spec) { return spec.colors() == 2 ? kWhite : 0; }

}  // namespace urns
