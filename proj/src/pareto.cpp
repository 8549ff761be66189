#include "radscale/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "radscale/error.hpp"

namespace radscale {

namespace {

// Orientation so that larger is always more radical.
double oriented(double value, Direction d) { return d == Direction::HigherIsMoreRadical ? value : -value; }

bool dominatesUnchecked(const ParetoPoint& b, const ParetoPoint& a, std::span<const CriterionSpec> criteria) {
  bool strictly = false;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const double bv = oriented(b.values[c], criteria[c].direction);
    const double av = oriented(a.values[c], criteria[c].direction);
    if (bv < av) return false;
    if (bv > av) strictly = true;
  }
  return strictly;
}

}  // namespace

std::string_view toString(Direction d) noexcept {
  return d == Direction::HigherIsMoreRadical ? "HIGHER_IS_MORE_RADICAL" : "LOWER_IS_MORE_RADICAL";
}

Direction parseDirection(std::string_view name) {
  if (name == "HIGHER_IS_MORE_RADICAL" || name == "higher" || name == "max") return Direction::HigherIsMoreRadical;
  if (name == "LOWER_IS_MORE_RADICAL" || name == "lower" || name == "min") return Direction::LowerIsMoreRadical;
  throw Error(ErrorKind::SchemaMismatch, "unknown criterion direction '" + std::string(name) + "'");
}

void checkSchema(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria) {
  std::set<std::string> names;
  for (const auto& c : criteria) {
    if (!names.insert(c.name).second) throw Error(ErrorKind::SchemaMismatch, "duplicate criterion '" + c.name + "'");
  }
  for (const auto& p : points) {
    if (p.values.size() != criteria.size()) {
      throw Error(ErrorKind::SchemaMismatch, "point '" + p.label + "' has " + std::to_string(p.values.size()) +
                                                 " values for " + std::to_string(criteria.size()) + " criteria");
    }
    for (const double v : p.values) {
      if (!std::isfinite(v)) throw Error(ErrorKind::SchemaMismatch, "point '" + p.label + "' has a non-finite value");
    }
  }
}

bool dominates(const ParetoPoint& b, const ParetoPoint& a, std::span<const CriterionSpec> criteria) {
  const ParetoPoint pair[] = {b, a};
  checkSchema(pair, criteria);
  return dominatesUnchecked(b, a, criteria);
}

std::vector<std::size_t> paretoFrontier(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "Pareto frontier of no points");
  checkSchema(points, criteria);

  // Visit points in descending lexicographic radical order: a dominator always
  // precedes what it dominates, and by transitivity checking against the
  // frontier found so far is enough.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      const double xv = oriented(points[x].values[c], criteria[c].direction);
      const double yv = oriented(points[y].values[c], criteria[c].direction);
      if (xv != yv) return xv > yv;
    }
    return false;
  });

  std::vector<std::size_t> frontier;
  for (const auto idx : order) {
    const bool dominated = std::any_of(frontier.begin(), frontier.end(), [&](std::size_t f) {
      return dominatesUnchecked(points[f], points[idx], criteria);
    });
    if (!dominated) frontier.push_back(idx);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<std::string> paretoFrontierLabels(std::span<const ParetoPoint> points,
                                              std::span<const CriterionSpec> criteria) {
  std::vector<std::string> labels;
  for (const auto idx : paretoFrontier(points, criteria)) labels.push_back(points[idx].label);
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace radscale
