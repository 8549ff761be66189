#pragma once

#include <span>
#include <string>
#include <vector>

namespace radscale {

enum class Direction { HigherIsMoreRadical, LowerIsMoreRadical };

std::string_view toString(Direction d) noexcept;
// Accepts "higher"/"lower" and the HIGHER_IS_MORE_RADICAL spellings.
Direction parseDirection(std::string_view name);

struct CriterionSpec {
  std::string name;
  Direction direction = Direction::HigherIsMoreRadical;
};

struct ParetoPoint {
  std::string label;
  std::vector<double> values;
};

// Checks value counts, finiteness and unique criterion names; throws SchemaMismatch.
void checkSchema(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria);

// b is at least as radical as a on every criterion and strictly more on one.
bool dominates(const ParetoPoint& b, const ParetoPoint& a, std::span<const CriterionSpec> criteria);

// Indices (ascending) of the points no other point dominates. Tied points
// are all kept. Throws EmptyInput on no points.
std::vector<std::size_t> paretoFrontier(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria);

// Frontier labels, sorted.
std::vector<std::string> paretoFrontierLabels(std::span<const ParetoPoint> points,
                                              std::span<const CriterionSpec> criteria);

}  // namespace radscale
