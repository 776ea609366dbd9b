#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "ppc/bounds.hpp"
#include "ppc/montecarlo.hpp"
#include "ppc/rational.hpp"
#include "ppc/recognize.hpp"

namespace ppc {

using Json = nlohmann::ordered_json;

/// Exact values are written as "numerator/denominator" strings.
Json to_json(const ExactProb& p);
Json to_json(const BoundReport& r);
Json to_json(const GridSummary& s);
Json to_json(const R2Report& r);
Json to_json(const Estimate& e);
Json to_json(const RecognitionOutcome& o);

/// CSV with columns name, inputs..., lhs, rhs, rhs_hi, holds, margin. Input
/// columns are the union of input names across rows, in first-seen order.
void write_csv(std::ostream& out, std::span<const BoundReport> reports);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace ppc
