#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "slopelab/formal_module.hpp"
#include "slopelab/laurent.hpp"

namespace slopelab {

/// One term a_i(x) * d^i/dx^i of a differential operator.
using OperatorTerm = std::pair<std::int64_t, Laurent<Rat>>;

/// Slopes (with multiplicity) of the module defined by sum a_i(x) d^i/dx^i
/// at x = 0, read off the Newton polygon of the points (i, val(a_i) - i).
///
/// The polygon is the lower boundary of the union of the quadrants
/// { (u, v) : u <= i, v >= val(a_i) - i }; over [0, order] it consists of a
/// horizontal run (slope 0) followed by edges of increasing positive slope,
/// each counted with its horizontal length. Throws std::invalid_argument
/// for the zero operator or a negative order.
SlopeMultiset slopes_from_operator(const std::vector<OperatorTerm>& op);

}  // namespace slopelab
