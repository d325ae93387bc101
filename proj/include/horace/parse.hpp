#pragma once

#include <string>
#include <vector>

#include "horace/limits.hpp"

namespace horace {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial expression over the variables x, y, t with integer
// coefficients: sums/differences of terms, '^' powers, optional '*'.
UPoly parse_upoly(const std::string& text);

// Ideal micro-syntax: "(g1, g2, ...)" optionally raised to a power,
// which expands to all products of that many generators.
std::vector<UPoly> parse_ideal(const std::string& text);

// Pick working coordinates: the first generator that is linear of the form
// a*x + y + c*t (unit y-coefficient) becomes the second coordinate, making
// such generators monomial; otherwise the plain coordinates are used.
Coord detect_coord(const std::vector<UPoly>& gens);

// Engine input with auto-detected coordinates and a window sized from the
// generator degrees and the first truncation order.
EngineInput make_engine_input(const std::vector<UPoly>& gens,
                              const std::vector<int>& ps,
                              u64 prime = kDefaultPrime);

}  // namespace horace
