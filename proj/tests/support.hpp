#pragma once

#include <string>
#include <vector>

#include "fermat/fermat.hpp"
#include "fermat/poly_text.hpp"

namespace fermat::test {

inline QPoly P(const std::string& text) { return parse_qpoly(text, xyz_ring()); }

inline Ideal ideal_of(const std::vector<std::string>& gens) {
  std::vector<QPoly> polys;
  for (const auto& g : gens) polys.push_back(P(g));
  return Ideal(xyz_ring(), polys);
}

inline std::vector<CycloNumber> point(const CycloFieldPtr& field, const std::vector<std::string>& coords) {
  std::vector<CycloNumber> out;
  for (const auto& c : coords) out.push_back(parse_cyclo(c, field));
  return out;
}

}  // namespace fermat::test
