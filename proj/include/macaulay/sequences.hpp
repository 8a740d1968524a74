#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace macaulay {

/// (h_0, ..., h_s) with h_i = dim m^i / m^{i+1}.
struct HilbertFunction {
  std::vector<std::size_t> values;

  std::size_t length() const;  // sum of the h_i
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// (e_0, ..., e_s): socle dimensions along the m-adic filtration.
struct SocleType {
  std::vector<std::size_t> values;

  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  std::size_t type() const;  // sum of the e_i
  friend bool operator==(const SocleType&, const SocleType&) = default;
};

/// Space-separated values, e.g. "1 2 3 3 2 1".
std::string to_string(const HilbertFunction& h);
std::string to_string(const SocleType& e);

}  // namespace macaulay
