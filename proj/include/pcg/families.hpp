#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/state.hpp"

namespace pcg {

enum class Family {
  Ghz3,             // 3-qubit GHZ-class state, the minimal paradox carrier
  Phi4,             // PhiN at n=4
  Phi4Prime,        // six components, one pair support removed
  Phi4DoublePrime,  // six components, single negative sign
  PhiN,             // |0..0> - all pair supports, n >= 4
  Phi5,             // Phi2n3 at parameter 1
  Phi2n3,           // 2n+3 qubits: |0..0> - all co-singleton supports, n >= 1
  Fig1a,            // W-like three singletons; colorable controls
  Fig1b,            // colorable control on 4 qubits
  Fig1c,            // minimal un-colorable triangle control
};

struct FamilyId {
  Family family;
  std::optional<int> parameter;
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);
bool family_takes_parameter(Family family);
std::vector<std::string> family_names();

// Builds the canonical state of the family; throws PcgError when the
// parameter is missing, unexpected, or out of range.
PcgStateSpec generate(const FamilyId& id);

}  // namespace pcg
