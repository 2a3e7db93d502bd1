#pragma once

#include <string>

#include "rinorm/gx.hpp"
#include "rinorm/norm_spec.hpp"
#include "rinorm/step_function.hpp"
#include "rinorm/witness.hpp"

namespace rinorm {

// JSON interchange for the public payload types.  Values cross the boundary
// as doubles; extreme long-double magnitudes saturate on the way out.
// Readers throw ConfigInvalid on malformed or out-of-contract payloads.

std::string to_json(const StepFunction& u);
StepFunction step_from_json(const std::string& text);

std::string to_json(const NormSpec& spec);
NormSpec spec_from_json(const std::string& text);

std::string to_json(const Partition& partition);
Partition partition_from_json(const std::string& text);

std::string to_json(const HWitness& witness);
HWitness witness_from_json(const std::string& text);

}  // namespace rinorm
