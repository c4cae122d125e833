#pragma once

#include "angle_persist/engine.hpp"
#include "angle_persist/oracle.hpp"

#include <string>

namespace angp {

// Machine formats: rationals are {num, den} integer pairs; floats appear
// only in z coordinates and in the SVG.
std::string configuration_json(const std::vector<Configuration>& cfgs);
std::string configuration_csv(const std::vector<Configuration>& cfgs);

// One log-polar scatter of all configurations: angle = a (turns),
// radius offset = b - a (turns), marker area ~ multiplicity.
std::string configuration_svg(const std::vector<Configuration>& cfgs);

std::string betti_json(const std::vector<NovikovInvariants>& invs, const FieldDesc& f);
std::string poly_json(const std::vector<Configuration>& cfgs);
std::string modules_json(const std::vector<ModuleRefinement>& refs);
std::string oracle_json(const std::vector<OracleReport>& reps);

// Round-trip helper: support multiset of one configuration from its json.
std::map<std::pair<Rational, Rational>, long> support_from_json(const std::string& text, long r);

}  // namespace angp
