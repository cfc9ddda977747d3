#pragma once

#include "modelspace/boundary.hpp"
#include "modelspace/classify.hpp"
#include "modelspace/core.hpp"
#include "modelspace/experiments.hpp"
#include "modelspace/interp.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace modelspace::io {

using nlohmann::json;

// {"zeros": [[re, im], ...], "labels": [...]}
ZeroSequence zeros_from_json(const json& j);
json to_json(const ZeroSequence& zeros);

// {"values": [[re, im], ...]}
ValueSequence values_from_json(const json& j);
json to_json(const ValueSequence& values);

json to_json(const DiagnosticsReport& report);
json to_json(const DecayVerdict& verdict);
json to_json(const InterpolantRepresentation& interpolant);
json to_json(const ExperimentResult& result);
/// Spectrum of a boundary function: {"grid_size", "offset", "modes": [[n, re, im], ...]}
json spectrum_to_json(const BoundaryFunction& f);

/// Rows "t,re,im", one per grid node.
void write_boundary_csv(std::ostream& out, const BoundaryFunction& f);
BoundaryFunction read_boundary_csv(std::istream& in, double grid_offset = 0.0);

/// Rows "experiment,label,index,value".
void write_series_csv(std::ostream& out, const ExperimentResult& result);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace modelspace::io
