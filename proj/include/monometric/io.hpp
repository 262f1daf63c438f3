#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "monometric/channels.hpp"
#include "monometric/chentsov.hpp"
#include "monometric/linalg.hpp"
#include "monometric/monotone.hpp"
#include "monometric/weight.hpp"

namespace monometric::io {

using nlohmann::json;

/// %.15g, with ".0" appended when the result would read as an integer.
/// Locale independent.
std::string format_real(double value);

/// Parses a JSON document from disk; ParseError on I/O or syntax failure.
json read_json_file(const std::filesystem::path& path);

// {"breakpoints": [0, ..., 1], "values": [...]}
WeightFunction weight_from_json(const json& j);
json to_json(const WeightFunction& h);

// Nested rows of [re, im] pairs; bare numbers are read as real entries.
ComplexMatrix matrix_from_json(const json& j);
json to_json(const ComplexMatrix& m);

// {"kraus": [matrix, ...]}
KrausChannel channel_from_json(const json& j);
json to_json(const KrausChannel& channel);

// {"kind": "gamma", "gamma": G}
// {"kind": "min" | "max" | "sqrt" | "identity" | "one"}
// {"kind": "canonical", "beta": number | "auto", "h": weight}
// {"kind": "kubo_ando", "atoms": [{"s": number | "inf", "w": number}, ...]}
MonotoneFunction monotone_from_json(const json& j, const QuadratureConfig& quad = {});

// {"kind": "bridge", "gamma": G}
// {"kind": "canonical", "c0": number | "auto", "h": weight}
// {"kind": "from_f", "f": monotone}
MCFunction mc_from_json(const json& j, const QuadratureConfig& quad = {});

}  // namespace monometric::io
