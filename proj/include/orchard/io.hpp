#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "orchard/operators.hpp"
#include "orchard/points.hpp"
#include "orchard/relation.hpp"
#include "orchard/sign_function.hpp"
#include "orchard/tournament.hpp"

namespace orchard::io {

using Json = nlohmann::ordered_json;

// Sign function: {"n", "arity", "kind", "signs"} with signs in colex order.
Json to_json(const SignFunction& f);
SignFunction signfn_from_json(const Json& j);

// Partition: {"n", "labels"} with labels[0] == 0.
Json to_json(const OrchardPartition& p);
OrchardPartition partition_from_json(const Json& j);

// Complex: {"n", "homology_dims"}. Boundary matrices are not written.
Json to_json(const F2Complex& c);

// Tournament: {"n", "matrix"} with the full skew matrix.
Json to_json(const Tournament& t);
Tournament tournament_from_json(const Json& j);

/// Parses JSON text; syntax errors become parse_error naming `source` and
/// the byte offset, schema errors name `source`.
SignFunction read_signfn(std::string_view text, const std::string& source);
Tournament read_tournament(std::string_view text, const std::string& source);

/// Points CSV: a "dim=<d>" header line, then one point per line with d
/// comma-separated exact rationals. Blank lines are skipped. Errors name
/// `source:line`.
PointConfiguration read_points(std::string_view text, const std::string& source);
std::string write_points(const PointConfiguration& config);

/// Canonical text form: compact JSON plus a trailing newline.
std::string dump(const Json& j);

/// Whole-file read. Throws input_error if the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace orchard::io
