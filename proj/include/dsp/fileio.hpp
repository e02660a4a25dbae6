#pragma once

#include <json.hpp>

#include "dsp/tuples.hpp"

namespace dsp {

using Json = nlohmann::ordered_json;

/// Thrown on malformed input files; mapped to exit code 2 by the CLI.
struct FileFormatError : Error {
    using Error::Error;
};

/// Class file model:
///   { "version": "1", "flavor": "additive"|"multiplicative", "n": int,
///     "classes": [ { "spectrum": [ { "value": expression string,
///                                    "mult": int,
///                                    "blocks": [int, ...] (optional) } ] } ] }
/// Omitted blocks mean mult blocks of size 1 (diagonalizable).
std::vector<ConjugacyClassSpec> classes_from_json(const Json& j);
Json classes_to_json(const std::vector<ConjugacyClassSpec>& classes);

/// Tuple file model:
///   { "version": "1", "flavor": ..., "n": int,
///     "matrices": [ [ row-major expression strings ] ],
///     "classes": (optional class file object),
///     "expect": (optional expectation object) }
MatrixTuple tuple_from_json(const Json& j);
Json tuple_to_json(const MatrixTuple& t, const Json& expect = Json());

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Flavor flavor_from_string(const std::string& s);
std::string flavor_to_string(Flavor f);

}  // namespace dsp
