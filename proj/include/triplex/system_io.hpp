#pragma once

// JSON documents describing triple systems and Lie algebras.
//
//   { "name": "s2", "kind": "lts", "dim": 2, "basis": ["e", "f"],
//     "entries": [ { "args": [0, 1, 0], "value": { "0": "2" } }, ... ] }
//
// Lie algebras use "kind": "lie" and two-element "args".  Values are sparse
// maps from a 0-based index to a rational string "p" or "p/q".  Nothing is
// completed by symmetry.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "triplex/lts.hpp"

namespace triplex {

using SystemDocument = std::variant<TripleSystem, LieAlgebra>;

// Throws ValidationError (with a line number for malformed JSON).
SystemDocument parse_system(std::string_view text);
SystemDocument load_system(const std::filesystem::path& path);

// A Lie algebra document is turned into its triple system [[x,y],z].
TripleSystem load_triple_system(const std::filesystem::path& path);

std::string dump_system(const TripleSystem& t);
std::string dump_system(const LieAlgebra& l);

}  // namespace triplex
