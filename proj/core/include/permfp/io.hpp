#pragma once

#include "permfp/class_function.hpp"
#include "permfp/complex.hpp"

#include <string>

namespace permfp {

// JSON documents (UTF-8) for groups, complexes, and class functions.
//
// Group:          {"name": str, "order": n, "table": [[int]]}
// Complex:        {"group": name-or-object, "p": prime,
//                  "modules": {"<degree>": [[subgroup elements], ...]},
//                  "differentials": {"<degree>": [[int]] (reduced mod p)}}
// ClassFunction:  {"group": name-or-object, "p": prime, "values": [int]}
//
// Within a degree the basis is the listed orbit blocks in order, each block
// the cosets of its stabilizer ordered by minimal element.  Writing a complex
// first re-coordinatizes every module into that layout (an isomorphism, so
// homology and marks are unchanged); loading validates equivariance and
// d o d = 0 and rejects bad documents with std::invalid_argument.

std::string group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const std::string& text);

std::string complex_to_json(const Complex& x);
Complex complex_from_json(const std::string& text);

std::string class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace permfp
