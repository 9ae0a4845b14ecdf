// Instance selection and atom bindings: builtin engines I1..I4, category
// files, and JSON environments mapping atom names to Chu objects.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bvengine/formula.hpp"

namespace bveng {

// "I1".."I3" build the optic engine over the builtin category of that name;
// "I4" builds the plain set engine (pairings into the two-element set);
// anything else is treated as a path to a category JSON file and loaded as an
// optic engine over that category.
std::unique_ptr<Engine> make_instance_engine(const std::string& name_or_path, long long budget);

// atom bindings used by the law suites when no environment file is given
ChuEnv default_bindings(Engine& E, const std::string& name_or_path);

// formula texts the law suites evaluate over the default bindings
std::vector<std::string> default_corpus(const std::string& name_or_path);

// bindings JSON: {"atoms": {name: spec}} where spec is one of
//   {"kind":"faithful",    "pair":[a,a2]}     optic engines
//   {"kind":"event",       "pair":[a,a2]}     optic engines
//   {"kind":"first_order", "object":a}        optic engines
//   {"kind":"set",         "elements":n}      embedded n-element set
//   {"kind":"chu", "carrier":n, "cocarrier":m, "pairing":[..n*m values..]}
//     explicit pairing table in lex order (p*m+q), single-object engines only
ChuEnv parse_bindings(Engine& E, const std::string& json_text, const std::string& src_name);
ChuEnv load_bindings(Engine& E, const std::string& path);

}  // namespace bveng
