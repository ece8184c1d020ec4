#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "atomspec/filtration.hpp"
#include "atomspec/finspace.hpp"
#include "atomspec/order.hpp"
#include "atomspec/pid_modules.hpp"
#include "atomspec/spectrum.hpp"
#include "atomspec/tailspace.hpp"

namespace atomspec::json_io {

// Whole file contents; input_error when unreadable.
std::string read_file(const std::string& path);

// Loaders. Every malformed document raises input_error naming the offending
// field.  Formats:
//   preorder  {"points":["a",...], "leq":[["a","b"],...]}   (generators)
//   space     {"points":[...], "subbasis":[["a","b"],...]}
//   schema    {"named":[...], "domain":"Z"|"N", "family":"s",
//              "descriptors":[{"kind":"singletons"},
//                             {"kind":"tail","point":"b","dir":"geq"|"leq"},
//                             {"kind":"cone","point":"g"},
//                             {"kind":"point","point":"b"}]}
order::preorder parse_preorder(const std::string& text,
                               std::size_t max_points = order::default_max_points);
finspace::fin_space parse_space(const std::string& text,
                                std::size_t max_points = finspace::default_max_points);
tailspace::tail_schema parse_schema(const std::string& text);

// Any model file: a preorder (key "leq", loaded as its up-set topology), a
// finite space (key "subbasis"), or a tail schema (key "descriptors"),
// optionally carrying {"supports":{"M":{"set":...,"noetherian":bool}}}.
// Finite-space sets are arrays of point names; symbolic sets are
// {"named":[...], "indexed":{"kind":"empty"|"all"|"finite"|"tail"|"cofinite",
// ...}} with "elements", "from"/"dir", or "excluded" as the kind requires.
spectrum::atom_space parse_model(const std::string& text,
                                 std::size_t max_points = finspace::default_max_points);

// {"ring":"Z"|{"Fp":p}, "generators":n, "relations":[[row entries],...]};
// polynomial entries are coefficient arrays, constant term first (a bare
// integer is accepted as a constant).
using module_variant = std::variant<pid::presented_module<pid::integer_ring>,
                                    pid::presented_module<pid::fp_poly_ring>>;
module_variant parse_module(const std::string& text);

// Deterministic report bodies: two-space indent, keys sorted.
std::string set_json(const spectrum::atom_space& a, const tailspace::symbolic_set& s);
std::string filtration_json(const spectrum::atom_space& a,
                            const filtration::filtration_result& f);
std::string theorem_json(const filtration::theorem_report& r);
std::string analysis_json(const pid::module_analysis& a);

}  // namespace atomspec::json_io
