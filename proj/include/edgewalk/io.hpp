#pragma once

#include <string>

#include "edgewalk/instances.hpp"
#include "edgewalk/types.hpp"

namespace edgewalk {

// Set-system text format: line 1 is "n m", then m lines each holding the
// space-separated sorted 0-based indices of one set (an empty line is an
// empty set). UTF-8, LF endings. save/load round-trips bit-exactly.
std::string format_set_system(const SetSystem& sys);
SetSystem parse_set_system(const std::string& text);
void save_set_system(const SetSystem& sys, const std::string& path);
SetSystem load_set_system(const std::string& path);

// Matrix CSV: m rows of n comma-separated decimal columns, no header.
// Values are written with round-trip precision.
std::string format_matrix_csv(const ConstraintSet& cs);
ConstraintSet parse_matrix_csv(const std::string& text);
void save_matrix(const ConstraintSet& cs, const std::string& path);
ConstraintSet load_matrix(const std::string& path);

// Coloring file: one line of space-separated +-1 entries. A JSON document
// holding a "chi" array (a pipeline report) is accepted too.
Coloring load_coloring(const std::string& path);

// Fractional point file: one line of space-separated decimals, or a JSON
// document holding an "x" array (a walk report).
std::vector<double> load_point(const std::string& path);

// Generator spec as a JSON object:
// {"kind": str, "n": int, "m": int, "param": number, "seed": int}.
GeneratorSpec parse_generator_spec_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace edgewalk
