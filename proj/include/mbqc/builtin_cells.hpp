#pragma once

#include <string>

namespace mbqc {

// Returns the unit-cell definition text for a builtin lattice, or nullptr if
// the name is unknown. The same text ships as data/cells/<name>.cell.
const char* builtin_cell_text(const std::string& name);

// The triamond quotient complex is shipped as data (src/builtin_triamond.cpp);
// it was produced by chiral 3-splits of the cubic primal and dual vertices and
// is gated by validate(), valency()==10 and self-duality checks.
const char* builtin_triamond_text();

}  // namespace mbqc
