// schema.hpp — Column contract between the experiment tables and the plotting scripts
//
// locus:  flux-sweep output   phi, re_rho21, im_rho21, closed_form_re, closed_form_im
// bloch:  time-trace output   t, rx, ry, rz
// traces: time-trace output   t, re_rho21, im_rho21; tagged by config.phi, config.gamma-l, config.gamma-r

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "abdqd/result_table.hpp"

namespace abdqd {

enum class FigureKind { locus, bloch, traces };

class SchemaMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

FigureKind parse_figure_kind(const std::string& name);
const std::vector<std::string>& required_columns(FigureKind kind);
const std::vector<std::string>& required_metadata(FigureKind kind);

// Throws SchemaMismatch naming the first missing column or metadata key,
// EmptyInput if the table has no rows.
void check_schema(const ResultTable& table, FigureKind kind);

} // namespace abdqd
