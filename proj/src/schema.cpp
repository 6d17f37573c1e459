// schema.cpp — Column contract checks

#include "abdqd/schema.hpp"

#include <fmt/format.h>

namespace abdqd {

FigureKind parse_figure_kind(const std::string& name)
{
    if (name == "locus") return FigureKind::locus;
    if (name == "bloch") return FigureKind::bloch;
    if (name == "traces") return FigureKind::traces;
    throw std::invalid_argument(fmt::format("unknown figure kind '{}' (expected locus, bloch or traces)", name));
}

const std::vector<std::string>& required_columns(FigureKind kind)
{
    static const std::vector<std::string> locus{"phi", "re_rho21", "im_rho21", "closed_form_re", "closed_form_im"};
    static const std::vector<std::string> bloch{"t", "rx", "ry", "rz"};
    static const std::vector<std::string> traces{"t", "re_rho21", "im_rho21"};
    switch (kind) {
    case FigureKind::locus: return locus;
    case FigureKind::bloch: return bloch;
    case FigureKind::traces: return traces;
    }
    throw std::logic_error("unhandled figure kind");
}

const std::vector<std::string>& required_metadata(FigureKind kind)
{
    static const std::vector<std::string> none;
    static const std::vector<std::string> tags{"config.phi", "config.gamma-l", "config.gamma-r"};
    return kind == FigureKind::traces ? tags : none;
}

void check_schema(const ResultTable& table, FigureKind kind)
{
    for (const auto& name : required_columns(kind)) {
        if (table.column_index(name) < 0) throw SchemaMismatch(fmt::format("missing column '{}'", name));
    }
    for (const auto& key : required_metadata(kind)) {
        if (table.meta(key).empty()) throw SchemaMismatch(fmt::format("missing metadata '{}'", key));
    }
    if (table.rows().empty()) throw EmptyInput("table has no rows");
}

} // namespace abdqd
