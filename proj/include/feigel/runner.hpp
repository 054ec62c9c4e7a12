#pragma once

#include <string>
#include <vector>

#include "feigel/config.hpp"

namespace feigel::cli {

struct Cell {
    enum class Kind { text, real, integer };
    std::string text;
    Kind kind = Kind::real;
};

/// Result table of one task execution, cells already formatted at the
/// configured precision (the formatting is part of the reproducibility
/// contract: identical configs give byte-identical rows).
struct TableData {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string summary;
    bool tolerance_ok = true;
};

/// Execute the configured task. Sweep points run concurrently up to `jobs`
/// threads; row order always equals sweep order.
TableData execute(const RunConfig& cfg, int jobs);

/// Write the table to cfg.output.path in the configured format, with the
/// fully resolved config embedded as metadata.
void write_output(const RunConfig& cfg, const TableData& table);

std::string render_csv(const RunConfig& cfg, const TableData& table);
std::string render_json(const RunConfig& cfg, const TableData& table);

/// Execute + write + print the one-line summary. Exit status: 0 on
/// success, 3 when a tolerance could not be met.
int run(const RunConfig& cfg, int jobs);

/// CLI-boundary conversion: ghat * hbar / a^3 with a in meters.
double si_momentum_density(double g_hat, double a_meters);

}  // namespace feigel::cli
