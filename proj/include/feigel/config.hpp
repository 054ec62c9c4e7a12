#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feigel/material.hpp"
#include "feigel/vacuum.hpp"

namespace feigel::cli {

enum class Task { vacuum, mode_table, sweep, verify };
enum class OutputFormat { csv, json };
enum class Spacing { linear, log };
enum class Units { natural, si };

struct SweepBlock {
    std::string parameter;  // a | eps | mu | chi_yz | chi_zy
    double from = 0.0;
    double to = 0.0;
    int count = 0;
    Spacing spacing = Spacing::linear;
};

struct ModeBlock {
    int n_max = 1;
    std::vector<double> k_x;  // positive values; both signs are tabulated
};

struct OutputBlock {
    std::string path;
    OutputFormat format = OutputFormat::csv;
    int precision = 0;  // 0 = shortest round-trip representation
    bool timings = false;
};

/// Fully resolved run configuration. Built from a flat key-value config
/// file plus optional overrides; validation throws ConfigInvalid naming the
/// offending key.
struct RunConfig {
    Task task = Task::vacuum;

    double eps = 1.0;
    double mu = 1.0;
    std::string chi_form = "eq21";  // eq21 | general
    double chi_yz = 0.0;
    double chi_zy = 0.0;
    Mat3 chi_general = Mat3::zero();
    double chi_max = MaterialParams::default_chi_max;

    double a = 1.0;
    Units units = Units::natural;

    vacuum::QuadratureConfig quad;

    std::optional<SweepBlock> sweep;
    std::optional<ModeBlock> mode;

    OutputBlock output;

    MaterialParams material() const;
    /// Copy with one sweepable parameter replaced.
    RunConfig with_parameter(const std::string& name, double value) const;
    /// Ordered key-value view of every resolved setting (metadata echo).
    std::vector<std::pair<std::string, std::string>> resolved_entries() const;
};

/// Parse the config file at `path`, apply `overrides` ("section.key=value"
/// entries, e.g. "material.eps=2" or "task=vacuum"), validate, and resolve.
RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides = {});

/// Same, from config text (used by tests).
RunConfig parse_config_text(const std::string& text,
                            const std::vector<std::string>& overrides = {});

/// Shortest-round-trip (precision = 0) or fixed-significant-digit
/// formatting used for every numeric field written to output files.
std::string format_double(double v, int precision);

}  // namespace feigel::cli
