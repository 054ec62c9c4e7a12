#include "feigel/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "feigel/errors.hpp"

namespace feigel::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Flat "[section] / key = value" text into a "section.key" -> value map.
// '#' and ';' start comments.
std::map<std::string, std::string> read_entries(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigInvalid("config line " + std::to_string(lineno) +
                                    ": malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigInvalid("config line " + std::to_string(lineno) +
                                ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigInvalid("config line " + std::to_string(lineno) + ": empty key");
        entries[section.empty() ? key : section + "." + key] = value;
    }
    return entries;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigInvalid("config key '" + key + "': '" + v + "' is not a finite number");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigInvalid("config key '" + key + "': '" + v + "' is not an integer");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigInvalid("config key '" + key + "': '" + v + "' is not a boolean");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigInvalid("config key '" + key + "': empty list element");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigInvalid("config key '" + key + "': empty list");
    return out;
}

const char* kChiEntryKeys[9] = {"chi_xx", "chi_xy", "chi_xz", "chi_yx", "chi_yy",
                                "chi_yz", "chi_zx", "chi_zy", "chi_zz"};

RunConfig build(const std::map<std::string, std::string>& entries) {
    RunConfig c;
    bool saw_sweep = false, saw_mode = false;

    for (const auto& [key, value] : entries) {
        if (key == "task") {
            if (value == "vacuum") c.task = Task::vacuum;
            else if (value == "mode-table") c.task = Task::mode_table;
            else if (value == "sweep") c.task = Task::sweep;
            else if (value == "verify") c.task = Task::verify;
            else
                throw ConfigInvalid("config key 'task': unknown task '" + value +
                                    "' (expected vacuum|mode-table|sweep|verify)");
        } else if (key == "material.eps") {
            c.eps = parse_double(key, value);
        } else if (key == "material.mu") {
            c.mu = parse_double(key, value);
        } else if (key == "material.chi") {
            if (value != "eq21" && value != "general")
                throw ConfigInvalid("config key 'material.chi': '" + value +
                                    "' (expected eq21|general)");
            c.chi_form = value;
        } else if (key == "material.chi_max") {
            c.chi_max = parse_double(key, value);
        } else if (key == "material.chi_yz") {
            c.chi_yz = parse_double(key, value);
        } else if (key == "material.chi_zy") {
            c.chi_zy = parse_double(key, value);
        } else if (key.rfind("material.chi_", 0) == 0) {
            bool matched = false;
            for (int i = 0; i < 9; ++i) {
                if (key == std::string("material.") + kChiEntryKeys[i]) {
                    c.chi_general(i / 3, i % 3) = parse_double(key, value);
                    matched = true;
                    break;
                }
            }
            if (!matched) throw ConfigInvalid("unknown config key '" + key + "'");
        } else if (key == "geometry.a") {
            c.a = parse_double(key, value);
        } else if (key == "geometry.units") {
            if (value == "natural") c.units = Units::natural;
            else if (value == "SI" || value == "si") c.units = Units::si;
            else
                throw ConfigInvalid("config key 'geometry.units': '" + value +
                                    "' (expected natural|SI)");
        } else if (key == "quadrature.rel_tol") {
            c.quad.rel_tol = parse_double(key, value);
        } else if (key == "quadrature.abs_tol") {
            c.quad.abs_tol = parse_double(key, value);
        } else if (key == "quadrature.kappa_a_max") {
            c.quad.kappa_a_max = parse_double(key, value);
        } else if (key == "quadrature.max_subdivisions") {
            c.quad.max_subdivisions = parse_int(key, value);
        } else if (key == "sweep.parameter") {
            if (!saw_sweep) c.sweep.emplace();
            saw_sweep = true;
            c.sweep->parameter = value;
        } else if (key == "sweep.from") {
            if (!saw_sweep) c.sweep.emplace();
            saw_sweep = true;
            c.sweep->from = parse_double(key, value);
        } else if (key == "sweep.to") {
            if (!saw_sweep) c.sweep.emplace();
            saw_sweep = true;
            c.sweep->to = parse_double(key, value);
        } else if (key == "sweep.count") {
            if (!saw_sweep) c.sweep.emplace();
            saw_sweep = true;
            c.sweep->count = parse_int(key, value);
        } else if (key == "sweep.spacing") {
            if (!saw_sweep) c.sweep.emplace();
            saw_sweep = true;
            if (value == "linear") c.sweep->spacing = Spacing::linear;
            else if (value == "log") c.sweep->spacing = Spacing::log;
            else
                throw ConfigInvalid("config key 'sweep.spacing': '" + value +
                                    "' (expected linear|log)");
        } else if (key == "mode.n_max") {
            if (!saw_mode) c.mode.emplace();
            saw_mode = true;
            c.mode->n_max = parse_int(key, value);
        } else if (key == "mode.k_x") {
            if (!saw_mode) c.mode.emplace();
            saw_mode = true;
            c.mode->k_x = parse_list(key, value);
        } else if (key == "output.path") {
            c.output.path = value;
        } else if (key == "output.format") {
            if (value == "csv") c.output.format = OutputFormat::csv;
            else if (value == "json") c.output.format = OutputFormat::json;
            else
                throw ConfigInvalid("config key 'output.format': '" + value +
                                    "' (expected csv|json)");
        } else if (key == "output.precision") {
            c.output.precision = parse_int(key, value);
        } else if (key == "output.timings") {
            c.output.timings = parse_bool(key, value);
        } else {
            throw ConfigInvalid("unknown config key '" + key + "'");
        }
    }
    return c;
}

void validate(const RunConfig& c) {
    if (c.task == Task::sweep) {
        if (!c.sweep)
            throw ConfigInvalid("config: task=sweep requires a [sweep] block");
        const SweepBlock& s = *c.sweep;
        static const char* sweepable[] = {"a", "eps", "mu", "chi_yz", "chi_zy"};
        bool ok = false;
        for (const char* p : sweepable) ok = ok || s.parameter == p;
        if (!ok)
            throw ConfigInvalid("config key 'sweep.parameter': '" + s.parameter +
                                "' (expected a|eps|mu|chi_yz|chi_zy)");
        if (s.count < 1)
            throw ConfigInvalid("config key 'sweep.count': must be >= 1");
        if (!(s.from <= s.to))
            throw ConfigInvalid("config key 'sweep.from': range must be ordered (from <= to)");
        if (s.spacing == Spacing::log && !(s.from > 0.0))
            throw ConfigInvalid("config key 'sweep.from': log spacing requires from > 0");
    } else if (c.sweep) {
        throw ConfigInvalid("config: [sweep] block is only valid with task=sweep");
    }
    if (c.task == Task::mode_table) {
        if (!c.mode)
            throw ConfigInvalid("config: task=mode-table requires a [mode] block");
        if (c.mode->n_max < 1)
            throw ConfigInvalid("config key 'mode.n_max': must be >= 1");
        if (c.mode->k_x.empty())
            throw ConfigInvalid("config key 'mode.k_x': list must be nonempty");
        for (double k : c.mode->k_x)
            if (!(k > 0.0))
                throw ConfigInvalid("config key 'mode.k_x': entries must be > 0");
    }
    if (!(c.a > 0.0))
        throw ConfigInvalid("config key 'geometry.a': must be > 0");
    if (c.output.precision < 0 || c.output.precision > 17)
        throw ConfigInvalid("config key 'output.precision': must be in [0, 17]");
    if (c.output.path.empty())
        throw ConfigInvalid("config key 'output.path': required");
    // Material and quadrature invariants are enforced by their own types;
    // rewrap so the CLI reports them as config errors.
    try {
        (void)c.material();
    } catch (const std::invalid_argument& e) {
        throw ConfigInvalid(std::string("config [material]: ") + e.what());
    }
    if (!(c.quad.rel_tol > 0.0) || !(c.quad.abs_tol > 0.0))
        throw ConfigInvalid("config [quadrature]: tolerances must be > 0");
    if (c.quad.kappa_a_max < 20.0)
        throw ConfigInvalid("config key 'quadrature.kappa_a_max': must be >= 20");
    if (c.quad.max_subdivisions < 1)
        throw ConfigInvalid("config key 'quadrature.max_subdivisions': must be >= 1");
}

}  // namespace

MaterialParams RunConfig::material() const {
    if (chi_form == "general")
        return MaterialParams(eps, mu, chi_general, chi_max);
    return MaterialParams::yz_coupled(eps, mu, chi_yz, chi_zy, chi_max);
}

RunConfig RunConfig::with_parameter(const std::string& name, double value) const {
    RunConfig c = *this;
    if (name == "a") c.a = value;
    else if (name == "eps") c.eps = value;
    else if (name == "mu") c.mu = value;
    else if (name == "chi_yz") c.chi_yz = value;
    else if (name == "chi_zy") c.chi_zy = value;
    else throw ConfigInvalid("unknown sweep parameter '" + name + "'");
    return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved_entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    const char* task_name = task == Task::vacuum       ? "vacuum"
                            : task == Task::mode_table ? "mode-table"
                            : task == Task::sweep      ? "sweep"
                                                       : "verify";
    e.emplace_back("task", task_name);
    e.emplace_back("material.eps", format_double(eps, 0));
    e.emplace_back("material.mu", format_double(mu, 0));
    e.emplace_back("material.chi", chi_form);
    if (chi_form == "general") {
        for (int i = 0; i < 9; ++i)
            e.emplace_back(std::string("material.chi_") +
                               "xyz"[i / 3] + std::string(1, "xyz"[i % 3]),
                           format_double(chi_general(i / 3, i % 3), 0));
    } else {
        e.emplace_back("material.chi_yz", format_double(chi_yz, 0));
        e.emplace_back("material.chi_zy", format_double(chi_zy, 0));
    }
    e.emplace_back("material.chi_max", format_double(chi_max, 0));
    e.emplace_back("geometry.a", format_double(a, 0));
    e.emplace_back("geometry.units", units == Units::natural ? "natural" : "SI");
    e.emplace_back("quadrature.rel_tol", format_double(quad.rel_tol, 0));
    e.emplace_back("quadrature.abs_tol", format_double(quad.abs_tol, 0));
    e.emplace_back("quadrature.kappa_a_max", format_double(quad.kappa_a_max, 0));
    e.emplace_back("quadrature.max_subdivisions", std::to_string(quad.max_subdivisions));
    if (sweep) {
        e.emplace_back("sweep.parameter", sweep->parameter);
        e.emplace_back("sweep.from", format_double(sweep->from, 0));
        e.emplace_back("sweep.to", format_double(sweep->to, 0));
        e.emplace_back("sweep.count", std::to_string(sweep->count));
        e.emplace_back("sweep.spacing",
                       sweep->spacing == Spacing::linear ? "linear" : "log");
    }
    if (mode) {
        e.emplace_back("mode.n_max", std::to_string(mode->n_max));
        std::string ks;
        for (std::size_t i = 0; i < mode->k_x.size(); ++i) {
            if (i) ks += ", ";
            ks += format_double(mode->k_x[i], 0);
        }
        e.emplace_back("mode.k_x", ks);
    }
    e.emplace_back("output.path", output.path);
    e.emplace_back("output.format", output.format == OutputFormat::csv ? "csv" : "json");
    e.emplace_back("output.precision", std::to_string(output.precision));
    e.emplace_back("output.timings", output.timings ? "true" : "false");
    return e;
}

RunConfig parse_config_text(const std::string& text,
                            const std::vector<std::string>& overrides) {
    auto entries = read_entries(text);
    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigInvalid("override '" + ov + "': expected key=value");
        entries[trim(ov.substr(0, eq))] = trim(ov.substr(eq + 1));
    }
    RunConfig c = build(entries);
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in)
        throw ConfigInvalid("config file '" + path + "' is not readable");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides);
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::to_chars_result res;
    if (precision <= 0) {
        res = std::to_chars(buf, buf + sizeof(buf), v);
    } else {
        res = std::to_chars(buf, buf + sizeof(buf), v,
                            std::chars_format::general, precision);
    }
    return std::string(buf, res.ptr);
}

}  // namespace feigel::cli
