#include "qbatt/config.hpp"

#include "qbatt/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace qbatt {

namespace {

const std::set<std::string> kKnownKeys{
    "R",      "delta",  "d",      "Omega",   "r1",      "c01_re",        "c01_im",      "c02_re",
    "c02_im", "t_max",  "dt_out", "rel_tol", "abs_tol", "quadrature_dt", "output_dir",  "label",
    "include_unmodulated",        "settle_band",     "max_grid",    "max_steps"};

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

double as_double(const std::string& key, const YAML::Node& node) {
    if (!node.IsScalar()) throw ParseError(key, line_of(node), "expected a number");
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        throw ParseError(key, line_of(node), "expected a number, got '" + node.Scalar() + "'");
    }
}

std::vector<double> as_axis(const std::string& key, const YAML::Node& node) {
    std::vector<double> values;
    if (node.IsSequence()) {
        for (const auto& item : node) values.push_back(as_double(key, item));
    } else {
        values.push_back(as_double(key, node));
    }
    return values;
}

std::string as_string(const std::string& key, const YAML::Node& node) {
    if (!node.IsScalar()) throw ParseError(key, line_of(node), "expected a string");
    return node.Scalar();
}

bool as_bool(const std::string& key, const YAML::Node& node) {
    try {
        return node.as<bool>();
    } catch (const YAML::Exception&) {
        throw ParseError(key, line_of(node), "expected true or false");
    }
}

}  // namespace

std::vector<ModelParams> SweepSpec::grid() const {
    const auto axis = [](const std::vector<double>& values, double fallback) {
        return values.empty() ? std::vector<double>{fallback} : values;
    };
    std::vector<ModelParams> points;
    for (double r : axis(R, base.R)) {
        for (double dl : axis(delta, base.delta)) {
            for (double amp : axis(d, base.d)) {
                for (double freq : axis(Omega, base.Omega)) {
                    ModelParams p = base;
                    p.R = r;
                    p.delta = dl;
                    p.d = amp;
                    p.Omega = freq;
                    points.push_back(p);
                }
            }
            if (include_unmodulated) {
                ModelParams p = base;
                p.R = r;
                p.delta = dl;
                p.d = 0.0;
                p.Omega = 0.0;
                points.push_back(p);
            }
        }
    }
    const auto key = [](const ModelParams& p) { return std::make_tuple(p.R, p.delta, p.d, p.Omega); };
    std::sort(points.begin(), points.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    points.erase(std::unique(points.begin(), points.end(),
                             [&](const auto& a, const auto& b) { return key(a) == key(b); }),
                 points.end());
    return points;
}

SweepSpec parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ParseError("", e.mark.line + 1, e.msg);
    }
    if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
    if (!root.IsMap()) throw ParseError("", line_of(root), "document must be a key-value mapping");

    SweepSpec spec;
    std::map<std::string, int> lines;
    double c01_re = 1.0, c01_im = 0.0, c02_re = 0.0, c02_im = 0.0;

    for (const auto& entry : root) {
        const std::string key = entry.first.as<std::string>();
        const YAML::Node& value = entry.second;
        const int line = line_of(entry.first);
        if (!kKnownKeys.count(key)) throw ParseError(key, line, "unknown key");
        if (lines.count(key)) throw ParseError(key, line, "duplicate key");
        lines[key] = line;

        if (key == "R" || key == "delta" || key == "d" || key == "Omega") {
            auto values = as_axis(key, value);
            if (values.empty()) continue;  // empty list: keep the base value
            double& base = key == "R" ? spec.base.R
                         : key == "delta" ? spec.base.delta
                         : key == "d" ? spec.base.d
                                      : spec.base.Omega;
            auto& axis = key == "R" ? spec.R : key == "delta" ? spec.delta : key == "d" ? spec.d : spec.Omega;
            base = values.front();
            if (value.IsSequence()) axis = std::move(values);
        } else if (key == "r1") {
            const double r1 = as_double(key, value);
            if (!(r1 >= 0.0 && r1 <= 1.0)) throw ParseError(key, line, "r1 must lie in [0, 1]");
            spec.base.r1 = r1;
            spec.base.r2 = std::sqrt(1.0 - r1 * r1);
        } else if (key == "c01_re") {
            c01_re = as_double(key, value);
        } else if (key == "c01_im") {
            c01_im = as_double(key, value);
        } else if (key == "c02_re") {
            c02_re = as_double(key, value);
        } else if (key == "c02_im") {
            c02_im = as_double(key, value);
        } else if (key == "t_max") {
            spec.cfg.t_max = as_double(key, value);
        } else if (key == "dt_out") {
            spec.cfg.dt_out = as_double(key, value);
        } else if (key == "rel_tol") {
            spec.cfg.rel_tol = as_double(key, value);
        } else if (key == "abs_tol") {
            spec.cfg.abs_tol = as_double(key, value);
        } else if (key == "quadrature_dt") {
            spec.cfg.quadrature_dt = as_double(key, value);
        } else if (key == "output_dir") {
            spec.output_dir = as_string(key, value);
        } else if (key == "label") {
            spec.label = as_string(key, value);
            if (spec.label.empty() || spec.label.find_first_of("/\\") != std::string::npos) {
                throw ParseError(key, line, "label must be non-empty and contain no path separators");
            }
        } else if (key == "include_unmodulated") {
            spec.include_unmodulated = as_bool(key, value);
        } else if (key == "settle_band") {
            spec.settle_band = as_double(key, value);
            if (!(spec.settle_band > 0.0)) throw ParseError(key, line, "settle_band must be > 0");
        } else if (key == "max_grid") {
            const double cap = as_double(key, value);
            if (!(cap >= 1.0 && cap == std::floor(cap))) throw ParseError(key, line, "max_grid must be a positive integer");
            spec.max_grid = static_cast<std::size_t>(cap);
        } else if (key == "max_steps") {
            const double budget = as_double(key, value);
            if (!(budget >= 1.0 && budget == std::floor(budget))) throw ParseError(key, line, "max_steps must be a positive integer");
            spec.cfg.max_steps = static_cast<std::size_t>(budget);
        }
    }

    const auto line = [&](const std::string& key) { return lines.count(key) ? lines.at(key) : 0; };

    if (!lines.count("R")) throw ParseError("R", 0, "missing required key");
    spec.base.c01 = cplx(c01_re, c01_im);
    spec.base.c02 = cplx(c02_re, c02_im);
    if (std::abs(std::norm(spec.base.c01) + std::norm(spec.base.c02) - 1.0) > 1e-12) {
        const std::string key = lines.count("c01_re") ? "c01_re" : lines.count("c02_re") ? "c02_re" : "c01_im";
        throw ParseError(key, line(key), "initial amplitudes must satisfy |c01|^2 + |c02|^2 = 1");
    }

    try {
        validate(spec.cfg);
    } catch (const ConfigError& e) {
        std::string key = "t_max";
        const std::string msg = e.what();
        if (msg.rfind("dt_out", 0) == 0) key = "dt_out";
        else if (msg.rfind("tolerances", 0) == 0) key = lines.count("rel_tol") ? "rel_tol" : "abs_tol";
        else if (msg.rfind("quadrature_dt", 0) == 0) key = "quadrature_dt";
        throw ParseError(key, line(key), msg);
    }

    for (const auto& p : spec.grid()) {
        try {
            validate(p);
        } catch (const Error& e) {
            std::string key = "R";
            const std::string msg = e.what();
            if (msg.rfind("Omega = 0", 0) == 0) key = lines.count("Omega") ? "Omega" : "d";
            else if (msg.rfind("delta", 0) == 0) key = "delta";
            else if (msg.rfind("d must", 0) == 0) key = "d";
            else if (msg.rfind("Omega must", 0) == 0) key = "Omega";
            throw ParseError(key, line(key), msg);
        }
    }
    const std::size_t n_points = spec.grid().size();
    if (n_points > spec.max_grid) {
        throw ParseError("max_grid", line("max_grid"),
                         "grid has " + std::to_string(n_points) + " points, cap is " + std::to_string(spec.max_grid));
    }
    return spec;
}

SweepSpec load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("", 0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace qbatt
