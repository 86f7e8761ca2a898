#include "viscorod/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "viscorod/admissibility.hpp"
#include "viscorod/poles.hpp"

namespace viscorod {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("line " + std::to_string(line) + ": " + message);
}

double parse_double(int line, const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v)) {
        fail(line, key + ": expected a finite number, got '" + value + "'");
    }
    return v;
}

int parse_int(int line, const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        fail(line, key + ": expected an integer, got '" + value + "'");
    }
    return static_cast<int>(v);
}

// "w:x, w:x, ..." pair lists for explicit atom/density terms.
std::vector<std::pair<double, double>> parse_pairs(int line, const std::string& key,
                                                   const std::string& value) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            fail(line, key + ": expected 'weight:value' pairs separated by commas");
        }
        const double w = parse_double(line, key, trim(item.substr(0, colon)));
        const double x = parse_double(line, key, trim(item.substr(colon + 1)));
        out.emplace_back(w, x);
    }
    if (out.empty()) fail(line, key + ": empty list");
    return out;
}

void fmt(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

struct SampledFile {
    double dt = 0.0;
    double t_end = 0.0;
    std::vector<double> values;
};

SampledFile load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("forcing file not readable: " + path);
    std::vector<double> times, values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::stringstream ss(s);
        std::string t_str, f_str;
        if (!std::getline(ss, t_str, ',') || !std::getline(ss, f_str)) {
            if (line_no == 1) continue;  // header row
            throw ConfigError(path + " line " + std::to_string(line_no) + ": expected 't,F'");
        }
        const std::string t_trimmed = trim(t_str);
        char* end = nullptr;
        const double t = std::strtod(t_trimmed.c_str(), &end);
        if (end == t_trimmed.c_str()) {
            if (line_no == 1) continue;  // header row
            throw ConfigError(path + " line " + std::to_string(line_no) + ": expected 't,F'");
        }
        times.push_back(t);
        values.push_back(parse_double(line_no, path, trim(f_str)));
    }
    if (times.size() < 2) throw ConfigError(path + ": needs at least two samples");
    if (times.front() != 0.0) throw ConfigError(path + ": samples must start at t = 0");
    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw ConfigError(path + ": sample times must increase");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * dt) {
            throw ConfigError(path + ": sample grid must be uniform");
        }
    }
    return {dt, times.back(), std::move(values)};
}

const char* kind_name(ForcingConfig::Kind kind) {
    switch (kind) {
        case ForcingConfig::Kind::impulse: return "impulse";
        case ForcingConfig::Kind::step: return "step";
        case ForcingConfig::Kind::cosine: return "cosine";
        case ForcingConfig::Kind::file: return "file";
    }
    return "?";
}

const char* family_name(ModelConfig::Family family) {
    switch (family) {
        case ModelConfig::Family::zener: return "zener";
        case ModelConfig::Family::distributed: return "distributed";
        case ModelConfig::Family::explicit_lists: return "explicit";
    }
    return "?";
}

void write_csv(const std::string& path, const ResponseSeries& series, const KernelTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write CSV: " + path);
    out << "t,eps,sigma,P,Q\n";
    char buf[220];
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", series.t[i],
                      series.eps[i], series.sigma[i], table.P[i], table.Q[i]);
        out << buf;
    }
}

struct ReportWriter {
    std::ostringstream os;

    void header(const RunConfig& cfg) {
        os << "# run report\n";
        os << "# model: family=" << family_name(cfg.model.family);
        if (cfg.model.family != ModelConfig::Family::explicit_lists) {
            os << " a=" << cfg.model.a << " b=" << cfg.model.b;
            if (cfg.model.family == ModelConfig::Family::zener) os << " alpha=" << cfg.model.alpha;
        }
        os << " x0=" << cfg.model.x0 << "\n";
        os << "# forcing: kind=" << kind_name(cfg.forcing.kind) << " F0=" << cfg.forcing.F0;
        if (cfg.forcing.kind == ForcingConfig::Kind::cosine) os << " omega=" << cfg.forcing.omega;
        if (cfg.forcing.kind == ForcingConfig::Kind::file) os << " path=" << cfg.forcing.path;
        os << "\n";
    }

    void write(const std::string& path, int exit_code, double elapsed_ms) {
        os << "elapsed_ms=";
        fmt(os, elapsed_ms);
        os << "\nexit_code=" << exit_code << "\n";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot write report: " + path);
        out << os.str();
    }
};

}  // namespace

MaterialModel ModelConfig::build() const {
    try {
        switch (family) {
            case Family::zener: {
                MaterialModel m = MaterialModel::fractional_zener(a, b, alpha);
                return MaterialModel(m.phi_sigma(), m.phi_eps(), x0);
            }
            case Family::distributed: {
                MaterialModel m = MaterialModel::distributed_order(a, b);
                return MaterialModel(m.phi_sigma(), m.phi_eps(), x0);
            }
            case Family::explicit_lists:
                return MaterialModel(OrderDistribution(sigma_atoms, sigma_densities),
                                     OrderDistribution(eps_atoms, eps_densities), x0);
        }
        throw ConfigError("unknown model family");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool saw_family = false, saw_a = false, saw_b = false, saw_alpha = false;
    bool saw_t_end = false;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "forcing" && section != "grid" &&
                section != "output" && section != "tolerances") {
                fail(line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(line_no, "expected 'key = value'");
        if (section.empty()) fail(line_no, "entry before any [section] header");

        if (section == "model") {
            if (key == "family") {
                saw_family = true;
                if (value == "zener") {
                    cfg.model.family = ModelConfig::Family::zener;
                } else if (value == "distributed") {
                    cfg.model.family = ModelConfig::Family::distributed;
                } else if (value == "explicit") {
                    cfg.model.family = ModelConfig::Family::explicit_lists;
                } else {
                    fail(line_no, "family must be zener, distributed or explicit");
                }
            } else if (key == "a") {
                cfg.model.a = parse_double(line_no, key, value);
                saw_a = true;
            } else if (key == "b") {
                cfg.model.b = parse_double(line_no, key, value);
                saw_b = true;
            } else if (key == "alpha") {
                cfg.model.alpha = parse_double(line_no, key, value);
                saw_alpha = true;
                if (!(cfg.model.alpha > 0.0 && cfg.model.alpha < 1.0)) {
                    fail(line_no, "alpha out of (0,1)");
                }
            } else if (key == "x0") {
                cfg.model.x0 = parse_double(line_no, key, value);
                if (cfg.model.x0 < 0.0) fail(line_no, "x0 must be >= 0");
            } else if (key == "sigma_atoms" || key == "eps_atoms") {
                auto& dst = key[0] == 's' ? cfg.model.sigma_atoms : cfg.model.eps_atoms;
                for (auto [w, x] : parse_pairs(line_no, key, value)) dst.push_back({w, x});
            } else if (key == "sigma_densities" || key == "eps_densities") {
                auto& dst = key[0] == 's' ? cfg.model.sigma_densities : cfg.model.eps_densities;
                for (auto [w, x] : parse_pairs(line_no, key, value)) dst.push_back({w, x});
            } else {
                fail(line_no, "unknown model key '" + key + "'");
            }
        } else if (section == "forcing") {
            if (key == "kind") {
                if (value == "impulse") {
                    cfg.forcing.kind = ForcingConfig::Kind::impulse;
                } else if (value == "step") {
                    cfg.forcing.kind = ForcingConfig::Kind::step;
                } else if (value == "cosine") {
                    cfg.forcing.kind = ForcingConfig::Kind::cosine;
                } else if (value == "file") {
                    cfg.forcing.kind = ForcingConfig::Kind::file;
                } else {
                    fail(line_no, "kind must be impulse, step, cosine or file");
                }
            } else if (key == "F0") {
                cfg.forcing.F0 = parse_double(line_no, key, value);
            } else if (key == "omega") {
                cfg.forcing.omega = parse_double(line_no, key, value);
                if (!(cfg.forcing.omega >= 0.0)) fail(line_no, "omega must be >= 0");
            } else if (key == "path") {
                cfg.forcing.path = value;
            } else {
                fail(line_no, "unknown forcing key '" + key + "'");
            }
        } else if (section == "grid") {
            if (key == "t_end") {
                cfg.t_end = parse_double(line_no, key, value);
                saw_t_end = true;
                if (!(cfg.t_end > 0.0)) fail(line_no, "t_end must be > 0");
            } else if (key == "n_points") {
                cfg.n_points = parse_int(line_no, key, value);
                if (cfg.n_points < 16) fail(line_no, "n_points must be >= 16");
            } else {
                fail(line_no, "unknown grid key '" + key + "'");
            }
        } else if (section == "output") {
            if (key == "csv") {
                cfg.csv_path = value;
            } else if (key == "report") {
                cfg.report_path = value;
            } else {
                fail(line_no, "unknown output key '" + key + "'");
            }
        } else {  // tolerances
            if (key == "quad_rel") {
                cfg.quad.rel_tol = parse_double(line_no, key, value);
                if (!(cfg.quad.rel_tol > 0.0)) fail(line_no, "quad_rel must be > 0");
            } else if (key == "quad_abs") {
                cfg.quad.abs_tol = parse_double(line_no, key, value);
                if (!(cfg.quad.abs_tol > 0.0)) fail(line_no, "quad_abs must be > 0");
            } else if (key == "max_panels") {
                cfg.quad.max_panels = parse_int(line_no, key, value);
                if (cfg.quad.max_panels < 8) fail(line_no, "max_panels must be >= 8");
            } else {
                fail(line_no, "unknown tolerances key '" + key + "'");
            }
        }
    }

    if (!saw_family) throw ConfigError("model: missing 'family'");
    if (cfg.model.family == ModelConfig::Family::zener ||
        cfg.model.family == ModelConfig::Family::distributed) {
        if (!saw_a || !(cfg.model.a > 0.0)) throw ConfigError("model: 'a' must be set and > 0");
        if (!saw_b || !(cfg.model.b > 0.0)) throw ConfigError("model: 'b' must be set and > 0");
        if (cfg.model.family == ModelConfig::Family::zener && !saw_alpha) {
            throw ConfigError("model: zener requires 'alpha'");
        }
    } else {
        if (cfg.model.sigma_atoms.empty() && cfg.model.sigma_densities.empty()) {
            throw ConfigError("model: explicit family needs sigma_atoms or sigma_densities");
        }
        if (cfg.model.eps_atoms.empty() && cfg.model.eps_densities.empty()) {
            throw ConfigError("model: explicit family needs eps_atoms or eps_densities");
        }
    }
    if (cfg.forcing.kind == ForcingConfig::Kind::file && cfg.forcing.path.empty()) {
        throw ConfigError("forcing: kind=file requires 'path'");
    }
    if (cfg.forcing.kind != ForcingConfig::Kind::file && !saw_t_end) {
        throw ConfigError("grid: missing 't_end'");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not readable: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

int run_pipeline(const RunConfig& config, bool check_only) {
    const auto t_start = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t_start)
            .count();
    };

    ReportWriter report;
    report.header(config);

    const MaterialModel model = config.model.build();
    const AdmissibilityReport admissibility = check_admissibility(model);
    report.os << admissibility.to_key_values();
    if (!admissibility.admissible()) {
        report.os << "# status: inadmissible\n";
        report.write(config.report_path, kExitInadmissible, elapsed_ms());
        std::cerr << "model rejected as physically inadmissible; see " << config.report_path
                  << "\n";
        return kExitInadmissible;
    }

    PoleCertificate cert;
    try {
        cert = locate_pole(model);
    } catch (const Error& e) {
        report.os << "# status: certification failed: " << e.what() << "\n";
        report.write(config.report_path, kExitNumerical, elapsed_ms());
        std::cerr << "pole certification failed: " << e.what() << "\n";
        return kExitNumerical;
    }
    report.os << cert.to_key_values();

    if (check_only) {
        report.os << "# status: ok\n";
        report.write(config.report_path, kExitOk, elapsed_ms());
        std::cout << "admissible; pole certified; report: " << config.report_path << "\n";
        return kExitOk;
    }

    try {
        const KernelEvaluator evaluator(model, cert, config.quad);

        Forcing forcing = Impulse{config.forcing.F0};
        TimeGrid grid{config.t_end, config.n_points};
        switch (config.forcing.kind) {
            case ForcingConfig::Kind::impulse:
                forcing = Impulse{config.forcing.F0};
                break;
            case ForcingConfig::Kind::step:
                forcing = Step{config.forcing.F0};
                break;
            case ForcingConfig::Kind::cosine:
                forcing = Harmonic{config.forcing.F0, config.forcing.omega};
                break;
            case ForcingConfig::Kind::file: {
                SampledFile samples = load_samples(config.forcing.path);
                grid = TimeGrid{samples.t_end, static_cast<int>(samples.values.size())};
                std::vector<double> scaled = std::move(samples.values);
                for (double& v : scaled) v *= config.forcing.F0;
                forcing = Sampled{samples.dt, std::move(scaled)};
                break;
            }
        }

        ResponseSeries series;
        KernelTable table;
        try {
            series = respond(evaluator, forcing, grid);
            table = evaluator.kernel_table(series.t);
        } catch (const GridTooCoarse& e) {
            throw ConfigError(std::string("grid: ") + e.what() +
                              " (increase n_points or shorten t_end)");
        }

        write_csv(config.csv_path, series, table);
        report.os << "# status: ok\n";
        report.write(config.report_path, kExitOk, elapsed_ms());
        std::cout << "wrote " << config.csv_path << " and " << config.report_path << "\n";
        return kExitOk;
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        report.os << "# status: numerical failure: " << e.what() << "\n";
        report.write(config.report_path, kExitNumerical, elapsed_ms());
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace viscorod
