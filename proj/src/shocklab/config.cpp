#include "shocklab/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shocklab {

void RunConfig::validate() const {
    gas.validate();
    data.validate();
    if (variant == Variant::mhd_h1_zero && gas.H1 != 0.0)
        throw std::invalid_argument("variant mhd-h10 requires gas.H1 = 0");
    if (variant == Variant::mhd_h1_nonzero && gas.H1 == 0.0)
        throw std::invalid_argument("variant mhd requires gas.H1 != 0");
    if (solver.nx < 32) throw std::invalid_argument("solver.nx too small");
    if (solver.nz < 2) throw std::invalid_argument("solver.nz too small");
    if (!(solver.cfl > 0.0 && solver.cfl <= 0.9))
        throw std::invalid_argument("solver.cfl must be in (0, 0.9]");
    if (!(solver.rho_stop > 0.0 && solver.rho_stop < 1.0))
        throw std::invalid_argument("solver.rho_stop must be in (0, 1)");
    if (!(solver.t_max_factor > 0.0))
        throw std::invalid_argument("solver.t_max_factor must be > 0");
    if (!(solver.window_halfwidth_etas >= 2.0))
        throw std::invalid_argument("solver.window_halfwidth_etas must be >= 2");
    if (solver.bundle_stride < 1) throw std::invalid_argument("solver.bundle_stride must be >= 1");
    for (double e : sweep.etas)
        if (!(e > 0.0 && e < 0.25)) throw std::invalid_argument("sweep.etas entries must be in (0, 1/4)");
    for (double t : sweep.thetas)
        if (!(t > 0.0 && t <= 0.05))
            throw std::invalid_argument("sweep.thetas entries must be in (0, 0.05]");
}

namespace {

struct KeyRef {
    enum class Type { d, i, s, u64, dlist } type;
    void* ptr;
};

struct Schema {
    std::map<std::string, KeyRef> keys;

    void add(const std::string& k, double* p) { keys[k] = {KeyRef::Type::d, p}; }
    void add(const std::string& k, int* p) { keys[k] = {KeyRef::Type::i, p}; }
    void add(const std::string& k, std::string* p) { keys[k] = {KeyRef::Type::s, p}; }
    void add(const std::string& k, std::uint64_t* p) { keys[k] = {KeyRef::Type::u64, p}; }
    void add(const std::string& k, std::vector<double>* p) { keys[k] = {KeyRef::Type::dlist, p}; }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ":" << col << ": " << msg;
    throw std::invalid_argument(os.str());
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& v) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        fail(origin, line, 1, "key '" + key + "' expects a real number, got '" + v + "'");
    }
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// variant and limiter ride through string fields during parsing
struct Raw {
    std::string variant = "euler";
    std::string limiter = "eno2";
};

Schema build_schema(RunConfig& c, Raw& raw) {
    Schema s;
    s.add("run.variant", &raw.variant);
    s.add("run.out_dir", &c.out_dir);
    s.add("run.seed", &c.seed);
    s.add("gas.A", &c.gas.A);
    s.add("gas.gamma", &c.gas.gamma);
    s.add("gas.mu0", &c.gas.mu0);
    s.add("gas.H1", &c.gas.H1);
    s.add("gas.delta_ball", &c.gas.delta_ball);
    s.add("data.alpha", &c.data.alpha);
    s.add("data.delta_log", &c.data.delta_log);
    s.add("data.m", &c.data.m);
    s.add("data.theta", &c.data.theta);
    s.add("data.eta", &c.data.eta);
    s.add("solver.nx", &c.solver.nx);
    s.add("solver.nz", &c.solver.nz);
    s.add("solver.cfl", &c.solver.cfl);
    s.add("solver.rho_stop", &c.solver.rho_stop);
    s.add("solver.t_max_factor", &c.solver.t_max_factor);
    s.add("solver.window_halfwidth_etas", &c.solver.window_halfwidth_etas);
    s.add("solver.bundle_stride", &c.solver.bundle_stride);
    s.add("solver.snapshot_count", &c.solver.snapshot_count);
    s.add("solver.limiter", &raw.limiter);
    s.add("sweep.etas", &c.sweep.etas);
    s.add("sweep.thetas", &c.sweep.thetas);
    return s;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    Raw raw;
    Schema schema = build_schema(cfg, raw);
    std::set<std::string> seen;

    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') fail(origin, lineno, 1, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) fail(origin, lineno, 1, "empty section name");
            continue;
        }
        const size_t eq = t.find('=');
        if (eq == std::string::npos) fail(origin, lineno, 1, "expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, 1, "empty key");
        if (section.empty()) fail(origin, lineno, 1, "key '" + key + "' outside any section");
        const std::string full = section + "." + key;

        auto it = schema.keys.find(full);
        if (it == schema.keys.end()) fail(origin, lineno, 1, "unknown key '" + full + "'");
        if (!seen.insert(full).second) fail(origin, lineno, 1, "duplicate key '" + full + "'");

        switch (it->second.type) {
            case KeyRef::Type::d:
                *static_cast<double*>(it->second.ptr) = parse_double(origin, lineno, full, val);
                break;
            case KeyRef::Type::i: {
                try {
                    size_t pos = 0;
                    const int v = std::stoi(val, &pos);
                    if (pos != val.size()) throw std::invalid_argument("");
                    *static_cast<int*>(it->second.ptr) = v;
                } catch (...) {
                    fail(origin, lineno, 1, "key '" + full + "' expects an integer, got '" + val + "'");
                }
                break;
            }
            case KeyRef::Type::u64: {
                try {
                    size_t pos = 0;
                    const unsigned long long v = std::stoull(val, &pos);
                    if (pos != val.size()) throw std::invalid_argument("");
                    *static_cast<std::uint64_t*>(it->second.ptr) = v;
                } catch (...) {
                    fail(origin, lineno, 1,
                         "key '" + full + "' expects an unsigned integer, got '" + val + "'");
                }
                break;
            }
            case KeyRef::Type::s:
                *static_cast<std::string*>(it->second.ptr) = val;
                break;
            case KeyRef::Type::dlist: {
                auto* out = static_cast<std::vector<double>*>(it->second.ptr);
                out->clear();
                std::string item;
                std::istringstream vs(val);
                while (std::getline(vs, item, ',')) {
                    item = trim(item);
                    if (item.empty()) fail(origin, lineno, 1, "empty list item in '" + full + "'");
                    out->push_back(parse_double(origin, lineno, full, item));
                }
                break;
            }
        }
    }

    cfg.variant = variant_from_name(raw.variant);
    cfg.solver.limiter = limiter_from_name(raw.limiter);
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "[run]\n";
    os << "variant = " << variant_name(cfg.variant) << "\n";
    os << "out_dir = " << cfg.out_dir << "\n";
    os << "seed = " << cfg.seed << "\n";
    os << "\n[gas]\n";
    os << "A = " << fmt_double(cfg.gas.A) << "\n";
    os << "gamma = " << fmt_double(cfg.gas.gamma) << "\n";
    os << "mu0 = " << fmt_double(cfg.gas.mu0) << "\n";
    os << "H1 = " << fmt_double(cfg.gas.H1) << "\n";
    os << "delta_ball = " << fmt_double(cfg.gas.delta_ball) << "\n";
    os << "\n[data]\n";
    os << "alpha = " << fmt_double(cfg.data.alpha) << "\n";
    os << "delta_log = " << fmt_double(cfg.data.delta_log) << "\n";
    os << "m = " << fmt_double(cfg.data.m) << "\n";
    os << "theta = " << fmt_double(cfg.data.theta) << "\n";
    os << "eta = " << fmt_double(cfg.data.eta) << "\n";
    os << "\n[solver]\n";
    os << "nx = " << cfg.solver.nx << "\n";
    os << "nz = " << cfg.solver.nz << "\n";
    os << "cfl = " << fmt_double(cfg.solver.cfl) << "\n";
    os << "rho_stop = " << fmt_double(cfg.solver.rho_stop) << "\n";
    os << "t_max_factor = " << fmt_double(cfg.solver.t_max_factor) << "\n";
    os << "window_halfwidth_etas = " << fmt_double(cfg.solver.window_halfwidth_etas) << "\n";
    os << "bundle_stride = " << cfg.solver.bundle_stride << "\n";
    os << "snapshot_count = " << cfg.solver.snapshot_count << "\n";
    os << "limiter = " << (cfg.solver.limiter == Limiter::eno2 ? "eno2" : "none") << "\n";
    if (!cfg.sweep.etas.empty() || !cfg.sweep.thetas.empty()) {
        os << "\n[sweep]\n";
        const auto list = [&](const char* key, const std::vector<double>& xs) {
            if (xs.empty()) return;
            os << key << " = ";
            for (size_t i = 0; i < xs.size(); ++i)
                os << (i ? ", " : "") << fmt_double(xs[i]);
            os << "\n";
        };
        list("etas", cfg.sweep.etas);
        list("thetas", cfg.sweep.thetas);
    }
    return os.str();
}

void save_config(const RunConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file '" + path + "'");
    out << dump_config(cfg);
}

}  // namespace shocklab
