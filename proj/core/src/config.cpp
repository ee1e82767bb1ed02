#include "gsavbq/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsavbq/io.hpp"
#include "gsavbq/problems.hpp"

namespace gsavbq {

namespace pt = boost::property_tree;

RunConfig default_config(const std::string& problem) {
    RunConfig c;
    c.problem = problem;
    if (problem == "manufactured") {
        c.nx = c.ny = 129;
        c.T = std::numbers::pi;
        c.tau = c.T / 128.0;
    } else if (problem == "marsigli") {
        c.nx = 513;
        c.ny = 65;
        c.T = 10.0;
        c.tau = 1e-3;
        c.stab = "sb";
    } else if (problem == "shear") {
        c.nx = c.ny = 65;
        c.nu = 0.005;
        c.T = 1.0;
        c.tau = 1e-2;
        c.stab = "sb";
    } else if (problem == "quiescent") {
        c.nx = c.ny = 17;
        c.T = 1.0;
        c.tau = 1e-2;
    } else {
        throw std::invalid_argument("unknown problem '" + problem + "'");
    }
    return c;
}

StabKind parse_stab(const std::string& s) {
    if (s == "none") return StabKind::None;
    if (s == "sa") return StabKind::Sa;
    if (s == "sb") return StabKind::Sb;
    throw std::invalid_argument("stab must be none, sa or sb, got '" + s + "'");
}

std::string to_string(StabKind k) {
    switch (k) {
        case StabKind::Sa: return "sa";
        case StabKind::Sb: return "sb";
        default: return "none";
    }
}

BootstrapMode parse_bootstrap(const std::string& s) {
    if (s == "auto") return BootstrapMode::Auto;
    if (s == "exact") return BootstrapMode::Exact;
    if (s == "substep") return BootstrapMode::Substep;
    throw std::invalid_argument("bootstrap must be auto, exact or substep, got '" + s + "'");
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "problem.name", "problem.nx",   "problem.ny",      "problem.nu",  "problem.kappa",
        "problem.re",   "problem.ri",   "problem.pr",      "problem.rho", "problem.delta",
        "time.tau",     "time.T",       "time.bootstrap",  "scheme.k",    "scheme.l",
        "scheme.stab",  "scheme.cs",    "output.dir",      "output.snapshot_every"};
    return keys;
}

template <typename T>
void read(const pt::ptree& tree, const char* key, T& dst) {
    const pt::ptree::path_type path(key, '.');
    if (tree.get_child_optional(path)) dst = tree.get<T>(path);  // throws ptree_bad_data
}

void validate(const RunConfig& c) {
    if (c.nx < 3 || c.ny < 3) throw std::runtime_error("nx and ny must be >= 3");
    if (!(c.tau > 0.0) || !(c.T > 0.0)) throw std::runtime_error("tau and T must be positive");
    if (!(c.k >= 1.0) || !(c.l >= 1.0)) throw std::runtime_error("k and l must be >= 1");
    if (!(c.cs >= 0.0)) throw std::runtime_error("cs must be >= 0");
    if (c.snapshot_every < 0) throw std::runtime_error("snapshot_every must be >= 0");
    for (double v : {c.nu, c.kappa, c.re, c.pr})
        if (!(v > 0.0)) throw std::runtime_error("physical coefficients must be positive");
    parse_stab(c.stab);
    parse_bootstrap(c.bootstrap);
}

}  // namespace

RunConfig parse_config(std::istream& is) {
    pt::ptree tree;
    try {
        pt::ini_parser::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    for (const auto& [section, body] : tree) {
        if (body.empty()) throw std::runtime_error("config: key '" + section + "' outside a section");
        for (const auto& [key, value] : body) {
            (void)value;
            if (!known_keys().count(section + "." + key))
                throw std::runtime_error("config: unknown key '" + section + "." + key + "'");
        }
    }

    try {
        RunConfig c = default_config(tree.get<std::string>("problem.name", "manufactured"));
        read(tree, "problem.nx", c.nx);
        read(tree, "problem.ny", c.ny);
        read(tree, "problem.nu", c.nu);
        read(tree, "problem.kappa", c.kappa);
        read(tree, "problem.re", c.re);
        read(tree, "problem.ri", c.ri);
        read(tree, "problem.pr", c.pr);
        read(tree, "problem.rho", c.rho);
        read(tree, "problem.delta", c.delta);
        read(tree, "time.tau", c.tau);
        read(tree, "time.T", c.T);
        read(tree, "time.bootstrap", c.bootstrap);
        read(tree, "scheme.k", c.k);
        read(tree, "scheme.l", c.l);
        read(tree, "scheme.stab", c.stab);
        read(tree, "scheme.cs", c.cs);
        read(tree, "output.dir", c.out_dir);
        read(tree, "output.snapshot_every", c.snapshot_every);
        validate(c);
        return c;
    } catch (const pt::ptree_bad_data& e) {
        throw std::runtime_error(std::string("config: bad value: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config " + path.string());
    try {
        return parse_config(is);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os << "[problem]\n"
       << "name = " << c.problem << '\n'
       << "nx = " << c.nx << '\n'
       << "ny = " << c.ny << '\n'
       << "nu = " << format_double(c.nu) << '\n'
       << "kappa = " << format_double(c.kappa) << '\n'
       << "re = " << format_double(c.re) << '\n'
       << "ri = " << format_double(c.ri) << '\n'
       << "pr = " << format_double(c.pr) << '\n'
       << "rho = " << format_double(c.rho) << '\n'
       << "delta = " << format_double(c.delta) << '\n'
       << "\n[time]\n"
       << "tau = " << format_double(c.tau) << '\n'
       << "T = " << format_double(c.T) << '\n'
       << "bootstrap = " << c.bootstrap << '\n'
       << "\n[scheme]\n"
       << "k = " << format_double(c.k) << '\n'
       << "l = " << format_double(c.l) << '\n'
       << "stab = " << c.stab << '\n'
       << "cs = " << format_double(c.cs) << '\n'
       << "\n[output]\n"
       << "dir = " << c.out_dir << '\n'
       << "snapshot_every = " << c.snapshot_every << '\n';
    return os.str();
}

ProblemSpec build_spec(const RunConfig& c) {
    ProblemSpec s;
    if (c.problem == "manufactured") {
        if (c.nx != c.ny) throw std::invalid_argument("manufactured problem needs nx == ny");
        s = manufactured_spec(c.nx, c.nu, c.kappa);
    } else if (c.problem == "marsigli") {
        s = marsigli_spec(c.nx, c.ny, c.re, c.ri, c.pr);
    } else if (c.problem == "shear") {
        if (c.nx != c.ny) throw std::invalid_argument("shear problem needs nx == ny");
        s = shear_layer_spec(c.nx, c.rho, c.delta, c.nu);
    } else if (c.problem == "quiescent") {
        if (c.nx != c.ny) throw std::invalid_argument("quiescent problem needs nx == ny");
        s = quiescent_spec(c.nx);
    } else {
        throw std::invalid_argument("unknown problem '" + c.problem + "'");
    }
    s.T = c.T;
    return s;
}

SchemeParams build_scheme(const RunConfig& c) {
    SchemeParams p;
    p.bdf.k = c.k;
    p.bdf.l = c.l;
    p.bdf.validate();
    p.stab.kind = parse_stab(c.stab);
    p.stab.c_s = c.cs;
    return p;
}

RunOptions build_run_options(const RunConfig& c) {
    RunOptions o;
    o.tau = c.tau;
    o.T = c.T;
    o.bootstrap = parse_bootstrap(c.bootstrap);
    return o;
}

}  // namespace gsavbq
