#include "gsavbq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace gsavbq {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void write_csv(std::ostream& os, std::span<const StepReport> reports) {
    os << "t,E,r,xi,eta,div_norm\n";
    for (const StepReport& r : reports)
        os << format_double(r.t) << ',' << format_double(r.energy) << ',' << format_double(r.r)
           << ',' << format_double(r.xi) << ',' << format_double(r.eta) << ','
           << format_double(r.div_norm) << '\n';
}

void write_csv(const std::filesystem::path& path, std::span<const StepReport> reports) {
    std::ofstream os = open_out(path);
    write_csv(os, reports);
    finish(os, path);
}

void write_csv(std::ostream& os, const ErrorTable& table) {
    for (const auto& [k, v] : table.metadata) os << "# " << k << " = " << v << '\n';
    os << "i,tau,error_ubar,ratio_ubar,error_u,ratio_u,error_p,ratio_p,error_theta,ratio_theta,"
          "max_one_minus_eta,diverged\n";
    for (const ErrorRow& r : table.rows)
        os << r.i << ',' << format_double(r.tau) << ',' << format_double(r.error_ubar) << ','
           << format_double(r.ratio_ubar) << ',' << format_double(r.error_u) << ','
           << format_double(r.ratio_u) << ',' << format_double(r.error_p) << ','
           << format_double(r.ratio_p) << ',' << format_double(r.error_theta) << ','
           << format_double(r.ratio_theta) << ',' << format_double(r.max_one_minus_eta) << ','
           << (r.diverged ? 1 : 0) << '\n';
}

void write_csv(const std::filesystem::path& path, const ErrorTable& table) {
    std::ofstream os = open_out(path);
    write_csv(os, table);
    finish(os, path);
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + s + "'");
    return v;
}

}  // namespace

CsvData read_csv(std::istream& is) {
    CsvData out;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::size_t start = line.find_first_not_of("# ");
            out.comments.push_back(start == std::string::npos ? std::string() : line.substr(start));
            continue;
        }
        auto cells = split(line);
        if (!have_header) {
            out.header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != out.header.size())
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(out.header.size()) + " fields");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_double(c, line_no));
        out.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error("csv has no header");
    return out;
}

CsvData read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    try {
        return read_csv(is);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_vtk(std::ostream& os, const ScalarField& theta, const VectorField& u,
               const ScalarField& p) {
    require_same_grid(theta.grid(), u.grid());
    require_same_grid(theta.grid(), p.grid());
    const Grid& g = theta.grid();
    os << "# vtk DataFile Version 3.0\n"
       << "gsavbq fields\n"
       << "ASCII\n"
       << "DATASET STRUCTURED_POINTS\n"
       << "DIMENSIONS " << g.nx() << ' ' << g.ny() << " 1\n"
       << "ORIGIN " << format_double(g.x0()) << ' ' << format_double(g.y0()) << " 0\n"
       << "SPACING " << format_double(g.hx()) << ' ' << format_double(g.hy()) << " 1\n"
       << "POINT_DATA " << g.size() << '\n';
    const auto scalars = [&](const char* name, const ScalarField& f) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (double v : f.values()) os << format_double(v) << '\n';
    };
    scalars("theta", theta);
    scalars("p", p);
    os << "VECTORS u double\n";
    for (std::size_t k = 0; k < g.size(); ++k)
        os << format_double(u.x[k]) << ' ' << format_double(u.y[k]) << " 0\n";
}

void write_vtk(const std::filesystem::path& path, const ScalarField& theta, const VectorField& u,
               const ScalarField& p) {
    std::ofstream os = open_out(path);
    write_vtk(os, theta, u, p);
    finish(os, path);
}

}  // namespace gsavbq
