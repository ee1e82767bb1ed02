#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gsavbq/grid.hpp"
#include "gsavbq/stepper.hpp"
#include "gsavbq/study.hpp"

namespace gsavbq {

/// Shortest round-trip text for a double (17 significant digits, C locale).
std::string format_double(double v);

/// Columns t,E,r,xi,eta,div_norm; one record per report.
void write_csv(std::ostream& os, std::span<const StepReport> reports);
void write_csv(const std::filesystem::path& path, std::span<const StepReport> reports);

/// '#'-prefixed metadata lines, then the ErrorTable columns.
void write_csv(std::ostream& os, const ErrorTable& table);
void write_csv(const std::filesystem::path& path, const ErrorTable& table);

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;  ///< '#' lines without the marker
};

/// Numeric CSV parser for the files written above. Throws std::runtime_error
/// with path and line context on malformed input.
CsvData read_csv(std::istream& is);
CsvData read_csv(const std::filesystem::path& path);

/// Legacy ASCII STRUCTURED_POINTS with SCALARS theta, p and VECTORS u.
void write_vtk(std::ostream& os, const ScalarField& theta, const VectorField& u,
               const ScalarField& p);
void write_vtk(const std::filesystem::path& path, const ScalarField& theta, const VectorField& u,
               const ScalarField& p);

}  // namespace gsavbq
