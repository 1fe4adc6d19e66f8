#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cycloptics/curve.hpp"

namespace cycloptics {

/// Full-precision decimal rendering (17 significant digits round-trips a
/// double exactly).
inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Curve schema: header `param,x,y`, one row per sample.
inline void write_curve_csv(std::ostream& out, const PlanarCurve& curve) {
    out << "param,x,y\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << csv_number(curve.params()[i]) << ',' << csv_number(curve.points()[i].x)
            << ',' << csv_number(curve.points()[i].y) << '\n';
    }
}

/// Generic numeric table with a one-line header.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline void write_csv(std::ostream& out, const CsvTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_number(row[i]);
        out << '\n';
    }
}

}  // namespace cycloptics
