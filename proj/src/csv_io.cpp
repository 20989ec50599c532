// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/csv_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "akhiezer/error.hpp"

namespace akhiezer::io {
namespace {

std::string format(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

double parse_field(std::string_view field, std::size_t line) {
  // from_chars rejects leading '+' and whitespace; trim spaces only.
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": bad number '" +
                                       std::string(field) + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& os, const VectorSignal& x) {
  const GridDesc& g = x.grid();
  os << kSignalHeader << '\n';
  for (std::size_t k = 0; k < g.n; ++k) {
    os << format(g.t(k)) << ',' << format(x.x1[k].real()) << ',' << format(x.x1[k].imag())
       << ',' << format(x.x2[k].real()) << ',' << format(x.x2[k].imag()) << '\n';
  }
}

VectorSignal read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::kParse, "empty signal file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSignalHeader) {
    throw Error(ErrorCode::kParse, "expected header '" + std::string(kSignalHeader) +
                                       "', got '" + line + "'");
  }
  std::vector<double> t;
  std::vector<cdouble> a, b;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::array<double, 5> v{};
    std::size_t field = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (field >= v.size()) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": too many fields");
      }
      v[field++] = parse_field(std::string_view(line).substr(start, comma - start), lineno);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (field != v.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected 5 fields");
    }
    t.push_back(v[0]);
    a.emplace_back(v[1], v[2]);
    b.emplace_back(v[3], v[4]);
  }
  if (t.size() < 2) throw Error(ErrorCode::kParse, "signal needs at least 2 rows");

  const GridDesc grid{t.front(), (t.back() - t.front()) / static_cast<double>(t.size() - 1),
                      t.size()};
  if (!(grid.delta > 0.0)) throw Error(ErrorCode::kParse, "t must be increasing");
  const double slack = 1e-9 * std::max(grid.delta, std::abs(t.front()) + std::abs(t.back()));
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k] - grid.t(k)) > slack) {
      throw Error(ErrorCode::kParse, "t is not uniformly spaced at row " + std::to_string(k + 2));
    }
  }
  return VectorSignal(GridSignal(grid, std::move(a)), GridSignal(grid, std::move(b)));
}

VectorSignal read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_csv(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot move output into '" + path + "'");
  }
}

void write_csv_file(const std::string& path, const VectorSignal& x) {
  std::ostringstream os;
  write_csv(os, x);
  write_text_file(path, os.str());
}

void write_deviation_csv_file(const std::string& path, const VectorSignal& a,
                              const VectorSignal& b) {
  require_same_grid(a.grid(), b.grid());
  std::ostringstream os;
  os << "t,dev1,dev2\n";
  for (std::size_t k = 0; k < a.grid().n; ++k) {
    os << format(a.grid().t(k)) << ',' << format(std::abs(a.x1[k] - b.x1[k])) << ','
       << format(std::abs(a.x2[k] - b.x2[k])) << '\n';
  }
  write_text_file(path, os.str());
}

}  // namespace akhiezer::io
