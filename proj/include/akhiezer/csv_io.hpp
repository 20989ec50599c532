// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "akhiezer/grid.hpp"

namespace akhiezer::io {

/// Exact header line of signal files.
inline constexpr const char* kSignalHeader = "t,re1,im1,re2,im2";

/// Rows t,re1,im1,re2,im2 with 17 significant digits.
void write_csv(std::ostream& os, const VectorSignal& x);

/// Parses a signal file. The header must match kSignalHeader, every row
/// needs five finite numbers and t must form a uniform grid. Throws kParse.
VectorSignal read_csv(std::istream& is);

VectorSignal read_csv_file(const std::string& path);

/// Writes to a temporary sibling and renames, so a failed write leaves no
/// partial file behind.
void write_csv_file(const std::string& path, const VectorSignal& x);

/// t,dev1,dev2 with |a_k - b_k| per component.
void write_deviation_csv_file(const std::string& path, const VectorSignal& a,
                              const VectorSignal& b);

/// Plain text file written the same way as write_csv_file.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace akhiezer::io
