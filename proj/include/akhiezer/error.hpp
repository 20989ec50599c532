// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace akhiezer {

// Numbering matches akz_status in akhiezer.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDomain = 2,
  kGridMismatch = 3,
  kQuadrature = 4,
  kOverflow = 5,
  kIo = 6,
  kParse = 7,
  kInternal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Quadrature failure carrying the error estimate that was reached.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(ErrorCode::kQuadrature, what), achieved_(achieved) {}

  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace akhiezer
