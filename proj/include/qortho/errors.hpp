// Copyright 2026 The qortho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qortho {

// Root of every error the library throws. `kind()` is the stable name used in
// machine-readable output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QORTHO_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

QORTHO_DEFINE_ERROR(DimensionError)
QORTHO_DEFINE_ERROR(HermitianityError)
QORTHO_DEFINE_ERROR(EmptyInputError)
QORTHO_DEFINE_ERROR(BasisError)
QORTHO_DEFINE_ERROR(NotCPError)
QORTHO_DEFINE_ERROR(InputError)
QORTHO_DEFINE_ERROR(InternalConsistencyError)

#undef QORTHO_DEFINE_ERROR

// Raised when a proposed span fails one of the algebra axioms. Carries the
// offending residual so callers can report how far off the input was.
class NotAnAlgebraError : public Error {
 public:
  NotAnAlgebraError(const std::string& what, double residual)
      : NotAnAlgebraError("NotAnAlgebraError", what, residual) {}
  double residual() const noexcept { return residual_; }

 protected:
  NotAnAlgebraError(std::string kind, const std::string& what, double residual)
      : Error(std::move(kind), what), residual_(residual) {}

 private:
  double residual_;
};

class NotUnitalError : public NotAnAlgebraError {
 public:
  NotUnitalError(const std::string& what, double residual)
      : NotAnAlgebraError("NotUnitalError", what, residual) {}
};

class NotStarClosedError : public NotAnAlgebraError {
 public:
  NotStarClosedError(const std::string& what, double residual)
      : NotAnAlgebraError("NotStarClosedError", what, residual) {}
};

}  // namespace qortho
