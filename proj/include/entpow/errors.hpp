// Copyright 2026 The entpow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace entpow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or factor dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (non-unitary operator, unnormalized state, spin out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values or a result that violates a hard numerical bound.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Problem too large for an operation with an explicit size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace entpow
