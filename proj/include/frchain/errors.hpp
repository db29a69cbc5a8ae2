// Copyright 2026 The frchain Authors
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

namespace frchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside its admissible window.
class RangeViolation : public Error {
 public:
  using Error::Error;
};

/// Chain-length parity does not match the requested family.
class ParityMismatch : public Error {
 public:
  using Error::Error;
};

/// Chain too short for the requested family.
class TooSmall : public Error {
 public:
  using Error::Error;
};

/// A coupling square-root argument came out non-positive.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class NotPersymmetric : public Error {
 public:
  using Error::Error;
};

/// Full-space oracle refused: 2^(N+1) would be too large.
class DimensionCap : public Error {
 public:
  using Error::Error;
};

/// Perfect transfer requested for a model that never reaches it.
class NoPstScheduled : public Error {
 public:
  using Error::Error;
};

/// Malformed file or flag value.
class ParseFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace frchain
