// Copyright 2026 The unruhcorr Authors
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

namespace unruh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the density-matrix checks (trace, PSD) or a state
/// vector is not normalized.
class InvalidState : public Error {
 public:
  using Error::Error;
};

class BadSubsystemSpec : public Error {
 public:
  using Error::Error;
};

class OptimizerFailure : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

/// Out-of-range configuration or parameter value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace unruh
