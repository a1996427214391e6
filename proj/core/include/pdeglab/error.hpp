// Copyright 2026 The pdeglab Authors.
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

namespace pdeglab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument shapes disagree (arity, vector length, index range).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation precondition on the *content* of an argument failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A runtime verification of a constructed object failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdeglab
