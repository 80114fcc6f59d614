// Copyright 2026 The cjones Authors
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

#ifndef CJONES_ERRORS_HPP
#define CJONES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cjones {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by bad user input. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};
class AdmissibilityError : public InputError {
 public:
  using InputError::InputError;
};
class NotPlatCompatible : public InputError {
 public:
  using InputError::InputError;
};
class NotFound : public InputError {
 public:
  using InputError::InputError;
};
class OutOfRange : public InputError {
 public:
  using InputError::InputError;
};
class ParseError : public InputError {
 public:
  using InputError::InputError;
};
class RangeError : public InputError {
 public:
  using InputError::InputError;
};
class PlatError : public InputError {
 public:
  using InputError::InputError;
};
class OddCrossingParity : public InputError {
 public:
  using InputError::InputError;
};
class WidthError : public InputError {
 public:
  using InputError::InputError;
};
class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};
// Composition of groupoid elements whose boundary colorings disagree.
class ColorMismatch : public InputError {
 public:
  using InputError::InputError;
};

// Work would exceed a configured size cap. The CLI maps this to exit code 2.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cjones

#endif  // CJONES_ERRORS_HPP
