// Copyright 2026 The postdist Authors
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

#ifndef POSTDIST_ERROR_HPP
#define POSTDIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace postdist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-finite entries, dimension mismatch, wrong shapes.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A matrix or optimization space would exceed the configured dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A named parameter (epsilon, dimension, count) is outside its allowed range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A channel fails one of the validity conditions required by an operation.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class NotTraceNonincreasingError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

class InvalidPostselectionError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

class NotCompletelyPositiveError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

class EmptyChannelError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

/// A theorem hypothesis (trace preservation, isometry) does not hold.
class PreconditionError : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

/// Renormalization by a vanishing postselection probability.
class NumericalDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Channel or result file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace postdist

#endif  // POSTDIST_ERROR_HPP
