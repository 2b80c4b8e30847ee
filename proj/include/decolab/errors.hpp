// Copyright 2026 The decolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECOLAB_ERRORS_HPP
#define DECOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decolab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotFiniteError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

/// A parameter (r, p, gamma, t) outside its physical range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that fails density-matrix validation (trace, hermiticity, PSD).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Kraus set that violates the completeness relation.
class InvalidChannelError : public Error {
 public:
  using Error::Error;
};

class NotXStateError : public Error {
 public:
  using Error::Error;
};

/// Bad sweep configuration or unknown channel identifier.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace decolab

#endif  // DECOLAB_ERRORS_HPP
