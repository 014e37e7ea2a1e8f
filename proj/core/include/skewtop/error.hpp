/*
 * Copyright 2026 The skewtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SKEWTOP_ERROR_HPP
#define SKEWTOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace skewtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (odd dimension, degenerate
/// eigenvalues, non-symmetric series, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds a cost guard of an exact algorithm.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewtop

#endif  // SKEWTOP_ERROR_HPP
