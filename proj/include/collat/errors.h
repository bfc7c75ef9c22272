// Copyright 2026 The Collat Authors.
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

#ifndef COLLAT_ERRORS_H_
#define COLLAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace collat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CyclicInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The instance exceeds a state-space guard. Solvers refuse rather than
// approximate.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Schema or syntax problem in a JSON document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace collat

#endif  // COLLAT_ERRORS_H_
