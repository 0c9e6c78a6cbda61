// Copyright 2026 The qstar Authors
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

#ifndef QSTAR_EXCEPTION_HPP_
#define QSTAR_EXCEPTION_HPP_

#include <stdexcept>
#include <string>

namespace qstar {

  //! Base class of every exception thrown by qstar.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: bad partitions, out-of-range points, parse failures.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  //! Two objects of different degree were combined.
  class DimensionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  //! A documented precondition of an operation does not hold.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  //! The request is well formed but outside what the operation covers.
  class UnsupportedCaseError : public ContractError {
   public:
    using ContractError::ContractError;
  };

  //! A configured size bound was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Exact integer arithmetic left the range of std::uint64_t.
  class OverflowError : public ResourceError {
   public:
    using ResourceError::ResourceError;
  };

  //! A constructed object failed its own verification. Always a bug.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace qstar

#endif  // QSTAR_EXCEPTION_HPP_
