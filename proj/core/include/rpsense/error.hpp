// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rpsense {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, bad index set,
/// out-of-range parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated at a point where one of its factors is singular.
class DomainError : public Error {
 public:
  DomainError(std::string factor, const std::string& what)
      : Error(what), factor_(std::move(factor)) {}

  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

}  // namespace rpsense
