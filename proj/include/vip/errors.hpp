// Copyright 2025 The vipbench Authors
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

#ifndef VIP_ERRORS_HPP
#define VIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vip {

// Caller broke a documented precondition (bad dimensions, out-of-range
// index, epochs queried out of order, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

// Invalid user-facing parameters (spectra ordering, seed lists, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An iterative routine failed to meet its numerical contract.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Iterate norm blew past the divergence guard. Carries where it happened.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long epoch, int inner_index)
      : std::runtime_error(what), epoch_(epoch), inner_index_(inner_index) {}
  long epoch() const { return epoch_; }
  int inner_index() const { return inner_index_; }

 private:
  long epoch_;
  int inner_index_;
};

// Config document failed validation; message names the offending key path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vip

#endif  // VIP_ERRORS_HPP
