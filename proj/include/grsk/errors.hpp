/*
   Copyright 2026 The grsk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace grsk {

/// Argument outside the mathematical domain (nonpositive weight, bad shape...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a structural precondition (mismatched lengths, partial array...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Problem too large for the requested exact/deterministic method.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at a pole of a meromorphic function.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, double location)
        : std::domain_error(what), location_(location) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// Iterative method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Objective has no maximum (iterates escape to infinity).
class UnboundedError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

/// Computed result broke an invariant it must satisfy (ordering, sign...).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace grsk
