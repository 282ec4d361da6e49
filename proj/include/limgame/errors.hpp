/*
 * Copyright 2026 The limgame Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace limgame {

/// Reasons an instance can be rejected while parsing or validating.
enum class ValidationErrorKind {
    MalformedDocument,
    MalformedRational,
    DuplicateState,
    UnknownState,
    DuplicateEdge,
    NoOutgoingEdge,
    NonPositiveProbability,
    DistributionSum,
    MissingProbability,
    UnexpectedProbability,
    MissingReward,
};

const char* to_string(ValidationErrorKind kind);

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ValidationErrorKind kind() const noexcept { return kind_; }

private:
    ValidationErrorKind kind_;
};

/// An operation was called on input outside its domain (wrong graph kind,
/// nonpositive rewards where positive ones are required, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A strategy enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (LP certificate, determinacy witness).
/// Never a legitimate outcome for valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace limgame
