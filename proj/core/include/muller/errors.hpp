/*
 * Copyright 2026 The muller-hurry Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace muller {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define MULLER_DEFINE_ERROR(name)                 \
    class name : public Error                     \
    {                                             \
    public:                                       \
        using Error::Error;                       \
    }

MULLER_DEFINE_ERROR(InvalidArena);
MULLER_DEFINE_ERROR(NotASubarena);
MULLER_DEFINE_ERROR(InvalidCondition);
MULLER_DEFINE_ERROR(OutOfUniverse);
MULLER_DEFINE_ERROR(UniverseTooLarge);
MULLER_DEFINE_ERROR(LengthOverflow);
MULLER_DEFINE_ERROR(OffDomain);
MULLER_DEFINE_ERROR(InconsistentPlay);
MULLER_DEFINE_ERROR(ThresholdOverflow);
MULLER_DEFINE_ERROR(StateBudgetExceeded);
MULLER_DEFINE_ERROR(AcyclicityViolation);
MULLER_DEFINE_ERROR(BudgetExceeded);
MULLER_DEFINE_ERROR(NotEventuallyPeriodic);
MULLER_DEFINE_ERROR(IllegalMove);
MULLER_DEFINE_ERROR(SemanticError);
MULLER_DEFINE_ERROR(UnknownStrategy);

#undef MULLER_DEFINE_ERROR

/// A game file could not be tokenized or does not follow the grammar.
class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A strategy was queried at a history it is not defined on during a refereed play.
class StrategyOffDomain : public Error
{
public:
    StrategyOffDomain(const std::string& message, std::vector<unsigned> prefix)
        : Error(message), prefix_(std::move(prefix)) {}

    const std::vector<unsigned>& prefix() const noexcept { return prefix_; }

private:
    std::vector<unsigned> prefix_;
};

} // namespace muller
