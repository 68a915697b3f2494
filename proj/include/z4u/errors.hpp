/*
   Copyright 2026 The z4ucyclic authors

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

#ifndef Z4U_ERRORS_HPP
#define Z4U_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z4u {

/// Rejected input (bad n/k, malformed ideal descriptor, mismatched moduli).
class bad_input : public std::runtime_error {
   public:
    explicit bad_input(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or materialization would exceed the configured budget.
class budget_exceeded : public std::runtime_error {
   public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant failed; indicates a bug, not a user error.
class internal_error : public std::logic_error {
   public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace z4u

#endif
