// Copyright 2026 The qroute Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qroute {

/// Malformed or out-of-range input (bad schema, negative lengths, size guards).
class InvalidInput : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// The routing instance admits no feasible assignment.
class InfeasibleInstance : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace qroute
