// Copyright 2026 The cftkit Authors. All Rights Reserved.
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

#include "cft/error.hpp"

#include <algorithm>

namespace cft {
namespace {

std::string located(const std::string& message, SourceLoc loc) {
  return "line " + std::to_string(loc.line) + ", column " +
         std::to_string(loc.column) + ": " + message;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceLoc loc)
    : Error(located(message, loc)), message_(message), loc_(loc) {}

NamespaceMismatch::NamespaceMismatch(std::vector<std::string> only_left,
                                     std::vector<std::string> only_right)
    : Error("basic-event namespaces differ; only in left: " +
            join(only_left) + "; only in right: " + join(only_right)),
      only_left_(std::move(only_left)),
      only_right_(std::move(only_right)) {}

}  // namespace cft
