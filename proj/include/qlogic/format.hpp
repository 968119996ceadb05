// Copyright 2026 The qlogic Authors
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

#ifndef QLOGIC_FORMAT_HPP
#define QLOGIC_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace qlogic {

/// Pinned float formatting: 12 significant digits, shortest form ("%.12g").
/// Reports must be byte-stable, so every float goes through here.
std::string format_float(double x);

/// FNV-1a 64-bit content digest, rendered as "fnv1a:<16 hex digits>".
std::string content_digest(std::string_view data);

}  // namespace qlogic

#endif
