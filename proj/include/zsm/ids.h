// Copyright 2026 The Authors.
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

#ifndef ZSM_IDS_H_
#define ZSM_IDS_H_

#include <cstddef>
#include <cstdint>

namespace zsm {

// Dense integer identifiers. Distinct enum types keep them from mixing.
enum class ElementId : std::uint32_t {};
enum class Vertex : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

template <typename Id>
constexpr std::size_t to_index(Id id) {
  return static_cast<std::size_t>(id);
}

template <typename Id>
constexpr Id make_id(std::size_t index) {
  return static_cast<Id>(static_cast<std::uint32_t>(index));
}

}  // namespace zsm

#endif  // ZSM_IDS_H_
