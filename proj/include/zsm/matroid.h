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

#ifndef ZSM_MATROID_H_
#define ZSM_MATROID_H_

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "zsm/gf_algebra.h"
#include "zsm/ids.h"

namespace zsm {

// Incremental independence handle: an independent set that grows one
// element at a time. Cheaper than repeated oracle calls on growing sets.
class IndependenceAccumulator {
 public:
  virtual ~IndependenceAccumulator() = default;
  // True iff x lies in the span of the accumulated set (in particular if x
  // was already added).
  virtual bool spans(ElementId x) const = 0;
  // Precondition: !spans(x).
  virtual void add(ElementId x) = 0;
  virtual std::size_t size() const = 0;
  virtual std::unique_ptr<IndependenceAccumulator> clone() const = 0;

  bool can_add(ElementId x) const { return !spans(x); }
};

// Matroid exposed through an independence/rank oracle over the dense ground
// set {0, ..., ground_size()-1}. Immutable; every query is const and pure.
//
// Set arguments may list an element more than once. A list with repeats is
// never independent, and rank() ignores the repeats.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual std::size_t ground_size() const = 0;
  std::size_t rank() const;
  std::size_t rank(std::span<const ElementId> s) const;
  bool is_independent(std::span<const ElementId> s) const;
  bool in_span(ElementId x, std::span<const ElementId> s) const;
  // span(a) == span(b).
  bool same_span(std::span<const ElementId> a, std::span<const ElementId> b) const;

  std::unique_ptr<IndependenceAccumulator> accumulator() const;

  // Throws std::out_of_range naming the first foreign id.
  void check_ids(std::span<const ElementId> s) const;

 protected:
  // Ids already validated.
  virtual std::size_t rank_unchecked(std::span<const ElementId> s) const = 0;
  virtual std::unique_ptr<IndependenceAccumulator> make_accumulator() const = 0;
};

// Independent iff the assigned vectors are linearly independent over F_p.
// Distinct elements may carry equal vectors (parallel elements).
class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(FieldSpec spec, std::vector<GroupVector> vectors);

  std::size_t ground_size() const override { return vectors_.size(); }
  const FieldSpec& spec() const { return spec_; }
  const GroupVector& vector(ElementId x) const;
  std::span<const GroupVector> vectors() const { return vectors_; }

 protected:
  std::size_t rank_unchecked(std::span<const ElementId> s) const override;
  std::unique_ptr<IndependenceAccumulator> make_accumulator() const override;

 private:
  FieldSpec spec_;
  std::vector<GroupVector> vectors_;
};

// Every subset independent.
class FreeMatroid final : public Matroid {
 public:
  explicit FreeMatroid(std::size_t ground_size) : size_(ground_size) {}

  std::size_t ground_size() const override { return size_; }

 protected:
  std::size_t rank_unchecked(std::span<const ElementId> s) const override;
  std::unique_ptr<IndependenceAccumulator> make_accumulator() const override;

 private:
  std::size_t size_;
};

// Direct sum M_1 + ... + M_m. Element ids are assigned summand-major: the
// elements of summand i occupy a contiguous block after those of summand i-1.
class DirectSumMatroid final : public Matroid {
 public:
  // Throws std::invalid_argument on an empty list or a null summand.
  explicit DirectSumMatroid(std::vector<std::shared_ptr<const Matroid>> summands);

  std::size_t ground_size() const override { return offsets_.back(); }
  std::size_t summand_count() const { return summands_.size(); }
  const Matroid& summand(std::size_t i) const { return *summands_.at(i); }

  // (summand index, inner element).
  std::pair<std::size_t, ElementId> tag(ElementId x) const;
  ElementId lift(std::size_t summand, ElementId inner) const;

 protected:
  std::size_t rank_unchecked(std::span<const ElementId> s) const override;
  std::unique_ptr<IndependenceAccumulator> make_accumulator() const override;

 private:
  std::vector<std::shared_ptr<const Matroid>> summands_;
  std::vector<std::size_t> offsets_;  // size summands_ + 1
};

std::shared_ptr<const DirectSumMatroid> direct_sum(std::vector<std::shared_ptr<const Matroid>> ms);

}  // namespace zsm

#endif  // ZSM_MATROID_H_
