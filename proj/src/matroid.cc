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

#include "zsm/matroid.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zsm {
namespace {

bool has_repeats(std::span<const ElementId> s) {
  std::vector<ElementId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

class LinearAccumulator final : public IndependenceAccumulator {
 public:
  explicit LinearAccumulator(const LinearMatroid& m) : matroid_(&m), basis_(m.spec()) {}

  bool spans(ElementId x) const override { return basis_.contains(matroid_->vector(x)); }
  void add(ElementId x) override {
    if (!basis_.insert(matroid_->vector(x))) throw std::invalid_argument("element is already spanned");
  }
  std::size_t size() const override { return basis_.dimension(); }
  std::unique_ptr<IndependenceAccumulator> clone() const override {
    return std::make_unique<LinearAccumulator>(*this);
  }

 private:
  const LinearMatroid* matroid_;
  SpanBasis basis_;
};

class FreeAccumulator final : public IndependenceAccumulator {
 public:
  explicit FreeAccumulator(std::size_t n) : used_(n, false) {}

  bool spans(ElementId x) const override { return used_.at(to_index(x)); }
  void add(ElementId x) override {
    if (used_.at(to_index(x))) throw std::invalid_argument("element is already spanned");
    used_[to_index(x)] = true;
    ++count_;
  }
  std::size_t size() const override { return count_; }
  std::unique_ptr<IndependenceAccumulator> clone() const override {
    return std::make_unique<FreeAccumulator>(*this);
  }

 private:
  std::vector<bool> used_;
  std::size_t count_ = 0;
};

class DirectSumAccumulator final : public IndependenceAccumulator {
 public:
  explicit DirectSumAccumulator(const DirectSumMatroid& m) : matroid_(&m) {
    for (std::size_t i = 0; i < m.summand_count(); ++i) parts_.push_back(m.summand(i).accumulator());
  }
  DirectSumAccumulator(const DirectSumAccumulator& other) : matroid_(other.matroid_), count_(other.count_) {
    for (const auto& part : other.parts_) parts_.push_back(part->clone());
  }

  bool spans(ElementId x) const override {
    auto [i, inner] = matroid_->tag(x);
    return parts_[i]->spans(inner);
  }
  void add(ElementId x) override {
    auto [i, inner] = matroid_->tag(x);
    parts_[i]->add(inner);
    ++count_;
  }
  std::size_t size() const override { return count_; }
  std::unique_ptr<IndependenceAccumulator> clone() const override {
    return std::make_unique<DirectSumAccumulator>(*this);
  }

 private:
  const DirectSumMatroid* matroid_;
  std::vector<std::unique_ptr<IndependenceAccumulator>> parts_;
  std::size_t count_ = 0;
};

}  // namespace

void Matroid::check_ids(std::span<const ElementId> s) const {
  for (ElementId x : s) {
    if (to_index(x) >= ground_size()) {
      throw std::out_of_range("foreign element id " + std::to_string(to_index(x)));
    }
  }
}

std::size_t Matroid::rank() const {
  std::vector<ElementId> all(ground_size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = make_id<ElementId>(i);
  return rank_unchecked(all);
}

std::size_t Matroid::rank(std::span<const ElementId> s) const {
  check_ids(s);
  return rank_unchecked(s);
}

bool Matroid::is_independent(std::span<const ElementId> s) const {
  check_ids(s);
  return !has_repeats(s) && rank_unchecked(s) == s.size();
}

bool Matroid::in_span(ElementId x, std::span<const ElementId> s) const {
  check_ids(std::span<const ElementId>(&x, 1));
  check_ids(s);
  std::vector<ElementId> with(s.begin(), s.end());
  with.push_back(x);
  return rank_unchecked(with) == rank_unchecked(s);
}

bool Matroid::same_span(std::span<const ElementId> a, std::span<const ElementId> b) const {
  check_ids(a);
  check_ids(b);
  std::vector<ElementId> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_unchecked(both);
  return rank_unchecked(a) == r && rank_unchecked(b) == r;
}

std::unique_ptr<IndependenceAccumulator> Matroid::accumulator() const { return make_accumulator(); }

LinearMatroid::LinearMatroid(FieldSpec spec, std::vector<GroupVector> vectors)
    : spec_(spec), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (!(v.spec() == spec_)) throw std::invalid_argument("linear matroid vectors must share one field spec");
  }
}

const GroupVector& LinearMatroid::vector(ElementId x) const {
  if (to_index(x) >= vectors_.size()) {
    throw std::out_of_range("foreign element id " + std::to_string(to_index(x)));
  }
  return vectors_[to_index(x)];
}

std::size_t LinearMatroid::rank_unchecked(std::span<const ElementId> s) const {
  SpanBasis basis(spec_);
  for (ElementId x : s) {
    basis.insert(vectors_[to_index(x)]);
    if (basis.dimension() == spec_.d()) break;
  }
  return basis.dimension();
}

std::unique_ptr<IndependenceAccumulator> LinearMatroid::make_accumulator() const {
  return std::make_unique<LinearAccumulator>(*this);
}

std::size_t FreeMatroid::rank_unchecked(std::span<const ElementId> s) const {
  std::vector<ElementId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::unique_ptr<IndependenceAccumulator> FreeMatroid::make_accumulator() const {
  return std::make_unique<FreeAccumulator>(size_);
}

DirectSumMatroid::DirectSumMatroid(std::vector<std::shared_ptr<const Matroid>> summands)
    : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("direct sum of an empty list");
  offsets_.push_back(0);
  for (const auto& m : summands_) {
    if (!m) throw std::invalid_argument("direct sum summand is null");
    offsets_.push_back(offsets_.back() + m->ground_size());
  }
}

std::pair<std::size_t, ElementId> DirectSumMatroid::tag(ElementId x) const {
  const std::size_t i = to_index(x);
  if (i >= ground_size()) throw std::out_of_range("foreign element id " + std::to_string(i));
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i) - 1;
  const auto summand = static_cast<std::size_t>(it - offsets_.begin());
  return {summand, make_id<ElementId>(i - *it)};
}

ElementId DirectSumMatroid::lift(std::size_t summand, ElementId inner) const {
  if (summand >= summands_.size() || to_index(inner) >= summands_[summand]->ground_size()) {
    throw std::out_of_range("direct sum lift out of range");
  }
  return make_id<ElementId>(offsets_[summand] + to_index(inner));
}

std::size_t DirectSumMatroid::rank_unchecked(std::span<const ElementId> s) const {
  std::vector<std::vector<ElementId>> slices(summands_.size());
  for (ElementId x : s) {
    auto [i, inner] = tag(x);
    slices[i].push_back(inner);
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < slices.size(); ++i) total += summands_[i]->rank(slices[i]);
  return total;
}

std::unique_ptr<IndependenceAccumulator> DirectSumMatroid::make_accumulator() const {
  return std::make_unique<DirectSumAccumulator>(*this);
}

std::shared_ptr<const DirectSumMatroid> direct_sum(std::vector<std::shared_ptr<const Matroid>> ms) {
  return std::make_shared<const DirectSumMatroid>(std::move(ms));
}

}  // namespace zsm
