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

#include <doctest.h>

#include <bit>
#include <memory>
#include <random>

#include "zsm/matroid.h"
#include "zsm/random_instances.h"

using zsm::ElementId;
using zsm::FieldSpec;
using zsm::GroupVector;

namespace {

std::vector<ElementId> ids(std::initializer_list<std::size_t> xs) {
  std::vector<ElementId> out;
  for (auto x : xs) out.push_back(zsm::make_id<ElementId>(x));
  return out;
}

std::vector<ElementId> subset(std::uint32_t mask) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (mask >> i & 1) out.push_back(zsm::make_id<ElementId>(i));
  }
  return out;
}

std::shared_ptr<const zsm::LinearMatroid> linear(FieldSpec spec, std::vector<std::vector<std::uint64_t>> rows) {
  std::vector<GroupVector> vs;
  for (auto& r : rows) vs.emplace_back(spec, std::move(r));
  return std::make_shared<const zsm::LinearMatroid>(spec, std::move(vs));
}

std::shared_ptr<const zsm::LinearMatroid> random_linear(FieldSpec spec, std::size_t size, std::mt19937_64& rng) {
  std::vector<GroupVector> vs;
  for (std::size_t i = 0; i < size; ++i) vs.push_back(zsm::random_vector(spec, rng));
  return std::make_shared<const zsm::LinearMatroid>(spec, std::move(vs));
}

// Checks the independence axioms on every subset of a small ground set.
void check_axioms(const zsm::Matroid& m) {
  const std::size_t n = m.ground_size();
  REQUIRE(n <= 12);
  const std::uint32_t full = 1u << n;
  std::vector<bool> indep(full);
  for (std::uint32_t s = 0; s < full; ++s) indep[s] = m.is_independent(subset(s));
  CHECK(indep[0]);
  for (std::uint32_t s = 0; s < full; ++s) {
    CHECK(m.rank(subset(s)) <= static_cast<std::size_t>(std::popcount(s)));
    CHECK(indep[s] == (m.rank(subset(s)) == static_cast<std::size_t>(std::popcount(s))));
    if (!indep[s]) continue;
    // Hereditary.
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) CHECK(indep[t]);
    // Exchange: a larger independent set offers an extension.
    for (std::uint32_t t = 0; t < full; ++t) {
      if (!indep[t] || std::popcount(t) <= std::popcount(s)) continue;
      bool extended = false;
      for (std::uint32_t x = t & ~s; x != 0; x &= x - 1) {
        if (indep[s | (x & -x)]) extended = true;
      }
      CHECK(extended);
    }
  }
}

}  // namespace

TEST_CASE("linear matroid independence and rank") {
  const FieldSpec z2(2, 2);
  const auto m = linear(z2, {{1, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(m->is_independent(ids({0, 1})));
  CHECK_FALSE(m->is_independent(ids({2, 3})));
  CHECK(m->is_independent({}));
  CHECK(m->rank(ids({0, 4, 1})) == 2);
  CHECK(m->rank() == 2);
  CHECK_FALSE(m->is_independent(ids({5})));
  CHECK_FALSE(m->is_independent(ids({0, 0})));
  CHECK(m->rank(ids({0, 0})) == 1);
  CHECK(m->in_span(zsm::make_id<ElementId>(2), ids({0, 1})));
  CHECK_FALSE(m->in_span(zsm::make_id<ElementId>(1), ids({0})));
  CHECK(m->in_span(zsm::make_id<ElementId>(0), ids({0})));
  CHECK(m->same_span(ids({2, 0}), ids({0, 1})));
  CHECK_FALSE(m->same_span(ids({2}), ids({0})));
  CHECK_THROWS_AS(m->rank(ids({6})), std::out_of_range);
  CHECK_THROWS_AS(zsm::LinearMatroid(z2, {GroupVector(FieldSpec(3, 2))}), std::invalid_argument);
}

TEST_CASE("free matroid") {
  const zsm::FreeMatroid m(7);
  CHECK(m.rank(ids({0, 1, 2, 3, 4})) == 5);
  CHECK(m.rank() == 7);
  CHECK(m.is_independent(ids({6, 2})));
  CHECK_FALSE(m.is_independent(ids({2, 2})));
  CHECK(m.in_span(zsm::make_id<ElementId>(3), ids({3})));
  CHECK_FALSE(m.in_span(zsm::make_id<ElementId>(3), ids({1, 2})));
}

TEST_CASE("direct sums") {
  const FieldSpec z2(2, 2);
  const auto a = linear(z2, {{1, 0}, {0, 1}, {1, 1}});
  const auto b = linear(z2, {{1, 1}, {0, 1}});
  const auto sum = zsm::direct_sum({a, b});
  CHECK(sum->ground_size() == 5);
  CHECK(sum->rank() == 4);
  CHECK(sum->tag(zsm::make_id<ElementId>(3)) == std::pair{std::size_t{1}, zsm::make_id<ElementId>(0)});
  CHECK(sum->lift(1, zsm::make_id<ElementId>(1)) == zsm::make_id<ElementId>(4));
  // Equal vectors in different summands stay independent.
  CHECK(sum->is_independent(ids({2, 3})));
  CHECK_FALSE(sum->is_independent(ids({0, 1, 2})));
  CHECK_THROWS(zsm::direct_sum({}));
  CHECK_THROWS(zsm::direct_sum({a, nullptr}));

  std::mt19937_64 rng(2);
  const FieldSpec z3(3, 3);
  for (std::size_t copies = 1; copies <= 4; ++copies) {
    const auto base = random_linear(z3, 4, rng);
    std::vector<std::shared_ptr<const zsm::Matroid>> parts(copies, base);
    CHECK(zsm::direct_sum(parts)->rank() == base->rank() * copies);
  }

  // One summand behaves like the summand itself.
  const auto single = zsm::direct_sum({a});
  for (std::uint32_t s = 0; s < 8; ++s) {
    CHECK(single->rank(subset(s)) == a->rank(subset(s)));
    CHECK(single->is_independent(subset(s)) == a->is_independent(subset(s)));
  }
}

TEST_CASE("independence axioms hold on small matroids") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 6; ++i) {
    check_axioms(*random_linear(FieldSpec(2, 3), 8, rng));
    check_axioms(*random_linear(FieldSpec(3, 2), 7, rng));
  }
  check_axioms(zsm::FreeMatroid(9));
  const auto sum = zsm::direct_sum({random_linear(FieldSpec(2, 2), 4, rng), random_linear(FieldSpec(2, 2), 4, rng),
                                    std::make_shared<const zsm::FreeMatroid>(3)});
  check_axioms(*sum);
}

TEST_CASE("rank is monotone and submodular") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_linear(FieldSpec(3, 3), 10, rng);
    for (int j = 0; j < 200; ++j) {
      const auto s = static_cast<std::uint32_t>(zsm::uniform_below(rng, 1u << 10));
      const auto t = static_cast<std::uint32_t>(zsm::uniform_below(rng, 1u << 10));
      CHECK(m->rank(subset(s & t)) <= m->rank(subset(s)));
      CHECK(m->rank(subset(s)) + m->rank(subset(t)) >= m->rank(subset(s | t)) + m->rank(subset(s & t)));
    }
  }
}

TEST_CASE("linear span queries match the vector space") {
  std::mt19937_64 rng(19);
  const FieldSpec z3(3, 3);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_linear(z3, 8, rng);
    const auto s = subset(static_cast<std::uint32_t>(zsm::uniform_below(rng, 1u << 8)));
    std::vector<GroupVector> vs;
    for (auto x : s) vs.push_back(m->vector(x));
    const auto span = zsm::span_of(z3, vs);
    for (std::size_t x = 0; x < 8; ++x) {
      const auto id = zsm::make_id<ElementId>(x);
      CHECK(m->in_span(id, s) == span.contains(m->vector(id)));
    }
  }
}

TEST_CASE("accumulators track independence") {
  std::mt19937_64 rng(37);
  std::vector<std::shared_ptr<const zsm::Matroid>> matroids = {
      random_linear(FieldSpec(2, 3), 9, rng), std::make_shared<const zsm::FreeMatroid>(6),
      zsm::direct_sum({random_linear(FieldSpec(3, 2), 4, rng), std::make_shared<const zsm::FreeMatroid>(2)})};
  for (const auto& m : matroids) {
    auto acc = m->accumulator();
    std::vector<ElementId> chosen;
    for (std::size_t x = 0; x < m->ground_size(); ++x) {
      const auto id = zsm::make_id<ElementId>(x);
      std::vector<ElementId> grown = chosen;
      grown.push_back(id);
      CHECK(acc->can_add(id) == m->is_independent(grown));
      CHECK(acc->spans(id) == m->in_span(id, chosen));
      if (acc->can_add(id)) {
        auto copy = acc->clone();
        acc->add(id);
        chosen.push_back(id);
        CHECK(copy->size() + 1 == acc->size());
      }
    }
    CHECK(acc->size() == m->rank());
  }
}
