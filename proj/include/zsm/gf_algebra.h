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

#ifndef ZSM_GF_ALGEBRA_H_
#define ZSM_GF_ALGEBRA_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace zsm {

// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

// The group Z_p^d, seen as a d-dimensional vector space over F_p.
class FieldSpec {
 public:
  // Throws std::invalid_argument unless p is prime and d >= 1.
  FieldSpec(std::uint32_t p, std::uint32_t d);

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }

  // p^d, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> group_order() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t d_;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec);

// An element of Z_p^d with every coordinate reduced into [0, p).
class GroupVector {
 public:
  // The zero vector.
  explicit GroupVector(FieldSpec spec);
  // Coordinates are reduced mod p. Throws std::invalid_argument when
  // coords.size() != d.
  GroupVector(FieldSpec spec, std::vector<std::uint64_t> coords);

  static GroupVector unit(FieldSpec spec, std::size_t axis);
  // Inverse of index(): coordinate i is digit i of `index` in base p.
  static GroupVector from_index(FieldSpec spec, std::uint64_t index);

  const FieldSpec& spec() const { return spec_; }
  std::span<const std::uint32_t> coords() const { return coords_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  bool is_zero() const;
  std::uint64_t index() const;

  GroupVector& operator+=(const GroupVector& other);
  GroupVector& operator-=(const GroupVector& other);

  friend bool operator==(const GroupVector&, const GroupVector&) = default;

 private:
  friend class SpanBasis;
  FieldSpec spec_;
  std::vector<std::uint32_t> coords_;
};

GroupVector vec_add(const GroupVector& a, const GroupVector& b);
GroupVector vec_neg(const GroupVector& a);
GroupVector vec_sub(const GroupVector& a, const GroupVector& b);
GroupVector vec_scale(const GroupVector& a, std::uint64_t c);

inline GroupVector operator+(const GroupVector& a, const GroupVector& b) { return vec_add(a, b); }
inline GroupVector operator-(const GroupVector& a, const GroupVector& b) { return vec_sub(a, b); }
inline GroupVector operator-(const GroupVector& a) { return vec_neg(a); }

std::ostream& operator<<(std::ostream& os, const GroupVector& v);

// Reduced row-echelon basis of a subspace of F_p^d. Rows are sorted by pivot
// column, each pivot is 1 and is the only nonzero entry in its column. The
// pivot of a row is its lexicographically first nonzero coordinate, so the
// echelon form of a subspace is unique.
class SpanBasis {
 public:
  explicit SpanBasis(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::size_t dimension() const { return rows_.size(); }
  std::span<const GroupVector> vectors() const { return rows_; }
  std::span<const std::uint32_t> pivots() const { return pivots_; }

  bool contains(const GroupVector& v) const;
  // Coefficients c with v = sum_i c_i * vectors()[i], or nullopt.
  std::optional<std::vector<std::uint32_t>> coefficients(const GroupVector& v) const;
  // Adds v to the spanning set. Returns true iff the dimension grew.
  bool insert(const GroupVector& v);
  // Every vector of the subspace. Throws ResourceError past `limit` vectors.
  std::vector<GroupVector> enumerate(std::uint64_t limit = 10'000'000) const;

  friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

 private:
  GroupVector residual(const GroupVector& v) const;
  void check_spec(const GroupVector& v) const;

  FieldSpec spec_;
  std::vector<GroupVector> rows_;
  std::vector<std::uint32_t> pivots_;
};

// All vectors must share `spec`; throws std::invalid_argument otherwise.
SpanBasis span_of(FieldSpec spec, std::span<const GroupVector> vs);
// Convenience overload; vs must be nonempty.
SpanBasis span_of(std::span<const GroupVector> vs);
std::size_t rank_of(FieldSpec spec, std::span<const GroupVector> vs);

bool in_span(const GroupVector& v, const SpanBasis& s);

// Indices of a maximal linearly independent subfamily, chosen greedily in
// list order.
std::vector<std::size_t> independent_subset(FieldSpec spec, std::span<const GroupVector> vs);

// Coefficients c with sum_i c_i * vs[i] == target, or nullopt when target is
// outside the span. Vectors beyond an independent prefix get coefficient 0.
std::optional<std::vector<std::uint32_t>> solve_representation(FieldSpec spec, std::span<const GroupVector> vs,
                                                               const GroupVector& target);

inline constexpr std::uint64_t kDefaultReachBudget = 10'000'000;

// All sub-multiset sums of a source multiset, with reconstruction data.
class SumReachability {
 public:
  const FieldSpec& spec() const { return spec_; }
  std::span<const GroupVector> source() const { return source_; }
  bool reachable(const GroupVector& v) const;
  std::size_t reachable_count() const { return order_.size(); }
  // Reachable vectors in discovery order (zero first).
  std::vector<GroupVector> reachable_vectors() const;
  // Ascending source indices, each used once, summing to v; nullopt if v is
  // unreachable.
  std::optional<std::vector<std::size_t>> reconstruct(const GroupVector& v) const;

 private:
  friend SumReachability reachable_sums(FieldSpec, std::span<const GroupVector>, std::uint64_t);
  explicit SumReachability(FieldSpec spec) : spec_(spec) {}

  static constexpr std::int64_t kUnreached = -2;
  static constexpr std::int64_t kRoot = -1;

  FieldSpec spec_;
  std::vector<GroupVector> source_;
  std::vector<std::int64_t> predecessor_;  // indexed by GroupVector::index()
  std::vector<std::int32_t> via_;
  std::vector<std::uint64_t> order_;
};

// Dynamic programming over the p^d group elements. Throws ResourceError when
// max(1, |source|) * p^d exceeds `budget`.
SumReachability reachable_sums(FieldSpec spec, std::span<const GroupVector> source,
                               std::uint64_t budget = kDefaultReachBudget);

// True iff every vector of target's span is a sub-multiset sum of source.
bool is_additive_basis(std::span<const GroupVector> source, const SpanBasis& target,
                       std::uint64_t budget = kDefaultReachBudget);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace zsm

#endif  // ZSM_GF_ALGEBRA_H_
