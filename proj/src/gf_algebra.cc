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

#include "zsm/gf_algebra.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zsm/errors.h"

namespace zsm {
namespace {

void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << "field spec mismatch: " << a << " vs " << b;
    throw std::invalid_argument(msg.str());
  }
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
}

std::optional<std::uint64_t> FieldSpec::group_order() const {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (order > UINT64_MAX / p_) return std::nullopt;
    order *= p_;
  }
  return order;
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) {
  return os << "Z_" << spec.p() << "^" << spec.d();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

GroupVector::GroupVector(FieldSpec spec) : spec_(spec), coords_(spec.d(), 0) {}

GroupVector::GroupVector(FieldSpec spec, std::vector<std::uint64_t> coords) : spec_(spec) {
  if (coords.size() != spec.d()) {
    throw std::invalid_argument("expected " + std::to_string(spec.d()) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  coords_.reserve(coords.size());
  for (std::uint64_t c : coords) coords_.push_back(static_cast<std::uint32_t>(c % spec.p()));
}

GroupVector GroupVector::unit(FieldSpec spec, std::size_t axis) {
  if (axis >= spec.d()) throw std::out_of_range("unit vector axis out of range");
  GroupVector v(spec);
  v.coords_[axis] = 1;
  return v;
}

GroupVector GroupVector::from_index(FieldSpec spec, std::uint64_t index) {
  GroupVector v(spec);
  for (std::uint32_t i = 0; i < spec.d(); ++i) {
    v.coords_[i] = static_cast<std::uint32_t>(index % spec.p());
    index /= spec.p();
  }
  return v;
}

bool GroupVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t GroupVector::index() const {
  std::uint64_t index = 0;
  for (std::size_t i = coords_.size(); i-- > 0;) index = index * spec_.p() + coords_[i];
  return index;
}

GroupVector& GroupVector::operator+=(const GroupVector& other) {
  require_same_spec(spec_, other.spec_);
  const std::uint32_t p = spec_.p();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(coords_[i]) + other.coords_[i];
    coords_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& other) {
  require_same_spec(spec_, other.spec_);
  const std::uint32_t p = spec_.p();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(coords_[i]) + (p - other.coords_[i]);
    coords_[i] = static_cast<std::uint32_t>(s % p);
  }
  return *this;
}

GroupVector vec_add(const GroupVector& a, const GroupVector& b) {
  GroupVector out = a;
  out += b;
  return out;
}

GroupVector vec_neg(const GroupVector& a) {
  GroupVector zero(a.spec());
  zero -= a;
  return zero;
}

GroupVector vec_sub(const GroupVector& a, const GroupVector& b) {
  GroupVector out = a;
  out -= b;
  return out;
}

GroupVector vec_scale(const GroupVector& a, std::uint64_t c) {
  std::vector<std::uint64_t> coords(a.coords().begin(), a.coords().end());
  const std::uint64_t factor = c % a.spec().p();
  for (auto& x : coords) x = x * factor;
  return GroupVector(a.spec(), std::move(coords));
}

std::ostream& operator<<(std::ostream& os, const GroupVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

SpanBasis::SpanBasis(FieldSpec spec) : spec_(spec) {}

void SpanBasis::check_spec(const GroupVector& v) const { require_same_spec(spec_, v.spec()); }

GroupVector SpanBasis::residual(const GroupVector& v) const {
  check_spec(v);
  GroupVector r = v;
  const std::uint32_t p = spec_.p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = r.coords_[pivots_[i]];
    if (c == 0) continue;
    const auto& row = rows_[i].coords_;
    const std::uint32_t neg = p - c;
    for (std::size_t j = pivots_[i]; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      r.coords_[j] = static_cast<std::uint32_t>((r.coords_[j] + static_cast<std::uint64_t>(neg) * row[j]) % p);
    }
  }
  return r;
}

bool SpanBasis::contains(const GroupVector& v) const { return residual(v).is_zero(); }

std::optional<std::vector<std::uint32_t>> SpanBasis::coefficients(const GroupVector& v) const {
  if (!contains(v)) return std::nullopt;
  // Reduced echelon form: the coefficient of row i is v's pivot entry.
  std::vector<std::uint32_t> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool SpanBasis::insert(const GroupVector& v) {
  GroupVector r = residual(v);
  auto lead = std::find_if(r.coords_.begin(), r.coords_.end(), [](std::uint32_t c) { return c != 0; });
  if (lead == r.coords_.end()) return false;
  const auto pivot = static_cast<std::uint32_t>(lead - r.coords_.begin());
  const std::uint32_t p = spec_.p();
  const std::uint32_t inv = inverse_mod(*lead, p);
  for (auto& c : r.coords_) c = mul_mod(c, inv, p);
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    const std::uint32_t c = row.coords_[pivot];
    if (c == 0) continue;
    const std::uint32_t neg = p - c;
    for (std::size_t j = pivot; j < row.coords_.size(); ++j) {
      row.coords_[j] =
          static_cast<std::uint32_t>((row.coords_[j] + static_cast<std::uint64_t>(neg) * r.coords_[j]) % p);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

std::vector<GroupVector> SpanBasis::enumerate(std::uint64_t limit) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (count > limit / spec_.p()) throw ResourceError("span too large to enumerate");
    count *= spec_.p();
  }
  std::vector<GroupVector> out;
  out.reserve(count);
  std::vector<std::uint32_t> digits(rows_.size(), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    GroupVector v(spec_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (digits[i]) v += vec_scale(rows_[i], digits[i]);
    }
    out.push_back(std::move(v));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < spec_.p()) break;
      digits[i] = 0;
    }
  }
  return out;
}

SpanBasis span_of(FieldSpec spec, std::span<const GroupVector> vs) {
  SpanBasis basis(spec);
  for (const auto& v : vs) basis.insert(v);
  return basis;
}

SpanBasis span_of(std::span<const GroupVector> vs) {
  if (vs.empty()) throw std::invalid_argument("span_of: empty list needs an explicit field spec");
  return span_of(vs.front().spec(), vs);
}

std::size_t rank_of(FieldSpec spec, std::span<const GroupVector> vs) { return span_of(spec, vs).dimension(); }

bool in_span(const GroupVector& v, const SpanBasis& s) { return s.contains(v); }

std::vector<std::size_t> independent_subset(FieldSpec spec, std::span<const GroupVector> vs) {
  SpanBasis basis(spec);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (basis.insert(vs[i])) picked.push_back(i);
  }
  return picked;
}

std::optional<std::vector<std::uint32_t>> solve_representation(FieldSpec spec, std::span<const GroupVector> vs,
                                                               const GroupVector& target) {
  require_same_spec(spec, target.spec());
  const std::uint32_t p = spec.p();
  const auto picked = independent_subset(spec, vs);
  // Eliminate on the augmented rows [v_i | e_i] so each echelon row carries
  // its combination of the picked vectors.
  struct Row {
    std::vector<std::uint32_t> vec;
    std::vector<std::uint32_t> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  auto axpy = [p](std::vector<std::uint32_t>& y, const std::vector<std::uint32_t>& x, std::uint32_t c) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] = static_cast<std::uint32_t>((y[j] + static_cast<std::uint64_t>(c) * x[j]) % p);
    }
  };
  auto reduce = [&](std::vector<std::uint32_t>& vec, std::vector<std::uint32_t>& combo) {
    for (const auto& row : rows) {
      const std::uint32_t c = vec[row.pivot];
      if (c == 0) continue;
      axpy(vec, row.vec, p - c);
      axpy(combo, row.combo, p - c);
    }
  };
  for (std::size_t k = 0; k < picked.size(); ++k) {
    const auto& v = vs[picked[k]];
    require_same_spec(spec, v.spec());
    std::vector<std::uint32_t> vec(v.coords().begin(), v.coords().end());
    std::vector<std::uint32_t> combo(picked.size(), 0);
    combo[k] = 1;
    reduce(vec, combo);
    const auto lead = static_cast<std::size_t>(
        std::find_if(vec.begin(), vec.end(), [](std::uint32_t c) { return c != 0; }) - vec.begin());
    if (lead == vec.size()) throw InternalError("solve_representation: picked vectors are dependent");
    const std::uint32_t inv = inverse_mod(vec[lead], p);
    for (auto& c : vec) c = mul_mod(c, inv, p);
    for (auto& c : combo) c = mul_mod(c, inv, p);
    for (auto& row : rows) {
      const std::uint32_t c = row.vec[lead];
      if (c == 0) continue;
      axpy(row.vec, vec, p - c);
      axpy(row.combo, combo, p - c);
    }
    rows.push_back({std::move(vec), std::move(combo), lead});
  }
  std::vector<std::uint32_t> vec(target.coords().begin(), target.coords().end());
  std::vector<std::uint32_t> residual_combo(picked.size(), 0);
  reduce(vec, residual_combo);
  if (std::any_of(vec.begin(), vec.end(), [](std::uint32_t c) { return c != 0; })) return std::nullopt;
  // target - sum(residual_combo * picked) == 0, so target = -residual_combo.
  std::vector<std::uint32_t> coefficients(vs.size(), 0);
  for (std::size_t k = 0; k < picked.size(); ++k) {
    coefficients[picked[k]] = residual_combo[k] == 0 ? 0 : p - residual_combo[k];
  }
  return coefficients;
}

bool SumReachability::reachable(const GroupVector& v) const {
  require_same_spec(spec_, v.spec());
  return predecessor_[v.index()] != kUnreached;
}

std::vector<GroupVector> SumReachability::reachable_vectors() const {
  std::vector<GroupVector> out;
  out.reserve(order_.size());
  for (std::uint64_t idx : order_) out.push_back(GroupVector::from_index(spec_, idx));
  return out;
}

std::optional<std::vector<std::size_t>> SumReachability::reconstruct(const GroupVector& v) const {
  if (!reachable(v)) return std::nullopt;
  std::vector<std::size_t> used;
  std::int64_t at = static_cast<std::int64_t>(v.index());
  while (predecessor_[at] != kRoot) {
    used.push_back(static_cast<std::size_t>(via_[at]));
    at = predecessor_[at];
  }
  std::reverse(used.begin(), used.end());
  return used;
}

SumReachability reachable_sums(FieldSpec spec, std::span<const GroupVector> source, std::uint64_t budget) {
  const auto order = spec.group_order();
  const std::uint64_t items = std::max<std::uint64_t>(1, source.size());
  if (!order || *order > budget / items) {
    throw ResourceError("reachable_sums: |source| * p^d exceeds budget of " + std::to_string(budget));
  }
  for (const auto& s : source) require_same_spec(spec, s.spec());

  SumReachability result(spec);
  result.source_.assign(source.begin(), source.end());
  result.predecessor_.assign(*order, SumReachability::kUnreached);
  result.via_.assign(*order, -1);
  result.predecessor_[0] = SumReachability::kRoot;
  result.order_.push_back(0);

  const std::uint32_t p = spec.p();
  std::vector<std::uint64_t> place(spec.d());
  for (std::uint32_t i = 0, w = 1; i < spec.d(); ++i, w *= p) place[i] = w;

  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& s = source[i];
    // Snapshot so that source item i contributes at most once to any sum.
    const std::size_t frontier = result.order_.size();
    for (std::size_t j = 0; j < frontier; ++j) {
      const std::uint64_t from = result.order_[j];
      std::uint64_t rest = from;
      std::uint64_t to = 0;
      for (std::uint32_t k = 0; k < spec.d(); ++k) {
        std::uint32_t c = static_cast<std::uint32_t>(rest % p) + s[k];
        rest /= p;
        if (c >= p) c -= p;
        to += c * place[k];
      }
      if (result.predecessor_[to] == SumReachability::kUnreached) {
        result.predecessor_[to] = static_cast<std::int64_t>(from);
        result.via_[to] = static_cast<std::int32_t>(i);
        result.order_.push_back(to);
      }
    }
    if (result.order_.size() == *order) break;
  }
  return result;
}

bool is_additive_basis(std::span<const GroupVector> source, const SpanBasis& target, std::uint64_t budget) {
  const auto reach = reachable_sums(target.spec(), source, budget);
  for (const auto& v : target.enumerate()) {
    if (!reach.reachable(v)) return false;
  }
  return true;
}

}  // namespace zsm
