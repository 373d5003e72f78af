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

#include "gammoid/matroid.hpp"

#include <utility>

namespace gammoid {

namespace {

// Dense rank memo up to this ground size (2^20 one-byte entries); hash map
// beyond. Closure/coloop memos stay sparse at every size.
constexpr int kDenseMemoLimit = 20;

}  // namespace

struct Matroid::Memo {
  std::mutex mu;
  std::vector<std::int8_t> dense;  // -1 = unknown
  std::unordered_map<std::uint64_t, int> sparse;
  std::unordered_map<std::uint64_t, std::uint64_t> closure;
  std::unordered_map<std::uint64_t, std::uint64_t> coloops;
};

Matroid::Matroid(int ground_size, std::function<int(ElemSet)> rank_fn)
    : Matroid(ground_size, Ops{std::move(rank_fn), nullptr, nullptr}) {}

Matroid::Matroid(int ground_size, Ops ops)
    : n_(ground_size), ops_(std::move(ops)), memo_(std::make_shared<Memo>()) {
  if (n_ <= kDenseMemoLimit) {
    memo_->dense.assign(std::size_t{1} << n_, -1);
  }
}

int Matroid::rank(ElemSet x) const {
  Memo& memo = *memo_;
  if (!memo.dense.empty()) {
    {
      std::lock_guard<std::mutex> lock(memo.mu);
      std::int8_t cached = memo.dense[x.bits()];
      if (cached >= 0) return cached;
    }
    int r = ops_.rank(x);
    std::lock_guard<std::mutex> lock(memo.mu);
    memo.dense[x.bits()] = static_cast<std::int8_t>(r);
    return r;
  }
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.sparse.find(x.bits());
    if (it != memo.sparse.end()) return it->second;
  }
  int r = ops_.rank(x);
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.sparse.emplace(x.bits(), r);
  return r;
}

ElemSet Matroid::closure(ElemSet x) const {
  Memo& memo = *memo_;
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.closure.find(x.bits());
    if (it != memo.closure.end()) return ElemSet::of_bits(it->second);
  }
  ElemSet out;
  if (ops_.closure) {
    out = ops_.closure(x);
  } else {
    const int rx = rank(x);
    out = x;
    for (int e = 0; e < n_; ++e) {
      if (!x.contains(e) && rank(x.with(e)) == rx) out = out.with(e);
    }
  }
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.closure.emplace(x.bits(), out.bits());
  return out;
}

ElemSet Matroid::restriction_coloops(ElemSet x) const {
  Memo& memo = *memo_;
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.coloops.find(x.bits());
    if (it != memo.coloops.end()) return ElemSet::of_bits(it->second);
  }
  ElemSet out;
  if (ops_.restriction_coloops) {
    out = ops_.restriction_coloops(x);
  } else {
    const int rx = rank(x);
    for (int e : x.elements()) {
      if (rank(x.without(e)) < rx) out = out.with(e);
    }
  }
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.coloops.emplace(x.bits(), out.bits());
  return out;
}

Matroid transversal_matroid(const SetSystem& system) {
  return Matroid(system.ground_size, [system](ElemSet x) {
    return max_matching(system, x).size();
  });
}

Matroid dual_matroid(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank_full();
  Matroid::Ops ops;
  ops.rank = [m, n, r](ElemSet x) {
    return m.rank(x.complement(n)) + x.size() - r;
  };
  // Adding y to X keeps the dual rank exactly when y is a coloop of the
  // restriction to the complement; dually for coloops.
  ops.closure = [m, n](ElemSet x) {
    return x | m.restriction_coloops(x.complement(n));
  };
  ops.restriction_coloops = [m, n](ElemSet x) {
    return x & m.closure(x.complement(n));
  };
  return Matroid(n, std::move(ops));
}

ElemSet Minor::lift(ElemSet x) const {
  ElemSet out;
  for (int i : x.elements()) {
    out = out.with(to_parent[static_cast<std::size_t>(i)]);
  }
  return out;
}

ElemSet Minor::lower(ElemSet x) const {
  ElemSet out;
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (x.contains(to_parent[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

namespace {

ElemSet lift_set(const std::vector<int>& to_parent, ElemSet x) {
  ElemSet out;
  for (int i : x.elements()) {
    out = out.with(to_parent[static_cast<std::size_t>(i)]);
  }
  return out;
}

ElemSet lower_set(const std::vector<int>& to_parent, ElemSet x) {
  ElemSet out;
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (x.contains(to_parent[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

}  // namespace

Minor restrict_to(const Matroid& m, ElemSet x) {
  std::vector<int> to_parent = x.elements();
  Matroid::Ops ops;
  ops.rank = [m, to_parent](ElemSet y) {
    return m.rank(lift_set(to_parent, y));
  };
  ops.closure = [m, to_parent](ElemSet y) {
    return lower_set(to_parent, m.closure(lift_set(to_parent, y)));
  };
  ops.restriction_coloops = [m, to_parent](ElemSet y) {
    return lower_set(to_parent, m.restriction_coloops(lift_set(to_parent, y)));
  };
  Matroid minor(static_cast<int>(to_parent.size()), std::move(ops));
  return Minor{std::move(minor), std::move(to_parent)};
}

Minor delete_elements(const Matroid& m, ElemSet x) {
  return restrict_to(m, x.complement(m.ground_size()));
}

Minor contract_elements(const Matroid& m, ElemSet x) {
  ElemSet kept = x.complement(m.ground_size());
  std::vector<int> to_parent = kept.elements();
  const int rx = m.rank(x);
  Matroid::Ops ops;
  ops.rank = [m, to_parent, x, rx](ElemSet y) {
    return m.rank(lift_set(to_parent, y) | x) - rx;
  };
  ops.closure = [m, to_parent, x](ElemSet y) {
    return lower_set(to_parent, m.closure(lift_set(to_parent, y) | x));
  };
  ops.restriction_coloops = [m, to_parent, x](ElemSet y) {
    ElemSet lifted = lift_set(to_parent, y);
    return lower_set(to_parent,
                     m.restriction_coloops(lifted | x) & lifted);
  };
  Matroid minor(static_cast<int>(to_parent.size()), std::move(ops));
  return Minor{std::move(minor), std::move(to_parent)};
}

}  // namespace gammoid
