// Copyright 2026 The zqforce Authors.
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

#include "zqforce/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "zqforce/errors.hpp"
#include "zqforce/parallel.hpp"

namespace zqforce {
namespace {

using Word = VertexSet::Word;

// Next larger word with the same popcount.
constexpr Word next_combination(Word c) {
  const Word lowest = c & (~c + 1);
  const Word ripple = c + lowest;
  return ripple | (((c ^ ripple) >> 2) / lowest);
}

// Costs of White's replies to a declaration, keyed by the bitmask of returned
// component indices. Dense for small component counts.
class ReplyMemo {
 public:
  static constexpr Cost kUnset = kInfiniteCost - 1;

  explicit ReplyMemo(int k) : dense_(k <= 16) {
    if (dense_) values_.assign(std::size_t{1} << k, kUnset);
  }

  Cost* find(Word mask) {
    if (dense_) return values_[mask] == kUnset ? nullptr : &values_[mask];
    auto it = sparse_.find(mask);
    return it == sparse_.end() ? nullptr : &it->second;
  }

  void store(Word mask, Cost c) {
    if (dense_) {
      values_[mask] = c;
    } else {
      sparse_.emplace(mask, c);
    }
  }

 private:
  bool dense_;
  std::vector<Cost> values_;
  std::unordered_map<Word, Cost> sparse_;
};

void check_table_input(const Graph& g, const LoopAssignment& l, int q) {
  if (q < 0) throw ArgumentError("q must be >= 0");
  if (g.n() > kMaxTableVertices) {
    throw CapacityError("cost table limited to " + std::to_string(kMaxTableVertices) +
                        " vertices; graph has " + std::to_string(g.n()));
  }
  if (l.n() != g.n()) throw ArgumentError("loop assignment length does not match graph");
}

// Fills a table bottom-up: cardinality layers from |V| down to 0, every
// dependency pointing into a strictly larger layer.
class TableBuilder {
 public:
  TableBuilder(const Graph& g, const Forcer& forcer, int q, bool allow_spend,
               const SolverOptions& opts, std::vector<Word>& keys, std::vector<Cost>& costs)
      : g_(g), forcer_(forcer), n_(g.n()), q_(q), allow_spend_(allow_spend), opts_(opts),
        keys_(keys), costs_(costs) {}

  void run() {
    const Word limit = Word{1} << n_;
    for (Word w = 0; w < limit; ++w) {
      if (forcer_.is_closed(VertexSet(w))) keys_.push_back(w);
    }
    costs_.assign(keys_.size(), kInfiniteCost);

    std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(n_) + 1);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      layers[static_cast<std::size_t>(std::popcount(keys_[i]))].push_back(i);
    }
    for (int size = n_; size >= 0; --size) {
      const auto& layer = layers[static_cast<std::size_t>(size)];
      parallel_for(layer.size(), opts_.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
          const std::size_t i = layer[j];
          costs_[i] = evaluate(VertexSet(keys_[i]));
        }
      });
      if (opts_.progress) opts_.progress(size, layer.size());
    }
  }

 private:
  Cost lookup(VertexSet closed) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), closed.word());
    return costs_[static_cast<std::size_t>(it - keys_.begin())];
  }

  Cost evaluate(VertexSet u) const {
    const VertexSet all = forcer_.all();
    if (u == all) return 0;
    Cost best = kInfiniteCost;
    if (allow_spend_) {
      for (int v : all - u) {
        best = std::min(best, add_cost(lookup(forcer_.close(u | VertexSet::single(v))), 1));
      }
    }
    // Z_q = Z once q+1 exceeds the vertex count: nothing to declare.
    if (q_ + 1 > n_) return best;
    const std::vector<VertexSet> comps = components(g_, all - u);
    const int k = static_cast<int>(comps.size());
    if (k < q_ + 1) return best;
    return declare_value(u, comps, best);
  }

  // min over declarations J of max over White replies I ⊆ J, pruned against
  // `bound` (only values below it matter).
  Cost declare_value(VertexSet u, const std::vector<VertexSet>& comps, Cost bound) const {
    const int k = static_cast<int>(comps.size());
    ReplyMemo memo(k);
    auto reply_cost = [&](Word returned) -> Cost {
      if (Cost* hit = memo.find(returned)) return *hit;
      VertexSet merged;
      for (Word rest = returned; rest != 0; rest &= rest - 1) {
        merged |= comps[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      const VertexSet next = forcer_.component_close(u, merged);
      // A reply that forces nothing can be repeated forever.
      const Cost c = next == u ? kInfiniteCost : lookup(next);
      memo.store(returned, c);
      return c;
    };

    const int max_width = opts_.width == DeclareWidth::kExact ? q_ + 1 : k;
    const Word limit = Word{1} << k;
    for (int width = q_ + 1; width <= max_width; ++width) {
      for (Word j = (Word{1} << width) - 1; j < limit; j = next_combination(j)) {
        Cost worst = 0;
        for (Word i = j; i != 0; i = (i - 1) & j) {
          worst = std::max(worst, reply_cost(i));
          if (worst >= bound) break;
        }
        if (worst < bound) {
          bound = worst;
          if (bound == 0) return 0;
        }
      }
    }
    return bound;
  }

  const Graph& g_;
  const Forcer& forcer_;
  int n_;
  int q_;
  bool allow_spend_;
  const SolverOptions& opts_;
  std::vector<Word>& keys_;
  std::vector<Cost>& costs_;
};

}  // namespace

CostTable::CostTable(const Graph& g, const LoopAssignment& l, int q, bool zero_spend)
    : graph_(g), loops_(l), q_(q), zero_spend_(zero_spend), forcer_(g, l) {}

bool CostTable::contains(VertexSet u) const {
  return std::binary_search(keys_.begin(), keys_.end(), u.word());
}

Cost CostTable::cost(VertexSet u) const {
  const VertexSet closed = forcer_.close(u & graph_.vertices());
  auto it = std::lower_bound(keys_.begin(), keys_.end(), closed.word());
  return costs_[static_cast<std::size_t>(it - keys_.begin())];
}

CostTable zq_cost_table(const Graph& g, const LoopAssignment& l, int q,
                        const SolverOptions& opts) {
  check_table_input(g, l, q);
  CostTable table(g, l, q, /*zero_spend=*/false);
  TableBuilder(g, table.forcer_, q, /*allow_spend=*/true, opts, table.keys_, table.costs_)
      .run();
  return table;
}

CostTable zero_spend_table(const Graph& g, const LoopAssignment& l, int q,
                           const SolverOptions& opts) {
  check_table_input(g, l, q);
  CostTable table(g, l, q, /*zero_spend=*/true);
  TableBuilder(g, table.forcer_, q, /*allow_spend=*/false, opts, table.keys_, table.costs_)
      .run();
  return table;
}

GameValue zq_looped(const Graph& g, const LoopAssignment& l, int q,
                    const SolverOptions& opts) {
  CostTable table = zq_cost_table(g, l, q, opts);
  const int tokens = table.value();
  return GameValue{tokens, std::move(table)};
}

GameValue zq(const Graph& g, int q, const SolverOptions& opts) {
  return zq_looped(g, LoopAssignment(g.n()), q, opts);
}

GameValue z(const Graph& g, const SolverOptions& opts) { return zq(g, g.n(), opts); }

GameValue z_plus(const Graph& g, const SolverOptions& opts) { return zq(g, 0, opts); }

int zq_upfront_looped(const Graph& g, const LoopAssignment& l, int q,
                      const SolverOptions& opts) {
  const CostTable free_wins = zero_spend_table(g, l, q, opts);
  const int n = g.n();
  for (int size = 0; size <= n; ++size) {
    const Word limit = Word{1} << n;
    for (Word s = (Word{1} << size) - 1; s < limit; s = next_combination(s)) {
      if (free_wins.cost(VertexSet(s)) == 0) return size;
      if (size == 0) break;
    }
  }
  // Spending on every vertex always wins.
  return n;
}

int zq_upfront(const Graph& g, int q, const SolverOptions& opts) {
  return zq_upfront_looped(g, LoopAssignment(g.n()), q, opts);
}

std::vector<Move> winning_declares(const CostTable& table, VertexSet current,
                                   int tokens_left) {
  std::vector<Move> out;
  const Graph& g = table.graph();
  const int q = table.q();
  if (q + 1 > g.n()) return out;
  const std::vector<VertexSet> comps = components(g, g.vertices() - current);
  const int k = static_cast<int>(comps.size());
  if (k < q + 1) return out;
  const Word limit = Word{1} << k;
  for (Word j = (Word{1} << (q + 1)) - 1; j < limit; j = next_combination(j)) {
    bool wins = true;
    for (Word i = j; i != 0 && wins; i = (i - 1) & j) {
      VertexSet merged;
      for (Word rest = i; rest != 0; rest &= rest - 1) {
        merged |= comps[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      const VertexSet next = table.forcer().component_close(current, merged);
      wins = next != current && table.cost(next) <= tokens_left;
    }
    if (!wins) continue;
    Move m{Move::Kind::kDeclare, -1, {}};
    for (Word rest = j; rest != 0; rest &= rest - 1) {
      m.declared.push_back(comps[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Move optimal_move(const CostTable& table, VertexSet current, int tokens_left) {
  const VertexSet all = table.graph().vertices();
  if (!current.is_subset_of(all)) throw ArgumentError("current set exceeds the vertex set");
  if (!table.contains(current)) {
    throw ArgumentError("current set " + current.to_string() + " is not closed");
  }
  if (current == all) return Move{};
  const Cost have = table.cost(current);
  if (have == kInfiniteCost || have > tokens_left) {
    throw InsufficientTokensError("position " + current.to_string() + " needs " +
                                  (have == kInfiniteCost ? std::string("unbounded")
                                                         : std::to_string(have)) +
                                  " tokens; " + std::to_string(tokens_left) + " available");
  }
  std::vector<Move> declares = winning_declares(table, current, tokens_left);
  if (!declares.empty()) return std::move(declares.front());
  if (!table.zero_spend()) {
    for (int v : all - current) {
      const VertexSet next = table.forcer().close(current | VertexSet::single(v));
      if (add_cost(table.cost(next), 1) <= tokens_left) {
        return Move{Move::Kind::kSpend, v, {}};
      }
    }
  }
  throw std::logic_error("cost table admits no move from " + current.to_string());
}

}  // namespace zqforce
