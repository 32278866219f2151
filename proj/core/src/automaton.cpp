#include "gbtc/automaton.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "gbtc/errors.hpp"

namespace gbtc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller representative so the basepoint stays its own root.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// g1..gr occupy slots 0..r-1, their inverses r..2r-1.
std::size_t slot(int rank, Letter x) {
  return x > 0 ? static_cast<std::size_t>(x - 1)
               : static_cast<std::size_t>(rank - x - 1);
}

Letter letter_of(int rank, std::size_t s) {
  return s < static_cast<std::size_t>(rank) ? static_cast<Letter>(s + 1)
                                            : -static_cast<Letter>(s - rank + 1);
}

void require_rank(const Word& w, int rank) {
  if (w.rank() != rank)
    throw InputError("word of rank " + std::to_string(w.rank()) +
                     " used in a rank " + std::to_string(rank) + " context");
}

}  // namespace

std::optional<std::size_t> FoldedAutomaton::step(std::size_t state, Letter x) const {
  if (x == 0 || std::abs(x) > rank_) throw InputError("letter out of range");
  std::size_t target = moves_.at(state)[slot(rank_, x)];
  if (target == kNone) return std::nullopt;
  return target;
}

std::optional<std::size_t> FoldedAutomaton::trace(std::size_t state, const Word& w) const {
  require_rank(w, rank_);
  for (Letter x : w.letters()) {
    std::size_t target = moves_.at(state)[slot(rank_, x)];
    if (target == kNone) return std::nullopt;
    state = target;
  }
  return state;
}

std::vector<Word> FoldedAutomaton::basis() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (tree_arc_[i]) continue;
    const Arc& a = arcs_[i];
    out.push_back(tree_paths_[a.from] * Word::generator(rank_, a.label) *
                  tree_paths_[a.to].inverse());
  }
  return out;
}

FoldedAutomaton stallings_core(int rank, const std::vector<Word>& gens) {
  if (rank < 0) throw InputError("negative rank");
  const std::size_t slots = 2 * static_cast<std::size_t>(rank);

  // Bouquet of petals, one per generator.
  std::vector<Arc> raw;
  std::size_t n = 1;
  for (const Word& w : gens) {
    require_rank(w, rank);
    const auto& letters = w.letters();
    std::size_t current = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::size_t next = (i + 1 == letters.size()) ? 0 : n++;
      Letter x = letters[i];
      if (x > 0)
        raw.push_back({current, next, x});
      else
        raw.push_back({next, current, -x});
      current = next;
    }
  }

  // Fold to a fixed point: identify the targets of equally labelled arcs.
  UnionFind uf(n);
  std::vector<std::size_t> seen(n * slots);
  for (bool changed = true; changed;) {
    changed = false;
    std::fill(seen.begin(), seen.end(), kNone);
    for (const Arc& a : raw) {
      std::size_t u = uf.find(a.from);
      std::size_t v = uf.find(a.to);
      auto fold = [&](std::size_t at, std::size_t s, std::size_t target) {
        std::size_t& entry = seen[at * slots + s];
        if (entry == kNone)
          entry = target;
        else if (uf.unite(entry, target))
          changed = true;
      };
      fold(u, slot(rank, a.label), v);
      fold(v, slot(rank, -a.label), u);
    }
  }

  std::set<Arc> folded;
  for (const Arc& a : raw) folded.insert({uf.find(a.from), uf.find(a.to), a.label});

  // Prune hanging trees away from the basepoint.
  std::vector<std::size_t> degree(n, 0);
  for (const Arc& a : folded) {
    ++degree[a.from];
    ++degree[a.to];
  }
  std::vector<bool> removed(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t s = 1; s < n; ++s)
    if (uf.find(s) == s && degree[s] <= 1) queue.push_back(s);
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    if (removed[s]) continue;
    removed[s] = true;
    for (auto it = folded.begin(); it != folded.end();) {
      if (it->from == s || it->to == s) {
        std::size_t other = it->from == s ? it->to : it->from;
        if (--degree[other] <= 1 && other != 0 && !removed[other]) queue.push_back(other);
        it = folded.erase(it);
      } else {
        ++it;
      }
    }
  }

  // Transition table on the surviving states.
  std::map<std::size_t, std::vector<std::size_t>> table;
  table[0].assign(slots, kNone);
  for (const Arc& a : folded) {
    table.try_emplace(a.from, slots, kNone);
    table.try_emplace(a.to, slots, kNone);
    table[a.from][slot(rank, a.label)] = a.to;
    table[a.to][slot(rank, -a.label)] = a.from;
  }

  // Canonical renumbering by breadth-first search in slot order.
  FoldedAutomaton out;
  out.rank_ = rank;
  std::map<std::size_t, std::size_t> renumber{{0, 0}};
  std::vector<std::size_t> order{0};
  std::vector<std::pair<std::size_t, Letter>> discovered_by{{kNone, 0}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& moves = table[order[i]];
    for (std::size_t s = 0; s < slots; ++s) {
      if (moves[s] == kNone || renumber.count(moves[s])) continue;
      renumber[moves[s]] = order.size();
      order.push_back(moves[s]);
      discovered_by.push_back({i, letter_of(rank, s)});
    }
  }

  out.moves_.assign(order.size(), std::vector<std::size_t>(slots, kNone));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < slots; ++s)
      if (table[order[i]][s] != kNone) out.moves_[i][s] = renumber.at(table[order[i]][s]);
  for (const Arc& a : folded)
    out.arcs_.push_back({renumber.at(a.from), renumber.at(a.to), a.label});
  std::sort(out.arcs_.begin(), out.arcs_.end());

  out.tree_paths_.assign(order.size(), Word(rank));
  std::set<Arc> tree;
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto [parent, x] = discovered_by[i];
    out.tree_paths_[i] = out.tree_paths_[parent] * Word::reduce(rank, {x});
    if (x > 0)
      tree.insert({parent, i, x});
    else
      tree.insert({i, parent, -x});
  }
  for (const Arc& a : out.arcs_) out.tree_arc_.push_back(tree.count(a) != 0);
  return out;
}

std::size_t subgroup_rank(const FoldedAutomaton& a) {
  return a.arcs().size() + 1 - a.state_count();
}

bool contains(const FoldedAutomaton& a, const Word& w) {
  auto end = a.trace(a.basepoint(), w);
  return end && *end == a.basepoint();
}

bool restriction_injective(const FreeHom& f, const std::vector<Word>& gens) {
  auto source = stallings_core(f.domain_rank(), gens);
  auto image = stallings_core(f.codomain_rank(), f.apply(gens));
  return subgroup_rank(source) == subgroup_rank(image);
}

std::size_t ProductGraph::component_count() const {
  UnionFind uf(states.size());
  std::size_t count = states.size();
  for (const Arc& a : arcs)
    if (uf.unite(a.from, a.to)) --count;
  return count;
}

bool ProductGraph::is_forest() const {
  return arcs.size() + component_count() == states.size();
}

ProductGraph pullback(const FoldedAutomaton& a, const FoldedAutomaton& b) {
  if (a.rank() != b.rank()) throw InputError("pullback of automata over different ranks");
  ProductGraph product;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  auto state = [&](std::size_t x, std::size_t y) {
    auto [it, inserted] = index.try_emplace({x, y}, product.states.size());
    if (inserted) product.states.push_back({x, y});
    return it->second;
  };
  state(a.basepoint(), b.basepoint());
  for (const Arc& p : a.arcs())
    for (const Arc& q : b.arcs())
      if (p.label == q.label)
        product.arcs.push_back({state(p.from, q.from), state(p.to, q.to), p.label});
  return product;
}

std::optional<ConjugacyWitness> find_conjugate_intersection(const std::vector<Word>& h0,
                                                            const std::vector<Word>& h1,
                                                            int rank) {
  auto a = stallings_core(rank, h0);
  auto b = stallings_core(rank, h1);
  ProductGraph product = pullback(a, b);

  // Spanning forest with labelled paths from each component root.
  const std::size_t n = product.states.size();
  std::vector<std::vector<std::pair<std::size_t, Letter>>> adjacent(n);
  for (std::size_t i = 0; i < product.arcs.size(); ++i) {
    const Arc& arc = product.arcs[i];
    adjacent[arc.from].push_back({i, arc.label});
    adjacent[arc.to].push_back({i, -arc.label});
  }
  std::vector<std::size_t> root(n, kNone);
  std::vector<Word> path(n, Word(rank));
  std::vector<bool> tree_arc(product.arcs.size(), false);
  for (std::size_t start = 0; start < n; ++start) {
    if (root[start] != kNone) continue;
    root[start] = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [i, x] : adjacent[u]) {
        const Arc& arc = product.arcs[i];
        std::size_t w = x > 0 ? arc.to : arc.from;
        if (root[w] != kNone) continue;
        root[w] = start;
        tree_arc[i] = true;
        path[w] = path[u] * Word::reduce(rank, {x});
        queue.push_back(w);
      }
    }
  }

  for (std::size_t i = 0; i < product.arcs.size(); ++i) {
    if (tree_arc[i]) continue;
    const Arc& arc = product.arcs[i];
    Word loop = path[arc.from] * Word::generator(rank, arc.label) * path[arc.to].inverse();
    auto [ra, rb] = product.states[root[arc.from]];
    const Word& to_a = a.tree_path(ra);
    const Word& to_b = b.tree_path(rb);
    return ConjugacyWitness{to_b * to_a.inverse(), to_a * loop * to_a.inverse()};
  }
  return std::nullopt;
}

bool disjoint_conjugates(const std::vector<Word>& h0, const std::vector<Word>& h1, int rank) {
  auto a = stallings_core(rank, h0);
  auto b = stallings_core(rank, h1);
  return pullback(a, b).is_forest();
}

std::vector<Word> reduced_words_up_to(int rank, int max_len) {
  std::vector<Word> words{Word(rank)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(rank); ++s) {
        Letter x = letter_of(rank, s);
        const auto& letters = words[i].letters();
        if (!letters.empty() && letters.back() == -x) continue;
        words.push_back(words[i] * Word::reduce(rank, {x}));
      }
    }
    level_begin = level_end;
  }
  return words;
}

BruteForceResult disjoint_conjugates_bruteforce(const std::vector<Word>& h0,
                                                const std::vector<Word>& h1, int rank,
                                                int max_len) {
  if (max_len < 1) throw InputError("max_len must be at least 1");
  for (const Word& w : h0) require_rank(w, rank);
  for (const Word& w : h1) require_rank(w, rank);

  // Nontrivial elements of <h0> reachable with at most max_len factors.
  std::vector<Word> factors;
  for (const Word& w : h0) {
    if (w.is_identity()) continue;
    factors.push_back(w);
    factors.push_back(w.inverse());
  }
  std::set<Word> elements;
  std::vector<Word> frontier{Word(rank)};
  for (int depth = 1; depth <= max_len && !factors.empty(); ++depth) {
    std::set<Word> next;
    for (const Word& p : frontier)
      for (const Word& f : factors) next.insert(p * f);
    frontier.assign(next.begin(), next.end());
    for (const Word& w : frontier)
      if (!w.is_identity() && w.length() <= static_cast<std::size_t>(max_len))
        elements.insert(w);
  }

  BruteForceResult result;
  if (elements.empty()) return result;
  auto target = stallings_core(rank, h1);
  for (const Word& g : reduced_words_up_to(rank, max_len)) {
    Word g_inv = g.inverse();
    for (const Word& h : elements) {
      if (contains(target, g * h * g_inv)) {
        result.violation_found = true;
        result.witness = ConjugacyWitness{g, h};
        return result;
      }
    }
  }
  return result;
}

}  // namespace gbtc
