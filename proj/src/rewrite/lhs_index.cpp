#include "qperm/rewrite/lhs_index.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace qperm {

LhsIndex::LhsIndex(std::size_t alphabet_size) : alphabet_size_(alphabet_size) { new_node(); }

std::int32_t LhsIndex::new_node() {
  children_.resize(children_.size() + alphabet_size_, -1);
  rule_at_.push_back(-1);
  return static_cast<std::int32_t>(rule_at_.size() - 1);
}

void LhsIndex::insert(const Word& lhs, int rule) {
  std::int32_t node = 0;
  for (Letter g : lhs) {
    std::int32_t next = child(node, g);
    if (next < 0) {
      next = new_node();
      children_[node * alphabet_size_ + g] = next;
    }
    node = next;
  }
  rule_at_[node] = rule;
}

void LhsIndex::erase(const Word& lhs) {
  std::int32_t node = 0;
  for (Letter g : lhs) {
    node = child(node, g);
    if (node < 0) return;
  }
  rule_at_[node] = -1;
}

int LhsIndex::find_exact(const Word& w) const {
  std::int32_t node = 0;
  for (Letter g : w) {
    node = child(node, g);
    if (node < 0) return -1;
  }
  return rule_at_[node];
}

std::optional<LhsIndex::Match> LhsIndex::find_leftmost(const Word& w) const {
  if (rule_at_[0] >= 0) return Match{0, rule_at_[0], 0};  // 1 = 0 collapses everything
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::int32_t node = 0;
    for (std::size_t i = start; i < n; ++i) {
      node = child(node, w[i]);
      if (node < 0) break;
      if (rule_at_[node] >= 0) return Match{start, rule_at_[node], i - start + 1};
    }
  }
  return std::nullopt;
}

LhsIndex::Automaton LhsIndex::build_automaton() const {
  const std::size_t states = rule_at_.size();
  Automaton a;
  a.next.assign(states * alphabet_size_, 0);
  a.dead.assign(states, 0);
  std::vector<std::int32_t> fail(states, 0);
  std::deque<std::int32_t> queue;
  for (std::size_t g = 0; g < alphabet_size_; ++g) {
    std::int32_t c = children_[g];
    if (c >= 0) {
      a.next[g] = c;
      fail[c] = 0;
      queue.push_back(c);
    } else {
      a.next[g] = 0;
    }
  }
  a.dead[0] = rule_at_[0] >= 0;
  while (!queue.empty()) {
    std::int32_t s = queue.front();
    queue.pop_front();
    a.dead[s] = a.dead[s] || rule_at_[s] >= 0 || a.dead[fail[s]];
    for (std::size_t g = 0; g < alphabet_size_; ++g) {
      std::int32_t c = children_[s * alphabet_size_ + g];
      if (c >= 0) {
        fail[c] = a.next[fail[s] * alphabet_size_ + g];
        a.next[s * alphabet_size_ + g] = c;
        queue.push_back(c);
      } else {
        a.next[s * alphabet_size_ + g] = a.next[fail[s] * alphabet_size_ + g];
      }
    }
  }
  return a;
}

std::vector<std::uint64_t> LhsIndex::count_irreducible(std::size_t max_length) const {
  const Automaton a = build_automaton();
  const std::size_t states = a.dead.size();
  std::vector<unsigned __int128> current(states, 0), next(states, 0);
  std::vector<std::uint64_t> counts;
  counts.reserve(max_length + 1);
  current[0] = a.dead[0] ? 0 : 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t len = 0; len <= max_length; ++len) {
    unsigned __int128 total = 0;
    for (auto v : current) total += v;
    if (total > kMax) throw std::overflow_error("irreducible word count exceeds 64 bits");
    counts.push_back(static_cast<std::uint64_t>(total));
    if (len == max_length) break;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (current[s] == 0) continue;
      for (std::size_t g = 0; g < alphabet_size_; ++g) {
        std::int32_t t = a.next[s * alphabet_size_ + g];
        if (!a.dead[t]) next[t] += current[s];
      }
    }
    std::swap(current, next);
  }
  return counts;
}

std::vector<Word> LhsIndex::irreducible_words(std::size_t max_length, std::size_t limit) const {
  const Automaton a = build_automaton();
  std::vector<Word> out;
  if (a.dead[0]) return out;
  // Breadth-first by length keeps deglex order: within one length, extending
  // lexicographically sorted prefixes by increasing letters stays sorted.
  std::vector<std::pair<std::vector<Letter>, std::int32_t>> layer{{{}, 0}};
  out.emplace_back();
  for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
    std::vector<std::pair<std::vector<Letter>, std::int32_t>> next_layer;
    for (const auto& [letters, state] : layer) {
      for (std::size_t g = 0; g < alphabet_size_; ++g) {
        std::int32_t t = a.next[state * alphabet_size_ + g];
        if (a.dead[t]) continue;
        auto w = letters;
        w.push_back(static_cast<Letter>(g));
        if (out.size() >= limit) throw std::length_error("too many irreducible words to list");
        out.emplace_back(w);
        next_layer.emplace_back(std::move(w), t);
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

}  // namespace qperm
