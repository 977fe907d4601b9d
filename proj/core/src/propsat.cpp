#include "bsrbd/propsat.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsrbd/error.hpp"

namespace bsrbd {

void PropInstance::add_clause(std::span<const Lit> c) {
  for (Lit l : c) {
    const auto v = static_cast<std::uint32_t>(std::abs(l));
    if (l == 0 || v > num_vars) throw Error("literal out of range");
  }
  lits.insert(lits.end(), c.begin(), c.end());
  starts.push_back(static_cast<std::uint32_t>(lits.size()));
}

bool satisfies(const PropInstance& inst, const std::vector<bool>& model) {
  for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
    bool ok = false;
    for (Lit l : inst.clause(i))
      if (model[static_cast<std::size_t>(std::abs(l))] == (l > 0)) ok = true;
    if (!ok) return false;
  }
  return true;
}

namespace {

// Internal literal: 2*var + (negative ? 1 : 0), vars from 0.
using ILit = std::uint32_t;
constexpr ILit neg(ILit l) { return l ^ 1U; }
constexpr std::uint32_t var_of(ILit l) { return l >> 1; }

enum : std::int8_t { kFalse = -1, kUndef = 0, kTrue = 1 };

class Solver {
 public:
  explicit Solver(std::uint32_t n)
      : watches_(2 * static_cast<std::size_t>(n)), assign_(n, kUndef), level_(n, 0), reason_(n, kNoReason),
        activity_(n, 0.0), heap_pos_(n, -1), seen_(n, 0) {
    for (std::uint32_t v = 0; v < n; ++v) heap_insert(v);
  }

  // Returns false when the formula is already contradictory.
  bool add(std::vector<ILit> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == neg(c[i - 1])) return true;  // tautology
    if (c.empty()) return false;
    if (c.size() == 1) {
      if (value(c[0]) == kFalse) return false;
      if (value(c[0]) == kUndef) enqueue(c[0], kNoReason);
      return true;
    }
    attach(std::move(c));
    return true;
  }

  bool solve(SatStats& st) {
    if (propagate() != kNoReason) return false;
    std::uint64_t restart_index = 0;
    while (true) {
      const std::uint64_t budget = 100 * luby(++restart_index);
      std::uint64_t conflicts = 0;
      while (true) {
        const std::uint32_t confl = propagate();
        st.propagations = props_;
        if (confl != kNoReason) {
          ++st.conflicts;
          ++conflicts;
          if (trail_lim_.empty()) return false;
          std::uint32_t bt = 0;
          auto learnt = analyze(confl, bt);
          backtrack(bt);
          if (learnt.size() == 1) {
            enqueue(learnt[0], kNoReason);
          } else {
            const ILit first = learnt[0];
            const std::uint32_t ci = attach(std::move(learnt));
            enqueue(first, ci);
          }
          decay();
          continue;
        }
        if (conflicts >= budget) {
          backtrack(0);
          break;
        }
        const auto v = pick();
        if (!v) return true;
        ++st.decisions;
        trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
        enqueue(2 * *v + 1, kNoReason);  // false first
      }
    }
  }

  bool model_value(std::uint32_t v) const { return assign_[v] == kTrue; }

 private:
  static constexpr std::uint32_t kNoReason = ~0U;

  struct ClauseRef {
    std::uint32_t start, size;
  };

  std::int8_t value(ILit l) const {
    const std::int8_t a = assign_[var_of(l)];
    return (l & 1U) ? static_cast<std::int8_t>(-a) : a;
  }

  std::uint32_t attach(std::vector<ILit> c) {
    const auto ci = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back({static_cast<std::uint32_t>(arena_.size()), static_cast<std::uint32_t>(c.size())});
    arena_.insert(arena_.end(), c.begin(), c.end());
    watches_[neg(c[0])].push_back(ci);
    watches_[neg(c[1])].push_back(ci);
    return ci;
  }

  void enqueue(ILit l, std::uint32_t reason) {
    const std::uint32_t v = var_of(l);
    assign_[v] = (l & 1U) ? kFalse : kTrue;
    level_[v] = static_cast<std::uint32_t>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Watches are indexed by the literal whose falsification triggers a visit.
  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      const ILit p = trail_[qhead_++];
      ++props_;
      auto& ws = watches_[p];
      std::size_t keep = 0;
      for (std::size_t k = 0; k < ws.size(); ++k) {
        const std::uint32_t ci = ws[k];
        ILit* c = arena_.data() + clauses_[ci].start;
        const std::uint32_t sz = clauses_[ci].size;
        const ILit falsified = neg(p);
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value(c[0]) == kTrue) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::uint32_t j = 2; j < sz; ++j) {
          if (value(c[j]) != kFalse) {
            std::swap(c[1], c[j]);
            watches_[neg(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (value(c[0]) == kFalse) {
          for (std::size_t r = k + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
          ws.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(keep);
    }
    return kNoReason;
  }

  std::vector<ILit> analyze(std::uint32_t confl, std::uint32_t& bt_level) {
    std::vector<ILit> learnt{0};
    const auto cur = static_cast<std::uint32_t>(trail_lim_.size());
    int pending = 0;
    ILit p = 0;
    bool first = true;
    std::size_t idx = trail_.size();
    std::vector<std::uint32_t> touched;
    while (true) {
      const ClauseRef cr = clauses_[confl];
      for (std::uint32_t j = first ? 0 : 1; j < cr.size; ++j) {
        const ILit q = arena_[cr.start + j];
        const std::uint32_t v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        touched.push_back(v);
        bump(v);
        if (level_[v] == cur) ++pending;
        else learnt.push_back(q);
      }
      first = false;
      do {
        p = trail_[--idx];
      } while (!seen_[var_of(p)]);
      --pending;
      if (pending == 0) break;
      confl = reason_[var_of(p)];
      // p is the implied literal; put it first so index 0 is skipped above
      ILit* c = arena_.data() + clauses_[confl].start;
      if (c[0] != p)
        for (std::uint32_t j = 1; j < clauses_[confl].size; ++j)
          if (c[j] == p) {
            std::swap(c[0], c[j]);
            break;
          }
    }
    learnt[0] = neg(p);
    for (auto v : touched) seen_[v] = 0;
    bt_level = 0;
    std::size_t max_i = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      if (level_[var_of(learnt[i])] > bt_level) {
        bt_level = level_[var_of(learnt[i])];
        max_i = i;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    return learnt;
  }

  void backtrack(std::uint32_t lvl) {
    if (trail_lim_.size() <= lvl) return;
    for (std::size_t i = trail_.size(); i-- > trail_lim_[lvl];) {
      const std::uint32_t v = var_of(trail_[i]);
      assign_[v] = kUndef;
      reason_[v] = kNoReason;
      if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
  }

  std::optional<std::uint32_t> pick() {
    while (!heap_.empty()) {
      const std::uint32_t v = heap_pop();
      if (assign_[v] == kUndef) return v;
    }
    return std::nullopt;
  }

  static std::uint64_t luby(std::uint64_t i) {
    std::uint64_t k = 1;
    while ((1ULL << k) - 1 < i) ++k;
    while (true) {
      if (i == (1ULL << k) - 1) return 1ULL << (k - 1);
      if (i >= (1ULL << (k - 1))) {
        i -= (1ULL << (k - 1)) - 1;
        k = 1;
        while ((1ULL << k) - 1 < i) ++k;
      } else {
        --k;
      }
    }
  }

  void bump(std::uint32_t v) {
    activity_[v] += inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) sift_up(static_cast<std::size_t>(heap_pos_[v]));
  }
  void decay() { inc_ /= 0.95; }

  // Max-heap on activity; ties broken by the lower variable index.
  bool before(std::uint32_t a, std::uint32_t b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }
  void heap_insert(std::uint32_t v) {
    heap_pos_[v] = static_cast<std::int32_t>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
  }
  std::uint32_t heap_pop() {
    const std::uint32_t top = heap_[0];
    heap_pos_[top] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_pos_[heap_[0]] = 0;
      sift_down(0);
    }
    return top;
  }
  void sift_up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_pos_[heap_[i]] = static_cast<std::int32_t>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int32_t>(i);
  }
  void sift_down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_pos_[heap_[i]] = static_cast<std::int32_t>(i);
      i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int32_t>(i);
  }

  std::vector<ClauseRef> clauses_;
  std::vector<ILit> arena_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<ILit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double inc_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> heap_pos_;
  std::vector<char> seen_;
  std::uint64_t props_ = 0;
};

}  // namespace

std::optional<std::vector<bool>> prop_solve(const PropInstance& inst, SatStats* stats) {
  SatStats local;
  SatStats& st = stats ? *stats : local;
  Solver s(inst.num_vars);
  for (std::size_t i = 0; i < inst.num_clauses(); ++i) {
    std::vector<ILit> c;
    for (Lit l : inst.clause(i)) {
      const auto v = static_cast<std::uint32_t>(std::abs(l)) - 1;
      c.push_back(2 * v + (l < 0 ? 1U : 0U));
    }
    if (!s.add(std::move(c))) return std::nullopt;
  }
  if (!s.solve(st)) return std::nullopt;
  std::vector<bool> model(inst.num_vars + 1, false);
  for (std::uint32_t v = 0; v < inst.num_vars; ++v) model[v + 1] = s.model_value(v);
  return model;
}

}  // namespace bsrbd
