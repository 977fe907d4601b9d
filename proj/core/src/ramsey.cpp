#include "bsrbd/ramsey.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bsrbd/decide.hpp"
#include "bsrbd/error.hpp"

namespace bsrbd {

namespace {

using Fn = std::function<Color(std::span<const Rational>)>;

class Tracer {
 public:
  explicit Tracer(RamseyTrace* out) : out_(out) {}
  bool on() const { return out_ != nullptr; }
  void line(int depth, const std::string& s) {
    if (out_) out_->push_back(std::string(2 * static_cast<std::size_t>(depth), ' ') + s);
  }

 private:
  RamseyTrace* out_;
};

std::string show(std::span<const Rational> r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ", ";
    s += r[i].to_string();
  }
  return s + "}";
}

// Dense ids for color vectors of a derived coloring.
class Interner {
 public:
  Color id(std::vector<Color> v) {
    auto [it, fresh] = ids_.try_emplace(std::move(v), ids_.size());
    return it->second;
  }

 private:
  std::map<std::vector<Color>, Color> ids_;
};

// Calls f on every ascending k-subset of [0, n) as an index vector.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Groups r (ascending) by key and returns the largest group; groups are
// compared by size, then by smallest member.
template <class Key>
std::vector<Rational> largest_class(const std::vector<Rational>& r, const std::vector<Key>& keys,
                                    std::size_t* nclasses) {
  std::map<Key, std::size_t> slot;
  std::vector<std::vector<Rational>> groups;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(keys[i], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(r[i]);
  }
  *nclasses = groups.size();
  std::size_t best = 0;
  for (std::size_t g = 1; g < groups.size(); ++g)
    if (groups[g].size() > groups[best].size()) best = g;
  return groups.empty() ? std::vector<Rational>{} : std::move(groups[best]);
}

// Runs the construction to the end and returns everything it keeps; any
// subset of the result is monochromatic as well.
std::vector<Rational> ascend(std::vector<Rational> r, std::uint32_t m, const Fn& chi, Tracer& tr, int depth) {
  if (m == 1) {
    std::vector<Color> keys;
    keys.reserve(r.size());
    for (const auto& x : r) keys.push_back(chi(std::span<const Rational>(&x, 1)));
    std::size_t ncls = 0;
    auto q = largest_class(r, keys, &ncls);
    if (tr.on()) tr.line(depth, "m=1: " + std::to_string(ncls) + " color classes, kept " + show(q));
    return q;
  }
  if (r.size() < m) return r;

  std::vector<Rational> s(r.begin(), r.begin() + (m - 2));
  std::vector<Rational> rest(r.begin() + (m - 2), r.end());
  std::vector<Rational> tuple(m);
  while (!rest.empty()) {
    s.push_back(rest.front());
    rest.erase(rest.begin());
    if (rest.empty()) break;
    // Subsets avoiding the new element were already uniform on rest.
    const std::size_t last = s.size() - 1;
    std::vector<std::vector<Color>> keys(rest.size());
    for_each_subset(last, m - 2, [&](std::span<const std::size_t> idx) {
      for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = s[idx[i]];
      tuple[m - 2] = s[last];
      for (std::size_t e = 0; e < rest.size(); ++e) {
        tuple[m - 1] = rest[e];
        keys[e].push_back(chi(tuple));
      }
    });
    std::size_t ncls = 0;
    rest = largest_class(rest, keys, &ncls);
    if (tr.on())
      tr.line(depth, "m=" + std::to_string(m) + ": s_" + std::to_string(s.size()) + " = " + s.back().to_string() +
                         ", " + std::to_string(ncls) + " classes, " + std::to_string(rest.size()) + " left");
  }
  if (tr.on()) tr.line(depth, "m=" + std::to_string(m) + ": sequence " + show(s));

  // chi'(t) = chi(t, successor of t's last element in s). Tuples ending in
  // the last element may get any color; they borrow the one of the tuple
  // ending one step earlier so that element is not lost needlessly.
  Fn derived = [&s, &chi](std::span<const Rational> t) -> Color {
    std::vector<Rational> u(t.begin(), t.end());
    auto pos = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), t.back()) - s.begin());
    if (pos + 1 >= s.size()) {
      if (pos == 0 || (u.size() > 1 && u[u.size() - 2] == s[pos - 1])) return 0;
      u.back() = s[--pos];
    }
    u.push_back(s[pos + 1]);
    return chi(u);
  };
  return ascend(s, m - 1, derived, tr, depth + 1);
}

std::vector<std::vector<Rational>> product(const std::vector<std::vector<Rational>>& rs, std::uint32_t m, const Fn& chi,
                                           Tracer& tr, int depth) {
  const std::size_t p = rs.size();
  if (p == 1) return {ascend(rs[0], m, chi, tr, depth)};

  // every concatenation of ascending m-tuples from R_1..R_{p-1}
  std::vector<std::vector<Rational>> prefixes{{}};
  for (std::size_t b = 0; b + 1 < p; ++b) {
    std::vector<std::vector<Rational>> next;
    for (const auto& pre : prefixes) {
      for_each_subset(rs[b].size(), m, [&](std::span<const std::size_t> idx) {
        auto v = pre;
        for (auto i : idx) v.push_back(rs[b][i]);
        next.push_back(std::move(v));
      });
    }
    prefixes = std::move(next);
  }
  if (tr.on())
    tr.line(depth, "p=" + std::to_string(p) + ": block " + std::to_string(p) + " colored by " +
                       std::to_string(prefixes.size()) + " prefixes");

  Interner ids;
  Fn by_prefixes = [&](std::span<const Rational> t) -> Color {
    std::vector<Color> v;
    v.reserve(prefixes.size());
    std::vector<Rational> u;
    for (const auto& pre : prefixes) {
      u = pre;
      u.insert(u.end(), t.begin(), t.end());
      v.push_back(chi(u));
    }
    return ids.id(std::move(v));
  };
  auto qp = ascend(rs[p - 1], m, by_prefixes, tr, depth + 1);
  if (qp.size() < m) {
    // no ascending tuple in Q_p: nothing left to constrain
    std::vector<std::vector<Rational>> out(rs.begin(), rs.end() - 1);
    out.push_back(std::move(qp));
    return out;
  }
  const std::vector<Rational> fixed(qp.begin(), qp.begin() + m);
  if (tr.on()) tr.line(depth, "p=" + std::to_string(p) + ": fixed " + show(fixed));
  Fn with_fixed = [&](std::span<const Rational> t) -> Color {
    std::vector<Rational> u(t.begin(), t.end());
    u.insert(u.end(), fixed.begin(), fixed.end());
    return chi(u);
  };
  auto out = product(std::vector<std::vector<Rational>>(rs.begin(), rs.end() - 1), m, with_fixed, tr, depth + 1);
  out.push_back(std::move(qp));
  return out;
}

Fn checked(const ColoringOracle& chi) {
  return [&chi](std::span<const Rational> t) -> Color {
    const Color c = chi.color(t);
    if (c >= chi.palette)
      throw Error("coloring returned " + std::to_string(c) + " outside its palette of " + std::to_string(chi.palette));
    return c;
  };
}

void require_ascending(std::span<const Rational> r, const char* what) {
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i - 1] < r[i])) throw Error(std::string(what) + ": input is not strictly ascending");
}

std::vector<Rational> prefix(const std::vector<Rational>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

void require_args(std::uint32_t m, std::size_t n, const char* what) {
  if (m < 1 || n < 1) throw Error(std::string(what) + ": m and n must be at least 1");
}

}  // namespace

std::vector<Rational> mono_ascending(std::span<const Rational> r, std::uint32_t m, std::size_t n,
                                     const ColoringOracle& chi, RamseyTrace* trace) {
  require_args(m, n, "mono_ascending");
  require_ascending(r, "mono_ascending");
  if (r.size() < n)
    throw InsufficientInput("mono_ascending: input has " + std::to_string(r.size()) + " elements, " +
                            std::to_string(n) + " requested");
  std::vector<Rational> rv(r.begin(), r.end());
  if (n < m) return prefix(rv, n);
  Tracer tr(trace);
  const Fn f = checked(chi);
  auto q = ascend(std::move(rv), m, f, tr, 0);
  if (q.size() < n)
    throw InsufficientInput("mono_ascending: the final m=1 class selection kept " + std::to_string(q.size()) +
                            " elements, " + std::to_string(n) + " requested");
  return prefix(q, n);
}

std::vector<std::vector<Rational>> mono_product(const std::vector<std::vector<Rational>>& rs, std::uint32_t m,
                                                std::size_t n, const ColoringOracle& chi, RamseyTrace* trace) {
  require_args(m, n, "mono_product");
  if (rs.empty()) throw Error("mono_product: no blocks");
  for (std::size_t b = 0; b < rs.size(); ++b) {
    require_ascending(rs[b], "mono_product");
    if (rs[b].size() < n)
      throw InsufficientInput("mono_product: block " + std::to_string(b + 1) + " has " +
                              std::to_string(rs[b].size()) + " elements, " + std::to_string(n) + " requested");
  }
  std::vector<std::vector<Rational>> out;
  if (n < m) {
    for (const auto& r : rs) out.push_back(prefix(r, n));
    return out;
  }
  Tracer tr(trace);
  const Fn f = checked(chi);
  out = product(rs, m, f, tr, 0);
  for (std::size_t b = 0; b < out.size(); ++b) {
    if (out[b].size() < n)
      throw InsufficientInput("mono_product: block " + std::to_string(b + 1) + " shrank to " +
                              std::to_string(out[b].size()) + " elements, " + std::to_string(n) + " requested");
    out[b] = prefix(out[b], n);
  }
  return out;
}

std::vector<RhoMap> rho_maps(std::uint32_t m, std::size_t p, std::size_t k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> targets;
  for (std::uint32_t b = 0; b < p; ++b)
    for (std::uint32_t l = 0; l < m; ++l) targets.emplace_back(b, l);
  for (std::size_t i = 0; i < k; ++i) targets.emplace_back(static_cast<std::uint32_t>(p + i), 0);
  std::vector<RhoMap> out;
  if (targets.empty()) return out;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    RhoMap r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = targets[idx[i]];
    out.push_back(std::move(r));
    std::size_t i = m;
    while (i > 0 && ++idx[i - 1] == targets.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Rational> apply_rho(const RhoMap& rho, std::uint32_t m, std::span<const Rational> t,
                                std::span<const Rational> q) {
  const std::size_t p = t.size() / m;
  std::vector<Rational> out;
  out.reserve(rho.size());
  for (const auto& [k, l] : rho) out.push_back(k < p ? t[k * m + l] : q[k - p]);
  return out;
}

std::vector<std::vector<Rational>> mono_mapped(const std::vector<std::vector<Rational>>& rs,
                                               std::span<const Rational> q, std::uint32_t m, std::size_t n,
                                               const ColoringOracle& chi, RamseyTrace* trace) {
  require_args(m, n, "mono_mapped");
  if (rs.empty()) throw Error("mono_mapped: no blocks");
  for (std::size_t b = 0; b < rs.size(); ++b) {
    require_ascending(rs[b], "mono_mapped");
    if (rs[b].size() < n)
      throw InsufficientInput("mono_mapped: block " + std::to_string(b + 1) + " has " +
                              std::to_string(rs[b].size()) + " elements, " + std::to_string(n) + " requested");
  }
  std::vector<std::vector<Rational>> s = rs;
  if (n < m) {
    for (auto& b : s) b = prefix(b, n);
    return s;
  }
  Tracer tr(trace);
  const Fn f = checked(chi);
  const auto maps = rho_maps(m, rs.size(), q.size());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    const RhoMap& rho = maps[j];
    if (tr.on()) {
      std::string d = "rho_" + std::to_string(j + 1) + " =";
      for (const auto& [k, l] : rho)
        d += k < rs.size() ? " <" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ">"
                           : " q" + std::to_string(k - rs.size() + 1);
      tr.line(0, d);
    }
    Fn mapped = [&](std::span<const Rational> t) -> Color { return f(apply_rho(rho, m, t, q)); };
    s = product(s, m, mapped, tr, 1);
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s[b].size() < n)
        throw InsufficientInput("mono_mapped: block " + std::to_string(b + 1) + " shrank to " +
                                std::to_string(s[b].size()) + " elements at map " + std::to_string(j + 1) + " of " +
                                std::to_string(maps.size()) + ", " + std::to_string(n) + " requested");
  }
  for (auto& b : s) b = prefix(b, n);
  return s;
}

std::size_t rebuild_lambda(const NormalizedClauseSet& n) {
  std::size_t lam = 0;
  for (const auto& p : n.set.predicates) lam = std::max<std::size_t>(lam, p.base_arity);
  for (const auto& cl : n.set.clauses) lam = std::max(lam, cl.num_base_vars());
  for (const auto& cl : n.defs) lam = std::max(lam, cl.num_base_vars());
  return lam;
}

namespace {

// Free elements of a: one constant names each distinct value.
struct FreePart {
  std::vector<std::uint32_t> domain;        // ConstIds
  std::vector<std::uint32_t> fconst_value;  // by ConstId
  std::vector<std::uint32_t> value_of;      // by ConstId: a's element
};

FreePart free_part(const ClauseSet& n, const Structure& a) {
  FreePart fp;
  std::map<std::uint32_t, std::uint32_t> name;
  for (ConstId c = 0; c < n.free_constants.size(); ++c) {
    const std::uint32_t v = a.free_constant(c);
    fp.value_of.push_back(v);
    auto [it, fresh] = name.try_emplace(v, c);
    if (fresh) fp.domain.push_back(c);
    fp.fconst_value.push_back(it->second);
  }
  return fp;
}

std::uint32_t common_base_arity(const ClauseSet& n) {
  std::uint32_t m = 0;
  for (const auto& p : n.predicates) m = std::max(m, p.base_arity);
  return m;
}

// a's facts about base tuple t, as one color.
struct FactColoring {
  const ClauseSet& n;
  const Structure& a;
  const FreePart& fp;
  Interner ids;

  Color operator()(std::span<const Rational> t) {
    std::vector<Color> bits;
    for (PredId p = 0; p < n.predicates.size(); ++p) {
      const auto& sig = n.predicates[p];
      if (sig.base_arity != t.size()) continue;
      for_each_tuple(fp.domain, sig.free_arity, [&](std::span<const std::uint32_t> args) {
        std::vector<std::uint32_t> vals;
        for (auto c : args) vals.push_back(fp.value_of[c]);
        bits.push_back(a.holds(p, vals, t) ? 1 : 0);
      });
    }
    return ids.id(std::move(bits));
  }
};

// Fills the table from representatives chosen by pick(class).
template <class Pick>
void fill_table(const ClauseSet& n, const Structure& a, const FreePart& fp, InterpretationDescriptor& d, Pick&& pick) {
  std::map<std::uint32_t, std::vector<RegionClass>> by_arity;
  for (PredId p = 0; p < n.predicates.size(); ++p) {
    const auto& sig = n.predicates[p];
    auto [it, fresh] = by_arity.try_emplace(sig.base_arity);
    if (fresh)
      enumerate_classes(d.scheme, sig.base_arity, [&](const RegionClass& c) {
        it->second.push_back(c);
        return true;
      });
    for (const auto& c : it->second) {
      const std::vector<Rational> q = pick(c);
      const std::uint32_t id = d.classes.intern(c);
      for_each_tuple(fp.domain, sig.free_arity, [&](std::span<const std::uint32_t> args) {
        std::vector<std::uint32_t> vals;
        for (auto e : args) vals.push_back(fp.value_of[e]);
        if (a.holds(p, vals, q)) d.table[PropAtom{p, {args.begin(), args.end()}, id}] = true;
      });
    }
  }
}

}  // namespace

UniformRebuild rebuild_uniform_slr(const NormalizedClauseSet& n, const Structure& a, std::size_t samples,
                                   RamseyTrace* trace) {
  if (n.set.mode != Mode::SLR) throw Error("rebuild_uniform_slr: clause set is not SLR");
  const auto gamma = a.skolem_values();
  if (gamma.size() != n.set.skolems.size()) throw UnboundSymbol("rebuild_uniform_slr: model misses Skolem values");
  UniformRebuild out;
  std::vector<Rational> pts(gamma.begin(), gamma.end());
  for (const auto& r : base_rationals(n.set)) pts.push_back(r);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  out.points = pts;
  const PartitionJ j(pts);

  // evenly spaced samples inside each open interval
  std::vector<std::vector<Rational>> rs(pts.size() + 1);
  const auto s = static_cast<long>(samples);
  for (std::size_t i = 0; i <= pts.size(); ++i) {
    for (long t = 1; t <= s; ++t) {
      if (pts.empty()) rs[i].push_back(Rational(t));
      else if (i == 0) rs[i].push_back(pts.front() - Rational(s + 1 - t));
      else if (i == pts.size()) rs[i].push_back(pts.back() + Rational(t));
      else rs[i].push_back(pts[i - 1] + (pts[i] - pts[i - 1]) * Rational(BigInt(t), BigInt(s + 1)));
    }
  }

  const FreePart fp = free_part(n.set, a);
  const std::uint32_t m = common_base_arity(n.set);
  const std::size_t lam = rebuild_lambda(n);
  if (m == 0 || lam == 0) {
    for (auto& r : rs) r.resize(std::min(r.size(), std::max<std::size_t>(lam, 1)));
    out.blocks = rs;
  } else {
    FactColoring colors{n.set, a, fp, {}};
    ColoringOracle chi{[&](std::span<const Rational> t) { return colors(t); }, ~Color{0}};
    out.blocks = mono_mapped(rs, pts, m, lam, chi, trace);
  }

  auto& d = out.model;
  d.mode = Mode::SLR;
  d.scheme = RegionScheme::slr(j);
  d.domain = fp.domain;
  d.fconst_value = fp.fconst_value;
  d.gamma.assign(gamma.begin(), gamma.end());
  fill_table(n.set, a, fp, d, [&](const RegionClass& rc) {
    const auto& c = std::get<SlrClass>(rc);
    std::vector<Rational> q(c.arity);
    std::map<std::uint32_t, std::size_t> used;
    for (const auto& b : c.blocks) {
      Rational v;
      if (PartitionJ::is_point(b.interval)) {
        v = pts[b.interval / 2];
      } else {
        const auto& blk = out.blocks[b.interval / 2];
        const std::size_t rank = used[b.interval]++;
        if (rank >= blk.size()) throw InsufficientInput("rebuild_uniform_slr: interval block too small for a class");
        v = blk[rank];
      }
      for (auto i : b.coords) q[i] = v;
    }
    return q;
  });
  return out;
}

UniformRebuild rebuild_uniform_bd(const NormalizedClauseSet& n, const Structure& a, std::size_t samples,
                                  RamseyTrace* trace) {
  if (n.set.mode != Mode::BD) throw Error("rebuild_uniform_bd: clause set is not BD");
  UniformRebuild out;
  const std::int64_t kappa = bd_kappa(n.set);
  const FreePart fp = free_part(n.set, a);
  const std::uint32_t m = common_base_arity(n.set);
  const std::size_t lam = std::max<std::size_t>(rebuild_lambda(n), 1);

  std::vector<Rational> r;
  for (std::size_t t = 1; t <= samples; ++t) r.push_back(Rational(BigInt(static_cast<long>(t)), BigInt(static_cast<long>(samples + 1))));

  std::vector<Rational> q;
  if (m == 0) {
    q = prefix(r, lam);
  } else {
    // all (rho, sigma): rho into ranks 0..m, sigma into floors -kappa-1..kappa
    std::vector<RhoSigma> pairs;
    {
      std::vector<std::size_t> idx(2 * m, 0);
      const std::size_t nfl = static_cast<std::size_t>(2 * kappa + 2);
      while (true) {
        RhoSigma rs;
        for (std::uint32_t i = 0; i < m; ++i) {
          rs.rho.push_back(static_cast<std::uint32_t>(idx[i]));
          rs.sigma.push_back(static_cast<std::int64_t>(idx[m + i]) - kappa - 1);
        }
        pairs.push_back(std::move(rs));
        std::size_t i = 2 * m;
        while (i > 0 && ++idx[i - 1] == (i - 1 < m ? m + 1 : nfl)) idx[--i] = 0;
        if (i == 0) break;
      }
    }
    FactColoring colors{n.set, a, fp, {}};
    Interner ids;
    ColoringOracle lifted{[&](std::span<const Rational> t) {
                            std::vector<Rational> ladder{Rational(0)};
                            ladder.insert(ladder.end(), t.begin(), t.end());
                            std::vector<Color> v;
                            v.reserve(pairs.size());
                            for (const auto& rs : pairs) v.push_back(colors(apply_rho_sigma(rs, ladder)));
                            return ids.id(std::move(v));
                          },
                          ~Color{0}};
    q = mono_ascending(r, m, lam, lifted, trace);
  }
  q.insert(q.begin(), Rational(0));
  out.blocks = {q};
  for (std::int64_t k = -kappa - 1; k <= kappa; ++k)
    for (const auto& x : q) out.q_hat.push_back(x + Rational(static_cast<long>(k)));
  std::sort(out.q_hat.begin(), out.q_hat.end());

  auto& d = out.model;
  d.mode = Mode::BD;
  d.scheme = RegionScheme::unbounded(kappa);
  d.domain = fp.domain;
  d.fconst_value = fp.fconst_value;
  // fractional parts: below blocks smallest, then above, then the nonzero in-blocks
  fill_table(n.set, a, fp, d, [&](const RegionClass& rc) {
    const auto& c = std::get<BdUnboundedClass>(rc);
    std::vector<Rational> v(c.arity());
    std::size_t next = 1;
    auto take = [&]() -> const Rational& {
      if (next >= q.size()) throw InsufficientInput("rebuild_uniform_bd: too few fractional parts for a class");
      return q[next++];
    };
    for (const auto& b : c.below) {
      const Rational x = take() - Rational(static_cast<long>(kappa + 1));
      for (auto i : b) v[i] = x;
    }
    for (const auto& b : c.above) {
      const Rational x = take() + Rational(static_cast<long>(kappa));
      for (auto i : b) v[i] = x;
    }
    for (std::size_t bi = 0; bi < c.in_fr.size(); ++bi) {
      const Rational fr = (bi == 0 && c.zero_first) ? Rational(0) : take();
      for (auto i : c.in_fr[bi]) v[i] = fr + Rational(static_cast<long>(c.floors[i]));
    }
    if (!(class_of_bd_unbounded(v, kappa) == c)) throw Error("internal error: representative left its class");
    return v;
  });
  return out;
}

RamseyTrace ramsey_demo(std::optional<std::uint64_t> seed) {
  RamseyTrace t;
  std::vector<Rational> r;
  for (int i = 1; i <= 20; ++i) r.push_back(Rational(i));
  t.push_back("mono_ascending: R = 1..20, m = 2, n = 3, chi(r1, r2) = floor(r2 - r1) mod 2");
  ColoringOracle parity{[](std::span<const Rational> x) {
                          return static_cast<Color>(to_int64((x[1] - x[0]).floor()) & 1);
                        },
                        2};
  const auto q = mono_ascending(r, 2, 3, parity, &t);
  t.push_back("Q = " + show(q));

  std::vector<std::vector<Rational>> blocks{{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}};
  t.push_back("mono_product: R1 = 1..6, R2 = 7..12, m = 1, n = 2, chi(a, b) = (a + b) mod 3");
  ColoringOracle sum3{[](std::span<const Rational> x) {
                        return static_cast<Color>(to_int64((x[0] + x[1]).floor()) % 3);
                      },
                      3};
  const auto qs = mono_product(blocks, 1, 2, sum3, &t);
  t.push_back("Q1 = " + show(qs[0]) + ", Q2 = " + show(qs[1]));

  const std::vector<Rational> fixed{Rational(0)};
  t.push_back("mono_mapped: R1 = 1..6, q1 = 0, m = 2, n = 2, chi(x, y) = [x < y] + [x = 0]");
  ColoringOracle cmp{[](std::span<const Rational> x) {
                       return static_cast<Color>((x[0] < x[1] ? 1 : 0) + (x[0].is_zero() ? 2 : 0));
                     },
                     4};
  const auto qm = mono_mapped({blocks[0]}, fixed, 2, 2, cmp, &t);
  t.push_back("Q1 = " + show(qm[0]));

  if (seed) {
    constexpr int kSize = 40;
    std::mt19937_64 rng(*seed);
    std::vector<Color> table(kSize * kSize, 0);
    for (int i = 0; i < kSize; ++i)
      for (int j = i + 1; j < kSize; ++j) table[i * kSize + j] = rng() & 1;
    t.push_back("mono_ascending: R = 1..40, m = 2, n = 3, random two-coloring, seed " + std::to_string(*seed));
    ColoringOracle random{[&table](std::span<const Rational> x) {
                            return table[(to_int64(x[0].floor()) - 1) * kSize + to_int64(x[1].floor()) - 1];
                          },
                          2};
    std::vector<Rational> big;
    for (int i = 1; i <= kSize; ++i) big.push_back(Rational(i));
    t.push_back("Q = " + show(mono_ascending(big, 2, 3, random, &t)));
  }
  return t;
}

}  // namespace bsrbd
