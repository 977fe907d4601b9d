#include "bsrbd/regions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bsrbd/error.hpp"

namespace bsrbd {

namespace {

// Groups coordinates by key in ascending key order.
template <class Key>
OrderedPartition group_by(std::vector<std::pair<Key, std::uint32_t>> items) {
  std::sort(items.begin(), items.end());
  OrderedPartition out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || !(items[i].first == items[i - 1].first)) out.emplace_back();
    out.back().push_back(items[i].second);
  }
  return out;
}

// Restriction of p along idx; reports whether old block 0 is still hit.
OrderedPartition restrict_partition(const OrderedPartition& p, std::span<const std::uint32_t> idx, bool& first_hit) {
  std::map<std::uint32_t, std::uint32_t> block_of;
  for (std::uint32_t b = 0; b < p.size(); ++b)
    for (std::uint32_t c : p[b]) block_of[c] = b;
  OrderedPartition tmp(p.size());
  for (std::uint32_t j = 0; j < idx.size(); ++j) {
    auto it = block_of.find(idx[j]);
    if (it != block_of.end()) tmp[it->second].push_back(j);
  }
  first_hit = !tmp.empty() && !tmp[0].empty();
  OrderedPartition out;
  for (auto& b : tmp)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

OrderedPartition restrict_partition(const OrderedPartition& p, std::span<const std::uint32_t> idx) {
  bool unused = false;
  return restrict_partition(p, idx, unused);
}

Rational ladder(std::uint32_t t, std::uint32_t k) { return Rational(BigInt(t), BigInt(k + 2)); }

std::string block_text(const std::vector<std::uint32_t>& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
  return s + "}";
}

std::string partition_text(const OrderedPartition& p, bool zero_first) {
  std::string s;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) s += " < ";
    if (b == 0 && zero_first) s += "0=";
    s += block_text(p[b]);
  }
  return s.empty() ? "-" : s;
}

}  // namespace

PartitionJ::PartitionJ(std::vector<Rational> pts) : points(std::move(pts)) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::uint32_t PartitionJ::interval_of(const Rational& r) const {
  auto it = std::lower_bound(points.begin(), points.end(), r);
  const auto i = static_cast<std::uint32_t>(it - points.begin());
  return (it != points.end() && *it == r) ? 2 * i + 1 : 2 * i;
}

std::string PartitionJ::interval_name(std::uint32_t t) const {
  if (is_point(t)) return "[" + points[(t - 1) / 2].to_string() + "]";
  const std::uint32_t i = t / 2;
  std::string lo = i > 0 ? points[i - 1].to_string() : "-inf";
  std::string hi = i < points.size() ? points[i].to_string() : "+inf";
  return "(" + lo + "," + hi + ")";
}

bool BdBoundedClass::fr_zero(std::uint32_t i) const {
  return zero_first && !fr.empty() && std::binary_search(fr[0].begin(), fr[0].end(), i);
}

SlrClass class_of_slr(std::span<const Rational> t, const PartitionJ& j) {
  std::vector<std::pair<Rational, std::uint32_t>> items;
  for (std::uint32_t i = 0; i < t.size(); ++i) items.emplace_back(t[i], i);
  SlrClass c;
  c.arity = static_cast<std::uint32_t>(t.size());
  for (auto& b : group_by(std::move(items))) c.blocks.push_back({j.interval_of(t[b[0]]), std::move(b)});
  return c;
}

BdBoundedClass class_of_bd_bounded(std::span<const Rational> t, std::int64_t kappa) {
  BdBoundedClass c;
  c.kappa = kappa;
  const Rational lo(-kappa - 1), hi(kappa + 1);
  std::vector<std::pair<Rational, std::uint32_t>> frs;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > lo && t[i] < hi))
      throw OutOfRange("coordinate " + t[i].to_string() + " outside (-kappa-1, kappa+1) for kappa = " +
                       std::to_string(kappa));
    auto [f, r] = floor_fr(t[i]);
    c.floors.push_back(to_int64(f));
    frs.emplace_back(r, i);
  }
  c.fr = group_by(std::move(frs));
  c.zero_first = !c.fr.empty() && fr(t[c.fr[0][0]]).is_zero();
  return c;
}

BdUnboundedClass class_of_bd_unbounded(std::span<const Rational> t, std::int64_t kappa) {
  BdUnboundedClass c;
  c.kappa = kappa;
  const Rational k(kappa);
  std::vector<std::pair<Rational, std::uint32_t>> below, above, in;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t[i] > k) {
      c.buckets.push_back(Bucket::Above);
      c.floors.push_back(0);
      above.emplace_back(t[i], i);
    } else if (t[i] < -k) {
      c.buckets.push_back(Bucket::Below);
      c.floors.push_back(0);
      below.emplace_back(t[i], i);
    } else {
      auto [f, r] = floor_fr(t[i]);
      c.buckets.push_back(Bucket::In);
      c.floors.push_back(to_int64(f));
      in.emplace_back(r, i);
    }
  }
  c.below = group_by(std::move(below));
  c.above = group_by(std::move(above));
  c.in_fr = group_by(std::move(in));
  c.zero_first = !c.in_fr.empty() && fr(t[c.in_fr[0][0]]).is_zero();
  return c;
}

std::vector<Rational> representative(const SlrClass& c, const PartitionJ& j) {
  std::vector<Rational> out(c.arity);
  std::size_t b = 0;
  while (b < c.blocks.size()) {
    const std::uint32_t t = c.blocks[b].interval;
    std::size_t e = b;
    while (e < c.blocks.size() && c.blocks[e].interval == t) ++e;
    const auto hosted = static_cast<long>(e - b);
    for (std::size_t q = b; q < e; ++q) {
      const long pos = static_cast<long>(q - b) + 1;  // 1-based within the interval
      Rational v;
      if (PartitionJ::is_point(t)) {
        v = j.points[(t - 1) / 2];
      } else {
        const std::uint32_t i = t / 2;
        const bool has_lo = i > 0, has_hi = i < j.points.size();
        if (has_lo && has_hi) {
          const Rational& lo = j.points[i - 1];
          v = lo + (j.points[i] - lo) * Rational(BigInt(pos), BigInt(hosted + 1));
        } else if (has_lo) {
          v = j.points[i - 1] + Rational(pos);
        } else if (has_hi) {
          v = j.points[i] - Rational(hosted - pos + 1);
        } else {
          v = Rational(pos);
        }
      }
      for (std::uint32_t x : c.blocks[q].coords) out[x] = v;
    }
    b = e;
  }
  return out;
}

std::vector<Rational> representative(const BdBoundedClass& c) {
  const std::uint32_t k = c.arity();
  std::vector<Rational> out(k);
  std::uint32_t t = 1;
  for (std::size_t b = 0; b < c.fr.size(); ++b) {
    const Rational f = (b == 0 && c.zero_first) ? Rational(0) : ladder(t++, k);
    for (std::uint32_t x : c.fr[b]) out[x] = Rational(c.floors[x]) + f;
  }
  return out;
}

std::vector<Rational> representative(const BdUnboundedClass& c) {
  const std::uint32_t k = c.arity();
  std::vector<Rational> out(k);
  std::uint32_t t = 1;
  const auto nb = static_cast<std::int64_t>(c.below.size());
  for (std::int64_t i = 0; i < nb; ++i) {
    const Rational v = Rational(-c.kappa - 1 - (nb - 1 - i)) + ladder(t++, k);
    for (std::uint32_t x : c.below[i]) out[x] = v;
  }
  for (std::size_t i = 0; i < c.above.size(); ++i) {
    const Rational v = Rational(c.kappa + static_cast<std::int64_t>(i) + 1) + ladder(t++, k);
    for (std::uint32_t x : c.above[i]) out[x] = v;
  }
  for (std::size_t b = 0; b < c.in_fr.size(); ++b) {
    const Rational f = (b == 0 && c.zero_first) ? Rational(0) : ladder(t++, k);
    for (std::uint32_t x : c.in_fr[b]) out[x] = Rational(c.floors[x]) + f;
  }
  return out;
}

SlrClass select_class(const SlrClass& c, std::span<const std::uint32_t> idx) {
  OrderedPartition p;
  for (const auto& b : c.blocks) p.push_back(b.coords);
  std::vector<std::uint32_t> block_of(c.arity);
  for (std::uint32_t b = 0; b < p.size(); ++b)
    for (std::uint32_t x : p[b]) block_of[x] = b;
  std::vector<std::vector<std::uint32_t>> tmp(p.size());
  for (std::uint32_t j = 0; j < idx.size(); ++j) tmp[block_of[idx[j]]].push_back(j);
  SlrClass out;
  out.arity = static_cast<std::uint32_t>(idx.size());
  for (std::size_t b = 0; b < tmp.size(); ++b)
    if (!tmp[b].empty()) out.blocks.push_back({c.blocks[b].interval, std::move(tmp[b])});
  return out;
}

BdBoundedClass select_class(const BdBoundedClass& c, std::span<const std::uint32_t> idx) {
  BdBoundedClass out;
  out.kappa = c.kappa;
  for (std::uint32_t x : idx) out.floors.push_back(c.floors[x]);
  bool first_hit = false;
  out.fr = restrict_partition(c.fr, idx, first_hit);
  out.zero_first = c.zero_first && first_hit;
  return out;
}

BdUnboundedClass select_class(const BdUnboundedClass& c, std::span<const std::uint32_t> idx) {
  BdUnboundedClass out;
  out.kappa = c.kappa;
  for (std::uint32_t x : idx) {
    out.buckets.push_back(c.buckets[x]);
    out.floors.push_back(c.floors[x]);
  }
  out.below = restrict_partition(c.below, idx);
  out.above = restrict_partition(c.above, idx);
  bool first_hit = false;
  out.in_fr = restrict_partition(c.in_fr, idx, first_hit);
  out.zero_first = c.zero_first && first_hit;
  return out;
}

RhoSigma rho_sigma(const BdBoundedClass& c) {
  RhoSigma rs;
  rs.rho.resize(c.arity());
  rs.sigma = c.floors;
  for (std::uint32_t b = 0; b < c.fr.size(); ++b)
    for (std::uint32_t x : c.fr[b]) rs.rho[x] = c.zero_first ? b : b + 1;
  return rs;
}

std::vector<Rational> apply_rho_sigma(const RhoSigma& rs, std::span<const Rational> ladder_values) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < rs.rho.size(); ++i) out.push_back(ladder_values[rs.rho[i]] + Rational(rs.sigma[i]));
  return out;
}

std::string describe(const SlrClass& c, const PartitionJ& j) {
  std::string s;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    if (b) s += " < ";
    s += block_text(c.blocks[b].coords) + "@" + j.interval_name(c.blocks[b].interval);
  }
  return s.empty() ? "()" : s;
}

std::string describe(const BdBoundedClass& c) {
  std::ostringstream os;
  os << "floors(";
  for (std::size_t i = 0; i < c.floors.size(); ++i) os << (i ? "," : "") << c.floors[i];
  os << ") fr: " << partition_text(c.fr, c.zero_first);
  return os.str();
}

std::string describe(const BdUnboundedClass& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.buckets.size(); ++i) {
    if (i) os << ",";
    switch (c.buckets[i]) {
      case Bucket::Below: os << "below"; break;
      case Bucket::Above: os << "above"; break;
      case Bucket::In: os << c.floors[i]; break;
    }
  }
  os << ")";
  if (!c.below.empty()) os << " below: " << partition_text(c.below, false);
  if (!c.above.empty()) os << " above: " << partition_text(c.above, false);
  if (!c.in_fr.empty()) os << " fr: " << partition_text(c.in_fr, c.zero_first);
  return os.str();
}

RegionScheme RegionScheme::slr(PartitionJ j) {
  RegionScheme s;
  s.kind = Kind::Slr;
  s.points = std::move(j);
  return s;
}

RegionScheme RegionScheme::bounded(std::int64_t kappa) {
  RegionScheme s;
  s.kind = Kind::Bounded;
  s.kappa = kappa;
  return s;
}

RegionScheme RegionScheme::unbounded(std::int64_t kappa) {
  RegionScheme s;
  s.kind = Kind::Unbounded;
  s.kappa = kappa;
  return s;
}

RegionClass RegionScheme::class_of(std::span<const Rational> t) const {
  switch (kind) {
    case Kind::Slr: return class_of_slr(t, points);
    case Kind::Bounded: return class_of_bd_bounded(t, kappa);
    case Kind::Unbounded: return class_of_bd_unbounded(t, kappa);
  }
  throw Error("unknown region scheme");
}

std::vector<Rational> RegionScheme::representative(const RegionClass& c) const {
  if (const auto* s = std::get_if<SlrClass>(&c)) return bsrbd::representative(*s, points);
  return std::visit(
      [](const auto& x) -> std::vector<Rational> {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SlrClass>) return {};
        else return bsrbd::representative(x);
      },
      c);
}

std::string RegionScheme::describe(const RegionClass& c) const {
  if (const auto* s = std::get_if<SlrClass>(&c)) return bsrbd::describe(*s, points);
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SlrClass>) return {};
        else return bsrbd::describe(x);
      },
      c);
}

RegionClass select_class(const RegionClass& c, std::span<const std::uint32_t> idx) {
  return std::visit([&](const auto& x) -> RegionClass { return select_class(x, idx); }, c);
}

std::uint32_t arity(const RegionClass& c) {
  return std::visit(
      [](const auto& x) -> std::uint32_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SlrClass>) return x.arity;
        else return x.arity();
      },
      c);
}

namespace {

// Enumeration by inserting coordinate i into a class over 0..i-1. Each
// complete class has exactly one insertion history, so no duplicates arise.
struct Enumerator {
  const RegionScheme& s;
  std::uint32_t k;
  const ClassFilter& keep;
  const std::function<bool(const RegionClass&)>& visit;
  bool stopped = false;

  // Returns false once enumeration is stopped.
  bool step(const RegionClass& partial, std::uint32_t placed) {
    if (placed > 0 && keep && !keep(partial)) return true;
    if (placed == k) {
      if (!visit(partial)) stopped = true;
      return !stopped;
    }
    std::visit([&](const auto& c) { extend(c, placed); }, partial);
    return !stopped;
  }

  // Yields every way of adding coordinate x to an ordered partition: a new
  // singleton block before block b, or joining block b, alternating.
  template <class F>
  void insertions(const OrderedPartition& p, std::size_t from, std::uint32_t x, F&& f) {
    for (std::size_t b = from; b <= p.size() && !stopped; ++b) {
      OrderedPartition q = p;
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(b), std::vector<std::uint32_t>{x});
      f(std::move(q));
      if (b == p.size() || stopped) break;
      q = p;
      q[b].push_back(x);
      f(std::move(q));
    }
  }

  void extend(const SlrClass& c, std::uint32_t x) {
    const std::uint32_t last = s.points.interval_count() - 1;
    const std::size_t nb = c.blocks.size();
    for (std::size_t b = 0; b <= nb && !stopped; ++b) {
      const std::uint32_t lo = b > 0 ? c.blocks[b - 1].interval : 0;
      const std::uint32_t hi = b < nb ? c.blocks[b].interval : last;
      for (std::uint32_t t = lo; t <= hi && !stopped; ++t) {
        if (PartitionJ::is_point(t) && ((b > 0 && t == lo) || (b < nb && t == hi))) continue;
        SlrClass d = c;
        d.arity = x + 1;
        d.blocks.insert(d.blocks.begin() + static_cast<std::ptrdiff_t>(b), SlrBlock{t, {x}});
        step(d, x + 1);
      }
      if (b == nb || stopped) break;
      SlrClass d = c;
      d.arity = x + 1;
      d.blocks[b].coords.push_back(x);
      step(d, x + 1);
    }
  }

  // Fractional-part insertion shared by both BD flavors: join or open the
  // zero block, or go among the nonzero blocks.
  template <class C, class Member>
  void fr_insert(const C& c, Member part, std::uint32_t x, bool allow_zero, bool allow_nonzero) {
    const OrderedPartition& p = c.*part;
    if (allow_zero) {
      C d = c;
      if (c.zero_first) (d.*part)[0].push_back(x);
      else (d.*part).insert((d.*part).begin(), std::vector<std::uint32_t>{x});
      d.zero_first = true;
      step(RegionClass(d), x + 1);
    }
    if (!allow_nonzero) return;
    insertions(p, c.zero_first ? 1 : 0, x, [&](OrderedPartition q) {
      C d = c;
      d.*part = std::move(q);
      step(RegionClass(d), x + 1);
    });
  }

  void extend(const BdBoundedClass& c, std::uint32_t x) {
    for (std::int64_t f = -s.kappa - 1; f <= s.kappa && !stopped; ++f) {
      BdBoundedClass d = c;
      d.kappa = s.kappa;
      d.floors.push_back(f);
      fr_insert(d, &BdBoundedClass::fr, x, f > -s.kappa - 1, true);
    }
  }

  void extend(const BdUnboundedClass& c, std::uint32_t x) {
    BdUnboundedClass base = c;
    base.kappa = s.kappa;
    base.floors.push_back(0);
    base.buckets.push_back(Bucket::Below);
    insertions(c.below, 0, x, [&](OrderedPartition q) {
      BdUnboundedClass d = base;
      d.below = std::move(q);
      step(d, x + 1);
    });
    for (std::int64_t f = -s.kappa; f <= s.kappa && !stopped; ++f) {
      BdUnboundedClass d = base;
      d.buckets.back() = Bucket::In;
      d.floors.back() = f;
      fr_insert(d, &BdUnboundedClass::in_fr, x, true, f < s.kappa);
    }
    if (stopped) return;
    base.buckets.back() = Bucket::Above;
    insertions(c.above, 0, x, [&](OrderedPartition q) {
      BdUnboundedClass d = base;
      d.above = std::move(q);
      step(d, x + 1);
    });
  }
};

RegionClass empty_class(const RegionScheme& s) {
  switch (s.kind) {
    case RegionScheme::Kind::Slr: return SlrClass{};
    case RegionScheme::Kind::Bounded: {
      BdBoundedClass c;
      c.kappa = s.kappa;
      return c;
    }
    case RegionScheme::Kind::Unbounded: {
      BdUnboundedClass c;
      c.kappa = s.kappa;
      return c;
    }
  }
  return SlrClass{};
}

}  // namespace

void enumerate_classes(const RegionScheme& s, std::uint32_t k, const ClassFilter& keep,
                       const std::function<bool(const RegionClass&)>& visit) {
  Enumerator e{s, k, keep, visit};
  e.step(empty_class(s), 0);
}

void enumerate_classes(const RegionScheme& s, std::uint32_t k, const std::function<bool(const RegionClass&)>& visit) {
  enumerate_classes(s, k, ClassFilter{}, visit);
}

std::uint64_t count_classes(const RegionScheme& s, std::uint32_t k) {
  std::uint64_t n = 0;
  enumerate_classes(s, k, [&](const RegionClass&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace bsrbd
