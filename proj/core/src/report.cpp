#include "bsrbd/report.hpp"

#include <sstream>

namespace bsrbd {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Sat: return "sat";
    case Status::Unsat: return "unsat";
    case Status::Error: return "error";
  }
  return "error";
}

ResultReport make_report(const NormalizedClauseSet& n, const DecideResult& r) {
  ResultReport rep;
  rep.status = r.sat ? Status::Sat : Status::Unsat;
  rep.stats = r.stats;
  if (r.sat) rep.model = r.model;
  rep.signature = n.set;
  rep.signature.clauses.clear();
  return rep;
}

ResultReport error_report(std::string kind, std::string message) {
  ResultReport rep;
  rep.status = Status::Error;
  rep.error_kind = std::move(kind);
  rep.error = std::move(message);
  return rep;
}

namespace {

std::string const_name(const ClauseSet& s, std::uint32_t c) {
  return c < s.free_constants.size() ? s.free_constants[c] : "#" + std::to_string(c);
}

std::string atom_text(const ResultReport& r, const PropAtom& a) {
  const auto& s = r.signature;
  std::string t = a.pred < s.predicates.size() ? s.predicates[a.pred].name : "P#" + std::to_string(a.pred);
  t += " (";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) t += ",";
    t += const_name(s, a.args[i]);
  }
  return t + ") class#" + std::to_string(a.cls);
}

std::string scheme_text(const RegionScheme& s) {
  switch (s.kind) {
    case RegionScheme::Kind::Slr: {
      std::string t = "slr points {";
      for (std::size_t i = 0; i < s.points.points.size(); ++i) t += (i ? ", " : "") + s.points.points[i].to_string();
      return t + "}";
    }
    case RegionScheme::Kind::Bounded: return "bounded kappa " + std::to_string(s.kappa);
    case RegionScheme::Kind::Unbounded: return "unbounded kappa " + std::to_string(s.kappa);
  }
  return "";
}

struct Stat {
  const char* key;
  std::uint64_t value;
};

std::vector<Stat> stats_of(const DecideStats& s) {
  return {{"preorders", s.preorders},       {"gammas", s.gammas},
          {"candidates", s.candidates},     {"classes", s.classes},
          {"prop_vars", s.prop_vars},       {"prop_clauses", s.prop_clauses},
          {"decisions", s.decisions},       {"conflicts", s.conflicts},
          {"wall_ms", static_cast<std::uint64_t>(s.wall.count())}};
}

void structured(std::ostringstream& o, const ResultReport& r) {
  o << "status: " << to_string(r.status) << "\n";
  if (r.status == Status::Error) {
    o << "error_kind: " << r.error_kind << "\n";
    o << "error: " << r.error << "\n";
  }
  for (const auto& st : stats_of(r.stats)) o << "stat." << st.key << ": " << st.value << "\n";
  if (!r.model) return;
  const auto& m = *r.model;
  const auto& s = r.signature;
  o << "model.scheme: " << scheme_text(m.scheme) << "\n";
  o << "model.domain:";
  for (auto e : m.domain) o << " " << const_name(s, e);
  o << "\n";
  for (std::size_t c = 0; c < m.fconst_value.size(); ++c)
    o << "model.const: " << const_name(s, static_cast<std::uint32_t>(c)) << " = " << const_name(s, m.fconst_value[c]) << "\n";
  for (std::size_t d = 0; d < m.gamma.size(); ++d)
    o << "model.gamma: " << (d < s.skolems.size() ? s.skolems[d] : "#" + std::to_string(d)) << " = "
      << m.gamma[d].to_string() << "\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c)
    o << "model.class: #" << c << " " << m.scheme.describe(m.classes.at(static_cast<std::uint32_t>(c))) << "\n";
  for (const auto& [a, v] : m.table)
    if (v) o << "model.atom: " << atom_text(r, a) << " = true\n";
}

void human(std::ostringstream& o, const ResultReport& r) {
  o << to_string(r.status);
  if (r.status == Status::Error) o << " (" << r.error_kind << "): " << r.error;
  o << "\n";
  if (r.model) {
    const auto& m = *r.model;
    const auto& s = r.signature;
    o << "model over " << scheme_text(m.scheme) << "\n";
    o << "  domain {";
    for (std::size_t i = 0; i < m.domain.size(); ++i) o << (i ? ", " : "") << const_name(s, m.domain[i]);
    o << "}\n";
    for (std::size_t c = 0; c < m.fconst_value.size(); ++c)
      o << "  " << const_name(s, static_cast<std::uint32_t>(c)) << " -> " << const_name(s, m.fconst_value[c]) << "\n";
    for (std::size_t d = 0; d < m.gamma.size(); ++d)
      o << "  " << (d < s.skolems.size() ? s.skolems[d] : "#" + std::to_string(d)) << " = " << m.gamma[d].to_string()
        << "\n";
    o << "  classes:\n";
    for (std::size_t c = 0; c < m.classes.size(); ++c)
      o << "    #" << c << "  " << m.scheme.describe(m.classes.at(static_cast<std::uint32_t>(c))) << "\n";
    o << "  true atoms:\n";
    for (const auto& [a, v] : m.table)
      if (v) o << "    " << atom_text(r, a) << "\n";
  }
  o << "statistics:";
  for (const auto& st : stats_of(r.stats)) o << " " << st.key << "=" << st.value;
  o << "\n";
}

}  // namespace

std::string emit_result(const ResultReport& r, OutputFormat f) {
  std::ostringstream o;
  if (f == OutputFormat::Structured) structured(o, r);
  else human(o, r);
  return o.str();
}

}  // namespace bsrbd
