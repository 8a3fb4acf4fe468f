#include "multiflower/inequality.hpp"

#include <cmath>
#include <cstdio>

namespace multiflower {

std::string to_string(CutTag tag) {
  switch (tag) {
    case CutTag::std_lin: return "std";
    case CutTag::flower: return "flower";
    case CutTag::eflower: return "eflower";
    case CutTag::rmc: return "rmc";
    case CutTag::projection: return "projection";
    case CutTag::instance: return "instance";
  }
  return "?";
}

LinearInequality& LinearInequality::add(const VarRef& v, double c) {
  if (c == 0.0) return *this;
  auto [it, inserted] = coeffs.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) coeffs.erase(it);
  }
  return *this;
}

double LinearInequality::lhs_at(const std::map<VarRef, double>& point) const {
  double s = 0.0;
  for (const auto& [v, c] : coeffs) {
    auto it = point.find(v);
    if (it == point.end())
      throw input_error("point has no value for variable " + v.label());
    s += c * it->second;
  }
  return s;
}

namespace {

std::string fmt_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string LinearInequality::canonical_key() const {
  std::string key;
  for (const auto& [v, c] : coeffs) {
    key += v.label();
    key += ":";
    key += fmt_value(c);
    key += ";";
  }
  key += "<=" + fmt_value(rhs);
  return key;
}

std::string LinearInequality::normalized_key() const {
  double scale = 0.0;
  for (const auto& [v, c] : coeffs) scale = std::max(scale, std::fabs(c));
  if (scale == 0.0) scale = std::max(1.0, std::fabs(rhs));
  std::string key;
  for (const auto& [v, c] : coeffs) {
    key += v.label();
    key += ":";
    key += fmt_value(c / scale);
    key += ";";
  }
  key += "<=" + fmt_value(rhs / scale);
  return key;
}

std::string LinearInequality::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (!first) out += " + ";
    out += fmt_value(c) + "*" + v.label();
    first = false;
  }
  if (first) out += "0";
  out += " <= " + fmt_value(rhs);
  return out;
}

bool FractionalPoint::covers(const Hypergraph& h) const {
  for (int v = 1; v <= h.n; ++v)
    if (!values.count(VarRef::vertex(v))) return false;
  for (const auto& e : h.edges)
    if (!values.count(VarRef::edge(e))) return false;
  return true;
}

}  // namespace multiflower
