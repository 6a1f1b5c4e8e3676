#pragma once

// Brute-force reference evaluator. Elements are explicit sets of Venn regions
// (each region is the bitmask of the singletons it belongs to); every rule is
// evaluated straight from its summation over all tuples. Shares nothing with
// the library except the region labels used to convert its propositions.

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsmt/bba.hpp"

namespace oracle {

using Region = unsigned;
using Element = std::set<Region>;
using Masses = std::map<Element, double>;

inline std::vector<Region> regions(std::size_t n) {
  std::vector<Region> out;
  for (Region r = 1; r < (1u << n); ++r) out.push_back(r);
  return out;
}

inline Element singleton(std::size_t n, std::size_t i) {
  Element e;
  for (Region r : regions(n))
    if (r & (1u << (i - 1))) e.insert(r);
  return e;
}

inline Element meet(const Element& a, const Element& b) {
  Element out;
  for (Region r : a)
    if (b.count(r)) out.insert(r);
  return out;
}

inline Element join(Element a, const Element& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline Element total(std::size_t n) {
  auto rs = regions(n);
  return Element(rs.begin(), rs.end());
}

// Every subset of regions that is closed upward under region inclusion.
inline std::vector<Element> hyper_power_set(std::size_t n) {
  auto rs = regions(n);
  std::vector<Element> out;
  for (unsigned long pick = 0; pick < (1ul << rs.size()); ++pick) {
    Element e;
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (pick & (1ul << j)) e.insert(rs[j]);
    bool closed = true;
    for (Region a : e)
      for (Region b : rs)
        if ((a & b) == a && !e.count(b)) closed = false;
    if (closed) out.push_back(e);
  }
  return out;
}

// Union of the singletons taking part in the minimal regions of x.
inline Element u(std::size_t n, const Element& x) {
  Region digits = 0;
  for (Region a : x) {
    bool minimal = true;
    for (Region b : x)
      if (b != a && (a & b) == b) minimal = false;
    if (minimal) digits |= a;
  }
  Element out;
  for (std::size_t i = 1; i <= n; ++i)
    if (digits & (1u << (i - 1))) out = join(out, singleton(n, i));
  return out;
}

// Expression evaluator: names t1..tn (or the given names), & binds tighter than |.
class Evaluator {
 public:
  Evaluator(std::vector<std::string> names, std::string text)
      : names_(std::move(names)), text_(std::move(text)) {}

  Element run() {
    Element e = expr();
    skip();
    if (pos_ != text_.size()) throw std::runtime_error("trailing input in " + text_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  Element expr() {
    Element e = term();
    for (skip(); pos_ < text_.size() && text_[pos_] == '|'; skip()) {
      ++pos_;
      e = join(e, term());
    }
    return e;
  }
  Element term() {
    Element e = factor();
    for (skip(); pos_ < text_.size() && text_[pos_] == '&'; skip()) {
      ++pos_;
      e = meet(e, factor());
    }
    return e;
  }
  Element factor() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Element e = expr();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw std::runtime_error("missing )");
      ++pos_;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return singleton(names_.size(), i + 1);
    throw std::runtime_error("unknown name '" + name + "'");
  }

  std::vector<std::string> names_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline Element eval(const std::vector<std::string>& names, const std::string& text) {
  if (text == "EMPTY") return {};
  return Evaluator(names, text).run();
}

inline Element from_library(const dsmt::Proposition& p) {
  Element e;
  const auto& table = p.frame().atoms();
  for (std::size_t j = 0; j < table.count; ++j)
    if (p.atoms() & (dsmt::AtomSet{1} << j)) e.insert(table.digits[j]);
  return e;
}

inline Masses from_library(const dsmt::MassAssignment& m) {
  Masses out;
  for (const auto& [p, v] : m) out[from_library(p)] += v;
  return out;
}

inline double at(const Masses& m, const Element& e) {
  auto it = m.find(e);
  return it == m.end() ? 0.0 : it->second;
}

// Visits every k-tuple of hyper-power set elements with its mass product.
template <typename F>
void for_each_tuple(std::size_t n, const std::vector<Masses>& ms, F&& visit) {
  auto all = hyper_power_set(n);
  std::vector<std::size_t> idx(ms.size(), 0);
  while (true) {
    std::vector<const Element*> xs;
    double product = 1.0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      xs.push_back(&all[idx[i]]);
      product *= at(ms[i], all[idx[i]]);
    }
    visit(xs, product);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == all.size()) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

inline Masses classic(std::size_t n, const std::vector<Masses>& ms) {
  Masses out;
  for_each_tuple(n, ms, [&](const std::vector<const Element*>& xs, double p) {
    Element m = *xs[0];
    for (auto* x : xs) m = meet(m, *x);
    out[m] += p;
  });
  return out;
}

struct Hybrid {
  Masses s1, s2, s3, result;
};

// empty_regions: union of the regions of all constraints.
inline Hybrid hybrid(std::size_t n, const std::vector<Masses>& ms, const Element& empty_regions) {
  auto is_empty = [&](const Element& e) {
    for (Region r : e)
      if (!empty_regions.count(r)) return false;
    return true;
  };
  Hybrid h;
  for_each_tuple(n, ms, [&](const std::vector<const Element*>& xs, double p) {
    Element m = *xs[0], j = *xs[0], uu;
    bool all_empty = true;
    for (auto* x : xs) {
      m = meet(m, *x);
      j = join(j, *x);
      uu = join(uu, u(n, *x));
      all_empty = all_empty && is_empty(*x);
    }
    h.s1[m] += p;
    if (is_empty(m)) h.s3[j] += p;
    if (all_empty) h.s2[is_empty(uu) ? total(n) : uu] += p;
  });
  for (const auto& a : hyper_power_set(n))
    if (!is_empty(a)) h.result[a] = at(h.s1, a) + at(h.s2, a) + at(h.s3, a);
  return h;
}

// ---- power-set rules, on plain subsets of singletons ----

using Subset = unsigned;
using SubsetMasses = std::map<Subset, double>;

inline SubsetMasses to_subsets(std::size_t n, const Masses& m) {
  SubsetMasses out;
  for (const auto& [e, v] : m) {
    Subset s = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (meet(e, singleton(n, i)) == singleton(n, i)) s |= 1u << (i - 1);
    Element rebuilt;
    for (std::size_t i = 1; i <= n; ++i)
      if (s & (1u << (i - 1))) rebuilt = join(rebuilt, singleton(n, i));
    if (rebuilt != e) throw std::runtime_error("not a power-set element");
    out[s] += v;
  }
  return out;
}

inline SubsetMasses conjunctive(const SubsetMasses& a, const SubsetMasses& b) {
  SubsetMasses out;
  for (const auto& [x, vx] : a)
    for (const auto& [y, vy] : b) out[x & y] += vx * vy;
  return out;
}

inline SubsetMasses dempster(const SubsetMasses& a, const SubsetMasses& b) {
  SubsetMasses c = conjunctive(a, b);
  double k = c[0];
  c.erase(0);
  for (auto& [s, v] : c) v /= 1.0 - k;
  return c;
}

}  // namespace oracle
