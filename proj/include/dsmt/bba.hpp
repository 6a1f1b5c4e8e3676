#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"

namespace dsmt {

inline constexpr double kMassTolerance = 1e-9;

// Generalized basic belief assignment over the hyper-power set. Absent keys
// carry zero mass.
class MassAssignment {
 public:
  using Map = std::map<Proposition, double>;

  MassAssignment() = default;
  explicit MassAssignment(Frame frame, bool smets_mode = false)
      : frame_(std::move(frame)), smets_mode_(smets_mode) {}

  const Frame& frame() const { return frame_; }
  bool smets_mode() const { return smets_mode_; }
  void set_smets_mode(bool on) { smets_mode_ = on; }

  void add(const Proposition& p, double mass) {
    check_frame(p);
    masses_[p] += mass;
  }

  void set(const Proposition& p, double mass) {
    check_frame(p);
    masses_[p] = mass;
  }

  double mass(const Proposition& p) const {
    auto it = masses_.find(p);
    return it == masses_.end() ? 0.0 : it->second;
  }

  // Sum in canonical key order.
  double total() const {
    double s = 0.0;
    for (const auto& [p, v] : masses_) s += v;
    return s;
  }

  // Keys with strictly positive mass, canonical order.
  std::vector<std::pair<Proposition, double>> focal() const {
    std::vector<std::pair<Proposition, double>> out;
    for (const auto& [p, v] : masses_)
      if (v > 0.0) out.emplace_back(p, v);
    return out;
  }

  const Map& masses() const { return masses_; }
  Map::const_iterator begin() const { return masses_.begin(); }
  Map::const_iterator end() const { return masses_.end(); }

 private:
  void check_frame(const Proposition& p) const {
    if (!(p.frame() == frame_))
      throw Error(Errc::kFrameMismatch, "proposition " + to_expression(p) + " not on this frame");
  }

  Frame frame_;
  Map masses_;
  bool smets_mode_ = false;
};

struct FocalSet {
  std::vector<Proposition> props;
};

inline FocalSet focal_set(const MassAssignment& m) {
  FocalSet out;
  for (const auto& [p, v] : m.focal()) out.props.push_back(p);
  return out;
}

inline void validate(const MassAssignment& m) {
  for (const auto& [p, v] : m) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw Error(Errc::kNegativeMass, to_expression(p) + " has mass " + std::to_string(v));
    if (p.empty() && v > 0.0 && !m.smets_mode())
      throw Error(Errc::kEmptySetMass, "mass " + std::to_string(v) + " on EMPTY");
  }
  double total = m.total();
  if (std::fabs(total - 1.0) > kMassTolerance)
    throw Error(Errc::kMassSumNotOne, "masses sum to " + std::to_string(total));
}

inline MassAssignment vacuous(const Frame& frame) {
  MassAssignment m(frame);
  m.set(total_ignorance(frame), 1.0);
  return m;
}

// A power-set element is a union of singletons (or EMPTY): every generator
// is a single digit.
inline bool is_power_set_element(const Proposition& p) {
  for (const Atom& g : p.generators())
    if (std::popcount(g.digits) != 1) return false;
  return true;
}

// Digit mask of the singletons whose union is p (Shafer semantics).
inline DigitMask shafer_mask(const Proposition& p) {
  if (!is_power_set_element(p))
    throw Error(Errc::kNotPowerSetSupport, to_expression(p) + " is not a union of singletons");
  DigitMask d = 0;
  for (const Atom& g : p.generators()) d |= g.digits;
  return d;
}

inline Proposition from_shafer_mask(const Frame& frame, DigitMask digits) {
  const auto& t = frame.atoms();
  AtomSet s = 0;
  for (std::size_t i = 0; i < t.n; ++i)
    if (digits & (DigitMask{1} << i)) s |= t.with_digit[i];
  return up_closure(frame, s);
}

inline Proposition complement(const Proposition& p) {
  DigitMask all = (DigitMask{1} << p.frame().size()) - 1;
  return from_shafer_mask(p.frame(), all & ~shafer_mask(p));
}

// Sum of m(B) over power-set elements B contained in a (EMPTY included, so
// that pl(a) = 1 - bel(complement(a)) holds in Smets mode as well).
inline double bel(const MassAssignment& m, const Proposition& a) {
  DigitMask da = shafer_mask(a);
  double s = 0.0;
  for (const auto& [b, v] : m) {
    DigitMask db = shafer_mask(b);
    if ((db & ~da) == 0) s += v;
  }
  return s;
}

inline double pl(const MassAssignment& m, const Proposition& a) {
  DigitMask da = shafer_mask(a);
  double s = 0.0;
  for (const auto& [b, v] : m)
    if (shafer_mask(b) & da) s += v;
  return s;
}

}  // namespace dsmt
