#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsmt/bba.hpp"
#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"

namespace dsmt {

// Integrity constraints reduced to the set of atoms they force empty.
class HybridModel {
 public:
  HybridModel() = default;

  const Frame& frame() const { return frame_; }
  const std::vector<Proposition>& constraints() const { return constraints_; }
  AtomSet empty_atoms() const { return empty_atoms_; }
  AtomSet live_atoms() const { return frame_.atoms().all & ~empty_atoms_; }
  bool is_free() const { return empty_atoms_ == 0; }
  // Exactly one non-empty atom survives: one non-empty class.
  bool is_trivial() const { return std::popcount(live_atoms()) == 1; }

 private:
  friend HybridModel build_model(const Frame&, std::vector<Proposition>);
  Frame frame_;
  std::vector<Proposition> constraints_;
  AtomSet empty_atoms_ = 0;
};

inline HybridModel build_model(const Frame& frame, std::vector<Proposition> constraints) {
  HybridModel m;
  m.frame_ = frame;
  for (const auto& c : constraints) {
    if (!(c.frame() == frame))
      throw Error(Errc::kFrameMismatch, "constraint " + to_expression(c) + " on another frame");
    m.empty_atoms_ |= c.atoms();
  }
  if (m.empty_atoms_ == frame.atoms().all)
    throw Error(Errc::kVacuousModel, "constraints empty the total ignorance");
  m.constraints_ = std::move(constraints);
  return m;
}

inline HybridModel free_model(const Frame& frame) { return build_model(frame, {}); }

namespace detail {
inline void require_model_frame(const HybridModel& model, const Proposition& p) {
  if (!(model.frame() == p.frame()))
    throw Error(Errc::kFrameMismatch, "proposition not on the model's frame");
}
}  // namespace detail

inline int phi(const HybridModel& model, const Proposition& p) {
  detail::require_model_frame(model, p);
  return (p.atoms() & ~model.empty_atoms()) == 0 ? 0 : 1;
}

// Smallest member of p's equivalence class: the up-closure of its surviving
// atoms. Removing the empty atoms alone would not leave an up-set.
inline Proposition reduce(const HybridModel& model, const Proposition& p) {
  detail::require_model_frame(model, p);
  return up_closure(p.frame(), p.atoms() & ~model.empty_atoms());
}

struct EquivClass {
  Proposition representative;
  std::vector<Proposition> members;
};

inline std::vector<EquivClass> survivors(const HybridModel& model,
                                         std::size_t limit = kDefaultEnumerationLimit) {
  std::map<Proposition, std::vector<Proposition>> groups;
  for (const auto& p : enumerate_hpset(model.frame(), limit))
    groups[reduce(model, p)].push_back(p);
  std::vector<EquivClass> out;
  for (auto& [rep, members] : groups) out.push_back({rep, std::move(members)});
  return out;
}

struct EncodingMatrix {
  std::vector<Atom> basis;                // surviving atoms, canonical order
  std::vector<std::vector<int>> rows;     // one per class, EMPTY row included
  std::vector<std::string> row_labels;
};

inline EncodingMatrix encoding_matrix(const HybridModel& model,
                                      std::size_t limit = kDefaultEnumerationLimit) {
  const auto& t = model.frame().atoms();
  EncodingMatrix out;
  std::vector<std::size_t> cols;
  detail::for_each_bit(model.live_atoms(), [&](std::size_t a) {
    cols.push_back(a);
    out.basis.push_back(Atom{t.digits[a]});
  });
  for (const auto& cls : survivors(model, limit)) {
    std::vector<int> row;
    for (std::size_t a : cols) row.push_back((cls.representative.atoms() >> a) & 1 ? 1 : 0);
    out.rows.push_back(std::move(row));
    out.row_labels.push_back(to_expression(cls.representative));
  }
  return out;
}

// Per-class contributions in canonical key order, keyed by representative.
inline std::map<Proposition, std::vector<double>> compress_terms(const HybridModel& model,
                                                                 const MassAssignment& m) {
  if (!(model.frame() == m.frame()))
    throw Error(Errc::kFrameMismatch, "assignment not on the model's frame");
  std::map<Proposition, std::vector<double>> out;
  for (const auto& [p, v] : m) {
    if (phi(model, p) == 0) {
      if (v > 0.0)
        throw Error(Errc::kMassOnEmptyClass,
                    to_expression(p) + " is empty under the model but carries " +
                        std::to_string(v));
      continue;
    }
    out[reduce(model, p)].push_back(v);
  }
  return out;
}

inline MassAssignment compress(const HybridModel& model, const MassAssignment& m) {
  MassAssignment out(m.frame(), m.smets_mode());
  for (const auto& [rep, parts] : compress_terms(model, m)) {
    double s = 0.0;
    for (double v : parts) s += v;
    out.set(rep, s);
  }
  return out;
}

}  // namespace dsmt
