#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/bba.hpp"
#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/model.hpp"

namespace dsmt {

namespace detail {

inline double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// Collects products per target and sums each target's terms pairwise, in
// insertion order.
class Accumulator {
 public:
  void add(AtomSet key, double v) { terms_[key].push_back(v); }

  std::map<Proposition, double> to_map(const Frame& frame) const {
    std::map<Proposition, double> out;
    for (const auto& [key, vals] : terms_)
      out[up_closure(frame, key)] = pairwise_sum(vals.data(), vals.size());
    return out;
  }

 private:
  std::map<AtomSet, std::vector<double>> terms_;
};

inline const Frame& common_frame(const std::vector<MassAssignment>& ms) {
  if (ms.size() < 2)
    throw Error(Errc::kFewerThanTwoSources,
                "combination needs at least two sources, got " + std::to_string(ms.size()));
  for (const auto& m : ms)
    if (!(m.frame() == ms.front().frame()))
      throw Error(Errc::kFrameMismatch, "sources on different frames");
  for (const auto& m : ms) validate(m);
  return ms.front().frame();
}

struct FocalEntry {
  AtomSet atoms;
  double mass;
  AtomSet u;  // u(X) as atoms
};

// Visits every tuple of entries, one per source, in lexicographic order.
template <typename F>
void for_each_tuple(const std::vector<std::vector<FocalEntry>>& lists, F&& f) {
  const std::size_t k = lists.size();
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<const FocalEntry*> tuple(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = &lists[i][idx[i]];
    f(tuple);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

inline std::vector<FocalEntry> focal_entries(const MassAssignment& m) {
  std::vector<FocalEntry> out;
  for (const auto& [p, v] : m.focal()) out.push_back({p.atoms(), v, u_of(p).atoms()});
  return out;
}

inline std::vector<FocalEntry> dense_entries(const MassAssignment& m, std::size_t limit) {
  std::vector<FocalEntry> out;
  for (const auto& p : enumerate_hpset(m.frame(), limit))
    out.push_back({p.atoms(), m.mass(p), u_of(p).atoms()});
  return out;
}

}  // namespace detail

// Conjunctive rule on the free model over k >= 2 sources.
inline MassAssignment dsm_classic(const std::vector<MassAssignment>& ms) {
  const Frame& frame = detail::common_frame(ms);
  std::vector<std::vector<detail::FocalEntry>> lists;
  for (const auto& m : ms) lists.push_back(detail::focal_entries(m));
  detail::Accumulator acc;
  detail::for_each_tuple(lists, [&](const std::vector<const detail::FocalEntry*>& t) {
    AtomSet meet = t[0]->atoms;
    double prod = t[0]->mass;
    for (std::size_t i = 1; i < t.size(); ++i) {
      meet &= t[i]->atoms;
      prod *= t[i]->mass;
    }
    acc.add(meet, prod);
  });
  MassAssignment out(frame);
  for (const auto& [p, v] : acc.to_map(frame)) out.set(p, v);
  return out;
}

struct HybridBreakdown {
  std::map<Proposition, double> s1;
  std::map<Proposition, double> s2;
  std::map<Proposition, double> s3;
  MassAssignment result;
};

struct HybridOptions {
  enum class Evaluation {
    kFocalSets,  // tuples of focal elements only
    kTwoStep,    // classic rule first, then transfers of the empty products
    kDense,      // every tuple of hyper-power set elements
  };
  Evaluation evaluation = Evaluation::kFocalSets;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

// Hybrid rule. Meets, joins and u() are taken on the free lattice; classes
// are merged only by compress().
inline HybridBreakdown dsm_hybrid(const std::vector<MassAssignment>& ms, const HybridModel& model,
                                  const HybridOptions& options = {}) {
  const Frame& frame = detail::common_frame(ms);
  if (!(model.frame() == frame))
    throw Error(Errc::kFrameMismatch, "model and sources on different frames");
  const AtomSet empty = model.empty_atoms();
  const AtomSet top = frame.atoms().all;
  auto is_empty = [empty](AtomSet s) { return (s & ~empty) == 0; };

  std::vector<std::vector<detail::FocalEntry>> lists;
  for (const auto& m : ms)
    lists.push_back(options.evaluation == HybridOptions::Evaluation::kDense
                        ? detail::dense_entries(m, options.enumeration_limit)
                        : detail::focal_entries(m));

  const bool two_step = options.evaluation == HybridOptions::Evaluation::kTwoStep;
  detail::Accumulator a1, a2, a3;
  detail::for_each_tuple(lists, [&](const std::vector<const detail::FocalEntry*>& t) {
    AtomSet meet = t[0]->atoms, join = t[0]->atoms;
    double prod = t[0]->mass;
    bool all_empty = is_empty(t[0]->atoms);
    for (std::size_t i = 1; i < t.size(); ++i) {
      meet &= t[i]->atoms;
      join |= t[i]->atoms;
      prod *= t[i]->mass;
      all_empty = all_empty && is_empty(t[i]->atoms);
    }
    if (!two_step) a1.add(meet, prod);
    if (!is_empty(meet)) return;
    a3.add(join, prod);
    if (all_empty) {
      AtomSet u = 0;
      for (const auto* e : t) u |= e->u;
      a2.add(is_empty(u) ? top : u, prod);
    }
  });

  HybridBreakdown out;
  if (two_step) {
    for (const auto& [p, v] : dsm_classic(ms)) out.s1[p] = v;
  } else {
    out.s1 = a1.to_map(frame);
  }
  out.s2 = a2.to_map(frame);
  out.s3 = a3.to_map(frame);

  out.result = MassAssignment(frame);
  std::map<Proposition, std::vector<double>> parts;
  for (const auto* s : {&out.s1, &out.s2, &out.s3})
    for (const auto& [p, v] : *s)
      if (phi(model, p) == 1) parts[p].push_back(v);
  for (const auto& [p, vals] : parts) {
    double total = 0.0;
    for (double v : vals) total += v;
    out.result.set(p, total);
  }
  return out;
}

// ---- Shafer-model rules on power-set supported assignments ----

namespace detail {

using ShaferMap = std::map<DigitMask, double>;

inline ShaferMap to_shafer(const MassAssignment& m) {
  ShaferMap out;
  for (const auto& [p, v] : m)
    if (v != 0.0) out[shafer_mask(p)] += v;
  return out;
}

inline MassAssignment from_shafer(const Frame& frame, const ShaferMap& s) {
  bool has_empty = s.count(0) && s.at(0) > 0.0;
  MassAssignment out(frame, has_empty);
  for (const auto& [d, v] : s) out.set(from_shafer_mask(frame, d), v);
  return out;
}

inline std::map<DigitMask, std::vector<double>> conjunctive_terms(const ShaferMap& a,
                                                                  const ShaferMap& b) {
  std::map<DigitMask, std::vector<double>> terms;
  for (const auto& [da, va] : a)
    for (const auto& [db, vb] : b) terms[da & db].push_back(va * vb);
  return terms;
}

inline ShaferMap sum_terms(const std::map<DigitMask, std::vector<double>>& terms) {
  ShaferMap out;
  for (const auto& [d, vals] : terms) out[d] = pairwise_sum(vals.data(), vals.size());
  return out;
}

inline void check_pair(const MassAssignment& m1, const MassAssignment& m2) {
  if (!(m1.frame() == m2.frame())) throw Error(Errc::kFrameMismatch, "sources on different frames");
  validate(m1);
  validate(m2);
}

}  // namespace detail

// Unnormalized conjunctive combination; conflict stays on EMPTY.
inline MassAssignment conjunctive(const MassAssignment& m1, const MassAssignment& m2) {
  detail::check_pair(m1, m2);
  return detail::from_shafer(
      m1.frame(),
      detail::sum_terms(detail::conjunctive_terms(detail::to_shafer(m1), detail::to_shafer(m2))));
}

struct DempsterResult {
  MassAssignment masses;
  double conflict = 0.0;
};

// Pairwise left to right. The normalizer is summed from the non-conflicting
// products directly so that total contradiction is detected exactly.
inline DempsterResult dempster(const std::vector<MassAssignment>& ms) {
  const Frame& frame = detail::common_frame(ms);
  detail::ShaferMap acc = detail::to_shafer(ms[0]);
  double agreement = 1.0;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    auto terms = detail::conjunctive_terms(acc, detail::to_shafer(ms[i]));
    std::vector<double> kept;
    for (const auto& [d, vals] : terms)
      if (d != 0) kept.insert(kept.end(), vals.begin(), vals.end());
    double norm = detail::pairwise_sum(kept.data(), kept.size());
    if (norm == 0.0)
      throw Error(Errc::kFullContradiction,
                  "sources are in total conflict; the normalized combination does not exist");
    detail::ShaferMap next;
    for (const auto& [d, vals] : terms)
      if (d != 0) next[d] = detail::pairwise_sum(vals.data(), vals.size()) / norm;
    acc = std::move(next);
    agreement *= norm;
  }
  return {detail::from_shafer(frame, acc), 1.0 - agreement};
}

using WeightMap = std::map<Proposition, double>;

// Conjunctive combination, then m(A) += w(A) m(EMPTY) and m(EMPTY) := w(EMPTY) m(EMPTY).
inline MassAssignment lefevre_combine(const MassAssignment& m1, const MassAssignment& m2,
                                      const WeightMap& weights) {
  double total = 0.0;
  for (const auto& [p, w] : weights) {
    if (!(w >= 0.0 && w <= 1.0))
      throw Error(Errc::kWeightsNotNormalized,
                  "weight " + std::to_string(w) + " on " + to_expression(p));
    shafer_mask(p);
    total += w;
  }
  if (std::fabs(total - 1.0) > kMassTolerance)
    throw Error(Errc::kWeightsNotNormalized, "weights sum to " + std::to_string(total));

  detail::check_pair(m1, m2);
  auto conj = detail::sum_terms(
      detail::conjunctive_terms(detail::to_shafer(m1), detail::to_shafer(m2)));
  double conflict = conj.count(0) ? conj.at(0) : 0.0;
  conj.erase(0);
  for (const auto& [p, w] : weights) {
    DigitMask d = shafer_mask(p);
    if (d != 0 && w != 0.0) conj[d] += w * conflict;
  }
  double kept = 0.0;
  for (const auto& [p, w] : weights)
    if (p.empty()) kept += w * conflict;
  if (kept != 0.0) conj[0] = kept;
  return detail::from_shafer(m1.frame(), conj);
}

// Weights chosen from the conjunctive combination itself.
using WeightFunction = std::function<WeightMap(const MassAssignment& conjunctive)>;

inline MassAssignment lefevre_combine(const MassAssignment& m1, const MassAssignment& m2,
                                      const WeightFunction& weights) {
  return lefevre_combine(m1, m2, weights(conjunctive(m1, m2)));
}

// w(EMPTY) = 0, w(A) = m(A) / (1 - m(EMPTY)).
inline WeightMap dempster_weights(const MassAssignment& conj) {
  const Proposition none = empty_proposition(conj.frame());
  double conflict = conj.mass(none);
  WeightMap w;
  std::vector<double> kept;
  for (const auto& [p, v] : conj)
    if (!p.empty()) kept.push_back(v);
  double norm = detail::pairwise_sum(kept.data(), kept.size());
  if (norm == 0.0 || conflict >= 1.0)
    throw Error(Errc::kFullContradiction, "no mass outside EMPTY to redistribute onto");
  for (const auto& [p, v] : conj)
    if (!p.empty()) w[p] = v / norm;
  w[none] = 0.0;
  return w;
}

inline WeightMap yager_weights(const Frame& frame) { return {{total_ignorance(frame), 1.0}}; }
inline WeightMap smets_weights(const Frame& frame) { return {{empty_proposition(frame), 1.0}}; }

inline MassAssignment yager(const MassAssignment& m1, const MassAssignment& m2) {
  return lefevre_combine(m1, m2, yager_weights(m1.frame()));
}

inline MassAssignment smets(const MassAssignment& m1, const MassAssignment& m2) {
  return lefevre_combine(m1, m2, smets_weights(m1.frame()));
}

// Each conflicting product m1(A1) m2(A2) goes to A1 | A2.
inline MassAssignment dubois_prade(const MassAssignment& m1, const MassAssignment& m2) {
  detail::check_pair(m1, m2);
  std::map<DigitMask, std::vector<double>> terms;
  for (const auto& [da, va] : detail::to_shafer(m1))
    for (const auto& [db, vb] : detail::to_shafer(m2)) {
      DigitMask meet = da & db;
      terms[meet != 0 ? meet : (da | db)].push_back(va * vb);
    }
  return detail::from_shafer(m1.frame(), detail::sum_terms(terms));
}

struct MixtureSpec {
  std::vector<std::pair<HybridModel, double>> entries;
};

// Convex combination of the hybrid results of each model, on uncompressed keys.
inline MassAssignment bayesian_mixture(const std::vector<MassAssignment>& ms,
                                       const MixtureSpec& spec) {
  if (spec.entries.empty())
    throw Error(Errc::kProbabilitiesNotNormalized, "mixture has no models");
  double total = 0.0;
  for (const auto& [model, pr] : spec.entries) {
    if (!(pr >= 0.0))
      throw Error(Errc::kProbabilitiesNotNormalized, "negative probability " + std::to_string(pr));
    total += pr;
  }
  if (std::fabs(total - 1.0) > kMassTolerance)
    throw Error(Errc::kProbabilitiesNotNormalized, "probabilities sum to " + std::to_string(total));
  const Frame& frame = detail::common_frame(ms);
  std::map<Proposition, std::vector<double>> terms;
  for (const auto& [model, pr] : spec.entries) {
    if (!(model.frame() == frame))
      throw Error(Errc::kFrameMismatch, "mixture model on another frame");
    for (const auto& [p, v] : dsm_hybrid(ms, model).result) terms[p].push_back(pr * v);
  }
  MassAssignment out(frame);
  for (const auto& [p, vals] : terms) out.set(p, detail::pairwise_sum(vals.data(), vals.size()));
  return out;
}

}  // namespace dsmt
