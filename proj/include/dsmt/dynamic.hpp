#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dsmt/bba.hpp"
#include "dsmt/error.hpp"
#include "dsmt/exprparse.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/model.hpp"
#include "dsmt/rules.hpp"

namespace dsmt {

// Reinterprets p's generator antichain over `target` by singleton name.
inline Proposition embed(const Proposition& p, const Frame& target) {
  std::vector<DigitMask> gens;
  for (const Atom& g : p.generators()) {
    DigitMask d = 0;
    for (std::size_t i : g.indices()) {
      const std::string& name = p.frame().name(i);
      std::size_t j = target.index_of(name);
      if (j == 0) throw Error(Errc::kMissingName, "'" + name + "' absent from target frame");
      d |= DigitMask{1} << (j - 1);
    }
    gens.push_back(d);
  }
  return from_generators(target, gens);
}

inline MassAssignment embed(const MassAssignment& m, const Frame& old_frame,
                            const Frame& new_frame) {
  if (!(m.frame() == old_frame))
    throw Error(Errc::kFrameMismatch, "assignment is not on the source frame");
  MassAssignment out(new_frame, m.smets_mode());
  for (const auto& [p, v] : m) out.add(embed(p, new_frame), v);
  return out;
}

struct NamedSource {
  std::string name;
  MassAssignment masses;  // on any frame whose names the session frame contains
};

// One time step. Applied as: grow the frame, add sources, then replace the
// constraint set when `set_constraints` is present.
struct Stage {
  std::string label;
  std::vector<std::string> add_elements;
  std::vector<NamedSource> add_sources;
  std::optional<std::vector<std::string>> set_constraints;
};

enum class SessionRule { kHybrid, kClassic };

struct StageRecord {
  std::string label;
  Frame frame;
  HybridModel model;
  std::size_t factor_count = 0;
  std::optional<HybridBreakdown> breakdown;  // hybrid rule only
  std::optional<MassAssignment> result;      // absent with fewer than two factors
};

struct SourceRecord {
  std::string name;
  std::size_t stage = 0;
  MassAssignment original;
};

struct FusionSession {
  Frame frame;
  std::vector<MassAssignment> factors;
  std::vector<std::string> constraint_exprs;
  HybridModel active_model;
  std::vector<StageRecord> history;
  std::vector<SourceRecord> sources;
};

namespace detail {

inline void grow_frame(FusionSession& s, const std::vector<std::string>& names) {
  std::vector<std::string> all = s.frame.size() ? s.frame.names() : std::vector<std::string>{};
  for (const auto& n : names) {
    if (std::find(all.begin(), all.end(), n) != all.end())
      throw Error(Errc::kDuplicateName, "'" + n + "' already in the frame");
    all.push_back(n);
  }
  Frame next = build_frame(all);
  if (s.frame.size()) {
    // Sources of the finished epoch are fused into one factor before the
    // frame grows; later sources combine with that factor.
    if (s.factors.size() >= 2) s.factors = {dsm_classic(s.factors)};
    for (auto& f : s.factors) f = embed(f, s.frame, next);
  }
  s.frame = next;
}

inline void rebuild_model(FusionSession& s) {
  std::vector<Proposition> cs;
  for (const auto& e : s.constraint_exprs) cs.push_back(parse(s.frame, e));
  s.active_model = build_model(s.frame, std::move(cs));
}

}  // namespace detail

inline void apply_stage(FusionSession& s, const Stage& stage, SessionRule rule) {
  if (!stage.add_elements.empty()) detail::grow_frame(s, stage.add_elements);
  if (s.frame.size() == 0)
    throw Error(Errc::kEmptyFrame, "first stage '" + stage.label + "' defines no elements");
  for (const auto& src : stage.add_sources) {
    validate(src.masses);
    s.factors.push_back(embed(src.masses, src.masses.frame(), s.frame));
    s.sources.push_back({src.name, s.history.size(), src.masses});
  }
  if (stage.set_constraints) s.constraint_exprs = *stage.set_constraints;
  detail::rebuild_model(s);

  StageRecord rec{stage.label, s.frame, s.active_model, s.factors.size(), {}, {}};
  if (s.factors.size() >= 2) {
    if (rule == SessionRule::kHybrid) {
      rec.breakdown = dsm_hybrid(s.factors, s.active_model);
      rec.result = rec.breakdown->result;
    } else {
      rec.result = dsm_classic(s.factors);
    }
  }
  s.history.push_back(std::move(rec));
}

inline FusionSession run_session(const std::vector<Stage>& stages,
                                 SessionRule rule = SessionRule::kHybrid) {
  FusionSession s;
  for (const auto& st : stages) apply_stage(s, st, rule);
  return s;
}

struct RestoreReport {
  bool equal = false;
  double max_deviation = 0.0;
  // Sources added after the reference put no mass on anything mentioning an
  // earlier singleton, and the active model empties every added singleton.
  bool condition_a_holds = false;
};

// Compares the latest result with the result recorded at `reference`, both
// compressed under the latest model.
inline RestoreReport restore_check(const FusionSession& s, std::size_t reference,
                                   double tolerance = 1e-12) {
  if (s.history.empty() || reference >= s.history.size() - 1)
    throw Error(Errc::kIndexOutOfRange, "reference stage must precede the latest stage");
  const StageRecord& ref = s.history[reference];
  const StageRecord& last = s.history.back();
  if (!ref.result || !last.result)
    throw Error(Errc::kIndexOutOfRange, "both stages need a combined result");

  const HybridModel& model = last.model;
  MassAssignment earlier = compress(model, embed(*ref.result, ref.frame, last.frame));
  MassAssignment latest = compress(model, *last.result);
  RestoreReport rep;
  for (const auto* m : {&earlier, &latest})
    for (const auto& [p, v] : *m)
      rep.max_deviation =
          std::max(rep.max_deviation, std::fabs(earlier.mass(p) - latest.mass(p)));
  rep.equal = rep.max_deviation <= tolerance;

  const Frame& old_frame = ref.frame;
  bool untouched = true;
  for (const auto& src : s.sources) {
    if (src.stage <= reference) continue;
    for (const auto& [p, v] : src.original.focal())
      for (const Atom& g : p.generators())
        for (std::size_t i : g.indices())
          if (old_frame.index_of(p.frame().name(i)) != 0) untouched = false;
  }
  bool added_emptied = true;
  for (std::size_t i = 1; i <= last.frame.size(); ++i)
    if (old_frame.index_of(last.frame.name(i)) == 0 &&
        phi(model, singleton(last.frame, i)) != 0)
      added_emptied = false;
  rep.condition_a_holds = untouched && added_emptied;
  return rep;
}

// Each group is fused on its own frame, the group results are embedded into
// the joint frame (names in order of first appearance) and fused together.
inline MassAssignment decentralized_combine(const std::vector<std::vector<MassAssignment>>& groups) {
  std::vector<std::string> names;
  for (const auto& g : groups)
    for (const auto& m : g)
      for (const auto& n : m.frame().names())
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  Frame joint = build_frame(names);
  std::vector<MassAssignment> parts;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    MassAssignment local = g.size() >= 2 ? dsm_classic(g) : g.front();
    parts.push_back(embed(local, local.frame(), joint));
  }
  return parts.size() >= 2 ? dsm_classic(parts) : parts.front();
}

}  // namespace dsmt
