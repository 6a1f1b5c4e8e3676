#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dsmt/dynamic.hpp"
#include "dsmt/model.hpp"
#include "dsmt/rules.hpp"
#include "format.hpp"
#include "reference_tables.hpp"
#include "scenario.hpp"

namespace dsmt::cli {

inline constexpr double kReproduceTolerance = 5e-5;

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct CaseResult {
  std::vector<Table> tables;
  std::vector<Check> checks;

  void number(const std::string& label, double expected, double actual,
              double tol = kReproduceTolerance) {
    checks.push_back({label, fixed(expected), fixed(actual), std::fabs(expected - actual) <= tol});
  }
  void text(const std::string& label, const std::string& expected, const std::string& actual) {
    checks.push_back({label, expected, actual, expected == actual});
  }
};

namespace repro {

using namespace dsmt::reference;

inline MassAssignment column_source(const Frame& f, const Column& c) {
  MassAssignment m(f);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0.0) m.add(parse_key(f, kRows[i]), c[i]);
  return m;
}

inline MassAssignment spec_source(const SourceSpec& s) {
  Frame f = build_frame(s.frame);
  MassAssignment m(f);
  for (const auto& e : s.masses) m.add(parse(f, e.expr), e.mass);
  return m;
}

inline HybridModel model_of(const Frame& f, const ModelSpec& spec) {
  std::vector<Proposition> cs;
  for (const char* c : spec.constraints) cs.push_back(parse(f, c));
  return build_model(f, cs);
}

inline HybridModel model_of(const Frame& f, const std::vector<std::string>& exprs) {
  std::vector<Proposition> cs;
  for (const auto& c : exprs) cs.push_back(parse(f, c));
  return build_model(f, cs);
}

// Masses against expected entries. Keys are reduced under `model` when given;
// unlisted keys must carry no mass.
inline void masses(CaseResult& r, const std::string& title, const MassAssignment& m,
                   const std::vector<Entry>& expected, const HybridModel* model = nullptr) {
  Table t{title, {"proposition", "mass", "expected"}, {}};
  std::vector<Proposition> listed;
  for (const auto& e : expected) {
    Proposition p = parse_key(m.frame(), e.expr);
    if (model) p = reduce(*model, p);
    listed.push_back(p);
    r.number(title + ": " + to_expression(p), e.mass, m.mass(p));
  }
  for (const auto& [p, v] : m)
    if (std::find(listed.begin(), listed.end(), p) == listed.end() && v != 0.0)
      r.number(title + ": " + to_expression(p) + " (unlisted)", 0.0, v);

  std::vector<Proposition> keys = listed;
  for (const auto& [p, v] : m)
    if (v != 0.0) keys.push_back(p);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& p : keys) {
    auto it = std::find(listed.begin(), listed.end(), p);
    std::string ex = it == listed.end() ? "-" : fixed(expected[it - listed.begin()].mass);
    t.rows.push_back({to_expression(p), fixed(m.mass(p)), ex});
  }
  r.tables.push_back(std::move(t));
}

inline void column(CaseResult& r, const std::string& title, const MassAssignment& m,
                   const Column& expected) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < expected.size(); ++i) entries.push_back({kRows[i], expected[i]});
  masses(r, title, m, entries);
}

inline double lookup(const std::map<Proposition, double>& s, const Proposition& p) {
  auto it = s.find(p);
  return it == s.end() ? 0.0 : it->second;
}

inline void breakdown(CaseResult& r, const std::string& title, const HybridBreakdown& b,
                      const HybridModel& model, const std::vector<BreakdownRow>& rows) {
  Table t{title, {"proposition", "phi", "S1", "S2", "S3", "mass"}, {}};
  for (const auto& row : rows) {
    Proposition p = parse_key(model.frame(), row.expr);
    std::string name = title + ": " + row.expr;
    int ph = phi(model, p);
    r.text(name + " phi", std::to_string(row.phi), std::to_string(ph));
    r.number(name + " S1", row.s1, lookup(b.s1, p));
    r.number(name + " S2", row.s2, lookup(b.s2, p));
    r.number(name + " S3", row.s3, lookup(b.s3, p));
    r.number(name + " mass", row.m, b.result.mass(p));
    t.rows.push_back({row.expr, std::to_string(ph), fixed(lookup(b.s1, p)), fixed(lookup(b.s2, p)),
                      fixed(lookup(b.s3, p)), fixed(b.result.mass(p))});
  }
  r.tables.push_back(std::move(t));
}

inline double s3_total(const HybridBreakdown& b) {
  double s = 0.0;
  for (const auto& [p, v] : b.s3) s += v;
  return s;
}

inline void structure(CaseResult& r, const HybridModel& model, std::size_t index) {
  auto em = encoding_matrix(model);
  std::string basis;
  for (const auto& a : em.basis) basis += (basis.empty() ? "" : " ") + a.label();
  std::string want;
  for (const char* a : kMatrices[index].basis) want += (want.empty() ? "" : " ") + std::string(a);
  r.text("encoding basis", want, basis);
  r.text("classes", std::to_string(kMatrices[index].rows), std::to_string(em.rows.size()));
  Table t{"encoding matrix (basis " + basis + ")", {"row", "class"}, {}};
  for (std::size_t i = 0; i < em.rows.size(); ++i) {
    std::string bits;
    for (int b : em.rows[i]) bits += (bits.empty() ? "" : " ") + std::to_string(b);
    t.rows.push_back({bits, em.row_labels[i]});
  }
  r.tables.push_back(std::move(t));
}

inline CaseResult sparse_case(std::size_t index) {
  static const std::vector<BreakdownRow>* tables[] = {&kBreakdownM1, &kBreakdownM2, &kBreakdownM3,
                                                      &kBreakdownM4};
  static const std::vector<Entry>* compressed[] = {nullptr,        &kCompressedM2, &kCompressedM3,
                                                   &kCompressedM4, &kCompressedM5, &kCompressedM6,
                                                   &kCompressedM7};
  static const double s3_sums[] = {kS3SumM1, kS3SumM2, kS3SumM3, kS3SumM4, kS3SumM5};
  CaseResult r;
  Frame f = build_frame(kNames3);
  std::vector<MassAssignment> ms = {column_source(f, kSparseM1), column_source(f, kSparseM2)};
  if (index == 0) column(r, "free model", dsm_classic(ms), kSparseClassic);
  HybridModel model = model_of(f, kModels[index]);
  HybridBreakdown b = dsm_hybrid(ms, model);
  std::string id = kModels[index].id;
  if (index < 4) breakdown(r, id, b, model, *tables[index]);
  if (index == 5) breakdown(r, id, b, model, kBreakdownM6);
  if (index < 5) r.number(id + " S3 column total", s3_sums[index], s3_total(b));
  if (compressed[index]) masses(r, id + " compressed", compress(model, b.result), *compressed[index], &model);
  structure(r, model, index);
  return r;
}

inline CaseResult general_case(std::size_t index) {
  CaseResult r;
  Frame f = build_frame(kNames3);
  std::vector<MassAssignment> ms = {column_source(f, kGeneralM1), column_source(f, kGeneralM2)};
  if (index == 0) column(r, "free model", dsm_classic(ms), kGeneralClassic);
  HybridModel model = model_of(f, kModels[index]);
  HybridBreakdown b = dsm_hybrid(ms, model);
  std::string id = kModels[index].id;
  column(r, id + " before compression", b.result, kGeneralHybrid[index]);
  if (!kGeneralCompressed[index].empty())
    masses(r, id + " compressed", compress(model, b.result), kGeneralCompressed[index], &model);
  return r;
}

inline Stage stage(std::string label, std::vector<std::string> elements,
                   std::vector<const SourceSpec*> sources,
                   std::optional<std::vector<std::string>> constraints = std::nullopt) {
  Stage s{std::move(label), std::move(elements), {}, std::move(constraints)};
  int i = 0;
  for (const auto* src : sources) s.add_sources.push_back({"m" + std::to_string(++i), spec_source(*src)});
  return s;
}

inline void session_block(CaseResult& r, const FusionSession& s, std::size_t i,
                          const std::vector<Entry>& expected) {
  const StageRecord& rec = s.history[i];
  std::string title = "stage " + rec.label;
  if (rec.model.is_free())
    masses(r, title, *rec.result, expected);
  else
    masses(r, title + " compressed", compress(rec.model, *rec.result), expected, &rec.model);
}

inline CaseResult dyn1() {
  CaseResult r;
  auto s = run_session({stage("t_l", kNames3, {&kDyn1M1, &kDyn1M2}),
                        stage("t_l+1", {}, {}, kDyn1Constraints)});
  session_block(r, s, 0, kDyn1Classic);
  session_block(r, s, 1, kDyn1Hybrid);
  return r;
}

// Two sources on {t1,t2}, a new source on a larger frame, then constraints.
inline CaseResult grow_then_constrain(const SourceSpec& m1, const SourceSpec& m2,
                                      const std::vector<Entry>& m12,
                                      const std::vector<std::string>& added, const SourceSpec& m3,
                                      const std::vector<Entry>& m123,
                                      const std::vector<std::string>* constraints,
                                      const std::vector<Entry>* final_masses,
                                      std::optional<bool> restores = std::nullopt) {
  CaseResult r;
  std::vector<Stage> stages = {stage("t_l", m1.frame, {&m1, &m2}), stage("t_l+1", added, {&m3})};
  if (constraints) stages.push_back(stage("t_l+2", {}, {}, *constraints));
  auto s = run_session(stages);
  session_block(r, s, 0, m12);
  session_block(r, s, 1, m123);
  if (constraints) session_block(r, s, 2, *final_masses);
  if (restores) {
    auto rep = restore_check(s, 0);
    r.text("t_l+2 reproduces t_l", *restores ? "yes" : "no", rep.equal ? "yes" : "no");
    r.text("new sources avoid the old singletons", *restores ? "yes" : "no",
           rep.condition_a_holds ? "yes" : "no");
  }
  return r;
}

inline CaseResult constrain_static(const SourceSpec& m1, const SourceSpec& m2,
                                   const std::vector<Entry>& m12, const std::vector<Entry>& fin) {
  CaseResult r;
  auto s = run_session({stage("t_l", m1.frame, {&m1, &m2}),
                        stage("t_l+1", {}, {}, kDyn36Constraints)});
  session_block(r, s, 0, m12);
  session_block(r, s, 1, fin);
  return r;
}

inline CaseResult contradiction() {
  CaseResult r;
  Frame f = build_frame({"t1", "t2"});
  auto pair = [&](double eps) {
    MassAssignment a(f), b(f);
    a.add(parse(f, "t1"), 1.0 - eps);
    a.add(parse(f, "t2"), eps);
    b.add(parse(f, "t1"), eps);
    b.add(parse(f, "t2"), 1.0 - eps);
    return std::vector<MassAssignment>{a, b};
  };
  HybridModel shafer = model_of(f, std::vector<std::string>{"t1&t2"});
  auto ms = pair(0.0);
  std::string outcome = "defined";
  try {
    dempster(ms);
  } catch (const Error& e) {
    if (e.code() == Errc::kFullContradiction) outcome = "FullContradiction";
  }
  r.text("dempster, total conflict", "FullContradiction", outcome);
  masses(r, "free model", dsm_classic(ms), {{"t1&t2", 1.0}});
  masses(r, "Shafer model", dsm_hybrid(ms, shafer).result, {{"t1|t2", 1.0}});
  masses(r, "yager", yager(ms[0], ms[1]), {{"t1|t2", 1.0}});
  masses(r, "dubois-prade", dubois_prade(ms[0], ms[1]), {{"t1|t2", 1.0}});
  masses(r, "smets", smets(ms[0], ms[1]), {{"EMPTY", 1.0}});
  auto near = pair(0.1);
  masses(r, "dempster, eps=0.1", dempster(near).masses, {{"t1", .5}, {"t2", .5}});
  masses(r, "Shafer model, eps=0.1", dsm_hybrid(near, shafer).result,
         {{"t1", .09}, {"t2", .09}, {"t1|t2", .82}});
  return r;
}

struct CaseInfo {
  std::string id;
  std::string title;
  std::function<CaseResult()> run;
};

inline const std::vector<CaseInfo>& cases() {
  static const std::vector<CaseInfo> all = [] {
    std::vector<CaseInfo> v;
    for (std::size_t i = 0; i < 7; ++i)
      v.push_back({"m" + std::to_string(i + 1),
                   "sparse sources under " + std::string(kModels[i].id),
                   [i] { return sparse_case(i); }});
    for (std::size_t i = 0; i < 7; ++i)
      v.push_back({"general-m" + std::to_string(i + 1),
                   "general sources under " + std::string(kModels[i].id),
                   [i] { return general_case(i); }});
    v.push_back({"dyn1", "testimony fusion with a late exclusivity constraint", dyn1});
    v.push_back({"dyn3.1", "new hypothesis and source", [] {
                   return grow_then_constrain(kDyn31M1, kDyn31M2, kDyn31M12, {"t3"}, kDyn31M3,
                                              kDyn31M123, nullptr, nullptr);
                 }});
    v.push_back({"dyn3.2", "new hypothesis later ruled out", [] {
                   return grow_then_constrain(kDyn31M1, kDyn31M2, kDyn31M12, {"t3"}, kDyn31M3,
                                              kDyn31M123, &kDyn32Constraints, &kDyn32, false);
                 }});
    v.push_back({"dyn3.3", "two new hypotheses later ruled out", [] {
                   return grow_then_constrain(kDyn31M1, kDyn31M2, kDyn31M12, {"t3", "t4"},
                                              kDyn33M3, kDyn33M123, &kDyn33Constraints,
                                              &kDyn31M12, true);
                 }});
    v.push_back({"dyn3.4", "new hypothesis, then t1&t3 empty", [] {
                   return grow_then_constrain(kDyn34M1, kDyn34M2, kDyn34M12, {"t3"}, kDyn34M3,
                                              kDyn34M123, &kDyn34Constraints, &kDyn34);
                 }});
    v.push_back({"dyn3.5", "new hypothesis, then t3 empty", [] {
                   return grow_then_constrain(kDyn34M1, kDyn34M2, kDyn34M12, {"t3"}, kDyn34M3,
                                              kDyn34M123, &kDyn35Constraints, &kDyn35);
                 }});
    v.push_back({"dyn3.6", "four hypotheses, two exclusivity constraints",
                 [] { return constrain_static(kDyn36M1, kDyn36M2, kDyn36M12, kDyn36); }});
    v.push_back({"dyn3.7", "four hypotheses, two exclusivity constraints",
                 [] { return constrain_static(kDyn37M1, kDyn37M2, kDyn37M12, kDyn37); }});
    v.push_back({"contradiction", "total conflict between two certain sources", contradiction});
    return v;
  }();
  return all;
}

}  // namespace repro

inline void print_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
  out << "== " << t.title << " ==\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c)
      s += c + 1 == cells.size() ? cells[c] : pad(cells[c], w[c] + 2);
    out << s << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

// Prints the tables and checks of one case; returns true when all checks pass.
inline bool run_case(std::ostream& out, const repro::CaseInfo& info) {
  CaseResult r = info.run();
  out << "# " << info.id << ": " << info.title << '\n';
  for (const auto& t : r.tables) {
    print_table(out, t);
    out << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : r.checks)
    if (!c.pass) {
      ++failed;
      out << "mismatch: " << c.label << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
  if (failed == 0)
    out << "PASS " << info.id << " (" << r.checks.size() << " checks, tolerance 5e-5)\n";
  else
    out << "FAIL " << info.id << " (" << failed << " of " << r.checks.size() << " checks)\n";
  return failed == 0;
}

}  // namespace dsmt::cli
