#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsmt/dynamic.hpp"
#include "dsmt/model.hpp"
#include "dsmt/rules.hpp"
#include "format.hpp"
#include "reproduce.hpp"
#include "scenario.hpp"

namespace dsmt::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kUndefined = 3 };

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::kFullContradiction ? kUndefined : kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Each value is either a file of expressions (one per line, '#' comments) or
// an expression.
inline std::vector<std::string> expand_constraints(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(v, ec)) {
      std::ifstream in(v);
      std::string line;
      while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
      }
    } else {
      out.push_back(v);
    }
  }
  return out;
}

// ---- hpset ----

struct HpsetOptions {
  std::vector<std::string> frame;
  std::vector<std::string> constraints;
  bool matrix = false;
  bool force = false;
};

inline int cmd_hpset(const HpsetOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Frame frame = build_frame(opt.frame);
    std::vector<std::string> exprs = expand_constraints(opt.constraints);
    std::vector<Proposition> cs;
    for (const auto& e : exprs) cs.push_back(parse(frame, e));
    HybridModel model = build_model(frame, cs);
    if (model.is_trivial()) err << "warning: a single non-empty atom survives (trivial model)\n";
    std::size_t limit = opt.force ? kMaxFrameSize : kDefaultEnumerationLimit;
    auto classes = survivors(model, limit);

    out << "# frame: " << join(frame.names(), ",") << '\n';
    out << "# constraints: " << (exprs.empty() ? "none" : join(exprs, " ; ")) << '\n';
    out << "# classes: " << classes.size() << '\n';
    if (opt.matrix) {
      auto em = encoding_matrix(model, limit);
      std::vector<std::string> basis;
      for (const auto& a : em.basis) basis.push_back(a.label());
      out << "# basis: " << join(basis, " ") << '\n';
      for (std::size_t i = 0; i < em.rows.size(); ++i) {
        std::string bits;
        for (int b : em.rows[i]) bits += (bits.empty() ? "" : " ") + std::to_string(b);
        out << bits << "  " << em.row_labels[i] << '\n';
      }
      return static_cast<int>(kOk);
    }
    std::size_t w = 0;
    for (const auto& c : classes) w = std::max(w, to_expression(c.representative).size());
    out << "# columns: representative, members\n";
    for (const auto& c : classes)
      out << pad(to_expression(c.representative), w + 2) << c.members.size() << '\n';
    return static_cast<int>(kOk);
  });
}

// ---- combine ----

struct CombineOptions {
  std::string scenario;
  std::string rule = "dsmh";
  bool breakdown = false;
  bool compress = false;
  bool all = false;
  std::string format = "table";
  bool force = false;
};

namespace detail {

struct Report {
  const CombineOptions& opt;
  std::ostream& out;
  bool csv_header_done = false;

  void header(const std::string& label, const Frame& frame, const std::vector<std::string>& cs,
              const std::string& extra = "") {
    if (opt.format == "csv") return;
    out << "== stage " << label << " | rule " << opt.rule << " | frame " << join(frame.names(), ",")
        << " | constraints: " << (cs.empty() ? "none" : join(cs, " ; ")) << extra << " ==\n";
  }

  void csv_header(const std::string& cols) {
    if (!csv_header_done) out << cols << '\n';
    csv_header_done = true;
  }

  void emit(const std::string& label, const std::vector<std::string>& cells_table,
            std::vector<std::string> cells_csv, std::size_t width) {
    if (opt.format == "csv") {
      cells_csv.insert(cells_csv.begin(), label);
      out << join(cells_csv, ",") << '\n';
      return;
    }
    std::string s = pad(cells_table[0], width + 2);
    for (std::size_t i = 1; i < cells_table.size(); ++i)
      s += i + 1 == cells_table.size() ? cells_table[i] : pad(cells_table[i], 10);
    out << s << '\n';
  }

  std::vector<Proposition> rows(const MassAssignment& m, const std::vector<Proposition>& extra) {
    std::vector<Proposition> keys;
    if (opt.all) {
      std::size_t limit = opt.force ? kMaxFrameSize : kDefaultEnumerationLimit;
      keys = enumerate_hpset(m.frame(), limit);
    } else {
      for (const auto& [p, v] : m)
        if (v != 0.0) keys.push_back(p);
      keys.insert(keys.end(), extra.begin(), extra.end());
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    return keys;
  }

  static std::size_t width(const std::vector<Proposition>& keys) {
    std::size_t w = std::string("proposition").size();
    for (const auto& p : keys) w = std::max(w, to_expression(p).size());
    return w;
  }

  void plain(const std::string& label, const MassAssignment& m) {
    auto keys = rows(m, {});
    std::size_t w = width(keys);
    if (opt.format == "csv")
      csv_header("stage,proposition,mass");
    else
      out << pad("proposition", w + 2) << "mass\n";
    for (const auto& p : keys)
      emit(label, {to_expression(p), fixed(m.mass(p))}, {to_expression(p), fixed(m.mass(p))}, w);
  }

  void breakdown(const std::string& label, const HybridBreakdown& b, const HybridModel& model) {
    std::vector<Proposition> extra;
    for (const auto* s : {&b.s1, &b.s2, &b.s3})
      for (const auto& [p, v] : *s)
        if (v != 0.0) extra.push_back(p);
    auto keys = rows(b.result, extra);
    std::size_t w = width(keys);
    if (opt.format == "csv")
      csv_header("stage,proposition,phi,s1,s2,s3,mass");
    else
      out << pad("proposition", w + 2) << pad("phi", 10) << pad("S1", 10) << pad("S2", 10)
          << pad("S3", 10) << "mass\n";
    auto get = [](const std::map<Proposition, double>& s, const Proposition& p) {
      auto it = s.find(p);
      return it == s.end() ? 0.0 : it->second;
    };
    for (const auto& p : keys) {
      std::vector<std::string> cells = {to_expression(p), std::to_string(phi(model, p)),
                                        fixed(get(b.s1, p)), fixed(get(b.s2, p)),
                                        fixed(get(b.s3, p)), fixed(b.result.mass(p))};
      emit(label, cells, cells, w);
    }
  }

  void compressed(const std::string& label, const MassAssignment& m, const HybridModel& model) {
    auto terms = compress_terms(model, m);
    std::vector<Proposition> keys;
    if (opt.all) {
      std::size_t limit = opt.force ? kMaxFrameSize : kDefaultEnumerationLimit;
      for (const auto& c : survivors(model, limit))
        if (!c.representative.empty()) keys.push_back(c.representative);
    } else {
      for (const auto& [p, parts] : terms)
        for (double v : parts)
          if (v != 0.0) {
            keys.push_back(p);
            break;
          }
    }
    std::size_t w = width(keys);
    if (opt.format == "csv")
      csv_header("stage,proposition,terms,mass");
    else
      out << pad("proposition", w + 2) << "mass\n";
    for (const auto& p : keys) {
      std::vector<std::string> parts;
      double total = 0.0;
      auto it = terms.find(p);
      if (it != terms.end())
        for (double v : it->second)
          if (v != 0.0) {
            parts.push_back(fixed(v));
            total += v;
          }
      std::string shown = parts.size() > 1 ? join(parts, "+") + "=" + fixed(total) : fixed(total);
      emit(label, {to_expression(p), shown},
           {to_expression(p), parts.empty() ? fixed(0.0) : join(parts, "+"), fixed(total)}, w);
    }
  }
};

inline std::vector<MassAssignment> initial_sources(const Scenario& sc) {
  std::vector<MassAssignment> ms;
  for (const auto& s : sc.stages.front().add_sources) ms.push_back(s.masses);
  return ms;
}

inline std::vector<std::string> initial_constraints(const Scenario& sc) {
  return sc.stages.front().set_constraints.value_or(std::vector<std::string>{});
}

}  // namespace detail

inline int cmd_combine(const CombineOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    static const std::vector<std::string> kRules = {"dsmc",  "dsmh",         "dempster", "yager",
                                                    "smets", "dubois-prade", "mixture"};
    if (std::find(kRules.begin(), kRules.end(), opt.rule) == kRules.end())
      throw Error(Errc::kInvalidScenario, "unknown rule '" + opt.rule + "'");
    if (opt.format != "table" && opt.format != "csv")
      throw Error(Errc::kInvalidScenario, "unknown output format '" + opt.format + "'");
    if (opt.format == "csv" && opt.breakdown && opt.compress)
      throw Error(Errc::kInvalidScenario, "--breakdown and --compress are exclusive with --out csv");

    Scenario sc = load_scenario_file(opt.scenario);
    detail::Report rep{opt, out};

    if (opt.rule == "dsmh" || opt.rule == "dsmc") {
      bool hybrid = opt.rule == "dsmh";
      if (!hybrid) {
        for (const auto& st : sc.stages)
          if (st.set_constraints && !st.set_constraints->empty()) {
            err << "warning: dsmc ignores integrity constraints\n";
            break;
          }
        if (opt.breakdown || opt.compress) err << "warning: --breakdown/--compress apply to dsmh only\n";
      }
      FusionSession s;
      bool first_block = true;
      for (const auto& st : sc.stages) {
        apply_stage(s, st, hybrid ? SessionRule::kHybrid : SessionRule::kClassic);
        const StageRecord& rec = s.history.back();
        if (!first_block && opt.format == "table") out << '\n';
        first_block = false;
        rep.header(rec.label, rec.frame, s.constraint_exprs);
        if (!rec.result) {
          if (s.history.size() == sc.stages.size() && s.history.size() == 1)
            throw Error(Errc::kFewerThanTwoSources,
                        "scenario provides " + std::to_string(rec.factor_count) + " source(s)");
          if (opt.format == "table") out << "(fewer than two sources; nothing combined)\n";
          continue;
        }
        if (!hybrid) {
          rep.plain(rec.label, *rec.result);
          continue;
        }
        if (rec.model.is_trivial()) err << "warning: a single non-empty atom survives (trivial model)\n";
        if (opt.breakdown) rep.breakdown(rec.label, *rec.breakdown, rec.model);
        if (opt.compress) {
          if (opt.breakdown && opt.format == "table") out << "-- compressed --\n";
          rep.compressed(rec.label, *rec.result, rec.model);
        }
        if (!opt.breakdown && !opt.compress) rep.plain(rec.label, *rec.result);
      }
      return static_cast<int>(kOk);
    }

    if (sc.stages.size() > 1)
      throw Error(Errc::kInvalidScenario, "events are supported by dsmh and dsmc only");
    if (opt.breakdown || opt.compress)
      err << "warning: --breakdown/--compress apply to dsmh only\n";
    auto ms = detail::initial_sources(sc);
    Frame frame = build_frame(sc.stages.front().add_elements);
    std::string label = sc.stages.front().label;

    if (opt.rule == "mixture") {
      if (sc.mixture.empty()) throw Error(Errc::kInvalidScenario, "scenario has no \"mixture\"");
      if (!detail::initial_constraints(sc).empty())
        err << "warning: top-level constraints are ignored by mixture\n";
      MixtureSpec spec;
      std::vector<std::string> desc;
      for (const auto& e : sc.mixture) {
        std::vector<Proposition> cs;
        for (const auto& c : e.constraints) cs.push_back(parse(frame, c));
        spec.entries.emplace_back(build_model(frame, cs), e.probability);
        desc.push_back("{" + join(e.constraints, ",") + "}:" + fixed(e.probability));
      }
      MassAssignment m = bayesian_mixture(ms, spec);
      rep.header(label, frame, {}, " | models " + join(desc, " "));
      rep.plain(label, m);
      return static_cast<int>(kOk);
    }

    if (!detail::initial_constraints(sc).empty())
      err << "warning: " << opt.rule << " works on the Shafer model; constraints ignored\n";
    if (opt.rule == "dempster") {
      DempsterResult r = dempster(ms);
      rep.header(label, frame, {}, " | conflict " + fixed(r.conflict));
      rep.plain(label, r.masses);
      return static_cast<int>(kOk);
    }
    if (ms.size() < 2)
      throw Error(Errc::kFewerThanTwoSources, "scenario provides " + std::to_string(ms.size()) + " source(s)");
    if (ms.size() > 2) throw Error(Errc::kInvalidScenario, opt.rule + " combines exactly two sources");
    MassAssignment m = opt.rule == "yager"   ? yager(ms[0], ms[1])
                       : opt.rule == "smets" ? smets(ms[0], ms[1])
                                             : dubois_prade(ms[0], ms[1]);
    rep.header(label, frame, {});
    rep.plain(label, m);
    return static_cast<int>(kOk);
  });
}

// ---- sweep ----

struct SweepRow {
  double epsilon;
  double dempster_t1, dempster_t2;
  double dsmh_t1, dsmh_t2, dsmh_t1_or_t2;
};

// Sources m1 = {t1: 1-e, t2: e}, m2 = {t1: e, t2: 1-e} on the Shafer model,
// for e = i/(steps-1). Dempster is undefined (NaN) at both ends.
inline std::vector<SweepRow> sweep_rows(std::size_t steps) {
  if (steps < 2) throw Error(Errc::kInvalidScenario, "--epsilon-steps must be at least 2");
  Frame f = build_frame({"t1", "t2"});
  Proposition t1 = singleton(f, 1), t2 = singleton(f, 2), both = t1 | t2;
  HybridModel shafer = build_model(f, {t1 & t2});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < steps; ++i) {
    double eps = static_cast<double>(i) / static_cast<double>(steps - 1);
    MassAssignment a(f), b(f);
    a.add(t1, 1.0 - eps);
    a.add(t2, eps);
    b.add(t1, eps);
    b.add(t2, 1.0 - eps);
    SweepRow r{eps, nan, nan, 0, 0, 0};
    try {
      auto d = dempster({a, b});
      r.dempster_t1 = d.masses.mass(t1);
      r.dempster_t2 = d.masses.mass(t2);
    } catch (const Error& e) {
      if (e.code() != Errc::kFullContradiction) throw;
    }
    auto h = dsm_hybrid({a, b}, shafer).result;
    r.dsmh_t1 = h.mass(t1);
    r.dsmh_t2 = h.mass(t2);
    r.dsmh_t1_or_t2 = h.mass(both);
    rows.push_back(r);
  }
  return rows;
}

struct SweepOptions {
  std::size_t steps = 11;
  std::string out_path;
};

inline int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto rows = sweep_rows(opt.steps);
    std::ofstream file;
    std::ostream* dst = &out;
    if (!opt.out_path.empty()) {
      file.open(opt.out_path);
      if (!file) throw Error(Errc::kInvalidScenario, "cannot write '" + opt.out_path + "'");
      dst = &file;
    }
    *dst << "epsilon,dempster_t1,dempster_t2,dsmh_t1,dsmh_t2,dsmh_t1_or_t2\n";
    for (const auto& r : rows)
      *dst << shortest(r.epsilon) << ',' << shortest(r.dempster_t1) << ','
           << shortest(r.dempster_t2) << ',' << shortest(r.dsmh_t1) << ',' << shortest(r.dsmh_t2)
           << ',' << shortest(r.dsmh_t1_or_t2) << '\n';
    return static_cast<int>(kOk);
  });
}

// ---- reproduce ----

struct ReproduceOptions {
  std::string example;
  bool list = false;
};

inline int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto& all = repro::cases();
    if (opt.list || opt.example.empty()) {
      for (const auto& c : all) out << pad(c.id, 16) << c.title << '\n';
      return opt.list ? kOk : kInputError;
    }
    bool ok = true;
    bool found = false;
    for (const auto& c : all) {
      if (opt.example != "all" && c.id != opt.example) continue;
      if (found) out << '\n';
      found = true;
      ok = run_case(out, c) && ok;
    }
    if (!found) throw Error(Errc::kInvalidScenario, "unknown example '" + opt.example + "'");
    return ok ? kOk : kMismatch;
  });
}

}  // namespace dsmt::cli
