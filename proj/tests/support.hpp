#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dsmt/bba.hpp"
#include "dsmt/exprparse.hpp"
#include "dsmt/model.hpp"

namespace testing_support {

inline dsmt::Frame frame_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return dsmt::build_frame(names);
}

inline dsmt::Proposition P(const dsmt::Frame& f, const std::string& text) {
  if (text == "EMPTY") return dsmt::empty_proposition(f);
  return dsmt::parse(f, text);
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  double unit() { return std::uniform_real_distribution<double>(0.05, 1.0)(rng_); }

  dsmt::Proposition element(const dsmt::Frame& f, bool allow_empty = false) {
    const auto& all = elements(f);
    while (true) {
      const auto& p = all[pick(0, all.size() - 1)];
      if (allow_empty || !p.empty()) return p;
    }
  }

  dsmt::Proposition power_set_element(const dsmt::Frame& f) {
    dsmt::DigitMask d = static_cast<dsmt::DigitMask>(pick(1, (std::size_t{1} << f.size()) - 1));
    return dsmt::from_shafer_mask(f, d);
  }

  // 1..max_focal distinct non-empty focal elements with positive masses.
  dsmt::MassAssignment bba(const dsmt::Frame& f, std::size_t max_focal = 4) {
    return fill(f, std::min(max_focal, elements(f).size() - 1), [&] { return element(f); });
  }

  dsmt::MassAssignment power_set_bba(const dsmt::Frame& f, std::size_t max_focal = 4) {
    std::size_t available = (std::size_t{1} << f.size()) - 1;
    return fill(f, std::min(max_focal, available), [&] { return power_set_element(f); });
  }

  // 0..2 constraints, never emptying the total ignorance.
  std::vector<dsmt::Proposition> constraints(const dsmt::Frame& f) {
    while (true) {
      std::vector<dsmt::Proposition> cs;
      std::size_t count = pick(0, 2);
      dsmt::AtomSet cover = 0;
      for (std::size_t i = 0; i < count; ++i) {
        cs.push_back(element(f));
        cover |= cs.back().atoms();
      }
      if (cover != f.atoms().all) return cs;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  template <typename Draw>
  dsmt::MassAssignment fill(const dsmt::Frame& f, std::size_t max_focal, Draw&& draw) {
    std::size_t count = pick(1, max_focal);
    std::vector<dsmt::Proposition> keys;
    while (keys.size() < count) {
      auto p = draw();
      if (std::find(keys.begin(), keys.end(), p) == keys.end()) keys.push_back(p);
    }
    std::vector<double> w;
    double total = 0.0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      w.push_back(unit());
      total += w.back();
    }
    dsmt::MassAssignment m(f);
    double used = 0.0;
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
      m.set(keys[i], w[i] / total);
      used += w[i] / total;
    }
    m.set(keys.back(), 1.0 - used);
    return m;
  }

  const std::vector<dsmt::Proposition>& elements(const dsmt::Frame& f) {
    if (cache_n_ != f.size() || !(cache_frame_ == f)) {
      cache_ = dsmt::enumerate_hpset(f);
      cache_n_ = f.size();
      cache_frame_ = f;
    }
    return cache_;
  }

  std::mt19937 rng_;
  std::vector<dsmt::Proposition> cache_;
  std::size_t cache_n_ = 0;
  dsmt::Frame cache_frame_;
};

// One randomized combination problem: n in {2,3,4}, k in {2,3}.
struct Trial {
  dsmt::Frame frame;
  std::vector<dsmt::MassAssignment> sources;
  dsmt::HybridModel model;
};

inline Trial random_trial(Gen& g, std::size_t max_n = 4) {
  Trial t;
  t.frame = frame_of(g.pick(2, max_n));
  std::size_t k = g.pick(2, 3);
  for (std::size_t i = 0; i < k; ++i) t.sources.push_back(g.bba(t.frame));
  t.model = dsmt::build_model(t.frame, g.constraints(t.frame));
  return t;
}

}  // namespace testing_support
