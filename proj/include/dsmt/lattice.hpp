#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/error.hpp"

namespace dsmt {

// A 64-bit atom bitset holds the 2^n - 1 Venn atoms for n <= 6.
inline constexpr std::size_t kMaxFrameSize = 6;
inline constexpr std::size_t kDefaultEnumerationLimit = 5;

using DigitMask = std::uint32_t;  // bit (i-1) set <=> digit i present
using AtomSet = std::uint64_t;    // bit j set <=> atom j present

struct Atom {
  DigitMask digits = 0;

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
      if (digits & (DigitMask{1} << i)) out.push_back(i + 1);
    return out;
  }

  // Smarandache label, e.g. "<13>".
  std::string label() const {
    std::string s = "<";
    for (auto i : indices()) s += std::to_string(i);
    return s + ">";
  }

  friend bool operator==(const Atom&, const Atom&) = default;
};

namespace detail {

inline bool digits_before(DigitMask a, DigitMask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Lexicographic on ascending digit lists.
  while (a && b) {
    int da = std::countr_zero(a), db = std::countr_zero(b);
    if (da != db) return da < db;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Per-size lookup tables for the atom poset.
struct AtomTable {
  std::size_t n = 0;
  std::size_t count = 0;
  std::vector<DigitMask> digits;       // atom index -> digit mask
  std::vector<int> index_of;           // digit mask -> atom index (-1 for 0)
  std::vector<AtomSet> up;             // atoms whose digits contain this one's
  std::vector<AtomSet> strict_down;    // atoms whose digits are a proper subset
  std::vector<AtomSet> covers;         // atoms with exactly one more digit
  std::vector<AtomSet> with_digit;     // digit i (0-based) -> atoms containing it
  AtomSet all = 0;

  explicit AtomTable(std::size_t size) : n(size) {
    count = (std::size_t{1} << n) - 1;
    for (DigitMask m = 1; m <= count; ++m) digits.push_back(m);
    std::sort(digits.begin(), digits.end(), digits_before);
    index_of.assign(count + 1, -1);
    for (std::size_t j = 0; j < count; ++j) index_of[digits[j]] = static_cast<int>(j);
    up.assign(count, 0);
    strict_down.assign(count, 0);
    covers.assign(count, 0);
    with_digit.assign(n, 0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if ((digits[a] & digits[b]) == digits[a]) up[a] |= AtomSet{1} << b;
        if ((digits[a] & digits[b]) == digits[b] && a != b)
          strict_down[a] |= AtomSet{1} << b;
        if ((digits[a] & digits[b]) == digits[a] &&
            std::popcount(digits[b]) == std::popcount(digits[a]) + 1)
          covers[a] |= AtomSet{1} << b;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (digits[a] & (DigitMask{1} << i)) with_digit[i] |= AtomSet{1} << a;
    }
    all = count == 64 ? ~AtomSet{0} : ((AtomSet{1} << count) - 1);
  }
};

inline const AtomTable& atom_table(std::size_t n) {
  static std::array<std::unique_ptr<AtomTable>, kMaxFrameSize + 1> tables;
  static std::once_flag flags[kMaxFrameSize + 1];
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<AtomTable>(n); });
  return *tables[n];
}

template <typename F>
void for_each_bit(AtomSet s, F&& f) {
  while (s) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

}  // namespace detail

class Frame {
 public:
  Frame() = default;

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::vector<std::string>& names() const { return *names_; }

  // 1-based, like the singleton indices.
  const std::string& name(std::size_t i) const {
    if (i < 1 || i > size())
      throw Error(Errc::kIndexOutOfRange, "singleton index " + std::to_string(i));
    return (*names_)[i - 1];
  }

  // 1-based index of `name`, or 0 when absent.
  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if ((*names_)[i] == name) return i + 1;
    return 0;
  }

  const detail::AtomTable& atoms() const { return detail::atom_table(size()); }

  friend bool operator==(const Frame& a, const Frame& b) {
    if (a.names_ == b.names_) return true;
    if (!a.names_ || !b.names_) return false;
    return *a.names_ == *b.names_;
  }

 private:
  friend Frame build_frame(std::vector<std::string> names);
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline Frame build_frame(std::vector<std::string> names) {
  if (names.empty()) throw Error(Errc::kEmptyFrame, "frame has no names");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!detail::valid_identifier(names[i]))
      throw Error(Errc::kInvalidIdentifier, "'" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error(Errc::kDuplicateName, "'" + names[i] + "'");
  }
  if (names.size() > kMaxFrameSize)
    throw Error(Errc::kFrameTooLarge, std::to_string(names.size()) +
                                          " singletons (maximum " +
                                          std::to_string(kMaxFrameSize) + ")");
  Frame f;
  f.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return f;
}

inline std::vector<Atom> atom_universe(const Frame& frame) {
  std::vector<Atom> out;
  for (DigitMask d : frame.atoms().digits) out.push_back(Atom{d});
  return out;
}

// Element of the hyper-power set: an up-closed set of Venn atoms.
class Proposition {
 public:
  Proposition() = default;

  // Throws InvalidProposition unless `atoms` is up-closed on `frame`.
  static Proposition from_atoms(const Frame& frame, AtomSet atoms) {
    const auto& t = frame.atoms();
    if (atoms & ~t.all) throw Error(Errc::kInvalidProposition, "atom outside frame");
    bool closed = true;
    detail::for_each_bit(atoms, [&](std::size_t a) {
      if ((t.up[a] & atoms) != t.up[a]) closed = false;
    });
    if (!closed) throw Error(Errc::kInvalidProposition, "atom set is not up-closed");
    return Proposition(frame, atoms);
  }

  const Frame& frame() const { return frame_; }
  AtomSet atoms() const { return atoms_; }
  bool empty() const { return atoms_ == 0; }
  std::size_t atom_count() const { return static_cast<std::size_t>(std::popcount(atoms_)); }

  // Minimal atoms; their digit sets form the generator antichain.
  std::vector<Atom> generators() const {
    const auto& t = frame_.atoms();
    std::vector<Atom> out;
    detail::for_each_bit(atoms_, [&](std::size_t a) {
      if ((t.strict_down[a] & atoms_) == 0) out.push_back(Atom{t.digits[a]});
    });
    return out;
  }

  friend bool operator==(const Proposition& a, const Proposition& b) {
    return a.atoms_ == b.atoms_ && a.frame_ == b.frame_;
  }

  // Canonical order: atom count, then bitset value. Keys of one map share a frame.
  friend std::strong_ordering operator<=>(const Proposition& a, const Proposition& b) {
    if (auto c = a.atom_count() <=> b.atom_count(); c != 0) return c;
    return a.atoms_ <=> b.atoms_;
  }

 private:
  friend Proposition up_closure(const Frame&, AtomSet);
  Proposition(Frame frame, AtomSet atoms) : frame_(std::move(frame)), atoms_(atoms) {}

  Frame frame_;
  AtomSet atoms_ = 0;
};

inline Proposition up_closure(const Frame& frame, AtomSet atoms) {
  const auto& t = frame.atoms();
  AtomSet closed = 0;
  detail::for_each_bit(atoms & t.all, [&](std::size_t a) { closed |= t.up[a]; });
  return Proposition(frame, closed);
}

// Up-closure of the atoms with the given digit sets.
inline Proposition from_generators(const Frame& frame, const std::vector<DigitMask>& gens) {
  const auto& t = frame.atoms();
  AtomSet seed = 0;
  for (DigitMask g : gens) {
    if (g == 0 || g > t.count)
      throw Error(Errc::kIndexOutOfRange, "generator outside frame");
    seed |= AtomSet{1} << t.index_of[g];
  }
  return up_closure(frame, seed);
}

inline Proposition empty_proposition(const Frame& frame) { return up_closure(frame, 0); }

inline Proposition total_ignorance(const Frame& frame) {
  return up_closure(frame, frame.atoms().all);
}

inline Proposition singleton(const Frame& frame, std::size_t i) {
  if (i < 1 || i > frame.size())
    throw Error(Errc::kIndexOutOfRange,
                "singleton " + std::to_string(i) + " of " + std::to_string(frame.size()));
  return up_closure(frame, frame.atoms().with_digit[i - 1]);
}

namespace detail {
inline void require_same_frame(const Proposition& p, const Proposition& q) {
  if (!(p.frame() == q.frame())) throw Error(Errc::kFrameMismatch, "propositions on different frames");
}
}  // namespace detail

inline Proposition conjoin(const Proposition& p, const Proposition& q) {
  detail::require_same_frame(p, q);
  return up_closure(p.frame(), p.atoms() & q.atoms());
}

inline Proposition disjoin(const Proposition& p, const Proposition& q) {
  detail::require_same_frame(p, q);
  return up_closure(p.frame(), p.atoms() | q.atoms());
}

inline Proposition operator&(const Proposition& p, const Proposition& q) { return conjoin(p, q); }
inline Proposition operator|(const Proposition& p, const Proposition& q) { return disjoin(p, q); }

inline bool leq(const Proposition& p, const Proposition& q) {
  detail::require_same_frame(p, q);
  return (p.atoms() & ~q.atoms()) == 0;
}

// All up-sets of the atom poset of an n-frame, sorted by (popcount, value).
inline std::vector<AtomSet> enumerate_upsets(std::size_t n) {
  const auto& t = detail::atom_table(n);
  std::vector<AtomSet> out;
  // Decide atoms from the top (largest digit sets) down; an atom may join only
  // when every atom covering it is already in.
  auto recurse = [&](auto&& self, std::ptrdiff_t j, AtomSet cur) -> void {
    if (j < 0) {
      out.push_back(cur);
      return;
    }
    self(self, j - 1, cur);
    if ((t.covers[j] & cur) == t.covers[j]) self(self, j - 1, cur | (AtomSet{1} << j));
  };
  recurse(recurse, static_cast<std::ptrdiff_t>(t.count) - 1, 0);
  std::sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

inline std::vector<Proposition> enumerate_hpset(const Frame& frame,
                                                std::size_t limit = kDefaultEnumerationLimit) {
  if (frame.size() > limit)
    throw Error(Errc::kFrameTooLarge, "hyper-power set enumeration for n=" +
                                          std::to_string(frame.size()) + " exceeds limit " +
                                          std::to_string(limit));
  std::vector<Proposition> out;
  for (AtomSet s : enumerate_upsets(frame.size())) out.push_back(up_closure(frame, s));
  return out;
}

// Anti-absorption: drop every part that contains all digits of another part.
inline std::vector<Atom> minimal_parts(const Proposition& p) {
  const auto& t = p.frame().atoms();
  std::vector<DigitMask> parts;
  detail::for_each_bit(p.atoms(), [&](std::size_t a) { parts.push_back(t.digits[a]); });
  std::vector<bool> absorbed(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j || absorbed[j]) continue;
      if ((parts[i] & parts[j]) == parts[j] && parts[i] != parts[j]) {
        absorbed[i] = true;
        break;
      }
    }
  }
  std::vector<Atom> out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!absorbed[i]) out.push_back(Atom{parts[i]});
  return out;
}

// Union of the singletons named by the minimal parts of p; u(EMPTY) = EMPTY.
inline Proposition u_of(const Proposition& p) {
  const auto& t = p.frame().atoms();
  DigitMask digits = 0;
  for (const Atom& a : minimal_parts(p)) digits |= a.digits;
#ifndef NDEBUG
  DigitMask check = 0;
  for (const Atom& a : p.generators()) check |= a.digits;
  assert(check == digits);
#endif
  AtomSet out = 0;
  for (std::size_t i = 0; i < t.n; ++i)
    if (digits & (DigitMask{1} << i)) out |= t.with_digit[i];
  return up_closure(p.frame(), out);
}

// Disjunctive form over generators: larger conjunctions first, then
// lexicographic; EMPTY for the empty proposition.
inline std::string to_expression(const Proposition& p) {
  if (p.empty()) return "EMPTY";
  std::vector<DigitMask> gens;
  for (const Atom& a : p.generators()) gens.push_back(a.digits);
  std::sort(gens.begin(), gens.end(), [](DigitMask a, DigitMask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return detail::digits_before(a, b);
  });
  std::string out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g) out += '|';
    bool paren = gens.size() > 1 && std::popcount(gens[g]) > 1;
    if (paren) out += '(';
    bool first = true;
    for (std::size_t i : Atom{gens[g]}.indices()) {
      if (!first) out += '&';
      out += p.frame().name(i);
      first = false;
    }
    if (paren) out += ')';
  }
  return out;
}

}  // namespace dsmt
