#pragma once

// Constants C1, C2, C0 of a helicity profile, assignments (admissible
// partitions of boundary components under a self-embedding), exact
// feasible-C intervals, and the separation / recognition verifications.
//
// An assignment g maps every target component i' to a domain component g(i').
// Block i is {(0, i)} ∪ {(1, i') : g(i') = i}; its constraint is
//   -Cⁿ h(i) + Σ_{g(i') = i} h'(i') >= -ε.

#include "helicap/helicity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace helicap {

inline constexpr double kFeasibilitySlack = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultAssignmentCap = 10'000'000;

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PermutationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double compute_C1(const HelicityProfile& p) {
  const auto pos = p.positive();
  const double inv_n = 1.0 / static_cast<double>(p.n);
  double best = 0.0;
  for (auto a : pos)
    for (auto b : pos)
      if (p.h(a) > p.h(b)) best = std::max(best, std::min(1.0, std::pow(p.h(b) / p.h(a), inv_n)));
  return best;
}

inline double compute_C2(const HelicityProfile& p) {
  const double inv_n = 1.0 / static_cast<double>(p.n);
  double best = 0.0;
  for (auto a : p.positive())
    for (auto b : p.negative())
      best = std::max(best, std::min(1.0, std::pow(std::max(0.0, 1.0 + p.h(b) / p.h(a)), inv_n)));
  return best;
}

inline double compute_C0(const HelicityProfile& p) { return std::max(compute_C1(p), compute_C2(p)); }

/// Subset of (0, 1]: empty, or from `lo` (open at 0 unless lo_closed) to `hi` (closed).
struct CInterval {
  bool empty = true;
  double lo = 0.0;
  bool lo_closed = false;
  double hi = 0.0;

  bool contains(double c) const {
    if (empty || c > hi) return false;
    return lo_closed ? c >= lo : c > lo;
  }
  /// Non-empty intersection with the open interval (a, b).
  bool meets_open(double a, double b) const {
    if (empty || a >= b) return false;
    return hi > a && lo < b;
  }
  /// sup of the set, -∞ when empty.
  double sup() const { return empty ? -std::numeric_limits<double>::infinity() : hi; }
};

/// {C in (0, 1] : -Cⁿ h + S >= -ε}.
inline CInterval block_interval(double h, double s, std::size_t n) {
  const double sp = s + kFeasibilitySlack;
  const double inv_n = 1.0 / static_cast<double>(n);
  CInterval out{false, 0.0, false, 1.0};
  if (h > 0.0) {
    if (sp <= 0.0) return {};
    out.hi = std::min(1.0, std::pow(sp / h, inv_n));
  } else if (h < 0.0) {
    if (sp < 0.0) {
      const double lo = std::pow(sp / h, inv_n);
      if (lo > 1.0) return {};
      out.lo = lo;
      out.lo_closed = true;
    }
  } else if (sp < 0.0) {
    return {};
  }
  return out;
}

inline CInterval intersect(const CInterval& a, const CInterval& b) {
  if (a.empty || b.empty) return {};
  CInterval r{false, 0.0, false, std::min(a.hi, b.hi)};
  if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  }
  if (r.lo > r.hi || (r.lo == r.hi && !r.lo_closed)) return {};
  return r;
}

class Assignment {
 public:
  Assignment(const HelicityProfile& domain, const HelicityProfile& target, std::vector<std::size_t> map)
      : domain_(&domain), target_(&target), map_(std::move(map)) {
    if (domain.n != target.n) throw std::invalid_argument("Assignment: profiles have different n");
    if (map_.size() != target.size()) throw std::invalid_argument("Assignment: map must be total on targets");
    for (auto i : map_)
      if (i >= domain.size()) throw std::invalid_argument("Assignment: map value out of range");
  }

  const HelicityProfile& domain() const { return *domain_; }
  const HelicityProfile& target() const { return *target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t n() const { return domain_->n; }

  std::vector<std::size_t> block_targets(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < map_.size(); ++t)
      if (map_[t] == i) out.push_back(t);
    return out;
  }

  double block_sum(std::size_t i) const {
    CompensatedSum s;
    for (std::size_t t = 0; t < map_.size(); ++t)
      if (map_[t] == i) s.add(target_->h(t));
    return s.value();
  }

 private:
  const HelicityProfile* domain_;
  const HelicityProfile* target_;
  std::vector<std::size_t> map_;
};

inline bool block_inequality(const Assignment& a, std::size_t i, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("block_inequality: C must be positive");
  const double cn = std::pow(c, static_cast<double>(a.n()));
  return -cn * a.domain().h(i) + a.block_sum(i) >= -kFeasibilitySlack;
}

inline CInterval feasible_C_interval(const Assignment& a) {
  CInterval r{false, 0.0, false, 1.0};
  for (std::size_t i = 0; i < a.domain().size(); ++i) {
    r = intersect(r, block_interval(a.domain().h(i), a.block_sum(i), a.n()));
    if (r.empty) break;
  }
  return r;
}

inline bool separates(const Assignment& a) {
  const auto& d = a.domain();
  const auto& t = a.target();
  std::vector<unsigned char> pos(d.size(), 0), neg(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    pos[i] = d.h(i) > 0.0;
    neg[i] = d.h(i) < 0.0;
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto i = a.map()[k];
    if (t.h(k) > 0.0) pos[i] = 1;
    if (t.h(k) < 0.0) neg[i] = 1;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    if (pos[i] && neg[i]) return false;
  return true;
}

/// |I|^{|I'|}, or throws when it exceeds `cap`.
inline std::uint64_t assignment_count(std::size_t domain_size, std::size_t target_size,
                                      std::uint64_t cap = kDefaultAssignmentCap) {
  if (domain_size == 0 && target_size > 0)
    throw std::invalid_argument("enumerate_assignments: empty domain with nonempty target");
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), domain_size, target_size);
  if (count > mpz_class(std::to_string(cap)))
    throw CapExceededError("enumerate_assignments: " + count.get_str() + " assignments (" +
                           std::to_string(domain_size) + "^" + std::to_string(target_size) +
                           ") exceed the cap of " + std::to_string(cap));
  return count.get_ui();
}

/// The index-th total map in base-|I| digit order (target 0 is the least significant digit).
inline std::vector<std::size_t> decode_assignment(std::uint64_t index, std::size_t domain_size,
                                                  std::size_t target_size) {
  std::vector<std::size_t> map(target_size);
  for (std::size_t k = 0; k < target_size; ++k) {
    map[k] = static_cast<std::size_t>(index % domain_size);
    index /= domain_size;
  }
  return map;
}

/// Calls fn(const Assignment&) for every total map target -> domain, once each.
template <class Fn>
void enumerate_assignments(const HelicityProfile& domain, const HelicityProfile& target, Fn&& fn,
                           std::uint64_t cap = kDefaultAssignmentCap) {
  const auto count = assignment_count(domain.size(), target.size(), cap);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    fn(Assignment(domain, target, decode_assignment(idx, domain.size(), target.size())));
}

namespace detail {

/// Splits [0, count) into `threads` contiguous ranges; worker(t, begin, end).
template <class Worker>
void parallel_ranges(std::uint64_t count, unsigned threads, Worker&& worker) {
  const unsigned nt = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count)));
  if (nt == 1) {
    worker(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nt);
  for (unsigned t = 0; t < nt; ++t) {
    const std::uint64_t b = count * t / nt, e = count * (t + 1) / nt;
    pool.emplace_back([&, t, b, e] {
      try {
        worker(t, b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

struct KeyLemmaReport {
  double C0 = 0.0;
  double worst_violator_Cmax = -std::numeric_limits<double>::infinity();
  std::optional<std::vector<std::size_t>> worst_violator;
  std::uint64_t assignments = 0;
  std::uint64_t non_separating = 0;
  bool pass = true;
};

/// Every non-separating self-assignment has sup(feasible set) <= C0 + 1e-9.
inline KeyLemmaReport verify_key_lemma(const HelicityProfile& p, std::uint64_t cap = kDefaultAssignmentCap,
                                       unsigned threads = 1) {
  KeyLemmaReport rep;
  rep.C0 = compute_C0(p);
  rep.assignments = assignment_count(p.size(), p.size(), cap);
  const unsigned nt = std::max(1u, threads);
  std::vector<KeyLemmaReport> part(nt);
  detail::parallel_ranges(rep.assignments, nt, [&](unsigned t, std::uint64_t b, std::uint64_t e) {
    auto& r = part[t];
    for (std::uint64_t idx = b; idx < e; ++idx) {
      Assignment a(p, p, decode_assignment(idx, p.size(), p.size()));
      if (separates(a)) continue;
      ++r.non_separating;
      const double s = feasible_C_interval(a).sup();
      if (s > r.worst_violator_Cmax) {
        r.worst_violator_Cmax = s;
        r.worst_violator = a.map();
      }
    }
  });
  for (const auto& r : part) {
    rep.non_separating += r.non_separating;
    if (r.worst_violator_Cmax > rep.worst_violator_Cmax) {
      rep.worst_violator_Cmax = r.worst_violator_Cmax;
      rep.worst_violator = r.worst_violator;
    }
  }
  rep.pass = rep.worst_violator_Cmax <= rep.C0 + kSpectrumTolerance;
  return rep;
}

/// For a separating assignment feasible above C0: the map f: I+ -> I+ sending
/// each positive domain component to the unique positive target in its block.
/// Returned as pairs (i+, f(i+)).
inline std::vector<std::pair<std::size_t, std::size_t>> extract_permutation(const Assignment& a) {
  const auto& d = a.domain();
  const auto& t = a.target();
  std::vector<std::pair<std::size_t, std::size_t>> f;
  std::vector<unsigned char> hit(t.size(), 0);
  for (auto ip : d.positive()) {
    std::vector<std::size_t> pos_targets;
    for (auto k : a.block_targets(ip))
      if (t.h(k) > 0.0) pos_targets.push_back(k);
    if (pos_targets.size() != 1)
      throw PermutationError("cardinality claim fails: block of domain component " + d.components[ip].label +
                             " holds " + std::to_string(pos_targets.size()) + " positive targets, expected 1");
    const auto j = pos_targets.front();
    if (hit[j]) throw PermutationError("injectivity fails: target " + t.components[j].label + " used twice");
    hit[j] = 1;
    f.emplace_back(ip, j);
  }
  for (auto j : t.positive())
    if (!hit[j]) throw PermutationError("surjectivity fails: positive target " + t.components[j].label + " unmatched");
  for (auto [i, j] : f)
    if (std::abs(t.h(j) - d.h(i)) > 1e-12 * (1.0 + std::abs(d.h(i))))
      throw PermutationError("helicity preservation fails: h(" + t.components[j].label + ") != h(" +
                             d.components[i].label + ")");
  return f;
}

struct SpectrumEntry {
  std::vector<std::size_t> map;
  CInterval interval;  // feasible set ∩ (C0, 1]
  bool separating = false;
};

/// Feasible-C spectrum: per assignment, feasible set ∩ (C0, 1], non-empty entries only.
inline std::vector<SpectrumEntry> feasible_spectrum(const HelicityProfile& p, std::uint64_t cap = kDefaultAssignmentCap,
                                                    unsigned threads = 1) {
  const double c0 = compute_C0(p);
  const auto count = assignment_count(p.size(), p.size(), cap);
  const CInterval above{false, c0, false, 1.0};
  const unsigned nt = std::max(1u, threads);
  std::vector<std::vector<SpectrumEntry>> part(nt);
  detail::parallel_ranges(count, nt, [&](unsigned t, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t idx = b; idx < e; ++idx) {
      Assignment a(p, p, decode_assignment(idx, p.size(), p.size()));
      auto iv = intersect(feasible_C_interval(a), above);
      if (iv.empty) continue;
      part[t].push_back({a.map(), iv, separates(a)});
    }
  });
  std::vector<SpectrumEntry> out;
  for (auto& v : part)
    for (auto& e : v) out.push_back(std::move(e));
  return out;
}

struct RecognitionReport {
  double C0 = 0.0;
  double forced_C = std::numeric_limits<double>::quiet_NaN();
  bool contains_one = false;
  bool gap_empty = false;  // spectrum ∩ (C0 + tol, 1 - tol) = ∅
  std::size_t spectrum_entries = 0;
  bool pass = false;
};

/// The spectrum above C0 reduces to {1}. Comparisons at C0 and 1 use the 1e-9 spectrum tolerance.
inline RecognitionReport verify_recognition(const HelicityProfile& p, std::uint64_t cap = kDefaultAssignmentCap,
                                            unsigned threads = 1) {
  if (!(p.negative_total() < 0.0))
    throw HypothesisError("verify_recognition: profile has no negative-helicity component");
  RecognitionReport rep;
  rep.C0 = compute_C0(p);
  const auto entries = feasible_spectrum(p, cap, threads);
  rep.spectrum_entries = entries.size();
  rep.gap_empty = true;
  double inf_above = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (e.interval.contains(1.0)) rep.contains_one = true;
    if (e.interval.meets_open(rep.C0 + kSpectrumTolerance, 1.0 - kSpectrumTolerance)) rep.gap_empty = false;
    if (e.interval.hi > rep.C0 + kSpectrumTolerance)
      inf_above = std::min(inf_above, std::max(e.interval.lo, rep.C0 + kSpectrumTolerance));
  }
  rep.pass = rep.gap_empty && rep.contains_one;
  // on success the only admissible value above the C0 band is exactly 1
  if (rep.pass)
    rep.forced_C = 1.0;
  else if (std::isfinite(inf_above))
    rep.forced_C = inf_above;
  return rep;
}

}  // namespace helicap
