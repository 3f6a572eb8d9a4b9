#include "liken/semigroup.hpp"

#include <algorithm>

#include "liken/error.hpp"
#include "liken/families.hpp"

namespace liken {

NumericalSemigroup::NumericalSemigroup(const std::vector<std::uint64_t>& gens)
    : info_(minimalize_numerical(gens)) {
  const std::uint64_t top = info_.minimal.back();
  extend_to(top * top + top);
  if (!info_.cofinite) return;
  // every residue mod the smallest generator must be hit inside the table
  const std::uint64_t m = info_.minimal.front();
  for (;;) {
    std::vector<bool> seen(m, false);
    std::uint64_t hit = 0;
    for (std::uint64_t n = 0; n < member_.size() && hit < m; ++n) {
      if (member_[n] && !seen[n % m]) {
        seen[n % m] = true;
        ++hit;
      }
    }
    if (hit == m) break;
    extend_to(2 * member_.size());
  }
}

void NumericalSemigroup::extend_to(std::uint64_t n) const {
  if (n < member_.size()) return;
  std::uint64_t from = member_.size();
  member_.resize(n + 1, false);
  for (std::uint64_t i = from; i <= n; ++i) {
    if (i == 0) {
      member_[0] = true;
      continue;
    }
    for (std::uint64_t g : info_.minimal) {
      if (g > i) break;
      if (member_[i - g]) {
        member_[i] = true;
        break;
      }
    }
  }
}

bool NumericalSemigroup::contains(std::uint64_t n) const {
  if (n >= member_.size()) extend_to(std::max<std::uint64_t>(n, 2 * member_.size()));
  return member_[n];
}

std::vector<std::uint64_t> apery_set(const NumericalSemigroup& s, std::uint64_t m) {
  if (!s.cofinite()) {
    throw Error(ErrorCode::NotCofinite, "gcd is " + std::to_string(s.gcd()) + "; residue classes are not all reached");
  }
  if (m == 0 || !s.contains(m)) throw Error(ErrorCode::NotAMember, std::to_string(m) + " is not in the semigroup");
  std::vector<std::uint64_t> out(m, 0);
  std::vector<bool> seen(m, false);
  std::uint64_t hit = 0;
  for (std::uint64_t n = 0; hit < m; ++n) {
    if (s.contains(n) && !seen[n % m]) {
      seen[n % m] = true;
      out[n % m] = n;
      ++hit;
    }
  }
  return out;
}

std::uint64_t frobenius(const NumericalSemigroup& s) {
  if (!s.cofinite()) throw Error(ErrorCode::NotCofinite, "gcd is " + std::to_string(s.gcd()));
  const std::uint64_t m = s.minimal_gens().front();
  if (m == 1) throw Error(ErrorCode::NoGaps, "the semigroup is all of N");
  const auto ap = apery_set(s, m);
  const std::uint64_t f = *std::max_element(ap.begin(), ap.end()) - m;
  bool ok = !s.contains(f);
  for (std::uint64_t n = f + 1; ok && n <= f + m; ++n) ok = s.contains(n);
  if (!ok) throw Error(ErrorCode::InternalConsistency, "Apery set and membership table disagree on the Frobenius number");
  return f;
}

GenusAndGaps genus_and_gaps(const NumericalSemigroup& s) {
  if (!s.cofinite()) throw Error(ErrorCode::NotCofinite, "gcd is " + std::to_string(s.gcd()));
  GenusAndGaps out;
  if (s.minimal_gens().front() == 1) return out;
  const std::uint64_t f = frobenius(s);
  for (std::uint64_t n = 1; n <= f; ++n) {
    if (!s.contains(n)) out.gaps.push_back(n);
  }
  out.genus = out.gaps.size();
  return out;
}

nlohmann::json semigroup_summary(const NumericalSemigroup& s, const std::vector<std::uint64_t>& apery_moduli) {
  nlohmann::json out{{"input_gens", s.info().input},
                     {"minimal_gens", s.minimal_gens()},
                     {"gcd", s.gcd()},
                     {"cofinite", s.cofinite()}};
  nlohmann::json removed = nlohmann::json::array();
  for (const Redundancy& r : s.info().removed) {
    removed.push_back({{"generator", r.generator}, {"decomposition", to_string(r.decomposition)}});
  }
  out["removed"] = removed;
  if (!s.cofinite()) return out;
  const auto gg = genus_and_gaps(s);
  out["frobenius"] = s.minimal_gens().front() == 1 ? nlohmann::json(nullptr) : nlohmann::json(frobenius(s));
  out["genus"] = gg.genus;
  out["gaps"] = gg.gaps;
  nlohmann::json apery = nlohmann::json::object();
  for (std::uint64_t m : apery_moduli) {
    auto ap = apery_set(s, m);
    std::sort(ap.begin(), ap.end());
    apery[std::to_string(m)] = ap;
  }
  out["apery"] = apery;
  return out;
}

}  // namespace liken
