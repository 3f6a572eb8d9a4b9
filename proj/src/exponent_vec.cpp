#include "liken/exponent_vec.hpp"

#include <algorithm>
#include <charconv>

#include "liken/error.hpp"

namespace liken {

namespace {

template <typename T>
T parse_number(std::string_view s, std::string_view whole) {
  T out{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad exponent vector: " + std::string(whole));
  }
  return out;
}

}  // namespace

ExponentVec ExponentVec::unit(std::uint32_t k) {
  ExponentVec v;
  v.add(k, 1);
  return v;
}

ExponentVec ExponentVec::from_entries(std::vector<Entry> entries) {
  ExponentVec v;
  for (const auto& [k, m] : entries) v.add(k, m);
  return v;
}

std::uint64_t ExponentVec::multiplicity(std::uint32_t k) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{k, 0});
  return it != entries_.end() && it->first == k ? it->second : 0;
}

std::uint64_t ExponentVec::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

std::vector<std::uint32_t> ExponentVec::support() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

bool ExponentVec::shares_support(const ExponentVec& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) return true;
    if (a->first < b->first) ++a;
    else ++b;
  }
  return false;
}

ExponentVec& ExponentVec::add(std::uint32_t k, std::uint64_t m) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "generator indices start at 1");
  if (m == 0) return *this;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{k, 0});
  if (it != entries_.end() && it->first == k) it->second += m;
  else entries_.insert(it, Entry{k, m});
  return *this;
}

ExponentVec& ExponentVec::operator+=(const ExponentVec& other) {
  for (const auto& [k, m] : other.entries_) add(k, m);
  return *this;
}

std::string to_string(const ExponentVec& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [k, m] : v.entries()) {
    if (!out.empty()) out += '*';
    out += std::to_string(k) + '^' + std::to_string(m);
  }
  return out;
}

ExponentVec parse_exponent_vec(std::string_view text) {
  if (text == "0") return {};
  ExponentVec v;
  std::string_view rest = text;
  while (true) {
    const auto star = rest.find('*');
    const std::string_view term = rest.substr(0, star);
    const auto caret = term.find('^');
    if (caret == std::string_view::npos) throw Error(ErrorCode::Parse, "bad exponent vector: " + std::string(text));
    const auto k = parse_number<std::uint32_t>(term.substr(0, caret), text);
    const auto m = parse_number<std::uint64_t>(term.substr(caret + 1), text);
    if (k == 0 || m == 0) throw Error(ErrorCode::Parse, "bad exponent vector: " + std::string(text));
    v.add(k, m);
    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  return v;
}

std::string reps_to_string(const std::vector<ExponentVec>& reps) {
  std::string out;
  for (const auto& r : reps) {
    if (!out.empty()) out += ';';
    out += to_string(r);
  }
  return out;
}

std::vector<ExponentVec> parse_reps(std::string_view text) {
  std::vector<ExponentVec> out;
  std::string_view rest = text;
  while (true) {
    const auto semi = rest.find(';');
    out.push_back(parse_exponent_vec(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return out;
}

}  // namespace liken
