#include "liken/generators.hpp"

#include <algorithm>

#include "liken/error.hpp"

namespace liken {

std::optional<Value> ListStream::next() {
  if (pos_ >= values_.size()) return std::nullopt;
  return values_[pos_++];
}

GeneratorCache::GeneratorCache(std::unique_ptr<GeneratorStream> stream) : stream_(std::move(stream)) {
  if (!stream_) throw Error(ErrorCode::EmptySpec, "no generator stream");
}

bool GeneratorCache::pull() {
  if (exhausted_) return false;
  auto v = stream_->next();
  if (!v) {
    exhausted_ = true;
    return false;
  }
  const std::size_t pos = produced_.size() + 1;
  if (v->is_zero()) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(pos) + " is zero", pos);
  if (!produced_.empty()) {
    if (produced_.back().kind() != v->kind()) {
      throw Error(ErrorCode::MixedKinds, "generator " + std::to_string(pos) + " changes value kind", pos);
    }
    if (!(produced_.back() < *v)) {
      throw Error(ErrorCode::NotIncreasing, "generator " + std::to_string(pos) + " does not increase", pos);
    }
  }
  produced_.push_back(std::move(*v));
  return true;
}

const Value* GeneratorCache::at(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::UnknownGeneratorIndex, "generator indices start at 1");
  while (produced_.size() < k) {
    if (!pull()) return nullptr;
  }
  return &produced_[k - 1];
}

void GeneratorCache::ensure_up_to(const Value& bound) {
  while (!exhausted_ && (produced_.empty() || !(bound < produced_.back()))) pull();
}

std::size_t GeneratorCache::count_le(const Value& bound) {
  ensure_up_to(bound);
  return static_cast<std::size_t>(
      std::upper_bound(produced_.begin(), produced_.end(), bound) - produced_.begin());
}

}  // namespace liken
