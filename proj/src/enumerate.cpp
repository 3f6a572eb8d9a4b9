#include "liken/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace liken {

const ExponentVec& Element::rep() const {
  if (reps.size() != 1) {
    throw NonUniqueError("element " + to_string(value) + " has " + std::to_string(reps.size()) +
                             " representations: " + reps_to_string(reps),
                         reps);
  }
  return reps.front();
}

NonUniqueError::NonUniqueError(const std::string& message, std::vector<ExponentVec> reps)
    : Error(ErrorCode::NonUnique, message), reps_(std::move(reps)) {}

// ---------------------------------------------------------------- Prefix

Prefix::Prefix(LikenSpec spec, std::vector<Element> elements, std::vector<Value> generators,
               bool generators_exhausted)
    : spec_(std::move(spec)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      exhausted_(generators_exhausted) {
  if (elements_.empty()) throw Error(ErrorCode::InvalidArgument, "prefix needs at least x_0");
  const ValueKind kind = spec_.value_kind();
  for (std::size_t n = 0; n < elements_.size(); ++n) {
    const Element& e = elements_[n];
    if (e.index != n) throw Error(ErrorCode::InvalidArgument, "element index out of sequence", n);
    if (e.value.kind() != kind) throw Error(ErrorCode::MixedKinds, "element of the wrong kind", n);
    if (e.reps.empty()) throw Error(ErrorCode::InvalidArgument, "element without representation", n);
    if (n == 0) {
      if (!e.value.is_zero() || e.reps.size() != 1 || !e.reps[0].is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "x_0 must be 0 with the zero representation", 0);
      }
    } else if (!(elements_[n - 1].value < e.value)) {
      throw Error(ErrorCode::NotIncreasing, "prefix values must increase strictly", n);
    }
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const Value& g = generators_[k];
    if (g.kind() != kind) throw Error(ErrorCode::MixedKinds, "generator of the wrong kind", k + 1);
    if (g.is_zero()) throw Error(ErrorCode::NonPositive, "generator must be positive", k + 1);
    if (k > 0 && !(generators_[k - 1] < g)) {
      throw Error(ErrorCode::NotIncreasing, "generators must increase strictly", k + 1);
    }
  }
}

bool Prefix::generators_cover(const Value& v) const {
  if (exhausted_) return true;
  if (v <= elements_.back().value) return true;
  return !generators_.empty() && v <= generators_.back();
}

std::size_t Prefix::generators_le(const Value& v) const {
  return static_cast<std::size_t>(std::upper_bound(generators_.begin(), generators_.end(), v) -
                                  generators_.begin());
}

std::size_t Prefix::generators_seen() const {
  std::size_t seen = generators_le(elements_.back().value);
  for (const Element& e : elements_) {
    for (const ExponentVec& r : e.reps) seen = std::max<std::size_t>(seen, r.max_index());
  }
  return seen;
}

bool Prefix::has_unique_reps() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const Element& e) { return e.unique(); });
}

std::optional<std::size_t> Prefix::find(const Value& v) const {
  if (v.kind() != value_kind()) {
    throw Error(ErrorCode::KindMismatch, "value kind does not match the prefix");
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v,
                             [](const Element& e, const Value& x) { return e.value < x; });
  if (it == elements_.end() || !(it->value == v)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

// ------------------------------------------------------------ Enumerator

Enumerator::Enumerator(const LikenSpec& spec, std::size_t generator_limit)
    : cache_(spec.make_stream()), generator_limit_(generator_limit), kind_(spec.value_kind()) {
  const Value* a1 = generator(1);
  if (a1 == nullptr) throw Error(ErrorCode::EmptySpec, "liken '" + spec.name() + "' has no generator");
}

const Value* Enumerator::generator(std::size_t k) {
  if (generator_limit_ != 0 && k > generator_limit_) return nullptr;
  return cache_.at(k);
}

void Enumerator::push(Node node) {
  heap_.push_back(std::move(node));
  std::push_heap(heap_.begin(), heap_.end(), NodeGreater{});
}

Enumerator::Node Enumerator::pop() {
  std::pop_heap(heap_.begin(), heap_.end(), NodeGreater{});
  Node node = std::move(heap_.back());
  heap_.pop_back();
  return node;
}

const Value& Enumerator::peek_value() const {
  static const Value kZeroRational = Value::zero(ValueKind::Rational);
  static const Value kZeroLog = Value::zero(ValueKind::LogInt);
  if (emitted_ == 0) return kind_ == ValueKind::Rational ? kZeroRational : kZeroLog;
  return heap_.front().value;
}

Element Enumerator::next() {
  if (emitted_ == 0) {
    const Value& a1 = *generator(1);
    push(Node{a1, Value::zero(kind_), ExponentVec(), 1});
    ++emitted_;
    return Element{0, Value::zero(kind_), {ExponentVec()}};
  }
  Element out;
  out.index = emitted_++;
  out.value = heap_.front().value;
  while (!heap_.empty() && heap_.front().value == out.value) {
    Node node = pop();
    ExponentVec vec = node.base;
    vec.add(node.gen);
    if (const Value* next_gen = generator(node.gen + 1)) {
      push(Node{value_add(node.base_value, *next_gen), node.base_value, node.base, node.gen + 1});
    }
    const Value& gen = *generator(node.gen);
    push(Node{value_add(node.value, gen), node.value, vec, node.gen});
    out.reps.push_back(std::move(vec));
  }
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

Prefix enumerate(const LikenSpec& spec, const Limit& limit) {
  Enumerator en(spec);
  std::vector<Element> elements;
  if (limit.type == Limit::Type::Count) {
    if (limit.n == 0) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
    elements.reserve(limit.n);
    while (elements.size() < limit.n) elements.push_back(en.next());
  } else {
    if (limit.bound.kind() != spec.value_kind()) {
      throw Error(ErrorCode::KindMismatch, "value bound kind does not match the liken");
    }
    elements.push_back(en.next());
    while (en.peek_value() <= limit.bound) elements.push_back(en.next());
  }
  GeneratorCache& cache = en.generators();
  cache.ensure_up_to(elements.back().value);
  return Prefix(spec, std::move(elements), cache.produced(), cache.exhausted());
}

// ------------------------------------------------------------------ Omega

Value omega(const std::vector<Value>& generators, ValueKind kind, const ExponentVec& m) {
  Value sum = Value::zero(kind);
  for (const auto& [k, mult] : m.entries()) {
    if (k > generators.size()) {
      throw Error(ErrorCode::UnknownGeneratorIndex,
                  "generator index " + std::to_string(k) + " is not available", k);
    }
    sum = value_add(sum, value_scale(mult, generators[k - 1]));
  }
  return sum;
}

Value omega(const LikenSpec& spec, const ExponentVec& m) {
  GeneratorCache cache(spec.make_stream());
  Value sum = Value::zero(spec.value_kind());
  for (const auto& [k, mult] : m.entries()) {
    const Value* a = cache.at(k);
    if (a == nullptr) {
      throw Error(ErrorCode::UnknownGeneratorIndex,
                  "liken '" + spec.name() + "' has no generator " + std::to_string(k), k);
    }
    sum = value_add(sum, value_scale(mult, *a));
  }
  return sum;
}

ExponentVec omega_inv(const Prefix& prefix, const Value& v) {
  if (v.kind() != prefix.value_kind()) {
    throw Error(ErrorCode::KindMismatch, "value kind does not match the prefix");
  }
  if (prefix.back().value < v) {
    throw Error(ErrorCode::IndexOutOfRange, to_string(v) + " lies beyond the prefix");
  }
  const auto n = prefix.find(v);
  if (!n) throw Error(ErrorCode::NotAnElement, to_string(v) + " is not an element");
  return prefix[*n].rep();
}

// ---------------------------------------------------------- Irreducibles

std::vector<std::size_t> irreducibles(const Prefix& prefix) {
  std::vector<std::size_t> out;
  const auto& xs = prefix.elements();
  for (std::size_t n = 1; n < xs.size(); ++n) {
    bool reducible = false;
    for (std::size_t i = 1; i < n && !reducible; ++i) {
      // i <= n - i in value order: stop once 2 x_i > x_n
      if (xs[n].value < value_add(xs[i].value, xs[i].value)) break;
      if (auto d = value_sub(xs[n].value, xs[i].value)) reducible = prefix.find(*d).has_value();
    }
    const bool by_reps = xs[n].reps.size() == 1 && xs[n].reps[0].is_unit();
    if (reducible == by_reps) {
      throw Error(ErrorCode::InternalConsistency,
                  "pair scan and representations disagree on irreducibility of x_" + std::to_string(n),
                  n);
    }
    if (!reducible) out.push_back(n);
  }
  return out;
}

// -------------------------------------------------------------------- z_n

Element subliken_z(const Prefix& prefix, std::size_t n) {
  if (n < 1 || n >= prefix.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "z_n needs 1 <= n < " + std::to_string(prefix.size()), n);
  }
  const Value& xn = prefix[n].value;
  const std::size_t k = prefix.generators_le(xn);
  Enumerator sub(prefix.spec(), k);
  Element e = sub.next();
  while (e.value <= xn) e = sub.next();
  const Value bound = value_add(xn, prefix.generators().front());
  if (bound < e.value) {
    throw Error(ErrorCode::InternalConsistency, "z_n exceeds x_n + a_1", n);
  }
  return e;
}

std::vector<Element> z_scan(const Prefix& prefix, std::size_t last) {
  if (last >= prefix.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "z_scan limit beyond the prefix", last);
  }
  const auto& xs = prefix.elements();
  const auto& gens = prefix.generators();
  std::vector<std::size_t> ptr;
  std::vector<Value> cand;
  std::vector<Element> out;
  out.reserve(last);
  for (std::size_t n = 1; n <= last; ++n) {
    const Value& xn = xs[n].value;
    while (ptr.size() < gens.size() && gens[ptr.size()] <= xn) {
      ptr.push_back(0);
      cand.push_back(gens[ptr.size() - 1]);
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < ptr.size(); ++i) {
      if (cand[i] <= xn) {
        while (value_add(xs[ptr[i]].value, gens[i]) <= xn) ++ptr[i];
        cand[i] = value_add(xs[ptr[i]].value, gens[i]);
      }
      if (best == std::numeric_limits<std::size_t>::max() || cand[i] < cand[best]) best = i;
    }
    Element z;
    z.value = cand[best];
    std::set<ExponentVec> reps;
    for (std::size_t i = 0; i < ptr.size(); ++i) {
      if (!(cand[i] == z.value)) continue;
      for (const ExponentVec& r : xs[ptr[i]].reps) {
        reps.insert(ExponentVec(r).add(static_cast<std::uint32_t>(i + 1)));
      }
    }
    z.reps.assign(reps.begin(), reps.end());
    if (z.reps.empty()) {
      throw Error(ErrorCode::InternalConsistency, "z_n without a representation", n);
    }
    out.push_back(std::move(z));
  }
  return out;
}

// ------------------------------------------------------------------- Gaps

Value Gap::difference() const {
  if (lower.kind() != ValueKind::Rational) {
    throw Error(ErrorCode::KindMismatch, "LogInt gaps are kept as endpoint pairs");
  }
  return Value::rational(upper.as_rational() - lower.as_rational());
}

std::vector<Gap> gaps(const Prefix& prefix) {
  if (prefix.size() < 2) throw Error(ErrorCode::InvalidArgument, "gaps need two elements");
  std::vector<Gap> out;
  out.reserve(prefix.size() - 1);
  for (std::size_t k = 0; k + 1 < prefix.size(); ++k) out.push_back(Gap{prefix[k].value, prefix[k + 1].value});
  return out;
}

std::strong_ordering compare_gaps(const Gap& p, const Gap& q) {
  return value_add(p.upper, q.lower) <=> value_add(q.upper, p.lower);
}

std::pair<std::size_t, mpz_class> to_multiplicative(const Prefix& prefix, std::size_t n) {
  if (prefix.value_kind() != ValueKind::LogInt) {
    throw Error(ErrorCode::KindMismatch, "the multiplicative model needs a LogInt liken");
  }
  if (n >= prefix.size()) throw Error(ErrorCode::IndexOutOfRange, "index beyond the prefix", n);
  return {n + 1, prefix[n].value.log_argument()};
}

}  // namespace liken
