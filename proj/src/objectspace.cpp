#include "nil/objectspace.hpp"

#include <algorithm>
#include <cmath>

namespace nil {

namespace {

long long checked_pow(long long base, int exp, const char* what) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > (1LL << 40) / base) {
      throw std::invalid_argument(std::string(what) + " overflows enumeration limits");
    }
    v *= base;
  }
  return v;
}

void check_object(const SpaceSpec& spec, const ObjectId& x, const char* what) {
  if (static_cast<int>(x.size()) != spec.n_attributes) {
    throw std::invalid_argument(std::string(what) + ": wrong attribute count");
  }
  for (int v : x) {
    if (v < 0 || v >= spec.n_values) {
      throw std::invalid_argument(std::string(what) + ": attribute value out of range");
    }
  }
}

}  // namespace

void SpaceSpec::validate() const {
  if (n_attributes < 1) throw std::invalid_argument("n_attributes must be >= 1");
  if (n_values < 2) throw std::invalid_argument("n_values must be >= 2");
  if (message_length < 1) throw std::invalid_argument("message_length must be >= 1");
  if (vocab_size < 2) throw std::invalid_argument("vocab_size must be >= 2");
  object_count();
}

long long SpaceSpec::object_count() const {
  return checked_pow(n_values, n_attributes, "object count");
}

long long SpaceSpec::message_count() const {
  return checked_pow(vocab_size, message_length, "message count");
}

std::vector<ObjectId> enumerate_objects(const SpaceSpec& spec) {
  spec.validate();
  long long n = spec.object_count();
  std::vector<ObjectId> out;
  out.reserve(static_cast<std::size_t>(n));
  ObjectId cur(static_cast<std::size_t>(spec.n_attributes), 0);
  for (long long i = 0; i < n; ++i) {
    out.push_back(cur);
    for (int a = spec.n_attributes - 1; a >= 0; --a) {
      if (++cur[static_cast<std::size_t>(a)] < spec.n_values) break;
      cur[static_cast<std::size_t>(a)] = 0;
    }
  }
  return out;
}

std::vector<double> encode_object(const SpaceSpec& spec, const ObjectId& x) {
  check_object(spec, x, "encode_object");
  std::vector<double> out(static_cast<std::size_t>(spec.encoded_dim()), 0.0);
  encode_object_into(spec, x, out.data());
  return out;
}

double object_distance(const SpaceSpec& spec, const ObjectId& a, const ObjectId& b) {
  check_object(spec, a, "object_distance");
  check_object(spec, b, "object_distance");
  int shared = 0;
  for (int i = 0; i < spec.n_attributes; ++i) {
    if (a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]) ++shared;
  }
  return -static_cast<double>(shared) / spec.n_attributes;
}

std::pair<std::vector<ObjectId>, int> sample_candidates(const SpaceSpec& spec,
                                                        const ObjectId& target,
                                                        int c, Rng& rng) {
  ObjectSpace space(spec);
  int t = space.index_of(target);
  std::vector<int> pool(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) pool[static_cast<std::size_t>(i)] = i;
  auto [indices, pos] = space.sample_candidate_indices(t, pool, c, rng);
  std::vector<ObjectId> out;
  out.reserve(indices.size());
  for (int idx : indices) out.push_back(space.object(idx));
  return {std::move(out), pos};
}

ObjectSpace::ObjectSpace(const SpaceSpec& spec) : spec_(spec), objects_(enumerate_objects(spec)) {}

int ObjectSpace::index_of(const ObjectId& x) const {
  check_object(spec_, x, "index_of");
  long long idx = 0;
  for (int a = 0; a < spec_.n_attributes; ++a) {
    idx = idx * spec_.n_values + x[static_cast<std::size_t>(a)];
  }
  return static_cast<int>(idx);
}

double ObjectSpace::distance(int i, int j) const {
  const ObjectId& a = objects_[static_cast<std::size_t>(i)];
  const ObjectId& b = objects_[static_cast<std::size_t>(j)];
  int shared = 0;
  for (int k = 0; k < spec_.n_attributes; ++k) {
    if (a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]) ++shared;
  }
  return -static_cast<double>(shared) / spec_.n_attributes;
}

std::pair<std::vector<int>, int> ObjectSpace::sample_candidate_indices(
    int target, const std::vector<int>& pool, int c, Rng& rng) const {
  if (c < 2) throw std::invalid_argument("candidate count must be >= 2");
  std::vector<int> rest;
  rest.reserve(pool.size());
  for (int idx : pool) {
    if (idx != target) rest.push_back(idx);
  }
  if (static_cast<std::size_t>(c - 1) > rest.size()) {
    throw std::invalid_argument("not enough objects for requested candidate count");
  }
  // partial Fisher-Yates for the distractors, then a full shuffle
  std::vector<int> chosen(1, target);
  std::size_t need = static_cast<std::size_t>(c - 1);
  for (std::size_t i = 0; i < need; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.uniform_int(rest.size() - i));
    std::swap(rest[i], rest[j]);
    chosen.push_back(rest[i]);
  }
  rng.shuffle(chosen.begin(), chosen.end());
  int pos = static_cast<int>(std::find(chosen.begin(), chosen.end(), target) - chosen.begin());
  return {std::move(chosen), pos};
}

}  // namespace nil
