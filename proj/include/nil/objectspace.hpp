#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nil/rng.hpp"

namespace nil {

// Dimensions of the meaning space and the message space.
struct SpaceSpec {
  int n_attributes = 2;
  int n_values = 8;
  int message_length = 2;
  int vocab_size = 8;

  void validate() const;
  long long object_count() const;   // n_values^n_attributes
  long long message_count() const;  // vocab_size^message_length
  int encoded_dim() const { return n_attributes * n_values; }
};

// One attribute value per slot, each in [0, n_values).
using ObjectId = std::vector<int>;

// Fixed-length symbol sequence, each symbol in [0, vocab_size).
using Message = std::vector<int>;

// Canonical enumeration of the meaning space: lexicographic over attribute
// tuples. Every enumeration-dependent result (language tables, rho) is
// stated against this order.
std::vector<ObjectId> enumerate_objects(const SpaceSpec& spec);

// Concatenated one-hot blocks, one per attribute. Throws on out-of-range
// attribute values.
std::vector<double> encode_object(const SpaceSpec& spec, const ObjectId& x);

// Writes the encoding into out[0..encoded_dim); used to fill batch rows
// without an intermediate allocation.
template <typename T>
void encode_object_into(const SpaceSpec& spec, const ObjectId& x, T* out) {
  for (int a = 0; a < spec.n_attributes; ++a) {
    for (int v = 0; v < spec.n_values; ++v) out[a * spec.n_values + v] = T(0);
    out[a * spec.n_values + x[static_cast<std::size_t>(a)]] = T(1);
  }
}

// Negative cosine similarity of the one-hot encodings. For this encoding it
// equals -(shared attributes)/n_attributes, in [-1, 0].
double object_distance(const SpaceSpec& spec, const ObjectId& a, const ObjectId& b);

// c candidates containing the target exactly once, distractors drawn
// uniformly without replacement from the rest of the space, then shuffled.
// Returns the candidate list and the target's position.
std::pair<std::vector<ObjectId>, int> sample_candidates(const SpaceSpec& spec,
                                                        const ObjectId& target,
                                                        int c, Rng& rng);

// Precomputed enumeration with index lookups and cached pairwise distances;
// the rest of the library works in canonical indices.
class ObjectSpace {
 public:
  explicit ObjectSpace(const SpaceSpec& spec);

  const SpaceSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(objects_.size()); }
  const std::vector<ObjectId>& objects() const { return objects_; }
  const ObjectId& object(int index) const { return objects_[static_cast<std::size_t>(index)]; }
  int index_of(const ObjectId& x) const;  // throws if invalid
  double distance(int i, int j) const;

  // Index-level variant of sample_candidates: distractors drawn from
  // pool \ {target}. Used both for training rounds (full space) and
  // validation games.
  std::pair<std::vector<int>, int> sample_candidate_indices(
      int target, const std::vector<int>& pool, int c, Rng& rng) const;

 private:
  SpaceSpec spec_;
  std::vector<ObjectId> objects_;
};

}  // namespace nil
