#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nil/bigint.hpp"
#include "nil/objectspace.hpp"

namespace nil {

// Total mapping from every object (canonical order) to a message.
struct Language {
  std::vector<Message> messages;  // aligned with enumerate_objects

  const Message& at(int object_index) const {
    return messages[static_cast<std::size_t>(object_index)];
  }
  void validate(const SpaceSpec& spec) const;  // totality + symbol ranges
};

// Multiset of (object, message) pairs; objects are canonical indices.
struct Dataset {
  std::vector<std::pair<int, Message>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

enum class LanguageClass {
  degenerate,
  ambiguous_with_degenerate_component,
  holistic,
  compositional,
};

const char* to_string(LanguageClass c);

// Exact class counts per the closed-form combinatorics. When the spec cannot
// host a compositional language (message_length < n_attributes or
// vocab_size < n_values) `compositional` is zero and the flag records why,
// rather than throwing.
struct LanguageClassCounts {
  BigUint all;
  BigUint unambiguous;
  BigUint compositional;
  BigUint holistic;
  bool compositional_defined = true;
};

// Random perfectly structured language: an injective attribute-to-position
// assignment plus injective per-attribute value-to-symbol tables; positions
// not tied to an attribute carry symbol 0.
Language generate_compositional(const SpaceSpec& spec, Rng& rng);

// Reassigns the same multiset of messages to objects by a uniform random
// permutation.
Language permute_language(const Language& lang, Rng& rng);

// All objects map to m.
Language generate_degenerate(const SpaceSpec& spec, const Message& m);

LanguageClass classify_language(const SpaceSpec& spec, const Language& lang);

LanguageClassCounts count_language_classes(const SpaceSpec& spec);

// size independent pairs: objects uniform over the space, messages uniform
// over the message space.
Dataset random_dataset(const SpaceSpec& spec, int size, Rng& rng);

// Appends pairs sampled from degenerate_lang (uniform objects) until they
// make up at least `fraction` of the result.
Dataset mix_degenerate(const SpaceSpec& spec, const Dataset& dataset,
                       const Language& degenerate_lang, double fraction, Rng& rng);

// Number of distinct messages in the language's range.
int message_type_count(const Language& lang);

}  // namespace nil
