#include "nil/language.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nil {

void Language::validate(const SpaceSpec& spec) const {
  if (static_cast<long long>(messages.size()) != spec.object_count()) {
    throw std::invalid_argument("language is not total over the object space");
  }
  for (const Message& m : messages) {
    if (static_cast<int>(m.size()) != spec.message_length) {
      throw std::invalid_argument("message has wrong length");
    }
    for (int s : m) {
      if (s < 0 || s >= spec.vocab_size) throw std::invalid_argument("symbol out of range");
    }
  }
}

const char* to_string(LanguageClass c) {
  switch (c) {
    case LanguageClass::degenerate: return "degenerate";
    case LanguageClass::ambiguous_with_degenerate_component: return "ambiguous";
    case LanguageClass::holistic: return "holistic";
    case LanguageClass::compositional: return "compositional";
  }
  return "?";
}

Language generate_compositional(const SpaceSpec& spec, Rng& rng) {
  spec.validate();
  if (spec.message_length < spec.n_attributes || spec.vocab_size < spec.n_values) {
    throw std::invalid_argument(
        "cannot construct a compositional language: need message_length >= n_attributes "
        "and vocab_size >= n_values");
  }
  // injective attribute -> position assignment
  std::vector<int> positions(static_cast<std::size_t>(spec.message_length));
  for (int i = 0; i < spec.message_length; ++i) positions[static_cast<std::size_t>(i)] = i;
  rng.shuffle(positions.begin(), positions.end());
  positions.resize(static_cast<std::size_t>(spec.n_attributes));

  // per-attribute injective value -> symbol table
  std::vector<std::vector<int>> tables(static_cast<std::size_t>(spec.n_attributes));
  for (auto& table : tables) {
    std::vector<int> symbols(static_cast<std::size_t>(spec.vocab_size));
    for (int s = 0; s < spec.vocab_size; ++s) symbols[static_cast<std::size_t>(s)] = s;
    rng.shuffle(symbols.begin(), symbols.end());
    symbols.resize(static_cast<std::size_t>(spec.n_values));
    table = std::move(symbols);
  }

  Language lang;
  for (const ObjectId& x : enumerate_objects(spec)) {
    Message m(static_cast<std::size_t>(spec.message_length), 0);  // filler symbol 0
    for (int a = 0; a < spec.n_attributes; ++a) {
      m[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)])] =
          tables[static_cast<std::size_t>(a)][static_cast<std::size_t>(x[static_cast<std::size_t>(a)])];
    }
    lang.messages.push_back(std::move(m));
  }
  return lang;
}

Language permute_language(const Language& lang, Rng& rng) {
  std::vector<std::size_t> perm(lang.messages.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm.begin(), perm.end());
  Language out;
  out.messages.resize(lang.messages.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.messages[i] = lang.messages[perm[i]];
  return out;
}

Language generate_degenerate(const SpaceSpec& spec, const Message& m) {
  spec.validate();
  if (static_cast<int>(m.size()) != spec.message_length) {
    throw std::invalid_argument("degenerate message has wrong length");
  }
  Language out;
  out.messages.assign(static_cast<std::size_t>(spec.object_count()), m);
  return out;
}

namespace {

// Try every injective attribute -> position assignment; for each, read the
// per-attribute value -> symbol tables off the data and check they are
// consistent, injective, and that unassigned positions are constant.
bool compositional_assignment_exists(const SpaceSpec& spec,
                                     const std::vector<ObjectId>& objects,
                                     const Language& lang,
                                     std::vector<int>& assign, std::vector<bool>& used) {
  const int a = static_cast<int>(assign.size());
  if (a == spec.n_attributes) {
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(spec.n_attributes),
        std::vector<int>(static_cast<std::size_t>(spec.n_values), -1));
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const Message& m = lang.messages[i];
      for (int at = 0; at < spec.n_attributes; ++at) {
        int value = objects[i][static_cast<std::size_t>(at)];
        int sym = m[static_cast<std::size_t>(assign[static_cast<std::size_t>(at)])];
        int& slot = table[static_cast<std::size_t>(at)][static_cast<std::size_t>(value)];
        if (slot == -1) slot = sym;
        else if (slot != sym) return false;
      }
      for (int pos = 0; pos < spec.message_length; ++pos) {
        if (!used[static_cast<std::size_t>(pos)] &&
            m[static_cast<std::size_t>(pos)] != lang.messages[0][static_cast<std::size_t>(pos)]) {
          return false;
        }
      }
    }
    for (const auto& t : table) {
      std::set<int> seen;
      for (int sym : t) {
        if (!seen.insert(sym).second) return false;  // table not injective
      }
    }
    return true;
  }
  for (int pos = 0; pos < spec.message_length; ++pos) {
    if (used[static_cast<std::size_t>(pos)]) continue;
    used[static_cast<std::size_t>(pos)] = true;
    assign.push_back(pos);
    if (compositional_assignment_exists(spec, objects, lang, assign, used)) return true;
    assign.pop_back();
    used[static_cast<std::size_t>(pos)] = false;
  }
  return false;
}

}  // namespace

LanguageClass classify_language(const SpaceSpec& spec, const Language& lang) {
  lang.validate(spec);
  bool all_same = std::all_of(lang.messages.begin(), lang.messages.end(),
                              [&](const Message& m) { return m == lang.messages.front(); });
  if (all_same) return LanguageClass::degenerate;

  std::set<Message> distinct(lang.messages.begin(), lang.messages.end());
  if (distinct.size() != lang.messages.size()) {
    return LanguageClass::ambiguous_with_degenerate_component;
  }

  if (spec.message_length >= spec.n_attributes && spec.vocab_size >= spec.n_values) {
    auto objects = enumerate_objects(spec);
    std::vector<int> assign;
    std::vector<bool> used(static_cast<std::size_t>(spec.message_length), false);
    if (compositional_assignment_exists(spec, objects, lang, assign, used)) {
      return LanguageClass::compositional;
    }
  }
  return LanguageClass::holistic;
}

LanguageClassCounts count_language_classes(const SpaceSpec& spec) {
  spec.validate();
  LanguageClassCounts out;
  const auto n_objects = static_cast<std::uint64_t>(spec.object_count());
  const auto n_messages = static_cast<std::uint64_t>(spec.message_count());

  out.all = BigUint::pow(n_messages, n_objects);
  out.unambiguous = BigUint::falling_factorial(n_messages, n_objects);

  if (spec.message_length >= spec.n_attributes && spec.vocab_size >= spec.n_values) {
    BigUint comp = BigUint::falling_factorial(static_cast<std::uint64_t>(spec.message_length),
                                              static_cast<std::uint64_t>(spec.n_attributes));
    BigUint per_attr = BigUint::falling_factorial(static_cast<std::uint64_t>(spec.vocab_size),
                                                  static_cast<std::uint64_t>(spec.n_values));
    for (int a = 0; a < spec.n_attributes; ++a) comp *= per_attr;
    out.compositional = comp;
    out.compositional_defined = true;
  } else {
    out.compositional = BigUint(0);
    out.compositional_defined = false;
  }

  out.holistic = out.unambiguous;
  if (!(out.holistic < out.compositional)) {
    out.holistic -= out.compositional;
  } else {
    out.holistic = BigUint(0);
  }
  return out;
}

Dataset random_dataset(const SpaceSpec& spec, int size, Rng& rng) {
  spec.validate();
  if (size < 1) throw std::invalid_argument("dataset size must be >= 1");
  const int n_objects = static_cast<int>(spec.object_count());
  Dataset out;
  out.pairs.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    int obj = rng.uniform_index(n_objects);
    Message m(static_cast<std::size_t>(spec.message_length));
    for (int l = 0; l < spec.message_length; ++l) {
      m[static_cast<std::size_t>(l)] = rng.uniform_index(spec.vocab_size);
    }
    out.pairs.emplace_back(obj, std::move(m));
  }
  return out;
}

Dataset mix_degenerate(const SpaceSpec& spec, const Dataset& dataset,
                       const Language& degenerate_lang, double fraction, Rng& rng) {
  if (dataset.empty()) throw std::invalid_argument("mix_degenerate: dataset is empty");
  if (fraction <= 0.0 || fraction > 1.0) {
    throw std::invalid_argument("mix_degenerate: fraction must be in (0, 1]");
  }
  degenerate_lang.validate(spec);
  const int n_objects = static_cast<int>(spec.object_count());
  Dataset out = dataset;
  std::size_t degenerate_count = 0;
  while (static_cast<double>(degenerate_count) <
         fraction * static_cast<double>(out.pairs.size())) {
    int obj = rng.uniform_index(n_objects);
    out.pairs.emplace_back(obj, degenerate_lang.at(obj));
    ++degenerate_count;
  }
  return out;
}

int message_type_count(const Language& lang) {
  std::set<Message> distinct(lang.messages.begin(), lang.messages.end());
  return static_cast<int>(distinct.size());
}

}  // namespace nil
