#pragma once

#include <vector>

#include "nil/objectspace.hpp"

namespace nil {

struct Language;
struct Dataset;

enum class CorrelationKind { spearman, pearson };

// General Levenshtein edit distance (insert/delete/substitute, unit costs).
int message_distance(const Message& a, const Message& b);

// Pearson product-moment correlation. Throws on constant input (undefined).
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Spearman rank correlation with average ranks for ties. Throws on constant
// input.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

double correlation(const std::vector<double>& x, const std::vector<double>& y,
                   CorrelationKind kind);

// Topological similarity: correlation between pairwise object distances
// (negative cosine) and pairwise message distances (Levenshtein) taken over
// all unordered object pairs including i == j. Constant distance vectors
// (e.g. a degenerate language) score 0 by definition, so unstructured
// languages never rank above structured ones.
double topological_similarity(const ObjectSpace& space, const Language& lang,
                              CorrelationKind kind = CorrelationKind::spearman);

// Same computation over all unordered pairs of dataset entries; repeated
// objects are kept as distinct entries.
double topsim_of_dataset(const ObjectSpace& space, const Dataset& data,
                         CorrelationKind kind = CorrelationKind::spearman);

}  // namespace nil
