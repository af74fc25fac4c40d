#include "nil/topsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nil/language.hpp"

namespace nil {

int message_distance(const Message& a, const Message& b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na == 0) return static_cast<int>(nb);
  if (nb == 0) return static_cast<int>(na);
  std::vector<int> prev(nb + 1), cur(nb + 1);
  for (std::size_t j = 0; j <= nb; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= na; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= nb; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[nb];
}

namespace {

bool is_constant(const std::vector<double>& v) {
  for (double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

// Centered sums with a single square root so a perfectly concordant pair of
// rank vectors scores exactly 1.0.
double pearson_raw(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

void check_sizes(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("correlation: need at least 3 pairs");
  if (is_constant(x) || is_constant(y)) {
    throw std::invalid_argument("correlation undefined for constant input");
  }
}

}  // namespace

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  check_sizes(x, y);
  return pearson_raw(x, y);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  check_sizes(x, y);
  return pearson_raw(average_ranks(x), average_ranks(y));
}

double correlation(const std::vector<double>& x, const std::vector<double>& y,
                   CorrelationKind kind) {
  return kind == CorrelationKind::spearman ? spearman(x, y) : pearson(x, y);
}

namespace {

double distance_correlation(const std::vector<double>& dx, const std::vector<double>& dm,
                            CorrelationKind kind) {
  if (dx.size() < 3) throw std::invalid_argument("topological similarity: insufficient data");
  if (is_constant(dx) || is_constant(dm)) return 0.0;
  return kind == CorrelationKind::spearman ? pearson_raw(average_ranks(dx), average_ranks(dm))
                                           : pearson_raw(dx, dm);
}

}  // namespace

double topological_similarity(const ObjectSpace& space, const Language& lang,
                              CorrelationKind kind) {
  lang.validate(space.spec());
  const int n = space.size();
  if (n < 2) throw std::invalid_argument("topological similarity: need at least 2 objects");
  std::vector<double> dx, dm;
  dx.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  dm.reserve(dx.capacity());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      dx.push_back(space.distance(i, j));
      dm.push_back(static_cast<double>(message_distance(lang.at(i), lang.at(j))));
    }
  }
  return distance_correlation(dx, dm, kind);
}

double topsim_of_dataset(const ObjectSpace& space, const Dataset& data,
                         CorrelationKind kind) {
  const std::size_t n = data.size();
  if (n < 3) throw std::invalid_argument("topological similarity: dataset needs >= 3 pairs");
  std::vector<double> dx, dm;
  dx.reserve(n * (n + 1) / 2);
  dm.reserve(dx.capacity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      dx.push_back(space.distance(data.pairs[i].first, data.pairs[j].first));
      dm.push_back(static_cast<double>(message_distance(data.pairs[i].second, data.pairs[j].second)));
    }
  }
  return distance_correlation(dx, dm, kind);
}

}  // namespace nil
