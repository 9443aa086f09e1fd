#include "xkm/imm.hpp"

#include <algorithm>

#include "xkm/runtime.hpp"

namespace xkm {

NodeWorkset make_workset(const DataMatrix& x, const Labeling& labels, const CenterSet& c,
                         std::vector<int> points, std::vector<int> centers) {
  if (x.cols != c.dim()) throw err::dim_mismatch(x.cols, c.dim());
  if (centers.empty()) throw err::empty_index_set("workset centers");
  std::vector<char> alive(static_cast<size_t>(c.k()), 0);
  for (int j : centers) alive[j] = 1;
  for (int p : points)
    if (!alive[labels[p]]) throw err::bad_model("workset point whose center is not alive");

  NodeWorkset w;
  w.points = std::move(points);
  w.centers = std::move(centers);
  w.lo.resize(static_cast<size_t>(x.cols));
  w.hi.resize(static_cast<size_t>(x.cols));
  for (int i = 0; i < x.cols; ++i) {
    double lo = c.centers.at(w.centers[0], i), hi = lo;
    for (int j : w.centers) {
      lo = std::min(lo, c.centers.at(j, i));
      hi = std::max(hi, c.centers.at(j, i));
    }
    w.lo[i] = lo;
    w.hi[i] = hi;
  }
  return w;
}

long count_mistakes(const DataMatrix& x, std::span<const int> points, const Labeling& labels,
                    const CenterSet& c, int feature, double threshold) {
  long mistakes = 0;
  for (int p : points) {
    bool point_left = x.at(p, feature) <= threshold;
    bool center_left = c.centers.at(labels[p], feature) <= threshold;
    if (point_left != center_left) ++mistakes;
  }
  return mistakes;
}

namespace {

struct FeatureBest {
  long mistakes;
  double threshold;
};

// One left-to-right sweep over a feature. Candidate thresholds are the
// distinct point and center values inside [lo, hi); the mistake count is
// maintained incrementally as points and centers cross to the left side.
// Each crossing is O(1), so the sweep is O(m + k') after sorting.
std::optional<FeatureBest> sweep_feature(const DataMatrix& x, const Labeling& labels,
                                         const CenterSet& c, int feature,
                                         std::span<const int> sorted_points,
                                         std::span<const int> alive_centers, double lo, double hi,
                                         std::span<long> left_of_label,
                                         std::span<const long> total_of_label,
                                         std::span<char> center_left) {
  if (!(lo < hi)) return std::nullopt;
  for (int j : alive_centers) {
    left_of_label[j] = 0;
    center_left[j] = 0;
  }
  std::vector<std::pair<double, int>> centers_sorted;
  centers_sorted.reserve(alive_centers.size());
  for (int j : alive_centers) centers_sorted.emplace_back(c.centers.at(j, feature), j);
  std::sort(centers_sorted.begin(), centers_sorted.end());

  size_t a = 0, b = 0;
  long mistakes = 0;
  std::optional<FeatureBest> best;
  while (true) {
    bool have_point = a < sorted_points.size();
    bool have_center = b < centers_sorted.size();
    if (!have_point && !have_center) break;
    double v;
    if (have_point && have_center)
      v = std::min(x.at(sorted_points[a], feature), centers_sorted[b].first);
    else if (have_point)
      v = x.at(sorted_points[a], feature);
    else
      v = centers_sorted[b].first;
    if (v >= hi) break;  // no further candidate can be valid

    while (a < sorted_points.size() && x.at(sorted_points[a], feature) == v) {
      int y = labels[sorted_points[a]];
      mistakes += center_left[y] ? -1 : 1;
      ++left_of_label[y];
      ++a;
    }
    while (b < centers_sorted.size() && centers_sorted[b].first == v) {
      int j = centers_sorted[b].second;
      mistakes += (total_of_label[j] - left_of_label[j]) - left_of_label[j];
      center_left[j] = 1;
      ++b;
    }
    if (v >= lo && (!best || mistakes < best->mistakes)) best = FeatureBest{mistakes, v};
  }
  return best;
}

struct TreeBuilder {
  const DataMatrix& x;
  const CenterSet& c;
  const Labeling& labels;
  ImmStats* stats;
  std::vector<long> totals;       // per-label point counts at the current node
  std::vector<int8_t> side_of;    // per-point routing decision at the current split

  std::unique_ptr<TreeNode> build(std::vector<std::vector<int>> by_feature,
                                  std::vector<int> alive, int depth) {
    auto node = std::make_unique<TreeNode>();
    if (alive.size() == 1) {
      node->leaf_label = alive[0];
      if (stats) stats->depth = std::max(stats->depth, depth);
      return node;
    }
    const int d = x.cols;
    std::vector<double> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      double l = c.centers.at(alive[0], i), h = l;
      for (int j : alive) {
        l = std::min(l, c.centers.at(j, i));
        h = std::max(h, c.centers.at(j, i));
      }
      lo[i] = l;
      hi[i] = h;
    }
    for (int j : alive) totals[j] = 0;
    const auto& pts = by_feature[0];
    for (int p : pts) ++totals[labels[p]];

    // Per-feature winners, reduced in feature order so the lowest feature
    // takes ties no matter how the scans were scheduled.
    std::vector<std::optional<FeatureBest>> per_feature(static_cast<size_t>(d));
    if (max_threads() > 1) {
      for_each_index(d, [&](int i) {
        std::vector<long> left_scratch(static_cast<size_t>(c.k()), 0);
        std::vector<char> center_scratch(static_cast<size_t>(c.k()), 0);
        per_feature[i] = sweep_feature(x, labels, c, i, by_feature[i], alive, lo[i], hi[i],
                                       left_scratch, totals, center_scratch);
      });
    } else {
      std::vector<long> left_scratch(static_cast<size_t>(c.k()), 0);
      std::vector<char> center_scratch(static_cast<size_t>(c.k()), 0);
      for (int i = 0; i < d; ++i) {
        per_feature[i] = sweep_feature(x, labels, c, i, by_feature[i], alive, lo[i], hi[i],
                                       left_scratch, totals, center_scratch);
        if (per_feature[i] && per_feature[i]->mistakes == 0) break;  // nothing can beat zero
      }
    }
    int feature = -1;
    FeatureBest best{0, 0.0};
    for (int i = 0; i < d; ++i) {
      if (!per_feature[i]) continue;
      if (feature < 0 || per_feature[i]->mistakes < best.mistakes) {
        feature = i;
        best = *per_feature[i];
      }
    }
    if (feature < 0) throw err::unsplittable("surviving centers identical in every feature");

    node->feature = feature;
    node->threshold = best.threshold;
    node->mistakes = best.mistakes;
    node->surviving_centers = alive;
    node->box_lo = lo;
    node->box_hi = hi;
    if (stats) {
      stats->mistakes_per_node.push_back(best.mistakes);
      stats->total_mistakes += best.mistakes;
    }

    // Route points: mistakes are dropped, everything else follows its side.
    for (int p : pts) {
      bool point_left = x.at(p, feature) <= best.threshold;
      bool center_left = c.centers.at(labels[p], feature) <= best.threshold;
      side_of[p] = point_left == center_left ? (point_left ? 0 : 1) : 2;
    }
    std::vector<std::vector<int>> left_feats(static_cast<size_t>(d)),
        right_feats(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      for (int p : by_feature[i]) {
        if (side_of[p] == 0)
          left_feats[i].push_back(p);
        else if (side_of[p] == 1)
          right_feats[i].push_back(p);
      }
      by_feature[i].clear();
      by_feature[i].shrink_to_fit();
    }
    std::vector<int> left_alive, right_alive;
    for (int j : alive) {
      (c.centers.at(j, feature) <= best.threshold ? left_alive : right_alive).push_back(j);
    }

    node->left = build(std::move(left_feats), std::move(left_alive), depth + 1);
    node->right = build(std::move(right_feats), std::move(right_alive), depth + 1);
    return node;
  }
};

}  // namespace

SplitChoice best_split(const DataMatrix& x, const Labeling& labels, const CenterSet& c,
                       const NodeWorkset& w) {
  if (w.centers.size() < 2) throw err::unsplittable("need at least two surviving centers");
  const int d = x.cols;
  std::vector<long> totals(static_cast<size_t>(c.k()), 0);
  for (int p : w.points) ++totals[labels[p]];

  std::vector<std::optional<FeatureBest>> per_feature(static_cast<size_t>(d));
  std::vector<int> sorted(w.points);
  std::vector<long> left_scratch(static_cast<size_t>(c.k()), 0);
  std::vector<char> center_scratch(static_cast<size_t>(c.k()), 0);
  for (int i = 0; i < d; ++i) {
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      double va = x.at(a, i), vb = x.at(b, i);
      if (va != vb) return va < vb;
      return a < b;
    });
    per_feature[i] = sweep_feature(x, labels, c, i, sorted, w.centers, w.lo[i], w.hi[i],
                                   left_scratch, totals, center_scratch);
  }
  SplitChoice out;
  for (int i = 0; i < d; ++i) {
    if (!per_feature[i]) continue;
    if (out.feature < 0 || per_feature[i]->mistakes < out.mistakes) {
      out.feature = i;
      out.threshold = per_feature[i]->threshold;
      out.mistakes = per_feature[i]->mistakes;
    }
  }
  if (out.feature < 0) throw err::unsplittable("surviving centers identical in every feature");
  return out;
}

ThresholdTree imm_fit(const DataMatrix& x, const CenterSet& c, ImmStats* stats) {
  validate_matrix(x);
  if (x.cols != c.dim()) throw err::dim_mismatch(x.cols, c.dim());
  if (c.k() < 2) throw err::unsplittable("need at least two centers");
  for (int a = 0; a < c.k(); ++a)
    for (int b = a + 1; b < c.k(); ++b) {
      bool same = true;
      for (int i = 0; i < c.dim() && same; ++i)
        same = c.centers.at(a, i) == c.centers.at(b, i);
      if (same) throw err::duplicate_centers(a, b);
    }

  Labeling labels = assign_labels(x, c);
  auto by_feature = argsort_features(x);

  std::vector<int> alive(static_cast<size_t>(c.k()));
  for (int j = 0; j < c.k(); ++j) alive[j] = j;

  if (stats) *stats = ImmStats{};
  TreeBuilder builder{x, c, labels, stats,
                      std::vector<long>(static_cast<size_t>(c.k()), 0),
                      std::vector<int8_t>(static_cast<size_t>(x.rows), 0)};
  ThresholdTree tree(c.objective, c.k(), builder.build(std::move(by_feature), alive, 0));
  tree.validate_clustering_tree();
  return tree;
}

}  // namespace xkm
