#include "xkm/id3.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace xkm {

namespace {

double entropy_of(const std::map<int, long>& counts, long total) {
  double h = 0.0;
  for (auto& [label, cnt] : counts) {
    if (cnt == 0) continue;
    double p = static_cast<double>(cnt) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return h;
}

double entropy_of(const DataMatrix&, const Labeling& labels, const std::vector<int>& members) {
  std::map<int, long> counts;
  for (int p : members) ++counts[labels[p]];
  return entropy_of(counts, static_cast<long>(members.size()));
}

struct OpenLeaf {
  TreeNode* node;
  std::vector<int> members;
  double entropy;
  long created;
  bool splittable;
};

struct BestSplit {
  int feature = -1;
  double threshold = 0.0;
  double gain = -1.0;
};

BestSplit find_split(const DataMatrix& x, const Labeling& labels,
                     const std::vector<int>& members, double parent_entropy) {
  BestSplit best;
  const long n = static_cast<long>(members.size());
  std::vector<std::pair<double, int>> vals(members.size());
  for (int i = 0; i < x.cols; ++i) {
    for (size_t j = 0; j < members.size(); ++j)
      vals[j] = {x.at(members[j], i), labels[members[j]]};
    std::sort(vals.begin(), vals.end());
    std::map<int, long> left_counts, right_counts;
    for (auto& [v, y] : vals) ++right_counts[y];
    long left_n = 0;
    for (size_t j = 0; j + 1 < vals.size(); ++j) {
      ++left_counts[vals[j].second];
      --right_counts[vals[j].second];
      ++left_n;
      if (vals[j].first == vals[j + 1].first) continue;
      double theta = 0.5 * (vals[j].first + vals[j + 1].first);
      double h_left = entropy_of(left_counts, left_n);
      double h_right = entropy_of(right_counts, n - left_n);
      double gain = parent_entropy - (static_cast<double>(left_n) / n) * h_left -
                    (static_cast<double>(n - left_n) / n) * h_right;
      if (gain > best.gain + 1e-15) {
        best.feature = i;
        best.threshold = theta;
        best.gain = gain;
      }
    }
  }
  return best;
}

int majority_label(const Labeling& labels, const std::vector<int>& members) {
  std::map<int, long> counts;
  for (int p : members) ++counts[labels[p]];
  int best = -1;
  long best_count = -1;
  for (auto& [label, cnt] : counts) {
    if (cnt > best_count) {  // map iterates labels ascending, so ties keep the lowest
      best = label;
      best_count = cnt;
    }
  }
  return best;
}

}  // namespace

ThresholdTree id3_fit(const DataMatrix& x, const Labeling& labels, int leaf_budget,
                      Objective objective) {
  validate_matrix(x);
  if (static_cast<int>(labels.size()) != x.rows)
    throw err::dim_mismatch(static_cast<long>(labels.size()), x.rows);
  if (leaf_budget < 1) throw err::empty_index_set("leaf budget");

  ThresholdTree tree;
  tree.objective = objective;
  tree.root = std::make_unique<TreeNode>();

  std::vector<int> all(static_cast<size_t>(x.rows));
  for (int p = 0; p < x.rows; ++p) all[p] = p;

  std::vector<OpenLeaf> open;
  long created = 0;
  double root_entropy = entropy_of(x, labels, all);
  open.push_back({tree.root.get(), std::move(all), root_entropy, created++, root_entropy > 0.0});
  int leaves = 1;

  while (leaves < leaf_budget) {
    // Next leaf to split: largest entropy * size, earliest created on ties.
    int pick = -1;
    double pick_score = 0.0;
    for (int i = 0; i < static_cast<int>(open.size()); ++i) {
      if (!open[i].splittable) continue;
      double score = open[i].entropy * static_cast<double>(open[i].members.size());
      bool better = pick < 0 || score > pick_score + 1e-15 ||
                    (score >= pick_score - 1e-15 && open[i].created < open[pick].created);
      if (better) {
        pick = i;
        pick_score = score;
      }
    }
    if (pick < 0) break;  // every leaf is pure or constant

    auto split = find_split(x, labels, open[pick].members, open[pick].entropy);
    if (split.feature < 0) {
      open[pick].splittable = false;  // all feature values identical
      continue;
    }
    TreeNode* node = open[pick].node;
    node->feature = split.feature;
    node->threshold = split.threshold;
    node->left = std::make_unique<TreeNode>();
    node->right = std::make_unique<TreeNode>();

    std::vector<int> left_members, right_members;
    for (int p : open[pick].members)
      (x.at(p, split.feature) <= split.threshold ? left_members : right_members).push_back(p);

    OpenLeaf right{node->right.get(), std::move(right_members), 0.0, created + 1, true};
    OpenLeaf left{node->left.get(), std::move(left_members), 0.0, created, true};
    created += 2;
    left.entropy = entropy_of(x, labels, left.members);
    right.entropy = entropy_of(x, labels, right.members);
    left.splittable = left.entropy > 0.0;
    right.splittable = right.entropy > 0.0;
    open[pick] = std::move(left);
    open.push_back(std::move(right));
    ++leaves;
  }

  for (auto& leaf : open)
    if (leaf.node->is_leaf()) leaf.node->leaf_label = majority_label(labels, leaf.members);
  tree.k = tree.leaf_count();
  return tree;
}

}  // namespace xkm
