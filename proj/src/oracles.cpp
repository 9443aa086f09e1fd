#include "xkm/oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace xkm::oracle {

namespace {

// Center and cost computed from scratch, independent of the cost module.
std::vector<double> own_center(const DataMatrix& x, const std::vector<int>& members,
                               Objective objective) {
  std::vector<double> center(static_cast<size_t>(x.cols), 0.0);
  if (objective == Objective::means) {
    for (int p : members)
      for (int c = 0; c < x.cols; ++c) center[c] += x.at(p, c);
    for (auto& v : center) v /= static_cast<double>(members.size());
  } else {
    std::vector<double> column(members.size());
    for (int c = 0; c < x.cols; ++c) {
      for (size_t i = 0; i < members.size(); ++i) column[i] = x.at(members[i], c);
      std::sort(column.begin(), column.end());
      size_t m = column.size();
      center[c] = m % 2 == 1 ? column[m / 2] : 0.5 * (column[m / 2 - 1] + column[m / 2]);
    }
  }
  return center;
}

double own_cluster_cost(const DataMatrix& x, const std::vector<int>& members,
                        Objective objective) {
  if (members.empty()) return 0.0;
  auto center = own_center(x, members, objective);
  long double acc = 0.0L;
  for (int p : members) {
    for (int c = 0; c < x.cols; ++c) {
      double diff = x.at(p, c) - center[c];
      acc += objective == Objective::means ? diff * diff : std::abs(diff);
    }
  }
  return static_cast<double>(acc);
}

double own_partition_cost(const DataMatrix& x, const Labeling& labels, int k,
                          Objective objective) {
  std::vector<std::vector<int>> clusters(static_cast<size_t>(k));
  for (int p = 0; p < x.rows; ++p) clusters[labels[p]].push_back(p);
  long double acc = 0.0L;
  for (auto& members : clusters) acc += own_cluster_cost(x, members, objective);
  return static_cast<double>(acc);
}

}  // namespace

CutResult naive_best_cut(const DataMatrix& x, Objective objective) {
  const int n = x.rows, d = x.cols;
  if (n < 2) throw err::unsplittable("need at least two points");
  CutResult best;
  bool found = false;
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < d; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      double va = x.at(a, i), vb = x.at(b, i);
      if (va != vb) return va < vb;
      return a < b;
    });
    for (int p = 1; p < n; ++p) {
      if (x.at(order[p - 1], i) == x.at(order[p], i)) continue;
      std::vector<int> left(order.begin(), order.begin() + p);
      std::vector<int> right(order.begin() + p, order.end());
      double cost = own_cluster_cost(x, left, objective) + own_cluster_cost(x, right, objective);
      if (!found || cost_less(cost, best.cost)) {
        found = true;
        best.feature = i;
        best.threshold = x.at(order[p - 1], i);
        best.cost = cost;
        best.left_size = p;
        best.right_size = n - p;
      }
    }
  }
  if (!found) throw err::unsplittable("every feature is constant");
  return best;
}

PartitionResult brute_opt_partition(const DataMatrix& x, int k, Objective objective) {
  const int n = x.rows;
  if (k < 1) throw err::k_too_large(k, n);
  if (k > n) throw err::k_too_large(k, n);

  // Partitions of n into at most k nonempty blocks.
  std::vector<std::vector<long double>> stirling(static_cast<size_t>(n + 1),
                                                 std::vector<long double>(static_cast<size_t>(k + 1), 0.0L));
  stirling[0][0] = 1.0L;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      stirling[i][j] = stirling[i - 1][j - 1] + static_cast<long double>(j) * stirling[i - 1][j];
  long double count = 0.0L;
  for (int j = 1; j <= k; ++j) count += stirling[n][j];
  if (count > 1e6L) throw err::too_large("partition count " + std::to_string(static_cast<double>(count)));

  Labeling current(static_cast<size_t>(n), 0);
  PartitionResult best;
  bool found = false;

  // Depth-first walk over restricted-growth strings.
  std::vector<int> max_label(static_cast<size_t>(n), 0);
  int pos = 1;
  current[0] = 0;
  max_label[0] = 0;
  if (n == 1) {
    best.labels = current;
    best.cost = 0.0;
    return best;
  }
  std::vector<int> choice(static_cast<size_t>(n), -1);
  while (pos >= 1) {
    if (pos == n) {
      double cost = own_partition_cost(x, current, max_label[n - 1] + 1, objective);
      if (!found || cost_less(cost, best.cost)) {
        found = true;
        best.labels = current;
        best.cost = cost;
      }
      --pos;
      continue;
    }
    int limit = std::min(max_label[pos - 1] + 1, k - 1);
    if (choice[pos] >= limit) {
      choice[pos] = -1;
      --pos;
      continue;
    }
    ++choice[pos];
    current[pos] = choice[pos];
    max_label[pos] = std::max(max_label[pos - 1], choice[pos]);
    ++pos;
  }
  best.cost = found ? best.cost : 0.0;
  return best;
}

namespace {

struct TreeMemoEntry {
  double cost;
  std::unique_ptr<TreeNode> tree;
};

struct TreeSearch {
  const DataMatrix& x;
  Objective objective;
  std::map<std::pair<unsigned, int>, TreeMemoEntry> memo;

  const TreeMemoEntry& solve(unsigned mask, int k) {
    auto key = std::make_pair(mask, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<int> members;
    for (int p = 0; p < x.rows; ++p)
      if (mask & (1u << p)) members.push_back(p);

    TreeMemoEntry entry;
    if (k == 1) {
      entry.cost = own_cluster_cost(x, members, objective);
      entry.tree = std::make_unique<TreeNode>();
      entry.tree->leaf_label = 0;  // relabeled at the end
      return memo.emplace(key, std::move(entry)).first->second;
    }

    bool found = false;
    for (int i = 0; i < x.cols; ++i) {
      std::vector<double> vals;
      for (int p : members) vals.push_back(x.at(p, i));
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (size_t vi = 0; vi + 1 < vals.size(); ++vi) {
        double theta = vals[vi];
        unsigned left_mask = 0, right_mask = 0;
        int left_n = 0, right_n = 0;
        for (int p : members) {
          if (x.at(p, i) <= theta) {
            left_mask |= 1u << p;
            ++left_n;
          } else {
            right_mask |= 1u << p;
            ++right_n;
          }
        }
        for (int k1 = 1; k1 < k; ++k1) {
          int k2 = k - k1;
          if (k1 > left_n || k2 > right_n) continue;
          const auto& l = solve(left_mask, k1);
          double partial = l.cost;
          const auto& r = solve(right_mask, k2);
          double cost = partial + r.cost;
          if (!found || cost_less(cost, entry.cost)) {
            found = true;
            entry.cost = cost;
            entry.tree = std::make_unique<TreeNode>();
            entry.tree->feature = i;
            entry.tree->threshold = theta;
            entry.tree->left = clone_tree(memo.at({left_mask, k1}).tree.get());
            entry.tree->right = clone_tree(memo.at({right_mask, k2}).tree.get());
          }
        }
      }
    }
    if (!found) throw err::unsplittable("not enough distinct points for k leaves");
    return memo.emplace(key, std::move(entry)).first->second;
  }
};

void relabel_leaves(TreeNode* node, int& next) {
  if (node->is_leaf()) {
    node->leaf_label = next++;
    return;
  }
  relabel_leaves(node->left.get(), next);
  relabel_leaves(node->right.get(), next);
}

}  // namespace

TreeSearchResult brute_best_tree(const DataMatrix& x, int k, Objective objective) {
  if (x.rows > 10 || k > 3 || x.cols > 3) throw err::too_large("tree search guard: n<=10, k<=3, d<=3");
  if (k < 1 || k > x.rows) throw err::k_too_large(k, x.rows);

  TreeSearch search{x, objective, {}};
  unsigned full = x.rows == 32 ? ~0u : (1u << x.rows) - 1u;
  const auto& entry = search.solve(full, k);

  TreeSearchResult out;
  out.cost = entry.cost;
  out.tree = ThresholdTree(objective, k, clone_tree(entry.tree.get()));
  int next = 0;
  relabel_leaves(out.tree.root.get(), next);
  return out;
}

bool verify_matching_lemma(const DataMatrix& x, const Labeling& two_clustering, int coordinate,
                           Objective objective) {
  const int n = x.rows;
  if (n > 40) throw err::too_large("matching check guard: n <= 40");
  if (static_cast<int>(two_clustering.size()) != n)
    throw err::dim_mismatch(static_cast<long>(two_clustering.size()), n);

  std::vector<int> cluster0, cluster1;
  for (int p = 0; p < n; ++p) (two_clustering[p] == 0 ? cluster0 : cluster1).push_back(p);
  if (cluster0.empty() || cluster1.empty()) throw err::empty_cluster(cluster0.empty() ? 0 : 1);

  // t: fewest membership changes any threshold cut needs, over all features.
  long t = -1;
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < x.cols; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      double va = x.at(a, i), vb = x.at(b, i);
      if (va != vb) return va < vb;
      return a < b;
    });
    long c1 = static_cast<long>(cluster0.size());
    long prefix_c1 = 0;
    for (int p = 1; p < n; ++p) {
      if (two_clustering[order[p - 1]] == 0) ++prefix_c1;
      if (x.at(order[p - 1], i) == x.at(order[p], i)) continue;
      long as_cluster0 = (p - prefix_c1) + (c1 - prefix_c1);
      long as_cluster1 = (n - p) - (c1 - prefix_c1) + prefix_c1;
      long changes = std::min(as_cluster0, as_cluster1);
      if (t < 0 || changes < t) t = changes;
    }
  }
  if (t <= 0) return true;  // some cut reproduces the clustering exactly

  // Orient: the cluster with the lower center in this coordinate supplies
  // the t highest points; the other supplies partners at or below them.
  auto center0 = own_center(x, cluster0, objective);
  auto center1 = own_center(x, cluster1, objective);
  const std::vector<int>& low = center0[coordinate] <= center1[coordinate] ? cluster0 : cluster1;
  const std::vector<int>& high = center0[coordinate] <= center1[coordinate] ? cluster1 : cluster0;

  std::vector<int> top(low);
  std::sort(top.begin(), top.end(), [&](int a, int b) {
    double va = x.at(a, coordinate), vb = x.at(b, coordinate);
    if (va != vb) return va > vb;
    return a < b;
  });
  if (static_cast<long>(top.size()) > t) top.resize(static_cast<size_t>(t));

  // Kuhn's augmenting paths.
  std::vector<std::vector<int>> adj(top.size());
  for (size_t a = 0; a < top.size(); ++a)
    for (size_t b = 0; b < high.size(); ++b)
      if (x.at(high[b], coordinate) <= x.at(top[a], coordinate)) adj[a].push_back(static_cast<int>(b));

  std::vector<int> match_of(high.size(), -1);
  long matched = 0;
  std::vector<char> visited(high.size(), 0);
  auto augment = [&](auto&& self, int a) -> bool {
    for (int b : adj[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (match_of[b] < 0 || self(self, match_of[b])) {
        match_of[b] = a;
        return true;
      }
    }
    return false;
  };
  for (size_t a = 0; a < top.size(); ++a) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, static_cast<int>(a))) ++matched;
  }
  return matched == t;
}

}  // namespace xkm::oracle
