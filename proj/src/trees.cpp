#include "hurwitz/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace hurwitz {

// ---- PlaneTree --------------------------------------------------------------

PlaneTree::PlaneTree(Color root_color) { vertices_.push_back({root_color, -1, {}}); }

int PlaneTree::add_child(int parent, Color color) {
  const int id = vertex_count();
  vertices_.push_back({color, parent, {}});
  vertices_[parent].children.push_back(id);
  return id;
}

int PlaneTree::degree(int v) const {
  const auto& vx = vertices_[v];
  return static_cast<int>(vx.children.size()) + (vx.parent >= 0 ? 1 : 0);
}

int PlaneTree::inner_degree(int v) const {
  const auto& vx = vertices_[v];
  int count = 0;
  if (vx.parent >= 0 && !is_leaf(vx.parent)) ++count;
  for (int c : vx.children)
    if (!is_leaf(c)) ++count;
  return count;
}

std::string PlaneTree::encode() const {
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    out += vertices_[v].color == Color::black ? 'B' : 'W';
    if (vertices_[v].children.empty()) return;
    out += '(';
    for (int c : vertices_[v].children) walk(c);
    out += ')';
  };
  walk(0);
  return out;
}

TreeStats tree_stats(const PlaneTree& t, int m) {
  TreeStats s;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const bool leaf = t.is_leaf(v);
    if (t.vertex(v).color == Color::black) {
      if (leaf) {
        ++s.black_leaves;
      } else {
        ++s.inner_black;
        if (t.inner_degree(v) == 2) ++s.inner_degree_two_black;
      }
    } else {
      if (leaf) {
        ++s.white_leaves;
      } else {
        ++s.inner_white;
        ++s.white_classes[t.degree(v) / m];
      }
    }
  }
  return s;
}

std::optional<std::string> check_tree(const PlaneTree& t, int m, TreeKind kind) {
  auto fail = [](int v, const std::string& what) {
    return std::optional<std::string>("vertex " + std::to_string(v) + ": " + what);
  };
  const Color root_color = kind == TreeKind::planted ? Color::black : Color::white;
  if (t.vertex(0).color != root_color || !t.is_leaf(0)) return fail(0, "root is not a leaf of the expected colour");
  // In a pseudo tree the root's black neighbour is the replacement vertex.
  const int exempt = kind == TreeKind::pseudo ? t.vertex(0).children.front() : -1;

  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& vx = t.vertex(v);
    for (int c : vx.children)
      if (t.vertex(c).color == vx.color) return fail(v, "adjacent vertices share a colour");
    if (t.is_leaf(v)) continue;
    if (vx.color == Color::black) {
      if (t.degree(v) != m) return fail(v, "inner black vertex with degree != m");
      const int inner = t.inner_degree(v);
      if (inner != 1 && inner != 2) return fail(v, "inner black vertex with inner degree not in {1,2}");
    } else {
      if (t.degree(v) % m != 0) return fail(v, "inner white vertex with degree not a multiple of m");
      const int i = t.degree(v) / m;
      int inner_one = 0;
      std::vector<int> neighbours = vx.children;
      if (vx.parent >= 0) neighbours.push_back(vx.parent);
      for (int nb : neighbours)
        if (nb != exempt && !t.is_leaf(nb) && t.inner_degree(nb) == 1) ++inner_one;
      if (inner_one != i - 1) return fail(v, "inner white vertex of class i without exactly i-1 inner-degree-1 neighbours");
    }
  }
  const auto s = tree_stats(t, m);
  const int surplus = kind == TreeKind::planted ? m : 0;
  if (s.black_leaves - s.white_leaves != surplus) return fail(0, "black-leaf surplus is wrong");
  return std::nullopt;
}

// ---- Enumeration ------------------------------------------------------------

namespace {

void require_budget(const Partition& alpha, int m, const TreeBudget& budget) {
  if (m < 2) throw std::invalid_argument("m-Eulerian trees need m >= 2");
  if (alpha.size() < 1) throw std::invalid_argument("empty type");
  if (alpha.size() > budget.max_n || m > budget.max_m)
    throw BudgetExceeded("tree enumeration refused: n = " + std::to_string(alpha.size()) + ", m = " +
                         std::to_string(m) + " exceeds budget n <= " + std::to_string(budget.max_n) +
                         ", m <= " + std::to_string(budget.max_m));
}

// Each open white vertex draws a degree class and fills its m*i - 1 child
// slots with black leaves, inner-degree-1 black vertices (all children white
// leaves), or inner-degree-2 black vertices (one inner white child at a
// chosen slot). Exactly i-1 inner-degree-1 children per white vertex.
class Generator {
 public:
  Generator(int m, std::map<int, int> whites, int deg1, int deg2)
      : m_(m), whites_(std::move(whites)), deg1_(deg1), deg2_(deg2) {}

  std::vector<PlaneTree> run(const PlaneTree& start, std::deque<int> pending) {
    out_.clear();
    expand(start, std::move(pending));
    return std::move(out_);
  }

 private:
  static constexpr int kLeaf = -2;
  static constexpr int kDegreeOne = -1;

  void expand(const PlaneTree& tree, std::deque<int> pending) {
    if (pending.empty()) {
      if (deg1_ == 0 && deg2_ == 0 && std::all_of(whites_.begin(), whites_.end(), [](auto& kv) { return kv.second == 0; }))
        out_.push_back(tree);
      return;
    }
    const int white = pending.front();
    pending.pop_front();
    for (auto& [i, remaining] : whites_) {
      if (remaining == 0) continue;
      --remaining;
      std::vector<int> slots;
      fill(tree, pending, white, i, m_ * i - 1, i - 1, slots);
      ++remaining;
    }
  }

  void fill(const PlaneTree& tree, const std::deque<int>& pending, int white, int i, int slots_left, int deg1_needed,
            std::vector<int>& slots) {
    if (slots_left < deg1_needed) return;
    if (slots_left == 0) {
      PlaneTree next = tree;
      std::deque<int> queue = pending;
      for (int code : slots) {
        const int b = next.add_child(white, Color::black);
        if (code == kLeaf) continue;
        for (int j = 0; j < m_ - 1; ++j) {
          const int w = next.add_child(b, Color::white);
          if (code == j) queue.push_back(w);
        }
      }
      expand(next, std::move(queue));
      return;
    }
    slots.push_back(kLeaf);
    fill(tree, pending, white, i, slots_left - 1, deg1_needed, slots);
    slots.pop_back();
    if (deg1_needed > 0 && deg1_ > 0) {
      --deg1_;
      slots.push_back(kDegreeOne);
      fill(tree, pending, white, i, slots_left - 1, deg1_needed - 1, slots);
      slots.pop_back();
      ++deg1_;
    }
    if (deg2_ > 0) {
      --deg2_;
      for (int j = 0; j < m_ - 1; ++j) {
        slots.push_back(j);
        fill(tree, pending, white, i, slots_left - 1, deg1_needed, slots);
        slots.pop_back();
      }
      ++deg2_;
    }
  }

  int m_;
  std::map<int, int> whites_;
  int deg1_;
  int deg2_;
  std::vector<PlaneTree> out_;
};

Generator generator_for(const Partition& alpha, int m) {
  // Inner black vertices split into n-l of inner degree 1 and l-1 of inner
  // degree 2 (one per non-root white vertex).
  return Generator(m, alpha.multiplicities(), alpha.size() - alpha.length(), alpha.length() - 1);
}

}  // namespace

std::vector<PlaneTree> enumerate_planted(const Partition& alpha, int m, const TreeBudget& budget) {
  require_budget(alpha, m, budget);
  if (c_alpha(alpha, m) <= 0) return {};
  PlaneTree start(Color::black);
  const int white = start.add_child(start.root(), Color::white);
  return generator_for(alpha, m).run(start, {white});
}

std::vector<PlaneTree> enumerate_pseudo(const Partition& alpha, int m, const TreeBudget& budget) {
  require_budget(alpha, m, budget);
  std::vector<PlaneTree> out;
  // Root white leaf, then the replacement black vertex whose m-1 further
  // slots hold one inner white vertex and m-2 white leaves.
  for (int position = 0; position < m - 1; ++position) {
    PlaneTree start(Color::white);
    const int b = start.add_child(start.root(), Color::black);
    int white = -1;
    for (int j = 0; j < m - 1; ++j) {
      const int w = start.add_child(b, Color::white);
      if (j == position) white = w;
    }
    auto trees = generator_for(alpha, m).run(start, {white});
    out.insert(out.end(), std::make_move_iterator(trees.begin()), std::make_move_iterator(trees.end()));
  }
  return out;
}

std::vector<PlaneTree> pseudo_from_planted(const PlaneTree& planted, int m) {
  if (planted.vertex(0).color != Color::black || !planted.is_leaf(0))
    throw std::invalid_argument("pseudo_from_planted: root must be a black leaf");
  std::vector<PlaneTree> out;
  const int top_white = planted.vertex(0).children.front();
  for (int position = 0; position < m - 1; ++position) {
    PlaneTree t(Color::white);
    const int b = t.add_child(t.root(), Color::black);
    std::function<void(int, int)> copy = [&](int src, int dst_parent) {
      const int dst = t.add_child(dst_parent, planted.vertex(src).color);
      for (int c : planted.vertex(src).children) copy(c, dst);
    };
    for (int j = 0; j < m - 1; ++j) {
      if (j == position)
        copy(top_white, b);
      else
        t.add_child(b, Color::white);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ---- Contour and matching ---------------------------------------------------

std::vector<LeafRef> contour_sequence(const PlaneTree& t) {
  std::vector<LeafRef> out;
  std::function<void(int)> walk = [&](int v) {
    if (t.is_leaf(v)) out.push_back({v, t.vertex(v).color});
    for (int c : t.vertex(v).children) walk(c);
  };
  walk(t.root());
  return out;
}

const char* orientation_name(Orientation o) { return o == Orientation::cw ? "cw" : "ccw"; }

std::optional<Orientation> parse_orientation(std::string_view name) {
  if (name == "cw") return Orientation::cw;
  if (name == "ccw") return Orientation::ccw;
  return std::nullopt;
}

LeafMatching match_leaves(std::span<const LeafRef> seq, Orientation orientation) {
  const int size = static_cast<int>(seq.size());
  int whites = 0;
  for (const auto& leaf : seq)
    if (leaf.color == Color::white) ++whites;
  if (size - whites < whites) throw std::invalid_argument("match_leaves: fewer black than white leaves");

  // Positions into seq, in traversal order for the chosen orientation.
  std::vector<int> ring(size);
  for (int k = 0; k < size; ++k) ring[k] = orientation == Orientation::cw ? k : size - 1 - k;

  LeafMatching out;
  std::vector<std::pair<int, int>> chords;
  while (whites > 0) {
    const int len = static_cast<int>(ring.size());
    bool reduced = false;
    for (int k = 0; k < len; ++k) {
      const int a = ring[k];
      const int b = ring[(k + 1) % len];
      if (seq[a].color == Color::white && seq[b].color == Color::black) {
        out.pairs.emplace_back(seq[a].vertex, seq[b].vertex);
        chords.emplace_back(std::min(a, b), std::max(a, b));
        ring.erase(ring.begin() + std::max(k, (k + 1) % len));
        ring.erase(ring.begin() + std::min(k, (k + 1) % len));
        --whites;
        reduced = true;
        break;
      }
    }
    if (!reduced) throw std::logic_error("match_leaves: reduction stuck with white leaves remaining");
  }
  std::sort(ring.begin(), ring.end());
  for (int pos : ring) out.unmatched.push_back(seq[pos].vertex);

  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
        throw std::logic_error("match_leaves: produced a crossing matching");
    }
  return out;
}

bool is_balanced(const PlaneTree& planted, Orientation orientation) {
  const auto seq = contour_sequence(planted);
  const auto matching = match_leaves(seq, orientation);
  return std::find(matching.unmatched.begin(), matching.unmatched.end(), planted.root()) != matching.unmatched.end();
}

std::uint64_t count_balanced(const Partition& alpha, int m, Orientation orientation, const TreeBudget& budget) {
  std::uint64_t count = 0;
  for (const auto& t : enumerate_planted(alpha, m, budget))
    if (is_balanced(t, orientation)) ++count;
  return count;
}

std::map<PseudoProfile, std::uint64_t> count_pseudo(int n, int m, const TreeBudget& budget) {
  if (n < 0) throw std::invalid_argument("count_pseudo: negative n");
  std::map<PseudoProfile, std::uint64_t> table;
  if (n == 0) return table;
  for (const auto& alpha : partitions_of(n))
    for (const auto& t : enumerate_pseudo(alpha, m, budget)) ++table[{alpha, tree_stats(t, m).black_leaves}];
  return table;
}

}  // namespace hurwitz
