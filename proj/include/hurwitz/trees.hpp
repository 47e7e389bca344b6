#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

enum class Color { black, white };

struct TreeVertex {
  Color color;
  int parent = -1;
  std::vector<int> children;  // clockwise plane order

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

/// Rooted plane tree with 2-coloured vertices. Vertex 0 is the root.
/// Planted m-Eulerian trees are rooted at a black leaf; pseudo-Eulerian
/// trees at a white leaf.
class PlaneTree {
 public:
  explicit PlaneTree(Color root_color);

  int add_child(int parent, Color color);

  int root() const { return 0; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const TreeVertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }

  int degree(int v) const;
  bool is_leaf(int v) const { return degree(v) == 1; }
  int inner_degree(int v) const;

  /// Canonical bracket encoding of the planted plane structure; equal
  /// encodings mean isomorphic planted plane trees.
  std::string encode() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<TreeVertex> vertices_;
};

struct TreeStats {
  int inner_black = 0;
  int inner_white = 0;
  int black_leaves = 0;
  int white_leaves = 0;
  int inner_degree_two_black = 0;
  std::map<int, int> white_classes;  // i -> number of white vertices of degree m*i
};

TreeStats tree_stats(const PlaneTree& t, int m);

enum class TreeKind { planted, pseudo };

/// Checks the m-Eulerian vertex conditions. Returns a description of the
/// first violation, or nullopt. For pseudo trees the root-side black vertex
/// is exempt from the white-neighbour count and the leaf surplus is 0
/// instead of m.
std::optional<std::string> check_tree(const PlaneTree& t, int m, TreeKind kind);

struct TreeBudget {
  int max_n = 4;
  int max_m = 3;
};

/// All planted m-Eulerian plane trees of type alpha, each exactly once.
std::vector<PlaneTree> enumerate_planted(const Partition& alpha, int m, const TreeBudget& budget = {});

/// All pseudo-Eulerian trees with n inner black vertices and white degree
/// classes alpha, generated by the root-first decomposition.
std::vector<PlaneTree> enumerate_pseudo(const Partition& alpha, int m, const TreeBudget& budget = {});

/// The m-1 pseudo-Eulerian trees obtained from a planted tree by replacing
/// the root leaf with an inner black vertex carrying m-1 white leaves.
std::vector<PlaneTree> pseudo_from_planted(const PlaneTree& planted, int m);

struct LeafRef {
  int vertex;
  Color color;
  friend bool operator==(const LeafRef&, const LeafRef&) = default;
};

/// Leaves in clockwise contour order starting at the root.
std::vector<LeafRef> contour_sequence(const PlaneTree& t);

enum class Orientation { cw, ccw };

const char* orientation_name(Orientation o);
std::optional<Orientation> parse_orientation(std::string_view name);

struct LeafMatching {
  std::vector<std::pair<int, int>> pairs;  // (white leaf, black leaf)
  std::vector<int> unmatched;              // black leaves, in sequence order
};

/// Non-crossing matching of white to black leaves around the cyclic
/// sequence: repeatedly remove a white leaf followed (in the chosen
/// orientation) by a black leaf.
LeafMatching match_leaves(std::span<const LeafRef> seq, Orientation orientation);

bool is_balanced(const PlaneTree& planted, Orientation orientation);

std::uint64_t count_balanced(const Partition& alpha, int m, Orientation orientation, const TreeBudget& budget = {});

struct PseudoProfile {
  Partition alpha;
  int black_leaves;
  friend bool operator==(const PseudoProfile&, const PseudoProfile&) = default;
  friend auto operator<=>(const PseudoProfile&, const PseudoProfile&) = default;
};

/// Pseudo-Eulerian tree counts with n inner black vertices, keyed by white
/// degree profile and black-leaf count.
std::map<PseudoProfile, std::uint64_t> count_pseudo(int n, int m, const TreeBudget& budget = {});

}  // namespace hurwitz
