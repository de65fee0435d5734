#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega4/field.hpp"

namespace omega4 {

struct Arrow {
  std::string name;
  int src = 0;  // vertices are 1..V
  int dst = 0;
};

/// Finite quiver. Arrow order is declaration order and every set-valued
/// answer is emitted in that order.
struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;

  void validate() const;
  bool has_vertex(int v) const { return v >= 1 && v <= num_vertices; }
  int arrow_index(const std::string& name) const;  // -1 if absent

  std::vector<int> in_arrows(int v) const;   // arrows ending at v
  std::vector<int> out_arrows(int v) const;  // arrows starting at v

  bool has_sink_or_source() const;
  bool is_connected() const;

  /// An arrow a: i -> j with out(i) = {a} = in(j), or nullopt.
  std::optional<int> condition_b_arrow() const;
};

/// Composable arrow sequence, first arrow applied first. An empty sequence
/// is the trivial path at `src`.
struct Path {
  int src = 0;
  int dst = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path of_arrows(const Quiver& q, const std::vector<int>& arrow_ids);

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  bool operator==(const Path& o) const {
    return src == o.src && dst == o.dst && arrows == o.arrows;
  }
};

/// a.b traverses a first; requires dst(a) = src(b).
Path compose(const Quiver& q, const Path& a, const Path& b);
Path reverse_path(const Path& p);  // valid in the opposite quiver
Path rotate_path(const Quiver& q, const Path& p, int k);  // cyclic paths only
std::string path_to_string(const Quiver& q, const Path& p);

/// K-linear combination of parallel paths, each of length >= 2.
struct Relation {
  std::vector<std::pair<uint32_t, Path>> terms;  // coefficient, path
  int src = 0;
  int dst = 0;

  int min_length() const;
  void validate(const Quiver& q, const PrimeField& f) const;
};

Relation make_relation(const Quiver& q, const PrimeField& f,
                       std::vector<std::pair<uint32_t, Path>> terms);
Relation reverse_relation(const Relation& r);
std::string relation_to_string(const Quiver& q, const Relation& r);

}  // namespace omega4
