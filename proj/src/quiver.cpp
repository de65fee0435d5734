#include "omega4/quiver.hpp"

#include <algorithm>
#include <set>

#include "omega4/error.hpp"

namespace omega4 {

void Quiver::validate() const {
  if (num_vertices < 1)
    throw Error(ErrKind::Validation, "quiver needs at least one vertex");
  std::set<std::string> names;
  for (const Arrow& a : arrows) {
    if (a.name.empty())
      throw Error(ErrKind::Validation, "arrow with empty name");
    if (!names.insert(a.name).second)
      throw Error(ErrKind::Validation, "duplicate arrow name: " + a.name);
    if (!has_vertex(a.src) || !has_vertex(a.dst))
      throw Error(ErrKind::Validation,
                  "arrow " + a.name + " has an endpoint outside 1.." +
                      std::to_string(num_vertices));
  }
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> Quiver::in_arrows(int v) const {
  if (!has_vertex(v))
    throw Error(ErrKind::Validation, "unknown vertex " + std::to_string(v));
  std::vector<int> r;
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].dst == v) r.push_back(static_cast<int>(i));
  return r;
}

std::vector<int> Quiver::out_arrows(int v) const {
  if (!has_vertex(v))
    throw Error(ErrKind::Validation, "unknown vertex " + std::to_string(v));
  std::vector<int> r;
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == v) r.push_back(static_cast<int>(i));
  return r;
}

bool Quiver::has_sink_or_source() const {
  for (int v = 1; v <= num_vertices; ++v)
    if (in_arrows(v).empty() || out_arrows(v).empty()) return true;
  return false;
}

bool Quiver::is_connected() const {
  if (num_vertices == 0) return false;
  std::vector<bool> seen(num_vertices + 1, false);
  std::vector<int> stack = {1};
  seen[1] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& a : arrows) {
      if (a.src == v && !seen[a.dst]) { seen[a.dst] = true; stack.push_back(a.dst); }
      if (a.dst == v && !seen[a.src]) { seen[a.src] = true; stack.push_back(a.src); }
    }
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

std::optional<int> Quiver::condition_b_arrow() const {
  for (size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (out_arrows(a.src).size() == 1 && in_arrows(a.dst).size() == 1)
      return static_cast<int>(i);
  }
  return std::nullopt;
}

Path Path::of_arrows(const Quiver& q, const std::vector<int>& arrow_ids) {
  if (arrow_ids.empty())
    throw Error(ErrKind::Validation, "of_arrows: empty sequence has no source");
  Path p;
  p.src = q.arrows[arrow_ids.front()].src;
  p.dst = p.src;
  for (int id : arrow_ids) {
    if (id < 0 || id >= static_cast<int>(q.arrows.size()))
      throw Error(ErrKind::Validation, "bad arrow index in path");
    if (q.arrows[id].src != p.dst)
      throw Error(ErrKind::Validation,
                  "non-composable path at arrow " + q.arrows[id].name);
    p.arrows.push_back(id);
    p.dst = q.arrows[id].dst;
  }
  return p;
}

Path compose(const Quiver& q, const Path& a, const Path& b) {
  if (a.dst != b.src)
    throw Error(ErrKind::Validation, "compose: endpoints do not match");
  Path p;
  p.src = a.src;
  p.dst = b.dst;
  p.arrows = a.arrows;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  (void)q;
  return p;
}

Path reverse_path(const Path& p) {
  Path r;
  r.src = p.dst;
  r.dst = p.src;
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  return r;
}

Path rotate_path(const Quiver& q, const Path& p, int k) {
  if (p.src != p.dst)
    throw Error(ErrKind::Validation, "rotate: path is not cyclic");
  if (p.is_trivial()) return p;
  int n = p.length();
  k = ((k % n) + n) % n;
  std::vector<int> rot(p.arrows.begin() + k, p.arrows.end());
  rot.insert(rot.end(), p.arrows.begin(), p.arrows.begin() + k);
  return Path::of_arrows(q, rot);
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.src);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

int Relation::min_length() const {
  int m = -1;
  for (const auto& [c, p] : terms)
    if (m < 0 || p.length() < m) m = p.length();
  return m;
}

void Relation::validate(const Quiver& q, const PrimeField& f) const {
  if (terms.empty())
    throw Error(ErrKind::Validation, "relation with no terms");
  for (const auto& [c, p] : terms) {
    if (c == 0 || c >= f.p)
      throw Error(ErrKind::Validation, "relation coefficient not in F_p^x");
    if (p.src != src || p.dst != dst)
      throw Error(ErrKind::Validation,
                  "relation terms are not parallel: " + path_to_string(q, p));
    if (p.length() < 2)
      throw Error(ErrKind::Validation,
                  "relation term shorter than 2 (ideal must lie in rad^2): " +
                      path_to_string(q, p));
    for (int id : p.arrows)
      if (id < 0 || id >= static_cast<int>(q.arrows.size()))
        throw Error(ErrKind::Validation, "relation path uses unknown arrow");
  }
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i].second == terms[j].second)
        throw Error(ErrKind::Validation, "duplicate path in relation");
}

Relation make_relation(const Quiver& q, const PrimeField& f,
                       std::vector<std::pair<uint32_t, Path>> terms) {
  if (terms.empty())
    throw Error(ErrKind::Validation, "relation with no terms");
  Relation r;
  r.terms = std::move(terms);
  r.src = r.terms.front().second.src;
  r.dst = r.terms.front().second.dst;
  for (auto& [c, p] : r.terms) c = f.reduce(c);
  r.validate(q, f);
  return r;
}

Relation reverse_relation(const Relation& r) {
  Relation rev;
  rev.src = r.dst;
  rev.dst = r.src;
  for (const auto& [c, p] : r.terms) rev.terms.emplace_back(c, reverse_path(p));
  return rev;
}

std::string relation_to_string(const Quiver& q, const Relation& r) {
  std::string s;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    const auto& [c, p] = r.terms[i];
    if (i) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += path_to_string(q, p);
  }
  return s;
}

}  // namespace omega4
