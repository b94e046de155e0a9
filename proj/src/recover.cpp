#include "stralg/recover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stralg/error.hpp"

namespace stralg::recover {

using mia::StateId;

namespace {

constexpr words::Letter kZero{0, false};

struct Walker {
  const mia::Mia& m;
  const std::vector<std::pair<StateId, StateId>>& arrows;
  const std::vector<std::vector<std::uint32_t>>& out;  // by source vertex
  const std::vector<algebra::VertexIdx>& target;
  std::size_t cap;
  std::vector<Path>& relations;

  void extend(Path& path, StateId run) {
    if (path.size() > cap) throw CapExceeded("realized arrow paths exceed length " + std::to_string(cap));
    for (auto j : out[target[path.back()]]) {
      path.push_back(j);
      const StateId nxt = arrows[j].first == m.e(run) ? m.next(run, kZero) : mia::kNone;
      if (nxt == mia::kNone)
        relations.push_back(path);
      else
        extend(path, nxt);
      path.pop_back();
    }
  }
};

}  // namespace

RecoveredPresentation recover_presentation(const mia::Mia& m) {
  if (!m.is_binary()) throw InputError("recovery needs an automaton over the binary alphabet");
  if (auto issues = mia::validate_mia(m); !issues.empty())
    throw InputError("invalid automaton: " + issues.front().message);
  RecoveredPresentation out;
  std::map<StateId, algebra::VertexIdx> cls;
  for (auto v : m.initial_states()) {
    if (cls.count(v)) continue;
    const auto k = static_cast<algebra::VertexIdx>(out.vertex_states.size());
    const StateId w = m.initial_inverse(v);
    cls[v] = k;
    cls[w] = k;
    out.vertex_states.emplace_back(v, w);
    out.presentation.vertices.push_back("q" + std::to_string(k));
  }
  std::vector<algebra::VertexIdx> target;
  std::vector<std::vector<std::uint32_t>> by_source(out.vertex_states.size());
  for (auto v : m.initial_states()) {
    const StateId t = m.next(v, kZero);
    if (t == mia::kNone) continue;
    const auto j = static_cast<std::uint32_t>(out.arrow_states.size());
    out.arrow_states.emplace_back(v, m.e(t));
    out.presentation.arrows.push_back({"x" + std::to_string(j), cls.at(v), cls.at(m.e(t))});
    by_source[cls.at(v)].push_back(j);
    target.push_back(cls.at(m.e(t)));
  }
  std::vector<Path> rels;
  Walker walk{m, out.arrow_states, by_source, target, 4 * m.num_states(), rels};
  for (std::uint32_t i = 0; i < out.arrow_states.size(); ++i) {
    Path p{i};
    walk.extend(p, m.next(out.arrow_states[i].first, kZero));
  }
  out.presentation.relations = std::move(rels);
  algebra::normalize_relations(out.presentation);
  return out;
}

namespace {

std::set<Path> mapped_relations(const std::vector<Path>& rels, const std::vector<algebra::ArrowIdx>& amap) {
  std::set<Path> out;
  for (const auto& r : rels) {
    Path q;
    for (auto a : r) q.push_back(amap[a]);
    out.insert(std::move(q));
  }
  return out;
}

struct IsoSearch {
  const Presentation& p1;
  const Presentation& p2;
  std::set<Path> target_rels;
  std::vector<algebra::VertexIdx> vmap;
  std::vector<bool> vused;
  std::vector<algebra::ArrowIdx> amap;
  std::vector<bool> aused;
  static constexpr algebra::VertexIdx kUnset = ~0U;

  bool bind(algebra::VertexIdx a, algebra::VertexIdx b, std::vector<algebra::VertexIdx>& bound) {
    if (vmap[a] != kUnset) return vmap[a] == b;
    if (vused[b]) return false;
    vmap[a] = b;
    vused[b] = true;
    bound.push_back(a);
    return true;
  }

  void unbind(const std::vector<algebra::VertexIdx>& bound) {
    for (auto a : bound) {
      vused[vmap[a]] = false;
      vmap[a] = kUnset;
    }
  }

  bool finish() {
    // Isolated vertices in order.
    std::vector<algebra::VertexIdx> saved = vmap;
    std::vector<bool> saved_used = vused;
    algebra::VertexIdx next = 0;
    for (auto& v : vmap) {
      if (v != kUnset) continue;
      while (vused[next]) ++next;
      v = next;
      vused[next] = true;
    }
    if (mapped_relations(p1.relations, amap) == target_rels) return true;
    vmap = saved;
    vused = saved_used;
    return false;
  }

  bool search(std::size_t i) {
    if (i == p1.arrows.size()) return finish();
    const auto& a = p1.arrows[i];
    for (algebra::ArrowIdx j = 0; j < p2.arrows.size(); ++j) {
      if (aused[j]) continue;
      const auto& b = p2.arrows[j];
      std::vector<algebra::VertexIdx> bound;
      if (bind(a.source, b.source, bound) && bind(a.target, b.target, bound)) {
        amap[i] = j;
        aused[j] = true;
        if (search(i + 1)) return true;
        aused[j] = false;
      }
      unbind(bound);
    }
    return false;
  }
};

std::vector<std::size_t> length_profile(const std::vector<Path>& rels) {
  std::vector<std::size_t> out;
  for (const auto& r : rels) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Isomorphism> presentations_isomorphic(const Presentation& p1, const Presentation& p2) {
  if (p1.vertices.size() > kMaxIsoVertices || p2.vertices.size() > kMaxIsoVertices)
    throw CapExceeded("isomorphism search is limited to " + std::to_string(kMaxIsoVertices) + " vertices");
  Presentation q1 = p1, q2 = p2;
  algebra::normalize_relations(q1);
  algebra::normalize_relations(q2);
  if (q1.vertices.size() != q2.vertices.size() || q1.arrows.size() != q2.arrows.size() ||
      length_profile(q1.relations) != length_profile(q2.relations))
    return std::nullopt;
  IsoSearch s{q1, q2, {}, {}, {}, {}, {}};
  s.target_rels = std::set<Path>(q2.relations.begin(), q2.relations.end());
  s.vmap.assign(q1.vertices.size(), IsoSearch::kUnset);
  s.vused.assign(q2.vertices.size(), false);
  s.amap.assign(q1.arrows.size(), 0);
  s.aused.assign(q2.arrows.size(), false);
  if (!s.search(0)) return std::nullopt;
  return Isomorphism{s.vmap, s.amap};
}

namespace {

bool contains(const Path& big, const Path& small) {
  return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

bool covered(const std::vector<Path>& r1, const std::vector<Path>& r2) {
  return std::all_of(r1.begin(), r1.end(), [&](const Path& p) {
    return std::any_of(r2.begin(), r2.end(), [&](const Path& q) { return contains(p, q); });
  });
}

}  // namespace

bool same_ideal(const std::vector<Path>& r1, const std::vector<Path>& r2) {
  return covered(r1, r2) && covered(r2, r1);
}

std::string format_isomorphism(const Presentation& p1, const Presentation& p2, const Isomorphism& iso) {
  std::ostringstream os;
  for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
    os << "vertex " << p1.vertices[v] << " -> " << p2.vertices[iso.vertex_map[v]] << "\n";
  for (std::size_t a = 0; a < iso.arrow_map.size(); ++a)
    os << "arrow " << p1.arrows[a].id << " -> " << p2.arrows[iso.arrow_map[a]].id << "\n";
  return os.str();
}

}  // namespace stralg::recover
