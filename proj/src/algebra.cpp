#include "stralg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "stralg/error.hpp"

namespace stralg::algebra {

std::optional<VertexIdx> Presentation::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<VertexIdx>(i);
  return std::nullopt;
}

std::optional<ArrowIdx> Presentation::find_arrow(std::string_view id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<ArrowIdx>(i);
  return std::nullopt;
}

std::string Presentation::path_string(const Path& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += p[i] < arrows.size() ? arrows[p[i]].id : "?";
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

int parse_sign(const std::string& tok, std::size_t line) {
  if (tok == "+1" || tok == "1") return 1;
  if (tok == "-1") return -1;
  fail_at(line, "sign must be +1 or -1, got '" + tok + "'");
}

bool contains_subpath(const Path& hay, const Path& needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::vector<std::optional<SignPair>> declared;
  std::size_t sign_lines = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 2) fail_at(lineno, "expected 'vertex <id>'");
      if (p.find_vertex(tok[1])) fail_at(lineno, "duplicate vertex '" + tok[1] + "'");
      p.vertices.push_back(tok[1]);
    } else if (kw == "arrow") {
      if (tok.size() != 4) fail_at(lineno, "expected 'arrow <id> <src> <dst>'");
      if (p.find_arrow(tok[1])) fail_at(lineno, "duplicate arrow '" + tok[1] + "'");
      auto s = p.find_vertex(tok[2]);
      auto t = p.find_vertex(tok[3]);
      if (!s) fail_at(lineno, "unknown vertex '" + tok[2] + "'");
      if (!t) fail_at(lineno, "unknown vertex '" + tok[3] + "'");
      p.arrows.push_back({tok[1], *s, *t});
      declared.emplace_back();
    } else if (kw == "relation") {
      if (tok.size() < 3) fail_at(lineno, "a relation needs at least two arrows");
      Path path;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto a = p.find_arrow(tok[i]);
        if (!a) fail_at(lineno, "unknown arrow '" + tok[i] + "'");
        if (!path.empty() && p.arrows[path.back()].target != p.arrows[*a].source)
          fail_at(lineno, "relation is not a composable path: target of '" +
                              p.arrows[path.back()].id + "' is not the source of '" + tok[i] + "'");
        path.push_back(*a);
      }
      p.relations.push_back(std::move(path));
    } else if (kw == "sign") {
      if (tok.size() != 4) fail_at(lineno, "expected 'sign <arrow> <+1|-1> <+1|-1>'");
      auto a = p.find_arrow(tok[1]);
      if (!a) fail_at(lineno, "unknown arrow '" + tok[1] + "'");
      if (declared[*a]) fail_at(lineno, "duplicate sign for arrow '" + tok[1] + "'");
      declared[*a] = SignPair{parse_sign(tok[2], lineno), parse_sign(tok[3], lineno)};
      ++sign_lines;
    } else {
      fail_at(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (sign_lines > 0) {
    SignMaps s;
    for (std::size_t i = 0; i < declared.size(); ++i) {
      if (!declared[i]) throw InputError("signs must be declared for all arrows or none; missing '" + p.arrows[i].id + "'");
      s.push_back(*declared[i]);
    }
    p.signs = std::move(s);
  }
  normalize_relations(p);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  for (const auto& v : p.vertices) out << "vertex " << v << '\n';
  for (const auto& a : p.arrows)
    out << "arrow " << a.id << ' ' << p.vertices[a.source] << ' ' << p.vertices[a.target] << '\n';
  for (const auto& r : p.relations) out << "relation " << p.path_string(r) << '\n';
  if (p.signs)
    for (std::size_t i = 0; i < p.arrows.size(); ++i)
      out << "sign " << p.arrows[i].id << ' ' << sign_str((*p.signs)[i].sigma) << ' '
          << sign_str((*p.signs)[i].eps) << '\n';
  return out.str();
}

void normalize_relations(Presentation& p) {
  auto& rel = p.relations;
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  std::vector<Path> kept;
  for (const auto& r : rel) {
    bool minimal = std::none_of(rel.begin(), rel.end(), [&](const Path& o) {
      return o != r && contains_subpath(r, o);
    });
    if (minimal) kept.push_back(r);
  }
  rel = std::move(kept);
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

// Relation-free path extension graph. A node is the longest suffix of the
// path read so far that is a proper prefix of a relation, or else its last
// arrow. The graph is acyclic iff relation-free paths have bounded length.
struct ExtensionGraph {
  std::vector<Path> nodes;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::size_t> starts;
};

ExtensionGraph extension_graph(const Presentation& p) {
  std::set<Path> relset(p.relations.begin(), p.relations.end());
  std::map<Path, std::size_t> index;
  ExtensionGraph g;
  auto add = [&](const Path& x) {
    auto [it, fresh] = index.emplace(x, g.nodes.size());
    if (fresh) g.nodes.push_back(x);
    return it->second;
  };
  for (ArrowIdx a = 0; a < p.arrows.size(); ++a) g.starts.push_back(add(Path{a}));
  for (const auto& r : p.relations)
    for (std::size_t k = 2; k < r.size(); ++k) add(Path(r.begin(), r.begin() + k));
  g.succ.resize(g.nodes.size());
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const Path x = g.nodes[n];
    for (ArrowIdx c = 0; c < p.arrows.size(); ++c) {
      if (p.arrows[x.back()].target != p.arrows[c].source) continue;
      Path xc = x;
      xc.push_back(c);
      bool forbidden = false;
      for (std::size_t k = 0; k + 1 < xc.size() && !forbidden; ++k)
        forbidden = relset.count(Path(xc.begin() + k, xc.end())) != 0;
      if (forbidden) continue;
      for (std::size_t k = 0; k < xc.size(); ++k) {
        auto it = index.find(Path(xc.begin() + k, xc.end()));
        if (it != index.end()) {
          g.succ[n].push_back(it->second);
          break;
        }
      }
    }
  }
  return g;
}

bool relation_len2(const std::set<Path>& rel, ArrowIdx a, ArrowIdx b) {
  return rel.count(Path{a, b}) != 0;
}

}  // namespace

ValidationReport validate_string_algebra(const Presentation& p) {
  ValidationReport rep;
  auto& viol = rep.violations;
  const auto& arrows = p.arrows;

  for (const auto& r : p.relations) {
    bool ok = r.size() >= 2;
    for (std::size_t i = 0; ok && i < r.size(); ++i) ok = r[i] < arrows.size();
    for (std::size_t i = 0; ok && i + 1 < r.size(); ++i) ok = arrows[r[i]].target == arrows[r[i + 1]].source;
    if (!ok) viol.push_back({"REL", "relation '" + p.path_string(r) + "' is not a composable path of length >= 2"});
  }
  if (!viol.empty()) {
    std::sort(viol.begin(), viol.end());
    return rep;
  }

  for (VertexIdx v = 0; v < p.vertices.size(); ++v) {
    std::size_t out = 0, in = 0;
    for (const auto& a : arrows) {
      out += a.source == v;
      in += a.target == v;
    }
    if (out > 2) viol.push_back({"I", "vertex " + p.vertices[v] + " has " + std::to_string(out) + " outgoing arrows"});
    if (in > 2) viol.push_back({"I", "vertex " + p.vertices[v] + " has " + std::to_string(in) + " incoming arrows"});
  }

  std::set<Path> relset(p.relations.begin(), p.relations.end());
  auto list_ids = [&](std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
    return s;
  };
  for (ArrowIdx a = 0; a < arrows.size(); ++a) {
    std::vector<std::string> next_ok, next_rel, prev_ok, prev_rel;
    for (ArrowIdx b = 0; b < arrows.size(); ++b) {
      if (arrows[a].target == arrows[b].source)
        (relation_len2(relset, a, b) ? next_rel : next_ok).push_back(arrows[b].id);
      if (arrows[b].target == arrows[a].source)
        (relation_len2(relset, b, a) ? prev_rel : prev_ok).push_back(arrows[b].id);
    }
    const std::string& id = arrows[a].id;
    if (next_ok.size() > 1) viol.push_back({"II", "arrow " + id + " has several allowed successors: " + list_ids(next_ok)});
    if (prev_ok.size() > 1) viol.push_back({"II", "arrow " + id + " has several allowed predecessors: " + list_ids(prev_ok)});
    if (next_rel.size() > 1) viol.push_back({"IIa", "arrow " + id + " has several forbidden successors: " + list_ids(next_rel)});
    if (prev_rel.size() > 1) viol.push_back({"IIb", "arrow " + id + " has several forbidden predecessors: " + list_ids(prev_rel)});
  }

  ExtensionGraph g = extension_graph(p);
  const std::size_t n = g.nodes.size();
  // state: 0 unvisited, 1 on stack, 2 done
  std::vector<int> state(n, 0);
  std::vector<std::size_t> longest(n, 0);
  bool cyclic = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    state[u] = 1;
    for (auto w : g.succ[u]) {
      if (state[w] == 1) cyclic = true;
      if (state[w] == 0) dfs(w);
      longest[u] = std::max(longest[u], longest[w] + 1);
    }
    state[u] = 2;
  };
  for (auto s : g.starts)
    if (state[s] == 0) dfs(s);
  if (cyclic) {
    // Arrows whose node lies on a cycle; independent of declaration order.
    std::set<std::string> on_cycle;
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> q(g.succ[u].begin(), g.succ[u].end());
      while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        if (seen[x]) continue;
        seen[x] = true;
        for (auto y : g.succ[x]) q.push_back(y);
      }
      if (seen[u]) on_cycle.insert(arrows[g.nodes[u].back()].id);
    }
    viol.push_back({"III", "relation-free paths are unbounded; cycle through " +
                               list_ids({on_cycle.begin(), on_cycle.end()})});
  } else {
    std::size_t best = 0;
    for (auto s : g.starts) best = std::max(best, longest[s] + 1);
    rep.admissibility_bound = best;
  }

  std::sort(viol.begin(), viol.end());
  rep.is_string_algebra = !rep.has("I") && !rep.has("II") && !rep.has("III") && !rep.has("REL");
  bool all_len2 = std::all_of(p.relations.begin(), p.relations.end(), [](const Path& r) { return r.size() == 2; });
  rep.is_gentle = rep.is_string_algebra && all_len2 && !rep.has("IIa") && !rep.has("IIb");
  return rep;
}

namespace {

// A constraint "unknown x = -unknown y"; unknown 2a is ς(a), 2a+1 is ε(a).
struct Constraint {
  std::size_t x, y;
  char cond;
};

std::vector<Constraint> sign_constraints(const Presentation& p) {
  std::set<Path> relset(p.relations.begin(), p.relations.end());
  std::vector<Constraint> out;
  const auto& ar = p.arrows;
  for (ArrowIdx a = 0; a < ar.size(); ++a)
    for (ArrowIdx b = 0; b < ar.size(); ++b) {
      if (a < b && ar[a].source == ar[b].source) out.push_back({2 * a, 2 * b, 'a'});
      if (a < b && ar[a].target == ar[b].target) out.push_back({2 * a + 1, 2 * b + 1, 'b'});
      if (ar[a].target == ar[b].source && !relation_len2(relset, a, b)) out.push_back({2 * a + 1, 2 * b, 'c'});
    }
  return out;
}

std::string unknown_name(const Presentation& p, std::size_t u) {
  return std::string(u % 2 == 0 ? "sigma(" : "eps(") + p.arrows[u / 2].id + ")";
}

std::string describe(const Presentation& p, const Constraint& c) {
  return "(" + std::string(1, c.cond) + ") " + unknown_name(p, c.x) + " = -" + unknown_name(p, c.y);
}

int value_of(const SignMaps& s, std::size_t u) { return u % 2 == 0 ? s[u / 2].sigma : s[u / 2].eps; }

}  // namespace

std::optional<std::string> check_sign_conditions(const Presentation& p, const SignMaps& s) {
  if (s.size() != p.arrows.size()) return "sign map size does not match the arrow count";
  for (const auto& c : sign_constraints(p))
    if (value_of(s, c.x) != -value_of(s, c.y)) return describe(p, c) + " is violated";
  return std::nullopt;
}

SignMaps solve_sign_maps(const Presentation& p) {
  if (p.signs) {
    if (auto bad = check_sign_conditions(p, *p.signs)) throw InputError("declared signs rejected: " + *bad);
    return *p.signs;
  }
  const std::size_t n = 2 * p.arrows.size();
  auto cons = sign_constraints(p);

  // Parity union-find: par[u] is the parity of u relative to its parent.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> par(n, 0);
  std::function<std::pair<std::size_t, int>(std::size_t)> find = [&](std::size_t u) -> std::pair<std::size_t, int> {
    if (parent[u] == u) return {u, 0};
    auto [r, pr] = find(parent[u]);
    parent[u] = r;
    par[u] ^= pr;
    return {r, par[u]};
  };
  for (std::size_t i = 0; i < cons.size(); ++i) {
    auto [rx, px] = find(cons[i].x);
    auto [ry, py] = find(cons[i].y);
    if (rx == ry) {
      if ((px ^ py) == 1) continue;
      // Odd cycle: path between x and y through earlier constraints, closed by this one.
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
      for (std::size_t j = 0; j < i; ++j) {
        adj[cons[j].x].push_back({cons[j].y, j});
        adj[cons[j].y].push_back({cons[j].x, j});
      }
      std::vector<std::optional<std::size_t>> via(n);
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> q{cons[i].x};
      seen[cons[i].x] = true;
      while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto [w, j] : adj[u])
          if (!seen[w]) {
            seen[w] = true;
            via[w] = j;
            q.push_back(w);
          }
      }
      std::string msg = "sign constraints are infeasible; conflicting cycle: " + describe(p, cons[i]);
      for (std::size_t u = cons[i].y; u != cons[i].x;) {
        const auto& c = cons[*via[u]];
        msg += "; " + describe(p, c);
        u = c.x == u ? c.y : c.x;
      }
      throw InputError(msg);
    }
    parent[rx] = ry;
    par[rx] = px ^ py ^ 1;
  }

  // Anchor the least unknown of each component, ordered by (arrow id, ς before ε).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ia = p.arrows[a / 2].id;
    const auto& ib = p.arrows[b / 2].id;
    return ia != ib ? ia < ib : a % 2 < b % 2;
  });
  std::map<std::size_t, int> root_value;
  for (auto u : order) {
    auto [r, pu] = find(u);
    if (!root_value.count(r)) root_value[r] = pu == 0 ? 1 : -1;
  }
  SignMaps s(p.arrows.size());
  for (std::size_t u = 0; u < n; ++u) {
    auto [r, pu] = find(u);
    int v = root_value[r] * (pu ? -1 : 1);
    (u % 2 == 0 ? s[u / 2].sigma : s[u / 2].eps) = v;
  }
  if (auto bad = check_sign_conditions(p, s)) throw Error("sign solver produced invalid output: " + *bad);
  return s;
}

StringAlgebra::StringAlgebra(Presentation p) : p_(std::move(p)) {
  normalize_relations(p_);
  report_ = validate_string_algebra(p_);
  if (!report_.is_string_algebra) {
    std::string msg = "not a string algebra:";
    for (const auto& v : report_.violations)
      if (v.code == "I" || v.code == "II" || v.code == "III" || v.code == "REL") msg += " [" + v.code + "] " + v.locus + ";";
    throw InputError(msg);
  }
  signs_ = solve_sign_maps(p_);
  out_.resize(p_.vertices.size());
  in_.resize(p_.vertices.size());
  for (ArrowIdx a = 0; a < p_.arrows.size(); ++a) {
    out_[p_.arrows[a].source].push_back(a);
    in_[p_.arrows[a].target].push_back(a);
  }
  for (const auto& r : p_.relations) {
    relation_set_.insert(r);
    max_rel_len_ = std::max(max_rel_len_, r.size());
  }
}

}  // namespace stralg::algebra
