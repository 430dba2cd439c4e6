#include "dwmds/decoration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dwmds {

const Vertex& DecoratedGraph::vertex(Position p) const {
  for (const Vertex& v : vertices) {
    if (v.pos == p) return v;
  }
  throw std::out_of_range("no vertex at " + p.to_string());
}

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::ordinary:
      return "ordinary";
    case ComponentClass::ml_asymmetric:
      return "ml_asymmetric";
    case ComponentClass::ml_symmetric:
      return "ml_symmetric";
  }
  return "?";
}

bool Component::contains(Position p) const {
  return std::find(vertices.begin(), vertices.end(), p) != vertices.end();
}

std::vector<std::pair<int, int>> comparable_pairs(int rank, int row) {
  const int r = rank;
  const int first = row;
  const int last = 2 * r - 1 - row;
  std::vector<std::pair<int, int>> out;
  for (int j = first; j <= r - 3; ++j) out.emplace_back(j, j + 1);
  if (r - 2 >= first) {
    out.emplace_back(r - 2, r - 1);
    out.emplace_back(r - 2, r);
  }
  if (r + 1 <= last) {
    out.emplace_back(r - 1, r + 1);
    out.emplace_back(r, r + 1);
  }
  for (int j = r + 1; j <= last - 1; ++j) out.emplace_back(j, j + 1);
  return out;
}

DecoratedGraph decorate_with_mask(const LittelmannPattern& t, const std::vector<bool>& circled) {
  DecoratedGraph g;
  g.rank = t.rank();
  const auto positions = t.positions();
  g.vertices.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    g.vertices.push_back({positions[k], t.at(positions[k]), static_cast<bool>(circled.at(k))});
  }

  std::vector<std::size_t> parent(positions.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (int i = 1; i <= t.num_rows(); ++i) {
    for (auto [a, b] : comparable_pairs(t.rank(), i)) {
      if (t.at(i, a) != t.at(i, b)) continue;
      const std::size_t u = t.index(i, a);
      const std::size_t v = t.index(i, b);
      g.edges.push_back({u, v});
      parent[find(u)] = find(v);
    }
  }

  std::vector<std::vector<std::size_t>> by_root(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) by_root[find(k)].push_back(k);
  for (auto& comp : by_root) {
    if (!comp.empty()) g.components.push_back(std::move(comp));
  }
  std::sort(g.components.begin(), g.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return g;
}

DecoratedGraph decorate(const LittelmannPattern& t, const HighestWeight& hw) {
  if (auto violation = first_violation(t, hw)) {
    throw std::invalid_argument("pattern " + t.to_string() + " is not theta-admissible: " + violation->describe());
  }
  return decorate_with_mask(t, critical_mask(t, hw));
}

std::vector<Component> classify_components(const DecoratedGraph& g) {
  const int r = g.rank;
  std::vector<Component> out;
  out.reserve(g.components.size());
  for (const auto& members : g.components) {
    Component c;
    c.row = g.vertices[members.front()].pos.row;
    c.value = g.vertices[members.front()].value;
    for (std::size_t k : members) {
      const Vertex& v = g.vertices[k];
      if (v.pos.row != c.row || v.value != c.value) {
        throw std::logic_error("component spans rows or values; graph is malformed");
      }
      c.vertices.push_back(v.pos);
    }
    std::sort(c.vertices.begin(), c.vertices.end());

    auto has_col = [&](int col) { return c.contains({c.row, col}); };
    bool mirrored = false;
    for (const Position& p : c.vertices) {
      if (p.col <= r - 2 && has_col(2 * r - 1 - p.col)) mirrored = true;
      if (p.col <= r - 2) ++c.left_leg;
      if (p.col >= r + 1) ++c.right_leg;
    }

    const int max_col = c.vertices.back().col;
    const int min_col = c.vertices.front().col;
    // Both middle entries minimal in the chain order: take the upper one.
    c.rightmost = {c.row, (max_col == r && has_col(r - 1)) ? r - 1 : max_col};

    if (!mirrored) {
      c.cls = ComponentClass::ordinary;
    } else if (c.left_leg == c.right_leg) {
      c.cls = ComponentClass::ml_symmetric;
      c.length = static_cast<int>(c.vertices.size()) / 2;
      c.upsilon = Position{c.row, max_col - 1};
    } else {
      c.cls = ComponentClass::ml_asymmetric;
      c.shorter_leg_endpoint = c.left_leg < c.right_leg ? Position{c.row, min_col} : Position{c.row, max_col};
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_strict(const DecoratedGraph& g, const std::vector<Component>& components) {
  for (const Vertex& v : g.vertices) {
    if (v.circled && v.value == 0) return false;
  }
  if (components.size() != g.components.size()) {
    throw std::invalid_argument("is_strict: components do not belong to this graph");
  }
  std::vector<bool> in_leaner(g.vertices.size(), false);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!components[c].is_multiple_leaner()) continue;
    for (std::size_t k : g.components[c]) in_leaner[k] = true;
  }
  return std::none_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
    return g.vertices[e.earlier].circled && !in_leaner[e.earlier];
  });
}

bool is_strict(const LittelmannPattern& t, const HighestWeight& hw) {
  const DecoratedGraph g = decorate(t, hw);
  return is_strict(g, classify_components(g));
}

std::string render_ascii(const DecoratedGraph& g) {
  const int r = g.rank;
  auto index_of = [&](Position p) -> std::size_t {
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      if (g.vertices[k].pos == p) return k;
    }
    throw std::out_of_range("no vertex at " + p.to_string());
  };
  auto joined = [&](Position a, Position b) {
    const std::size_t u = index_of(a);
    const std::size_t v = index_of(b);
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
      return (e.earlier == u && e.later == v) || (e.earlier == v && e.later == u);
    });
  };
  auto token = [&](Position p) {
    const Vertex& v = g.vertices[index_of(p)];
    const std::string s = std::to_string(v.value);
    return v.circled ? "(" + s + ")" : s;
  };

  std::string out;
  for (int i = 1; i <= r - 1; ++i) {
    const int last = 2 * r - 1 - i;
    std::string line = "row " + std::to_string(i) + ": ";
    for (int c = i; c <= r - 2; ++c) {
      line += token({i, c});
      if (c < r - 2) line += joined({i, c}, {i, c + 1}) ? " — " : "   ";
    }
    if (r - 2 >= i) {
      const bool top = joined({i, r - 2}, {i, r - 1});
      const bool bottom = joined({i, r - 2}, {i, r});
      line += top && bottom ? " < " : top ? " / " : bottom ? " \\ " : "   ";
    }
    line += "[" + token({i, r - 1}) + "/" + token({i, r}) + "]";
    if (r + 1 <= last) {
      const bool top = joined({i, r - 1}, {i, r + 1});
      const bool bottom = joined({i, r}, {i, r + 1});
      line += top && bottom ? " > " : top ? " \\ " : bottom ? " / " : "   ";
    }
    for (int c = r + 1; c <= last; ++c) {
      line += token({i, c});
      if (c < last) line += joined({i, c}, {i, c + 1}) ? " — " : "   ";
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace dwmds
