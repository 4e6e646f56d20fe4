#include "avoid/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace avoid {

namespace {

using Cells = std::vector<VertexMask>;

void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexMask splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const VertexMask cell = cells[x];
        if (popcount(cell) == 1) continue;
        int lo = kMaxVertices + 1;
        int hi = -1;
        std::array<int, kMaxVertices> count{};
        for_each_bit(cell, [&](Vertex v) {
          count[v] = popcount(g.neighbours(v) & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        });
        if (lo == hi) continue;
        Cells pieces;
        for (int c = lo; c <= hi; ++c) {
          VertexMask piece = 0;
          for_each_bit(cell, [&](Vertex v) {
            if (count[v] == c) piece |= bit(v);
          });
          if (piece != 0) pieces.push_back(piece);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct Leaf {
  std::vector<Vertex> order;       // canonical position -> vertex
  std::vector<VertexMask> rows;    // relabelled adjacency, row per position
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Labeller {
 public:
  explicit Labeller(const Graph& g) : g_(g) {}

  void search(Cells cells, std::vector<Vertex>& prefix) {
    refine(g_, cells);
    if (cells.size() == static_cast<std::size_t>(g_.order())) {
      visit_leaf(cells);
      return;
    }
    std::size_t target = 0;
    int smallest = kMaxVertices + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = popcount(cells[i]);
      if (size > 1 && size < smallest) {
        smallest = size;
        target = i;
      }
    }
    std::vector<Vertex> explored;
    for_each_bit(cells[target], [&](Vertex v) {
      if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) return;
      Cells child = cells;
      child[target] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    });
  }

  const Leaf& best() const { return best_; }
  const std::vector<std::vector<Vertex>>& automorphisms() const { return autos_; }

 private:
  Leaf make_leaf(const Cells& cells) const {
    Leaf leaf;
    const int n = g_.order();
    leaf.order.resize(static_cast<std::size_t>(n));
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      leaf.order[p] = std::countr_zero(cells[p]);
      position[leaf.order[p]] = p;
    }
    leaf.rows.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      VertexMask row = 0;
      for_each_bit(g_.neighbours(leaf.order[p]), [&](Vertex w) { row |= bit(position[w]); });
      leaf.rows[p] = row;
    }
    return leaf;
  }

  void record_automorphism(const Leaf& reference, const Leaf& leaf) {
    std::vector<Vertex> gamma(reference.order.size());
    bool identity = true;
    for (std::size_t p = 0; p < gamma.size(); ++p) {
      gamma[reference.order[p]] = leaf.order[p];
      identity = identity && reference.order[p] == leaf.order[p];
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  void visit_leaf(const Cells& cells) {
    Leaf leaf = make_leaf(cells);
    if (!have_leaf_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_leaf_ = true;
      return;
    }
    if (leaf.rows == first_.rows) {
      record_automorphism(first_, leaf);
    } else if (leaf.rows == best_.rows) {
      record_automorphism(best_, leaf);
    } else if (leaf.rows > best_.rows) {
      best_ = std::move(leaf);
    }
  }

  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& prefix) const {
    UnionFind uf(g_.order());
    bool any = false;
    for (const auto& gamma : autos_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex x) { return gamma[x] == x; });
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < g_.order(); ++x) uf.unite(x, gamma[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex w) { return uf.find(w) == root; });
  }

  const Graph& g_;
  Leaf first_;
  Leaf best_;
  bool have_leaf_ = false;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

int CanonicalForm::orbit_count() const {
  int count = 0;
  for (std::size_t v = 0; v < orbit.size(); ++v) count += orbit[v] == static_cast<Vertex>(v);
  return count;
}

CanonicalForm canonical(const Graph& g, std::span<const int> colours) {
  const int n = g.order();
  if (!colours.empty() && static_cast<int>(colours.size()) != n) {
    throw GraphError("canonical: colour vector size mismatch");
  }
  CanonicalForm form;
  form.bytes.push_back(static_cast<char>(n));
  if (n == 0) return form;

  Cells cells;
  std::vector<int> palette;
  if (colours.empty()) {
    cells.push_back(g.all_vertices());
    palette.push_back(0);
  } else {
    palette.assign(colours.begin(), colours.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (int c : palette) {
      VertexMask cell = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (colours[v] == c) cell |= bit(v);
      }
      cells.push_back(cell);
    }
  }

  Labeller labeller(g);
  std::vector<Vertex> prefix;
  labeller.search(std::move(cells), prefix);
  const Leaf& best = labeller.best();

  form.labeling.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) form.labeling[best.order[p]] = p;
  if (!colours.empty()) {
    for (int p = 0; p < n; ++p) {
      const auto rank = std::lower_bound(palette.begin(), palette.end(), colours[best.order[p]]) -
                        palette.begin();
      form.bytes.push_back(static_cast<char>(rank));
    }
  }
  for (VertexMask row : best.rows) {
    for (int b = 0; b < 8; ++b) form.bytes.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
  }

  form.generators = labeller.automorphisms();
  UnionFind uf(n);
  for (const auto& gamma : form.generators) {
    for (Vertex x = 0; x < n; ++x) uf.unite(x, gamma[x]);
  }
  form.orbit.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) form.orbit[v] = uf.find(v);
  return form;
}

std::vector<Vertex> orbit_representatives(const CanonicalForm& form) {
  std::vector<Vertex> reps;
  for (std::size_t v = 0; v < form.orbit.size(); ++v) {
    if (form.orbit[v] == static_cast<Vertex>(v)) reps.push_back(static_cast<Vertex>(v));
  }
  return reps;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical(a).bytes == canonical(b).bytes;
}

}  // namespace avoid
