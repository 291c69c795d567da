// Quickhull in R^d (2 <= d <= 5) over simplicial facets, followed by
// coplanar-facet merging and extreme-point pruning.

#include <algorithm>
#include <map>
#include <numeric>

#include "linalg.hpp"
#include "shadowcalc/error.hpp"
#include "shadowcalc/polytope.hpp"

namespace shadowcalc {

namespace {

using Ids = std::array<int, kMaxDim>;

struct SimplexFacet {
  Ids v{};    // point indices
  Ids nbr{};  // nbr[i] shares every vertex except v[i]
  Vec normal;
  double offset = 0.0;
  std::vector<int> outside;
  int furthest = -1;
  double furthest_dist = 0.0;
  bool alive = true;
  int mark = 0;
};

class Quickhull {
 public:
  Quickhull(std::span<const Vec> pts, double tol)
      : pts_(pts), d_(pts[0].dim()), tol_(tol) {}

  void run() {
    initial_simplex();
    expand();
  }

  const std::vector<SimplexFacet>& facets() const noexcept { return facets_; }

 private:
  double distance(const SimplexFacet& f, int p) const {
    return dot(f.normal, pts_[p]) - f.offset;
  }

  void set_plane(SimplexFacet& f) const {
    std::array<Vec, kMaxDim> corners;
    for (int i = 0; i < d_ && i < kMaxDim; ++i) corners[i] = pts_[f.v[i]];
    Vec n = detail::hyperplane_normal({corners.data(), static_cast<std::size_t>(d_)});
    const double len = n.norm();
    if (!(len > 0.0)) fail(ErrorCode::kInternal, "hull produced a degenerate facet");
    n /= len;
    double off = 0.0;
    for (int i = 0; i < d_; ++i) off += dot(n, corners[i]);
    off /= d_;
    if (dot(n, interior_) - off > 0.0) {
      n = -n;
      off = -off;
    }
    f.normal = n;
    f.offset = off;
  }

  static void add_outside(SimplexFacet& f, int p, double dist) {
    f.outside.push_back(p);
    if (dist > f.furthest_dist) {
      f.furthest_dist = dist;
      f.furthest = p;
    }
  }

  void initial_simplex() {
    const int n = static_cast<int>(pts_.size());
    if (n < d_ + 1) {
      fail(ErrorCode::kDegenerateInput,
           "need at least " + std::to_string(d_ + 1) + " distinct points in dimension " +
               std::to_string(d_));
    }
    std::vector<int> chosen{0};
    std::vector<Vec> basis;
    for (int k = 1; k <= d_; ++k) {
      int best = -1;
      double best_dist = -1.0;
      Vec best_r;
      for (int i = 0; i < n; ++i) {
        Vec r = pts_[i] - pts_[chosen[0]];
        for (int pass = 0; pass < 2; ++pass)
          for (const Vec& b : basis) r -= dot(r, b) * b;
        const double dist = r.norm();
        if (dist > best_dist) {
          best_dist = dist;
          best = i;
          best_r = r;
        }
      }
      if (best_dist <= tol_) {
        fail(ErrorCode::kDegenerateInput,
             "points span an affine subspace of dimension " + std::to_string(k - 1) +
                 " < " + std::to_string(d_));
      }
      chosen.push_back(best);
      basis.push_back(best_r / best_dist);
    }

    interior_ = Vec(d_);
    for (int c : chosen) interior_ += pts_[c];
    interior_ /= static_cast<double>(d_ + 1);

    facets_.resize(static_cast<std::size_t>(d_ + 1));
    for (int i = 0; i <= d_; ++i) {
      SimplexFacet& f = facets_[i];
      for (int j = 0, p = 0; j <= d_; ++j) {
        if (j == i) continue;
        f.v[p] = chosen[j];
        f.nbr[p] = j;
        ++p;
      }
      set_plane(f);
    }

    std::vector<char> is_chosen(static_cast<std::size_t>(n), 0);
    for (int c : chosen) is_chosen[c] = 1;
    for (int p = 0; p < n; ++p) {
      if (is_chosen[p]) continue;
      for (auto& f : facets_) {
        const double dist = distance(f, p);
        if (dist > tol_) {
          add_outside(f, p, dist);
          break;
        }
      }
    }
  }

  void expand() {
    std::vector<int> pending;
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
      if (!facets_[i].outside.empty()) pending.push_back(i);
    }
    int stamp = 0;
    std::vector<int> visible;
    std::vector<int> created;
    std::map<Ids, std::pair<int, int>> open_ridges;

    while (!pending.empty()) {
      const int start = pending.back();
      pending.pop_back();
      if (!facets_[start].alive || facets_[start].outside.empty()) continue;
      const int eye = facets_[start].furthest;

      stamp += 2;
      const int seen = stamp;
      const int hidden = stamp + 1;
      visible.assign(1, start);
      facets_[start].mark = seen;
      for (std::size_t q = 0; q < visible.size(); ++q) {
        for (int k = 0; k < d_; ++k) {
          const int g = facets_[visible[q]].nbr[k];
          SimplexFacet& gf = facets_[g];
          if (gf.mark == seen || gf.mark == hidden) continue;
          if (distance(gf, eye) > tol_) {
            gf.mark = seen;
            visible.push_back(g);
          } else {
            gf.mark = hidden;
          }
        }
      }

      created.clear();
      for (int vf : visible) {
        for (int k = 0; k < d_; ++k) {
          const int g = facets_[vf].nbr[k];
          if (facets_[g].mark == seen) continue;
          SimplexFacet nf;
          nf.v = facets_[vf].v;
          nf.v[k] = eye;
          nf.nbr[k] = g;
          set_plane(nf);
          const int id = static_cast<int>(facets_.size());
          facets_.push_back(std::move(nf));
          for (int m = 0; m < d_; ++m) {
            if (facets_[g].nbr[m] == vf) facets_[g].nbr[m] = id;
          }
          created.push_back(id);
        }
      }

      open_ridges.clear();
      for (int id : created) {
        for (int j = 0; j < d_; ++j) {
          if (facets_[id].v[j] == eye) continue;
          Ids key;
          key.fill(-1);
          for (int i = 0, p = 0; i < d_; ++i) {
            if (i != j) key[p++] = facets_[id].v[i];
          }
          std::sort(key.begin(), key.begin() + (d_ - 1));
          auto it = open_ridges.find(key);
          if (it == open_ridges.end()) {
            open_ridges.emplace(key, std::make_pair(id, j));
          } else {
            facets_[id].nbr[j] = it->second.first;
            facets_[it->second.first].nbr[it->second.second] = id;
            open_ridges.erase(it);
          }
        }
      }
      if (!open_ridges.empty()) {
        fail(ErrorCode::kInternal, "hull horizon is not a closed ridge cycle");
      }

      for (int vf : visible) {
        std::vector<int> orphans;
        orphans.swap(facets_[vf].outside);
        facets_[vf].alive = false;
        for (int p : orphans) {
          if (p == eye) continue;
          for (int id : created) {
            const double dist = distance(facets_[id], p);
            if (dist > tol_) {
              add_outside(facets_[id], p, dist);
              break;
            }
          }
        }
      }
      for (int id : created) {
        if (!facets_[id].outside.empty()) pending.push_back(id);
      }
    }
  }

  std::span<const Vec> pts_;
  int d_;
  double tol_;
  Vec interior_;
  std::vector<SimplexFacet> facets_;
};

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

double max_abs_coord(std::span<const Vec> pts) {
  double s = 0.0;
  for (const Vec& p : pts) s = std::max(s, p.max_abs());
  return s;
}

}  // namespace

class PolytopeBuilder {
 public:
  static Polytope build(std::span<const Vec> input, bool allow_dim1) {
    if (input.empty()) fail(ErrorCode::kDegenerateInput, "empty point set");
    const int d = input[0].dim();
    const int min_dim = allow_dim1 ? 1 : 2;
    if (d < min_dim || d > kMaxDim) {
      fail(ErrorCode::kDimensionOutOfRange,
           "dimension " + std::to_string(d) + " outside " + std::to_string(min_dim) +
               ".." + std::to_string(kMaxDim));
    }
    std::vector<Vec> pts(input.begin(), input.end());
    for (const Vec& p : pts) {
      if (p.dim() != d) fail(ErrorCode::kDimensionMismatch, "points of mixed dimension");
      if (!p.is_finite()) fail(ErrorCode::kInvalidArgument, "non-finite coordinate");
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const double scale = max_abs_coord(pts);
    const double tol = kRelativeTolerance * scale;
    if (d == 1) return build_line(pts, tol);

    // Each pass hulls the current candidates; a pass that finds a
    // non-extreme vertex (coplanar input) re-runs on the extreme ones.
    for (int attempt = 0; attempt < 4; ++attempt) {
      Quickhull qh(pts, tol);
      qh.run();
      std::vector<Vec> extreme;
      Polytope out;
      if (assemble(qh, pts, tol, out, extreme)) return out;
      pts = std::move(extreme);
    }
    fail(ErrorCode::kInternal, "hull did not converge to an extreme vertex set");
  }

 private:
  static Polytope build_line(const std::vector<Vec>& pts, double tol) {
    const Vec& lo = pts.front();
    const Vec& hi = pts.back();
    if (hi[0] - lo[0] <= tol) {
      fail(ErrorCode::kDegenerateInput, "points do not span a segment");
    }
    Polytope out;
    out.dim_ = 1;
    out.vertices_ = {lo, hi};
    out.scale_ = std::max(std::abs(lo[0]), std::abs(hi[0]));
    out.interior_ = (lo + hi) / 2.0;
    for (int i = 0; i < 2; ++i) {
      Facet f;
      f.vertex_ids = {i};
      f.normal = Vec{i == 0 ? -1.0 : 1.0};
      f.offset = dot(f.normal, out.vertices_[i]);
      f.measure = 1.0;
      f.centroid = out.vertices_[i];
      Ids piece;
      piece.fill(-1);
      piece[0] = i;
      f.pieces.push_back(piece);
      out.facets_.push_back(std::move(f));
    }
    return out;
  }

  // Returns false (and fills `extreme`) when some hull vertex turns out not
  // to be extreme after merging coplanar facets.
  static bool assemble(const Quickhull& qh, const std::vector<Vec>& pts, double tol,
                       Polytope& out, std::vector<Vec>& extreme) {
    const auto& all = qh.facets();
    const int d = pts[0].dim();

    std::vector<int> local(all.size(), -1);
    std::vector<int> alive;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
      if (all[i].alive) {
        local[i] = static_cast<int>(alive.size());
        alive.push_back(i);
      }
    }

    DisjointSets groups(static_cast<int>(alive.size()));
    for (int a = 0; a < static_cast<int>(alive.size()); ++a) {
      const SimplexFacet& f = all[alive[a]];
      for (int k = 0; k < d; ++k) {
        const int g = f.nbr[k];
        if (g < alive[a]) continue;
        const SimplexFacet& gf = all[g];
        if (dot(f.normal, gf.normal) <= 0.0) continue;
        int opposite = -1;
        for (int m = 0; m < d; ++m) {
          if (gf.nbr[m] == alive[a]) opposite = gf.v[m];
        }
        const double dg = std::abs(dot(f.normal, pts[opposite]) - f.offset);
        const double df = std::abs(dot(gf.normal, pts[f.v[k]]) - gf.offset);
        if (dg <= tol && df <= tol) groups.unite(a, local[g]);
      }
    }

    std::map<int, std::vector<int>> members;
    for (int a = 0; a < static_cast<int>(alive.size()); ++a) {
      members[groups.find(a)].push_back(a);
    }

    std::vector<Facet> facets;
    facets.reserve(members.size());
    const double piece_norm = detail::factorial(d - 1);
    for (const auto& [root, list] : members) {
      Facet facet;
      Vec normal_sum(d);
      Vec centroid_sum(d);
      double measure = 0.0;
      for (int a : list) {
        const SimplexFacet& s = all[alive[a]];
        std::array<Vec, kMaxDim> rows;
        rows[0] = s.normal;
        Vec mean = pts[s.v[0]];
        for (int i = 1; i < d; ++i) {
          rows[i] = pts[s.v[i]] - pts[s.v[0]];
          mean += pts[s.v[i]];
        }
        mean /= static_cast<double>(d);
        const double m =
            std::abs(detail::det_rows({rows.data(), static_cast<std::size_t>(d)})) /
            piece_norm;
        measure += m;
        normal_sum += m * s.normal;
        centroid_sum += m * mean;
        facet.pieces.push_back(s.v);
        for (int i = 0; i < d; ++i) facet.vertex_ids.push_back(s.v[i]);
      }
      std::sort(facet.vertex_ids.begin(), facet.vertex_ids.end());
      facet.vertex_ids.erase(std::unique(facet.vertex_ids.begin(), facet.vertex_ids.end()),
                             facet.vertex_ids.end());
      const double nlen = normal_sum.norm();
      facet.normal = nlen > 0.0 ? normal_sum / nlen : all[alive[list.front()]].normal;
      double off = 0.0;
      for (int id : facet.vertex_ids) off += dot(facet.normal, pts[id]);
      facet.offset = off / static_cast<double>(facet.vertex_ids.size());
      facet.measure = measure;
      facet.centroid = measure > 0.0 ? centroid_sum / measure : pts[facet.vertex_ids[0]];
      facets.push_back(std::move(facet));
    }

    // A hull vertex is extreme iff the normals of its incident facets span R^d.
    std::vector<std::vector<Vec>> incident(pts.size());
    for (const Facet& f : facets) {
      for (int id : f.vertex_ids) incident[id].push_back(f.normal);
    }
    std::vector<int> used;
    bool all_extreme = true;
    for (int id = 0; id < static_cast<int>(pts.size()); ++id) {
      if (incident[id].empty()) continue;
      if (detail::rank_rows(incident[id], 1e-9) == d) {
        used.push_back(id);
      } else {
        all_extreme = false;
      }
    }
    if (!all_extreme) {
      extreme.clear();
      for (int id : used) extreme.push_back(pts[id]);
      return false;
    }

    std::vector<int> remap(pts.size(), -1);
    out.dim_ = d;
    for (int id : used) {
      remap[id] = static_cast<int>(out.vertices_.size());
      out.vertices_.push_back(pts[id]);
    }
    for (Facet& f : facets) {
      for (int& id : f.vertex_ids) id = remap[id];
      for (auto& piece : f.pieces)
        for (int i = 0; i < d; ++i) piece[i] = remap[piece[i]];
    }
    std::sort(facets.begin(), facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_ids < b.vertex_ids; });
    out.facets_ = std::move(facets);
    out.scale_ = max_abs_coord(out.vertices_);
    out.interior_ = Vec(d);
    for (const Vec& v : out.vertices_) out.interior_ += v;
    out.interior_ /= static_cast<double>(out.vertices_.size());
    return true;
  }
};

Polytope hull(std::span<const Vec> points) { return PolytopeBuilder::build(points, false); }

namespace detail {
Polytope hull_any_dim(std::span<const Vec> points) {
  return PolytopeBuilder::build(points, true);
}
}  // namespace detail

}  // namespace shadowcalc
