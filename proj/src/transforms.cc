// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gsval/transforms.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace gsval {
namespace {

void CheckPair(const SetFunction& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.m() || j >= g.m()) {
    throw std::domain_error("item index out of range");
  }
  if (i == j) throw std::domain_error("the two items must differ");
}

void CheckSameGround(const SetFunction& f, const SetFunction& g) {
  if (f.m() != g.m()) {
    throw std::domain_error("ground set sizes differ: " +
                            std::to_string(f.m()) + " vs " +
                            std::to_string(g.m()));
  }
}

}  // namespace

SetFunction MaxSymmetrize(const SetFunction& g, int i, int j) {
  CheckPair(g, i, j);
  std::vector<Rational> values(g.values().begin(), g.values().end());
  ForEachSubset(g.ground().Without(i).Without(j), [&](Subset s) {
    const Rational& top = std::max(g(s.With(i)), g(s.With(j)));
    values[s.With(i).mask()] = top;
    values[s.With(j).mask()] = top;
  });
  return SetFunction(g.m(), std::move(values), g.names());
}

SetFunction PartialSymmetrize(const SetFunction& g, int x, int y) {
  CheckPair(g, x, y);
  std::vector<Rational> values(g.values().begin(), g.values().end());
  ForEachSubset(g.ground().Without(x).Without(y), [&](Subset s) {
    values[s.With(y).mask()] = std::max(g(s.With(x)), g(s.With(y)));
  });
  return SetFunction(g.m(), std::move(values), g.names());
}

FixpointResult SymmetrizeToFixpoint(const SetFunction& g, const SetFunction& f) {
  CheckSameGround(f, g);
  const int m = f.m();
  std::vector<std::pair<int, int>> f_pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (AreSymmetric(f, i, j)) f_pairs.emplace_back(i, j);
    }
  }
  FixpointResult out{g, {}, {TotalValue(g)}};
  while (true) {
    bool changed = false;
    for (const auto& [i, j] : f_pairs) {
      if (AreSymmetric(out.result, i, j)) continue;
      out.result = MaxSymmetrize(out.result, i, j);
      out.steps.emplace_back(i, j);
      out.potentials.push_back(TotalValue(out.result));
      changed = true;
      break;
    }
    if (!changed) return out;
  }
}

SetFunction Convolve(const SetFunction& f, const SetFunction& g) {
  CheckSameGround(f, g);
  return SetFunction::Build(f.m(), [&](Subset s) {
    Rational best = f(s);
    ForEachSubset(s, [&](Subset t) {
      Rational v = f(t) + g(s - t);
      if (v > best) best = std::move(v);
    });
    return best;
  });
}

SetFunction ConvolveAll(std::span<const SetFunction> fs) {
  if (fs.empty()) throw std::domain_error("need at least one function");
  SetFunction out = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) out = Convolve(out, fs[i]);
  return out;
}

SetFunction Average(const SetFunction& f, const SetFunction& g) {
  CheckSameGround(f, g);
  return SetFunction::Build(f.m(), [&](Subset s) -> Rational {
    return (f(s) + g(s)) / 2;
  });
}

SetFunction Sum(const SetFunction& f, const SetFunction& g) {
  CheckSameGround(f, g);
  return SetFunction::Build(f.m(), [&](Subset s) -> Rational {
    return f(s) + g(s);
  });
}

SetFunction Endow(const SetFunction& f, Subset x) {
  if (!x.IsSubsetOf(f.ground())) {
    throw std::domain_error("endowment leaves the ground set");
  }
  if (x == f.ground()) throw std::domain_error("endowment covers every item");
  const Subset rest = f.ground() - x;
  const Rational base = f(x);
  const SetFunction shifted = SetFunction::Build(
      f.m(), [&](Subset s) -> Rational { return f(s | x) - base; }, f.names());
  return Restrict(shifted, rest);
}

ConcaveFn ConcaveFn::Create(std::vector<std::pair<Rational, Rational>> points) {
  if (points.empty() || points[0].first != 0 || points[0].second != 0) {
    throw std::invalid_argument("first breakpoint must be (0, 0)");
  }
  std::optional<Rational> last_slope;
  for (size_t i = 1; i < points.size(); ++i) {
    const Rational dx = points[i].first - points[i - 1].first;
    if (sgn(dx) <= 0) {
      throw std::invalid_argument("breakpoints must have increasing x");
    }
    const Rational slope = (points[i].second - points[i - 1].second) / dx;
    if (sgn(slope) < 0) throw std::invalid_argument("function must be monotone");
    if (last_slope && slope > *last_slope) {
      throw std::invalid_argument("slopes must be non-increasing");
    }
    last_slope = slope;
  }
  return ConcaveFn(std::move(points));
}

ConcaveFn ConcaveFn::Identity() {
  return Create({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

ConcaveFn ConcaveFn::Cap(const Rational& cap) {
  if (sgn(cap) < 0) throw std::invalid_argument("cap must be >= 0");
  if (sgn(cap) == 0) return Create({{Rational(0), Rational(0)}});
  return Create({{Rational(0), Rational(0)},
                 {cap, cap},
                 {cap + 1, cap}});
}

Rational ConcaveFn::operator()(const Rational& x) const {
  if (sgn(x) < 0) throw std::domain_error("concave function needs x >= 0");
  if (points_.size() == 1) return 0;
  size_t seg = 1;
  while (seg + 1 < points_.size() && points_[seg].first < x) ++seg;
  const auto& [x0, y0] = points_[seg - 1];
  const auto& [x1, y1] = points_[seg];
  return y0 + (y1 - y0) / (x1 - x0) * (x - x0);
}

SetFunction ConcaveCompose(const ConcaveFn& c, const SetFunction& f) {
  for (const Rational& v : f.values()) {
    if (sgn(v) < 0) throw std::domain_error("composition needs f >= 0");
  }
  return SetFunction::Build(f.m(), [&](Subset s) { return c(f(s)); },
                            f.names());
}

SetFunction Split(const SetFunction& v, int x) {
  if (x < 0 || x >= v.m()) throw std::domain_error("item index out of range");
  const int m = v.m();
  std::vector<std::string> names;
  if (!v.names().empty()) {
    names = v.names();
    names.push_back(v.names()[x] + "'");
  }
  return SetFunction::Build(
      m + 1,
      [&](Subset t) {
        return t.contains(m) ? v(t.Without(m).With(x)) : v(t);
      },
      std::move(names));
}

SetFunction Aggregate(const SetFunction& v, int x, int y) {
  CheckPair(v, x, y);
  const int m = v.m();
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (i != x && i != y) keep.push_back(i);
  }
  const int z = static_cast<int>(keep.size());
  std::vector<std::string> names;
  if (!v.names().empty()) {
    for (int i : keep) names.push_back(v.names()[i]);
    names.push_back(v.names()[x] + "+" + v.names()[y]);
  }
  return SetFunction::Build(
      z + 1,
      [&](Subset s) -> Rational {
        uint32_t mask = 0;
        for (int r = 0; r < z; ++r) {
          if (s.contains(r)) mask |= uint32_t{1} << keep[r];
        }
        const Subset base(mask);
        if (!s.contains(z)) return v(base);
        return std::max(v(base.With(x)), v(base.With(y)));
      },
      std::move(names));
}

SetFunction AdditivePerturb(const SetFunction& v,
                            const std::vector<Rational>& w) {
  if (w.size() != static_cast<size_t>(v.m())) {
    throw std::domain_error("need one weight per item");
  }
  return SetFunction::Build(
      v.m(),
      [&](Subset s) {
        Rational total = v(s);
        for (int i : s.Items()) total += w[i];
        return total;
      },
      v.names());
}

void InductionNetwork::Validate() const {
  if (u_size < 1) throw std::domain_error("U side must be nonempty");
  SetFunction::CheckGroundSize(u_size);
  if (u_size + v_size() > kMaxInductionVertices) {
    throw std::domain_error("network has more than " +
                            std::to_string(kMaxInductionVertices) +
                            " vertices");
  }
  for (const NetworkEdge& e : edges) {
    if (e.u < 0 || e.u >= u_size || e.v < 0 || e.v >= v_size()) {
      throw std::domain_error("edge endpoint out of range");
    }
  }
}

namespace {

// best[U][V]: largest total weight of a matching whose U endpoints are
// exactly U and V endpoints exactly V; unset if none exists.
struct MatchingTable {
  int v_size;
  std::vector<std::optional<Rational>> best;

  const std::optional<Rational>& at(uint32_t u, uint32_t v) const {
    return best[(static_cast<size_t>(u) << v_size) | v];
  }
};

MatchingTable BuildMatchingTable(const InductionNetwork& net) {
  const int nv = net.v_size();
  MatchingTable t{nv, std::vector<std::optional<Rational>>(
                          size_t{1} << (net.u_size + nv))};
  t.best[0] = Rational(0);
  std::vector<std::vector<const NetworkEdge*>> by_u(net.u_size);
  for (const NetworkEdge& e : net.edges) by_u[e.u].push_back(&e);
  for (uint32_t u = 1; u < (uint32_t{1} << net.u_size); ++u) {
    // The highest U endpoint is matched by one of its edges.
    const int top = 31 - std::countl_zero(u);
    const uint32_t rest = u & ~(uint32_t{1} << top);
    for (uint32_t v = 0; v < (uint32_t{1} << nv); ++v) {
      std::optional<Rational> best;
      for (const NetworkEdge* e : by_u[top]) {
        if (!((v >> e->v) & 1u)) continue;
        const auto& sub = t.at(rest, v & ~(uint32_t{1} << e->v));
        if (!sub) continue;
        Rational candidate = *sub + e->weight;
        if (!best || candidate > *best) best = std::move(candidate);
      }
      t.best[(static_cast<size_t>(u) << nv) | v] = std::move(best);
    }
  }
  return t;
}

}  // namespace

SetFunction InduceAll(const InductionNetwork& net) {
  net.Validate();
  const MatchingTable table = BuildMatchingTable(net);
  const int nv = net.v_size();
  // exact[U] = max over V of inner(V) + best[U][V]; then f(S) is the max of
  // exact over subsets of S.
  std::vector<Rational> values(size_t{1} << net.u_size);
  std::vector<std::optional<Rational>> exact(values.size());
  for (uint32_t u = 0; u < values.size(); ++u) {
    for (uint32_t v = 0; v < (uint32_t{1} << nv); ++v) {
      const auto& w = table.at(u, v);
      if (!w) continue;
      Rational candidate = net.inner(Subset(v)) + *w;
      if (!exact[u] || candidate > *exact[u]) exact[u] = std::move(candidate);
    }
  }
  for (uint32_t s = 0; s < values.size(); ++s) {
    std::optional<Rational> best;
    ForEachSubset(Subset(s), [&](Subset u) {
      const auto& e = exact[u.mask()];
      if (e && (!best || *e > *best)) best = *e;
    });
    values[s] = *best;
  }
  return SetFunction(net.u_size, std::move(values));
}

Rational Induce(const InductionNetwork& net, Subset s) {
  net.Validate();
  if (!s.IsSubsetOf(Subset::Full(net.u_size))) {
    throw std::domain_error("set leaves the U side");
  }
  InductionNetwork restricted = net;
  restricted.edges.clear();
  for (const NetworkEdge& e : net.edges) {
    if (s.contains(e.u)) restricted.edges.push_back(e);
  }
  return InduceAll(restricted)(s);
}

SetFunction InduceByComposition(const InductionNetwork& net) {
  net.Validate();
  if (net.edges.empty()) return SetFunction::Zero(net.u_size);
  const int num_edges = static_cast<int>(net.edges.size());
  SetFunction::CheckGroundSize(num_edges);
  // Keep only V items that carry an edge.
  Subset used;
  for (const NetworkEdge& e : net.edges) used = used.With(e.v);
  SetFunction f = Restrict(net.inner, used);
  std::vector<int> v_index(net.v_size(), -1);
  {
    int next = 0;
    for (int x : used.Items()) v_index[x] = next++;
  }
  // Item labels: edge ids after splitting; -1 - u after aggregation.
  std::vector<int> label(f.m(), -1);
  std::vector<bool> claimed(f.m(), false);
  for (int e = 0; e < num_edges; ++e) {
    const int x = v_index[net.edges[e].v];
    if (!claimed[x]) {
      claimed[x] = true;
      label[x] = e;
    } else {
      f = Split(f, x);
      label.push_back(e);
    }
  }
  std::vector<Rational> weights(f.m());
  for (int i = 0; i < f.m(); ++i) weights[i] = net.edges[label[i]].weight;
  f = AdditivePerturb(f, weights);
  for (int u = 0; u < net.u_size; ++u) {
    std::vector<int> group;
    for (int i = 0; i < f.m(); ++i) {
      if (label[i] >= 0 && net.edges[label[i]].u == u) group.push_back(label[i]);
    }
    if (group.empty()) continue;
    auto position = [&](int l) {
      return static_cast<int>(std::find(label.begin(), label.end(), l) -
                              label.begin());
    };
    int current = group[0];
    for (size_t g = 1; g < group.size(); ++g) {
      const int x = position(current), y = position(group[g]);
      f = Aggregate(f, x, y);
      std::vector<int> next;
      for (int i = 0; i < static_cast<int>(label.size()); ++i) {
        if (i != x && i != y) next.push_back(label[i]);
      }
      // A fresh label standing for the merged group.
      current = num_edges + u;
      next.push_back(current);
      label = std::move(next);
    }
    label[position(current)] = -1 - u;
  }
  // Vertices of U without edges become dummy items.
  for (int u = 0; u < net.u_size; ++u) {
    if (std::find(label.begin(), label.end(), -1 - u) == label.end()) {
      f = AddDummyItem(f);
      label.push_back(-1 - u);
    }
  }
  std::vector<int> perm(f.m());
  for (int i = 0; i < f.m(); ++i) perm[i] = -1 - label[i];
  const SetFunction out = PermuteItems(f, perm);
  return SetFunction(out.m(), std::vector<Rational>(out.values().begin(),
                                                    out.values().end()));
}

}  // namespace gsval
