#include "kronlab/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "kronlab/errors.hpp"

namespace kronlab {

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector d(n);
  d[i] = 1;
  return d;
}

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x >= 0; });
}

bool DimVector::is_nonpositive() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x <= 0; });
}

std::int64_t DimVector::max_entry() const {
  return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end());
}

std::int64_t DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), std::int64_t{0}); }

DimVector& DimVector::operator+=(const DimVector& o) {
  if (o.size() != size()) throw InputError("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] += o.v_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  if (o.size() != size()) throw InputError("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

DimVector operator-(DimVector a) {
  for (auto& x : a.v_) x = -x;
  return a;
}

DimVector operator*(std::int64_t s, DimVector a) {
  for (auto& x : a.v_) x *= s;
  return a;
}

std::string to_string(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + ")";
}

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows) {
  auto data = std::make_shared<Data>();
  data->n = vertex_count;
  for (const auto& a : arrows)
    if (a.source >= vertex_count || a.target >= vertex_count)
      throw InputError("arrow endpoint outside the vertex range");
  data->arrows = std::move(arrows);

  // Kahn's algorithm; ties go to the smallest vertex.
  std::vector<std::size_t> indeg(vertex_count, 0);
  for (const auto& a : data->arrows) ++indeg[a.target];
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    data->topo.push_back(v);
    for (const auto& a : data->arrows)
      if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
  }
  if (data->topo.size() != vertex_count) throw InputError("quiver has an oriented cycle");

  data->paths.assign(vertex_count * vertex_count, {});
  for (std::size_t u = 0; u < vertex_count; ++u) {
    std::vector<Path> stack{Path{u, u, {}}};
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      stack.pop_back();
      for (std::size_t a = data->arrows.size(); a-- > 0;) {
        if (data->arrows[a].source != p.target) continue;
        Path q{u, data->arrows[a].target, p.arrows};
        q.arrows.push_back(a);
        stack.push_back(std::move(q));
      }
      data->paths[u * vertex_count + p.target].push_back(std::move(p));
    }
  }
  for (auto& list : data->paths)
    std::sort(list.begin(), list.end(), [](const Path& a, const Path& b) {
      if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
      return a.arrows < b.arrows;
    });
  data_ = std::move(data);
}

Quiver Quiver::kronecker(int m) {
  if (m < 1) throw InputError("Kronecker quiver needs m >= 1");
  return Quiver(2, std::vector<Arrow>(static_cast<std::size_t>(m), Arrow{1, 0}));
}

Quiver Quiver::linear(std::size_t n) {
  if (n == 0) throw InputError("linear quiver needs at least one vertex");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows().size());
  for (const auto& a : arrows()) rev.push_back({a.target, a.source});
  return Quiver(vertex_count(), std::move(rev));
}

std::size_t Quiver::extend(const Path& p, std::size_t a) const {
  const auto& list = paths_between(p.source, arrow(a).target);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& q = list[i].arrows;
    if (q.size() == p.arrows.size() + 1 && q.back() == a && std::equal(p.arrows.begin(), p.arrows.end(), q.begin()))
      return i;
  }
  throw InputError("path extension not found");
}

std::size_t Quiver::prepend(std::size_t a, const Path& p) const {
  const auto& list = paths_between(arrow(a).source, p.target);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& q = list[i].arrows;
    if (q.size() == p.arrows.size() + 1 && q.front() == a && std::equal(p.arrows.begin(), p.arrows.end(), q.begin() + 1))
      return i;
  }
  throw InputError("path prefix not found");
}

std::size_t Quiver::arrow_count(std::size_t u, std::size_t w) const {
  return static_cast<std::size_t>(
      std::count_if(arrows().begin(), arrows().end(), [&](const Arrow& a) { return a.source == u && a.target == w; }));
}

namespace {

void check_length(const Quiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count()) throw InputError("dimension vector length does not match the quiver");
}

}  // namespace

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_length(q, d);
  check_length(q, e);
  std::int64_t s = 0;
  for (std::size_t v = 0; v < d.size(); ++v) s += d[v] * e[v];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

std::int64_t symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

std::int64_t tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& d) {
  if (i >= q.vertex_count()) throw InputError("reflection vertex out of range");
  check_length(q, d);
  const DimVector alpha = DimVector::unit(q.vertex_count(), i);
  return d - symmetric_form(q, d, alpha) * alpha;
}

DimVector apply_reflections(const Quiver& q, const DimVector& d, const std::vector<std::size_t>& word) {
  DimVector x = d;
  for (std::size_t i : word) x = simple_reflection(q, i, x);
  return x;
}

std::vector<DimVector> positive_real_roots(const Quiver& q, std::int64_t bound) {
  if (bound < 1) throw InputError("root bound must be at least 1");
  const std::size_t n = q.vertex_count();
  const std::int64_t box = n <= 2 ? bound : 2 * bound;
  std::set<DimVector> seen;
  std::deque<DimVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    DimVector a = DimVector::unit(n, i);
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    const DimVector d = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      DimVector r = simple_reflection(q, i, d);
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v) inside = inside && r[v] <= box && r[v] >= -box;
      if (!inside || seen.count(r)) continue;
      seen.insert(r);
      frontier.push_back(std::move(r));
    }
  }
  std::vector<DimVector> out;
  for (const auto& d : seen)
    if (d.is_nonnegative() && d.max_entry() <= bound) out.push_back(d);
  return out;
}

KroneckerSequences kronecker_sequences(int m, std::size_t count) {
  if (m < 1) throw InputError("m must be at least 1");
  if (count < 2) throw InputError("sequence count must be at least 2");
  KroneckerSequences s;
  s.preprojective = {DimVector{1, 0}, DimVector{m, 1}};
  s.preinjective = {DimVector{0, 1}, DimVector{1, m}};
  for (std::size_t i = 2; i < count; ++i) {
    s.preprojective.push_back(m * s.preprojective[i - 1] - s.preprojective[i - 2]);
    s.preinjective.push_back(m * s.preinjective[i - 1] - s.preinjective[i - 2]);
  }
  s.preprojective.resize(count);
  s.preinjective.resize(count);
  return s;
}

DimVector kronecker_preprojective_dim(int m, std::int64_t i) {
  if (i < 0) throw InputError("negative preprojective index");
  DimVector a{1, 0}, b{m, 1};
  for (std::int64_t k = 0; k < i; ++k) {
    DimVector c = m * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

DimVector kronecker_preinjective_dim(int m, std::int64_t i) {
  const DimVector p = kronecker_preprojective_dim(m, i);
  return DimVector{p[1], p[0]};
}

DimVector coxeter_transform(const Quiver& q, const DimVector& d, Direction dir) {
  check_length(q, d);
  const auto& topo = q.topological_order();
  DimVector x = d;
  if (dir == Direction::forward) {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) x = simple_reflection(q, *it, x);
  } else {
    for (std::size_t v : topo) x = simple_reflection(q, v, x);
  }
  return x;
}

}  // namespace kronlab
