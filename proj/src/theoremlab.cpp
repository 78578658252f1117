#include "kronlab/theoremlab.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "kronlab/errors.hpp"

namespace kronlab {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

json dims_json(const std::vector<DimVector>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(to_string(d));
  return out;
}

// Runs one check body; an exception becomes a failing record under `name`.
void guarded(Report& r, const std::string& name, const json& inputs, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.add({name, false, inputs, "no exception", e.what()});
  }
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Truncated preprojective and preinjective dimension vectors, sorted.
std::vector<DimVector> truncated_sequences(int m, std::int64_t bound) {
  std::set<DimVector> out;
  for (std::int64_t i = 0; kronecker_preprojective_dim(m, i).max_entry() <= bound; ++i) {
    out.insert(kronecker_preprojective_dim(m, i));
    out.insert(kronecker_preinjective_dim(m, i));
  }
  return {out.begin(), out.end()};
}

void classification_check(Report& r, int m, std::int64_t bound, std::size_t trials, std::uint64_t seed) {
  const json in = {{"m", m}, {"bound", bound}, {"trials", trials}};
  guarded(r, "ex-7.3", in, [&] {
    const auto got = rigid_indec_classify(m, bound, trials, seed);
    const auto expected = truncated_sequences(m, bound);
    r.add({"ex-7.3", got == expected, in, dims_json(expected), dims_json(got)});
  });
}

}  // namespace

Report verify_theorem_1_2(std::int64_t bound, std::int64_t window, std::uint64_t seed) {
  ClusterOptions o;
  o.m = 3;
  o.seed = seed;
  return verify_theorem_1_2(ClusterModel(o), bound, window);
}

Report verify_theorem_1_2(const ClusterModel& model, std::int64_t bound, std::int64_t window) {
  const auto start = Clock::now();
  Report r;
  r.claim = "thm-1.2";
  r.seed = model.options().seed;
  if (model.m() != 3) throw InputError("the m = 3 campaign needs a model with m = 3");
  const auto M = [](std::int64_t j) { return ClusterIndec::orbit(j); };

  // End(M0) = End(M1) = k, Hom(M0,M1) = k^3, Hom(M1,M0) = 0.
  guarded(r, "lem-9.2", json::object(), [&] {
    const json got = {model.hom(M(0), M(0)), model.hom(M(1), M(1)), model.hom(M(0), M(1)), model.hom(M(1), M(0))};
    const json expected = {1, 1, 3, 0};
    r.add({"lem-9.2", got == expected, {{"order", "End M0, End M1, (M0,M1), (M1,M0)"}}, expected, got});
  });

  classification_check(r, 3, bound, model.options().trials, model.options().seed);

  const Window w{window, 45, 4};
  const json win = {{"index_radius", w.index_radius}, {"module_bound", w.module_bound},
                    {"regular_bound", w.regular_bound}};
  guarded(r, "cor-7.4(3)", win, [&] {
    std::vector<std::string> rigid, orbit;
    for (const auto& a : window_objects(model, w)) {
      if (model.is_self_rigid(a)) rigid.push_back(a.label());
      if (a.orbit_index()) orbit.push_back(a.label());
    }
    r.add({"cor-7.4(3)", rigid == orbit, win, orbit, rigid});
    json bad = json::array();
    for (std::int64_t j = -window; j <= window; ++j)
      for (std::int64_t k = j + 1; k <= window; ++k)
        if (is_2_rigid(model, ClusterObject{M(j), M(k)}) != (k == j + 1)) bad.push_back({j, k});
    r.add({"cor-7.4(3)", bad.empty(), {{"pairs", "M_j + M_k, |j|,|k| <= radius"}}, json::array(), bad});
  });

  // Mutation needs M_{i+2} and M_{i-1} inside the window, hence radius + 1.
  const Window wide{window + 1, 45, 4};
  const json wide_in = {{"index_radius", wide.index_radius}, {"range", window - 1}};
  guarded(r, "cor-7.4(4)", wide_in, [&] {
    json bad = json::array();
    for (std::int64_t i = -(window - 1); i <= window - 1; ++i) {
      const TiltingSet c = standard_tilting(i);
      const TiltingSet up = mutate(model, c, M(i), wide), down = mutate(model, c, M(i + 1), wide);
      if (up != standard_tilting(i + 1)) bad.push_back({{"i", i}, {"mutate_at", i}, {"got", to_string(up)}});
      if (down != standard_tilting(i - 1)) bad.push_back({{"i", i}, {"mutate_at", i + 1}, {"got", to_string(down)}});
      if (mutate(model, up, M(i + 2), wide) != c) bad.push_back({{"i", i}, {"double", "up"}});
      if (mutate(model, down, M(i - 1), wide) != c) bad.push_back({{"i", i}, {"double", "down"}});
      const auto q = ar_quadrangle(model, c, M(i), wide);
      if (q.b0 + q.b1 != 3) bad.push_back({{"i", i}, {"quadrangle", {q.b1, q.b0}}});
    }
    r.add({"cor-7.4(4)", bad.empty(), wide_in, json::array(), bad});
  });

  guarded(r, "thm-5.3", wide_in, [&] {
    json bad = json::array();
    for (std::int64_t i = -(window - 1); i <= window - 1; ++i) {
      const auto got = complements(model, {M(i + 1)}, wide);
      if (got != std::vector<ClusterIndec>{M(i), M(i + 2)}) {
        json labels = json::array();
        for (const auto& z : got) labels.push_back(z.label());
        bad.push_back({{"i", i}, {"got", labels}});
      }
    }
    r.add({"thm-5.3", bad.empty(), wide_in, json::array(), bad});
  });

  guarded(r, "cor-6.4", win, [&] {
    const Report sub = verify_equivalence_window(model, standard_tilting(0), w);
    json failing = json::array();
    for (const auto& c : sub.checks)
      if (!c.passed) failing.push_back({{"name", c.name}, {"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}});
    r.add({"cor-6.4", sub.passed(), win, json::array(), failing});
  });

  r.finalize();
  r.ms = elapsed_ms(start);
  return r;
}

Report verify_theorem_1_3(std::int64_t bound, std::uint64_t seed) {
  const auto start = Clock::now();
  constexpr int m = 6;
  Report r;
  r.claim = "thm-1.3";
  r.seed = seed;
  const Quiver q = Quiver::kronecker(m);

  guarded(r, "lem-9.4", json::object(), [&] {
    const Rep p0 = Rep::projective(q, 0), p1 = Rep::projective(q, 1);
    const json got = {hom_space(p1, p1).dim(), hom_space(p0, p1).dim()};
    const json expected = {1, m};
    r.add({"lem-9.4", got == expected, {{"order", "End P1, (P0,P1)"}}, expected, got});
  });

  classification_check(r, m, bound, kDefaultTrials, seed);

  // Orbit position k carries P_{1-k} for k <= 1, zero at k = 2 and I_{k-3}
  // for k >= 3; tau takes position k to k + 2 away from the projectives at 0, 1
  // and the zero at 2.
  const auto assigned = [&](std::int64_t k) -> DimVector {
    if (k <= 1) return kronecker_preprojective_dim(m, 1 - k);
    if (k == 2) return DimVector(2);
    return kronecker_preinjective_dim(m, k - 3);
  };
  constexpr std::int64_t reach = 8;
  guarded(r, "cor-7.5(4)", {{"positions", reach}}, [&] {
    json bad = json::array();
    for (std::int64_t k = -reach; k <= reach; ++k) {
      if (k >= 0 && k <= 2) continue;
      const DimVector expect = coxeter_transform(q, assigned(k), Direction::forward);
      if (expect != assigned(k + 2)) bad.push_back({{"k", k}, {"tau", to_string(expect)}, {"next", to_string(assigned(k + 2))}});
    }
    const auto s = kronecker_sequences(m, 10);
    for (std::size_t i = 1; i + 1 < s.preprojective.size(); ++i)
      for (std::size_t v = 0; v < 2; ++v) {
        if (s.preprojective[i + 1][v] != m * s.preprojective[i][v] - s.preprojective[i - 1][v])
          bad.push_back({{"recurrence", "P"}, {"i", i}});
        if (s.preinjective[i + 1][v] != m * s.preinjective[i][v] - s.preinjective[i - 1][v])
          bad.push_back({{"recurrence", "I"}, {"i", i}});
      }
    r.add({"cor-7.5(4)", bad.empty(), {{"positions", reach}}, json::array(), bad});
  });

  // dim Hom(X, X[t]) is the second coordinate at position t; X[i] + X[i+d] is
  // rigid for the 3-Calabi-Yau shift iff Hom vanishes in degrees 1 and 2 both ways.
  guarded(r, "thm-9.3", {{"offsets", reach}}, [&] {
    const auto h = [&](std::int64_t t) { return assigned(t)[1]; };
    json rigid = json::array();
    for (std::int64_t d = -reach; d <= reach; ++d)
      if (h(d + 1) == 0 && h(d + 2) == 0 && h(-d + 1) == 0 && h(-d + 2) == 0) rigid.push_back(d);
    r.add({"thm-9.3", rigid == json::array({0}), {{"offsets", reach}}, json::array({0}), rigid});

    const Rep p1 = Rep::projective(q, 1), i1 = Rep::injective(q, 0);
    const json got = {hom_ext(p1, i1).ext, hom_ext(i1, p1).ext};
    const json expected = {0, -euler_form(q, i1.dims(), p1.dims())};
    r.add({"thm-9.3", got == expected, {{"order", "Ext(P1,I1), Ext(I1,P1)"}}, expected, got});
  });

  r.finalize();
  r.ms = elapsed_ms(start);
  return r;
}

Report kac_rigid_check(const Quiver& q, const std::string& name, std::int64_t bound, std::size_t trials,
                       std::uint64_t seed) {
  const auto start = Clock::now();
  Report r;
  r.claim = "thm-7.1[" + name + "]";
  r.seed = seed;
  const std::size_t n = q.vertex_count();
  const json in = {{"quiver", name}, {"bound", bound}, {"trials", trials}};

  std::vector<DimVector> grid;
  DimVector d(n);
  while (true) {
    if (!d.is_zero()) grid.push_back(d);
    std::size_t v = 0;
    while (v < n && d[v] == bound) d[v++] = 0;
    if (v == n) break;
    ++d[v];
  }
  std::sort(grid.begin(), grid.end());

  const auto roots_vec = positive_real_roots(q, bound);
  const std::set<DimVector> roots(roots_vec.begin(), roots_vec.end());
  std::vector<DimVector> realized;
  std::size_t imaginary = 0;
  for (const auto& x : grid) {
    const std::int64_t t = tits_form(q, x);
    std::vector<std::int64_t> salt(x.entries());
    const json at = {{"quiver", name}, {"d", to_string(x)}};
    guarded(r, "kac", at, [&] {
      std::mt19937_64 rng = derived_rng(seed, salt);
      if (t <= 0) {
        ++imaginary;
        for (std::size_t s = 0; s < trials; ++s)
          if (is_rigid(Rep::random(q, x, kDefaultEntryBound, rng))) {
            r.add({"kac-imaginary", false, at, "no rigid sample", "rigid sample " + std::to_string(s)});
            break;
          }
      } else if (t == 1 && roots.count(x)) {
        Rep a = Rep::zero(q);
        try {
          a = generic_rigid_rep(q, x, trials, kDefaultEntryBound, rng);
        } catch (const GenericityError& e) {
          r.add({"kac-real", false, at, "rigid indecomposable", e.what()});
          return;
        }
        salt.push_back(1);
        std::mt19937_64 rng2 = derived_rng(seed, salt);
        const Rep b = generic_rigid_rep(q, x, trials, kDefaultEntryBound, rng2);
        if (!iso_check(a, b)) r.add({"kac-real", false, at, "isomorphic samples", "non-isomorphic samples"});
        realized.push_back(x);
      } else if (t == 1) {
        if (is_schur_root(q, x, trials, kDefaultEntryBound, rng))
          r.add({"kac-real", false, at, "not a Schur root", "Schur sample"});
      } else if (x.total() <= 4) {
        if (is_indecomposable(Rep::random(q, x, kDefaultEntryBound, rng)))
          r.add({"kac-decomposable", false, at, "decomposable", "indecomposable sample"});
      }
    });
  }
  r.add({"kac-real", realized == roots_vec, in, dims_json(roots_vec), dims_json(realized)});
  r.add({"kac-imaginary", true, in, "no rigid sample", std::to_string(imaginary) + " vectors"});
  r.finalize();
  r.ms = elapsed_ms(start);
  return r;
}

Quiver named_quiver(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'A')) {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 3) {
      const int k = std::stoi(digits);
      if (name[0] == 'K' && k >= 1) return Quiver::kronecker(k);
      if (name[0] == 'A' && k >= 1) return Quiver::linear(static_cast<std::size_t>(k));
    }
  }
  if (name == "1") return Quiver::linear(1);
  throw InputError("unknown quiver name '" + name + "'");
}

RunConfig default_config(std::uint64_t seed) {
  RunConfig c;
  c.seed = seed;
  c.campaigns.push_back({Campaign::Kind::theorem_1_2, 40, 6, kDefaultTrials, ""});
  c.campaigns.push_back({Campaign::Kind::theorem_1_3, 40, 6, kDefaultTrials, ""});
  for (const char* k : {"K2", "K3", "K6"}) c.campaigns.push_back({Campaign::Kind::kac, 8, 0, kDefaultTrials, k});
  for (const char* a : {"A2", "A3"}) c.campaigns.push_back({Campaign::Kind::kac, 3, 0, kDefaultTrials, a});
  return c;
}

std::vector<Report> run_all(const RunConfig& config) {
  std::vector<Report> out;
  for (const auto& c : config.campaigns) {
    switch (c.kind) {
      case Campaign::Kind::theorem_1_2: {
        ClusterOptions o;
        o.m = 3;
        o.seed = config.seed;
        o.trials = c.trials;
        out.push_back(verify_theorem_1_2(ClusterModel(o), c.bound, c.window));
        break;
      }
      case Campaign::Kind::theorem_1_3:
        out.push_back(verify_theorem_1_3(c.bound, config.seed));
        break;
      case Campaign::Kind::kac:
        out.push_back(kac_rigid_check(named_quiver(c.quiver), c.quiver, c.bound, c.trials, config.seed));
        break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.claim < b.claim; });
  return out;
}

}  // namespace kronlab
