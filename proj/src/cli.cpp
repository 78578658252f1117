#include "kronlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kronlab/clustercat.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/json_io.hpp"
#include "kronlab/repcat.hpp"
#include "kronlab/roots.hpp"
#include "kronlab/theoremlab.hpp"

namespace kronlab {

namespace {

struct Config {
  std::string command;
  int m = 0;
  std::int64_t bound = 40;
  std::int64_t window = 6;
  std::int64_t regular_bound = 4;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  std::string format;  // empty: per-command default
  std::vector<std::string> inputs;
  std::string output_path;
  bool all = false;
  std::string claim;
  std::size_t count = 5;
  std::int64_t start = 0;
  std::int64_t steps = 1;
  bool dump = false;
};

// Rows are sorted byte-wise and newline-terminated.
std::string tsv(std::vector<std::string> rows) {
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

std::string tsv_entries(const DimVector& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "\t" : "") + std::to_string(d[i]);
  return s;
}

nlohmann::json dims_array(const std::vector<DimVector>& ds) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& d : ds) a.push_back(to_json(d));
  return a;
}

std::string run_roots(const Config& c) {
  if ((c.m > 0) == !c.inputs.empty()) throw InputError("roots takes exactly one of --m and --in");
  if (c.inputs.size() > 1) throw InputError("roots takes a single --in quiver file");
  const Quiver q = c.m > 0 ? Quiver::kronecker(c.m) : quiver_from_json(read_json_file(c.inputs.front()));
  const auto roots = positive_real_roots(q, c.bound);
  if (c.format == "json") return json_line({{"bound", c.bound}, {"quiver", to_json(q)}, {"roots", dims_array(roots)}});
  std::vector<std::string> rows;
  for (const auto& d : roots) rows.push_back(tsv_entries(d));
  return tsv(rows);
}

std::string run_sequences(const Config& c) {
  // Entries grow roughly like m^count.
  if (static_cast<double>(c.count) * std::log2(static_cast<double>(c.m) + 1.0) > 60.0)
    throw InputError("--count too large for 64-bit dimension vectors at this --m");
  const auto s = kronecker_sequences(c.m, c.count);
  if (c.format == "json")
    return json_line({{"m", c.m}, {"preinjective", dims_array(s.preinjective)},
                      {"preprojective", dims_array(s.preprojective)}});
  auto row = [](const std::string& label, const std::vector<DimVector>& ds) {
    std::string r = label + "\t";
    for (std::size_t i = 0; i < ds.size(); ++i) r += (i ? " " : "") + to_string(ds[i]);
    return r;
  };
  return tsv({row("P", s.preprojective), row("I", s.preinjective)});
}

std::string run_rigid(const Config& c) {
  const auto rigid = rigid_indec_classify(c.m, c.bound, c.trials, c.seed);
  if (c.format == "json")
    return json_line({{"bound", c.bound}, {"m", c.m}, {"rigid", dims_array(rigid)}, {"seed", c.seed},
                      {"trials", c.trials}});
  std::vector<std::string> rows;
  for (const auto& d : rigid) rows.push_back(tsv_entries(d));
  return tsv(rows);
}

std::string run_hom(const Config& c) {
  if (c.inputs.size() != 2) throw InputError("hom takes exactly two --in representation files");
  const Rep x = rep_from_json(read_json_file(c.inputs[0]));
  const Rep y = rep_from_json(read_json_file(c.inputs[1]));
  if (!(x.quiver() == y.quiver())) throw InputError("the two representations live on different quivers");
  const HomExt he = hom_ext(x, y);
  const std::int64_t euler = euler_form(x.quiver(), x.dims(), y.dims());
  if (c.format == "json") {
    nlohmann::json j = {{"euler", euler}, {"ext", he.ext}, {"hom", he.hom}};
    if (c.dump) {
      j["source"] = to_json(x);
      j["target"] = to_json(y);
    }
    return json_line(j);
  }
  std::vector<std::string> rows = {"euler\t" + std::to_string(euler), "ext\t" + std::to_string(he.ext),
                                   "hom\t" + std::to_string(he.hom)};
  if (c.dump) {
    rows.push_back("source\t" + to_json(x).dump());
    rows.push_back("target\t" + to_json(y).dump());
  }
  return tsv(rows);
}

ClusterModel cluster_model(const Config& c) {
  ClusterOptions o;
  o.m = c.m;
  o.seed = c.seed;
  o.trials = c.trials;
  return ClusterModel(o);
}

std::string run_cluster(const Config& c) {
  const ClusterModel model = cluster_model(c);
  const Window w{c.window, c.bound, c.regular_bound};
  const auto objects = window_objects(model, w);
  if (c.format == "json") {
    nlohmann::json homs = nlohmann::json::array(), labels = nlohmann::json::array();
    nlohmann::json rigid = nlohmann::json::object();
    for (const auto& a : objects) {
      labels.push_back(a.label());
      rigid[a.label()] = model.is_self_rigid(a);
      for (const auto& b : objects)
        homs.push_back({{"dim", model.hom(a, b)}, {"source", a.label()}, {"target", b.label()}});
    }
    return json_line({{"hom", homs},
                      {"m", c.m},
                      {"objects", labels},
                      {"rigid", rigid},
                      {"window", {{"index_radius", w.index_radius},
                                  {"module_bound", w.module_bound},
                                  {"regular_bound", w.regular_bound}}}});
  }
  std::vector<std::string> rows;
  for (const auto& a : objects) {
    rows.push_back("rigid\t" + a.label() + "\t" + (model.is_self_rigid(a) ? "1" : "0"));
    for (const auto& b : objects)
      rows.push_back("hom\t" + a.label() + "\t" + b.label() + "\t" + std::to_string(model.hom(a, b)));
  }
  return tsv(rows);
}

std::string run_mutate(const Config& c) {
  const ClusterModel model = cluster_model(c);
  const Window w{c.window, c.bound, c.regular_bound};
  const std::size_t n = static_cast<std::size_t>(std::llabs(c.steps));
  const int width = static_cast<int>(std::to_string(n).size());
  TiltingSet t = standard_tilting(c.start);
  nlohmann::json walk = nlohmann::json::array();
  std::vector<std::string> rows;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto [lower, upper] = tilting_pair(t);
    const ClusterIndec x = c.steps > 0 ? lower : upper;
    TiltingSet next;
    try {
      next = mutate(model, t, x, w);
    } catch (const WindowError& e) {
      throw InputError("mutation walk leaves the window (" + std::string(e.what()) + "); raise --window");
    }
    std::ostringstream step;
    step << std::setw(width) << std::setfill('0') << k;
    rows.push_back(step.str() + "\t" + to_string(t) + "\t" + x.label() + "\t" + to_string(next));
    walk.push_back({{"at", x.label()}, {"from", to_string(t)}, {"step", k}, {"to", to_string(next)}});
    t = std::move(next);
  }
  if (c.format == "json")
    return json_line({{"m", c.m}, {"start", to_string(standard_tilting(c.start))}, {"walk", walk}});
  return tsv(rows);
}

std::string claim_of(const Campaign& c) {
  switch (c.kind) {
    case Campaign::Kind::theorem_1_2:
      return "thm-1.2";
    case Campaign::Kind::theorem_1_3:
      return "thm-1.3";
    case Campaign::Kind::kac:
      return "thm-7.1[" + c.quiver + "]";
  }
  return {};
}

std::string run_verify(const Config& c, bool& failed) {
  if (c.all == !c.claim.empty()) throw InputError("verify takes exactly one of --all and --claim");
  RunConfig config = default_config(c.seed);
  if (!c.all) {
    std::erase_if(config.campaigns, [&](const Campaign& k) { return claim_of(k) != c.claim; });
    if (config.campaigns.empty()) throw InputError("unknown claim " + c.claim);
  }
  const auto reports = run_all(config);
  for (const auto& r : reports) failed = failed || r.status == "fail";
  if (c.format == "json") {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    return json_line(a);
  }
  std::vector<std::string> rows;
  for (const auto& r : reports) {
    const auto failing = r.failing_checks();
    std::string names;
    for (std::size_t i = 0; i < failing.size(); ++i) names += (i ? "," : "") + failing[i];
    rows.push_back(r.claim + "\t" + r.status + "\t" + std::to_string(r.checks.size()) + "\t" +
                   (names.empty() ? "-" : names));
  }
  return tsv(rows);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Representations of Kronecker quivers and their cluster category", "kronlab"};
  app.require_subcommand(1);

  const auto m_range = CLI::Range(1, 1000);
  const auto pos = CLI::Range(std::int64_t{1}, std::int64_t{1} << 40);
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    s->add_option("--out", c.output_path, "write the result to this file instead of standard output");
  };
  auto add_sampling = [&](CLI::App* s) {
    s->add_option("--trials", c.trials, "samples per dimension vector")->check(CLI::Range(1, 1000000));
    s->add_option("--seed", c.seed, "root seed");
  };
  auto add_window = [&](CLI::App* s) {
    s->add_option("--m", c.m, "arrow count of the Kronecker quiver")->required()->check(CLI::Range(2, 1000));
    s->add_option("--window", c.window, "orbit index radius")->check(CLI::Range(0, 1000));
    s->add_option("--bound", c.bound, "entry bound for preprojective and preinjective modules")->check(pos);
    s->add_option("--regular-bound", c.regular_bound, "entry bound for regular bases")->check(CLI::Range(0, 45));
    add_sampling(s);
    add_format(s);
  };

  auto* roots = app.add_subcommand("roots", "positive real roots with entries <= bound");
  roots->add_option("--m", c.m, "Kronecker quiver with m arrows")->check(m_range);
  roots->add_option("--in", c.inputs, "quiver JSON file");
  roots->add_option("--bound", c.bound)->check(pos);
  add_format(roots);

  auto* seqs = app.add_subcommand("sequences", "preprojective and preinjective dimension vectors");
  seqs->add_option("--m", c.m)->required()->check(m_range);
  seqs->add_option("--count", c.count)->check(CLI::Range(1, 64));
  add_format(seqs);

  auto* rigid = app.add_subcommand("rigid", "rigid indecomposables with entries <= bound");
  rigid->add_option("--m", c.m)->required()->check(m_range);
  rigid->add_option("--bound", c.bound)->check(pos);
  add_sampling(rigid);
  add_format(rigid);

  auto* hom = app.add_subcommand("hom", "dim Hom and dim Ext^1 between two representation files");
  hom->add_option("--in", c.inputs, "representation JSON file (give two)")->required();
  hom->add_flag("--dump", c.dump, "echo both representations");
  add_format(hom);

  auto* cluster = app.add_subcommand("cluster", "Hom table and rigidity map of the cluster window");
  add_window(cluster);

  auto* mut = app.add_subcommand("mutate", "mutation walk from the standard tilting set C_start");
  add_window(mut);
  mut->add_option("--start", c.start)->check(CLI::Range(-1000, 1000));
  mut->add_option("--steps", c.steps, "positive: replace the lower summand; negative: the upper")
      ->check(CLI::Range(-1000, 1000));

  auto* verify = app.add_subcommand("verify", "run verification campaigns");
  verify->add_flag("--all", c.all, "every default campaign");
  verify->add_option("--claim", c.claim, "a single campaign: thm-1.2, thm-1.3, thm-7.1[K3], ...");
  verify->add_option("--seed", c.seed);
  add_format(verify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kronlab: " << one_line(e.what()) << "\n";
    return kExitInput;
  }

  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  if (c.format.empty()) c.format = c.command == "verify" ? "json" : "tsv";

  std::string text;
  bool failed = false;
  try {
    if (c.command == "roots") text = run_roots(c);
    else if (c.command == "sequences") text = run_sequences(c);
    else if (c.command == "rigid") text = run_rigid(c);
    else if (c.command == "hom") text = run_hom(c);
    else if (c.command == "cluster") text = run_cluster(c);
    else if (c.command == "mutate") text = run_mutate(c);
    else text = run_verify(c, failed);
  } catch (const InputError& e) {
    err << "kronlab: " << one_line(e.what()) << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "kronlab: " << one_line(e.what()) << "\n";
    return kExitFailed;
  }

  if (!c.output_path.empty()) {
    std::ofstream f(c.output_path, std::ios::binary);
    if (!(f << text)) {
      err << "kronlab: cannot write " << c.output_path << "\n";
      return kExitInput;
    }
  } else {
    out << text;
  }
  return failed ? kExitFailed : kExitOk;
}

}  // namespace kronlab
