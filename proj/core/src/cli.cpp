#include "cck/cli.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cck/corpus.hpp"
#include "cck/error.hpp"
#include "cck/expansion.hpp"
#include "cck/fixtures.hpp"
#include "cck/io.hpp"
#include "cck/oracle.hpp"

namespace cck {

namespace {

struct Options {
  std::string surface;
  std::string arc;
  std::string coeffs;
  std::size_t budget = 0;
  unsigned jobs = 1;
  bool compare = false;
  std::string corpus = "full";
};

SurfaceFile load_surface(const std::string& path) {
  for (const ReferenceFixture* f : reference_fixtures())
    if (path == "@" + f->name) {
      std::istringstream in(f->surface_text);
      return read_surface(in);
    }
  try {
    return read_surface_file(path);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

std::vector<Arc> selected_arcs(const Options& o, const SurfaceFile& f) {
  if (!o.arc.empty()) return {parse_arc(o.arc)};
  if (f.arcs.empty()) throw ParseError(0, "no --arc given and the surface file lists no arcs");
  return f.arcs;
}

std::optional<std::vector<TropicalSemifield::Element>> load_coeffs(const Options& o, std::size_t n) {
  if (o.coeffs.empty()) return std::nullopt;
  try {
    return read_coefficients_file(o.coeffs, n);
  } catch (const ParseError& e) {
    throw ParseError(0, o.coeffs + ": " + e.what());
  }
}

void print_record(std::ostream& out, bool labelled, const Arc& arc, const std::string& text) {
  if (labelled) out << to_string(arc) << ": ";
  out << text << '\n';
}

int run_per_arc(const std::string& command, const Options& o, std::ostream& out) {
  if (o.surface.empty()) throw ParseError(0, "--surface is required");
  const SurfaceFile f = load_surface(o.surface);
  const Triangulation& t = f.triangulation;
  const auto arcs = selected_arcs(o, f);
  const auto yhat = load_coeffs(o, t.n());
  if (yhat && command != "expand" && command != "oracle")
    throw ParseError(0, "--coeffs applies to expand and oracle only");
  const bool labelled = arcs.size() > 1;
  const VariableNames u_names{"x", "u"};
  for (const Arc& arc : arcs) {
    if (command == "expand") {
      if (yhat) {
        const TropicalSemifield semifield(yhat->empty() ? 0 : (*yhat)[0].size());
        print_record(out, labelled, arc, to_string(expand_with_coefficients(t, arc, semifield, *yhat), u_names));
      } else {
        print_record(out, labelled, arc, to_string(expand_principal(t, arc)));
      }
    } else if (command == "fpoly") {
      print_record(out, labelled, arc, to_string(f_polynomial(t, arc)));
    } else if (command == "gvector") {
      out << gvector_json(arc, g_vector(t, arc)) << '\n';
    } else if (command == "chi") {
      out << chi_json(arc, chi_table(t, arc)) << '\n';
    } else {
      OracleOptions options;
      options.budget = o.budget;
      if (yhat) options.matrix = coefficient_matrix(t, *yhat);
      const OracleResult r = oracle_expand(t, arc, options);
      if (labelled) out << to_string(arc) << '\n';
      out << to_string(r.value, yhat ? u_names : VariableNames{}) << "\nflips:";
      for (int k : r.flip_sequence) out << ' ' << k;
      out << "\nseeds: " << r.seeds_visited << '\n';
    }
  }
  return 0;
}

int run_compare(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CorpusSurface> corpus;
  if (!o.surface.empty()) {
    SurfaceFile f = load_surface(o.surface);
    auto arcs = selected_arcs(o, f);
    corpus.push_back({o.surface, std::move(f.triangulation), std::move(arcs)});
  } else if (o.corpus == "full") {
    corpus = full_corpus();
  } else if (o.corpus == "acceptance") {
    corpus = acceptance_corpus();
  } else {
    throw ParseError(0, "unknown corpus '" + o.corpus + "' (expected full or acceptance)");
  }

  struct Case {
    const CorpusSurface* surface;
    const Arc* arc;
  };
  std::vector<Case> cases;
  for (const auto& s : corpus)
    for (const auto& a : s.arcs) cases.push_back({&s, &a});

  // 0: equal, 1: different, 2: error
  std::vector<int> status(cases.size(), 0);
  std::vector<std::string> messages(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const Triangulation& t = cases[i].surface->triangulation;
      const Arc& arc = *cases[i].arc;
      try {
        OracleOptions options;
        options.budget = o.budget;
        if (!(expand_principal(t, arc) == oracle_expand(t, arc, options).value)) status[i] = 1;
      } catch (const Error& e) {
        status[i] = 2;
        messages[i] = e.what();
      }
    }
  };
  unsigned jobs = o.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.jobs;
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  std::size_t diff = 0, errors = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (status[i] == 0) continue;
    (status[i] == 1 ? diff : errors) += 1;
    err << (status[i] == 1 ? "differ: " : "error: ") << cases[i].surface->name << ": " << to_string(*cases[i].arc);
    if (status[i] == 2) err << ": " << messages[i];
    err << '\n';
  }
  if (diff == 0 && errors == 0) {
    out << "EQUAL n_cases=" << cases.size() << '\n';
    return 0;
  }
  out << "DIFFER n_cases=" << cases.size() << " n_diff=" << diff << " n_errors=" << errors << '\n';
  return diff > 0 ? 1 : 3;
}

struct Checker {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    out << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  }
};

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

int run_selftest(std::ostream& out) {
  Checker c{out};
  for (const ReferenceFixture* f : reference_fixtures()) {
    std::istringstream in(f->surface_text);
    const SurfaceFile file = read_surface(in);
    const Triangulation& t = file.triangulation;
    const Arc& arc = file.arcs.at(0);
    const std::string& name = f->name;

    const Expansion e = expand(t, arc);
    std::vector<std::string> paths;
    for (const auto& p : e.paths) paths.push_back(to_string(p));
    std::vector<std::string> expected = f->paths;
    std::sort(paths.begin(), paths.end());
    std::sort(expected.begin(), expected.end());
    c.check(paths == expected, name + ": " + std::to_string(e.paths.size()) + " complete paths");
    c.check(to_string(e.polynomial) == to_string(f->expansion), name + ": expansion");
    c.check(oracle_expand(t, arc).value == e.polynomial, name + ": mutation oracle agrees");

    const GVector g = g_vector(t, e);
    c.check(g.entries == f->g, name + ": g-vector " + join(g.entries));
    c.check(g.minus == f->minus, name + ": I- " + join(g.minus));
    if (g.plus == f->plus) {
      c.check(true, name + ": I+ " + join(g.plus));
    } else if (name == "octagon") {
      out << "note " << name << ": I+ " << join(g.plus) << ", published " << join(f->plus)
          << "; the last boundary index follows the path alpha^0\n";
    } else {
      c.check(false, name + ": I+ " + join(g.plus) + ", expected " + join(f->plus));
    }

    const ChiTable chi = chi_table(t, e);
    std::size_t sum = 0;
    for (const auto& entry : chi.entries) sum += entry.count;
    c.check(sum == e.paths.size(), name + ": chi values sum to the path count");
  }
  {
    std::istringstream in(annulus_fixture().surface_text);
    const SurfaceFile file = read_surface(in);
    const ChiTable chi = chi_table(file.triangulation, file.arcs.at(0));
    std::size_t value = 0;
    for (const auto& entry : chi.entries)
      if (entry.e == std::vector<int>{1, 1, 1, 1}) value = entry.count;
    c.check(value == 2, "annulus: chi at e = (1,1,1,1) is " + std::to_string(value));
  }
  out << (c.failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return c.failures == 0 ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster variables of unpunctured surfaces from complete paths", "cck"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "surface file, or @octagon / @annulus");
    sub->add_option("--arc", o.arc, "arc: 'chord a b', 'annarc x y w', 'band d i.. / t0' or 'edge e'");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"expand", "Laurent expansion with principal coefficients"},
      {"fpoly", "F-polynomial"},
      {"gvector", "g-vector with I+ and I-"},
      {"chi", "path counts by coefficient exponent"},
      {"oracle", "cluster variable by seed mutation"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "expand" || name == "oracle") sub->add_option("--coeffs", o.coeffs, "coefficient file");
    if (name == "oracle") {
      sub->add_option("--budget", o.budget, "triangulations per search, 0 for 10*d");
      sub->add_flag("--compare", o.compare, "compare with the expansion over a corpus or the given surface");
      sub->add_option("--corpus", o.corpus, "full or acceptance")->check(CLI::IsMember({"full", "acceptance"}));
      sub->add_option("--jobs", o.jobs, "worker threads for --compare, 0 for all cores");
    }
  }
  app.add_subcommand("selftest", "check the bundled reference examples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "selftest") return run_selftest(out);
    if (command == "oracle" && o.compare) return run_compare(o, out, err);
    return run_per_arc(command, o, out);
  } catch (const ParseError& e) {
    err << "cck: parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "cck: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace cck
