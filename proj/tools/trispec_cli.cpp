// trispec: spectra of finite thick-subcategory lattices from the command line.
//
// Exit codes: 0 success, 1 a verification failed, 2 input error, 3 a point
// or size cap was exceeded.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "trispec/catalog.hpp"
#include "trispec/error.hpp"
#include "trispec/io.hpp"
#include "trispec/oracle.hpp"
#include "trispec/scheme_models.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/tensor.hpp"

using namespace trispec;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Loaded {
  DocumentKind kind;
  std::string label;
  SpecSpace space;
  ThickLattice lattice;
  SchemeModel model;
};

Loaded from_model(SchemeModel m, std::string label) {
  Loaded in;
  in.kind = DocumentKind::model;
  in.label = std::move(label);
  in.space = m.space;
  in.lattice = from_support_data(in.space);
  in.model = std::move(m);
  return in;
}

/// Parses the file and builds the lattice it describes (classified for
/// spaces and models).
Loaded load(const std::string& path) {
  json doc = read_document(path);
  Loaded in;
  in.kind = detect_kind(doc);
  in.label = path;
  switch (in.kind) {
    case DocumentKind::space:
      in.space = space_from_json(doc);
      in.lattice = from_support_data(in.space);
      break;
    case DocumentKind::lattice:
      in.lattice = lattice_from_json(doc);
      if (in.lattice.is_classified()) in.space = *in.lattice.space();
      break;
    case DocumentKind::model:
      in.model = model_from_json(doc);
      in.space = in.model.space;
      in.lattice = from_support_data(in.space);
      break;
    case DocumentKind::spectrum:
      throw InputError("spectrum reports are outputs, not inputs");
    case DocumentKind::catalog:
      throw InputError("model catalogs are only accepted by 'verify'");
  }
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string join_ids(const ThickLattice& lat, const std::vector<std::size_t>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? ", " : "") + lat.id(elems[i]);
  return out;
}

std::string facts_of(const Report& r) {
  std::string out;
  for (const auto& [k, v] : r.facts) out += (out.empty() ? "" : ", ") + k + "=" + v;
  return out;
}

// ---------------------------------------------------------------- suites

enum Suite : unsigned {
  kRcst = 1u << 0,
  kCls = 1u << 1,
  kQuot = 1u << 2,
  kTensor = 1u << 3,
  kPrid = 1u << 4,
  kTwoprm = 1u << 5,
  kOpenness = 1u << 6,
  kSg = 1u << 7,
  kPerf = 1u << 8,
  kMt1 = 1u << 9,
  kLem = 1u << 10,
  kOracle = 1u << 11,
  kAll = (1u << 12) - 1,
};

Report quot_suite(const ThickLattice& lat) {
  Report r;
  r.name = "quot";
  for (std::size_t k = 0; k < lat.size(); ++k) {
    auto q = induced_immersion(lat, k);
    for (const auto& v : q.report.violations) r.fail("k=" + lat.id(k) + ": " + v);
  }
  r.note("quotients", lat.size());
  return r;
}

Report lem_suite(const SpecSpace& space) {
  Report r;
  r.name = "lem";
  std::vector<Mask> fast = prime_spcl(space);
  std::sort(fast.begin(), fast.end(), canonical_less);
  r.check(std::adjacent_find(fast.begin(), fast.end()) == fast.end(), "W_x not distinct");
  r.check(fast == oracle::scan_prime_subsets(space), "W_x family differs from the subset scan");
  r.note("points", space.size());
  return r;
}

Report oracle_suite(const ThickLattice& lat) {
  Report r;
  r.name = "oracle";
  auto fast = primes(lat);
  r.check(fast == oracle::scan_primes(lat), "primes differ from the definition scan");
  r.note("primes", fast.size());
  return r;
}

void lattice_suites(const ThickLattice& lat, unsigned suites, std::vector<Report>& out) {
  if (suites & kMt1) {
    Report r = verify_point_closures(spectrum(lat));
    r.name = "mt1";
    out.push_back(r);
  }
  if (suites & kCls) {
    out.push_back(verify_radicals(lat));
    out.push_back(verify_cls(lat));
  }
  if (suites & kQuot) out.push_back(quot_suite(lat));
  if (suites & kOracle) out.push_back(oracle_suite(lat));
  if (lat.is_classified() && (suites & (kTensor | kPrid | kTwoprm))) {
    TensorLattice tl(lat);
    if (suites & kTensor) {
      out.push_back(verify_bal(tl));
      out.push_back(verify_int(tl));
      out.push_back(verify_cl(tl));
    }
    if (suites & kPrid) out.push_back(verify_prid(tl));
    if (suites & kTwoprm) {
      Report r = verify_pp_twoprm(tl);
      out.push_back(r);
    }
  }
}

std::vector<Report> run_suites(const Loaded& in, unsigned suites) {
  std::vector<Report> out;
  if (in.kind != DocumentKind::lattice || in.lattice.is_classified()) {
    if (suites & kRcst) out.push_back(rcst_map(in.space).report);
    if (suites & kLem) out.push_back(lem_suite(in.space));
  }
  lattice_suites(in.lattice, suites, out);
  if (in.kind == DocumentKind::model) {
    if (suites & kPerf) out.push_back(perf_immersion(in.model).report);
    if (suites & kSg) {
      try {
        out.push_back(sg_immersion(in.model).report);
      } catch (const ClassificationUnavailable& e) {
        Report r;
        r.name = "sg-immersion";
        r.warn(e.what());
        out.push_back(r);
      }
    }
    if (suites & kOpenness) out.push_back(loci_openness_check(in.model));
  }
  return out;
}

std::string report_line(const std::string& label, const Report& r) {
  std::string line = label + ": " + r.name + " " + r.status();
  if (r.name == "twoprm" && r.passed()) {
    std::string a, b;
    for (const auto& [k, v] : r.facts) {
      if (k == "primes") a = v;
      if (k == "prime_ideals") b = v;
    }
    line += " (" + a + " = " + b + " primes)";
  } else if (!r.facts.empty()) {
    line += " (" + facts_of(r) + ")";
  }
  for (const auto& v : r.violations) line += "\n    " + v;
  for (const auto& w : r.warnings) line += "\n    " + w;
  return line;
}

/// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<T> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(const std::string& input, const std::string& dot, const std::string& json_out, bool enumerate,
                 bool annotate) {
  Loaded in = load(input);
  SpectrumSpace spec = spectrum(in.lattice);
  if (enumerate && in.kind != DocumentKind::lattice) {
    auto fam = enumerate_spcl(in.space);
    std::cout << fam.size() << " specialization-closed subsets:";
    for (Mask m : fam.members) std::cout << ' ' << in.space.format_set(m);
    std::cout << '\n';
  }
  std::cout << spec.size() << " primes: ";
  for (std::size_t p = 0; p < spec.size(); ++p) std::cout << (p ? ", " : "") << spec.point_ids[p];
  std::cout << '\n';
  for (std::size_t p = 0; p < spec.size(); ++p)
    std::cout << "  " << spec.point_ids[p] << " < " << spec.witness_ids[p] << '\n';
  std::cout << spec.closed_sets.size() << " closed sets\n";
  Report mt1 = verify_point_closures(spec);
  mt1.name = "mt1";
  if (!dot.empty()) write_output(dot, to_dot(spec, annotate));
  if (!json_out.empty()) write_output(json_out, dump(to_json(spec, {mt1})));
  return mt1.passed() ? 0 : kExitFail;
}

int cmd_verify(const std::string& input, int all_posets, unsigned suites, unsigned jobs, bool verbose) {
  if (suites == 0) suites = kAll;
  if (all_posets >= 0) {
    if (all_posets > 5) throw InputError("--all-posets is limited to n <= 5");
    auto posets = oracle::all_posets(static_cast<std::size_t>(all_posets), false);
    auto results = parallel_map<std::vector<Report>>(posets.size(), jobs, [&](std::size_t i) {
      Loaded in{DocumentKind::space, "poset#" + std::to_string(i), posets[i], from_support_data(posets[i]), {}};
      return run_suites(in, suites);
    });
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (pass, total)
    std::vector<std::string> order;
    bool ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (const auto& r : results[i]) {
        if (!tally.count(r.name)) order.push_back(r.name);
        auto& [pass, total] = tally[r.name];
        ++total;
        if (r.passed()) ++pass;
        ok = ok && r.passed();
        if (verbose || !r.passed()) std::cout << report_line("poset#" + std::to_string(i), r) << '\n';
      }
    }
    for (const auto& name : order) {
      auto [pass, total] = tally[name];
      if (pass == total)
        std::cout << name << ": all " << total << " labeled posets PASS\n";
      else
        std::cout << name << ": " << total - pass << " of " << total << " labeled posets FAIL\n";
    }
    return ok ? 0 : kExitFail;
  }
  if (input.empty()) throw InputError("verify needs an input file or --all-posets");
  std::vector<Loaded> instances;
  json doc = read_document(input);
  if (detect_kind(doc) == DocumentKind::catalog) {
    for (auto& m : models_from_catalog(doc)) {
      std::string label = input + ":" + m.space.name();
      instances.push_back(from_model(std::move(m), std::move(label)));
    }
  } else {
    instances.push_back(load(input));
  }
  auto results = parallel_map<std::vector<Report>>(instances.size(), jobs,
                                                   [&](std::size_t i) { return run_suites(instances[i], suites); });
  bool ok = true;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (const auto& r : results[i]) {
      std::cout << report_line(instances[i].label, r) << '\n';
      ok = ok && r.passed();
    }
  return ok ? 0 : kExitFail;
}

int cmd_quotient(const std::string& input, const std::string& element, const std::string& out) {
  Loaded in = load(input);
  auto [q, map] = quotient(in.lattice, element);
  write_output(out, dump(to_json(q)));
  return 0;
}

int cmd_augment(const std::string& input, const std::vector<std::string>& labels, const std::string& out) {
  Loaded in = load(input);
  ThickLattice aug = augment(in.lattice, labels);
  write_output(out, dump(to_json(aug)));
  std::cerr << "augmented lattice: " << aug.size() << " elements, spectrum " << spectrum(aug).size()
            << " points\n";
  return 0;
}

int cmd_balmer(const std::string& input, const std::string& out, const std::string& dot) {
  Loaded in = load(input);
  TensorLattice tl(in.lattice);
  SpectrumSpace bs = balmer_spectrum(tl);
  std::cout << bs.size() << " prime ideals: ";
  for (std::size_t p = 0; p < bs.size(); ++p) std::cout << (p ? ", " : "") << bs.point_ids[p];
  std::cout << '\n';
  Report cl = verify_cl(tl);
  Report tw = verify_pp_twoprm(tl);
  std::cout << report_line(in.label, cl) << '\n' << report_line(in.label, tw) << '\n';
  if (!out.empty()) write_output(out, dump(to_json(bs, {cl, tw})));
  if (!dot.empty()) write_output(dot, to_dot(bs));
  return cl.passed() && tw.passed() ? 0 : kExitFail;
}

int cmd_model(const std::string& input) {
  Loaded in = load(input);
  if (in.kind != DocumentKind::model) throw InputError("'model' needs a model document");
  const SchemeModel& m = in.model;
  const SpecSpace& X = m.space;
  std::cout << "Sing = " << X.format_set(sing_locus(m)) << "\nCI = " << X.format_set(ci_locus(m))
            << "\nHS = " << X.format_set(hs_locus(m)) << '\n';
  std::cout << "gorenstein = " << (m.gorenstein() ? "yes" : "no")
            << ", separated = " << (m.separated ? "yes" : "no") << '\n';
  for (std::size_t x = 0; x < X.size(); ++x) {
    auto p = locus_prime_predicates(m, x);
    std::cout << "  " << X.points()[x] << " [" << to_string(m.tags[x]) << "]: S^b prime = "
              << (p.sb_prime ? "yes" : "no") << ", S^sg prime = " << to_string(p.sg_prime) << '\n';
  }
  bool ok = true;
  Report perf = perf_immersion(m).report;
  std::cout << report_line(in.label, perf) << '\n';
  ok = ok && perf.passed();
  try {
    Report sg = sg_immersion(m).report;
    std::cout << report_line(in.label, sg) << '\n';
    ok = ok && sg.passed();
  } catch (const ClassificationUnavailable& e) {
    std::cout << in.label << ": sg-immersion WARN\n    " << e.what() << '\n';
  }
  std::cout << report_line(in.label, loci_openness_check(m)) << '\n';
  return ok ? 0 : kExitFail;
}

int cmd_export_dot(const std::string& input, bool spectrum_view, const std::string& out) {
  Loaded in = load(input);
  if (spectrum_view)
    write_output(out, to_dot(spectrum(in.lattice), true));
  else if (in.kind == DocumentKind::lattice)
    write_output(out, to_dot(in.lattice));
  else
    write_output(out, to_dot(in.space));
  return 0;
}

std::uint64_t naive_poset_count(std::size_t n) {
  // Every relation on n points, filtered for antisymmetry and transitivity.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::uint64_t count = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << slots.size()); ++r) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((r >> k) & 1) rel[slots[k].first][slots[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (i != k && rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

int cmd_selftest() {
  bool ok = true;
  auto line = [&](const std::string& what, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t labeled = oracle::all_posets(n, false).size();
    std::size_t unlabeled = oracle::all_posets(n, true).size();
    std::string what = "posets n=" + std::to_string(n) + ": " + std::to_string(labeled) + " labeled, " +
                       std::to_string(unlabeled) + " unlabeled";
    if (n <= 4) {
      auto naive = naive_poset_count(n);
      what += " (relation filter " + std::to_string(naive) + ")";
      line(what, naive == labeled);
    } else {
      line(what, true);
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    bool pass = true;
    oracle::for_each_poset(n, false, [&](const SpecSpace& s) { pass = pass && lem_suite(s).passed(); });
    line("prime specialization-closed subsets, all posets n=" + std::to_string(n), pass);
  }
  for (const auto& lat : catalog::explicit_lattices())
    line("primes vs scan on " + std::to_string(lat.size()) + "-element explicit lattice",
         primes(lat) == oracle::scan_primes(lat));
  auto grid = grid_space(4, 5);
  line("grid 4x5 down-sets: " + std::to_string(count_spcl(grid)),
       count_spcl(grid) == oracle::grid_downsets_transfer(4, 5));
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trispec: prime thick subcategories and spectra of finite lattice models"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Reserved; every computation is deterministic");

  std::string input, dot, json_out, out, element;
  bool enumerate = false, annotate = false, verbose = false, spectrum_view = false;
  int all_posets = -1;
  unsigned jobs = 1;
  std::vector<std::string> labels;
  std::map<std::string, bool> flags;

  auto* spec_cmd = app.add_subcommand("spectrum", "Primes, witnesses and topology of a lattice");
  spec_cmd->add_option("input", input, "Space, lattice or model JSON")->required();
  spec_cmd->add_option("--dot", dot, "Write the spectrum Hasse diagram");
  spec_cmd->add_option("--json", json_out, "Write the spectrum report");
  spec_cmd->add_flag("--enumerate", enumerate, "List the specialization-closed subsets");
  spec_cmd->add_flag("--annotate", annotate, "Label DOT nodes with witnesses");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("input", input, "Space, lattice or model JSON");
  verify_cmd->add_option("--all-posets", all_posets, "Run on every labeled poset with n points (n <= 5)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads");
  verify_cmd->add_flag("--verbose", verbose, "One line per instance");
  for (const char* f : {"rcst", "cls", "quot", "tensor", "prid", "twoprm", "openness", "sg", "perf", "mt1",
                        "lem", "oracle"})
    verify_cmd->add_flag(std::string("--") + f, flags[f]);

  auto* quot_cmd = app.add_subcommand("quotient", "Interval above an element");
  quot_cmd->add_option("input", input)->required();
  quot_cmd->add_option("element", element)->required();
  quot_cmd->add_option("-o,--output", out);

  auto* aug_cmd = app.add_subcommand("augment", "Add discrete atoms");
  aug_cmd->add_option("input", input)->required();
  aug_cmd->add_option("labels", labels)->required();
  aug_cmd->add_option("-o,--output", out);

  auto* bal_cmd = app.add_subcommand("balmer", "Prime ideals of a classified model");
  bal_cmd->add_option("input", input)->required();
  bal_cmd->add_option("-o,--output", out);
  bal_cmd->add_option("--dot", dot);

  auto* model_cmd = app.add_subcommand("model", "Loci, predicates and immersions of a model");
  model_cmd->add_option("input", input)->required();

  app.add_subcommand("selftest", "Generator counts and oracle cross-checks");

  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram of a space, lattice or spectrum");
  dot_cmd->add_option("input", input)->required();
  dot_cmd->add_flag("--spectrum", spectrum_view);
  dot_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (spec_cmd->parsed()) return cmd_spectrum(input, dot, json_out, enumerate, annotate);
    if (verify_cmd->parsed()) {
      static const std::map<std::string, unsigned> bits{
          {"rcst", kRcst},     {"cls", kCls}, {"quot", kQuot}, {"tensor", kTensor}, {"prid", kPrid},
          {"twoprm", kTwoprm}, {"openness", kOpenness},       {"sg", kSg},         {"perf", kPerf},
          {"mt1", kMt1},       {"lem", kLem}, {"oracle", kOracle}};
      unsigned suites = 0;
      for (const auto& [name, set] : flags)
        if (set) suites |= bits.at(name);
      return cmd_verify(input, all_posets, suites, jobs, verbose);
    }
    if (quot_cmd->parsed()) return cmd_quotient(input, element, out);
    if (aug_cmd->parsed()) return cmd_augment(input, labels, out);
    if (bal_cmd->parsed()) return cmd_balmer(input, out, dot);
    if (model_cmd->parsed()) return cmd_model(input);
    if (dot_cmd->parsed()) return cmd_export_dot(input, spectrum_view, out);
    return cmd_selftest();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
