#include "relcomm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "relcomm/catalog.hpp"
#include "relcomm/classifier.hpp"
#include "relcomm/conjecture_lab.hpp"
#include "relcomm/errors.hpp"
#include "relcomm/group_spec.hpp"
#include "relcomm/parallel.hpp"
#include "relcomm/report.hpp"

namespace relcomm {

namespace {

struct Options {
  std::size_t cap = kDefaultLatticeCap;
  unsigned threads = 1;
  std::string format = "json";
  std::string out_path;
  bool timings = false;

  // group input
  std::string spec_file;
  std::string group_json;

  std::size_t max_order = 0;
  std::string catalog_path;
  std::string check = "all";
  bool pairs = false;
  std::string pair;
  bool allow_heavy = false;
};

std::size_t order_cap(Options const& o) { return std::max(o.cap, kDefaultOrderCap); }

std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup input_group(Options const& o) {
  if (o.group_json.empty() == o.spec_file.empty())
    throw InputError("give exactly one of a spec file or --group JSON");
  auto spec = parse_group_spec(o.group_json.empty() ? read_text(o.spec_file) : o.group_json);
  return build_group(spec, order_cap(o));
}

SpectrumOptions spectrum_options(Options const& o) {
  SpectrumOptions s;
  s.threads = o.threads;
  return s;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<AuditRecord> group_audits(SubgroupLattice const& lat, DegreeSpectrum const& spec,
                                      std::string const& which) {
  auto want = [&](char const* c) { return which == "all" || which == c; };
  std::vector<AuditRecord> out;
  if (want("chain")) out.push_back(check_chain_bound(lat, spec));
  if (want("omega")) out.push_back(check_omega_bound(lat, spec));
  if (want("prime-power")) {
    try {
      out.push_back(check_prime_power_orders(lat, spec));
    } catch (Inapplicable const&) {
    }
  }
  if (want("distinct-prime")) out.push_back(check_distinct_prime_degrees(lat));
  return out;
}

ReportRecord scan_one(CatalogEntry const& e, Options const& o) {
  using clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, double>> t;
  auto t0 = clock::now();
  auto g = build_group(e.spec, order_cap(o));
  t.emplace_back("build", ms_since(t0));
  t0 = clock::now();
  auto lat = all_subgroups(g, o.cap);
  t.emplace_back("lattice", ms_since(t0));
  t0 = clock::now();
  auto spec = degree_spectrum(lat);
  t.emplace_back("spectrum", ms_since(t0));
  t0 = clock::now();
  auto rep = verify_classification(lat, spec);
  t.emplace_back("classify", ms_since(t0));
  t0 = clock::now();
  auto rec = make_record(rep);
  rec.name = e.name;
  rec.audits = group_audits(lat, rep.computed, "all");
  t.emplace_back("audit", ms_since(t0));
  rec.timings = std::move(t);
  return rec;
}

std::vector<CatalogEntry> scan_entries(Options const& o) {
  std::size_t max_order = o.max_order ? o.max_order : o.cap;
  if (max_order > o.cap)
    throw LatticeCapExceeded("--max-order " + std::to_string(max_order) + " exceeds the lattice cap " +
                             std::to_string(o.cap));
  std::vector<CatalogEntry> entries;
  if (!o.catalog_path.empty()) {
    for (auto& e : load_catalog_file(o.catalog_path))
      if (e.order == 0 || e.order <= max_order) entries.push_back(std::move(e));
  } else {
    entries = builtin_catalog(max_order);
  }
  return entries;
}

std::string audit_tsv(AuditRecord const& a) {
  return a.subject + '\t' + check_name(a.check) + '\t' + (a.holds ? "true" : "false") + '\t' +
         a.witness.value_or("");
}

class Output {
 public:
  Output(Options const& o, std::ostream& fallback) : os_(&fallback) {
    if (!o.out_path.empty()) {
      file_.open(o.out_path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + o.out_path);
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_spectrum(Options const& o, std::ostream& out) {
  auto g = input_group(o);
  auto lat = all_subgroups(g, o.cap);
  auto spec = degree_spectrum(lat, spectrum_options(o));
  Output dst(o, out);
  if (o.format == "tsv") {
    *dst << "value\torder\tgenerators\n";
    for (std::size_t k = 0; k < spec.size(); ++k) {
      auto const& h = lat[spec.witnesses[k]];
      std::string gens;
      for (auto x : small_generating_set(g, h)) gens += (gens.empty() ? "" : ",") + std::to_string(x);
      *dst << spec.values[k].str() << '\t' << h.order() << '\t' << gens << '\n';
    }
  } else {
    *dst << spectrum_json(g, lat, spec).dump() << '\n';
  }
  return 0;
}

int cmd_classify(Options const& o, std::ostream& out, bool verify) {
  auto g = input_group(o);
  auto lat = all_subgroups(g, o.cap);
  auto rep = verify_classification(lat, spectrum_options(o));
  Output dst(o, out);
  if (o.format == "tsv")
    *dst << tsv_header() << '\n' << tsv_line(make_record(rep)) << '\n';
  else
    *dst << classification_json(rep).dump() << '\n';
  return verify && rep.verdict == Verdict::Mismatch ? 1 : 0;
}

int cmd_scan(Options const& o, std::ostream& out) {
  auto entries = scan_entries(o);
  std::vector<ReportRecord> records(entries.size());
  parallel_for(entries.size(), o.threads, [&](std::size_t i) { records[i] = scan_one(entries[i], o); });
  std::stable_sort(records.begin(), records.end(),
                   [](auto const& a, auto const& b) { return a.name < b.name; });

  bool failed = false;
  Output dst(o, out);
  if (o.format == "tsv") *dst << tsv_header() << '\n';
  for (auto const& r : records) {
    if (r.verdict == Verdict::Mismatch) failed = true;
    for (auto const& a : r.audits) failed = failed || !a.holds;
    if (o.format == "tsv")
      *dst << tsv_line(r) << '\n';
    else
      *dst << record_json(r, o.timings).dump() << '\n';
  }
  return failed ? 1 : 0;
}

int cmd_audit(Options const& o, std::ostream& out) {
  static std::vector<std::string> const checks{"chain", "omega", "product", "prime-power", "distinct-prime", "all"};
  if (std::find(checks.begin(), checks.end(), o.check) == checks.end())
    throw InputError("unknown check " + o.check);

  std::vector<AuditRecord> records;
  if (o.check != "product") {
    auto entries = scan_entries(o);
    std::vector<std::vector<AuditRecord>> per(entries.size());
    parallel_for(entries.size(), o.threads, [&](std::size_t i) {
      auto g = build_group(entries[i].spec, order_cap(o)).renamed(entries[i].name);
      auto lat = all_subgroups(g, o.cap);
      per[i] = group_audits(lat, degree_spectrum(lat), o.check);
    });
    for (auto& v : per)
      for (auto& a : v) records.push_back(std::move(a));
  }
  if (o.check == "product" || o.pairs) {
    auto pairs = coprime_pairs();
    std::vector<std::vector<AuditRecord>> per(pairs.size());
    parallel_for(pairs.size(), o.threads, [&](std::size_t i) {
      auto h = named_group(pairs[i].first, order_cap(o));
      auto k = named_group(pairs[i].second, order_cap(o));
      if (h.order() * k.order() > o.cap) return;
      per[i] = {product_spectrum(h, k, o.cap), check_product_cardinality(h, k, o.cap)};
    });
    for (auto& v : per)
      for (auto& a : v) records.push_back(std::move(a));
  }
  std::stable_sort(records.begin(), records.end(), [](auto const& a, auto const& b) {
    return std::pair(a.subject, static_cast<int>(a.check)) < std::pair(b.subject, static_cast<int>(b.check));
  });

  bool failed = false;
  Output dst(o, out);
  if (o.format == "tsv") *dst << "subject\tcheck\tholds\twitness\n";
  for (auto const& a : records) {
    failed = failed || !a.holds;
    if (o.format == "tsv")
      *dst << audit_tsv(a) << '\n';
    else
      *dst << audit_json(a).dump() << '\n';
  }
  return failed ? 1 : 0;
}

int cmd_counterexample(Options const& o, std::ostream& out) {
  FiniteGroup h, k;
  if (o.pair == "a4s4") {
    h = named_group("A4");
    k = named_group("S4");
  } else if (o.pair == "s4s4") {
    if (!o.allow_heavy)
      throw InputError("s4s4 enumerates the 2976 subgroups of a group of order 576; pass --allow-heavy");
    h = named_group("S4");
    k = named_group("S4");
  } else if (o.pair == "s5s5") {
    throw InputError("S5 x S5 has order 14400, far beyond the lattice cap; it is not attempted");
  } else {
    throw InputError("unknown pair " + o.pair + " (expected a4s4 or s4s4)");
  }
  if (h.order() * k.order() > o.cap)
    throw LatticeCapExceeded("product order " + std::to_string(h.order() * k.order()) +
                             " exceeds the lattice cap " + std::to_string(o.cap));
  auto s = product_sizes(h, k, o.cap, o.threads);

  Output dst(o, out);
  if (o.format == "tsv") {
    *dst << "H\tK\t|D(H)|\t|D(K)|\t|D(HxK)|\tdelta\n";
    *dst << h.name() << '\t' << k.name() << '\t' << s.h << '\t' << s.k << '\t' << s.product << '\t'
         << s.delta() << '\n';
  } else {
    Json j;
    j["H"] = h.name();
    j["K"] = k.name();
    j["|D(H)|"] = s.h;
    j["|D(K)|"] = s.k;
    j["|D(HxK)|"] = s.product;
    j["delta"] = s.delta();
    *dst << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Relative commutativity degree spectra of finite groups", "relcomm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", o.cap, "Lattice cap (largest group order enumerated)")->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", o.out_path, "Write output to FILE");

  auto group_input = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_file, "JSON group spec file");
    sub->add_option("--group", o.group_json, "Inline JSON group spec");
  };
  auto* spectrum = app.add_subcommand("spectrum", "Print D(G) with witnesses");
  group_input(spectrum);
  auto* classify = app.add_subcommand("classify", "Classify and compare with the predicted spectrum");
  group_input(classify);
  auto* verify = app.add_subcommand("verify", "Like classify; exit 1 on Mismatch");
  group_input(verify);

  auto* scan = app.add_subcommand("scan", "Sweep the catalog");
  scan->add_option("--max-order", o.max_order, "Largest order scanned")->required();
  scan->add_option("--catalog", o.catalog_path, "JSON catalog file instead of the built-in one");
  scan->add_flag("--timings", o.timings, "Include per-phase timings (output no longer reproducible)");

  auto* audit = app.add_subcommand("audit", "Run conjecture audits over the catalog");
  audit->add_option("--check", o.check, "chain|omega|product|prime-power|distinct-prime|all");
  audit->add_flag("--pairs", o.pairs, "Also audit the coprime product pairs");
  audit->add_option("--max-order", o.max_order, "Largest order audited (default: the cap)");
  audit->add_option("--catalog", o.catalog_path, "JSON catalog file instead of the built-in one");

  auto* counter = app.add_subcommand("counterexample", "|D(HxK)| - |D(H)||D(K)| for a named pair");
  counter->add_option("--pair", o.pair, "a4s4 or s4s4")->required();
  counter->add_flag("--allow-heavy", o.allow_heavy, "Permit the order-576 computation");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, out);
    if (*classify) return cmd_classify(o, out, false);
    if (*verify) return cmd_classify(o, out, true);
    if (*scan) return cmd_scan(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*counter) return cmd_counterexample(o, out);
  } catch (CapError const& e) {
    err << "relcomm: " << e.what() << '\n';
    return 3;
  } catch (std::exception const& e) {
    err << "relcomm: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace relcomm
