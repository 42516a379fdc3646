#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "level1kit/defining.hpp"
#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"
#include "level1kit/snops.hpp"
#include "level1kit/verify.hpp"

using namespace level1;

namespace {

Network load(const std::string& path) { return parse_enewick(read_file(path)); }

std::string names(const Network& net, const TaxonSet& s) {
  std::string out;
  for (std::size_t i : s.members()) {
    if (!out.empty()) out += ',';
    out += net.taxa()[i];
  }
  return out;
}

void print_partition(const Network& net, const Partition& p) {
  for (const TaxonSet& b : p.blocks) std::cout << names(net, b) << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_report(const DefinitionReport& r) {
  std::cout << (r.defines ? "defines" : "does not define") << '\n';
  std::cout << r.consistent_networks.size() << " network(s) contain the system\n";
  for (const Network& n : r.consistent_networks) std::cout << write_enewick(n) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level1kit: rooted binary level-1 phylogenetic networks"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file, file2, keep, system_file, kind = "triplets", suite;
  std::vector<std::string> filters;
  std::size_t n = 0, max_n = 5;
  bool hardwired = false, softwired = false, json = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate an eNewick network");
  validate->add_option("FILE", file)->required();
  validate->callback([&] {
    load(file);
    std::cout << "valid\n";
  });

  auto* stats = app.add_subcommand("stats", "Counts and classification as JSON");
  stats->add_option("FILE", file)->required();
  stats->callback([&] {
    const Classification c = classify(load(file));
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["V"] = c.num_vertices;
    j["A"] = c.num_arcs;
    j["g"] = c.g;
    j["c"] = c.c;
    j["tree"] = c.is_tree;
    j["proper"] = c.is_proper;
    j["simple"] = c.is_simple;
    j["saturated"] = c.is_saturated;
    j["four_outwards"] = c.is_four_outwards;
    std::cout << j.dump() << '\n';
  });

  auto* trip = app.add_subcommand("triplets", "Print R(N)");
  trip->add_option("FILE", file)->required();
  trip->callback([&] { std::cout << write_triplets(triplets(load(file))); });

  auto* clus = app.add_subcommand("clusters", "Print softwired (default) or hardwired clusters");
  clus->add_option("FILE", file)->required();
  auto* hw = clus->add_flag("--hardwired", hardwired, "C(N)");
  clus->add_flag("--softwired", softwired, "S(N)")->excludes(hw);
  clus->callback([&] {
    const Network net = load(file);
    std::cout << write_clusters(hardwired ? hardwired_clusters(net) : softwired_clusters(net));
  });

  auto* sn = app.add_subcommand("snsets", "Maximal non-trivial SN-sets of R(N)");
  sn->add_option("FILE", file)->required();
  sn->callback([&] {
    const Network net = load(file);
    print_partition(net, maximal_sn_sets(triplets(net)));
  });

  auto* cut = app.add_subcommand("cut", "Cut(N)");
  cut->add_option("FILE", file)->required();
  cut->callback([&] {
    const Network net = load(file);
    print_partition(net, cut_partition(net));
  });

  auto* col = app.add_subcommand("collapse", "Collapse(N) and its pendant subnetworks");
  col->add_option("FILE", file)->required();
  col->callback([&] {
    const CollapseResult r = collapse(load(file));
    std::cout << write_enewick(r.collapsed) << '\n';
    for (const auto& [rep, pendant] : r.pendant)
      if (pendant) std::cout << rep << ": " << write_enewick(*pendant) << '\n';
  });

  auto* res = app.add_subcommand("restrict", "N restricted to a taxon subset");
  res->add_option("FILE", file)->required();
  res->add_option("--keep", keep, "Comma-separated taxa")->required();
  res->callback([&] { std::cout << write_enewick(restrict(load(file), split_list(keep))) << '\n'; });

  auto* eq = app.add_subcommand("equiv", "Exit 0 when two networks are equivalent, 1 otherwise");
  eq->add_option("FILE1", file)->required();
  eq->add_option("FILE2", file2)->required();
  eq->callback([&] {
    const bool same = equivalent(load(file), load(file2));
    std::cout << (same ? "equivalent" : "not equivalent") << '\n';
    exit_code = same ? 0 : 1;
  });

  auto* en = app.add_subcommand("enumerate", "All of L1({x1..xK}), one eNewick per line");
  en->add_option("--n", n, "Number of taxa")->required();
  en->add_option("--filter", filters, "proper, simple, saturated, four_outwards, tree");
  en->callback([&] {
    EnumSpec spec{default_taxa(n), {}, {}};
    for (const auto& f : filters) spec.filters.push_back(parse_filter(f));
    for_each_level1(spec, [](const Network& net) {
      std::cout << write_enewick(net) << '\n';
      return true;
    });
  });

  auto* def = app.add_subcommand("define", "Defining system of a simple network");
  def->add_option("FILE", file)->required();
  def->add_option("--kind", kind)->check(CLI::IsMember({"triplets", "clusters"}));
  def->callback([&] {
    const Network net = load(file);
    if (parse_kind(kind) == SystemKind::Triplets) std::cout << write_triplets(defining_triplets_simple(net));
    else std::cout << write_clusters(defining_clusters_simple(net));
  });

  auto* chk = app.add_subcommand("check-defines", "Exit 0 when SYSFILE L1-defines the network, 1 otherwise");
  chk->add_option("FILE", file)->required();
  chk->add_option("--system", system_file)->required();
  chk->add_option("--kind", kind)->check(CLI::IsMember({"triplets", "clusters"}));
  chk->callback([&] {
    const Network net = load(file);
    const std::string text = read_file(system_file);
    const DefinitionReport r = parse_kind(kind) == SystemKind::Triplets ? check_defines(parse_triplets(text), net)
                                                                        : check_defines(parse_clusters(text), net);
    print_report(r);
    exit_code = r.defines ? 0 : 1;
  });

  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("--suite", suite, "Suite id (default: all)");
  ver->add_option("--max-n", max_n, "Largest enumerated n")->check(CLI::Range(2, 7));
  ver->add_flag("--json", json, "Emit the JSON report");
  ver->callback([&] {
    const std::vector<std::string> ids = suite.empty() ? suite_ids() : std::vector<std::string>{suite};
    VerificationReport report;
    report.max_n = max_n;
    for (const auto& id : ids) {
      report.suites.push_back(run_suite(id, {max_n}));
      const SuiteResult& s = report.suites.back();
      if (!json) {
        std::cout << (s.passed() ? "PASS " : "FAIL ") << s.id << "  instances=" << s.instances
                  << "  ms=" << static_cast<long long>(s.elapsed_ms) << '\n';
        for (const auto& f : s.failures) std::cout << "  failure: " << f << '\n';
        for (const auto& note : s.notes) std::cout << "  note: " << note << '\n';
      }
    }
    if (json) std::cout << to_json(report) << '\n';
    exit_code = report.pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
