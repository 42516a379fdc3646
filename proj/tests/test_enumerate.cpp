#include <gtest/gtest.h>

#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"

using namespace level1;

namespace {

// Bottom-up graph search: start from the n leaves, each missing one parent;
// repeatedly add a split vertex over two open slots or a hybrid over one,
// and close with a root over the last two. Every binary DAG with at most
// max_hybrids hybrids arises this way; validate() keeps the level-1 ones.
class GraphSearch {
 public:
  GraphSearch(std::size_t n, std::size_t max_hybrids) : n_(n), max_hybrids_(max_hybrids) {
    need_.assign(n, 1);
  }

  std::set<std::string> run() {
    grow(0);
    return forms_;
  }
  std::size_t graphs() const { return graphs_; }

 private:
  void emit(std::size_t u, std::size_t w) {
    RawGraph g;
    for (auto [t, h] : arcs_) g.add_arc(t, h);
    const auto root = static_cast<long long>(need_.size());
    g.add_arc(root, static_cast<long long>(u));
    g.add_arc(root, static_cast<long long>(w));
    for (std::size_t i = 0; i < n_; ++i) g.set_label(static_cast<long long>(i), "x" + std::to_string(i + 1));
    ++graphs_;
    try {
      forms_.insert(canonical_form(Network::validate(g)));
    } catch (const Error&) {
    }
  }

  void grow(std::size_t hybrids) {
    std::vector<std::size_t> open;
    for (std::size_t v = 0; v < need_.size(); ++v)
      for (int k = 0; k < need_[v]; ++k) open.push_back(v);
    if (open.size() == 2 && open[0] != open[1]) emit(open[0], open[1]);
    const auto self = static_cast<long long>(need_.size());
    for (std::size_t i = 0; i < open.size(); ++i) {
      for (std::size_t j = i + 1; j < open.size(); ++j) {
        const std::size_t u = open[i], w = open[j];
        if (u == w || (j > i + 1 && open[j - 1] == w)) continue;
        if (i > 0 && open[i - 1] == u) continue;
        --need_[u], --need_[w];
        need_.push_back(1);
        arcs_.push_back({self, static_cast<long long>(u)});
        arcs_.push_back({self, static_cast<long long>(w)});
        grow(hybrids);
        arcs_.resize(arcs_.size() - 2);
        need_.pop_back();
        ++need_[u], ++need_[w];
      }
    }
    if (hybrids == max_hybrids_) return;
    for (std::size_t i = 0; i < open.size(); ++i) {
      const std::size_t u = open[i];
      if (i > 0 && open[i - 1] == u) continue;
      --need_[u];
      need_.push_back(2);
      arcs_.push_back({self, static_cast<long long>(u)});
      grow(hybrids + 1);
      arcs_.pop_back();
      need_.pop_back();
      ++need_[u];
    }
  }

  std::size_t n_, max_hybrids_;
  std::vector<int> need_;
  std::vector<std::pair<long long, long long>> arcs_;
  std::set<std::string> forms_;
  std::size_t graphs_ = 0;
};

std::set<std::string> enumerated_forms(std::size_t n) {
  std::set<std::string> out;
  for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
    EXPECT_TRUE(out.insert(canonical_form(net)).second) << "duplicate " << write_enewick(net);
    return true;
  });
  return out;
}

}  // namespace

TEST(Enumerate, CompleteAgainstGraphSearch) {
  const std::size_t expected[] = {0, 0, 1, 12, 153};
  for (std::size_t n = 2; n <= 4; ++n) {
    GraphSearch search(n, n - 1);
    const auto found = search.run();
    const auto listed = enumerated_forms(n);
    EXPECT_EQ(found.size(), expected[n]);
    EXPECT_EQ(found, listed) << "n=" << n << " after " << search.graphs() << " graphs";
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerated_forms(5).size(), 2880U);
  EXPECT_EQ(enumerate_level1({default_taxa(3), {Filter::Tree}, {}}).size(), 3U);
  EXPECT_EQ(enumerate_level1({default_taxa(5), {Filter::Tree}, {}}).size(), 105U);
  EXPECT_EQ(enumerate_level1({default_taxa(5), {Filter::Simple}, {}}).size(), 300U);
  EXPECT_EQ(enumerate_level1({default_taxa(4), {}, 10}).size(), 10U);
}

TEST(Enumerate, FiltersHold) {
  const std::vector<Filter> filters = {Filter::Saturated, Filter::FourOutwards};
  for (const Network& net : enumerate_level1({default_taxa(5), filters, {}})) {
    const Classification c = classify(net);
    EXPECT_TRUE(c.is_saturated && c.is_four_outwards);
  }
  EXPECT_EQ(parse_filter("4-outwards"), Filter::FourOutwards);
  EXPECT_THROW(parse_filter("wiggly"), std::invalid_argument);
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_level1({default_taxa(8), {}, {}}), Error);
  EXPECT_THROW(enumerate_level1({{"a"}, {}, {}}), Error);
  EXPECT_THROW(enumerate_level1({{"a", "b", "a"}, {}, {}}), Error);
}

TEST(Enumerate, OtherTaxonNames) {
  const auto nets = enumerate_level1({{"c", "a", "b"}, {}, {}});
  EXPECT_EQ(nets.size(), 12U);
  EXPECT_EQ(nets.front().taxa(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(ConstructSimple, Examples) {
  const Network a = construct_simple("x1", {"x2"}, {"x3"});
  EXPECT_EQ(a.num_vertices(), 7U);
  EXPECT_TRUE(equivalent(a, parse_enewick("((x2,(x1)#H1),(x3,#H1));")));
  const Network b = construct_simple("x1", {}, {"x2", "x3"});
  EXPECT_TRUE(classify(b).is_simple);
  EXPECT_FALSE(equivalent(a, b));
  EXPECT_THROW(construct_simple("x1", {}, {"x2"}), Error);
  EXPECT_THROW(construct_simple("x1", {"x1"}, {"x2"}), Error);
  const Network c = construct_simple("x1", {"x2", "x3"}, {"x5", "x4"});
  EXPECT_TRUE(classify(c).is_saturated && classify(c).is_four_outwards);
}

TEST(ConstructSimple, LayoutRoundTrip) {
  // Rebuilding from either layout gives back the same network.
  for (const Network& s : enumerate_level1({default_taxa(6), {Filter::Simple}, {}})) {
    for (int side : {0, 1}) {
      const SimpleLayout l = simple_layout(s, side);
      const std::size_t n = l.x.size();
      ASSERT_GE(l.i, 2U);
      ASSERT_LE(l.i, n + 1);
      const std::vector<std::string> left(l.x.begin() + 1, l.x.begin() + static_cast<long>(l.i) - 1);
      std::vector<std::string> right(l.x.begin() + static_cast<long>(l.i) - 1, l.x.end());
      std::reverse(right.begin(), right.end());
      EXPECT_TRUE(equivalent(s, construct_simple(l.x[0], left, right)));
    }
  }
  EXPECT_THROW(simple_layout(parse_enewick("((a,b),c);"), 0), Error);
}

TEST(WitnessPair, SearchAtSix) {
  const WitnessPair p = search_prop42_pair(6);
  EXPECT_TRUE(p.exhaustive);
  EXPECT_EQ(triplets(p.first).size(), 21U);
  EXPECT_EQ(triplets(p.second).size(), 21U + p.x_prime);
  EXPECT_EQ(p.x_prime, 2U);
  EXPECT_EQ(classify(p.first).g, classify(p.second).g);
  EXPECT_EQ(classify(p.first).c, classify(p.second).c);
}

TEST(WitnessPair, BuiltFamily) {
  for (std::size_t n = 6; n <= 10; ++n) {
    const WitnessPair p = construct_witness_pair(n);
    const std::size_t base = n * (n - 1) * (n - 2) / 6 + 1;
    EXPECT_EQ(triplets(p.first).size(), base);
    EXPECT_EQ(triplets(p.second).size(), base + n - 4);
    EXPECT_EQ(classify(p.first).g, classify(p.second).g);
    EXPECT_EQ(classify(p.first).c, classify(p.second).c);
  }
}

TEST(Random, ValidAndSeeded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network a = random_level1(default_taxa(9), seed, 0.6);
    EXPECT_EQ(a.num_taxa(), 9U);
    EXPECT_EQ(write_enewick(a), write_enewick(random_level1(default_taxa(9), seed, 0.6)));
  }
  EXPECT_TRUE(classify(random_level1(default_taxa(12), 3, 0.0)).is_tree);
  EXPECT_FALSE(classify(random_level1(default_taxa(12), 3, 1.0)).is_tree);
}
