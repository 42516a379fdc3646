#include <gtest/gtest.h>

#include "fast_systems.hpp"
#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"
#include "level1kit/systems.hpp"

using namespace level1;

namespace {

const std::string kData = LEVEL1KIT_TEST_DATA;

Network sixteen() { return parse_enewick(read_file(kData + "/sixteen_triplets.nwk")); }

// Every ab|c with a path-definition check, no restriction involved.
TripletSystem by_paths(const Network& net) {
  TripletSystem out{net.taxa(), {}};
  const auto n = static_cast<std::uint32_t>(net.num_taxa());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (c != a && c != b && consistent(net, Triplet::make(a, b, c))) out.triplets.insert(Triplet::make(a, b, c));
  return out;
}

// R(T) of a tree straight from its clusters.
void add_tree_triplets(const Network& tree, std::set<Triplet>& out) {
  const auto n = static_cast<std::uint32_t>(tree.num_taxa());
  for (const TaxonSet& c : hardwired_clusters(tree).clusters)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t x = 0; x < n; ++x)
          if (c.contains(a) && c.contains(b) && !c.contains(x)) out.insert(Triplet::make(a, b, x));
}

}  // namespace

TEST(Triplets, FourRoutesAgree) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Network& net : enumerate_level1({default_taxa(n), {}, {}})) {
      const TripletSystem r = triplets(net);
      EXPECT_EQ(r, by_paths(net)) << write_enewick(net);
      std::set<Triplet> from_trees;
      for (const Network& t : displayed_trees(net)) add_tree_triplets(t, from_trees);
      EXPECT_EQ(r.triplets, from_trees) << write_enewick(net);
      EXPECT_EQ(detail::to_bits(r), detail::triplet_bits(detail::softwired_bits(net), n));
    }
  }
}

TEST(Triplets, PerThreeSetCount) {
  for (const Network& net : enumerate_level1({default_taxa(5), {}, {}})) {
    std::map<std::set<std::uint32_t>, int> per;
    for (const Triplet& t : triplets(net).triplets) ++per[{t.a, t.b, t.c}];
    EXPECT_EQ(per.size(), 10U);
    for (const auto& [k, v] : per) EXPECT_TRUE(v == 1 || v == 2);
  }
}

TEST(Triplets, Trees) {
  for (const Network& t : enumerate_level1({default_taxa(5), {Filter::Tree}, {}})) EXPECT_EQ(triplets(t).size(), 10U);
  EXPECT_THROW(triplets(parse_enewick("(a,b);")), Error);
}

TEST(Triplets, SixteenListed) {
  const Network n = sixteen();
  const TripletSystem r = triplets(n);
  EXPECT_EQ(r.size(), 16U);
  EXPECT_EQ(r, remap(parse_triplets(read_file(kData + "/sixteen_triplets.trip")), n.taxa()));
  EXPECT_TRUE(consistent(n, "x1", "x2", "x3"));
  EXPECT_TRUE(consistent(n, "x2", "x3", "x1"));
  EXPECT_FALSE(consistent(n, "x1", "x3", "x2"));
  EXPECT_TRUE(consistent(n, "x3", "x4", "x5"));
  EXPECT_TRUE(consistent(n, "x4", "x5", "x3"));
  EXPECT_THROW(consistent(n, "x1", "x2", "q"), Error);
}

TEST(Triplets, CherryInTree) {
  EXPECT_TRUE(consistent(parse_enewick("((a,b),c);"), "a", "b", "c"));
  EXPECT_FALSE(consistent(parse_enewick("((a,b),c);"), "a", "c", "b"));
}

TEST(DisplayedTrees, Simple3) {
  const Network n = parse_enewick("((x2,(x1)#H1),(x3,#H1));");
  const auto trees = displayed_trees(n);
  ASSERT_EQ(trees.size(), 2U);
  std::set<std::string> got;
  for (const Network& t : trees) got.insert(write_enewick(t));
  EXPECT_EQ(got, (std::set<std::string>{"((x1,x2),x3);", "((x1,x3),x2);"}));
  const Network tree = parse_enewick("((a,b),c);");
  ASSERT_EQ(displayed_trees(tree).size(), 1U);
  EXPECT_TRUE(equivalent(displayed_trees(tree)[0], tree));
}

TEST(DisplayedTrees, CountRange) {
  for (const Network& net : enumerate_level1({default_taxa(5), {Filter::Proper}, {}})) {
    const std::size_t k = displayed_trees(net).size();
    EXPECT_GE(k, 2U);
    EXPECT_LE(k, std::size_t{1} << classify(net).g);
  }
}

TEST(Clusters, SoftwiredIsUnionOverDisplayedTrees) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Network& net : enumerate_level1({default_taxa(n), {}, {}})) {
      std::set<TaxonSet> all;
      for (const Network& t : displayed_trees(net)) {
        const auto c = remap(hardwired_clusters(t), net.taxa()).clusters;
        all.insert(c.begin(), c.end());
      }
      const ClusterSystem s = softwired_clusters(net);
      EXPECT_EQ(s.clusters, all) << write_enewick(net);
      EXPECT_EQ(detail::to_bits(s), detail::softwired_bits(net));
      for (const Network& t : displayed_trees(net)) EXPECT_TRUE(displays_clusters(net, hardwired_clusters(t)));
      if (classify(net).is_tree) EXPECT_EQ(hardwired_clusters(net), s);
    }
  }
}

TEST(Clusters, Sizes) {
  EXPECT_EQ(hardwired_clusters(parse_enewick("(a,b);")).size(), 3U);
  for (const Network& t : enumerate_level1({default_taxa(5), {Filter::Tree}, {}}))
    EXPECT_EQ(hardwired_clusters(t).size(), 9U);
  // A hybrid shares its cluster with its child, and a gall root with the top
  // vertex of the other side when one side is empty.
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Network& net : enumerate_level1({default_taxa(n), {Filter::Proper}, {}})) {
      std::size_t merged = 0;
      for (const Gall& g : net.galls()) merged += 1 + (g.first_side.empty() || g.second_side.empty());
      const std::size_t k = hardwired_clusters(net).size();
      EXPECT_EQ(k, net.num_vertices() - merged);
      EXPECT_LE(k, 3 * n - 2);
    }
  }
  EXPECT_EQ(hardwired_clusters(parse_enewick("((x2,(x1)#H1),(x3,#H1));")).size(), 6U);
  EXPECT_EQ(softwired_clusters(parse_enewick("((x2,(x1)#H1),(x3,#H1));")).without_full().size(), 5U);
  EXPECT_EQ(softwired_clusters(parse_enewick("((a,b),c);")).without_full().size(), 4U);
}

TEST(Clusters, ElevenListed) {
  const Network n1 = parse_enewick(read_file(kData + "/eleven_clusters.nwk"));
  const ClusterSystem s = softwired_clusters(n1);
  EXPECT_EQ(s.size(), 11U);
  EXPECT_EQ(s, remap(parse_clusters(read_file(kData + "/eleven_clusters.clus")), n1.taxa()));
  const Network n2 = parse_enewick(read_file(kData + "/eleven_partner.nwk"));
  EXPECT_TRUE(displays_clusters(n2, s));
  EXPECT_FALSE(equivalent(n1, n2));
}

TEST(Clusters, IncompatibleNotDisplayedByTree) {
  const Network t = parse_enewick("((a,b),(c,d));");
  ClusterSystem bad{t.taxa(), {}};
  TaxonSet bc(4);
  bc.insert(1);
  bc.insert(2);
  bad.clusters.insert(bc);
  EXPECT_FALSE(displays_clusters(t, bad));
}

TEST(Random, FormulaAndDeterminism) {
  const auto taxa = default_taxa(10);
  const Network tree = random_level1(taxa, 7, 0.0);
  EXPECT_TRUE(classify(tree).is_tree);
  EXPECT_EQ(classify(tree).c, 8U);
  EXPECT_EQ(softwired_clusters(tree).without_full().size(), 18U);
  const Network mixed = random_level1(taxa, 7, 0.5);
  EXPECT_EQ(softwired_clusters(mixed).without_full().size(), 26 - classify(mixed).c);
  EXPECT_TRUE(equivalent(mixed, random_level1(taxa, 7, 0.5)));
}
