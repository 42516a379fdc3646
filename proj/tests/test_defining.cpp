#include <gtest/gtest.h>

#include "level1kit/defining.hpp"
#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"
#include "level1kit/parallel.hpp"
#include "level1kit/snops.hpp"

using namespace level1;

namespace {

const std::string kData = LEVEL1KIT_TEST_DATA;

Network load(const std::string& name) { return parse_enewick(read_file(kData + "/" + name)); }

ClusterSystem clusters_of(const std::vector<std::string>& taxa, std::vector<std::vector<std::string>> sets) {
  ClusterSystem out{taxa, {}};
  for (const auto& s : sets) {
    TaxonSet c(taxa.size());
    for (const auto& x : s) c.insert(static_cast<std::size_t>(std::find(taxa.begin(), taxa.end(), x) - taxa.begin()));
    out.clusters.insert(c);
  }
  return out;
}

// Networks of L1(X) containing the system, by scanning the enumeration
// with the plain set-based systems.
std::size_t slow_survivors(const TripletSystem& r) {
  std::size_t k = 0;
  for_each_level1({r.taxa, {}, {}}, [&](const Network& net) {
    k += r.is_subset_of(triplets(net));
    return true;
  });
  return k;
}

}  // namespace

TEST(DefiningTriplets, FourLeavesIsFullSystem) {
  for (const Network& s : enumerate_level1({default_taxa(4), {Filter::Simple}, {}})) {
    const TripletSystem d = defining_triplets_simple(s);
    EXPECT_EQ(d.size(), 7U);
    EXPECT_EQ(d, triplets(s));
  }
}

TEST(DefiningTriplets, RootAtEnd) {
  // x1 hybrid leaf, x2..x5 on one side, root = v6.
  const Network s = construct_simple("x1", {"x2", "x3", "x4", "x5"}, {});
  const int side = simple_layout(s, 0).i == 6 ? 0 : 1;
  const SimpleLayout l = simple_layout(s, side);
  ASSERT_EQ(l.i, 6U);
  ASSERT_EQ(l.x, default_taxa(5));
  const TripletSystem d = defining_triplets_simple(s, side);
  const TripletSystem base = remap(triplets(restrict(s, std::vector<std::string>{"x1", "x2", "x3", "x4"})), s.taxa());
  TripletSystem want = base;
  want.triplets.insert(Triplet::make(3, 4, 0));  // x1|x4x5
  want.triplets.insert(Triplet::make(0, 3, 4));  // x5|x1x4
  EXPECT_EQ(d, want);
  EXPECT_LE(d.size(), 9U);
}

TEST(DefiningTriplets, DefinesSlowCheck) {
  // Cross-check against the set-based scan at n = 5 on a sample.
  std::size_t k = 0;
  for_each_level1({default_taxa(5), {Filter::Simple}, {}}, [&](const Network& s) {
    const TripletSystem d = defining_triplets_simple(s);
    EXPECT_TRUE(d.is_subset_of(triplets(s)));
    EXPECT_EQ(slow_survivors(d), 1U) << write_enewick(s);
    return ++k < 12;
  });
}

TEST(DefiningTriplets, Errors) {
  EXPECT_THROW(defining_triplets_simple(parse_enewick("((a,b),(c,d));")), Error);
  EXPECT_THROW(defining_triplets_simple(construct_simple("x1", {"x2"}, {"x3"})), Error);
}

TEST(DefiningClusters, CaseOne) {
  const Network s = construct_simple("x1", {"x2", "x3", "x4"}, {});
  EXPECT_EQ(defining_clusters_simple(s),
            clusters_of(s.taxa(), {{"x1", "x2"}, {"x1", "x2", "x3"}, {"x2", "x3", "x4"}}));
}

TEST(DefiningClusters, CaseTwo) {
  // Root at v5 with n = 5: one leaf on the short side.
  const Network s = construct_simple("x1", {"x2", "x3", "x4"}, {"x5"});
  EXPECT_EQ(defining_clusters_simple(s),
            clusters_of(s.taxa(), {{"x2", "x3"}, {"x2", "x3", "x4"}, {"x1", "x2"}, {"x1", "x5"}, {"x1", "x2", "x3"}}));
}

TEST(DefiningClusters, SizeAndMembership) {
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const Network& s : enumerate_level1({default_taxa(n), {Filter::Simple}, {}})) {
      const ClusterSystem d = defining_clusters_simple(s);
      EXPECT_LE(d.size(), n);
      EXPECT_TRUE(displays_clusters(s, d));
    }
  }
}

TEST(CheckDefines, Trees) {
  const Network t = parse_enewick("((x1,x2),(x3,x4));");
  const DefinitionReport r = check_defines(triplets(t), t);
  EXPECT_FALSE(r.defines);
  EXPECT_GT(r.consistent_networks.size(), 1U);
  for (const Network& n : r.consistent_networks) EXPECT_TRUE(triplets(t).is_subset_of(triplets(n)));
}

TEST(CheckDefines, PartnerBelowSixteen) {
  const Network partner = load("sixteen_partner.nwk"), big = load("sixteen_triplets.nwk");
  const TripletSystem r = triplets(partner);
  EXPECT_TRUE(r.is_subset_of(triplets(big)));
  EXPECT_LT(r.size(), triplets(big).size());
  const DefinitionReport rep = check_defines(r, partner);
  EXPECT_FALSE(rep.defines);
  EXPECT_TRUE(std::any_of(rep.consistent_networks.begin(), rep.consistent_networks.end(),
                          [&](const Network& n) { return equivalent(n, big); }));
  EXPECT_TRUE(check_defines(triplets(big), big).defines);
}

TEST(CheckDefines, ElevenClusters) {
  const Network n1 = load("eleven_clusters.nwk");
  const DefinitionReport rep = check_defines(softwired_clusters(n1), n1);
  EXPECT_FALSE(rep.defines);
  EXPECT_TRUE(std::any_of(rep.consistent_networks.begin(), rep.consistent_networks.end(),
                          [&](const Network& n) { return equivalent(n, load("eleven_partner.nwk")); }));
}

TEST(CheckDefines, Errors) {
  const Network big = parse_enewick("(((x1,x2),(x3,x4)),((x5,x6),x7));");
  EXPECT_THROW(check_defines(triplets(big), big), Error);
  const Network five = load("sixteen_triplets.nwk");
  EXPECT_THROW(check_defines(triplets(five), five, 4), Error);
}

TEST(CheckDefines, SubsystemWithFewerTaxa) {
  // A system naming only some of X is read over all of X.
  const Network s = construct_simple("x1", {"x2", "x3"}, {"x4"});
  const TripletSystem part = parse_triplets("x1,x2|x3\n");
  const DefinitionReport r = check_defines(part, s);
  EXPECT_FALSE(r.defines);
  EXPECT_EQ(slow_survivors(remap(part, s.taxa())), r.consistent_networks.size());
}

TEST(CheckEncoded, FourOutwardsAndGalls) {
  for (const Network& net : enumerate_level1({default_taxa(5), {Filter::FourOutwards}, {}})) {
    EXPECT_TRUE(check_encoded(net, SystemKind::Triplets)) << write_enewick(net);
  }
  // A gall with exactly three outgoing cut arcs: permuting them keeps R.
  const Network g3 = parse_enewick("(((x1,x2),((x3,x4))#H1),((x5,x6),#H1));");
  EXPECT_FALSE(check_encoded(g3, SystemKind::Triplets));
  EXPECT_TRUE(check_encoded(parse_enewick("(x1,x2);"), SystemKind::Clusters));
  EXPECT_TRUE(check_encoded(parse_enewick("((x1,x2),x3);"), SystemKind::Triplets));
  EXPECT_TRUE(check_encoded(parse_enewick("((x1,x2),x3);"), SystemKind::Clusters));
}

TEST(Universe, IndexAndBits) {
  const Universe& u = Universe::get(default_taxa(4));
  EXPECT_EQ(u.size(), 153U);
  const Network s = construct_simple("x1", {"x2", "x3"}, {"x4"});
  const std::size_t i = u.index_of(s);
  EXPECT_EQ(u[i].triplets, triplet_bits(triplets(s)));
  EXPECT_EQ(u[i].clusters, cluster_bits(softwired_clusters(s)));
  EXPECT_TRUE(equivalent(u.networks({i}).front(), s));
  EXPECT_THROW(u.index_of(parse_enewick("((a,b),(c,d));")), Error);
  EXPECT_THROW(Universe::get(default_taxa(7)), Error);
  EXPECT_EQ(parse_kind("clusters"), SystemKind::Clusters);
  EXPECT_THROW(parse_kind("trees"), std::invalid_argument);
}

TEST(Parallel, FilterIsOrderedAndCapped) {
  const auto odd = parallel_filter(5000, [](std::size_t i) { return i % 2 == 1; });
  ASSERT_EQ(odd.size(), 2500U);
  EXPECT_TRUE(std::is_sorted(odd.begin(), odd.end()));
  EXPECT_EQ(odd.front(), 1U);
  setenv("LEVEL1KIT_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1U);
  EXPECT_EQ(parallel_filter(5000, [](std::size_t i) { return i % 2 == 1; }), odd);
  unsetenv("LEVEL1KIT_THREADS");
}
