#include <gtest/gtest.h>

#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"

using namespace level1;

namespace {

ErrorKind parse_error(std::string_view text) {
  try {
    parse_enewick(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted " << text;
  return ErrorKind::NotFound;
}

}  // namespace

TEST(Enewick, Basics) {
  EXPECT_EQ(write_enewick(parse_enewick("(a,b);")), "(a,b);");
  EXPECT_EQ(write_enewick(parse_enewick("(b,a);")), "(a,b);");
  const Network s = parse_enewick("((x2,(x1)#H1),(x3,#H1));");
  EXPECT_TRUE(equivalent(s, construct_simple("x1", {"x2"}, {"x3"})));
}

TEST(Enewick, Tolerated) {
  const Network a = parse_enewick("  ((x2:0.5,(x1)#H1:1)inner,(x3,#H1:2.0e-1))root ;\n");
  EXPECT_TRUE(equivalent(a, parse_enewick("((x2,(x1)#H1),(x3,#H1));")));
  // The tagged subtree may come second.
  EXPECT_TRUE(equivalent(parse_enewick("((x2,#H1),(x3,(x1)#H1));"), a));
  const Network q = parse_enewick("('a b',('c,d',e));");
  EXPECT_EQ(q.taxa(), (std::vector<std::string>{"a b", "c,d", "e"}));
  EXPECT_TRUE(equivalent(parse_enewick(write_enewick(q)), q));
}

TEST(Enewick, Errors) {
  EXPECT_EQ(parse_error("((a,#H1),(b,#H1),?"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("(a,b)"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("(a,b);x"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("((a,(c)#H1),b);"), ErrorKind::HybridTagMismatch);
  EXPECT_EQ(parse_error("((a,(c)#H1),(b,(d)#H1));"), ErrorKind::HybridTagMismatch);
  EXPECT_EQ(parse_error("((a,#H1),(b,#H1),#H1);"), ErrorKind::HybridTagMismatch);
  EXPECT_EQ(parse_error("(a,a);"), ErrorKind::DuplicateLabel);
  EXPECT_EQ(parse_error("((a,b,c),d);"), ErrorKind::DegreeViolation);
}

TEST(Enewick, RoundTripAll) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for_each_level1({default_taxa(n), {}, {}}, [](const Network& net) {
      const std::string text = write_enewick(net);
      const Network back = parse_enewick(text);
      EXPECT_TRUE(equivalent(net, back)) << text;
      EXPECT_EQ(write_enewick(back), text);
      return true;
    });
  }
}

TEST(TextFormats, Triplets) {
  const TripletSystem r = parse_triplets("# comment\nb,a|c\n\nc,d|a\n");
  EXPECT_EQ(r.taxa, (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(r.size(), 2U);
  EXPECT_TRUE(r.contains(Triplet::make(0, 1, 2)));
  EXPECT_EQ(write_triplets(r), "a,b|c\nc,d|a\n");
  EXPECT_EQ(parse_triplets(write_triplets(r)), r);
  EXPECT_THROW(parse_triplets("a,b,c\n"), Error);
  EXPECT_THROW(parse_triplets("a,a|b\n"), Error);
}

TEST(TextFormats, Clusters) {
  const ClusterSystem c = parse_clusters("a\nb,c\na,b,c\n");
  EXPECT_EQ(c.size(), 3U);
  EXPECT_EQ(write_clusters(c), "a,b,c\nb,c\na\n");
  EXPECT_EQ(parse_clusters(write_clusters(c)), c);
  EXPECT_THROW(parse_clusters("a,a\n"), Error);
}

TEST(TextFormats, InducedSystemsRoundTrip) {
  for (const Network& net : enumerate_level1({default_taxa(4), {}, {}})) {
    const TripletSystem r = triplets(net);
    EXPECT_EQ(parse_triplets(write_triplets(r)), r);
    const ClusterSystem s = softwired_clusters(net);
    EXPECT_EQ(parse_clusters(write_clusters(s)), s);
  }
}
