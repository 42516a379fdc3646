#include "level1kit/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "fast_systems.hpp"
#include "level1kit/systems.hpp"

namespace level1 {

Filter parse_filter(const std::string& name) {
  if (name == "proper") return Filter::Proper;
  if (name == "simple") return Filter::Simple;
  if (name == "saturated") return Filter::Saturated;
  if (name == "four_outwards" || name == "4-outwards" || name == "four-outwards") return Filter::FourOutwards;
  if (name == "tree") return Filter::Tree;
  throw std::invalid_argument("unknown filter '" + name + "'");
}

bool passes(const Classification& c, const std::vector<Filter>& filters) {
  for (Filter f : filters) {
    switch (f) {
      case Filter::Proper: if (!c.is_proper) return false; break;
      case Filter::Simple: if (!c.is_simple) return false; break;
      case Filter::Saturated: if (!c.is_saturated) return false; break;
      case Filter::FourOutwards: if (!c.is_four_outwards) return false; break;
      case Filter::Tree: if (!c.is_tree) return false; break;
    }
  }
  return true;
}

std::vector<std::string> default_taxa(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace {

// A network is a leaf, a split over two pendant networks, or a gall whose
// side vertices and hybrid each carry one pendant network. Building from
// this decomposition gives every network once, provided splits take the
// block holding the lowest taxon first and galls keep the orientation whose
// side sequence of block minima is smaller.
struct Shape {
  enum class Kind : std::uint8_t { Leaf, Split, Gall } kind = Kind::Leaf;
  std::uint32_t taxon = 0;
  std::vector<const Shape*> parts;  // gall: first side, second side, hybrid pendant
  std::size_t first_len = 0;
};

class Enumerator {
 public:
  explicit Enumerator(std::size_t n) : memo_(std::size_t{1} << n), done_(std::size_t{1} << n, 0) {}

  const std::vector<const Shape*>& pendants(std::uint32_t mask) {
    if (!done_[mask]) {
      auto& list = memo_[mask];
      if (std::popcount(mask) == 1) {
        arena_.push_back({Shape::Kind::Leaf, static_cast<std::uint32_t>(std::countr_zero(mask)), {}, 0});
        list.push_back(&arena_.back());
      } else {
        generate(mask, [&](const Shape& s) {
          arena_.push_back(s);
          list.push_back(&arena_.back());
          return true;
        });
      }
      done_[mask] = 1;
    }
    return memo_[mask];
  }

  template <class Emit>
  bool generate(std::uint32_t mask, Emit&& emit) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Splits: the block holding the lowest taxon is listed first.
    for (std::uint32_t sub = 0;; sub = (sub - rest) & rest) {
      if (sub != rest) {
        const std::uint32_t s = low | sub, t = mask ^ s;
        for (const Shape* p : pendants(s))
          for (const Shape* q : pendants(t))
            if (!emit(Shape{Shape::Kind::Split, 0, {p, q}, 0})) return false;
      }
      if (sub == rest) break;
    }
    // Galls: hybrid block, then an ordered partition of the rest cut into sides.
    for (std::uint32_t h = mask; h; h = (h - 1) & mask) {
      const std::uint32_t remaining = mask ^ h;
      if (std::popcount(remaining) < 2) continue;
      std::vector<std::uint32_t> blocks;
      if (!ordered_partitions(remaining, h, blocks, emit)) return false;
    }
    return true;
  }

 private:
  template <class Emit>
  bool ordered_partitions(std::uint32_t remaining, std::uint32_t hybrid, std::vector<std::uint32_t>& blocks,
                          Emit& emit) {
    if (remaining == 0) {
      if (blocks.size() < 2) return true;
      for (std::size_t j = 0; j <= blocks.size(); ++j) {
        if (!first_side_smaller(blocks, j)) continue;
        std::vector<const Shape*> chosen;
        if (!fill(blocks, hybrid, j, chosen, emit)) return false;
      }
      return true;
    }
    for (std::uint32_t b = remaining; b; b = (b - 1) & remaining) {
      blocks.push_back(b);
      const bool go = ordered_partitions(remaining ^ b, hybrid, blocks, emit);
      blocks.pop_back();
      if (!go) return false;
    }
    return true;
  }

  static bool first_side_smaller(const std::vector<std::uint32_t>& blocks, std::size_t j) {
    std::vector<int> a, b;
    for (std::size_t k = 0; k < blocks.size(); ++k)
      (k < j ? a : b).push_back(std::countr_zero(blocks[k]));
    return a < b;
  }

  template <class Emit>
  bool fill(const std::vector<std::uint32_t>& blocks, std::uint32_t hybrid, std::size_t j,
            std::vector<const Shape*>& chosen, Emit& emit) {
    if (chosen.size() == blocks.size()) {
      for (const Shape* hp : pendants(hybrid)) {
        Shape s{Shape::Kind::Gall, 0, chosen, j};
        s.parts.push_back(hp);
        if (!emit(s)) return false;
      }
      return true;
    }
    for (const Shape* p : pendants(blocks[chosen.size()])) {
      chosen.push_back(p);
      const bool go = fill(blocks, hybrid, j, chosen, emit);
      chosen.pop_back();
      if (!go) return false;
    }
    return true;
  }

  std::vector<std::vector<const Shape*>> memo_;
  std::vector<char> done_;
  std::deque<Shape> arena_;
};

class Builder {
 public:
  explicit Builder(const std::vector<std::string>& taxa) : taxa_(taxa) {}

  long long leaf(const std::string& name) {
    const long long v = next_++;
    raw_.set_label(v, name);
    return v;
  }
  long long split(long long x, long long y) {
    const long long v = next_++;
    raw_.add_arc(v, x);
    raw_.add_arc(v, y);
    return v;
  }
  // Side lists are pendant roots read from the gall root toward the hybrid.
  long long gall(const std::vector<long long>& first, const std::vector<long long>& second, long long below) {
    const long long root = next_++, hybrid = next_++;
    for (const auto* side : {&first, &second}) {
      long long prev = root;
      for (long long p : *side) {
        const long long s = next_++;
        raw_.add_arc(prev, s);
        raw_.add_arc(s, p);
        prev = s;
      }
      raw_.add_arc(prev, hybrid);
    }
    raw_.add_arc(hybrid, below);
    return root;
  }

  long long shape(const Shape& s) {
    switch (s.kind) {
      case Shape::Kind::Leaf:
        return leaf(taxa_[s.taxon]);
      case Shape::Kind::Split:
        return split(shape(*s.parts[0]), shape(*s.parts[1]));
      case Shape::Kind::Gall: {
        std::vector<long long> first, second;
        for (std::size_t k = 0; k + 1 < s.parts.size(); ++k)
          (k < s.first_len ? first : second).push_back(shape(*s.parts[k]));
        return gall(first, second, shape(*s.parts.back()));
      }
    }
    return -1;
  }

  Network finish() const { return Network::validate(raw_); }

 private:
  const std::vector<std::string>& taxa_;
  RawGraph raw_;
  long long next_ = 0;
};

void check_taxa(const std::vector<std::string>& taxa) {
  if (taxa.size() < 2) throw Error(ErrorKind::TooFewTaxa, "need at least two taxa");
  std::set<std::string> seen(taxa.begin(), taxa.end());
  if (seen.size() != taxa.size()) throw Error(ErrorKind::DuplicateTaxon, "taxa must be distinct");
}

}  // namespace

void for_each_level1(const EnumSpec& spec, const std::function<bool(const Network&)>& visit) {
  if (spec.taxa.size() > kMaxEnumerateTaxa)
    throw Error(ErrorKind::TooManyTaxa, std::to_string(spec.taxa.size()) + " taxa; at most " +
                                            std::to_string(kMaxEnumerateTaxa) + " supported");
  check_taxa(spec.taxa);
  const std::size_t n = spec.taxa.size();
  std::size_t count = 0;
  if (spec.max_count && *spec.max_count == 0) return;
  Enumerator e(n);
  e.generate(static_cast<std::uint32_t>((1U << n) - 1), [&](const Shape& s) {
    Builder b(spec.taxa);
    b.shape(s);
    const Network net = b.finish();
    if (!spec.filters.empty() && !passes(classify(net), spec.filters)) return true;
    if (!visit(net)) return false;
    return !(spec.max_count && ++count >= *spec.max_count);
  });
}

std::vector<Network> enumerate_level1(const EnumSpec& spec) {
  std::vector<Network> out;
  for_each_level1(spec, [&](const Network& n) {
    out.push_back(n);
    return true;
  });
  return out;
}

Network construct_simple(const std::string& hybrid_leaf, const std::vector<std::string>& left,
                         const std::vector<std::string>& right) {
  std::vector<std::string> all{hybrid_leaf};
  all.insert(all.end(), left.begin(), left.end());
  all.insert(all.end(), right.begin(), right.end());
  if (std::set<std::string>(all.begin(), all.end()).size() != all.size())
    throw Error(ErrorKind::DuplicateTaxon, "taxa must be distinct");
  if (left.size() + right.size() < 2)
    throw Error(ErrorKind::ShortCycle, "a simple network needs at least three leaves");
  Builder b(all);
  std::vector<long long> first, second;
  for (auto it = left.rbegin(); it != left.rend(); ++it) first.push_back(b.leaf(*it));
  for (auto it = right.rbegin(); it != right.rend(); ++it) second.push_back(b.leaf(*it));
  b.gall(first, second, b.leaf(hybrid_leaf));
  return b.finish();
}

SimpleLayout simple_layout(const Network& simple, int side) {
  if (!classify(simple).is_simple) throw Error(ErrorKind::NotSimple, "network is not simple");
  const Gall& gall = simple.galls().front();
  auto leaf_below = [&](VertexId s) -> const std::string& {
    for (VertexId c : simple.children(s))
      if (simple.is_leaf(c)) return simple.label(c);
    throw Error(ErrorKind::NotSimple, "cycle vertex without a leaf");
  };
  const auto& a = side == 0 ? gall.first_side : gall.second_side;
  const auto& b = side == 0 ? gall.second_side : gall.first_side;
  SimpleLayout out;
  out.x.push_back(leaf_below(gall.hybrid));
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.x.push_back(leaf_below(*it));
  for (VertexId s : b) out.x.push_back(leaf_below(s));
  out.i = a.size() + 2;
  return out;
}

namespace {

std::size_t choose3(std::size_t n) { return n * (n - 1) * (n - 2) / 6; }

// Verifies and fills in the counts; throws NotFound when the pair is not a witness.
WitnessPair verified(Network first, Network second, std::size_t n, bool exhaustive) {
  const Classification c1 = classify(first), c2 = classify(second);
  WitnessPair out{std::move(first), std::move(second), 0, 0, n - 4, exhaustive};
  out.triplets_first = triplets(out.first).size();
  out.triplets_second = triplets(out.second).size();
  if (c1.g != c2.g || c1.c != c2.c || out.triplets_first != choose3(n) + 1 ||
      out.triplets_second != out.triplets_first + out.x_prime)
    throw Error(ErrorKind::NotFound, "witness pair failed verification at n=" + std::to_string(n));
  return out;
}

}  // namespace

WitnessPair construct_witness_pair(std::size_t n) {
  if (n < 6) throw Error(ErrorKind::NotFound, "the witness family needs n >= 6");
  const auto taxa = default_taxa(n);
  // a = x1, b = x2, c = x3, d = x4; a caterpillar T on the rest.
  auto caterpillar = [&](Builder& b) {
    long long t = b.split(b.leaf(taxa[4]), b.leaf(taxa[5]));
    for (std::size_t k = 6; k < n; ++k) t = b.split(t, b.leaf(taxa[k]));
    return t;
  };
  Builder b1(taxa);
  {
    const long long g = b1.gall({b1.leaf(taxa[0])}, {b1.leaf(taxa[2])}, b1.leaf(taxa[1]));
    const long long s = b1.split(b1.leaf(taxa[3]), caterpillar(b1));
    b1.split(g, s);
  }
  Builder b2(taxa);
  {
    const long long below = b2.split(b2.leaf(taxa[1]), caterpillar(b2));
    const long long g = b2.gall({b2.leaf(taxa[0])}, {b2.leaf(taxa[2])}, below);
    b2.split(b2.leaf(taxa[3]), g);
  }
  return verified(b1.finish(), b2.finish(), n, false);
}

WitnessPair search_prop42_pair(std::size_t n) {
  if (n < 6) throw Error(ErrorKind::NotFound, "witness pairs need n >= 6");
  if (n > kMaxEnumerateTaxa) return construct_witness_pair(n);
  const std::size_t small = choose3(n) + 1, large = small + (n - 4);
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Network>> with_small, with_large;
  std::optional<std::pair<Network, Network>> found;
  for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
    const auto r = detail::triplet_bits(detail::softwired_bits(net), n).count();
    if (r != small && r != large) return true;
    const Classification c = classify(net);
    const auto key = std::make_pair(c.g, c.c);
    auto& mine = r == small ? with_small[key] : with_large[key];
    if (!mine) mine = net;
    auto& other = r == small ? with_large[key] : with_small[key];
    if (with_small[key] && with_large[key] && other) {
      found.emplace(*with_small[key], *with_large[key]);
      return false;
    }
    return true;
  });
  if (!found) throw Error(ErrorKind::NotFound, "no witness pair in L1(" + std::to_string(n) + ")");
  return verified(found->first, found->second, n, true);
}

namespace {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t m) { return engine_() % m; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t k = xs.size(); k > 1; --k) std::swap(xs[k - 1], xs[below(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Cuts xs into k nonempty consecutive blocks at random positions.
std::vector<std::vector<std::string>> random_blocks(const std::vector<std::string>& xs, std::size_t k,
                                                    PortableRng& rng) {
  std::vector<std::size_t> cuts;
  for (std::size_t c = 1; c < xs.size(); ++c) cuts.push_back(c);
  rng.shuffle(cuts);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(xs.size());
  std::vector<std::vector<std::string>> out;
  std::size_t start = 0;
  for (std::size_t c : cuts) {
    out.emplace_back(xs.begin() + static_cast<long>(start), xs.begin() + static_cast<long>(c));
    start = c;
  }
  return out;
}

long long random_pendant(std::vector<std::string> xs, double p, PortableRng& rng, Builder& b) {
  if (xs.size() == 1) return b.leaf(xs.front());
  rng.shuffle(xs);
  if (xs.size() >= 3 && rng.unit() < p) {
    const std::size_t k = 3 + rng.below(xs.size() - 2);
    auto blocks = random_blocks(xs, k, rng);
    const std::size_t j = rng.below(k);
    std::vector<long long> first, second;
    for (std::size_t m = 1; m < k; ++m)
      (m - 1 < j ? first : second).push_back(random_pendant(blocks[m], p, rng, b));
    const long long below = random_pendant(blocks[0], p, rng, b);
    return b.gall(first, second, below);
  }
  auto blocks = random_blocks(xs, 2, rng);
  const long long x = random_pendant(blocks[0], p, rng, b);
  return b.split(x, random_pendant(blocks[1], p, rng, b));
}

}  // namespace

Network random_level1(const std::vector<std::string>& taxa, std::uint64_t seed, double gall_probability) {
  check_taxa(taxa);
  PortableRng rng(seed);
  Builder b(taxa);
  random_pendant(taxa, gall_probability, rng, b);
  return b.finish();
}

}  // namespace level1
