#include "level1kit/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "canonical.hpp"

namespace level1 {

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  Network run() {
    subtree();
    skip_length();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after ';'");
    for (const auto& [tag, h] : hybrids_) {
      if (h.occurrences != 2) {
        throw Error(ErrorKind::HybridTagMismatch,
                    "#" + tag + " occurs " + std::to_string(h.occurrences) + " times");
      }
      if (h.with_children > 1) throw Error(ErrorKind::HybridTagMismatch, "#" + tag + " has two subtrees");
    }
    return Network::validate(raw_);
  }

 private:
  struct Hybrid {
    long long vertex;
    int occurrences = 0;
    int with_children = 0;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at byte " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool reserved(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '\'' ||
           std::isspace(static_cast<unsigned char>(c));
  }

  std::string label() {
    skip_space();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        if (text_[pos_] == '\'') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
            out += '\'';
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        out += text_[pos_++];
      }
    }
    while (pos_ < text_.size() && !reserved(text_[pos_])) out += text_[pos_++];
    return out;
  }

  void skip_length() {
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == 'e' || text_[pos_] == 'E' || text_[pos_] == '-' || text_[pos_] == '+'))
        ++pos_;
      if (pos_ == start) fail("expected a number after ':'");
      skip_space();
    }
  }

  // Returns the vertex the parent should point to.
  long long subtree() {
    skip_space();
    std::vector<long long> kids;
    const bool internal = pos_ < text_.size() && text_[pos_] == '(';
    if (internal) {
      ++pos_;
      while (true) {
        const long long child = subtree();
        skip_length();
        kids.push_back(child);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    const std::string name = label();
    const auto hash = name.find('#');
    if (hash != std::string::npos) {
      const std::string tag = name.substr(hash + 1);
      if (tag.size() < 2 || tag[0] != 'H' ||
          !std::all_of(tag.begin() + 1, tag.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("malformed hybrid tag '#" + tag + "'");
      auto [it, fresh] = hybrids_.try_emplace(tag, Hybrid{next_});
      if (fresh) ++next_;
      Hybrid& h = it->second;
      ++h.occurrences;
      if (internal) ++h.with_children;
      for (long long k : kids) raw_.add_arc(h.vertex, k);
      return h.vertex;
    }
    const long long v = next_++;
    if (internal) {
      for (long long k : kids) raw_.add_arc(v, k);
    } else {
      if (name.empty()) fail("expected a label or '('");
      raw_.set_label(v, name);
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  long long next_ = 0;
  RawGraph raw_;
  std::map<std::string, Hybrid> hybrids_;
};

std::string quoted(const std::string& name) {
  const bool plain = !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '\'' || c == '#' || c == '[' ||
           c == ']' || std::isspace(static_cast<unsigned char>(c));
  });
  if (plain) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

class NewickWriter {
 public:
  explicit NewickWriter(const Network& net) : net_(net) {}

  std::string run() {
    write(net_.root());
    return out_ + ";";
  }

 private:
  VertexId pendant_root(VertexId s, int gall) const {
    for (VertexId c : net_.children(s))
      if (net_.gall_of(c) != gall) return c;
    return s;
  }

  void write(VertexId v) {
    if (net_.is_leaf(v)) {
      out_ += quoted(net_.label(v));
      return;
    }
    const int g = net_.gall_of(v);
    if (g < 0) {
      VertexId x = net_.children(v)[0], y = net_.children(v)[1];
      if (detail::encode(net_, y) < detail::encode(net_, x)) std::swap(x, y);
      out_ += '(';
      write(x);
      out_ += ',';
      write(y);
      out_ += ')';
      return;
    }
    const Gall& gall = net_.galls()[static_cast<std::size_t>(g)];
    std::vector<std::string> a, b;
    for (VertexId s : gall.first_side) a.push_back(detail::encode(net_, pendant_root(s, g)));
    for (VertexId s : gall.second_side) b.push_back(detail::encode(net_, pendant_root(s, g)));
    const bool swap = b < a;
    const auto& first = swap ? gall.second_side : gall.first_side;
    const auto& second = swap ? gall.first_side : gall.second_side;
    const std::string tag = "#H" + std::to_string(++hybrids_);
    // The hybrid's subtree goes on the first side, a bare tag on the second.
    out_ += '(';
    side(first, 0, g, tag, true);
    out_ += ',';
    side(second, 0, g, tag, false);
    out_ += ')';
  }

  void side(const std::vector<VertexId>& path, std::size_t k, int g, const std::string& tag, bool full) {
    if (k == path.size()) {
      if (full) {
        const Gall& gall = net_.galls()[static_cast<std::size_t>(g)];
        out_ += '(';
        write(net_.children(gall.hybrid)[0]);
        out_ += ')';
      }
      out_ += tag;
      return;
    }
    out_ += '(';
    write(pendant_root(path[k], g));
    out_ += ',';
    side(path, k + 1, g, tag, full);
    out_ += ')';
  }

  const Network& net_;
  std::string out_;
  int hybrids_ = 0;
};

std::vector<std::string> split_names(std::string_view s, std::size_t line, const char* what) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t\r");
    const auto e = cur.find_last_not_of(" \t\r");
    if (b == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": empty taxon in " + what);
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view s = text.substr(start, end - start);
    const auto b = s.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && s[b] != '#') f(s, line);
    start = end + 1;
  }
}

std::vector<std::string> sorted_unique(std::set<std::string> names) { return {names.begin(), names.end()}; }

std::size_t index_in(const std::vector<std::string>& taxa, const std::string& name) {
  return static_cast<std::size_t>(std::lower_bound(taxa.begin(), taxa.end(), name) - taxa.begin());
}

}  // namespace

Network parse_enewick(std::string_view text) { return NewickParser(text).run(); }

std::string write_enewick(const Network& network) { return NewickWriter(network).run(); }

TripletSystem parse_triplets(std::string_view text) {
  std::vector<std::array<std::string, 3>> rows;
  std::set<std::string> names;
  for_each_line(text, [&](std::string_view s, std::size_t line) {
    const auto bar = s.find('|');
    if (bar == std::string_view::npos || s.find('|', bar + 1) != std::string_view::npos)
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": expected 'a,b|c'");
    const auto pair = split_names(s.substr(0, bar), line, "triplet");
    const auto outlier = split_names(s.substr(bar + 1), line, "triplet");
    if (pair.size() != 2 || outlier.size() != 1)
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": expected 'a,b|c'");
    if (pair[0] == pair[1] || pair[0] == outlier[0] || pair[1] == outlier[0])
      throw Error(ErrorKind::DuplicateTaxon, "line " + std::to_string(line));
    rows.push_back({pair[0], pair[1], outlier[0]});
    names.insert(pair.begin(), pair.end());
    names.insert(outlier[0]);
  });
  TripletSystem out{sorted_unique(names), {}};
  for (const auto& r : rows) {
    out.triplets.insert(Triplet::make(static_cast<std::uint32_t>(index_in(out.taxa, r[0])),
                                      static_cast<std::uint32_t>(index_in(out.taxa, r[1])),
                                      static_cast<std::uint32_t>(index_in(out.taxa, r[2]))));
  }
  return out;
}

std::string write_triplets(const TripletSystem& system) {
  std::string out;
  for (const Triplet& t : system.triplets)
    out += system.taxa[t.a] + "," + system.taxa[t.b] + "|" + system.taxa[t.c] + "\n";
  return out;
}

ClusterSystem parse_clusters(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::set<std::string> names;
  for_each_line(text, [&](std::string_view s, std::size_t line) {
    auto row = split_names(s, line, "cluster");
    if (std::set<std::string>(row.begin(), row.end()).size() != row.size())
      throw Error(ErrorKind::DuplicateTaxon, "line " + std::to_string(line));
    names.insert(row.begin(), row.end());
    rows.push_back(std::move(row));
  });
  ClusterSystem out{sorted_unique(names), {}};
  for (const auto& row : rows) {
    TaxonSet c(out.taxa.size());
    for (const auto& name : row) c.insert(index_in(out.taxa, name));
    out.clusters.insert(std::move(c));
  }
  return out;
}

std::string write_clusters(const ClusterSystem& system) {
  // Sorted by size, then by member names, for readable files.
  std::vector<std::vector<std::string>> rows;
  for (const TaxonSet& c : system.clusters) {
    std::vector<std::string> row;
    for (std::size_t i : c.members()) row.push_back(system.taxa[i]);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace level1
