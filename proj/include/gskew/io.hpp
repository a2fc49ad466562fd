// Copyright 2026 The gskew Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Graph corpus readers and writers: graph6, edge lists, attributed text.
// Grammars are documented in the README.

#pragma once

#include <Eigen/Dense>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gskew/error.hpp"
#include "gskew/graph_fn.hpp"

namespace gskew {

struct GraphRecord {
  std::string id;
  GraphInput input;
  bool directed = false;
};

enum class GraphFormat { kGraph6, kEdgeList, kAttr };

inline std::optional<GraphFormat> parse_graph_format(std::string_view s) {
  if (s == "g6" || s == "graph6") return GraphFormat::kGraph6;
  if (s == "edgelist") return GraphFormat::kEdgeList;
  if (s == "attr") return GraphFormat::kAttr;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Content without a trailing '#' comment.
inline std::string_view strip_comment(std::string_view s) {
  const auto p = s.find('#');
  return trim(p == std::string_view::npos ? s : s.substr(0, p));
}

inline long parse_int(std::string_view tok, const std::string& src, int line, const char* what) {
  long v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(src, line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

inline double parse_real(std::string_view tok, const std::string& src, int line) {
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError(src, line, "expected a finite real number, got '" + s + "'");
  }
  return v;
}

}  // namespace detail

// ---- graph6 ---------------------------------------------------------------

inline GraphRecord parse_graph6_line(std::string_view text, const std::string& src, int line) {
  std::string_view s = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError(src, line, "empty graph6 record");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError(src, line, "graph6 byte outside [63, 126]");
  }
  std::size_t pos = 0;
  auto take = [&](int count) {
    long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError(src, line, "truncated graph6 size field");
      v = (v << 6) | (s[pos++] - 63);
    }
    return v;
  };
  long n = 0;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 4096) throw ParseError(src, line, "graph6 graph too large");
  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) {
    throw ParseError(src, line, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                                    std::to_string(need));
  }
  GraphRecord rec;
  rec.id = std::to_string(line);
  rec.input.adjacency = Eigen::MatrixXd::Zero(n, n);
  long k = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + static_cast<std::size_t>(k / 6)] - 63;
      if (byte >> (5 - k % 6) & 1) rec.input.adjacency(i, j) = rec.input.adjacency(j, i) = 1.0;
    }
  }
  return rec;
}

// Requires a simple undirected graph; any non-zero off-diagonal entry is an edge.
inline std::string to_graph6(const Eigen::MatrixXd& a) {
  const long n = a.rows();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    throw SizeError("to_graph6: graph too large");
  }
  int acc = 0, filled = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) | (a(i, j) != 0.0 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline std::vector<GraphRecord> read_graph6(std::istream& in, const std::string& src) {
  std::vector<GraphRecord> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (detail::trim(line).empty()) continue;
    out.push_back(parse_graph6_line(line, src, no));
  }
  return out;
}

// ---- edge list ------------------------------------------------------------

inline std::vector<GraphRecord> read_edgelist(std::istream& in, const std::string& src) {
  std::vector<GraphRecord> out;
  std::string raw;
  std::vector<std::vector<char>> seen;
  for (int no = 1; std::getline(in, raw); ++no) {
    const std::string_view s = detail::strip_comment(raw);
    if (s.empty()) continue;
    const auto tok = detail::split_ws(s);
    if (tok[0] == "graph") {
      if (tok.size() < 3 || tok.size() > 4) throw ParseError(src, no, "expected 'graph <id> <n> [directed]'");
      const long n = detail::parse_int(tok[2], src, no, "node count");
      if (n < 1 || n > 4096) throw ParseError(src, no, "node count must lie in [1, 4096]");
      GraphRecord rec;
      rec.id = std::string(tok[1]);
      if (tok.size() == 4) {
        if (tok[3] != "directed") throw ParseError(src, no, "unknown graph flag '" + std::string(tok[3]) + "'");
        rec.directed = true;
      }
      rec.input.adjacency = Eigen::MatrixXd::Zero(n, n);
      out.push_back(std::move(rec));
      seen.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
      continue;
    }
    if (out.empty()) throw ParseError(src, no, "edge before any 'graph' header");
    if (tok.size() < 2 || tok.size() > 3) throw ParseError(src, no, "expected 'u v [w]'");
    GraphRecord& rec = out.back();
    const long n = rec.input.adjacency.rows();
    const long u = detail::parse_int(tok[0], src, no, "node");
    const long v = detail::parse_int(tok[1], src, no, "node");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(src, no, "node index outside [1, n]");
    const double w = tok.size() == 3 ? detail::parse_real(tok[2], src, no) : 1.0;
    auto& mark = seen[u - 1][v - 1];
    if (mark) throw ParseError(src, no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    mark = 1;
    rec.input.adjacency(u - 1, v - 1) = w;
    if (!rec.directed) {
      seen[v - 1][u - 1] = 1;
      rec.input.adjacency(v - 1, u - 1) = w;
    }
  }
  return out;
}

// ---- attributed text ------------------------------------------------------

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string src) : in_(in), src_(std::move(src)) {}

  // Next non-blank, comment-stripped line; nullopt at end of input.
  std::optional<std::vector<std::string_view>> next() {
    while (std::getline(in_, buf_)) {
      ++line_;
      const std::string_view s = strip_comment(buf_);
      if (!s.empty()) return split_ws(s);
    }
    return std::nullopt;
  }

  int line() const { return line_; }
  const std::string& src() const { return src_; }

  Eigen::MatrixXd matrix(long rows, long cols) {
    Eigen::MatrixXd m(rows, cols);
    for (long r = 0; r < rows; ++r) {
      auto tok = next();
      if (!tok) throw ParseError(src_, line_, "unexpected end of input inside a matrix");
      if (static_cast<long>(tok->size()) != cols) {
        throw ParseError(src_, line_, "matrix row has " + std::to_string(tok->size()) + " values, expected " +
                                          std::to_string(cols));
      }
      for (long c = 0; c < cols; ++c) m(r, c) = parse_real((*tok)[c], src_, line_);
    }
    return m;
  }

 private:
  std::istream& in_;
  std::string src_;
  std::string buf_;
  int line_ = 0;
};

}  // namespace detail

inline std::vector<GraphRecord> read_attr(std::istream& in, const std::string& src) {
  std::vector<GraphRecord> out;
  detail::LineReader rd(in, src);
  while (auto tok = rd.next()) {
    if ((*tok)[0] != "graph" || tok->size() != 2) throw ParseError(src, rd.line(), "expected 'graph <id>'");
    GraphRecord rec;
    rec.id = std::string((*tok)[1]);
    long n = -1;
    bool closed = false;
    while (auto t = rd.next()) {
      const auto& key = (*t)[0];
      const int at = rd.line();
      auto need_n = [&] {
        if (n < 0) throw ParseError(src, at, "'" + std::string(key) + "' before 'n'");
      };
      if (key == "end") {
        closed = true;
        break;
      } else if (key == "n" && t->size() == 2) {
        if (n >= 0) throw ParseError(src, at, "duplicate 'n'");
        n = detail::parse_int((*t)[1], src, at, "node count");
        if (n < 1 || n > 4096) throw ParseError(src, at, "node count must lie in [1, 4096]");
      } else if (key == "adjacency" && t->size() == 1) {
        need_n();
        rec.input.adjacency = rd.matrix(n, n);
      } else if (key == "node_features" && t->size() == 2) {
        need_n();
        rec.input.node_features = rd.matrix(n, detail::parse_int((*t)[1], src, at, "feature count"));
      } else if (key == "edge_feature" && t->size() == 1) {
        need_n();
        rec.input.edge_features.push_back(rd.matrix(n, n));
      } else if (key == "layer" && t->size() == 1) {
        need_n();
        rec.input.layers.push_back(rd.matrix(n, n));
      } else if (key == "incidence" && t->size() == 2) {
        need_n();
        rec.input.hyper_incidence = rd.matrix(detail::parse_int((*t)[1], src, at, "hyperedge count"), n);
      } else {
        throw ParseError(src, at, "unknown or malformed attribute line '" + std::string(key) + "'");
      }
    }
    if (!closed) throw ParseError(src, rd.line(), "graph '" + rec.id + "' is missing 'end'");
    if (n < 0) throw ParseError(src, rd.line(), "graph '" + rec.id + "' has no 'n'");
    if (rec.input.adjacency.size() == 0) rec.input.adjacency = Eigen::MatrixXd::Zero(n, n);
    try {
      rec.input.validate();
    } catch (const std::exception& e) {
      throw ParseError(src, rd.line(), e.what());
    }
    rec.directed = rec.input.adjacency != rec.input.adjacency.transpose();
    out.push_back(std::move(rec));
  }
  return out;
}

inline void write_attr(std::ostream& os, const GraphRecord& rec) {
  auto mat = [&](const Eigen::MatrixXd& m) {
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
        os << (c ? " " : "") << buf;
      }
      os << '\n';
    }
  };
  const GraphInput& g = rec.input;
  os << "graph " << rec.id << "\nn " << g.n() << "\nadjacency\n";
  mat(g.adjacency);
  if (g.node_features.size() > 0) {
    os << "node_features " << g.node_features.cols() << '\n';
    mat(g.node_features);
  }
  for (const auto& m : g.edge_features) {
    os << "edge_feature\n";
    mat(m);
  }
  for (const auto& m : g.layers) {
    os << "layer\n";
    mat(m);
  }
  if (g.hyper_incidence.size() > 0) {
    os << "incidence " << g.hyper_incidence.rows() << '\n';
    mat(g.hyper_incidence);
  }
  os << "end\n";
}

inline std::vector<GraphRecord> read_graphs(std::istream& in, GraphFormat fmt, const std::string& src) {
  switch (fmt) {
    case GraphFormat::kGraph6:
      return read_graph6(in, src);
    case GraphFormat::kEdgeList:
      return read_edgelist(in, src);
    case GraphFormat::kAttr:
      return read_attr(in, src);
  }
  return {};
}

inline std::vector<GraphRecord> read_graph_file(const std::string& path, GraphFormat fmt) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_graphs(in, fmt, path);
}

}  // namespace gskew
