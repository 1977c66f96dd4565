#include "edim/edge_list_io.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace edim {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream stream(line);
  std::vector<long long> values;
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      fail(errc::parse_error, "line " + std::to_string(line_no) +
                                  ": expected an integer, got '" + token +
                                  "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

RawEdgeList read_raw_edge_list(std::istream& in) {
  bool have_count = false;
  long long vertex_count = 0;
  std::vector<edge_t> edges;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment_or_blank(line)) continue;

    auto values = parse_ints(line, line_no);
    for (long long value : values) {
      if (value < -1'000'000'000LL || value > 1'000'000'000LL) {
        fail(errc::parse_error, "line " + std::to_string(line_no) +
                                    ": value out of range");
      }
    }
    if (!have_count) {
      if (values.size() != 1) {
        fail(errc::parse_error,
             "line " + std::to_string(line_no) +
                 ": expected a single vertex count, got " +
                 std::to_string(values.size()) + " values");
      }
      vertex_count = values[0];
      have_count = true;
    } else {
      if (values.size() != 2) {
        fail(errc::parse_error, "line " + std::to_string(line_no) +
                                    ": expected two vertex indices, got " +
                                    std::to_string(values.size()) + " values");
      }
      edges.push_back({static_cast<int>(values[0]),
                       static_cast<int>(values[1])});
    }
  }
  if (!have_count) {
    fail(errc::parse_error, "missing vertex count line");
  }
  return {static_cast<int>(vertex_count), std::move(edges)};
}

RawEdgeList read_raw_edge_list(const std::string& text) {
  std::istringstream stream(text);
  return read_raw_edge_list(stream);
}

Graph read_edge_list(std::istream& in) {
  auto raw = read_raw_edge_list(in);
  return Graph(raw.vertex_count, std::move(raw.edges));
}

Graph read_edge_list(const std::string& text) {
  std::istringstream stream(text);
  return read_edge_list(stream);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace edim
