#include "graphforms/graph_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace graphforms {

namespace {

constexpr long long kMaxGraph6Order = 1LL << 18;

[[noreturn]] void fail_at(size_t pos, const std::string& what) {
  throw Error("graph6: " + what + " at byte " + std::to_string(pos));
}

int sextet(const std::string& s, size_t pos) {
  if (pos >= s.size()) fail_at(pos, "unexpected end of input");
  int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) fail_at(pos, "character out of range");
  return c - 63;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Graph parse_graph6(const std::string& input) {
  std::string s = input;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  size_t pos = 0;
  const std::string header = ">>graph6<<";
  if (s.compare(0, header.size(), header) == 0) pos = header.size();
  if (pos >= s.size()) fail_at(pos, "empty graph6 string");

  long long n = 0;
  if (s[pos] == '~') {
    if (pos + 1 < s.size() && s[pos + 1] == '~') {
      for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(s, pos + 2 + i);
      pos += 8;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(s, pos + 1 + i);
      pos += 4;
    }
  } else {
    n = sextet(s, pos);
    pos += 1;
  }
  if (n > kMaxGraph6Order) fail_at(pos, "vertex count exceeds 2^18");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) < bytes) fail_at(s.size(), "truncated adjacency data");
  if (static_cast<long long>(s.size() - pos) > bytes) fail_at(pos + bytes, "trailing data");

  std::vector<Edge> edges;
  long long k = 0;
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i, ++k) {
      int word = sextet(s, pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (bits % 6 != 0) {
    int last = sextet(s, pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) fail_at(pos + bytes - 1, "nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  } else {
    out += "~~";
    for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  }
  int word = 0, fill = 0;
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = fill = 0;
      }
    }
  if (fill) out.push_back(static_cast<char>(63 + (word << (6 - fill))));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> nums;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw Error("");
      } catch (...) {
        throw Error("edge list: bad token '" + tok + "'");
      }
    }
  }
  if (nums.size() < 2) throw Error("edge list: missing 'n m' header");
  long long n = nums[0], m = nums[1];
  if (n < 0 || m < 0) throw Error("edge list: negative header value");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m) {
    throw Error("edge list: expected " + std::to_string(m) + " edges");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) edges.emplace_back(static_cast<int>(nums[2 + 2 * i]), static_cast<int>(nums[3 + 2 * i]));
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("graph json: edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(n, edges);
    if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::string>>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("graph json: ") + e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph load_graph(const std::string& arg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    auto ext = fs::path(arg).extension().string();
    std::string text = slurp(arg);
    if (ext == ".json") {
      try {
        return graph_from_json(nlohmann::json::parse(text));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error("'" + arg + "': " + e.what());
      }
    }
    if (ext == ".g6") {
      auto gs = read_graph6_file(arg);
      if (gs.empty()) throw Error("'" + arg + "' contains no graph");
      return gs.front();
    }
    return parse_edge_list(text);
  }
  if (arg.rfind("g6:", 0) == 0) return parse_graph6(arg.substr(3));
  try {
    return make_graph(FamilySpec::parse(arg));
  } catch (const Error&) {
    return parse_graph6(arg);
  }
}

}  // namespace graphforms
