#include "char2paley/formats.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "char2paley/errors.hpp"

namespace char2paley {

namespace {

void write_header(std::ostream& os, const FieldCtx& f, const ParamA& a, std::uint32_t n) {
  os << "# k=" << f.degree() << " a=" << to_hex(a.a.bits) << " poly=" << to_hex(f.modulus())
     << " n=" << n << '\n';
}

void write_matrix_rows(std::ostream& os, const BitMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t digits = (n + 3) / 4;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string line(digits, '0');
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t d = 0; d < digits; ++d) {
      unsigned nibble = 0;
      for (unsigned b = 0; b < 4; ++b) {
        const std::size_t col = 4 * d + b;
        if (col < n && m.test(r, col)) nibble |= 1u << b;
      }
      line[digits - 1 - d] = kHex[nibble];
    }
    os << line << '\n';
  }
}

void write_json(std::ostream& os, const FieldCtx& f, const ParamA& a, const BitMatrix& m,
                bool directed) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = directed ? "tournament" : "graph";
  j["k"] = f.degree();
  j["q"] = f.order();
  j["poly"] = to_hex(f.modulus());
  j["a"] = to_hex(a.a.bits);
  j["n"] = m.size();
  // ordered_json keeps keys in a vector, so build both members before inserting.
  auto vertices = nlohmann::ordered_json::array();
  auto adjacency = nlohmann::ordered_json::object();
  for (std::uint32_t u = 0; u < m.size(); ++u) {
    const std::string label = point_label(vertex_at(u));
    vertices.push_back(label);
    auto list = nlohmann::ordered_json::array();
    for (std::uint32_t v = 0; v < m.size(); ++v) {
      if (m.test(u, v)) list.push_back(point_label(vertex_at(v)));
    }
    adjacency[label] = std::move(list);
  }
  j["vertices"] = std::move(vertices);
  j["adjacency"] = std::move(adjacency);
  os << j.dump(1) << '\n';
}

void write_any(std::ostream& os, const FieldCtx& f, const ParamA& a, const BitMatrix& m,
               bool directed, GraphFormat fmt) {
  const auto n = static_cast<std::uint32_t>(m.size());
  switch (fmt) {
    case GraphFormat::edges:
      write_header(os, f, a, n);
      for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = directed ? 0 : u + 1; v < n; ++v) {
          if (!m.test(u, v)) continue;
          os << point_label(vertex_at(u)) << (directed ? " > " : " ") << point_label(vertex_at(v))
             << '\n';
        }
      }
      break;
    case GraphFormat::dimacs: {
      const std::size_t arcs = m.count();
      os << "c k=" << f.degree() << " a=" << to_hex(a.a.bits) << " poly=" << to_hex(f.modulus())
         << '\n';
      os << "p " << (directed ? "arc" : "edge") << ' ' << n << ' ' << (directed ? arcs : arcs / 2)
         << '\n';
      for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = directed ? 0 : u + 1; v < n; ++v) {
          if (m.test(u, v)) os << (directed ? "a " : "e ") << u + 1 << ' ' << v + 1 << '\n';
        }
      }
      break;
    }
    case GraphFormat::matrix:
      write_matrix_rows(os, m);
      break;
    case GraphFormat::json:
      write_json(os, f, a, m, directed);
      break;
  }
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edges") return GraphFormat::edges;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "matrix") return GraphFormat::matrix;
  if (name == "json") return GraphFormat::json;
  throw PreconditionError("unknown format '" + name + "'");
}

void write_graph(std::ostream& os, const PaleyLikeGraph& g, GraphFormat fmt) {
  write_any(os, g.field(), g.param(), g.matrix(), false, fmt);
}

void write_tournament(std::ostream& os, const PaleyLikeTournament& t, GraphFormat fmt) {
  write_any(os, t.field(), t.param(), t.matrix(), true, fmt);
}

void write_decomposition(std::ostream& os, const HamiltonianDecomposition& dec) {
  os << "p=" << dec.p << " cycles=" << dec.cycles.size() << '\n';
  for (const auto& cycle : dec.cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (t != 0) os << ' ';
      os << point_label(cycle[t]);
    }
    os << '\n';
  }
}

EdgeList parse_edge_list(std::istream& is) {
  EdgeList out;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw PreconditionError("edge list must start with a '# k=... n=...' header");
  }
  {
    std::istringstream hs(line.substr(2));
    std::string field;
    bool have_k = false, have_n = false;
    while (hs >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw PreconditionError("bad header field '" + field + "'");
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "k") {
        out.k = static_cast<unsigned>(std::stoul(value));
        have_k = true;
      } else if (key == "a") {
        out.a = parse_hex(value);
      } else if (key == "poly") {
        out.poly = parse_hex(value);
      } else if (key == "n") {
        out.n = static_cast<std::uint32_t>(std::stoul(value));
        have_n = true;
      }
    }
    if (!have_k || !have_n) throw PreconditionError("header lacks k or n");
  }
  const FieldCtx ctx(out.k, out.poly == 0 ? std::nullopt : std::optional<std::uint64_t>(out.poly));
  if (out.n != ctx.order() + 1) throw PreconditionError("header n does not equal 2^k + 1");
  out.adjacency = BitMatrix(out.n);
  bool seen_line = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string u, mid, v;
    ls >> u >> mid;
    const bool arc = mid == ">";
    if (arc) {
      ls >> v;
    } else {
      v = mid;
    }
    if (u.empty() || v.empty()) throw PreconditionError("bad edge line '" + line + "'");
    if (seen_line && arc != out.directed) throw PreconditionError("mixed edges and arcs");
    out.directed = arc;
    seen_line = true;
    const std::uint32_t iu = vertex_index(parse_point_label(ctx, u));
    const std::uint32_t iv = vertex_index(parse_point_label(ctx, v));
    if (iu == iv) throw PreconditionError("loop in edge list");
    out.adjacency.set(iu, iv);
    if (!arc) out.adjacency.set(iv, iu);
  }
  return out;
}

}  // namespace char2paley
