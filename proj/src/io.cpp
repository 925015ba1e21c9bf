#include "bergebook/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bergebook {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Hypergraph read_3hg(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::array<Vertex, 3>> triples;
  while (std::getline(in, line)) {
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ls(body);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad header line: " + line);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens in header: " + line);
      continue;
    }
    long long a, b, c;
    if (!(ls >> a >> b >> c)) throw ParseError("bad edge line: " + line);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens in edge line: " + line);
    triples.push_back({Vertex(a), Vertex(b), Vertex(c)});
  }
  if (n < 0) throw ParseError("missing header line");
  if (static_cast<long long>(triples.size()) != m)
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(triples.size()));
  return build(int(n), triples);
}

Hypergraph load_3hg(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_3hg(f);
}

void write_3hg(std::ostream& out, const Hypergraph& h,
               const std::vector<std::string>& header_comments) {
  for (const auto& cm : header_comments) out << "# " << cm << "\n";
  out << h.n << " " << h.edges.size() << "\n";
  for (const Triple& e : h.edges)
    out << e.a << " " << e.b << " " << e.c << "\n";
}

void save_3hg(const std::string& path, const Hypergraph& h,
              const std::vector<std::string>& header_comments) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write_3hg(f, h, header_comments);
}

nlohmann::ordered_json to_json(const Triple& t) {
  return nlohmann::ordered_json::array({t.a, t.b, t.c});
}

nlohmann::ordered_json to_json(const BookCertificate& c) {
  nlohmann::ordered_json j;
  j["base"] = {std::min(c.u, c.v), std::max(c.u, c.v)};
  j["apex"] = to_json(c.apex);
  auto pages = c.pages;
  std::sort(pages.begin(), pages.end(),
            [](const BookPage& a, const BookPage& b) { return a.x < b.x; });
  j["pages"] = nlohmann::ordered_json::array();
  for (const BookPage& p : pages) {
    nlohmann::ordered_json pj;
    pj["x"] = p.x;
    pj["e"] = to_json(p.e);
    pj["f"] = to_json(p.f);
    j["pages"].push_back(pj);
  }
  return j;
}

nlohmann::ordered_json to_json(const BergeTriangleCertificate& c) {
  nlohmann::ordered_json j;
  j["core"] = {c.core[0], c.core[1], c.core[2]};
  j["edges"] = {to_json(c.edges[0]), to_json(c.edges[1]), to_json(c.edges[2])};
  return j;
}

nlohmann::ordered_json to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (const Triple& e : h.edges) j["edges"].push_back(to_json(e));
  return j;
}

nlohmann::ordered_json to_json(const PipelineReport& r) {
  nlohmann::ordered_json j;
  j["e_h1"] = r.e_h1;
  j["e_h2"] = r.e_h2;
  j["branch"] = r.branch;
  j["certificate"] =
      r.certificate ? to_json(*r.certificate) : nlohmann::ordered_json(nullptr);
  j["reduced_linear"] = r.reduced_linear ? to_json(*r.reduced_linear)
                                         : nlohmann::ordered_json(nullptr);
  j["reduced_triangle_free"] = r.reduced_triangle_free
                                   ? to_json(*r.reduced_triangle_free)
                                   : nlohmann::ordered_json(nullptr);
  j["max_deleted_per_step"] = r.max_deleted_per_step;
  j["bound_checks"] = nlohmann::ordered_json::array();
  for (const BoundCheck& b : r.bound_checks) {
    nlohmann::ordered_json bj;
    bj["name"] = b.name;
    bj["lhs"] = b.lhs;
    bj["rhs"] = b.rhs;
    bj["pass"] = b.pass;
    j["bound_checks"].push_back(bj);
  }
  return j;
}

}  // namespace bergebook
