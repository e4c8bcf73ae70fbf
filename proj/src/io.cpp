#include "rectihull/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace rectihull {

namespace {

// strips comments and blank lines
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Polyhedron read_off(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw OffParseError("empty OFF stream");
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF") throw OffParseError("missing OFF header");

  long long nv = -1, nf = -1, ne = -1;
  if (!(header >> nv >> nf >> ne)) {
    if (!next_content_line(in, line)) throw OffParseError("missing counts line");
    std::istringstream counts(line);
    if (!(counts >> nv >> nf >> ne)) throw OffParseError("bad counts line");
  }
  if (nv < 0 || nf < 0) throw OffParseError("negative counts");

  Polyhedron p;
  p.vertices.reserve(nv);
  for (long long i = 0; i < nv; ++i) {
    if (!next_content_line(in, line))
      throw OffParseError("unexpected end of file in vertex list");
    std::istringstream vs(line);
    Vec3 v;
    if (!(vs >> v.x >> v.y >> v.z)) throw OffParseError("bad vertex line: " + line);
    p.vertices.push_back(v);
  }
  for (long long i = 0; i < nf; ++i) {
    if (!next_content_line(in, line))
      throw OffParseError("unexpected end of file in face list");
    std::istringstream fs(line);
    long long k;
    if (!(fs >> k) || k < 3) throw OffParseError("bad face line: " + line);
    std::vector<int> face(k);
    for (long long j = 0; j < k; ++j) {
      if (!(fs >> face[j]) || face[j] < 0 || face[j] >= nv)
        throw OffParseError("bad face index in: " + line);
    }
    p.faces.push_back(std::move(face));
  }
  return p;
}

Polyhedron read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OffParseError("cannot open " + path);
  return read_off(in);
}

Polyhedron canonicalize(const Polyhedron& p) {
  std::vector<int> order(p.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Vec3 &u = p.vertices[a], &v = p.vertices[b];
    return std::tie(u.x, u.y, u.z) < std::tie(v.x, v.y, v.z);
  });
  std::vector<int> rank(p.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  Polyhedron q;
  q.vertices.reserve(p.vertices.size());
  for (int i : order) q.vertices.push_back(p.vertices[i]);
  for (const auto& face : p.faces) {
    std::vector<int> f;
    f.reserve(face.size());
    for (int i : face) f.push_back(rank[i]);
    auto lowest = std::min_element(f.begin(), f.end());
    std::rotate(f.begin(), lowest, f.end());
    q.faces.push_back(std::move(f));
  }
  std::sort(q.faces.begin(), q.faces.end());
  return q;
}

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_off(std::ostream& out, const Polyhedron& p) {
  out << "OFF\n"
      << p.vertices.size() << ' ' << p.faces.size() << ' ' << p.edges().size()
      << '\n';
  for (const Vec3& v : p.vertices)
    out << format_double(v.x) << ' ' << format_double(v.y) << ' '
        << format_double(v.z) << '\n';
  for (const auto& face : p.faces) {
    out << face.size();
    for (int i : face) out << ' ' << i;
    out << '\n';
  }
}

void write_off_file(const std::string& path, const Polyhedron& p) {
  std::ofstream out(path);
  if (!out) throw OffParseError("cannot write " + path);
  write_off(out, p);
}

void write_obj(std::ostream& out, const Polyhedron& p) {
  for (const Vec3& v : p.vertices)
    out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
        << format_double(v.z) << '\n';
  for (const auto& face : p.faces) {
    out << 'f';
    for (int i : face) out << ' ' << i + 1;
    out << '\n';
  }
}

void write_obj_file(const std::string& path, const Polyhedron& p) {
  std::ofstream out(path);
  if (!out) throw OffParseError("cannot write " + path);
  write_obj(out, p);
}

}  // namespace rectihull
