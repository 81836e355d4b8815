#pragma once

// S3MESH text format:
//   S3MESH <V> <F>
//   V lines of 4 coordinates
//   F lines of 3 zero-based vertex indices

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sgb/error.hpp"
#include "sgb/mesh.hpp"

namespace sgb {

namespace detail {

// Shortest representation that parses back to the same double.
inline std::string roundtrip(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& tok) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ValidationError("S3MESH: malformed number '" + tok + "'");
  return v;
}

inline long parse_long(const std::string& tok) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ValidationError("S3MESH: malformed integer '" + tok + "'");
  return v;
}

}  // namespace detail

inline void write_s3mesh(std::ostream& os, const TriMesh& mesh) {
  os << "S3MESH " << mesh.num_vertices() << ' ' << mesh.num_triangles() << '\n';
  for (const Vec4& v : mesh.vertices)
    os << detail::roundtrip(v[0]) << ' ' << detail::roundtrip(v[1]) << ' ' << detail::roundtrip(v[2]) << ' '
       << detail::roundtrip(v[3]) << '\n';
  for (const Triangle& t : mesh.triangles) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

/// Parses and validates (validate_mesh) a mesh.
inline TriMesh read_s3mesh(std::istream& is) {
  std::string tag, tok;
  if (!(is >> tag) || tag != "S3MESH") throw ValidationError("S3MESH: missing header");
  if (!(is >> tok)) throw ValidationError("S3MESH: missing vertex count");
  const long nv = detail::parse_long(tok);
  if (!(is >> tok)) throw ValidationError("S3MESH: missing face count");
  const long nf = detail::parse_long(tok);
  if (nv <= 0 || nf <= 0) throw ValidationError("S3MESH: counts must be positive");

  TriMesh mesh;
  mesh.vertices.resize(static_cast<std::size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    for (int c = 0; c < 4; ++c) {
      if (!(is >> tok)) throw ValidationError("S3MESH: truncated vertex block");
      mesh.vertices[i][c] = detail::parse_double(tok);
    }
  }
  mesh.triangles.resize(static_cast<std::size_t>(nf));
  for (long f = 0; f < nf; ++f) {
    for (int c = 0; c < 3; ++c) {
      if (!(is >> tok)) throw ValidationError("S3MESH: truncated triangle block");
      const long idx = detail::parse_long(tok);
      if (idx < 0 || idx >= nv) throw ValidationError("S3MESH: vertex index out of range");
      mesh.triangles[f][c] = static_cast<int>(idx);
    }
  }
  if (is >> tok) throw ValidationError("S3MESH: trailing data after triangle block");
  validate_mesh(mesh);
  return mesh;
}

inline void save_s3mesh(const std::string& path, const TriMesh& mesh) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open '" + path + "' for writing");
  write_s3mesh(os, mesh);
}

inline TriMesh load_s3mesh(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open '" + path + "'");
  return read_s3mesh(is);
}

}  // namespace sgb
