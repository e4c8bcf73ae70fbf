#pragma once

#include <iosfwd>
#include <string>

#include "rectihull/core.hpp"

namespace rectihull {

struct OffParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polyhedron read_off(std::istream& in);
Polyhedron read_off_file(const std::string& path);

// Canonical ordering: vertices sorted lexicographically by coordinates, each
// face cycle rotated to start at its smallest index, faces sorted. Writing a
// canonicalized polyhedron is byte-stable across read/write round trips.
Polyhedron canonicalize(const Polyhedron& p);

void write_off(std::ostream& out, const Polyhedron& p);
void write_off_file(const std::string& path, const Polyhedron& p);

void write_obj(std::ostream& out, const Polyhedron& p);
void write_obj_file(const std::string& path, const Polyhedron& p);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

}  // namespace rectihull
