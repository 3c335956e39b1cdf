#pragma once

// Compact 3-manifold triangulations given as tetrahedron gluing tables.

#include "nsurf/perm4.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsurf {

/// Error raised by the gluing-table parser; carries the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// One side of a face gluing: glue onto face `face` of tetrahedron `tet`
/// via `perm` (corner images of the whole source tetrahedron; perm maps the
/// source face index to `face`).
struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;
};

/// A triangulation is a list of tetrahedra with (partial) face gluings.
/// Unglued faces form the boundary.
class Triangulation {
public:
    explicit Triangulation(int n = 0, std::string name = "")
        : name_(std::move(name)), glue_(static_cast<std::size_t>(n) * 4) {}

    int size() const { return static_cast<int>(glue_.size() / 4); }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::optional<Gluing>& gluing(int tet, int face) const {
        return glue_[static_cast<std::size_t>(tet) * 4 + face];
    }
    bool is_boundary_face(int tet, int face) const { return !gluing(tet, face).has_value(); }

    /// Record the gluing (tet,face) -> (g.tet,g.face) and its inverse on the
    /// other side.  Throws std::invalid_argument on inconsistent data
    /// (indices out of range, perm not mapping face to face, face already
    /// glued, or a face glued to itself by the identity).
    void glue(int tet, int face, const Gluing& g);

    /// Number of unglued faces.
    int boundary_face_count() const {
        int c = 0;
        for (const auto& g : glue_)
            if (!g) ++c;
        return c;
    }
    bool is_closed() const { return boundary_face_count() == 0; }

    /// Serialize in the gluing-table text format.
    std::string to_text() const;

private:
    std::string name_;
    std::vector<std::optional<Gluing>> glue_;
};

/// Parse the gluing-table text format:
///
///     # comment
///     tets <n>
///     tet <i>: <g0> <g1> <g2> <g3>
///
/// where each <gf> is `bdry` or `j:p` (target tetrahedron j, permutation p
/// as the 4-digit image of corners 0123).  Gluings must be involutive: if
/// face f of tet i is glued to face g of tet j by p, the table must glue
/// face g of tet j back to face f of tet i by p^-1.
/// Throws ParseError with a line number on malformed input.
Triangulation parse_triangulation(const std::string& text, const std::string& name = "");

/// Convenience: read a file and parse it.  Throws std::runtime_error if the
/// file cannot be read, ParseError on bad content.
Triangulation load_triangulation(const std::string& path);

}  // namespace nsurf
