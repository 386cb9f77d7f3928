#pragma once

#include <cstddef>
#include <vector>

#include "normalsurf/triangulation.hpp"

namespace normalsurf {

struct EdgeMember {
    std::size_t tet;
    int edge;  ///< tetrahedron edge index, see edge_index()
    int sign;  ///< +1 when the member's low->high direction agrees with the class orientation
};

struct EdgeClass {
    std::vector<EdgeMember> members;  ///< members[0] is the lexicographically least and defines orientation
    std::size_t start = 0;            ///< vertex class at the tail of the oriented class
    std::size_t end = 0;              ///< vertex class at the head
    bool boundary = false;            ///< some incident face is a boundary face

    std::size_t degree() const { return members.size(); }
};

struct VertexMember {
    std::size_t tet;
    int vertex;
};

/// Topological type of a vertex, read off its link.
enum class VertexKind {
    Material,  ///< closed link with chi = 2 (sphere) or bounded link with chi = 1 (disk)
    Ideal,     ///< closed link with chi != 2, e.g. the torus link of a deleted vertex
    Singular,  ///< bounded link that is not a disk
};

struct VertexClass {
    std::vector<VertexMember> members;
    bool boundary = false;  ///< the link has boundary
    long linkEuler = 0;
    VertexKind kind = VertexKind::Material;

    std::size_t degree() const { return members.size(); }
};

struct FaceMember {
    std::size_t tet;
    int omitted;
};

struct FaceClass {
    std::vector<FaceMember> members;  ///< one member for boundary faces, two otherwise
    bool boundary() const { return members.size() == 1; }
};

/// Edge, vertex and face classes of a triangulation, with lookup tables from
/// tetrahedron-local labels to class indices.
class Skeleton {
public:
    std::vector<EdgeClass> edges;
    std::vector<VertexClass> vertices;
    std::vector<FaceClass> faces;

    std::size_t edge_of(std::size_t tet, int edge) const { return edgeOf_[6 * tet + static_cast<std::size_t>(edge)]; }
    int edge_sign(std::size_t tet, int edge) const { return edgeSign_[6 * tet + static_cast<std::size_t>(edge)]; }
    std::size_t vertex_of(std::size_t tet, int v) const { return vertexOf_[4 * tet + static_cast<std::size_t>(v)]; }
    std::size_t face_of(std::size_t tet, int omitted) const { return faceOf_[4 * tet + static_cast<std::size_t>(omitted)]; }

    /// Class of the tetrahedron edge a->b and the sign of that direction relative
    /// to the class orientation.
    std::pair<std::size_t, int> oriented_edge(std::size_t tet, int a, int b) const;

    bool has_ideal_vertex() const;

private:
    friend Skeleton compute_skeleton(const Triangulation&);
    std::vector<std::size_t> edgeOf_;
    std::vector<int> edgeSign_;
    std::vector<std::size_t> vertexOf_;
    std::vector<std::size_t> faceOf_;
};

/// Orbit closure of edges, vertices and faces under the gluings.
/// Requires validate(tri).ok(); throws PreconditionError otherwise.
Skeleton compute_skeleton(const Triangulation& tri);

}  // namespace normalsurf
