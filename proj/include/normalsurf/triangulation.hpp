#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normalsurf {

/// Permutation of the vertex labels {0,1,2,3}; `p[i]` is the image of i.
class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    constexpr int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }

    constexpr Perm4 inverse() const {
        Perm4 inv;
        for (int i = 0; i < 4; ++i) inv.image_[image_[i]] = static_cast<std::uint8_t>(i);
        return inv;
    }

    /// +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (image_[i] > image_[j]) s = -s;
        return s;
    }

    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;

private:
    std::array<std::uint8_t, 4> image_;
};

/// Index of the unordered tetrahedron edge {a,b}:
/// 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}.
int edge_index(int a, int b);

/// Endpoints (ascending) of tetrahedron edge `e`.
std::array<int, 2> edge_vertices(int e);

/// The vertices of the face opposite `omitted`, ascending.
std::array<int, 3> face_vertices(int omitted);

/// A face of a tetrahedron named by an ordered triple of its vertex labels.
/// The order matters only when the spot is one side of a gluing.
struct FaceSpot {
    std::size_t tet = 0;
    std::array<int, 3> verts{};

    /// The vertex not on this face.
    int omitted() const;
    friend bool operator==(const FaceSpot&, const FaceSpot&) = default;
};

/// Destination of a face gluing: the other tetrahedron and the full vertex map
/// (the omitted vertex maps to the other face's omitted vertex).
struct FaceTarget {
    std::size_t tet = 0;
    Perm4 perm;
    friend bool operator==(const FaceTarget&, const FaceTarget&) = default;
};

/// A generalized triangulation: named tetrahedra whose faces are glued in pairs
/// by vertex bijections. Stored as a raw partial map from faces to faces, so an
/// instance can hold violations that `validate` reports.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t tet) const { return names_.at(tet); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Records the single direction `from -> to` (from.verts[i] maps to to.verts[i]).
    /// Throws InputError on bad indices, repeated labels, or if `from` is already glued.
    void set_gluing(const FaceSpot& from, const FaceSpot& to);

    /// Records `from -> to` and its inverse.
    void glue(const FaceSpot& from, const FaceSpot& to);

    /// Removes the entry for the face of `tet` opposite `omitted`, if any.
    void unset_gluing(std::size_t tet, int omitted);

    /// Gluing of the face of `tet` opposite vertex `omitted`; empty for boundary faces.
    const std::optional<FaceTarget>& target(std::size_t tet, int omitted) const {
        return faces_.at(tet)[static_cast<std::size_t>(omitted)];
    }

    bool is_boundary(std::size_t tet, int omitted) const { return !target(tet, omitted); }
    std::size_t boundary_face_count() const;

    /// Appends the tetrahedra of `other`, renaming each with `suffix`.
    void append_disjoint(const Triangulation& other, std::string_view suffix);

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::array<std::optional<FaceTarget>, 4>> faces_;
};

enum class ViolationKind { NonInvolutive, SelfGluing, DuplicateFaceUse };

struct Violation {
    ViolationKind kind;
    std::size_t tet;
    int omitted;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Triangulation& tri);

/// Throws PreconditionError naming the first violation if `tri` is invalid.
void require_valid(const Triangulation& tri);

/// Human-readable face name in the table notation, e.g. `p(012)`.
std::string face_name(const Triangulation& tri, const FaceSpot& spot);
std::string edge_name(const Triangulation& tri, std::size_t tet, int a, int b);

}  // namespace normalsurf
