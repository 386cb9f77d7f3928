#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "normalsurf/link.hpp"
#include "normalsurf/skeleton.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  ///< row-major

/// Smith normal form P * A * Q = D with P, Q unimodular; Qinv = Q^-1.
/// The nonzero diagonal entries d_0 | d_1 | ... are positive.
struct SmithForm {
    std::vector<BigInt> diagonal;  ///< the nonzero invariant factors, in order
    IntMatrix P, Q, Qinv;
    std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Cellular chain complex of the triangulation over its skeleton classes.
/// Edge classes are oriented by their least member, face classes by the
/// ascending vertex order of their first member.
struct ChainComplex {
    Skeleton skeleton;
    IntMatrix boundary1;  ///< vertex classes x edge classes
    IntMatrix boundary2;  ///< edge classes x face classes
    std::vector<std::string> warnings;
};

ChainComplex chain_complex(const Triangulation& tri);

/// Integer 1-chain, one coefficient per edge class.
using EdgeChain = std::vector<BigInt>;

/// Chain of a representative edge a->b of `tet`, with multiplicity.
EdgeChain edge_chain(const Skeleton& sk, std::size_t tet, int a, int b, long multiplicity = 1);
EdgeChain chain_of_cycle(const Triangulation& tri, const Skeleton& sk, const EdgeCycle& cycle);
EdgeChain add_chains(const EdgeChain& a, const EdgeChain& b);

/// An H1 class: residues modulo each torsion factor, then free coordinates.
struct HomologyClass {
    std::vector<BigInt> torsion;
    std::vector<BigInt> free;
    bool is_null() const;
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

enum class HomologyMode { Lenient, Strict };

class H1Summary {
public:
    std::size_t freeRank = 0;
    std::vector<BigInt> torsion;  ///< invariant factors > 1
    std::vector<std::string> warnings;

    /// Class of a 1-cycle. Throws PreconditionError if `chain` is not a cycle.
    HomologyClass classify(const EdgeChain& chain) const;
    HomologyClass add(const HomologyClass& a, const HomologyClass& b) const;

    /// "Z", "Z^2 + Z/3", "0", ...
    std::string describe() const;

private:
    friend H1Summary h1(const ChainComplex&, HomologyMode);
    IntMatrix boundary1_;
    std::size_t edgeCount_ = 0;
    IntMatrix kernelCoords_;  ///< rows of Q1^-1 past rank(boundary1)
    IntMatrix reduce_;        ///< P of the relation matrix
    std::vector<BigInt> factors_;  ///< all nonzero invariant factors of the relation matrix
};

/// H1 = ker d1 / im d2. In strict mode a vertex with a non-sphere, non-disk
/// link is an error; otherwise it becomes a warning.
H1Summary h1(const ChainComplex& cc, HomologyMode mode = HomologyMode::Lenient);
H1Summary h1(const Triangulation& tri, HomologyMode mode = HomologyMode::Lenient);

/// The cycle is null-homologous. Throws InputError for an invalid cycle.
bool verify_zero_pushoff(const Triangulation& tri, const EdgeCycle& cycle, HomologyMode mode = HomologyMode::Lenient);

}  // namespace normalsurf
