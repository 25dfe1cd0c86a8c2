#pragma once

// Pointed-category constructions on finite-dimensional algebras: ideals and
// their closures, kernels, quotients, cokernels, coequalizers, products,
// pullbacks, image factorizations, exactness, the split short five lemma,
// derivations and the commutator bracket.

#include <cstddef>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

bool is_subalgebra(const Algebra& a, const Subspace& s);
/// AI and IA inside I; decided on basis generators.
bool is_ideal(const Algebra& a, const Subspace& s);

/// Smallest ideal containing the elements: fixpoint of I <- I + AI + IA.
Subspace generated_ideal(const Algebra& a, const std::vector<Vec>& elements);
/// Smallest subalgebra containing the elements: fixpoint of S <- S + SS.
Subspace generated_subalgebra(const Algebra& a, const std::vector<Vec>& elements);

struct Subobject {
  Algebra algebra;
  Morphism inclusion;
};

/// Algebra structure induced on a subalgebra's canonical basis. Basis vectors
/// that are unit vectors keep the ambient name, others are named
/// `<prefix><k>`.
Subobject induced_subalgebra(const Algebra& a, const Subspace& s, const std::string& prefix = "s");

Subobject kernel(const Morphism& f);

struct Quotient {
  Algebra algebra;
  Morphism projection;
};

/// Quotient by an ideal on canonical coset representatives; NotAnIdeal otherwise.
Quotient quotient(const Algebra& a, const Subspace& ideal);
/// Coset multiplication (a+S)(b+S) = ab+S computed on representatives
/// without checking that S is an ideal, plus the linear projection. Used to
/// probe the ideal/kernel equivalences; the result is an algebra exactly when
/// the projection is multiplicative.
std::pair<Algebra, Matrix> coset_structure(const Algebra& a, const Subspace& s);

Quotient cokernel(const Morphism& f);
Quotient coequalizer(const Morphism& f, const Morphism& g);

struct Cone {
  Algebra algebra;
  Morphism first;   // to the left factor
  Morphism second;  // to the right factor
};

Cone product(const Algebra& a, const Algebra& c);
/// A x_B C for f: A -> B and g: C -> B.
Cone pullback(const Morphism& f, const Morphism& g);
/// The mediating map <a, c>: X -> P of a cone (a, c) over the same diagram.
Morphism mediating_morphism(const Cone& p, const Morphism& a, const Morphism& c);

struct ImageFactorization {
  Algebra image;
  Morphism onto;       // surjective, A -> I
  Morphism inclusion;  // injective, I -> B
};

ImageFactorization image_factorization(const Morphism& f);

struct JointReport {
  /// Index of the object in the sequence (0 = source of the first map when
  /// zero ends are included as objects 0 and n+1, the original objects are
  /// numbered from 1).
  std::size_t object;
  std::size_t image_dim;
  std::size_t kernel_dim;
  bool exact;
};

/// Exactness at every joint; with `zero_ends` the sequence is read as
/// 0 -> A_1 -> ... -> A_n -> 0.
std::vector<JointReport> is_exact(const std::vector<Morphism>& maps, bool zero_ends);

/// Diagram of the split short five lemma:
///   A -f-> B <-s-/-g-> C   (top row, g s = 1)
///   D -k-> E <-t-/-q-> F   (bottom row, q t = 1)
/// with vertical maps alpha: A -> D, beta: B -> E, gamma: C -> F.
struct SplitFiveDiagram {
  Morphism f, g, s;
  Morphism k, q, t;
  Morphism alpha, beta, gamma;
};

/// Validates every hypothesis except "alpha, gamma are isomorphisms"
/// (DiagramInvalid names the failed one) and returns whether beta is an iso.
bool split_short_five_check(const SplitFiveDiagram& d);

struct Derivations {
  /// Der(A) with the commutator bracket, on the canonical basis d1, d2, ...
  Algebra lie;
  /// The derivation matrices for the basis elements of `lie`.
  std::vector<Matrix> maps;
};

Derivations derivations(const Algebra& a);

/// (x, y) |-> xy - yx on an associative algebra; NotAssociative otherwise.
Algebra commutator_algebra(const Algebra& a);

/// Associativity on all basis triples (complete by trilinearity).
bool is_associative(const Algebra& a);

/// Whether span(I I) is again an ideal; NotAnIdeal if I is not an ideal.
bool ideal_square_is_ideal(const Algebra& a, const Subspace& ideal);

/// Basis names for a disjoint union of factors: unchanged when all names are
/// distinct, otherwise every name of factor k gets the suffix `_k` (1-based).
std::vector<std::vector<std::string>> disjoint_names(const std::vector<std::vector<std::string>>& factors);

}  // namespace nalg
