#pragma once

// Varieties of algebras given by sets of identities: checking identities in
// a finite-dimensional algebra, reflecting an algebra into a variety, and
// degree-truncated free objects, coproducts and the B-flat-X construction.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/constructions.hpp"
#include "nalg/evaluate.hpp"
#include "nalg/poly.hpp"

namespace nalg {

struct IdentitySet {
  std::string name;
  Field field;
  std::vector<Poly> polys;
};

/// Preset varieties by case-insensitive name: lie, qlie, assoc, comm,
/// abelian, alternating, anticomm, leibniz, jordan, jacobijordan,
/// alternative, antiassoc, alg. InvalidArgument for anything else.
IdentitySet preset_variety(std::string_view name, const Field& field);
const std::vector<std::string>& preset_names();

/// Every identity replaced by its homogeneous components (in order of
/// identity, then component type). Only sound over an infinite field.
IdentitySet homogenize(const IdentitySet& v);

struct Budget {
  /// Largest number of words a truncated free algebra may span.
  std::size_t max_basis = 2000;
  /// Largest number of assignments exhaustive evaluation may visit.
  std::uint64_t max_tuples = 1000000;
};

enum class CheckMode { Symbolic, Exhaustive };
enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Verdict v);

struct IdentityCheck {
  Verdict verdict = Verdict::Holds;
  /// Symbolic mode over GF(p) found nonzero coefficients that may still
  /// vanish as functions: run exhaustive mode instead.
  bool mode_unsound = false;
  std::optional<Assignment> witness;
  /// Value of the polynomial at the witness.
  Vec witness_value;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// Monomial in the generic coordinates t_{v,i} of the variables: sorted
/// (slot, exponent) pairs, slot = variable_index * dim + basis_index.
using TMonomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct GenericValue {
  /// Variables of the polynomial, sorted; their order fixes the slots.
  std::vector<std::string> variables;
  /// Nonzero coefficient vectors of p(sum_i t_{v,i} e_i, ...).
  std::map<TMonomial, Vec> coefficients;
};

/// Evaluation at generic elements. With `reduce_exponents` over GF(p),
/// t^e is identified with t^(1 + (e-1) mod (p-1)), so the coefficients
/// describe p as a function on A^n and span the same space as its values.
GenericValue generic_evaluation(const Algebra& a, const Poly& p, bool reduce_exponents = false);

/// Decides p = 0 on A. Symbolic mode is complete over Q; over GF(p) it can
/// only confirm, and a nonzero result is Inconclusive (mode_unsound) unless
/// every variable has degree below p. Exhaustive mode needs a finite field
/// and at most budget.max_tuples assignments. Failures carry a witness.
IdentityCheck identity_holds(const Algebra& a, const Poly& p, CheckMode mode, const Budget& budget = {});

/// Span of all values of the identities on A: generic coefficients over Q,
/// exhaustive evaluation over GF(p).
Subspace relation_subspace(const Algebra& a, const IdentitySet& v, const Budget& budget = {});

struct Reflection {
  /// I(A), the ideal generated by relation_subspace.
  Subspace ideal;
  /// L(A) = A / I(A) with the unit eta_A.
  Quotient quotient;
};

Reflection reflect(const Algebra& a, const IdentitySet& v, const Budget& budget = {});

struct TruncatedFreeAlgebra {
  IdentitySet variety;
  std::vector<std::string> letters;
  std::size_t max_degree = 0;
  /// Basis: the representative words, named by print_word.
  Algebra carrier;
  std::vector<Word> basis_words;
  /// Class of every word of length <= max_degree, in carrier coordinates.
  std::map<Word, Vec> word_images;
  /// Entry n-1: number of words of length n, and the dimension of the
  /// relations that first appear at length n (the truncated T-ideal is
  /// spanned by vectors whose longest word has that length).
  std::vector<std::size_t> words_by_degree;
  std::vector<std::size_t> relations_by_degree;

  /// Class of a polynomial in the letters; words longer than max_degree are 0.
  Vec image(const Poly& p) const;
};

/// F_V{letters} modulo words of length > d.
TruncatedFreeAlgebra truncated_free(const IdentitySet& v, const std::vector<std::string>& letters, std::size_t d,
                                    const Budget& budget = {});

struct Implication {
  bool implied = false;
  /// Normal form of p in the truncated free V-algebra on vars(p); zero iff implied.
  Poly residue;
};

/// Whether p lies in the T-ideal of V up to degree d. DegreeTooSmall if
/// d < deg p.
Implication identity_implied(const IdentitySet& v, const Poly& p, std::size_t d, const Budget& budget = {});

struct ClosureEntry {
  std::size_t identity;  // index into v.polys
  TypeVector type;
  Poly component;
  bool implied;
};

/// Runs identity_implied on every homogeneous component of every identity.
/// Requires Q (InvalidArgument otherwise).
std::vector<ClosureEntry> homogeneous_closure_check(const IdentitySet& v, std::size_t d, const Budget& budget = {});

struct TruncatedCoproduct {
  std::vector<Algebra> factors;
  /// Letter used for each basis element of each factor.
  std::vector<std::vector<std::string>> letters;
  TruncatedFreeAlgebra free;
  std::vector<Morphism> injections;

  const Algebra& algebra() const { return free.carrier; }
};

/// Coproduct of the factors in V, truncated at degree d: the truncated free
/// V-algebra on the disjoint union of the bases modulo the structure
/// relations of each factor.
TruncatedCoproduct truncated_coproduct(const std::vector<Algebra>& factors, const IdentitySet& v, std::size_t d,
                                       const Budget& budget = {});

/// The map out of the coproduct induced by one morphism per factor.
/// DiagramInvalid when the legs do not factor (target outside V or not
/// nilpotent of class <= d).
Morphism coproduct_mediator(const TruncatedCoproduct& c, const std::vector<Morphism>& legs);

struct Flat {
  TruncatedCoproduct coproduct;
  /// (B+X)_d -> B, identity on B and zero on X.
  Morphism retraction;
  /// B flat X = ker(retraction) with its inclusion into (B+X)_d.
  Subobject kernel;
};

Flat flat(const Algebra& b, const Algebra& x, const IdentitySet& v, std::size_t d, const Budget& budget = {});

struct CoherenceReport {
  bool coherent = false;
  std::size_t flat_dim = 0;       // B flat (X+Y)
  std::size_t generated_dim = 0;  // subalgebra generated by the images
  std::size_t flat_x_dim = 0;
  std::size_t flat_y_dim = 0;
};

/// Whether B flat X and B flat Y generate B flat (X+Y) at degree d.
CoherenceReport coherence_probe(const Algebra& b, const Algebra& x, const Algebra& y, const IdentitySet& v,
                                std::size_t d, const Budget& budget = {});

/// z(xy) - sum lambda_1..8 [...] and (xy)z - sum lambda_9..16 [...] over
/// the words y(zx), x(yz), y(xz), x(zy), (zx)y, (yz)x, (xz)y, (zy)x.
std::array<Poly, 2> orzech_polynomials(const Field& field, const std::vector<Scalar>& lambdas);

struct OrzechReport {
  std::array<Poly, 2> polys;
  std::array<Implication, 2> results;

  bool first() const { return results[0].implied; }
  bool second() const { return results[1].implied; }
  bool holds() const { return first() && second(); }
};

OrzechReport orzech_check(const IdentitySet& v, const std::vector<Scalar>& lambdas, std::size_t d,
                          const Budget& budget = {});

}  // namespace nalg
