#ifndef KOSZULDUAL_HOMOTOPY_HPP
#define KOSZULDUAL_HOMOTOPY_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;   // "Z^2 x Z/2", "Z", "0"
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only).
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);
AbelianGroup abelianization(int generators, const std::vector<Word>& relators);

/// Tietze elimination: repeatedly drop a generator that occurs exactly once in
/// some relator whose other letters number at most max_rest, substituting it
/// everywhere. Returns the eliminations performed ("x = w") and the leftover
/// generator count.
struct TietzeResult {
  std::vector<std::string> steps;
  int remaining_generators = 0;
  std::vector<Word> remaining_relators;
};
TietzeResult tietze_eliminate(int generators, std::vector<Word> relators, const std::vector<std::string>& names,
                              int max_rest = 3);

enum class Pi1Verdict { Trivial, NonTrivial, Unknown };
const char* to_string(Pi1Verdict v);

struct Pi1Report {
  std::vector<std::string> spanning_tree;    // arrow ids
  std::vector<std::string> generators;       // one per non-tree arrow, named by the arrow
  std::vector<std::string> generator_walks;  // closed walk through the tree, e.g. "alpha beta' ~gamma"
  std::vector<Word> relators;
  std::vector<std::string> relator_sources;  // which relation paths each relator identifies
  AbelianGroup abelianization;
  Pi1Verdict verdict = Pi1Verdict::Unknown;
  std::string witness;                       // NonTrivial: the abelianization
  std::vector<std::string> certificate;      // Trivial: elimination steps
  std::string word_to_string(const Word& w) const;
};

/// Throws NotTriangular on an oriented cycle, Disconnected for a disconnected quiver.
/// tree_arrows, when given, must index a spanning tree of the underlying graph.
Pi1Report pi1(const QuadraticPresentation& a, std::optional<std::vector<int>> tree_arrows = {});

/// Supports of minimal relations: subsets S of a block's paths such that I
/// has a nonzero element supported exactly on S and on no proper subset.
std::vector<std::vector<Path>> minimal_relation_supports(const QuadraticPresentation& a, int s, int t);

enum class Connectivity { Yes, No, Unknown };
const char* to_string(Connectivity c);

struct SimplyConnectedReport {
  Connectivity verdict = Connectivity::Unknown;
  std::string witness;
  std::vector<std::string> caveats;
  Pi1Report pi1;
};
SimplyConnectedReport simply_connected(const QuadraticPresentation& a);

}  // namespace koszuldual

#endif
