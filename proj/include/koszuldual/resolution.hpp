#ifndef KOSZULDUAL_RESOLUTION_HPP
#define KOSZULDUAL_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszuldual/graded.hpp"

namespace koszuldual {

struct Generator {
  int vertex = 0;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct ResolutionStep {
  std::vector<Generator> generators;  // by degree, then vertex
  // for steps >= 1: d(g) in the previous module, coordinates of the
  // (g.degree, g.vertex) component (see component_layout)
  std::vector<Vec> images;
};

/// Minimal graded projective resolution of the simple right module at one vertex.
struct SimpleResolution {
  int simple = 0;
  int degree_bound = 0;
  std::vector<ResolutionStep> steps;  // P^0, P^1, ...
  std::optional<int> projective_dimension;
  bool cutoff_reached = false;  // the last computed step still has a nonzero kernel
  // every generator g of P^s satisfies deg g + top(A) <= degree_bound, so
  // nothing of P^s was cut off
  std::vector<bool> certified;
  std::vector<std::vector<std::vector<int>>> module_dims;  // [s][d][j] = dim (P^s)_d e_j
  std::vector<std::vector<int>> syzygy_dims;               // kernel of the last differential, [d][j]

  int betti(int s, int d, int j) const;
  int max_generator_degree(int s) const;  // -1 if P^s = 0
  bool complete() const;                  // all steps certified
};

/// Offsets of each generator's block inside the (d, j) component of sum_k e_{v_k} A[-deg_k].
std::vector<int> component_layout(const GradedTable& table, const std::vector<Generator>& gens, int d, int j);

struct ResolutionOptions {
  int cutoff = -1;        // homological steps; default #vertices + 4
  int degree_bound = -1;  // internal degrees; default from the cutoff and top(A)
  bool parallel = true;   // one simple per OpenMP task
};

struct ResolutionReport {
  int cutoff = 0;
  int degree_bound = 0;
  int top_degree = -1;  // of A, -1 if not seen to vanish
  std::vector<SimpleResolution> simples;
};

int default_cutoff(const QuadraticPresentation& a);
/// cutoff + top(A) when A is seen to be finite, else cutoff + 2.
int default_degree_bound(const QuadraticPresentation& a, int cutoff, int* top = nullptr);

SimpleResolution resolve_simple(const GradedTable& table, int simple, int cutoff);
ResolutionReport minimal_resolution(const QuadraticPresentation& a, std::optional<int> simple = {},
                                    ResolutionOptions opt = {});

/// No coefficient of any differential lands on a generator of the same degree.
bool is_minimal(const SimpleResolution& r, const GradedTable& table);

struct KoszulVerdict {
  bool koszul = true;  // linear up to the cutoff
  int cutoff = 0;
  bool certified = true;
  // first offending generator when not koszul
  int step = -1;
  int degree = -1;
  int simple = -1;
};
KoszulVerdict koszul_check(const ResolutionReport& r);
KoszulVerdict koszul_check(const QuadraticPresentation& a, std::optional<int> cutoff = {});

struct GldimReport {
  std::optional<int> value;  // max projective dimension of the simples
  bool beyond_cutoff = false;
  bool certified = true;
  int cutoff = 0;
};
GldimReport gldim(const ResolutionReport& r);
GldimReport gldim(const QuadraticPresentation& a, std::optional<int> cutoff = {});

}  // namespace koszuldual

#endif
