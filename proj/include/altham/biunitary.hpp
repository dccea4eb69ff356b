#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "altham/forms.hpp"

namespace altham::biu {

enum class BiUnitaryStatus { Ok, NotPositive };

struct EigenBlock {
  double lambda = 0.0;   // eigenvalue of G = h1^{-1} h2, positive
  Index multiplicity = 0;
  ComplexMatrix basis;   // h1-orthonormal columns spanning the eigenspace
};

/// Block structure of the group of transformations unitary for both h1 and
/// h2: blockwise U(m_k) over the eigenspaces of G, real dimension sum m_k^2.
struct BiUnitaryStructure {
  BiUnitaryStatus status = BiUnitaryStatus::Ok;
  std::vector<EigenBlock> blocks;
  Index group_dimension = 0;
  bool cyclic = false;       // all multiplicities 1
  ComplexMatrix g;           // G = h1^{-1} h2
  std::string message;
};

BiUnitaryStructure biunitary_group(const ComplexMatrix& h1,
                                   const ComplexMatrix& h2,
                                   const Config& cfg = {});

struct BiUnitaryCheck {
  bool biunitary = false;
  double residual_h1 = 0.0;  // ||U^H h1 U - h1|| / ||h1||
  double residual_h2 = 0.0;
  double tol_used = 0.0;
};

BiUnitaryCheck is_biunitary(const ComplexMatrix& u, const ComplexMatrix& h1,
                            const ComplexMatrix& h2, const Config& cfg = {});

/// U_theta = e^{i theta(G)}: applies theta to the G-spectrum blockwise.
ComplexMatrix phase_function_unitary(const BiUnitaryStructure& s,
                                     const std::function<double(double)>& theta);

/// Random element of the constructed group (block unitaries from seeded
/// complex Gaussians + QR).
ComplexMatrix sample_group_element(const BiUnitaryStructure& s,
                                   std::uint64_t seed);

enum class BoxInterval { Full, Half };

struct BoxReport {
  std::vector<double> grid;          // midpoint grid
  std::vector<double> eigenvalues;   // distinct values of 1 + x^2, ascending
  std::vector<Index> multiplicities; // aligned with eigenvalues
  Index group_dimension = 0;
  bool cyclic = false;
  // spacing of sqrt(lambda - 1) across the distinct eigenvalues; uniform by
  // construction, the grid shadow of the measure d sqrt(lambda - 1)
  double sqrt_spacing = 0.0;
};

/// G = 1 + X^2 on a midpoint grid over [-alpha, alpha] (Full, points paired
/// as +-x, all interior multiplicities 2) or [0, alpha] (Half, simple
/// spectrum, cyclic).
BoxReport box_example(Index n_grid, double alpha, BoxInterval interval);

/// g-orthonormal J-adapted basis (u_1, J u_1, ...) of the triple; complex
/// coordinate k pairs columns 2k and 2k+1.
RealMatrix adapted_basis(const forms::AdmissibleTriple& t);

/// Complex Hermitian matrix of h = g(.,.) + i g(J.,.) in a J-adapted basis.
/// Two triples sharing J, complexified in one basis, live on one complex
/// space (the triple that produced the basis maps to the identity).
ComplexMatrix complexify_metric(const forms::AdmissibleTriple& t,
                                const RealMatrix& basis);

}  // namespace altham::biu
