#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace ceswit {

enum class FamilyKind { symmetric, general, counterexample, footnote_pair };

std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& s);

// Which built-in construction a subspace came from; carried as provenance so
// class enumeration and kernel predictions know the closed forms.
struct FamilySpec {
  FamilyKind kind = FamilyKind::symmetric;
  int m = 0;
  int n = 0;
  std::optional<CMat> a_tilde;  // (m-1)x(m-1), symmetric/general only

  void validate() const;
};

// Subspace of C^m (x) C^n with an orthonormal stored basis.
class Subspace {
 public:
  Subspace(int m, int n, std::vector<CVec> orthonormal_basis,
           const ToleranceConfig& tol = {});

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<CVec>& basis() const { return basis_; }
  const CVec& basis_vector(int i) const { return basis_.at(i); }
  CMat basis_as_matrix(int i) const { return vec_to_matrix(basis_.at(i), m_, n_); }

  // mn x dim matrix whose columns are the basis vectors.
  CMat basis_matrix() const;
  CMat projector() const;

  const std::optional<FamilySpec>& family() const { return family_; }
  void set_family(FamilySpec spec) { family_ = std::move(spec); }

 private:
  int m_, n_;
  std::vector<CVec> basis_;
  std::optional<FamilySpec> family_;
};

// Orthonormalizes the given spanning set; throws if it is dependent.
Subspace make_subspace(int m, int n, const std::vector<CVec>& vectors,
                       const ToleranceConfig& tol = {});

// n x n PSD matrix  sum_i |Psi_i(x)><Psi_i(x)|  with |Psi_i(x)> = (<x| ox 1)|Psi_i>.
CMat local_projection(const Subspace& v, const CVec& x);

inline constexpr double kCesGap = 1e-6;

struct CesSearchOptions {
  int starts = 64;
  int max_iters = 200;
  int minor_scan = 200;  // random-combination 2x2 minor scan, dim <= 4 only
  std::uint64_t seed = 0xCE5;
};

struct CesCertificate {
  bool is_ces = false;
  double best_product_overlap = 0.0;  // max ||Pi_V (e ox f)||^2 found, unit e,f
  std::optional<std::pair<CVec, CVec>> witness;  // (e, f) achieving it
};

// Multi-start alternating maximization of the product overlap with V, plus
// the structured rank-1 minor scan for dim V <= 4. Semi-decidable: a
// certificate, never an exception.
CesCertificate is_ces(const Subspace& v, const ToleranceConfig& tol = {},
                      const CesSearchOptions& budget = {});

// True iff both reduced projections of the projector have full rank.
bool is_supported(const Subspace& v, const ToleranceConfig& tol = {});

// Largest CES dimension in H_{m,n}: (m-1)(n-1).
int max_ces_dim(int m, int n);

}  // namespace ceswit
