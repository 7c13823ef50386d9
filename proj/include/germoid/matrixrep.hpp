#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "germoid/error.hpp"
#include "germoid/groupoid.hpp"
#include "germoid/partact.hpp"
#include "germoid/semigroup.hpp"

namespace germoid {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexMatrix = DenseMatrix<std::complex<double>>;

/// Λ_s δ_t = δ_{st} when s*st = t, and 0 otherwise.
template <class Scalar>
std::vector<DenseMatrix<Scalar>> left_regular_rep(const InvSemigroup& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  std::vector<DenseMatrix<Scalar>> out;
  out.reserve(s.size());
  for (Id a = 0; a < s.size(); ++a) {
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
    for (Id t = 0; t < s.size(); ++t)
      if (s.mul(s.source_idempotent(a), t) == t) m(static_cast<Eigen::Index>(s.mul(a, t)), static_cast<Eigen::Index>(t)) = Scalar(1);
    out.push_back(std::move(m));
  }
  return out;
}

/// Row index of δ_e ⊗ δ_g, with e the position of the idempotent in E(S).
inline Eigen::Index tensor_index(std::size_t e_position, Id g, std::size_t group_order) {
  return static_cast<Eigen::Index>(e_position * group_order + g);
}

/// δ_s ↦ δ_{s*s} ⊗ δ_{σ(s)}. Throws Error{NotEUnitary}.
template <class Scalar>
DenseMatrix<Scalar> intertwiner_u(const InvSemigroup& s, const SigmaMap& sigma) {
  if (!is_e_unitary(s, sigma)) throw Error(Errc::NotEUnitary, "U needs an E-unitary semigroup");
  const auto& idem = s.idempotents();
  const std::size_t gn = sigma.group.size();
  DenseMatrix<Scalar> u = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(idem.size() * gn),
                                                    static_cast<Eigen::Index>(s.size()));
  for (Id a = 0; a < s.size(); ++a) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(idem.begin(), idem.end(), s.source_idempotent(a)) - idem.begin());
    u(tensor_index(pos, sigma(a), gn), static_cast<Eigen::Index>(a)) = Scalar(1);
  }
  return u;
}

template <class Scalar>
DenseMatrix<Scalar> intertwiner_u(const InvSemigroup& s) {
  return intertwiner_u<Scalar>(s, max_group_image(s));
}

/// A_s(δ_e ⊗ δ_g) = m δ_e ⊗ δ_{σ(s)g}, where m = 1 iff θ(σ(s)g) is defined at
/// e↑ and sends it into D(ss*).
template <class Scalar>
std::vector<DenseMatrix<Scalar>> covariant_rep(const SigmaPartialAction& t) {
  const auto& s = t.space.semigroup();
  const auto& idem = s.idempotents();
  const std::size_t gn = t.sigma.group.size();
  const auto dim = static_cast<Eigen::Index>(idem.size() * gn);
  std::vector<DenseMatrix<Scalar>> out;
  out.reserve(s.size());
  for (Id a = 0; a < s.size(); ++a) {
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(dim, dim);
    const Id range = s.range_idempotent(a);
    for (std::size_t e = 0; e < idem.size(); ++e) {
      const Id filter = *t.space.filter_of(idem[e]);
      for (Id g = 0; g < gn; ++g) {
        const Id h = t.sigma.group.mul(t.sigma(a), g);
        const Id image = t.theta.apply(h, filter);
        if (image != kNone && t.space.contains(image, range)) m(tensor_index(e, h, gn), tensor_index(e, g, gn)) = Scalar(1);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// The evaluated form on the image of U: A_s(δ_{t*t} ⊗ δ_{σ(t)}) =
/// [t*t ≤ t*s*st] δ_{t*t} ⊗ δ_{σ(s)σ(t)}. Columns off the image are zero.
template <class Scalar>
std::vector<DenseMatrix<Scalar>> covariant_rep_on_image(const InvSemigroup& s, const SigmaMap& sigma) {
  const auto& idem = s.idempotents();
  const std::size_t gn = sigma.group.size();
  const auto dim = static_cast<Eigen::Index>(idem.size() * gn);
  auto position = [&](Id e) {
    return static_cast<std::size_t>(std::lower_bound(idem.begin(), idem.end(), e) - idem.begin());
  };
  std::vector<DenseMatrix<Scalar>> out;
  for (Id a = 0; a < s.size(); ++a) {
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(dim, dim);
    for (Id t = 0; t < s.size(); ++t) {
      const Id tt = s.source_idempotent(t);
      const Id rhs = s.mul(s.star(t), s.source_idempotent(a), t);
      if (s.mul(tt, rhs) == tt)
        m(tensor_index(position(tt), sigma.group.mul(sigma(a), sigma(t)), gn), tensor_index(position(tt), sigma(t), gn)) =
            Scalar(1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// U†U = I, UΛ_s = A_sU for all s, and both families are *-representations
/// of S (ρ_sρ_t = ρ_{st}, ρ_{s*} = ρ_s†). Exact comparison.
template <class Scalar>
bool intertwining_family_holds(const InvSemigroup& s, const DenseMatrix<Scalar>& u,
                               const std::vector<DenseMatrix<Scalar>>& lambda,
                               const std::vector<DenseMatrix<Scalar>>& a) {
  const auto cols = u.cols();
  if (!((u.adjoint() * u) == DenseMatrix<Scalar>::Identity(cols, cols))) return false;
  for (Id x = 0; x < s.size(); ++x)
    if (!((u * lambda[x]) == (a[x] * u))) return false;
  auto star_rep = [&](const std::vector<DenseMatrix<Scalar>>& rho) {
    for (Id x = 0; x < s.size(); ++x) {
      if (!(rho[s.star(x)] == rho[x].adjoint())) return false;
      for (Id y = 0; y < s.size(); ++y)
        if (!((rho[x] * rho[y]) == rho[s.mul(x, y)])) return false;
    }
    return true;
  };
  return star_rep(lambda) && star_rep(a);
}

struct IntertwiningReport {
  bool isometry = false;
  bool intertwines = false;         // UΛ_s = A_sU for every s
  bool conditions_agree = false;    // s*st = t ⇔ t*t = t*s*st ⇔ t*t ≤ t*s*st
  bool routes_agree = false;        // A_s matches the evaluated form on the image of U
  bool star_representations = false;
  std::vector<Id> failing;          // elements s with UΛ_s != A_sU

  bool holds() const { return isometry && intertwines && conditions_agree && routes_agree && star_representations; }
};

/// Throws Error{NotEUnitary}.
IntertwiningReport verify_intertwining(const InvSemigroup& s);

/// Arrow-basis convolution algebra of a finite groupoid.
class ConvolutionAlgebra {
 public:
  explicit ConvolutionAlgebra(FiniteGroupoid g) : g_(std::move(g)) {}

  const FiniteGroupoid& groupoid() const noexcept { return g_; }
  std::size_t dimension() const noexcept { return g_.num_arrows(); }

  Eigen::VectorXcd multiply(const Eigen::VectorXcd& f, const Eigen::VectorXcd& h) const;
  Eigen::VectorXcd involution(const Eigen::VectorXcd& f) const;
  /// Matrix of f ↦ δ_a * f.
  ComplexMatrix left_multiplication(Id a) const;

  /// Structure-constant associativity and (δ_aδ_b)* = δ_b*δ_a* on the basis.
  bool verify() const;

 private:
  FiniteGroupoid g_;
};

/// dim {z : za = az for all a}: the nullity of the stacked commutator system,
/// computed from the singular values of its normal matrix with 1e-10 as zero.
std::size_t center_dimension(const ConvolutionAlgebra& algebra);

struct AlgebraMap {
  ComplexMatrix matrix;  // δ_a ↦ δ_{F(a)}
  bool homomorphism = false;
  bool preserves_involution = false;
};

/// Throws Error{NotBijective}.
AlgebraMap algebra_map_from_functor(const GroupoidFunctor& f);

struct GelfandReport {
  bool multiplicative = false;  // 1_{D(e)} 1_{D(f)} = 1_{D(ef)}
  std::size_t rank = 0;         // of e ↦ 1_{D(e)}
  bool spans = false;           // rank = |Ê|
  bool diagonalizes = false;    // π(e) becomes diag(1_{D(e)}) in the filter basis
  bool holds() const { return multiplicative && spans && diagonalizes; }
};

/// Runs on E(S).
GelfandReport gelfand_check(const InvSemigroup& s);

}  // namespace germoid
