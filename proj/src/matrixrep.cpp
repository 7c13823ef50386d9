#include "germoid/matrixrep.hpp"

#include <set>

#include <Eigen/Eigenvalues>

namespace germoid {

IntertwiningReport verify_intertwining(const InvSemigroup& s) {
  const auto theta = theta_from_sigma(s);
  using M = DenseMatrix<double>;
  const M u = intertwiner_u<double>(s, theta.sigma);
  const auto lambda = left_regular_rep<double>(s);
  const auto a = covariant_rep<double>(theta);
  const auto evaluated = covariant_rep_on_image<double>(s, theta.sigma);

  IntertwiningReport r;
  r.isometry = (u.transpose() * u) == M::Identity(u.cols(), u.cols());
  for (Id x = 0; x < s.size(); ++x)
    if (!((u * lambda[x]) == (a[x] * u))) r.failing.push_back(x);
  r.intertwines = r.failing.empty();

  r.conditions_agree = true;
  for (Id x = 0; x < s.size(); ++x)
    for (Id t = 0; t < s.size(); ++t) {
      const Id tt = s.source_idempotent(t);
      const Id rhs = s.mul(s.star(t), s.source_idempotent(x), t);
      const bool c1 = s.mul(s.source_idempotent(x), t) == t;
      const bool c2 = tt == rhs;
      const bool c3 = natural_leq(s, tt, rhs);
      if (c1 != c2 || c2 != c3) r.conditions_agree = false;
    }

  // On the image of U the two readings of the covariant operator coincide.
  const M projection = u * u.transpose();
  r.routes_agree = true;
  for (Id x = 0; x < s.size(); ++x)
    if (!((a[x] * projection) == evaluated[x])) r.routes_agree = false;

  r.star_representations = intertwining_family_holds<double>(s, u, lambda, a);
  return r;
}

Eigen::VectorXcd ConvolutionAlgebra::multiply(const Eigen::VectorXcd& f, const Eigen::VectorXcd& h) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension()));
  for (const auto& [a, b, c] : g_.data().comp)
    out(static_cast<Eigen::Index>(c)) += f(static_cast<Eigen::Index>(a)) * h(static_cast<Eigen::Index>(b));
  return out;
}

Eigen::VectorXcd ConvolutionAlgebra::involution(const Eigen::VectorXcd& f) const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(dimension()));
  for (Id a = 0; a < dimension(); ++a)
    out(static_cast<Eigen::Index>(g_.inverse(a))) = std::conj(f(static_cast<Eigen::Index>(a)));
  return out;
}

ComplexMatrix ConvolutionAlgebra::left_multiplication(Id a) const {
  const auto n = static_cast<Eigen::Index>(dimension());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Id b = 0; b < dimension(); ++b)
    if (Id c = g_.compose(a, b); c != kNone) m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b)) = 1.0;
  return m;
}

bool ConvolutionAlgebra::verify() const {
  const std::size_t n = dimension();
  auto product = [&](Id a, Id b) { return g_.compose(a, b); };
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id ab = product(a, b);
      if (ab == kNone) continue;
      if (product(g_.inverse(b), g_.inverse(a)) != g_.inverse(ab)) return false;
      for (Id c = 0; c < n; ++c) {
        const Id bc = product(b, c);
        const Id left = product(ab, c);
        const Id right = bc == kNone ? kNone : product(a, bc);
        if (left != right) return false;
      }
    }
  return true;
}

std::size_t center_dimension(const ConvolutionAlgebra& algebra) {
  const auto& g = algebra.groupoid();
  const std::size_t n = g.num_arrows();
  if (n == 0) return 0;
  // Row (a, c) of the commutator system reads z_{a⁻¹c} - z_{ca⁻¹}, each term
  // present only when the product is defined. Accumulate its normal matrix.
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Id a = 0; a < n; ++a) {
    const Id inv = g.inverse(a);
    for (Id c = 0; c < n; ++c) {
      const Id left = g.compose(inv, c);   // a·left = c
      const Id right = g.compose(c, inv);  // right·a = c
      std::vector<std::pair<Eigen::Index, double>> row;
      if (left != kNone) row.emplace_back(static_cast<Eigen::Index>(left), 1.0);
      if (right != kNone) {
        if (!row.empty() && row.front().first == static_cast<Eigen::Index>(right)) row.clear();
        else row.emplace_back(static_cast<Eigen::Index>(right), -1.0);
      }
      for (const auto& [i, x] : row)
        for (const auto& [j, y] : row) normal(i, j) += x * y;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normal, Eigen::EigenvaluesOnly);
  std::size_t nullity = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()(i)) < 1e-10) ++nullity;
  return nullity;
}

AlgebraMap algebra_map_from_functor(const GroupoidFunctor& f) {
  if (!verify_isomorphism(f)) throw Error(Errc::NotBijective, "functor is not bijective");
  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto n = static_cast<Eigen::Index>(src.num_arrows());
  AlgebraMap m;
  m.matrix = ComplexMatrix::Zero(n, n);
  for (Id a = 0; a < src.num_arrows(); ++a)
    m.matrix(static_cast<Eigen::Index>(f.arrow(a)), static_cast<Eigen::Index>(a)) = 1.0;

  const ConvolutionAlgebra from(src), to(tgt);
  m.homomorphism = true;
  m.preserves_involution = true;
  for (Id a = 0; a < src.num_arrows(); ++a) {
    Eigen::VectorXcd da = Eigen::VectorXcd::Unit(n, static_cast<Eigen::Index>(a));
    if (!((m.matrix * from.involution(da)) == to.involution(m.matrix * da))) m.preserves_involution = false;
    for (Id b = 0; b < src.num_arrows(); ++b) {
      Eigen::VectorXcd db = Eigen::VectorXcd::Unit(n, static_cast<Eigen::Index>(b));
      if (!((m.matrix * from.multiply(da, db)) == to.multiply(m.matrix * da, m.matrix * db))) m.homomorphism = false;
    }
  }
  return m;
}

GelfandReport gelfand_check(const InvSemigroup& s) {
  const auto space = CharSpace::of(s, false);
  const auto& idem = s.idempotents();
  const auto rows = static_cast<Eigen::Index>(idem.size());
  const auto cols = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd indicator = Eigen::MatrixXd::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Id f : d_set(space, idem[static_cast<std::size_t>(i)])) indicator(i, static_cast<Eigen::Index>(f)) = 1.0;

  auto row_of = [&](Id e) {
    return static_cast<Eigen::Index>(std::lower_bound(idem.begin(), idem.end(), e) - idem.begin());
  };
  GelfandReport r;
  r.multiplicative = true;
  for (Id e : idem)
    for (Id f : idem)
      if (!(indicator.row(row_of(e)).cwiseProduct(indicator.row(row_of(f))) == indicator.row(row_of(s.mul(e, f)))))
        r.multiplicative = false;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(indicator);
  r.rank = static_cast<std::size_t>(lu.rank());
  r.spans = r.rank == space.size();

  // π(e) on ℓ²(E) conjugated by δ_f ↦ δ_{f↑}.
  const auto lambda = left_regular_rep<double>(s);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(cols, static_cast<Eigen::Index>(s.size()));
  for (Id f = 0; f < space.size(); ++f) basis(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(space.min(f))) = 1.0;
  r.diagonalizes = true;
  for (Id e : idem) {
    const Eigen::MatrixXd conjugated = basis * lambda[e] * basis.transpose();
    const Eigen::MatrixXd expected = indicator.row(row_of(e)).transpose().asDiagonal();
    if (!(conjugated == expected)) r.diagonalizes = false;
  }
  return r;
}

}  // namespace germoid
