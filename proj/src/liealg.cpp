#include "rbcat/liealg.hpp"

#include <sstream>
#include <utility>

#include "rbcat/errors.hpp"

namespace rbcat {

namespace {

std::string wit(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

RatVector zero_vector(int n) { return RatVector(n, Rational(0)); }

bool is_zero(const RatVector& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

RatVector column(const RatMatrix& m, int j) {
  RatVector v(m.size());
  for (size_t r = 0; r < m.size(); ++r) v[r] = m[r][j];
  return v;
}

RatVector vec_add(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

void vec_axpy(RatVector& acc, const Rational& c, const RatVector& v) {
  for (size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

RatMatrix matrix_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = vec_sub(a[i], b[i]);
  return r;
}

// Σ coeffs[i]·mats[i]; all matrices share the shape rows×cols.
RatMatrix matrix_comb(const std::vector<RatMatrix>& mats,
                      const RatVector& coeffs, int rows, int cols) {
  RatMatrix acc = zero_matrix(rows, cols);
  for (size_t i = 0; i < mats.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (int r = 0; r < rows; ++r) vec_axpy(acc[r], coeffs[i], mats[i][r]);
  }
  return acc;
}

bool matrix_shape(const RatMatrix& m, int rows, int cols) {
  if ((int)m.size() != rows) return false;
  for (const auto& row : m)
    if ((int)row.size() != cols) return false;
  return true;
}

void require_shape(const RatMatrix& m, int rows, int cols,
                   const std::string& what) {
  if (!matrix_shape(m, rows, cols))
    throw CheckError(Code::ActionMismatch, what + " must be a " +
                                               std::to_string(rows) + "×" +
                                               std::to_string(cols) +
                                               " matrix");
}

// Adjoint matrices ad_i with column j equal to [e_i, e_j].
std::vector<RatMatrix> adjoint_matrices(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<RatMatrix> ad(n, zero_matrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) ad[i][r][j] = g.bracket(i, j)[r];
  return ad;
}

std::string pair_failure(const std::string& law, int i, int j,
                         const RatVector& lhs, const RatVector& rhs) {
  return law + " at basis pair " + wit({i, j}) + ": lhs=" + vector_str(lhs) +
         ", rhs=" + vector_str(rhs);
}

}  // namespace

RatMatrix zero_matrix(int rows, int cols) {
  return RatMatrix(rows, zero_vector(cols));
}

RatMatrix identity_matrix(int n) {
  RatMatrix m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix negated_matrix(const RatMatrix& m) {
  RatMatrix r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].resize(m[i].size());
    for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = -m[i][j];
  }
  return r;
}

RatVector basis_vector(int dim, int i) {
  RatVector v = zero_vector(dim);
  v[i] = 1;
  return v;
}

RatVector apply_matrix(const RatMatrix& m, const RatVector& v) {
  RatVector r(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b) {
  const int rows = (int)a.size();
  const int inner = (int)b.size();
  const int cols = inner ? (int)b[0].size() : 0;
  RatMatrix r = zero_matrix(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

std::string vector_str(const RatVector& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

RatVector LieAlgebra::bracket(const RatVector& u, const RatVector& v) const {
  RatVector r = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      vec_axpy(r, u[i] * v[j], c_[i][j]);
    }
  }
  return r;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : c_)
    for (const auto& entry : row)
      if (!is_zero(entry)) return false;
  return true;
}

LieAlgebraPtr validate_lie_algebra(
    int dim, std::vector<std::vector<RatVector>> structure) {
  if (dim <= 0)
    throw CheckError(Code::InvariantViolation, "dimension must be positive");
  if ((int)structure.size() != dim)
    throw CheckError(Code::ActionMismatch,
                     "structure constants must form a dim×dim×dim array");
  for (const auto& row : structure) {
    if ((int)row.size() != dim)
      throw CheckError(Code::ActionMismatch,
                       "structure constants must form a dim×dim×dim array");
    for (const auto& entry : row)
      if ((int)entry.size() != dim)
        throw CheckError(Code::ActionMismatch,
                         "structure constants must form a dim×dim×dim array");
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (structure[i][j][k] != -structure[j][i][k])
          throw CheckError(Code::InvariantViolation,
                           "bracket is not antisymmetric at (i,j,k)=" +
                               wit({i, j, k}));

  auto g = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  g->dim_ = dim;
  g->c_ = std::move(structure);

  // Antisymmetry reduces the Jacobi identity to strictly increasing triples.
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        RatVector sum = g->bracket(basis_vector(dim, i), g->bracket(j, k));
        sum = vec_add(sum,
                      g->bracket(basis_vector(dim, j), g->bracket(k, i)));
        sum = vec_add(sum,
                      g->bracket(basis_vector(dim, k), g->bracket(i, j)));
        if (!is_zero(sum))
          throw CheckError(Code::InvariantViolation,
                           "Jacobi identity fails at basis triple " +
                               wit({i, j, k}) + ": sum=" + vector_str(sum));
      }

  return g;
}

LieAlgebraPtr make_abelian_lie_algebra(int dim) {
  std::vector<std::vector<RatVector>> c(
      dim, std::vector<RatVector>(dim, zero_vector(dim)));
  return validate_lie_algebra(dim, std::move(c));
}

LieAlgebraPtr make_aff1() {
  std::vector<std::vector<RatVector>> c(2,
                                        std::vector<RatVector>(2,
                                                               zero_vector(2)));
  c[0][1][1] = 1;
  c[1][0][1] = -1;
  return validate_lie_algebra(2, std::move(c));
}

bool is_lie_algebra_hom(const RatMatrix& f, const LieAlgebraPtr& dom,
                        const LieAlgebraPtr& cod) {
  if (!matrix_shape(f, cod->dim(), dom->dim())) return false;
  for (int i = 0; i < dom->dim(); ++i)
    for (int j = i + 1; j < dom->dim(); ++j)
      if (apply_matrix(f, dom->bracket(i, j)) !=
          cod->bracket(column(f, i), column(f, j)))
        return false;
  return true;
}

bool is_derivation(const RatMatrix& d, const LieAlgebraPtr& g) {
  const int n = g->dim();
  if (!matrix_shape(d, n, n)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVector rhs = vec_add(g->bracket(column(d, i), basis_vector(n, j)),
                              g->bracket(basis_vector(n, i), column(d, j)));
      if (apply_matrix(d, g->bracket(i, j)) != rhs) return false;
    }
  return true;
}

RatVector LieAction::apply(const RatVector& x, const RatVector& u) const {
  RatVector r = zero_vector(target_->dim());
  for (size_t i = 0; i < phi_.size(); ++i) {
    if (x[i] == 0) continue;
    vec_axpy(r, x[i], apply_matrix(phi_[i], u));
  }
  return r;
}

LieAction validate_lie_action(LieAlgebraPtr actor, LieAlgebraPtr target,
                              std::vector<RatMatrix> phi,
                              const std::string& what) {
  const int n = actor->dim(), m = target->dim();
  if ((int)phi.size() != n)
    throw CheckError(Code::ActionMismatch,
                     what + ": need one matrix per actor basis vector");
  for (int i = 0; i < n; ++i) {
    require_shape(phi[i], m, m, what + ": matrix(" + std::to_string(i) + ")");
    if (!is_derivation(phi[i], target))
      throw CheckError(Code::ActionMismatch,
                       what + ": matrix(" + std::to_string(i) +
                           ") is not a derivation of the target");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix lhs = matrix_comb(phi, actor->bracket(i, j), m, m);
      RatMatrix rhs = matrix_sub(matrix_product(phi[i], phi[j]),
                                 matrix_product(phi[j], phi[i]));
      if (lhs != rhs)
        throw CheckError(Code::NotHom,
                         what +
                             ": φ̄[x,y] ≠ φ̄(x)φ̄(y) − φ̄(y)φ̄(x) at basis pair " +
                             wit({i, j}));
    }
  LieAction a;
  a.actor_ = std::move(actor);
  a.target_ = std::move(target);
  a.phi_ = std::move(phi);
  return a;
}

LieAction adjoint_lie_action(const LieAlgebraPtr& g) {
  return validate_lie_action(g, g, adjoint_matrices(*g), "adjoint action");
}

LieAction trivial_lie_action(const LieAlgebraPtr& actor,
                             const LieAlgebraPtr& target) {
  std::vector<RatMatrix> phi(actor->dim(),
                             zero_matrix(target->dim(), target->dim()));
  return validate_lie_action(actor, target, std::move(phi), "trivial action");
}

LieXModPtr validate_lie_xmod(LieAlgebraPtr h1, LieAlgebraPtr h0, RatMatrix dbar,
                             std::vector<RatMatrix> act) {
  const int n1 = h1->dim(), n0 = h0->dim();
  require_shape(dbar, n0, n1, "boundary");
  LieAction action =
      validate_lie_action(h0, h1, std::move(act), "crossed-module action");

  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j)
      if (apply_matrix(dbar, h1->bracket(i, j)) !=
          h0->bracket(column(dbar, i), column(dbar, j)))
        throw CheckError(
            Code::NotHom,
            "boundary is not a Lie algebra homomorphism at basis pair " +
                wit({i, j}));

  // ∂̄a ▷ b = [a, b]
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      if (action.apply(column(dbar, a), basis_vector(n1, b)) !=
          h1->bracket(a, b))
        throw CheckError(Code::Peiffer1Failure, "witness (a,b)=" + wit({a, b}));
  // ∂̄(u ▷ a) = [u, ∂̄a]
  for (int u = 0; u < n0; ++u)
    for (int a = 0; a < n1; ++a)
      if (apply_matrix(dbar, column(action.matrix(u), a)) !=
          h0->bracket(basis_vector(n0, u), column(dbar, a)))
        throw CheckError(Code::Peiffer2Failure, "witness (u,a)=" + wit({u, a}));

  return std::shared_ptr<const LieXMod>(new LieXMod(
      std::move(h1), std::move(h0), std::move(dbar), std::move(action)));
}

LieXModPtr identity_lie_xmod(const LieAlgebraPtr& g) {
  return validate_lie_xmod(g, g, identity_matrix(g->dim()),
                           adjoint_matrices(*g));
}

RatVector LieXModAction::apply_abar(const RatVector& xi_g1,
                                    const RatVector& x_h0) const {
  const int m1 = target_->h1()->dim();
  RatVector r = zero_vector(m1);
  for (size_t i = 0; i < abar_.size(); ++i) {
    if (xi_g1[i] == 0) continue;
    vec_axpy(r, xi_g1[i], apply_matrix(abar_[i], x_h0));
  }
  return r;
}

RatVector LieXModAction::apply_b1(const RatVector& x_g0,
                                  const RatVector& a_h1) const {
  const int m1 = target_->h1()->dim();
  RatVector r = zero_vector(m1);
  for (size_t i = 0; i < b1_.size(); ++i) {
    if (x_g0[i] == 0) continue;
    vec_axpy(r, x_g0[i], apply_matrix(b1_[i], a_h1));
  }
  return r;
}

RatVector LieXModAction::apply_b0(const RatVector& x_g0,
                                  const RatVector& u_h0) const {
  const int m0 = target_->h0()->dim();
  RatVector r = zero_vector(m0);
  for (size_t i = 0; i < b0_.size(); ++i) {
    if (x_g0[i] == 0) continue;
    vec_axpy(r, x_g0[i], apply_matrix(b0_[i], u_h0));
  }
  return r;
}

LieXModAction validate_lie_xmod_action(LieXModPtr actor, LieXModPtr target,
                                       std::vector<RatMatrix> abar,
                                       std::vector<RatMatrix> b1,
                                       std::vector<RatMatrix> b0) {
  const int n1 = actor->h1()->dim(), n0 = actor->h0()->dim();
  const int m1 = target->h1()->dim(), m0 = target->h0()->dim();
  const RatMatrix& del = target->boundary();
  const RatMatrix& mu = actor->boundary();
  const LieAlgebraPtr& th1 = target->h1();
  const LieAlgebraPtr& th0 = target->h0();

  if ((int)abar.size() != n1)
    throw CheckError(Code::ActionMismatch,
                     "ᾱ needs one matrix per basis vector of the actor's h1");
  if ((int)b1.size() != n0 || (int)b0.size() != n0)
    throw CheckError(Code::ActionMismatch,
                     "β̄ needs one pair of matrices per basis vector of the "
                     "actor's h0");
  for (int xi = 0; xi < n1; ++xi)
    require_shape(abar[xi], m1, m0, "ᾱ(" + std::to_string(xi) + ")");
  for (int x = 0; x < n0; ++x) {
    require_shape(b1[x], m1, m1, "β̄1(" + std::to_string(x) + ")");
    require_shape(b0[x], m0, m0, "β̄0(" + std::to_string(x) + ")");
  }

  // Each ᾱ(ξ) is a derivation h0 → h1: γ[x,y] = x▷γ(y) − y▷γ(x).
  for (int xi = 0; xi < n1; ++xi)
    for (int x = 0; x < m0; ++x)
      for (int y = x + 1; y < m0; ++y) {
        RatVector lhs = apply_matrix(abar[xi], th0->bracket(x, y));
        RatVector rhs =
            vec_sub(apply_matrix(target->act().matrix(x), column(abar[xi], y)),
                    apply_matrix(target->act().matrix(y), column(abar[xi], x)));
        if (lhs != rhs)
          throw CheckError(Code::ActionMismatch,
                           "ᾱ(" + std::to_string(xi) +
                               ") is not a derivation h0 → h1: fails at " +
                               wit({x, y}));
      }

  // Each (β̄1(x), β̄0(x)) is a derivation pair: levelwise Leibniz, the square
  // ∂̄∘d1 = d0∘∂̄, and d1(u▷a) = d0(u)▷a + u▷d1(a).
  for (int x = 0; x < n0; ++x) {
    if (!is_derivation(b1[x], th1))
      throw CheckError(Code::ActionMismatch,
                       "β̄1(" + std::to_string(x) +
                           ") is not a derivation of the target's h1");
    if (!is_derivation(b0[x], th0))
      throw CheckError(Code::ActionMismatch,
                       "β̄0(" + std::to_string(x) +
                           ") is not a derivation of the target's h0");
    if (matrix_product(del, b1[x]) != matrix_product(b0[x], del))
      throw CheckError(Code::ActionMismatch,
                       "β̄(" + std::to_string(x) +
                           ") breaks the boundary square ∂̄∘d1 = d0∘∂̄");
    for (int u = 0; u < m0; ++u)
      for (int a = 0; a < m1; ++a) {
        RatVector lhs =
            apply_matrix(b1[x], column(target->act().matrix(u), a));
        RatVector rhs = target->act().apply(column(b0[x], u),
                                            basis_vector(m1, a));
        rhs = vec_add(rhs,
                      apply_matrix(target->act().matrix(u), column(b1[x], a)));
        if (lhs != rhs)
          throw CheckError(Code::ActionMismatch,
                           "β̄(" + std::to_string(x) +
                               ") breaks d1(u▷a) = d0(u)▷a + u▷d1(a) at " +
                               wit({u, a}));
      }
  }

  // ᾱ is a Lie algebra homomorphism for [γ,γ'] = γ∘∂̄∘γ' − γ'∘∂̄∘γ.
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) {
      RatMatrix lhs = matrix_comb(abar, actor->h1()->bracket(i, j), m1, m0);
      RatMatrix rhs =
          matrix_sub(matrix_product(abar[i], matrix_product(del, abar[j])),
                     matrix_product(abar[j], matrix_product(del, abar[i])));
      if (lhs != rhs)
        throw CheckError(Code::NotHom,
                         "ᾱ[ξ,η] ≠ [ᾱξ, ᾱη] at basis pair " + wit({i, j}));
    }
  // β̄ is a Lie algebra homomorphism into derivation pairs.
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      const RatVector& br = actor->h0()->bracket(i, j);
      if (matrix_comb(b1, br, m1, m1) !=
              matrix_sub(matrix_product(b1[i], b1[j]),
                         matrix_product(b1[j], b1[i])) ||
          matrix_comb(b0, br, m0, m0) !=
              matrix_sub(matrix_product(b0[i], b0[j]),
                         matrix_product(b0[j], b0[i])))
        throw CheckError(Code::NotHom,
                         "β̄[x,y] ≠ [β̄x, β̄y] at basis pair " + wit({i, j}));
    }

  // Square: the actor boundary μ̄ intertwines ᾱ with β̄ through the actor
  // crossed module's boundary γ ↦ (γ∘∂̄, ∂̄∘γ).
  for (int xi = 0; xi < n1; ++xi) {
    const RatVector mu_xi = column(mu, xi);
    if (matrix_product(abar[xi], del) != matrix_comb(b1, mu_xi, m1, m1) ||
        matrix_product(del, abar[xi]) != matrix_comb(b0, mu_xi, m0, m0))
      throw CheckError(Code::SquareFailure,
                       "(ᾱ(ξ)∘∂̄, ∂̄∘ᾱ(ξ)) ≠ β̄(μ̄ξ) at basis index " +
                           std::to_string(xi));
  }

  // Equivariance: ᾱ(x▷ξ) = β̄1(x)∘ᾱ(ξ) − ᾱ(ξ)∘β̄0(x).
  for (int x = 0; x < n0; ++x)
    for (int xi = 0; xi < n1; ++xi) {
      RatMatrix lhs =
          matrix_comb(abar, column(actor->act().matrix(x), xi), m1, m0);
      RatMatrix rhs = matrix_sub(matrix_product(b1[x], abar[xi]),
                                 matrix_product(abar[xi], b0[x]));
      if (lhs != rhs)
        throw CheckError(Code::EquivarianceFailure,
                         "ᾱ(x▷ξ) ≠ β̄1(x)ᾱ(ξ) − ᾱ(ξ)β̄0(x) at " + wit({x, xi}));
    }

  LieXModAction act;
  act.actor_ = std::move(actor);
  act.target_ = std::move(target);
  act.abar_ = std::move(abar);
  act.b1_ = std::move(b1);
  act.b0_ = std::move(b0);
  return act;
}

LieXModAction adjoint_lie_xmod_action(const LieXModPtr& x) {
  const int n1 = x->h1()->dim(), n0 = x->h0()->dim();
  std::vector<RatMatrix> abar(n1, zero_matrix(n1, n0));
  for (int xi = 0; xi < n1; ++xi)
    for (int u = 0; u < n0; ++u)
      for (int r = 0; r < n1; ++r) abar[xi][r][u] = -x->act().matrix(u)[r][xi];
  std::vector<RatMatrix> b1(n0);
  for (int u = 0; u < n0; ++u) b1[u] = x->act().matrix(u);
  return validate_lie_xmod_action(x, x, std::move(abar), std::move(b1),
                                  adjoint_matrices(*x->h0()));
}

LieXModAction trivial_lie_xmod_action(const LieXModPtr& actor,
                                      const LieXModPtr& target) {
  const int m1 = target->h1()->dim(), m0 = target->h0()->dim();
  std::vector<RatMatrix> abar(actor->h1()->dim(), zero_matrix(m1, m0));
  std::vector<RatMatrix> b1(actor->h0()->dim(), zero_matrix(m1, m1));
  std::vector<RatMatrix> b0(actor->h0()->dim(), zero_matrix(m0, m0));
  return validate_lie_xmod_action(actor, target, std::move(abar),
                                  std::move(b1), std::move(b0));
}

RRBLieOp verify_rrb_lie(const RatMatrix& b, const LieAction& action) {
  const LieAlgebraPtr& g = action.actor();
  const LieAlgebraPtr& h = action.target();
  const int n = g->dim(), m = h->dim();
  require_shape(b, n, m, "operator");

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RatVector lhs = g->bracket(column(b, i), column(b, j));
      RatVector inner =
          vec_sub(action.apply(column(b, i), basis_vector(m, j)),
                  action.apply(column(b, j), basis_vector(m, i)));
      inner = vec_add(inner, h->bracket(i, j));
      RatVector rhs = apply_matrix(b, inner);
      if (lhs != rhs)
        throw CheckError(
            Code::IdentityFailure,
            pair_failure("[Bu,Bv] ≠ B(φ̄(Bu)v − φ̄(Bv)u + [u,v])", i, j, lhs,
                         rhs));
    }
  return RRBLieOp{action, b};
}

bool is_rrb_lie(const RatMatrix& b, const LieAction& action) {
  try {
    verify_rrb_lie(b, action);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

RRBLieXModOp verify_rrb_lie_xmod(const RatMatrix& b1, const RatMatrix& b0,
                                 const LieXModAction& action) {
  const LieXModPtr& gx = action.actor_xm();
  const LieXModPtr& hx = action.target_xm();
  const int n1 = gx->h1()->dim(), n0 = gx->h0()->dim();
  const int m1 = hx->h1()->dim(), m0 = hx->h0()->dim();
  require_shape(b1, n1, m1, "level-1 operator");
  require_shape(b0, n0, m0, "level-0 operator");

  const RatMatrix& mu = gx->boundary();
  const RatMatrix& del = hx->boundary();
  if (matrix_product(mu, b1) != matrix_product(b0, del))
    throw CheckError(Code::SquareFailure, "μ̄∘B1 ≠ B0∘∂̄");

  // (i) level 1 for the action β̄1∘μ̄ of g1 on h1.
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m1; ++j) {
      RatVector lhs = gx->h1()->bracket(column(b1, i), column(b1, j));
      RatVector inner = vec_sub(
          action.apply_b1(apply_matrix(mu, column(b1, i)),
                          basis_vector(m1, j)),
          action.apply_b1(apply_matrix(mu, column(b1, j)),
                          basis_vector(m1, i)));
      inner = vec_add(inner, hx->h1()->bracket(i, j));
      RatVector rhs = apply_matrix(b1, inner);
      if (lhs != rhs)
        throw CheckError(
            Code::ComponentFailure,
            "level 1: " +
                pair_failure("[B1a,B1b] ≠ B1(β̄1(μ̄B1a)b − β̄1(μ̄B1b)a + [a,b])",
                             i, j, lhs, rhs));
    }
  // (ii) level 0 for β̄0.
  for (int i = 0; i < m0; ++i)
    for (int j = 0; j < m0; ++j) {
      RatVector lhs = gx->h0()->bracket(column(b0, i), column(b0, j));
      RatVector inner =
          vec_sub(action.apply_b0(column(b0, i), basis_vector(m0, j)),
                  action.apply_b0(column(b0, j), basis_vector(m0, i)));
      inner = vec_add(inner, hx->h0()->bracket(i, j));
      RatVector rhs = apply_matrix(b0, inner);
      if (lhs != rhs)
        throw CheckError(
            Code::ComponentFailure,
            "level 0: " +
                pair_failure("[B0u,B0v] ≠ B0(β̄0(B0u)v − β̄0(B0v)u + [u,v])", i,
                             j, lhs, rhs));
    }
  // (iii) mixed identity across the two levels.
  for (int u = 0; u < m0; ++u)
    for (int a = 0; a < m1; ++a) {
      RatVector lhs = gx->act().apply(column(b0, u), column(b1, a));
      RatVector inner =
          vec_sub(action.apply_b1(column(b0, u), basis_vector(m1, a)),
                  action.apply_abar(column(b1, a), basis_vector(m0, u)));
      inner = vec_add(inner, column(hx->act().matrix(u), a));
      RatVector rhs = apply_matrix(b1, inner);
      if (lhs != rhs)
        throw CheckError(
            Code::MixedFailure,
            pair_failure("B0u▷B1a ≠ B1(β̄1(B0u)a − ᾱ(B1a)u + u▷a)", u, a, lhs,
                         rhs));
    }
  return RRBLieXModOp{action, b1, b0};
}

bool is_rrb_lie_xmod(const RatMatrix& b1, const RatMatrix& b0,
                     const LieXModAction& action) {
  try {
    verify_rrb_lie_xmod(b1, b0, action);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

CrossedHomLie verify_crossed_hom_lie(const RatMatrix& d,
                                     const LieAction& action) {
  const LieAlgebraPtr& g = action.actor();
  const LieAlgebraPtr& h = action.target();
  const int n = g->dim(), m = h->dim();
  require_shape(d, m, n, "crossed homomorphism");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVector lhs = apply_matrix(d, g->bracket(i, j));
      RatVector rhs =
          vec_sub(action.apply(basis_vector(n, i), column(d, j)),
                  action.apply(basis_vector(n, j), column(d, i)));
      rhs = vec_add(rhs, h->bracket(column(d, i), column(d, j)));
      if (lhs != rhs)
        throw CheckError(
            Code::IdentityFailure,
            pair_failure("D[x,y] ≠ φ̄(x)Dy − φ̄(y)Dx + [Dx,Dy]", i, j, lhs,
                         rhs));
    }
  return CrossedHomLie{action, d};
}

bool is_crossed_hom_lie(const RatMatrix& d, const LieAction& action) {
  try {
    verify_crossed_hom_lie(d, action);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

CrossedHomLieXMod verify_crossed_hom_lie_xmod(const RatMatrix& d1,
                                              const RatMatrix& d0,
                                              const LieXModAction& action) {
  const LieXModPtr& gx = action.actor_xm();
  const LieXModPtr& hx = action.target_xm();
  const int n1 = gx->h1()->dim(), n0 = gx->h0()->dim();
  const int m1 = hx->h1()->dim(), m0 = hx->h0()->dim();
  require_shape(d1, m1, n1, "level-1 crossed homomorphism");
  require_shape(d0, m0, n0, "level-0 crossed homomorphism");

  const RatMatrix& mu = gx->boundary();
  const RatMatrix& del = hx->boundary();
  if (matrix_product(del, d1) != matrix_product(d0, mu))
    throw CheckError(Code::IdentityFailure, "∂̄∘D1 ≠ D0∘μ̄");

  // Level 1 for the action β̄1∘μ̄ of g1 on h1.
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      RatVector lhs = apply_matrix(d1, gx->h1()->bracket(i, j));
      RatVector rhs =
          vec_sub(action.apply_b1(column(mu, i), column(d1, j)),
                  action.apply_b1(column(mu, j), column(d1, i)));
      rhs = vec_add(rhs, hx->h1()->bracket(column(d1, i), column(d1, j)));
      if (lhs != rhs)
        throw CheckError(
            Code::IdentityFailure,
            "level 1: " +
                pair_failure(
                    "D1[ξ,η] ≠ β̄1(μ̄ξ)D1η − β̄1(μ̄η)D1ξ + [D1ξ,D1η]", i, j,
                    lhs, rhs));
    }
  // Level 0 for β̄0.
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) {
      RatVector lhs = apply_matrix(d0, gx->h0()->bracket(i, j));
      RatVector rhs =
          vec_sub(action.apply_b0(basis_vector(n0, i), column(d0, j)),
                  action.apply_b0(basis_vector(n0, j), column(d0, i)));
      rhs = vec_add(rhs, hx->h0()->bracket(column(d0, i), column(d0, j)));
      if (lhs != rhs)
        throw CheckError(
            Code::IdentityFailure,
            "level 0: " +
                pair_failure("D0[x,y] ≠ β̄0(x)D0y − β̄0(y)D0x + [D0x,D0y]", i,
                             j, lhs, rhs));
    }
  // Mixed identity across the two levels.
  for (int x = 0; x < n0; ++x)
    for (int xi = 0; xi < n1; ++xi) {
      RatVector lhs = apply_matrix(d1, column(gx->act().matrix(x), xi));
      RatVector rhs =
          vec_sub(action.apply_b1(basis_vector(n0, x), column(d1, xi)),
                  action.apply_abar(basis_vector(n1, xi), column(d0, x)));
      rhs = vec_add(rhs, hx->act().apply(column(d0, x), column(d1, xi)));
      if (lhs != rhs)
        throw CheckError(
            Code::IdentityFailure,
            pair_failure("D1(x▷ξ) ≠ β̄1(x)D1ξ − ᾱ(ξ)D0x + D0x▷D1ξ", x, xi, lhs,
                         rhs));
    }
  return CrossedHomLieXMod{action, d1, d0};
}

bool is_crossed_hom_lie_xmod(const RatMatrix& d1, const RatMatrix& d0,
                             const LieXModAction& action) {
  try {
    verify_crossed_hom_lie_xmod(d1, d0, action);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

}  // namespace rbcat
