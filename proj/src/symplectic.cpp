#include "sympal/symplectic.hpp"

#include "sympal/numtheory.hpp"

namespace sympal {

SympSpace::SympSpace(FieldSpec field, Matrix gram) : field_(std::move(field)), gram_(std::move(gram)) {
  if (gram_.field() != field_) throw Error(Errc::MixedField, "gram matrix over a different field");
  if (!gram_.is_square()) throw Error(Errc::DimensionMismatch, "gram matrix must be square");
  const std::size_t n = gram_.rows();
  if (n == 0 || n % 2 != 0) throw Error(Errc::InvalidParams, "symplectic dimension must be even and positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_(i, i) != 0) throw Error(Errc::InvalidParams, "gram matrix has nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_(i, j) != field_->neg(gram_(j, i))) throw Error(Errc::InvalidParams, "gram matrix is not skew");
    }
  }
  if (rank(gram_) != n) throw Error(Errc::Singular, "gram matrix is singular");
}

SympSpace SympSpace::standard(const FieldSpec& field, std::size_t n) {
  if (n == 0 || n % 2 != 0) throw Error(Errc::InvalidParams, "symplectic dimension must be even and positive");
  Matrix j(field, n, n);
  const std::size_t m = n / 2;
  for (std::size_t i = 0; i < m; ++i) {
    j(i, i + m) = 1;
    j(i + m, i) = field->neg(1);
  }
  return {field, std::move(j)};
}

bool SympSpace::is_standard() const { return gram_ == standard(field_, dim()).gram(); }

Field::Elem SympSpace::form(const Vec& u, const Vec& v) const {
  const Field& f = *field_;
  Field::Elem s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    Field::Elem row = 0;
    for (std::size_t j = 0; j < dim(); ++j) row = f.add(row, f.mul(gram_(i, j), v[j]));
    s = f.add(s, f.mul(u[i], row));
  }
  return s;
}

Vec SympSpace::unit(std::size_t i) const {
  Vec v(dim(), 0);
  v.at(i) = 1;
  return v;
}

// --- Subspace -------------------------------------------------------------------

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vec> vectors) {
  if (vectors.empty()) return Subspace(field, ambient_dim);
  return Subspace(rref(Matrix::from_rows(field, ambient_dim, vectors)).reduced);
}

Subspace Subspace::whole(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::from_basis(const Matrix& rows) { return Subspace(rref(rows).reduced); }

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::DimensionMismatch, "vector length mismatch");
  EchelonBasis eb(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) eb.insert(basis_.row(i));
  return eb.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  EchelonBasis eb(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) eb.insert(basis_.row(i));
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!eb.contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  // Reduced echelon rows: the coordinate on row i is v at that row's pivot.
  const Field& f = *field();
  Vec coords(dim(), 0);
  Vec residue = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    coords[i] = v[p];
    for (std::size_t j = 0; j < ambient_dim(); ++j) residue[j] = f.sub(residue[j], f.mul(coords[i], basis_(i, j)));
  }
  if (!vec_is_zero(residue)) throw Error(Errc::DimensionMismatch, "vector not in subspace");
  return coords;
}

Subspace Subspace::image(const Matrix& a) const {
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(mat_vec(a, basis_.row(i)));
  return span(field(), ambient_dim(), imgs);
}

Subspace Subspace::sum(const Subspace& other) const {
  auto vs = vectors();
  for (auto& v : other.vectors()) vs.push_back(v);
  return span(field(), ambient_dim(), vs);
}

// --- similitudes and transvections ------------------------------------------------

Field::Elem multiplier_of(const SympSpace& space, const Matrix& a) {
  if (a.field() != space.field()) throw Error(Errc::MixedField, "matrix over a different field");
  if (a.rows() != space.dim() || !a.is_square()) throw Error(Errc::DimensionMismatch, "matrix size mismatch");
  if (rank(a) != a.rows()) throw Error(Errc::Singular, "matrix is not invertible");
  const Matrix& j = space.gram();
  const Matrix pulled = transpose(a) * j * a;
  const Field& f = space.f();
  // gram has a nonzero entry in row 0 since it is nonsingular
  std::size_t c = 0;
  while (j(0, c) == 0) ++c;
  const auto alpha = f.div(pulled(0, c), j(0, c));
  if (!(pulled == scale(j, alpha))) throw Error(Errc::NotSimilitude, "no scalar multiplier");
  return alpha;
}

bool is_similitude(const SympSpace& space, const Matrix& a) {
  try {
    multiplier_of(space, a);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotSimilitude || e.code() == Errc::Singular) return false;
    throw;
  }
}

Matrix make_transvection(const SympSpace& space, const Vec& v, Field::Elem lambda) {
  if (v.size() != space.dim()) throw Error(Errc::DimensionMismatch, "direction has wrong length");
  const Field& f = space.f();
  const std::size_t n = space.dim();
  // <u, v> = sum_j u_j (J v)_j, so T = I + lambda v (J v)^T
  const Vec jv = mat_vec(space.gram(), v);
  Matrix t = Matrix::identity(space.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    const auto lv = f.mul(lambda, v[i]);
    for (std::size_t j = 0; j < n; ++j) t(i, j) = f.add(t(i, j), f.mul(lv, jv[j]));
  }
  return t;
}

TransvectionResult detect_transvection(const SympSpace& space, const Matrix& a) {
  const Field& f = space.f();
  const std::size_t n = space.dim();
  if (a.is_identity()) return {TransvectionKind::Trivial, std::nullopt};
  const Matrix d = a - Matrix::identity(space.field(), n);
  // rank one means every column is a multiple of one nonzero column
  std::size_t c0 = 0;
  while (c0 < n && vec_is_zero(d.col(c0))) ++c0;
  Vec v = d.col(c0);
  normalize_leading(f, v);
  const Vec jv = mat_vec(space.gram(), v);
  std::size_t k = 0;
  while (k < n && jv[k] == 0) ++k;  // jv != 0 since J is nonsingular and v != 0
  // D = lambda v (Jv)^T forces column k of D to be lambda (Jv)_k v
  std::size_t p = 0;
  while (v[p] == 0) ++p;
  const auto lambda = f.div(d(p, k), jv[k]);
  if (lambda == 0) return {TransvectionKind::NotTransvection, std::nullopt};
  if (!(make_transvection(space, v, lambda) == a)) return {TransvectionKind::NotTransvection, std::nullopt};
  return {TransvectionKind::Nontrivial, TransvectionData{std::move(v), lambda}};
}

Subspace perp(const SympSpace& space, const Subspace& u) {
  const std::size_t n = space.dim();
  if (u.dim() == 0) return Subspace::whole(space.field(), n);
  // <x, u> = x^T (J u), so U^perp is the kernel of the rows (J u)^T
  std::vector<Vec> eqs;
  for (const auto& b : u.vectors()) eqs.push_back(mat_vec(space.gram(), b));
  const Matrix ns = nullspace(Matrix::from_rows(space.field(), n, eqs));
  return Subspace::from_basis(ns);
}

bool is_nonsingular_subspace(const SympSpace& space, const Subspace& u) {
  const auto vs = u.vectors();
  Matrix g(space.field(), vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = space.form(vs[i], vs[j]);
  return rank(g) == vs.size();
}

bool stabilizes(const Matrix& a, const Subspace& u) {
  for (const auto& b : u.vectors())
    if (!u.contains(mat_vec(a, b))) return false;
  return true;
}

std::optional<std::uint64_t> sp_order(std::size_t n, std::uint64_t q) {
  if (n % 2 != 0) return std::nullopt;
  const unsigned m = static_cast<unsigned>(n / 2);
  auto order = nt::checked_pow(q, m * m);
  if (!order) return std::nullopt;
  for (unsigned i = 1; i <= m; ++i) {
    auto qi = nt::checked_pow(q, 2 * i);
    if (!qi) return std::nullopt;
    order = nt::checked_mul(*order, *qi - 1);
    if (!order) return std::nullopt;
  }
  return order;
}

}  // namespace sympal
