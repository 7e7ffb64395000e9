#include "cliffhopf/hopf.hpp"

namespace cliffhopf {

OperatorSolutionSet OperatorSolutionSet::from_flat(const AffineSolutionSet& flat, std::size_t size) {
  auto reshape = [size](const Vector& v) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < v.size(); ++i) m(i / size, i % size) = v[i];
    return m;
  };
  OperatorSolutionSet out;
  out.rank = flat.rank;
  if (flat.particular) out.particular = reshape(*flat.particular);
  for (const auto& v : flat.nullspace_basis) out.nullspace_basis.push_back(reshape(v));
  return out;
}

EndoMap EndoMap::identity(const CliffordStructure& s) { return {Matrix::identity(s.blade_count())}; }

EndoMap EndoMap::unit_counit(const CliffordStructure& s) {
  Matrix m(s.blade_count(), s.blade_count());
  m(0, 0) = 1;
  return {m};
}

Multivector EndoMap::apply(const Multivector& x) const {
  if (matrix.rows() != (std::size_t{1} << x.dim())) throw ContractViolation("EndoMap: shape mismatch");
  return from_vector(x.dim(), matrix * to_vector(x));
}

EndoMap convolution(const EndoMap& f, const EndoMap& g, const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  if (f.matrix.rows() != count || f.matrix.cols() != count || !(g.matrix.rows() == count && g.matrix.cols() == count))
    throw ContractViolation("convolution: shape mismatch");

  std::vector<Multivector> f_images, g_images;
  for (std::size_t b = 0; b < count; ++b) {
    f_images.push_back(from_vector(s.dim(), f.matrix.column(b)));
    g_images.push_back(from_vector(s.dim(), g.matrix.column(b)));
  }

  Matrix out(count, count);
  for (std::uint32_t c = 0; c < count; ++c) {
    Multivector image(s.dim());
    for (const auto& [k, coeff] : s.blade_coproduct(Blade{c}).terms())
      image += coeff * s.product(f_images[k.first.bits], g_images[k.second.bits]);
    for (const auto& [b, v] : image.terms()) out(b.bits, c) = v;
  }
  return {out};
}

OperatorSolutionSet solve_antipode(const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  const std::size_t unknowns = count * count; // S(r, a) -> r * count + a
  Matrix system(2 * count * count, unknowns);
  Vector rhs(2 * count * count);

  const auto& alg = s.algebra();
  for (std::uint32_t c = 0; c < count; ++c) {
    const std::size_t left_block = c * count;            // (S ⋆ id)(e_c), component d
    const std::size_t right_block = (count + c) * count; // (id ⋆ S)(e_c), component d
    for (const auto& [k, coeff] : s.blade_coproduct(Blade{c}).terms()) {
      const Blade a = k.first, b = k.second;
      for (std::uint32_t r = 0; r < count; ++r) {
        for (const auto& [d, v] : alg.blade_product(Blade{r}, b).terms())
          system(left_block + d.bits, r * count + a.bits) += coeff * v;
        for (const auto& [d, v] : alg.blade_product(a, Blade{r}).terms())
          system(right_block + d.bits, r * count + b.bits) += coeff * v;
      }
    }
  }
  rhs[0] = 1;                // ε(1) · 1, left equations
  rhs[count * count] = 1;    // same for the right equations
  return OperatorSolutionSet::from_flat(solve_linear_system(system, rhs), count);
}

EndoMap complex_antipode_closed_form(const Scalar& a) {
  if (a == 1) throw ContractViolation("no antipode exists at a = 1");
  const Scalar inv = 1 / (1 - a);
  Matrix m(2, 2);
  m(0, 0) = inv;
  m(1, 1) = -inv;
  return {m};
}

Matrix xi_after_eta(const CliffordStructure& s) {
  // η: v ↦ η(v, ·) has matrix ηᵀ; ξ: α ↦ ξ(α, ·) has matrix ξᵀ.
  return s.xi().transpose() * s.eta().transpose();
}

ConjectureEvidence test_conjecture_antipode(const CliffordStructure& s) {
  ConjectureEvidence e;
  e.xi_eta_is_identity = xi_after_eta(s) == Matrix::identity(static_cast<std::size_t>(s.dim()));
  e.antipode_exists = solve_antipode(s).consistent();
  e.conjecture_consistent = e.antipode_exists != e.xi_eta_is_identity;
  return e;
}

} // namespace cliffhopf
