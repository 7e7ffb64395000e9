#include "cliffhopf/braiding.hpp"

namespace cliffhopf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

std::size_t pair_count(int dim) { return std::size_t{1} << (2 * dim); }

void require_shape(const Scattering& sigma, const CliffordStructure& s) {
  require(sigma.matrix.rows() == pair_count(s.dim()) && sigma.matrix.cols() == pair_count(s.dim()),
          "scattering shape does not match the structure");
}

int dim_of(const Scattering& sigma) {
  const auto n = sigma.matrix.rows();
  require(sigma.matrix.square() && n != 0 && (n & (n - 1)) == 0 && std::countr_zero(n) % 2 == 0,
          "scattering must be 4^n x 4^n");
  return std::countr_zero(n) / 2;
}

// (x1 · a) ⊗ (b · y2) summed over the σ-image of x2 ⊗ y1, weighted.
void add_middle_crossing(Tensor2& out, const Scalar& weight, Blade x1, Blade x2, Blade y1, Blade y2,
                         const Scattering& sigma, const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  const std::size_t input = x2.bits * count + y1.bits;
  for (std::size_t k = 0; k < count * count; ++k) {
    const Scalar& entry = sigma.matrix(k, input);
    if (is_zero(entry)) continue;
    const Blade a{static_cast<std::uint32_t>(k / count)}, b{static_cast<std::uint32_t>(k % count)};
    const auto& left = s.algebra().blade_product(x1, a);
    const auto& right = s.algebra().blade_product(b, y2);
    for (const auto& [u, cu] : left.terms())
      for (const auto& [v, cv] : right.terms()) out.add_term(u, v, weight * entry * cu * cv);
  }
}

} // namespace

Scattering Scattering::identity(int dim) { return {Matrix::identity(pair_count(dim))}; }

Scattering Scattering::plain_switch(int dim) {
  const std::size_t count = std::size_t{1} << dim;
  Matrix m(count * count, count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) m(b * count + a, a * count + b) = 1;
  return {m};
}

Scattering Scattering::graded_switch(int dim) {
  const std::size_t count = std::size_t{1} << dim;
  Matrix m(count * count, count * count);
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      const bool odd = (Blade{a}.grade() * Blade{b}.grade()) % 2 != 0;
      m(b * count + a, a * count + b) = odd ? -1 : 1;
    }
  return {m};
}

Tensor2 Scattering::apply(const Tensor2& t) const {
  require(matrix.rows() == pair_count(t.dim()), "scattering shape does not match tensor");
  return tensor_from_vector(t.dim(), matrix * to_vector(t));
}

std::vector<Tensor2> compatibility_defect(const Scattering& sigma, const CliffordStructure& s) {
  require_shape(sigma, s);
  const std::size_t count = s.blade_count();
  std::vector<Tensor2> defects(count * count, Tensor2(s.dim()));
  const auto total = static_cast<std::ptrdiff_t>(count * count);
#pragma omp parallel for schedule(dynamic) if (count >= 4)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const Blade x{static_cast<std::uint32_t>(static_cast<std::size_t>(idx) / count)};
    const Blade y{static_cast<std::uint32_t>(static_cast<std::size_t>(idx) % count)};
    Tensor2 d = s.coproduct(s.algebra().blade_product(x, y));
    Tensor2 rhs(s.dim());
    for (const auto& [kx, cx] : s.blade_coproduct(x).terms())
      for (const auto& [ky, cy] : s.blade_coproduct(y).terms())
        add_middle_crossing(rhs, cx * cy, kx.first, kx.second, ky.first, ky.second, sigma, s);
    d -= rhs;
    defects[static_cast<std::size_t>(idx)] = std::move(d);
  }
  return defects;
}

bool is_compatible(const Scattering& sigma, const CliffordStructure& s) {
  for (const auto& d : compatibility_defect(sigma, s))
    if (!d.is_zero()) return false;
  return true;
}

OperatorSolutionSet solve_sigma(const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  const std::size_t pairs = count * count;
  // unknown σ(k, l) -> k * pairs + l; equation (x, y, u, v) -> (x * count + y) * pairs + u * count + v
  Matrix system(pairs * pairs, pairs * pairs);
  Vector rhs(pairs * pairs);

  const auto total = static_cast<std::ptrdiff_t>(pairs);
#pragma omp parallel for schedule(dynamic) if (count >= 4)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const std::size_t block = static_cast<std::size_t>(idx) * pairs;
    const Blade x{static_cast<std::uint32_t>(static_cast<std::size_t>(idx) / count)};
    const Blade y{static_cast<std::uint32_t>(static_cast<std::size_t>(idx) % count)};
    const Tensor2 target = s.coproduct(s.algebra().blade_product(x, y));
    for (const auto& [k, c] : target.terms())
      rhs[block + k.first.bits * count + k.second.bits] = c;

    for (const auto& [kx, cx] : s.blade_coproduct(x).terms())
      for (const auto& [ky, cy] : s.blade_coproduct(y).terms()) {
        const std::size_t input = kx.second.bits * count + ky.first.bits;
        for (std::uint32_t a = 0; a < count; ++a)
          for (std::uint32_t b = 0; b < count; ++b) {
            const std::size_t unknown = (a * count + b) * pairs + input;
            const auto& left = s.algebra().blade_product(kx.first, Blade{a});
            const auto& right = s.algebra().blade_product(Blade{b}, ky.second);
            for (const auto& [u, cu] : left.terms())
              for (const auto& [v, cv] : right.terms())
                system(block + u.bits * count + v.bits, unknown) += cx * cy * cu * cv;
          }
      }
  }
  return OperatorSolutionSet::from_flat(solve_linear_system(system, rhs), pairs);
}

Scattering closed_form_sigma(const Scalar& i2, const Scalar& j2) {
  const Scalar a = i2 * j2;
  if (a == 1) throw ContractViolation("closed-form scattering requires i² j² != 1");
  const Scalar f = 1 / (1 - a);
  // pair index: 0 = 1⊗1, 1 = 1⊗i, 2 = i⊗1, 3 = i⊗i
  Matrix m(4, 4);
  m(0, 0) = 1 - a * a * f;
  m(3, 0) = -j2 * f;
  m(3, 3) = -f;
  m(0, 3) = -f * i2;
  m(2, 1) = f;
  m(1, 1) = f * a;
  m(1, 2) = f;
  m(2, 2) = f * a;
  return {m};
}

bool check_min_polynomial(const Scattering& sigma, const Scalar& a) {
  if (a == 1) throw ContractViolation("minimal polynomial undefined at a = 1");
  const Scalar b = (1 + a) / (1 - a);
  const auto id = Matrix::identity(sigma.matrix.rows());
  const auto& s = sigma.matrix;
  const Matrix product = (s + id) * (s - b * id) * (s * s + (a * b) * s - b * id);
  return product.is_zero();
}

BraidCheck check_braid_equation(const Matrix& sigma, std::size_t factor) {
  require(sigma.square() && sigma.rows() == factor * factor, "braid check: σ must act on X ⊗ X");
  const auto id = Matrix::identity(factor);
  const Matrix left = kron(sigma, id);
  const Matrix right = kron(id, sigma);
  const Matrix defect = left * right * left - right * left * right;
  return {defect.is_zero(), defect.nonzero_count()};
}

BraidCheck check_braid_equation(const Scattering& sigma) {
  return check_braid_equation(sigma.matrix, std::size_t{1} << dim_of(sigma));
}

BraidedReport check_braided(const CliffordStructure& s, const Scattering& sigma) {
  require_shape(sigma, s);
  require(is_compatible(sigma, s), "check_braided: σ does not satisfy the bi-gebra law");

  const std::size_t count = s.blade_count();
  const auto id = Matrix::identity(count);
  const Matrix m = product_matrix(s);
  const Matrix d = coproduct_matrix(s);
  const Matrix& sg = sigma.matrix;

  BraidedReport r;
  r.invertible = is_invertible(sg);
  r.braid_equation_holds = check_braid_equation(sigma).holds;
  r.product_naturality_holds = sg * kron(m, id) == kron(id, m) * kron(sg, id) * kron(id, sg);
  r.coproduct_naturality_holds = kron(d, id) * sg == kron(id, sg) * kron(sg, id) * kron(id, d);
  r.all_four_flags =
      r.invertible && r.braid_equation_holds && r.product_naturality_holds && r.coproduct_naturality_holds;
  r.verdict_braided =
      r.invertible && r.braid_equation_holds && (r.product_naturality_holds || r.coproduct_naturality_holds);
  return r;
}

Scattering twelve_param_family_member(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& i2) {
  require(p + q + r == 0, "twelve-parameter family requires p + q + r = 0");
  Matrix m(4, 4);
  m(0, 0) = 1;
  m(2, 1) = 1;
  m(1, 1) = p;
  m(1, 2) = 1;
  m(2, 2) = q;
  m(3, 3) = r;
  m(0, 3) = -i2;
  return {m};
}

Tensor2 module_action(const Multivector& x, const Tensor2& t, const Scattering& sigma, const CliffordStructure& s) {
  require_shape(sigma, s);
  require(x.dim() == s.dim() && t.dim() == s.dim(), "module_action: dimension mismatch");
  Tensor2 out(s.dim());
  const Tensor2 split = s.coproduct(x);
  for (const auto& [kx, cx] : split.terms())
    for (const auto& [kt, ct] : t.terms())
      add_middle_crossing(out, cx * ct, kx.first, kx.second, kt.first, kt.second, sigma, s);
  return out;
}

std::vector<ActionAssociativityEntry> action_associativity_table(const Scattering& sigma,
                                                                 const CliffordStructure& s) {
  std::vector<ActionAssociativityEntry> table;
  const auto blades = all_blades(s.dim());
  for (auto x : blades)
    for (auto y : blades)
      for (auto l : blades)
        for (auto r : blades) {
          const Multivector mx(s.dim(), x), my(s.dim(), y);
          const Tensor2 t = Tensor2::simple(Multivector(s.dim(), l), Multivector(s.dim(), r));
          const Tensor2 lhs = module_action(s.product(mx, my), t, sigma, s);
          const Tensor2 rhs = module_action(mx, module_action(my, t, sigma, s), sigma, s);
          table.push_back({x, y, l, r, lhs == rhs});
        }
  return table;
}

} // namespace cliffhopf
