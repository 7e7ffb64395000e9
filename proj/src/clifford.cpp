#include "cliffhopf/clifford.hpp"

namespace cliffhopf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

std::vector<Scalar> form_row(const Matrix& form, int index) {
  auto r = form.row(static_cast<std::size_t>(index));
  return {r.begin(), r.end()};
}

int lowest_index(Blade b) { return std::countr_zero(b.bits); }

} // namespace

// ---------------------------------------------------------------- Tensor2

Tensor2::Tensor2(int dim) : dim_(dim) { require_dim(dim); }

Tensor2 Tensor2::simple(const Multivector& x, const Multivector& y) {
  require(x.dim() == y.dim(), "tensor factors of different rank");
  Tensor2 t(x.dim());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) t.add_term(a, b, ca * cb);
  return t;
}

Scalar Tensor2::coefficient(Blade a, Blade b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor2::add_term(Blade a, Blade b, const Scalar& c) {
  require((a.bits >> dim_) == 0 && (b.bits >> dim_) == 0, "blade index out of range for module rank");
  if (cliffhopf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (cliffhopf::is_zero(it->second)) terms_.erase(it);
}

Tensor2& Tensor2::operator+=(const Tensor2& other) {
  require(dim_ == other.dim_, "Tensor2 dimension mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& other) {
  require(dim_ == other.dim_, "Tensor2 dimension mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  if (cliffhopf::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const Tensor2& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*e{" + blade_key(k.first) + "}⊗e{" + blade_key(k.second) + "}";
  }
  return s;
}

// ---------------------------------------------------------------- CliffordAlgebra

template <class Space>
CliffordAlgebra<Space>::CliffordAlgebra(int dim, Matrix form) : dim_(dim), form_(std::move(form)) {
  require_dim(dim);
  require(form_.rows() == static_cast<std::size_t>(dim) && form_.cols() == static_cast<std::size_t>(dim),
          "bilinear form must be n x n");

  const std::size_t count = std::size_t{1} << dim;
  table_.assign(count * count, Element(dim));

  std::vector<std::vector<Blade>> by_grade(static_cast<std::size_t>(dim) + 1);
  for (auto b : all_blades(dim)) by_grade[static_cast<std::size_t>(b.grade())].push_back(b);

  for (auto b : all_blades(dim)) table_[b.bits] = Element(dim, b);

  // Each grade only reads rows of lower grades, so rows within a grade are independent.
  for (std::size_t g = 1; g < by_grade.size(); ++g) {
    const auto& blades = by_grade[g];
    const auto total = static_cast<std::ptrdiff_t>(blades.size());
#pragma omp parallel for schedule(dynamic) if (count >= 16)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      const Blade a = blades[static_cast<std::size_t>(i)];
      const int s = lowest_index(a);
      const Blade rest{a.bits & (a.bits - 1)};
      // e_a = e_s ∧ e_rest = e_s e_rest − i_s(e_rest)
      const Element correction = contract_components(form_row(form_, s), Element(dim, rest));
      for (std::uint32_t b = 0; b < count; ++b) {
        Element value = vector_product(s, table_[rest.bits * count + b]);
        for (const auto& [t, c] : correction.terms()) value -= c * table_[t.bits * count + b];
        table_[a.bits * count + b] = std::move(value);
      }
    }
  }
}

template <class Space>
const typename CliffordAlgebra<Space>::Element& CliffordAlgebra<Space>::blade_product(Blade a, Blade b) const {
  return table_[(std::size_t{a.bits} << dim_) + b.bits];
}

template <class Space>
typename CliffordAlgebra<Space>::Element CliffordAlgebra<Space>::multiply(const Element& x, const Element& y) const {
  require(x.dim() == dim_ && y.dim() == dim_, "Clifford product: dimension mismatch");
  Element out(dim_);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += (ca * cb) * blade_product(a, b);
  return out;
}

template <class Space>
typename CliffordAlgebra<Space>::Element CliffordAlgebra<Space>::vector_product(int index, const Element& x) const {
  return wedge(Element(dim_, Blade::vector(index)), x) + contract_components(form_row(form_, index), x);
}

template <class Space>
std::optional<std::array<Blade, 3>> CliffordAlgebra<Space>::find_associativity_failure() const {
  const auto blades = all_blades(dim_);
  const auto count = static_cast<std::ptrdiff_t>(blades.size());
  std::vector<std::optional<std::array<Blade, 3>>> failures(blades.size());
#pragma omp parallel for schedule(dynamic) if (count >= 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Blade a = blades[static_cast<std::size_t>(i)];
    for (auto b : blades) {
      const Element ab = blade_product(a, b);
      for (auto c : blades) {
        const Element lhs = multiply(ab, Element(dim_, c));
        const Element rhs = multiply(Element(dim_, a), blade_product(b, c));
        if (!(lhs == rhs)) {
          failures[static_cast<std::size_t>(i)] = std::array<Blade, 3>{a, b, c};
          break;
        }
      }
      if (failures[static_cast<std::size_t>(i)]) break;
    }
  }
  for (auto& f : failures)
    if (f) return f;
  return std::nullopt;
}

template class CliffordAlgebra<VectorSpace>;
template class CliffordAlgebra<CovectorSpace>;

namespace reference {

namespace {
template <class Space>
BasicMultivector<Space> blade_times(const Matrix& form, Blade a, const BasicMultivector<Space>& y) {
  const int dim = y.dim();
  if (a.bits == 0) return y;
  const int s = lowest_index(a);
  const Blade rest{a.bits & (a.bits - 1)};
  auto row = form.row(static_cast<std::size_t>(s));
  const std::vector<Scalar> eta_s(row.begin(), row.end());

  auto tail = blade_times(form, rest, y);
  auto out = wedge(BasicMultivector<Space>(dim, Blade::vector(s)), tail) + contract_components(eta_s, tail);
  const auto correction = contract_components(eta_s, BasicMultivector<Space>(dim, rest));
  for (const auto& [t, c] : correction.terms()) out -= c * blade_times(form, t, y);
  return out;
}
} // namespace

template <class Space>
BasicMultivector<Space> chevalley_product(const Matrix& form, const BasicMultivector<Space>& x,
                                          const BasicMultivector<Space>& y) {
  BasicMultivector<Space> out(x.dim());
  for (const auto& [a, c] : x.terms()) out += c * blade_times(form, a, y);
  return out;
}

template Multivector chevalley_product(const Matrix&, const Multivector&, const Multivector&);
template DualMultivector chevalley_product(const Matrix&, const DualMultivector&, const DualMultivector&);

} // namespace reference

// ---------------------------------------------------------------- CliffordStructure

CliffordStructure::CliffordStructure(int dim, Matrix eta, Matrix xi)
    : dim_(dim), algebra_(dim, std::move(eta)), dual_algebra_(dim, std::move(xi)) {
  const std::size_t count = blade_count();
  coproduct_table_.assign(count, Tensor2(dim));
  // coefficient of e_A ⊗ e_B in △e_C = ⟨ε^A ∧^ξ ε^B, e_C⟩
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      for (const auto& [c, coeff] : dual_algebra_.blade_product(Blade{a}, Blade{b}).terms())
        coproduct_table_[c.bits].add_term(Blade{a}, Blade{b}, coeff);

  if (dim <= kEagerAssociativityRank) {
    if (algebra_.find_associativity_failure() || dual_algebra_.find_associativity_failure())
      throw ContractViolation("Clifford structure constants are not associative");
    associativity_verified_ = true;
  }
}

Tensor2 CliffordStructure::coproduct(const Multivector& x) const {
  require(x.dim() == dim_, "coproduct: dimension mismatch");
  Tensor2 out(dim_);
  for (const auto& [b, c] : x.terms()) out += c * coproduct_table_[b.bits];
  return out;
}

Multivector clifford_product(const Multivector& x, const Multivector& y, const CliffordStructure& s) {
  return s.product(x, y);
}

DualMultivector dual_clifford_product(const DualMultivector& a, const DualMultivector& b,
                                      const CliffordStructure& s) {
  return s.dual_product(a, b);
}

Tensor2 coproduct(const Multivector& x, const CliffordStructure& s) { return s.coproduct(x); }

Scalar counit(const Multivector& x) { return x.coefficient(Blade::unit()); }

Multivector unit(int dim, const Scalar& c) { return Multivector::scalar(dim, c); }

Tensor2 dkp_coproduct(const Multivector& x) {
  Tensor2 out(x.dim());
  for (const auto& [s, c] : x.terms()) {
    // iterate all subsets t of s
    for (std::uint32_t t = s.bits;; t = (t - 1) & s.bits) {
      const Blade left{t};
      const Blade right{s.bits & ~t};
      const bool odd = wedge_inversions(left, right) % 2 != 0;
      out.add_term(left, right, odd ? Scalar(-c) : c);
      if (t == 0) break;
    }
  }
  return out;
}

MorphismCheck check_counit_is_algebra_map(const CliffordStructure& s) {
  MorphismCheck out;
  for (auto a : all_blades(s.dim()))
    for (auto b : all_blades(s.dim())) {
      const Scalar lhs = counit(s.algebra().blade_product(a, b));
      const Scalar rhs = (a.bits == 0 && b.bits == 0) ? Scalar(1) : Scalar(0);
      if (lhs != rhs) {
        out.holds = false;
        out.witness = std::pair{a, b};
        return out;
      }
    }
  return out;
}

MorphismCheck check_unit_is_cogebra_map(const CliffordStructure& s) {
  MorphismCheck out;
  out.defect = s.blade_coproduct(Blade::unit());
  out.defect.add_term(Blade::unit(), Blade::unit(), -1);
  out.holds = out.defect.is_zero();
  return out;
}

namespace {
using Triple = std::map<std::array<Blade, 3>, Scalar>;

void add_triple(Triple& t, const std::array<Blade, 3>& key, const Scalar& c) {
  Scalar& slot = t[key];
  slot += c;
  if (cliffhopf::is_zero(slot)) t.erase(key);
}
} // namespace

std::optional<Blade> find_coassociativity_failure(const CliffordStructure& s) {
  for (auto c : all_blades(s.dim())) {
    Triple left, right;
    for (const auto& [k, v] : s.blade_coproduct(c).terms()) {
      for (const auto& [k1, v1] : s.blade_coproduct(k.first).terms())
        add_triple(left, {k1.first, k1.second, k.second}, v * v1);
      for (const auto& [k2, v2] : s.blade_coproduct(k.second).terms())
        add_triple(right, {k.first, k2.first, k2.second}, v * v2);
    }
    if (left != right) return c;
  }
  return std::nullopt;
}

std::optional<Blade> find_counit_law_failure(const CliffordStructure& s) {
  for (auto c : all_blades(s.dim())) {
    const Multivector expected(s.dim(), c);
    Multivector left(s.dim()), right(s.dim());
    for (const auto& [k, v] : s.blade_coproduct(c).terms()) {
      if (k.first.bits == 0) left.add_term(k.second, v);
      if (k.second.bits == 0) right.add_term(k.first, v);
    }
    if (left != expected || right != expected) return c;
  }
  return std::nullopt;
}

std::optional<std::array<Blade, 3>> find_duality_failure(const CliffordStructure& s) {
  const auto blades = all_blades(s.dim());
  for (auto a : blades)
    for (auto b : blades) {
      const DualMultivector product = reference::chevalley_product(s.xi(), DualMultivector(s.dim(), a),
                                                                   DualMultivector(s.dim(), b));
      for (auto x : blades)
        if (det_pairing(product, Multivector(s.dim(), x)) != s.blade_coproduct(x).coefficient(a, b))
          return std::array{a, b, x};
    }
  return std::nullopt;
}

Matrix product_matrix(const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  Matrix m(count, count * count);
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      for (const auto& [c, coeff] : s.algebra().blade_product(Blade{a}, Blade{b}).terms())
        m(c.bits, a * count + b) = coeff;
  return m;
}

Matrix coproduct_matrix(const CliffordStructure& s) {
  const std::size_t count = s.blade_count();
  Matrix m(count * count, count);
  for (std::uint32_t c = 0; c < count; ++c)
    for (const auto& [k, coeff] : s.blade_coproduct(Blade{c}).terms())
      m(k.first.bits * count + k.second.bits, c) = coeff;
  return m;
}

Matrix counit_matrix(const CliffordStructure& s) {
  Matrix m(1, s.blade_count());
  m(0, 0) = 1;
  return m;
}

Matrix unit_matrix(const CliffordStructure& s) {
  Matrix m(s.blade_count(), 1);
  m(0, 0) = 1;
  return m;
}

Vector to_vector(const Multivector& x) {
  Vector v(std::size_t{1} << x.dim());
  for (const auto& [b, c] : x.terms()) v[b.bits] = c;
  return v;
}

Multivector from_vector(int dim, const Vector& v) {
  require(v.size() == (std::size_t{1} << dim), "vector length is not 2^n");
  Multivector x(dim);
  for (std::uint32_t i = 0; i < v.size(); ++i) x.add_term(Blade{i}, v[i]);
  return x;
}

Vector to_vector(const Tensor2& t) {
  const std::size_t count = std::size_t{1} << t.dim();
  Vector v(count * count);
  for (const auto& [k, c] : t.terms()) v[k.first.bits * count + k.second.bits] = c;
  return v;
}

Tensor2 tensor_from_vector(int dim, const Vector& v) {
  const std::size_t count = std::size_t{1} << dim;
  require(v.size() == count * count, "vector length is not 4^n");
  Tensor2 t(dim);
  for (std::uint32_t i = 0; i < v.size(); ++i)
    t.add_term(Blade{static_cast<std::uint32_t>(i / count)}, Blade{static_cast<std::uint32_t>(i % count)}, v[i]);
  return t;
}

} // namespace cliffhopf
