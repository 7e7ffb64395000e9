#include "cliffhopf/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace cliffhopf {

void require_dim(int dim) {
  if (dim < 0 || dim > kMaxRank)
    throw ContractViolation("module rank must lie in [0, " + std::to_string(kMaxRank) + "]");
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (auto b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int wedge_inversions(Blade lhs, Blade rhs) {
  int count = 0;
  for (auto t = rhs.bits; t != 0; t &= t - 1) {
    const int idx = std::countr_zero(t);
    const std::uint32_t above = ~((std::uint32_t{2} << idx) - 1);
    count += std::popcount(lhs.bits & above);
  }
  return count;
}

std::string blade_key(Blade b) {
  std::string key;
  for (int idx : b.indices()) {
    if (!key.empty()) key += ',';
    key += std::to_string(idx);
  }
  return key;
}

Blade parse_blade_key(const std::string& key, int dim) {
  Blade b;
  if (key.empty()) return b;
  std::stringstream in(key);
  std::string part;
  int previous = -1;
  while (std::getline(in, part, ',')) {
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(part, &used);
      if (used != part.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed blade key \"" + key + "\"");
    }
    if (idx <= previous || idx >= dim)
      throw ParseError("blade key \"" + key + "\" must list ascending indices below " + std::to_string(dim));
    b.bits |= std::uint32_t{1} << idx;
    previous = idx;
  }
  return b;
}

std::vector<Blade> all_blades(int dim) {
  require_dim(dim);
  std::vector<Blade> out(std::size_t{1} << dim);
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i].bits = i;
  return out;
}

template <class Space>
BasicMultivector<Space>::BasicMultivector(int dim) : dim_(dim) {
  require_dim(dim);
}

template <class Space>
BasicMultivector<Space>::BasicMultivector(int dim, Blade b, Scalar coefficient) : dim_(dim) {
  require_dim(dim);
  add_term(b, coefficient);
}

template <class Space>
Scalar BasicMultivector<Space>::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

template <class Space>
void BasicMultivector<Space>::add_term(Blade b, const Scalar& c) {
  if (b.bits >> dim_ != 0) throw ContractViolation("blade index out of range for module rank");
  if (cliffhopf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (cliffhopf::is_zero(it->second)) terms_.erase(it);
}

template <class Space>
int BasicMultivector<Space>::max_grade() const {
  int g = -1;
  for (const auto& [b, c] : terms_) g = std::max(g, b.grade());
  return g;
}

template <class Space>
bool BasicMultivector<Space>::is_homogeneous(int grade) const {
  for (const auto& [b, c] : terms_)
    if (b.grade() != grade) return false;
  return true;
}

template <class Space>
BasicMultivector<Space>& BasicMultivector<Space>::operator+=(const BasicMultivector& other) {
  if (other.dim_ != dim_) throw ContractViolation("multivector dimension mismatch");
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

template <class Space>
BasicMultivector<Space>& BasicMultivector<Space>::operator-=(const BasicMultivector& other) {
  if (other.dim_ != dim_) throw ContractViolation("multivector dimension mismatch");
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

template <class Space>
BasicMultivector<Space>& BasicMultivector<Space>::operator*=(const Scalar& s) {
  if (cliffhopf::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

template class BasicMultivector<VectorSpace>;
template class BasicMultivector<CovectorSpace>;

template <class Space>
BasicMultivector<Space> wedge(const BasicMultivector<Space>& x, const BasicMultivector<Space>& y) {
  if (x.dim() != y.dim()) throw ContractViolation("wedge: dimension mismatch");
  BasicMultivector<Space> out(x.dim());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if ((a.bits & b.bits) != 0) continue;
      Scalar c = ca * cb;
      if (wedge_inversions(a, b) % 2 != 0) c = -c;
      out.add_term(Blade{a.bits | b.bits}, c);
    }
  return out;
}

template <class Space>
BasicMultivector<Space> contract_components(const std::vector<Scalar>& alpha, const BasicMultivector<Space>& x) {
  if (alpha.size() != static_cast<std::size_t>(x.dim())) throw ContractViolation("contract: dimension mismatch");
  BasicMultivector<Space> out(x.dim());
  for (const auto& [b, c] : x.terms()) {
    int below = 0;
    for (int idx : b.indices()) {
      const Scalar& a = alpha[static_cast<std::size_t>(idx)];
      if (!is_zero(a)) {
        Scalar term = a * c;
        if (below % 2 != 0) term = -term;
        out.add_term(Blade{b.bits & ~(std::uint32_t{1} << idx)}, term);
      }
      ++below;
    }
  }
  return out;
}

template <class Space>
BasicMultivector<Space> contract(const BasicMultivector<typename DualOf<Space>::type>& alpha,
                                 const BasicMultivector<Space>& x) {
  if (alpha.dim() != x.dim()) throw ContractViolation("contract: dimension mismatch");
  if (!alpha.is_homogeneous(1)) throw ContractViolation("contract: functional must have grade 1");
  std::vector<Scalar> components(static_cast<std::size_t>(x.dim()));
  for (const auto& [b, c] : alpha.terms()) components[static_cast<std::size_t>(b.indices().front())] = c;
  return contract_components(components, x);
}

Scalar det_pairing(const DualMultivector& alpha, const Multivector& x) {
  if (alpha.dim() != x.dim()) throw ContractViolation("det_pairing: dimension mismatch");
  Scalar s = 0;
  for (const auto& [b, c] : alpha.terms()) s += c * x.coefficient(b);
  return s;
}

template <class Space>
BasicMultivector<Space> grade_project(const BasicMultivector<Space>& x, int grade) {
  BasicMultivector<Space> out(x.dim());
  for (const auto& [b, c] : x.terms())
    if (b.grade() == grade) out.add_term(b, c);
  return out;
}

namespace {
template <class Space>
std::string render(const BasicMultivector<Space>& x, const char* symbol) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [b, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += cliffhopf::to_string(c);
    if (b.bits != 0) s += std::string("*") + symbol + "{" + blade_key(b) + "}";
  }
  return s;
}
} // namespace

std::string to_string(const Multivector& x) { return render(x, "e"); }
std::string to_string(const DualMultivector& x) { return render(x, "eps"); }

template Multivector wedge(const Multivector&, const Multivector&);
template DualMultivector wedge(const DualMultivector&, const DualMultivector&);
template Multivector contract(const DualMultivector&, const Multivector&);
template DualMultivector contract(const Multivector&, const DualMultivector&);
template Multivector contract_components(const std::vector<Scalar>&, const Multivector&);
template DualMultivector contract_components(const std::vector<Scalar>&, const DualMultivector&);
template Multivector grade_project(const Multivector&, int);
template DualMultivector grade_project(const DualMultivector&, int);

} // namespace cliffhopf
