#include "cliffhopf/tensor_shuffle.hpp"

#include "cliffhopf/braiding.hpp"
#include "cliffhopf/linalg.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cliffhopf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

void require_word(const Word& w, int dim) {
  for (int letter : w) require(letter >= 0 && letter < dim, "word letter out of range");
}

std::size_t power(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// All interleavings of a and b, each with multiplicity one.
void riffle(const Word& a, const Word& b, std::size_t i, std::size_t j, Word& prefix, std::vector<Word>& out) {
  if (i == a.size() && j == b.size()) {
    out.push_back(prefix);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    riffle(a, b, i + 1, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    riffle(a, b, i, j + 1, prefix, out);
    prefix.pop_back();
  }
}

using SparseWords = std::map<Word, Scalar>;

void accumulate(SparseWords& m, const Word& w, const Scalar& c) {
  if (cliffhopf::is_zero(c)) return;
  auto [it, inserted] = m.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (cliffhopf::is_zero(it->second)) m.erase(it);
}

// σ on letters (pos, pos + 1), 0-based.
SparseWords apply_crossing(const SparseWords& in, const Matrix& sigma, int dim, std::size_t pos) {
  const auto n = static_cast<std::size_t>(dim);
  SparseWords out;
  for (const auto& [w, c] : in) {
    const std::size_t input = static_cast<std::size_t>(w[pos]) * n + static_cast<std::size_t>(w[pos + 1]);
    for (std::size_t r = 0; r < n * n; ++r) {
      const Scalar& entry = sigma(r, input);
      if (cliffhopf::is_zero(entry)) continue;
      Word image = w;
      image[pos] = static_cast<int>(r / n);
      image[pos + 1] = static_cast<int>(r % n);
      accumulate(out, image, c * entry);
    }
  }
  return out;
}

void require_letter_sigma(const Matrix& sigma, int dim) {
  const auto n = static_cast<std::size_t>(dim);
  require(sigma.rows() == n * n && sigma.cols() == n * n, "letter σ must be n² × n²");
}

} // namespace

GradedElement::GradedElement(int dim, int bound) : dim_(dim), bound_(bound) {
  require(dim >= 1, "word space needs at least one letter");
  require(bound >= 0, "truncation bound must be nonnegative");
}

GradedElement GradedElement::word(int dim, int bound, Word w, const Scalar& c) {
  GradedElement x(dim, bound);
  x.add_term(w, c);
  return x;
}

Scalar GradedElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void GradedElement::add_term(const Word& w, const Scalar& c) {
  require_word(w, dim_);
  if (cliffhopf::is_zero(c)) return;
  if (static_cast<int>(w.size()) > bound_) {
    truncated_ = true;
    return;
  }
  accumulate(terms_, w, c);
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  require(other.dim_ == dim_, "word space dimension mismatch");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
  require(other.dim_ == dim_, "word space dimension mismatch");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

GradedElement& GradedElement::operator*=(const Scalar& s) {
  if (cliffhopf::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

WordTensor::WordTensor(int dim, int bound) : dim_(dim), bound_(bound) {
  require(dim >= 1, "word space needs at least one letter");
}

WordTensor WordTensor::simple(const GradedElement& x, const GradedElement& y) {
  require(x.dim() == y.dim(), "word space dimension mismatch");
  WordTensor t(x.dim(), std::max(x.bound(), y.bound()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) t.add_term(a, b, ca * cb);
  return t;
}

Scalar WordTensor::coefficient(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void WordTensor::add_term(const Word& a, const Word& b, const Scalar& c) {
  if (cliffhopf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (cliffhopf::is_zero(it->second)) terms_.erase(it);
}

WordTensor& WordTensor::operator+=(const WordTensor& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

WordTensor& WordTensor::operator-=(const WordTensor& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string to_string(const GradedElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += cliffhopf::to_string(c) + "*" + to_string(w);
  }
  return s;
}

GradedElement concat_product(const GradedElement& x, const GradedElement& y) {
  require(x.dim() == y.dim(), "concat_product: dimension mismatch");
  GradedElement out(x.dim(), std::min(x.bound(), y.bound()));
  if (x.truncated() || y.truncated()) out.mark_truncated();
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term(concat(a, b), ca * cb);
  return out;
}

WordTensor deconcat_coproduct(const GradedElement& x) {
  WordTensor out(x.dim(), x.bound());
  for (const auto& [w, c] : x.terms())
    for (std::size_t split = 0; split <= w.size(); ++split)
      out.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)),
                   Word(w.begin() + static_cast<std::ptrdiff_t>(split), w.end()), c);
  return out;
}

GradedElement shuffle_product(const GradedElement& x, const GradedElement& y) {
  require(x.dim() == y.dim(), "shuffle_product: dimension mismatch");
  GradedElement out(x.dim(), std::min(x.bound(), y.bound()));
  if (x.truncated() || y.truncated()) out.mark_truncated();
  std::vector<Word> interleavings;
  Word prefix;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (static_cast<int>(a.size() + b.size()) > out.bound()) {
        out.mark_truncated();
        continue;
      }
      interleavings.clear();
      riffle(a, b, 0, 0, prefix, interleavings);
      const Scalar c = ca * cb;
      for (const auto& w : interleavings) out.add_term(w, c);
    }
  return out;
}

WordTensor unshuffle_coproduct(const GradedElement& x) {
  WordTensor out(x.dim(), x.bound());
  for (const auto& [w, c] : x.terms()) {
    const std::uint32_t subsets = std::uint32_t{1} << w.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Word left, right;
      for (std::size_t i = 0; i < w.size(); ++i) ((mask >> i) & 1U ? left : right).push_back(w[i]);
      out.add_term(left, right, c);
    }
  }
  return out;
}

Scalar word_counit(const GradedElement& x) { return x.coefficient(Word{}); }

Scalar word_pairing(const GradedElement& alpha, const GradedElement& x) {
  require(alpha.dim() == x.dim(), "word_pairing: dimension mismatch");
  Scalar s = 0;
  for (const auto& [w, c] : alpha.terms()) s += c * x.coefficient(w);
  return s;
}

Scalar word_pairing(const WordTensor& alpha, const WordTensor& x) {
  require(alpha.dim() == x.dim(), "word_pairing: dimension mismatch");
  Scalar s = 0;
  for (const auto& [k, c] : alpha.terms()) s += c * x.coefficient(k.first, k.second);
  return s;
}

bool WordLawReport::all() const {
  return concat_associative && shuffle_associative && deconcat_coassociative && unshuffle_coassociative &&
         unital && counital;
}

namespace {

using WordTriple = std::map<std::array<Word, 3>, Scalar>;

void add_word_triple(WordTriple& t, const std::array<Word, 3>& key, const Scalar& c) {
  Scalar& slot = t[key];
  slot += c;
  if (cliffhopf::is_zero(slot)) t.erase(key);
}

WordTriple split_left(const WordTensor& t, WordTensor (*cop)(const GradedElement&)) {
  WordTriple out;
  for (const auto& [k, c] : t.terms()) {
    const WordTensor inner = cop(GradedElement::word(t.dim(), t.bound(), k.first));
    for (const auto& [k1, c1] : inner.terms()) add_word_triple(out, {k1.first, k1.second, k.second}, c * c1);
  }
  return out;
}

WordTriple split_right(const WordTensor& t, WordTensor (*cop)(const GradedElement&)) {
  WordTriple out;
  for (const auto& [k, c] : t.terms()) {
    const WordTensor inner = cop(GradedElement::word(t.dim(), t.bound(), k.second));
    for (const auto& [k2, c2] : inner.terms()) add_word_triple(out, {k.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

bool coassociative(const GradedElement& x, WordTensor (*cop)(const GradedElement&)) {
  const WordTensor once = cop(x);
  return split_left(once, cop) == split_right(once, cop);
}

bool counital(const GradedElement& x, WordTensor (*cop)(const GradedElement&)) {
  GradedElement left(x.dim(), x.bound()), right(x.dim(), x.bound());
  const WordTensor split = cop(x);
  for (const auto& [k, c] : split.terms()) {
    if (k.first.empty()) left.add_term(k.second, c);
    if (k.second.empty()) right.add_term(k.first, c);
  }
  return left == x && right == x;
}

template <class Product>
bool dual_to(int dim, int bound, Product product, WordTensor (*cop)(const GradedElement&)) {
  const auto words = all_words(dim, bound);
  for (const auto& x : words) {
    const WordTensor split = cop(GradedElement::word(dim, bound, x));
    for (const auto& a : words)
      for (const auto& b : words) {
        if (a.size() + b.size() != x.size()) continue;
        const GradedElement ab = product(GradedElement::word(dim, bound, a), GradedElement::word(dim, bound, b));
        if (word_pairing(ab, GradedElement::word(dim, bound, x)) != split.coefficient(a, b)) return false;
      }
  }
  return true;
}

} // namespace

WordLawReport check_word_algebra_laws(int dim, int bound) {
  WordLawReport r;
  const auto words = all_words(dim, bound);
  const auto unit = GradedElement::word(dim, bound, Word{});
  for (const auto& u : words) {
    const auto eu = GradedElement::word(dim, bound, u);
    r.unital = r.unital && concat_product(unit, eu) == eu && concat_product(eu, unit) == eu &&
               shuffle_product(unit, eu) == eu && shuffle_product(eu, unit) == eu;
    r.counital = r.counital && counital(eu, deconcat_coproduct) && counital(eu, unshuffle_coproduct);
    r.deconcat_coassociative = r.deconcat_coassociative && coassociative(eu, deconcat_coproduct);
    r.unshuffle_coassociative = r.unshuffle_coassociative && coassociative(eu, unshuffle_coproduct);
    for (const auto& v : words)
      for (const auto& w : words) {
        if (static_cast<int>(u.size() + v.size() + w.size()) > bound) continue;
        const auto ev = GradedElement::word(dim, bound, v);
        const auto ew = GradedElement::word(dim, bound, w);
        r.concat_associative = r.concat_associative && concat_product(concat_product(eu, ev), ew) ==
                                                           concat_product(eu, concat_product(ev, ew));
        r.shuffle_associative = r.shuffle_associative && shuffle_product(shuffle_product(eu, ev), ew) ==
                                                             shuffle_product(eu, shuffle_product(ev, ew));
      }
  }
  return r;
}

bool check_pairing_duality(int dim, int bound, WordProduct product, WordCoproduct coproduct) {
  auto* cop = coproduct == WordCoproduct::deconcat ? deconcat_coproduct : unshuffle_coproduct;
  return product == WordProduct::concat ? dual_to(dim, bound, concat_product, cop)
                                        : dual_to(dim, bound, shuffle_product, cop);
}

std::vector<Word> words_of_length(int dim, int length) {
  require(dim >= 1 && length >= 0, "words_of_length: invalid arguments");
  const std::size_t count = power(static_cast<std::size_t>(dim), length);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Word w(static_cast<std::size_t>(length));
    std::size_t rest = idx;
    for (int pos = length - 1; pos >= 0; --pos) {
      w[static_cast<std::size_t>(pos)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> all_words(int dim, int bound) {
  std::vector<Word> out;
  for (int k = 0; k <= bound; ++k) {
    auto layer = words_of_length(dim, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::size_t word_index(const Word& w, int dim) {
  std::size_t idx = 0;
  for (int letter : w) idx = idx * static_cast<std::size_t>(dim) + static_cast<std::size_t>(letter);
  return idx;
}

UniversalLift::UniversalLift(std::vector<Multivector> images, const CliffordStructure& target)
    : images_(std::move(images)), target_(&target) {
  for (const auto& img : images_) require(img.dim() == target.dim(), "universal_lift: image dimension mismatch");
}

Multivector UniversalLift::operator()(const Word& w) const {
  Multivector out = Multivector::scalar(target_->dim(), 1);
  for (int letter : w) {
    require(letter >= 0 && static_cast<std::size_t>(letter) < images_.size(), "universal_lift: letter out of range");
    out = target_->product(out, images_[static_cast<std::size_t>(letter)]);
  }
  return out;
}

Multivector UniversalLift::operator()(const GradedElement& x) const {
  Multivector out(target_->dim());
  for (const auto& [w, c] : x.terms()) {
    Multivector term = (*this)(w);
    term *= c;
    out += term;
  }
  return out;
}

bool check_couniversal_lift_comultiplicative(const CouniversalLift& lift, const CliffordStructure& source) {
  const int n = source.dim();
  const int bound = lift.bound();
  for (auto c : all_blades(n)) {
    const GradedElement image = lift(Multivector(n, c));
    WordTensor rhs = deconcat_coproduct(image);
    WordTensor lhs(n, bound);
    for (const auto& [k, coeff] : source.blade_coproduct(c).terms()) {
      const GradedElement left = lift(Multivector(n, k.first));
      const GradedElement right = lift(Multivector(n, k.second));
      for (const auto& [a, ca] : left.terms())
        for (const auto& [b, cb] : right.terms())
          if (static_cast<int>(a.size() + b.size()) <= bound) lhs.add_term(a, b, coeff * ca * cb);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

UniversalLift universal_lift(std::vector<Multivector> images, const CliffordStructure& target) {
  return UniversalLift(std::move(images), target);
}

bool check_universal_lift_multiplicative(const UniversalLift& lift, int dim, int bound) {
  const auto words = all_words(dim, bound);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (static_cast<int>(u.size() + v.size()) > bound) continue;
      const Multivector lhs = lift(concat(u, v));
      const Multivector lu = lift(u), lv = lift(v);
      if (lhs != lift.target().product(lu, lv)) return false;
    }
  return true;
}

CouniversalLift::CouniversalLift(Matrix ell, const CliffordStructure& source, int bound)
    : ell_(std::move(ell)), source_(&source), bound_(bound) {
  require(ell_.rows() == static_cast<std::size_t>(source.dim()) && ell_.cols() == source.blade_count(),
          "couniversal_lift: ℓ must be n × 2^n");
  require(bound >= 0, "couniversal_lift: negative truncation bound");
}

GradedElement CouniversalLift::operator()(const Multivector& x) const {
  require(x.dim() == source_->dim(), "couniversal_lift: dimension mismatch");
  const int n = source_->dim();
  GradedElement out(n, bound_);
  out.add_term(Word{}, counit(x));

  auto column_nonzero = [&](Blade b) {
    for (std::size_t mu = 0; mu < ell_.rows(); ++mu)
      if (!cliffhopf::is_zero(ell_(mu, b.bits))) return true;
    return false;
  };

  // k-fold tensors of blades, from △^{(k−1)} x
  std::map<std::vector<Blade>, Scalar> layer;
  for (const auto& [b, c] : x.terms()) layer[{b}] = c;

  // one layer past the bound so that dropped words set the truncation flag
  for (int k = 1; k <= bound_ + 1 && !layer.empty(); ++k) {
    for (const auto& [tuple, c] : layer) {
      SparseWords words{{Word{}, c}};
      for (Blade b : tuple) {
        SparseWords next;
        for (const auto& [w, cw] : words)
          for (std::size_t mu = 0; mu < ell_.rows(); ++mu) {
            const Scalar& e = ell_(mu, b.bits);
            if (cliffhopf::is_zero(e)) continue;
            Word longer = w;
            longer.push_back(static_cast<int>(mu));
            accumulate(next, longer, cw * e);
          }
        words = std::move(next);
      }
      for (const auto& [w, cw] : words) out.add_term(w, cw);
    }
    std::map<std::vector<Blade>, Scalar> split;
    for (const auto& [tuple, c] : layer) {
      const Tensor2& d = source_->blade_coproduct(tuple.back());
      for (const auto& [key, cd] : d.terms()) {
        if (!column_nonzero(key.first)) continue;
        std::vector<Blade> longer(tuple.begin(), tuple.end() - 1);
        longer.push_back(key.first);
        longer.push_back(key.second);
        Scalar& slot = split[longer];
        slot += c * cd;
        if (cliffhopf::is_zero(slot)) split.erase(longer);
      }
    }
    layer = std::move(split);
  }
  return out;
}

CouniversalLift couniversal_lift(Matrix ell, const CliffordStructure& source, int bound) {
  return CouniversalLift(std::move(ell), source, bound);
}

Matrix grade_one_projection(int dim) {
  require_dim(dim);
  Matrix m(static_cast<std::size_t>(dim), std::size_t{1} << dim);
  for (int mu = 0; mu < dim; ++mu) m(static_cast<std::size_t>(mu), std::size_t{1} << mu) = 1;
  return m;
}

std::vector<Matrix> braid_lift(const Matrix& letter_sigma, int dim, int length) {
  require_letter_sigma(letter_sigma, dim);
  require(length >= 0, "braid_lift: negative length");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<Matrix> out;
  for (int i = 1; i < length; ++i)
    out.push_back(kron(kron(Matrix::identity(power(n, i - 1)), letter_sigma), Matrix::identity(power(n, length - i - 1))));
  return out;
}

std::vector<int> reduced_word(const std::vector<int>& permutation) {
  std::vector<int> p = permutation, word;
  for (std::size_t pass = 0; pass < p.size(); ++pass)
    for (std::size_t i = 0; i + 1 < p.size() - pass; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
      }
  return word;
}

Matrix lift_word(const std::vector<Matrix>& generators, const std::vector<int>& indices, std::size_t size) {
  Matrix out = Matrix::identity(size);
  for (int i : indices) {
    require(i >= 1 && static_cast<std::size_t>(i) <= generators.size(), "lift_word: generator index out of range");
    out = out * generators[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

Matrix quantum_symmetrizer(const Matrix& letter_sigma, int dim, int length) {
  require_letter_sigma(letter_sigma, dim);
  require(check_braid_equation(letter_sigma, static_cast<std::size_t>(dim)).holds,
          "quantum_symmetrizer: σ does not satisfy the braid equation");
  const std::size_t size = power(static_cast<std::size_t>(dim), length);
  if (length <= 1) return Matrix::identity(size);
  const auto generators = braid_lift(letter_sigma, dim, length);
  std::vector<int> perm(static_cast<std::size_t>(length));
  std::iota(perm.begin(), perm.end(), 0);
  Matrix sum(size, size);
  do {
    sum += lift_word(generators, reduced_word(perm), size);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool reduced_words_agree(const Matrix& letter_sigma, int dim) {
  const auto generators = braid_lift(letter_sigma, dim, 3);
  const std::size_t size = power(static_cast<std::size_t>(dim), 3);
  return lift_word(generators, {1, 2, 1}, size) == lift_word(generators, {2, 1, 2}, size);
}

std::vector<std::size_t> exterior_image_dimensions(const Matrix& letter_sigma, int dim, int up_to) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= up_to; ++k) out.push_back(rank(quantum_symmetrizer(letter_sigma, dim, k)));
  return out;
}

WordTensor block_crossing(const Word& x, const Word& y, const Matrix& letter_sigma, int dim, int bound) {
  require_letter_sigma(letter_sigma, dim);
  require_word(x, dim);
  require_word(y, dim);
  const std::size_t p = x.size(), q = y.size();
  SparseWords state{{concat(x, y), Scalar(1)}};
  for (std::size_t j = 0; j < q && !state.empty(); ++j)
    for (std::size_t pos = p + j; pos-- > j;) state = apply_crossing(state, letter_sigma, dim, pos);
  WordTensor out(dim, bound);
  for (const auto& [w, c] : state)
    out.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q)),
                 Word(w.begin() + static_cast<std::ptrdiff_t>(q), w.end()), c);
  return out;
}

ZeroBraidCheck zero_braid_bigebra_check(int dim, int bound) {
  return zero_braid_bigebra_check(dim, bound, Matrix(static_cast<std::size_t>(dim * dim), static_cast<std::size_t>(dim * dim)));
}

ZeroBraidCheck zero_braid_bigebra_check(int dim, int bound, const Matrix& letter_sigma) {
  require_letter_sigma(letter_sigma, dim);
  ZeroBraidCheck result;
  const auto words = all_words(dim, bound);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (static_cast<int>(u.size() + v.size()) > bound) continue;
      WordTensor defect = deconcat_coproduct(GradedElement::word(dim, bound, concat(u, v)));
      const WordTensor split_u = deconcat_coproduct(GradedElement::word(dim, bound, u));
      const WordTensor split_v = deconcat_coproduct(GradedElement::word(dim, bound, v));
      for (const auto& [ku, cu] : split_u.terms())
        for (const auto& [kv, cv] : split_v.terms()) {
          const WordTensor crossed = block_crossing(ku.second, kv.first, letter_sigma, dim, bound);
          for (const auto& [kc, cc] : crossed.terms())
            defect.add_term(concat(ku.first, kc.first), concat(kc.second, kv.second), -(cu * cv * cc));
        }
      if (!defect.is_zero()) {
        result.holds = false;
        result.witnesses.emplace_back(u, v);
      }
    }
  return result;
}

Matrix letter_switch(int dim) {
  const auto n = static_cast<std::size_t>(dim);
  Matrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(b * n + a, a * n + b) = 1;
  return m;
}

HopfHomomorphismRecord hopf_homomorphism_checks(const Scalar& q, int bound) {
  HopfHomomorphismRecord r;
  const Matrix zero(1, 1);
  const Matrix sigma = Matrix::from_rows({{q}});

  r.deformation_of_identity = true;
  for (int k = 0; k <= bound; ++k)
    if (!(quantum_symmetrizer(zero, 1, k) == Matrix::identity(1))) r.deformation_of_identity = false;

  r.commutes_with_antipode = true;
  for (int k = 0; k <= bound; ++k) {
    std::vector<int> longest(static_cast<std::size_t>(k));
    std::iota(longest.rbegin(), longest.rend(), 0);
    Matrix antipode = lift_word(braid_lift(sigma, 1, k), reduced_word(longest), 1);
    if (k % 2 != 0) antipode *= -1;
    const Matrix sym = quantum_symmetrizer(sigma, 1, k);
    if (!(sym * antipode == antipode * sym)) r.commutes_with_antipode = false;
  }

  // S(w) = −Σ_{w = a b, b ≠ ()} S(a) b for concatenation/deconcatenation
  std::map<Word, GradedElement> antipode;
  r.zero_braid_antipode_matches = true;
  for (const auto& w : all_words(1, bound)) {
    GradedElement s(1, bound);
    if (w.empty()) {
      s.add_term(w, 1);
    } else {
      for (std::size_t split = 0; split < w.size(); ++split) {
        const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
        const Word tail(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
        s -= concat_product(antipode.at(head), GradedElement::word(1, bound, tail));
      }
    }
    GradedElement expected(1, bound);
    if (w.size() <= 1) expected.add_term(w, w.empty() ? 1 : -1);
    if (!(s == expected)) r.zero_braid_antipode_matches = false;
    antipode.emplace(w, std::move(s));
  }
  return r;
}

} // namespace cliffhopf
