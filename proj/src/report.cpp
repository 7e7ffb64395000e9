#include "cliffhopf/report.hpp"

#include <random>

namespace cliffhopf::report {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

int int_field(const Json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) fail(where, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

bool is_complex(const CliffordStructure& s) { return s.dim() == 1; }
Scalar complex_a(const CliffordStructure& s) { return s.eta()(0, 0) * s.xi()(0, 0); }

Json conjecture_json(const ConjectureEvidence& e) {
  return {{"xi_eta_is_identity", e.xi_eta_is_identity},
          {"antipode_exists", e.antipode_exists},
          {"conjecture_consistent", e.conjecture_consistent}};
}

Json braided_json(const BraidedReport& r) {
  return {{"invertible", r.invertible},
          {"braid_equation_holds", r.braid_equation_holds},
          {"product_naturality_holds", r.product_naturality_holds},
          {"coproduct_naturality_holds", r.coproduct_naturality_holds},
          {"all_four_flags", r.all_four_flags},
          {"verdict_braided", r.verdict_braided}};
}

Json endomap_json(const EndoMap& f, int dim) {
  Json out = Json::object();
  for (auto b : all_blades(dim)) out[blade_key(b)] = io::to_json(f.apply(Multivector(dim, b)));
  return out;
}

bool solution_set_compatible(const OperatorSolutionSet& sol, const CliffordStructure& s) {
  if (!sol.consistent()) return true;
  if (!is_compatible(Scattering{*sol.particular}, s)) return false;
  for (const auto& direction : sol.nullspace_basis)
    if (!is_compatible(Scattering{*sol.particular + direction}, s)) return false;
  return true;
}

std::vector<Scattering> displayed_family_members(const Scalar& i2) {
  return {twelve_param_family_member(1, -1, 0, i2), twelve_param_family_member(2, 3, -5, i2),
          twelve_param_family_member(Scalar(1, 2), Scalar(1, 2), -1, i2)};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void flatten(const std::string& prefix, const Json& j, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, out);
    return;
  }
  std::string value;
  if (j.is_array()) {
    bool flat = j.size() <= 8;
    for (const auto& e : j) flat = flat && e.is_primitive();
    value = flat ? j.dump() : "[" + std::to_string(j.size()) + " items]";
  } else {
    value = j.dump();
  }
  out += "- `" + prefix + "`: " + value + "\n";
}

} // namespace

InstanceConfig parse_config(const std::string& text, const std::string& source_name) {
  const Json j = io::parse_text(text, source_name);
  if (!j.is_object()) fail(source_name, "top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "eta" && key != "xi" && key != "options" && key != "coproduct_table" && key != "sweep")
      fail(source_name, "unknown key \"" + key + "\"");
  if (!j.contains("n")) fail(source_name, "missing \"n\"");

  InstanceConfig c;
  c.n = int_field(j["n"], source_name + ".n", 1, kMaxRank);
  const auto size = static_cast<std::size_t>(c.n);
  if (!j.contains("eta") || !j.contains("xi")) fail(source_name, "missing \"eta\" or \"xi\"");
  c.eta = io::matrix_from_json(j["eta"], size, size, source_name + ".eta");
  c.xi = io::matrix_from_json(j["xi"], size, size, source_name + ".xi");

  if (j.contains("options")) {
    const Json& o = j["options"];
    const std::string where = source_name + ".options";
    if (!o.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "truncation") c.truncation = int_field(value, where + ".truncation", 0, 8);
      else if (key == "samples") c.samples = int_field(value, where + ".samples", 0, 100000);
      else if (key == "seed") c.seed = static_cast<std::uint64_t>(int_field(value, where + ".seed", 0, 2147483647));
      else fail(where, "unknown option \"" + key + "\"");
    }
  }

  if (j.contains("coproduct_table")) {
    const Json& t = j["coproduct_table"];
    const std::string where = source_name + ".coproduct_table";
    if (!t.is_object()) fail(where, "expected an object of blade keys");
    std::vector<Tensor2> table(std::size_t{1} << c.n, Tensor2(c.n));
    for (const auto& [key, value] : t.items()) {
      Blade b;
      try {
        b = parse_blade_key(key, c.n);
      } catch (const ParseError& e) {
        fail(where, e.what());
      }
      table[b.bits] = io::tensor_from_json(value, c.n, where + "[\"" + key + "\"]");
    }
    c.coproduct_table = std::move(table);
  }

  if (j.contains("sweep")) {
    const Json& s = j["sweep"];
    const std::string where = source_name + ".sweep";
    if (!s.is_array()) fail(where, "expected an array of [i2, j2] pairs");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string item = where + "[" + std::to_string(i) + "]";
      if (!s[i].is_array() || s[i].size() != 2) fail(item, "expected [i2, j2]");
      c.sweep_pairs.emplace_back(io::scalar_from_json(s[i][0], item + "[0]"),
                                 io::scalar_from_json(s[i][1], item + "[1]"));
    }
  }
  return c;
}

CliffordStructure complex_structure(const Scalar& i2, const Scalar& j2) {
  return CliffordStructure(1, Matrix::from_rows({{i2}}), Matrix::from_rows({{j2}}));
}

Json structure_echo(const CliffordStructure& s) {
  return {{"n", s.dim()}, {"eta", io::to_json(s.eta())}, {"xi", io::to_json(s.xi())}};
}

Json tables_section(const CliffordStructure& s) {
  Json product = Json::array();
  for (auto a : all_blades(s.dim()))
    for (auto b : all_blades(s.dim()))
      product.push_back({{"left", blade_key(a)}, {"right", blade_key(b)},
                         {"value", io::to_json(s.algebra().blade_product(a, b))}});
  Json coproduct = Json::object();
  for (auto c : all_blades(s.dim())) coproduct[blade_key(c)] = io::to_json(s.blade_coproduct(c));
  return {{"structure", structure_echo(s)}, {"product", product}, {"coproduct", coproduct}};
}

Json antipode_section(const CliffordStructure& s) {
  if (s.dim() > kMaxAntipodeRank) return {{"skipped", true}};
  const auto sol = solve_antipode(s);
  Json out = {{"consistent", sol.consistent()},
              {"unique", sol.unique()},
              {"solution_dimension", sol.dimension()},
              {"rank", sol.rank}};
  if (sol.consistent()) out["antipode"] = endomap_json(EndoMap{*sol.particular}, s.dim());
  if (is_complex(s) && complex_a(s) != 1) {
    const Scalar a = complex_a(s);
    out["closed_form"] = {{"a", io::to_json(a)},
                          {"matches", sol.unique() && EndoMap{*sol.particular} == complex_antipode_closed_form(a)}};
  }
  if (sol.consistent() && s.xi().is_zero()) {
    bool zero = true;
    const EndoMap f{*sol.particular};
    for (auto b : all_blades(s.dim()))
      if (b.grade() == 2 && !f.apply(Multivector(s.dim(), b)).is_zero()) zero = false;
    out["grade_two_restriction_zero"] = zero;
  }
  out["conjecture"] = conjecture_json(test_conjecture_antipode(s));
  return out;
}

Json sigma_section(const CliffordStructure& s) {
  if (s.dim() > kMaxSigmaRank) return {{"skipped", true}};
  const auto sol = solve_sigma(s);
  Json out = {{"consistent", sol.consistent()},
              {"unique", sol.unique()},
              {"solution_dimension", sol.dimension()},
              {"rank", sol.rank},
              {"solution_set_compatible", solution_set_compatible(sol, s)},
              {"graded_switch_compatible", is_compatible(Scattering::graded_switch(s.dim()), s)},
              {"plain_switch_compatible", is_compatible(Scattering::plain_switch(s.dim()), s)}};
  if (sol.consistent()) out["sigma"] = io::to_json(*sol.particular);
  if (is_complex(s)) {
    const Scalar i2 = s.eta()(0, 0), j2 = s.xi()(0, 0), a = complex_a(s);
    if (a != 1) {
      const Scattering closed = closed_form_sigma(i2, j2);
      out["closed_form"] = {{"a", io::to_json(a)},
                            {"matches", sol.unique() && *sol.particular == closed.matrix},
                            {"min_polynomial", check_min_polynomial(closed, a)},
                            {"invertible", is_invertible(closed.matrix)},
                            {"braid_equation", check_braid_equation(closed).holds}};
    } else {
      bool members = true;
      for (const auto& m : displayed_family_members(i2)) members = members && is_compatible(m, s);
      out["family_members_compatible"] = members;
    }
  }
  return out;
}

Json braided_section(const CliffordStructure& s) {
  if (s.dim() > kMaxSigmaRank) return {{"skipped", true}};
  const auto sol = solve_sigma(s);
  Json out = {{"sigma_exists", sol.consistent()},
              {"sigma_unique", sol.unique()},
              {"eta_zero", s.eta().is_zero()},
              {"xi_zero", s.xi().is_zero()}};
  if (sol.consistent()) out["flags"] = braided_json(check_braided(s, Scattering{*sol.particular}));
  return out;
}

Json shuffle_section(const CliffordStructure& s, int bound) {
  const int n = s.dim();
  if (n > kMaxShuffleRank) return {{"skipped", true}};
  const auto laws = check_word_algebra_laws(n, bound);
  std::vector<Multivector> inclusion;
  for (int mu = 0; mu < n; ++mu) inclusion.push_back(Multivector::basis_vector(n, mu));
  const auto zero = zero_braid_bigebra_check(n, bound);
  const auto with_switch = zero_braid_bigebra_check(n, bound, letter_switch(n));
  Matrix negative = letter_switch(n);
  negative *= -1;

  Json witnesses = Json::array();
  for (const auto& [u, v] : zero.witnesses) witnesses.push_back(Json::array({io::to_json(u), io::to_json(v)}));

  Json out = {
      {"bound", bound},
      {"word_laws",
       {{"concat_associative", laws.concat_associative},
        {"shuffle_associative", laws.shuffle_associative},
        {"deconcat_coassociative", laws.deconcat_coassociative},
        {"unshuffle_coassociative", laws.unshuffle_coassociative},
        {"unital", laws.unital},
        {"counital", laws.counital}}},
      {"concat_deconcat_duality", check_pairing_duality(n, bound, WordProduct::concat, WordCoproduct::deconcat)},
      {"shuffle_unshuffle_duality",
       check_pairing_duality(n, bound, WordProduct::shuffle, WordCoproduct::unshuffle)},
      {"concat_unshuffle_pairing", check_pairing_duality(n, bound, WordProduct::concat, WordCoproduct::unshuffle)},
      {"shuffle_deconcat_pairing", check_pairing_duality(n, bound, WordProduct::shuffle, WordCoproduct::deconcat)},
      {"universal_lift_multiplicative",
       check_universal_lift_multiplicative(universal_lift(inclusion, s), n, bound)},
      {"couniversal_lift_comultiplicative",
       check_couniversal_lift_comultiplicative(couniversal_lift(grade_one_projection(n), s, bound), s)},
      {"zero_braid_bigebra", {{"holds", zero.holds}, {"witnesses", witnesses}}},
      {"switch_bigebra", {{"holds", with_switch.holds}, {"witness_count", with_switch.witnesses.size()}}},
      {"antisymmetrizer_ranks", exterior_image_dimensions(negative, n, bound)},
      {"symmetrizer_ranks", exterior_image_dimensions(letter_switch(n), n, bound)},
      {"reduced_words_agree", reduced_words_agree(negative, n) && reduced_words_agree(letter_switch(n), n)}};
  if (n == 1) {
    const int l = std::min(bound, 3);
    const auto h = hopf_homomorphism_checks(-1, l);
    out["hopf_homomorphism"] = {{"bound", l},
                                {"deformation_of_identity", h.deformation_of_identity},
                                {"commutes_with_antipode", h.commutes_with_antipode},
                                {"zero_braid_antipode_matches", h.zero_braid_antipode_matches}};
  }
  return out;
}

VerifyOutcome verify(const InstanceConfig& config) {
  const CliffordStructure s(config.n, config.eta, config.xi);
  VerifyOutcome v;
  Json hard = Json::object();
  auto check = [&](const std::string& name, bool ok) {
    hard[name] = ok;
    if (!ok) v.hard_failures.push_back(name);
  };

  if (s.dim() <= kMaxAntipodeRank) {
    check("associativity",
          !s.algebra().find_associativity_failure() && !s.dual_algebra().find_associativity_failure());
    check("coassociativity", !find_coassociativity_failure(s));
    check("counit_law", !find_counit_law_failure(s));
    check("duality", !find_duality_failure(s));
  }
  check("counit_is_algebra_map_iff_eta_zero", check_counit_is_algebra_map(s).holds == s.eta().is_zero());
  check("unit_is_cogebra_map_iff_xi_zero", check_unit_is_cogebra_map(s).holds == s.xi().is_zero());
  if (config.coproduct_table) {
    bool same = true;
    for (auto b : all_blades(s.dim())) same = same && (*config.coproduct_table)[b.bits] == s.blade_coproduct(b);
    check("coproduct_table_cache", same);
  }

  const Json antipode = antipode_section(s);
  if (!antipode.contains("skipped")) {
    check("antipode_unique_when_exists", !antipode["consistent"].get<bool>() || antipode["unique"].get<bool>());
    if (antipode.contains("closed_form")) check("antipode_closed_form", antipode["closed_form"]["matches"].get<bool>());
    if (is_complex(s) && complex_a(s) == 1) check("antipode_absent_at_a_one", !antipode["consistent"].get<bool>());
  }

  const Json sigma = sigma_section(s);
  const Json braided = braided_section(s);
  if (!sigma.contains("skipped")) {
    check("sigma_solution_set_compatible", sigma["solution_set_compatible"].get<bool>());
    if (sigma.contains("closed_form")) {
      const Json& cf = sigma["closed_form"];
      check("sigma_closed_form", cf["matches"].get<bool>());
      check("sigma_min_polynomial", cf["min_polynomial"].get<bool>());
      check("sigma_invertible_iff_a_not_minus_one", cf["invertible"].get<bool>() == (complex_a(s) != -1));
      if (complex_a(s) == 0) check("sigma_braid_equation_at_a_zero", cf["braid_equation"].get<bool>());
    }
    if (sigma.contains("family_members_compatible")) {
      check("sigma_dimension_twelve", sigma["solution_dimension"].get<std::size_t>() == 12);
      check("sigma_family_members", sigma["family_members_compatible"].get<bool>());
    }
    if ((s.eta().is_zero() || s.xi().is_zero()) && braided.contains("flags"))
      check("braided_when_a_form_vanishes", braided["flags"]["verdict_braided"].get<bool>());
  }

  const Json shuffle = shuffle_section(s, config.truncation);
  if (!shuffle.contains("skipped")) {
    bool laws = true;
    for (const auto& [k, val] : shuffle["word_laws"].items()) laws = laws && val.get<bool>();
    check("word_laws", laws);
    check("concat_deconcat_duality", shuffle["concat_deconcat_duality"].get<bool>());
    check("shuffle_unshuffle_duality", shuffle["shuffle_unshuffle_duality"].get<bool>());
    check("universal_lift_multiplicative", shuffle["universal_lift_multiplicative"].get<bool>());
    check("couniversal_lift_comultiplicative", shuffle["couniversal_lift_comultiplicative"].get<bool>());
    check("reduced_words_agree", shuffle["reduced_words_agree"].get<bool>());
    bool ranks = true;
    const auto dims = shuffle["antisymmetrizer_ranks"].get<std::vector<std::uint64_t>>();
    for (std::size_t k = 0; k < dims.size(); ++k) ranks = ranks && dims[k] == binomial(s.dim(), static_cast<int>(k));
    check("antisymmetrizer_ranks_binomial", ranks);
  }

  Json recorded = Json::object();
  if (antipode.contains("conjecture")) recorded["conjecture"] = antipode["conjecture"];
  if (antipode.contains("grade_two_restriction_zero"))
    recorded["xi_zero_antipode_grade_two_zero"] = antipode["grade_two_restriction_zero"];
  if (braided.contains("flags")) {
    recorded["braided_verdict"] = braided["flags"]["verdict_braided"];
    recorded["all_four_flags"] = braided["flags"]["all_four_flags"];
  }
  if (!shuffle.contains("skipped")) {
    recorded["zero_braid_bigebra"] = shuffle["zero_braid_bigebra"]["holds"];
    recorded["switch_bigebra"] = shuffle["switch_bigebra"]["holds"];
    recorded["concat_unshuffle_pairing"] = shuffle["concat_unshuffle_pairing"];
    recorded["shuffle_deconcat_pairing"] = shuffle["shuffle_deconcat_pairing"];
    if (shuffle.contains("hopf_homomorphism")) recorded["hopf_homomorphism"] = shuffle["hopf_homomorphism"];
  }

  v.report = {{"structure", structure_echo(s)},
              {"coproduct_table", tables_section(s)["coproduct"]},
              {"antipode", antipode},
              {"sigma", sigma},
              {"braided", braided},
              {"shuffle", shuffle},
              {"hard_checks", hard},
              {"recorded", recorded},
              {"hard_failures", v.hard_failures},
              {"passed", v.passed()}};
  return v;
}

Scalar rational_from_bits(std::uint64_t bits) {
  const auto num = static_cast<long>(bits % 7) - 3;
  const auto den = static_cast<long>((bits >> 8) % 3) + 1;
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Json pair_row(const Scalar& i2, const Scalar& j2) {
  const CliffordStructure s = complex_structure(i2, j2);
  const Scalar a = i2 * j2;
  const auto antipode = solve_antipode(s);
  const auto sigma = solve_sigma(s);
  Json row = {{"kind", "pair"},
              {"i2", io::to_json(i2)},
              {"j2", io::to_json(j2)},
              {"a", io::to_json(a)},
              {"antipode_exists", antipode.consistent()},
              {"sigma_dimension", sigma.dimension()},
              {"sigma_unique", sigma.unique()},
              {"conjecture", conjecture_json(test_conjecture_antipode(s))}};
  if (a != 1) {
    const Scattering closed = closed_form_sigma(i2, j2);
    row["antipode_closed_form_match"] =
        antipode.unique() && EndoMap{*antipode.particular} == complex_antipode_closed_form(a);
    row["sigma_closed_form_match"] = sigma.unique() && *sigma.particular == closed.matrix;
    row["braid_equation"] = check_braid_equation(closed).holds;
    row["min_polynomial"] = check_min_polynomial(closed, a);
  }
  if (sigma.consistent()) row["braided_verdict"] = check_braided(s, Scattering{*sigma.particular}).verdict_braided;
  if (!antipode.consistent())
    row["note"] = "no antipode, sigma-space dim " + std::to_string(sigma.dimension());
  return row;
}

Json random_row(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  const int n = 1 + static_cast<int>(rng() % 2);
  const auto size = static_cast<std::size_t>(n);
  const bool inverse_pair = index % 2 == 0;
  auto draw = [&] {
    Matrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) m(r, c) = rational_from_bits(rng());
    return m;
  };
  Matrix eta = draw(), xi;
  if (inverse_pair) {
    auto inv = invert(eta);
    while (inv.singular()) {
      eta = draw();
      inv = invert(eta);
    }
    xi = *inv.inverse;
  } else {
    xi = draw();
  }
  const CliffordStructure s(n, eta, xi);
  return {{"kind", "random"},
          {"index", index},
          {"n", n},
          {"eta", io::to_json(eta)},
          {"xi", io::to_json(xi)},
          {"xi_is_eta_inverse", inverse_pair},
          {"conjecture", conjecture_json(test_conjecture_antipode(s))}};
}

} // namespace

Json sweep(const SweepRequest& request) {
  const auto pairs = static_cast<std::ptrdiff_t>(request.pairs.size());
  const auto total = pairs + request.random_samples;
  std::vector<Json> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, request.jobs)) if (request.jobs > 1)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    rows[static_cast<std::size_t>(i)] =
        i < pairs ? pair_row(request.pairs[static_cast<std::size_t>(i)].first,
                             request.pairs[static_cast<std::size_t>(i)].second)
                  : random_row(request.seed, static_cast<int>(i - pairs));
  }

  std::size_t consistent = 0, braid_holds = 0, braid_samples = 0, compared = 0, antipode_matches = 0,
              sigma_matches = 0;
  for (const auto& r : rows) {
    if (r["conjecture"]["conjecture_consistent"].get<bool>()) ++consistent;
    if (r.contains("braid_equation")) {
      ++braid_samples;
      if (r["braid_equation"].get<bool>()) ++braid_holds;
    }
    if (r.contains("antipode_closed_form_match")) {
      ++compared;
      if (r["antipode_closed_form_match"].get<bool>()) ++antipode_matches;
      if (r["sigma_closed_form_match"].get<bool>()) ++sigma_matches;
    }
  }
  const Json aggregate = {
      {"rows", rows.size()},
      {"pairs", pairs},
      {"random", request.random_samples},
      {"seed", request.seed},
      {"conjecture", {{"instances", rows.size()}, {"consistent", consistent}, {"inconsistent", rows.size() - consistent}}},
      {"braid_equation", {{"samples", braid_samples}, {"holds", braid_holds}, {"fails", braid_samples - braid_holds}}},
      {"closed_form", {{"compared", compared}, {"antipode_matches", antipode_matches}, {"sigma_matches", sigma_matches}}}};
  return {{"rows", rows}, {"aggregate", aggregate}};
}

std::string markdown(const std::string& title, const Json& report) {
  std::string out = "# " + title + "\n\n";
  flatten("", report, out);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cliffhopf::report
