#include "nalg/variety.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace nalg {

namespace {

struct PresetSpec {
  const char* key;
  const char* name;
  std::vector<const char*> polys;
};

const std::vector<PresetSpec>& presets() {
  static const std::vector<PresetSpec> table = {
      {"lie", "Lie", {"xx", "x(yz) + z(xy) + y(zx)"}},
      {"qlie", "qLie", {"xy + yx", "x(yz) + z(xy) + y(zx)"}},
      {"assoc", "Assoc", {"x(yz) - (xy)z"}},
      {"comm", "Comm", {"xy - yx"}},
      {"abelian", "Abelian", {"xy"}},
      {"alternating", "Alternating", {"xx"}},
      {"anticomm", "AntiComm", {"xy + yx"}},
      {"leibniz", "Leibniz", {"(xy)z - x(yz) - (xz)y"}},
      {"jordan", "Jordan", {"xy - yx", "(xy)(xx) - x(y(xx))"}},
      {"jacobijordan", "JacobiJordan", {"xy - yx", "x(yz) + z(xy) + y(zx)"}},
      {"alternative", "Alternative", {"x(xy) - (xx)y", "(yx)x - y(xx)"}},
      {"antiassoc", "AntiAssoc", {"x(yz) + (xy)z"}},
      {"alg", "Alg", {}},
  };
  return table;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

// Element number `index` of GF(p)^dim: base-p digits, first coordinate least significant.
Vec element_from_index(const Field& f, std::size_t dim, std::uint64_t index) {
  const std::uint64_t p = f.characteristic();
  Vec v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v.emplace_back(f, static_cast<long long>(index % p));
    index /= p;
  }
  return v;
}

TMonomial multiply_monomials(const TMonomial& a, const TMonomial& b) {
  TMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

class GenericEvaluator {
 public:
  GenericEvaluator(const Algebra& a, const std::vector<std::string>& vars) : a_(a) {
    for (std::size_t k = 0; k < vars.size(); ++k) index_[vars[k]] = static_cast<std::uint32_t>(k);
  }

  using Value = std::map<TMonomial, Vec>;

  const Value& value(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Value out;
    if (w.is_letter()) {
      const std::uint32_t v = index_.at(w.letter_name());
      for (std::size_t i = 0; i < a_.dim(); ++i) {
        const auto slot = static_cast<std::uint32_t>(v * a_.dim() + i);
        out.emplace(TMonomial{{slot, 1}}, a_.basis_element(i));
      }
    } else {
      const Value left = value(w.left());
      const Value& right = value(w.right());
      for (const auto& [ml, vl] : left)
        for (const auto& [mr, vr] : right) {
          Vec prod = a_.multiply(vl, vr);
          if (is_zero(prod)) continue;
          auto [pos, fresh] = out.try_emplace(multiply_monomials(ml, mr), std::move(prod));
          if (!fresh) {
            pos->second = pos->second + prod;
          }
        }
      std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  const Algebra& a_;
  std::map<std::string, std::uint32_t> index_;
  std::map<Word, Value> memo_;
};

std::vector<std::string> sorted_variables(const Poly& p) {
  const auto vars = p.variables();
  return {vars.begin(), vars.end()};
}

std::optional<IdentityCheck> try_assignment(const Algebra& a, const Poly& p, const std::vector<std::string>& vars,
                                            const std::vector<Vec>& elements) {
  Assignment asg;
  for (std::size_t k = 0; k < vars.size(); ++k) asg[vars[k]] = elements[k];
  Vec value = substitute(p, a, asg);
  if (is_zero(value)) return std::nullopt;
  IdentityCheck out;
  out.verdict = Verdict::Fails;
  out.witness = std::move(asg);
  out.witness_value = std::move(value);
  return out;
}

// Exhaustive search over GF(p)^(dim * nvars); assumes the count fits the budget.
std::optional<IdentityCheck> exhaustive_search(const Algebra& a, const Poly& p, const std::vector<std::string>& vars) {
  const std::uint64_t per_var = saturating_pow(a.field().characteristic(), a.dim());
  const std::uint64_t total = saturating_pow(per_var, vars.size());
  std::vector<Vec> elements(vars.size());
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      elements[k] = element_from_index(a.field(), a.dim(), rest % per_var);
      rest /= per_var;
    }
    if (auto hit = try_assignment(a, p, vars, elements)) return hit;
  }
  return std::nullopt;
}

// Some assignment where p does not vanish, for a p known to be nonzero on A.
std::optional<IdentityCheck> find_witness(const Algebra& a, const Poly& p, const std::vector<std::string>& vars,
                                          const Budget& budget) {
  const std::size_t n = a.dim();
  const std::uint64_t basis_tuples = saturating_pow(n, vars.size());
  if (basis_tuples <= budget.max_tuples) {
    std::vector<Vec> elements(vars.size());
    for (std::uint64_t t = 0; t < basis_tuples; ++t) {
      std::uint64_t rest = t;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        elements[k] = a.basis_element(rest % n);
        rest /= n;
      }
      if (auto hit = try_assignment(a, p, vars, elements)) return hit;
    }
  }
  if (a.field().is_finite() &&
      saturating_pow(saturating_pow(a.field().characteristic(), n), vars.size()) <= budget.max_tuples) {
    return exhaustive_search(a, p, vars);
  }
  std::mt19937_64 rng(0x6e616c67ULL);
  std::uniform_int_distribution<long long> coord(-3, 3);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Vec> elements(vars.size());
    for (auto& e : elements)
      for (std::size_t i = 0; i < n; ++i) e.emplace_back(a.field(), coord(rng));
    if (auto hit = try_assignment(a, p, vars, elements)) return hit;
  }
  return std::nullopt;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

IdentitySet preset_variety(std::string_view name, const Field& field) {
  const std::string key = lower(name);
  for (const PresetSpec& spec : presets()) {
    if (key != spec.key) continue;
    IdentitySet v{spec.name, field, {}};
    for (const char* text : spec.polys) v.polys.push_back(parse_poly(field, text));
    return v;
  }
  throw InvalidArgument("unknown variety '" + std::string(name) + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const PresetSpec& spec : presets()) out.emplace_back(spec.key);
    return out;
  }();
  return names;
}

IdentitySet homogenize(const IdentitySet& v) {
  IdentitySet out{v.name, v.field, {}};
  for (const Poly& p : v.polys)
    for (const auto& [type, component] : homogeneous_components(p)) out.polys.push_back(component);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

GenericValue generic_evaluation(const Algebra& a, const Poly& p, bool reduce_exponents) {
  if (!(p.field() == a.field())) throw FieldMismatch();
  GenericValue out;
  out.variables = sorted_variables(p);
  GenericEvaluator eval(a, out.variables);
  const bool reduce = reduce_exponents && a.field().is_finite();
  const std::uint64_t q = a.field().characteristic();
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [mono, vec] : eval.value(w)) {
      TMonomial key = mono;
      if (reduce) {
        for (auto& [slot, e] : key) e = static_cast<std::uint32_t>(1 + (e - 1) % (q - 1));
      }
      auto [pos, fresh] = out.coefficients.try_emplace(std::move(key), c * vec);
      if (!fresh) add_scaled(pos->second, c, vec);
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

IdentityCheck identity_holds(const Algebra& a, const Poly& p, CheckMode mode, const Budget& budget) {
  if (!(p.field() == a.field())) throw FieldMismatch();
  const std::vector<std::string> vars = sorted_variables(p);
  if (mode == CheckMode::Exhaustive) {
    if (!a.field().is_finite()) throw InvalidArgument("exhaustive mode needs a finite field");
    const std::uint64_t count = saturating_pow(saturating_pow(a.field().characteristic(), a.dim()), vars.size());
    if (count > budget.max_tuples) {
      throw BudgetExceeded("exhaustive check needs " +
                           (count == UINT64_MAX ? std::string("more than 2^64") : std::to_string(count)) +
                           " assignments, budget is " + std::to_string(budget.max_tuples));
    }
    if (auto hit = exhaustive_search(a, p, vars)) return *hit;
    return {};
  }

  const GenericValue gen = generic_evaluation(a, p);
  if (gen.coefficients.empty()) return {};
  bool refutes = !a.field().is_finite();
  if (!refutes) {
    refutes = true;
    for (const std::string& v : vars) refutes &= p.degree_in(v) < a.field().characteristic();
  }
  if (!refutes) {
    IdentityCheck out;
    out.verdict = Verdict::Inconclusive;
    out.mode_unsound = true;
    return out;
  }
  if (auto hit = find_witness(a, p, vars, budget)) return *hit;
  IdentityCheck out;
  out.verdict = Verdict::Fails;
  return out;
}

Subspace relation_subspace(const Algebra& a, const IdentitySet& v, const Budget& budget) {
  if (!(v.field == a.field())) throw FieldMismatch();
  EchelonBuilder span(a.field(), a.dim());
  for (const Poly& p : v.polys) {
    if (span.full()) break;
    if (!a.field().is_finite()) {
      for (const auto& [mono, vec] : generic_evaluation(a, p).coefficients) span.insert(vec);
      continue;
    }
    const std::vector<std::string> vars = sorted_variables(p);
    const std::uint64_t per_var = saturating_pow(a.field().characteristic(), a.dim());
    const std::uint64_t total = saturating_pow(per_var, vars.size());
    if (total > budget.max_tuples) {
      throw BudgetExceeded("exhaustive evaluation of '" + p.to_string() + "' exceeds the tuple budget");
    }
    Assignment asg;
    for (std::uint64_t t = 0; t < total && !span.full(); ++t) {
      std::uint64_t rest = t;
      for (const std::string& var : vars) {
        asg[var] = element_from_index(a.field(), a.dim(), rest % per_var);
        rest /= per_var;
      }
      span.insert(substitute(p, a, asg));
    }
  }
  return span.to_subspace();
}

Reflection reflect(const Algebra& a, const IdentitySet& v, const Budget& budget) {
  const Subspace rel = relation_subspace(a, v, budget);
  Subspace ideal = generated_ideal(a, rel.basis());
  Quotient q = quotient(a, ideal);
  return {std::move(ideal), std::move(q)};
}

std::array<Poly, 2> orzech_polynomials(const Field& field, const std::vector<Scalar>& lambdas) {
  if (lambdas.size() != 16) throw InvalidArgument("expected 16 lambdas, got " + std::to_string(lambdas.size()));
  static const char* const words[8] = {"y(zx)", "x(yz)", "y(xz)", "x(zy)", "(zx)y", "(yz)x", "(xz)y", "(zy)x"};
  std::array<Poly, 2> out = {parse_poly(field, "z(xy)"), parse_poly(field, "(xy)z")};
  for (std::size_t eq = 0; eq < 2; ++eq)
    for (std::size_t i = 0; i < 8; ++i) {
      const Scalar& l = lambdas[eq * 8 + i];
      if (!(l.field() == field)) throw FieldMismatch();
      out[eq].add_term(parse_word(words[i]), -l);
    }
  return out;
}

}  // namespace nalg
