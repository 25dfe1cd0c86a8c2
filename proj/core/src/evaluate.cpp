#include "nalg/evaluate.hpp"

namespace nalg {

namespace {

class Evaluator {
 public:
  Evaluator(const Algebra& a, const Assignment& assignment) : a_(a), assignment_(assignment) {
    for (const auto& [name, v] : assignment) {
      if (v.size() != a.dim()) throw DimensionMismatch("assigned element for '" + name + "' has wrong length");
      for (const Scalar& s : v)
        if (!(s.field() == a.field())) throw FieldMismatch();
    }
  }

  const Vec& value(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Vec v;
    if (w.is_letter()) {
      auto found = assignment_.find(w.letter_name());
      v = found == assignment_.end() ? a_.zero_element() : found->second;
    } else {
      const Vec left = value(w.left());
      v = is_zero(left) ? a_.zero_element() : a_.multiply(left, value(w.right()));
    }
    return memo_.emplace(w, std::move(v)).first->second;
  }

 private:
  const Algebra& a_;
  const Assignment& assignment_;
  std::map<Word, Vec> memo_;
};

}  // namespace

Vec substitute(const Poly& p, const Algebra& a, const Assignment& assignment) {
  if (!(p.field() == a.field())) throw FieldMismatch();
  Evaluator eval(a, assignment);
  Vec out = a.zero_element();
  for (const auto& [w, c] : p.terms()) add_scaled(out, c, eval.value(w));
  return out;
}

std::vector<Vec> vandermonde_split(const Poly& p, const std::string& variable, const Algebra& a,
                                   const Assignment& assignment) {
  if (!(p.field() == a.field())) throw FieldMismatch();
  const Field& f = a.field();
  const std::size_t k = p.degree_in(variable);
  const std::vector<Scalar> alphas = distinct_scalars(f, k + 1);
  const auto base = assignment.find(variable);
  const Vec x = base == assignment.end() ? a.zero_element() : base->second;

  // values[j] = sum_i alpha_j^i phi_i
  std::vector<Vec> values;
  for (const Scalar& alpha : alphas) {
    Assignment scaled = assignment;
    scaled[variable] = alpha * x;
    values.push_back(substitute(p, a, scaled));
  }
  Matrix vandermonde(f, k + 1, k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i <= k; ++i) vandermonde(j, i) = alphas[j].pow(i);
  const Matrix inv = *vandermonde.inverse();

  std::vector<Vec> parts(k + 1, a.zero_element());
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) add_scaled(parts[i], inv(i, j), values[j]);
  return parts;
}

std::vector<Vec> graded_evaluation(const Poly& p, const std::string& variable, const Algebra& a,
                                   const Assignment& assignment) {
  const std::size_t k = p.degree_in(variable);
  std::vector<Poly> groups(k + 1, Poly(p.field()));
  for (const auto& [w, c] : p.terms()) groups[w.degree(variable)].add_term(w, c);
  std::vector<Vec> out;
  for (const Poly& g : groups) out.push_back(substitute(g, a, assignment));
  return out;
}

}  // namespace nalg
