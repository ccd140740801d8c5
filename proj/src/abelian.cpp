#include "ydforge/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ydforge {

FinAbGroup::FinAbGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("cyclic factor must be >= 1");
    order_ *= n;
  }
}

int FinAbGroup::exponent() const {
  int e = 1;
  for (int n : factors_) e = std::lcm(e, n);
  return e;
}

GroupElement FinAbGroup::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("group element index");
  std::vector<int> exps(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    exps[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GroupElement{std::move(exps)};
}

int FinAbGroup::index_of(const GroupElement& g) const {
  if (g.exponents.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int e = g.exponents[i];
    if (e < 0 || e >= factors_[i]) throw std::invalid_argument("element exponent out of range");
    idx = idx * factors_[i] + e;
  }
  return idx;
}

GroupElement FinAbGroup::identity() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement FinAbGroup::reduce(std::vector<int> exponents) const {
  if (exponents.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
  for (size_t i = 0; i < factors_.size(); ++i) {
    exponents[i] %= factors_[i];
    if (exponents[i] < 0) exponents[i] += factors_[i];
  }
  return GroupElement{std::move(exponents)};
}

GroupElement FinAbGroup::mul(const GroupElement& a, const GroupElement& b) const {
  std::vector<int> exps(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) exps[i] = a.exponents[i] + b.exponents[i];
  return reduce(std::move(exps));
}

GroupElement FinAbGroup::inv(const GroupElement& a) const {
  std::vector<int> exps(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) exps[i] = -a.exponents[i];
  return reduce(std::move(exps));
}

GroupElement FinAbGroup::power(const GroupElement& a, int k) const {
  std::vector<int> exps(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) exps[i] = a.exponents[i] * k;
  return reduce(std::move(exps));
}

int FinAbGroup::element_order(const GroupElement& a) const {
  int ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int n = factors_[i];
    const int e = a.exponents[i];
    ord = std::lcm(ord, e == 0 ? 1 : n / std::gcd(n, e));
  }
  return ord;
}

std::string FinAbGroup::element_label(const GroupElement& a) const {
  std::string s;
  for (size_t i = 0; i < a.exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.exponents[i]);
  }
  return s;
}

Character::Character(FinAbGroup group, std::vector<Scalar> gen_values)
    : group_(std::move(group)), gen_values_(std::move(gen_values)) {
  if (gen_values_.size() != static_cast<size_t>(group_.rank()))
    throw std::invalid_argument("character needs one value per generator");
  for (size_t i = 0; i < gen_values_.size(); ++i) {
    if (!gen_values_[i].pow(group_.factors()[i]).is_one())
      throw std::invalid_argument("character value is not an n_i-th root of unity");
  }
}

Scalar Character::value(const GroupElement& g) const {
  Scalar v(1);
  for (size_t i = 0; i < gen_values_.size(); ++i) {
    if (g.exponents[i] != 0) v *= gen_values_[i].pow(g.exponents[i]);
  }
  return v;
}

bool Character::is_trivial() const {
  return std::all_of(gen_values_.begin(), gen_values_.end(),
                     [](const Scalar& s) { return s.is_one(); });
}

Character Character::times(const Character& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("character product across groups");
  std::vector<Scalar> vals(gen_values_.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = gen_values_[i] * other.gen_values_[i];
  return Character(group_, std::move(vals));
}

Character character_from_index(const FinAbGroup& g, int index) {
  for (int n : g.factors()) {
    if (n > 0 && 8 % n != 0) throw UnsupportedExponent(n);
  }
  const GroupElement t = g.element(index);
  std::vector<Scalar> vals(g.factors().size());
  for (size_t i = 0; i < vals.size(); ++i) {
    vals[i] = Scalar::xi((8 / g.factors()[i]) * t.exponents[i]);
  }
  return Character(g, std::move(vals));
}

int character_index(const Character& chi) {
  const FinAbGroup& g = chi.group();
  std::vector<int> exps(g.factors().size());
  for (size_t i = 0; i < exps.size(); ++i) {
    const int n = g.factors()[i];
    const Scalar root = Scalar::xi(8 / n);
    Scalar p(1);
    int found = -1;
    for (int k = 0; k < n; ++k) {
      if (p == chi.gen_values()[i]) {
        found = k;
        break;
      }
      p *= root;
    }
    if (found < 0) throw std::invalid_argument("character not on the canonical root lattice");
    exps[i] = found;
  }
  return g.index_of(GroupElement{std::move(exps)});
}

std::vector<Character> dual_group(const FinAbGroup& g) {
  std::vector<Character> out;
  out.reserve(static_cast<size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) out.push_back(character_from_index(g, t));
  return out;
}

std::vector<int> generated_subgroup(const FinAbGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{g.index_of(g.identity())};
  std::vector<int> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int idx : frontier) {
      for (int gen : gens) {
        const int prod = g.index_of(g.mul(g.element(idx), g.element(gen)));
        if (seen.insert(prod).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_subgroup(const FinAbGroup& g, const std::vector<int>& subset) {
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(g.index_of(g.identity()))) return false;
  for (int a : subset) {
    for (int b : subset) {
      if (!s.count(g.index_of(g.mul(g.element(a), g.element(b))))) return false;
    }
  }
  return true;
}

namespace {

// pairing(t, s) = chi_t(g_s) == 1, precomputed for perp computations.
std::vector<std::vector<bool>> trivial_pairing_table(const FinAbGroup& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> table(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
  const auto chars = dual_group(g);
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      table[static_cast<size_t>(t)][static_cast<size_t>(s)] =
          chars[static_cast<size_t>(t)].value(g.element(s)).is_one();
    }
  }
  return table;
}

}  // namespace

std::vector<int> perp_of_elements(const FinAbGroup& g, const std::vector<int>& subset) {
  const auto table = trivial_pairing_table(g);
  std::vector<int> out;
  for (int t = 0; t < g.order(); ++t) {
    bool all_one = true;
    for (int s : subset) {
      if (!table[static_cast<size_t>(t)][static_cast<size_t>(s)]) {
        all_one = false;
        break;
      }
    }
    if (all_one) out.push_back(t);
  }
  return out;
}

std::vector<int> perp_of_characters(const FinAbGroup& g, const std::vector<int>& subset) {
  const auto table = trivial_pairing_table(g);
  std::vector<int> out;
  for (int s = 0; s < g.order(); ++s) {
    bool all_one = true;
    for (int t : subset) {
      if (!table[static_cast<size_t>(t)][static_cast<size_t>(s)]) {
        all_one = false;
        break;
      }
    }
    if (all_one) out.push_back(s);
  }
  return out;
}

std::vector<Character> perp(const FinAbGroup& g, const std::vector<GroupElement>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const auto& e : subset) idx.push_back(g.index_of(e));
  std::vector<Character> out;
  for (int t : perp_of_elements(g, idx)) out.push_back(character_from_index(g, t));
  return out;
}

std::vector<GroupElement> perp(const FinAbGroup& g, const std::vector<Character>& subset) {
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (const auto& chi : subset) idx.push_back(character_index(chi));
  std::vector<GroupElement> out;
  for (int s : perp_of_characters(g, idx)) out.push_back(g.element(s));
  return out;
}

namespace {

// Abstract abelian group on coset ids, used while decomposing a quotient.
struct CosetTable {
  int order = 0;
  std::vector<std::vector<int>> mul;
  int identity = 0;

  int power(int a, int k) const {
    int acc = identity;
    for (int i = 0; i < k; ++i) acc = mul[static_cast<size_t>(acc)][static_cast<size_t>(a)];
    return acc;
  }

  int element_order(int a) const {
    int acc = a, ord = 1;
    while (acc != identity) {
      acc = mul[static_cast<size_t>(acc)][static_cast<size_t>(a)];
      ++ord;
    }
    return ord;
  }
};

// Search for generators (one per cyclic factor) realizing the direct-product
// decomposition. Groups here are tiny, so a DFS over candidate generators is
// enough; the structure theorem guarantees a solution exists.
bool decompose_dfs(const CosetTable& q, std::vector<int>& gens, std::vector<int>& orders,
                   std::vector<int>& covered, int remaining) {
  if (remaining == 1) return true;
  int max_order = 1;
  for (int a = 0; a < q.order; ++a) max_order = std::max(max_order, q.element_order(a));
  // Try candidate orders from the largest down; the first factor of a valid
  // decomposition always has the maximal element order.
  for (int cand_order = max_order; cand_order > 1; --cand_order) {
    if (remaining % cand_order != 0) continue;
    for (int a = 0; a < q.order; ++a) {
      if (q.element_order(a) != cand_order) continue;
      // Direct-sum test: <a> must meet the current span only in the identity.
      std::vector<int> new_covered;
      bool ok = true;
      std::set<int> span(covered.begin(), covered.end());
      int p = q.identity;
      for (int k = 1; k < cand_order; ++k) {
        p = q.mul[static_cast<size_t>(p)][static_cast<size_t>(a)];
        if (span.count(p)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int c : covered) {
        int pw = q.identity;
        for (int k = 0; k < cand_order; ++k) {
          const int el = q.mul[static_cast<size_t>(c)][static_cast<size_t>(pw)];
          new_covered.push_back(el);
          pw = q.mul[static_cast<size_t>(pw)][static_cast<size_t>(a)];
        }
      }
      std::set<int> dedup(new_covered.begin(), new_covered.end());
      if (static_cast<int>(dedup.size()) != static_cast<int>(covered.size()) * cand_order) continue;
      gens.push_back(a);
      orders.push_back(cand_order);
      std::vector<int> saved = covered;
      covered.assign(dedup.begin(), dedup.end());
      if (decompose_dfs(q, gens, orders, covered, remaining / cand_order)) return true;
      gens.pop_back();
      orders.pop_back();
      covered = saved;
    }
    // Only the maximal order can start a decomposition step; if no element of
    // maximal order works, backtracking happens one level up.
    break;
  }
  return false;
}

}  // namespace

QuotientGroup subquotient(const FinAbGroup& g, const std::vector<int>& numerator,
                          const std::vector<int>& denominator) {
  if (!is_subgroup(g, numerator)) throw std::invalid_argument("numerator is not a subgroup");
  if (!is_subgroup(g, denominator)) throw std::invalid_argument("denominator is not a subgroup");
  const std::set<int> num(numerator.begin(), numerator.end());
  for (int s : denominator) {
    if (!num.count(s)) throw std::invalid_argument("denominator not contained in numerator");
  }

  // Partition the numerator into cosets; representative = smallest index.
  std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int a : numerator) {
    if (coset_of[static_cast<size_t>(a)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int s : denominator) {
      const int m = g.index_of(g.mul(g.element(a), g.element(s)));
      coset_of[static_cast<size_t>(m)] = id;
    }
  }

  CosetTable q;
  q.order = static_cast<int>(reps.size());
  q.identity = coset_of[static_cast<size_t>(g.index_of(g.identity()))];
  q.mul.assign(static_cast<size_t>(q.order), std::vector<int>(static_cast<size_t>(q.order)));
  for (int a = 0; a < q.order; ++a) {
    for (int b = 0; b < q.order; ++b) {
      q.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = coset_of[static_cast<size_t>(
          g.index_of(g.mul(g.element(reps[static_cast<size_t>(a)]),
                           g.element(reps[static_cast<size_t>(b)]))))];
    }
  }

  std::vector<int> gens, orders, covered{q.identity};
  if (q.order > 1 && !decompose_dfs(q, gens, orders, covered, q.order)) {
    throw std::logic_error("cyclic decomposition search failed");
  }

  QuotientGroup out;
  out.group = FinAbGroup(orders);
  // Tabulate coset id -> exponent tuple by enumerating generator powers.
  std::vector<int> coset_to_index(static_cast<size_t>(q.order), -1);
  for (int t = 0; t < out.group.order(); ++t) {
    const GroupElement e = out.group.element(t);
    int c = q.identity;
    for (size_t i = 0; i < gens.size(); ++i) {
      c = q.mul[static_cast<size_t>(c)][static_cast<size_t>(q.power(gens[i], e.exponents[i]))];
    }
    coset_to_index[static_cast<size_t>(c)] = t;
  }
  out.projection.assign(static_cast<size_t>(g.order()), -1);
  for (int a : numerator) {
    out.projection[static_cast<size_t>(a)] =
        coset_to_index[static_cast<size_t>(coset_of[static_cast<size_t>(a)])];
  }
  out.representatives.resize(static_cast<size_t>(out.group.order()));
  for (int c = 0; c < q.order; ++c) {
    out.representatives[static_cast<size_t>(coset_to_index[static_cast<size_t>(c)])] =
        reps[static_cast<size_t>(c)];
  }
  return out;
}

QuotientGroup quotient_group(const FinAbGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> all(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) all[static_cast<size_t>(a)] = a;
  return subquotient(g, all, subgroup);
}

Bicharacter::Bicharacter(FinAbGroup group, Matrix gen_matrix)
    : group_(std::move(group)), gen_matrix_(std::move(gen_matrix)) {
  const size_t r = static_cast<size_t>(group_.rank());
  if (gen_matrix_.rows() != r || gen_matrix_.cols() != r)
    throw std::invalid_argument("bicharacter generator matrix has wrong shape");
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      const Scalar& v = gen_matrix_.at(i, j);
      if (!v.pow(group_.factors()[i]).is_one() || !v.pow(group_.factors()[j]).is_one())
        throw std::invalid_argument("bicharacter value incompatible with factor orders");
    }
  }
}

Scalar Bicharacter::value(const GroupElement& a, const GroupElement& b) const {
  Scalar v(1);
  for (size_t i = 0; i < gen_matrix_.rows(); ++i) {
    if (a.exponents[i] == 0) continue;
    for (size_t j = 0; j < gen_matrix_.cols(); ++j) {
      if (b.exponents[j] == 0) continue;
      v *= gen_matrix_.at(i, j).pow(static_cast<long long>(a.exponents[i]) * b.exponents[j]);
    }
  }
  return v;
}

Scalar Bicharacter::value_by_index(int a, int b) const {
  return value(group_.element(a), group_.element(b));
}

BicharacterReport bicharacter_checks(const Bicharacter& theta) {
  const FinAbGroup& g = theta.group();
  const int n = g.order();
  BicharacterReport rep;

  rep.symmetric = true;
  for (int a = 0; a < n && rep.symmetric; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (theta.value_by_index(a, b) != theta.value_by_index(b, a)) {
        rep.symmetric = false;
        break;
      }
    }
  }

  const int unit = g.index_of(g.identity());
  rep.nondegenerate = true;
  for (int a = 0; a < n; ++a) {
    if (a == unit) continue;
    bool all_one = true;
    for (int b = 0; b < n; ++b) {
      if (!theta.value_by_index(a, b).is_one()) {
        all_one = false;
        break;
      }
    }
    if (all_one) {
      rep.nondegenerate = false;
      break;
    }
  }

  rep.orthogonality = true;
  for (int b = 0; b < n && rep.orthogonality; ++b) {
    Scalar col_sum, row_sum;
    for (int a = 0; a < n; ++a) {
      col_sum += theta.value_by_index(a, b);
      row_sum += theta.value_by_index(b, a);
    }
    const Scalar expect = (b == unit) ? Scalar(n) : Scalar(0);
    if (col_sum != expect || row_sum != expect) rep.orthogonality = false;
  }

  return rep;
}

}  // namespace ydforge
