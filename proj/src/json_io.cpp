#include "ydforge/json_io.hpp"

#include <nlohmann/json.hpp>

namespace ydforge {

OrderedJson scalar_to_json(const Scalar& s) {
  OrderedJson j = OrderedJson::array();
  for (int i = 0; i < 4; ++i) j.push_back(rational_to_string(s.coord(i)));
  return j;
}

Scalar scalar_from_json(const OrderedJson& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("Scalar wants 4 coordinates");
  std::array<Rational, 4> c;
  for (size_t i = 0; i < 4; ++i) c[i] = rational_from_string(j[i].get<std::string>());
  return Scalar::from_coords(std::move(c));
}

OrderedJson vec_to_json(const Vec& v) {
  OrderedJson j = OrderedJson::array();
  for (const Scalar& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Vec vec_from_json(const OrderedJson& j) {
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

OrderedJson matrix_to_json(const Matrix& m) {
  OrderedJson j = OrderedJson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const OrderedJson& j) {
  const size_t rows = j.size();
  const size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

OrderedJson group_to_json(const FinAbGroup& g) { return OrderedJson{{"factors", g.factors()}}; }

FinAbGroup group_from_json(const OrderedJson& j) {
  return FinAbGroup(j.at("factors").get<std::vector<int>>());
}

OrderedJson element_to_json(const GroupElement& e) { return OrderedJson{{"e", e.exponents}}; }

GroupElement element_from_json(const OrderedJson& j) {
  return GroupElement{j.at("e").get<std::vector<int>>()};
}

OrderedJson character_to_json(const Character& chi) {
  OrderedJson j = OrderedJson::array();
  for (const Scalar& s : chi.gen_values()) j.push_back(scalar_to_json(s));
  return j;
}

Character character_from_json(const FinAbGroup& g, const OrderedJson& j) {
  std::vector<Scalar> vals;
  for (const auto& e : j) vals.push_back(scalar_from_json(e));
  return Character(g, std::move(vals));
}

OrderedJson bicharacter_to_json(const Bicharacter& theta) {
  return OrderedJson{{"group", group_to_json(theta.group())},
                     {"matrix", matrix_to_json(theta.gen_matrix())}};
}

Bicharacter bicharacter_from_json(const OrderedJson& j) {
  return Bicharacter(group_from_json(j.at("group")), matrix_from_json(j.at("matrix")));
}

OrderedJson algebra_to_json(const YDAlgebra& a) {
  OrderedJson j;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  OrderedJson mult = OrderedJson::array();
  for (int i = 0; i < a.dim; ++i) {
    OrderedJson plane = OrderedJson::array();
    for (int k = 0; k < a.dim; ++k) {
      OrderedJson row = OrderedJson::array();
      for (int l = 0; l < a.dim; ++l) row.push_back(scalar_to_json(a.mult_at(i, k, l)));
      plane.push_back(std::move(row));
    }
    mult.push_back(std::move(plane));
  }
  j["mult"] = std::move(mult);
  j["unit"] = vec_to_json(a.unit);
  OrderedJson coprod = OrderedJson::array();
  for (int k = 0; k < a.dim; ++k) {
    OrderedJson plane = OrderedJson::array();
    for (int i = 0; i < a.dim; ++i) {
      OrderedJson row = OrderedJson::array();
      for (int l = 0; l < a.dim; ++l) row.push_back(scalar_to_json(a.coprod_at(k, i, l)));
      plane.push_back(std::move(row));
    }
    coprod.push_back(std::move(plane));
  }
  j["coprod"] = std::move(coprod);
  j["counit"] = vec_to_json(a.counit);
  j["antipode"] = matrix_to_json(a.antipode);
  j["group"] = group_to_json(a.group);
  OrderedJson action, coaction;
  for (int g = 0; g < a.group.order(); ++g) {
    const std::string key = a.group.element_label(a.group.element(g));
    action[key] = matrix_to_json(a.action[static_cast<size_t>(g)]);
    coaction[key] = matrix_to_json(a.coaction[static_cast<size_t>(g)]);
  }
  j["action"] = std::move(action);
  j["coaction"] = std::move(coaction);
  return j;
}

namespace {

int element_index_from_key(const FinAbGroup& g, const std::string& key) {
  std::vector<int> exps;
  size_t pos = 0;
  while (pos <= key.size()) {
    const size_t comma = key.find(',', pos);
    const std::string part = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
    exps.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return g.index_of(GroupElement{std::move(exps)});
}

}  // namespace

YDAlgebra algebra_from_json(const OrderedJson& j) {
  YDAlgebra a;
  a.dim = j.at("dim").get<int>();
  a.labels = j.at("labels").get<std::vector<std::string>>();
  const size_t n = static_cast<size_t>(a.dim);
  a.mult.assign(n * n * n, Scalar(0));
  const auto& mult = j.at("mult");
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l)
        a.mult_at(i, k, l) = scalar_from_json(mult[static_cast<size_t>(i)][static_cast<size_t>(k)][static_cast<size_t>(l)]);
  a.unit = vec_from_json(j.at("unit"));
  a.coprod.assign(n * n * n, Scalar(0));
  const auto& coprod = j.at("coprod");
  for (int k = 0; k < a.dim; ++k)
    for (int i = 0; i < a.dim; ++i)
      for (int l = 0; l < a.dim; ++l)
        a.coprod_at(k, i, l) = scalar_from_json(coprod[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(l)]);
  a.counit = vec_from_json(j.at("counit"));
  a.antipode = matrix_from_json(j.at("antipode"));
  a.group = group_from_json(j.at("group"));
  a.action.assign(static_cast<size_t>(a.group.order()), Matrix());
  a.coaction.assign(static_cast<size_t>(a.group.order()), Matrix());
  for (const auto& [key, value] : j.at("action").items()) {
    a.action[static_cast<size_t>(element_index_from_key(a.group, key))] = matrix_from_json(value);
  }
  for (const auto& [key, value] : j.at("coaction").items()) {
    a.coaction[static_cast<size_t>(element_index_from_key(a.group, key))] = matrix_from_json(value);
  }
  a.validate();
  return a;
}

OrderedJson axiom_report_to_json(const AxiomReport& r) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return OrderedJson{{"all_passed", r.all_passed()}, {"checks", std::move(checks)}};
}

namespace {

OrderedJson elements_to_json(const FinAbGroup& g, const std::vector<int>& indices) {
  OrderedJson arr = OrderedJson::array();
  for (int idx : indices) arr.push_back(g.element_label(g.element(idx)));
  return arr;
}

OrderedJson combo_to_json(const GroupLikeSet& basis, const Vec& coords) {
  OrderedJson obj;
  for (size_t t = 0; t < coords.size(); ++t) {
    if (!coords[t].is_zero()) obj[basis.labels[t]] = scalar_to_json(coords[t]);
  }
  return obj;
}

}  // namespace

OrderedJson core_report_to_json(const YDAlgebra& a, const GroupLikeSet& basis,
                                const CoreReport& r) {
  const FinAbGroup& g = a.group;
  OrderedJson j;
  j["eta"] = r.eta_label;
  j["eta_coeffs"] = vec_to_json(r.eta);
  j["inertia_group"] = elements_to_json(g, r.stab.inertia);
  j["isotropy_group"] = elements_to_json(g, r.stab.isotropy);  // character index tuples
  j["isotropy_perp"] = elements_to_json(g, r.stab.isotropy_perp);
  j["inertia_perp"] = elements_to_json(g, r.stab.inertia_perp);
  j["index_group"] = group_to_json(r.stab.index_group.group);
  j["index"] = r.stab.index;
  OrderedJson orbit = OrderedJson::array();
  for (const Vec& v : r.stab.orbit) {
    const int t = basis.find(v);
    orbit.push_back(t >= 0 ? OrderedJson(basis.labels[static_cast<size_t>(t)])
                           : OrderedJson(vec_to_json(v)));
  }
  j["orbit"] = std::move(orbit);
  j["eta_prime"] = basis.labels[static_cast<size_t>(r.eta_prime_index)];
  OrderedJson omegas = OrderedJson::array();
  for (int t : r.omega_indices) omegas.push_back(basis.labels[static_cast<size_t>(t)]);
  j["core_basis"] = std::move(omegas);
  j["m"] = r.m;
  OrderedJson checks;
  for (const auto& c : r.cross_checks) checks[c.name] = c.passed;
  j["cross_checks"] = std::move(checks);
  j["eta_prime_independent"] = r.eta_prime_independent;
  j["core_axioms_over_index_group"] = r.core_axioms_ok;
  j["representative_choice_consistent"] = r.rep_choice_consistent;
  j["trivial"] = r.trivial;
  j["completely_trivial"] = r.completely_trivial;
  if (!r.triviality_witness.empty()) j["triviality_witness"] = r.triviality_witness;
  return j;
}

OrderedJson scan_report_to_json(const YDAlgebra& a, const GroupLikeSet& basis,
                                const ScanReport& r) {
  OrderedJson per = OrderedJson::array();
  for (const auto& rep : r.per_eta) per.push_back(core_report_to_json(a, basis, rep));
  return OrderedJson{{"all_cores_trivial", r.all_cores_trivial},
                     {"all_checks_passed", r.all_checks_passed},
                     {"cores", std::move(per)}};
}

OrderedJson build_document(const BuiltExample& built) {
  OrderedJson j;
  j["example"] = built.spec.which == WhichExample::One ? 1 : 2;
  j["zeta"] = zeta_label(built.spec.zeta);
  j["algebra"] = algebra_to_json(built.algebra);
  j["grouplike_basis"] =
      OrderedJson{{"labels", built.grouplike_labels}, {"matrix", matrix_to_json(built.basis_change)}};
  j["theta"] = bicharacter_to_json(built.theta);
  return j;
}

OrderedJson tables_to_json(const BuiltExample& built, const GrouplikeTables& tables) {
  GroupLikeSet basis;
  basis.labels = built.grouplike_labels;
  const auto table_json = [&](const std::array<std::array<Vec, 4>, 4>& table,
                              const std::string& row_prefix, const std::string& col_prefix) {
    OrderedJson obj;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        const std::string key =
            row_prefix + std::to_string(i + 1) + "*" + col_prefix + std::to_string(k + 1);
        obj[key] = combo_to_json(basis, table[static_cast<size_t>(i)][static_cast<size_t>(k)]);
      }
    }
    return obj;
  };
  OrderedJson j;
  j["example"] = built.spec.which == WhichExample::One ? 1 : 2;
  j["zeta"] = zeta_label(built.spec.zeta);
  j["omega_omega"] = table_json(tables.omega_omega, "omega", "omega");
  j["omega_eta"] = table_json(tables.omega_eta, "omega", "eta");
  j["eta_omega"] = table_json(tables.eta_omega, "eta", "omega");
  j["eta_eta"] = table_json(tables.eta_eta, "eta", "eta");
  return j;
}

}  // namespace ydforge
