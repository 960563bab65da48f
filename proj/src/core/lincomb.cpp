#include "lincomb.hpp"

#include <algorithm>

#include <json.hpp>

namespace pmh {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::F: return "F";
    case Basis::FDual: return "F*";
    case Basis::E: return "E";
    case Basis::H: return "H";
    case Basis::W: return "W";
    case Basis::V: return "V";
    case Basis::P: return "P";
  }
  return "?";
}

Element unit_element(Basis basis, const PackedMatrix& key) {
  Element e(basis);
  e.add_term(key, 1);
  return e;
}

Tensor tensor(const Element& a, const Element& b) {
  if (a.basis() != b.basis()) throw std::invalid_argument("basis tag mismatch in tensor");
  Tensor t(a.basis());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add_term({ka, kb}, ca * cb);
  return t;
}

std::string serialize(const Element& e) {
  nlohmann::json j;
  j["basis"] = basis_name(e.basis());
  j["terms"] = nlohmann::json::array();
  for (const auto& [k, c] : e.terms())
    j["terms"].push_back({{"matrix", format_matrix(k)}, {"coeff", to_string(c)}});
  return j.dump();
}

std::string serialize(const Tensor& t) {
  nlohmann::json j;
  j["basis"] = basis_name(t.basis());
  j["terms"] = nlohmann::json::array();
  for (const auto& [k, c] : t.terms())
    j["terms"].push_back({{"left", format_matrix(k.first)},
                          {"right", format_matrix(k.second)},
                          {"coeff", to_string(c)}});
  return j.dump();
}

std::vector<std::vector<Rational>> triangular_invert(
    const std::function<Element(const PackedMatrix&)>& expand,
    std::vector<PackedMatrix> component,
    const std::function<bool(const PackedMatrix&, const PackedMatrix&)>& before) {
  std::sort(component.begin(), component.end(), before);
  std::size_t n = component.size();
  std::map<PackedMatrix, std::size_t, detail::CanonicalKeyLess> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(component[i], i);
  auto index_of = [&](const PackedMatrix& m) -> std::size_t {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("expansion leaves the graded component");
    return it->second;
  };

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Element row = expand(component[i]);
    for (const auto& [key, coeff] : row.terms()) {
      std::size_t j = index_of(key);
      if (j > i) throw std::invalid_argument("expansion is not triangular");
      a[i][j] = coeff;
    }
    if (a[i][i] != 1) throw std::invalid_argument("expansion is not unitriangular");
  }

  // Forward substitution on a lower unitriangular matrix.
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = 0;
      for (std::size_t l = j; l < i; ++l) s += a[i][l] * inv[l][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

}  // namespace pmh
