#pragma once

// JSON interchange for polynomial forms:
//   {dim, degree, terms: [{idx: [1-based], poly: [{exps: [..], num, den}]}]}
// num/den are JSON integers when they fit in 64 bits and decimal strings otherwise.

#include "helicap/poly_form.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace helicap {

namespace detail {

inline nlohmann::json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

inline mpz_class integer_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument(where + ": not an integer string");
    return z;
  }
  throw std::invalid_argument(where + ": expected integer");
}

}  // namespace detail

inline nlohmann::json to_json(const PolyForm& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [idx, p] : f.terms()) {
    nlohmann::json jidx = nlohmann::json::array();
    for (auto i : idx) jidx.push_back(i + 1);
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
      poly.push_back({{"exps", e},
                      {"num", detail::integer_to_json(c.get_num())},
                      {"den", detail::integer_to_json(c.get_den())}});
    }
    terms.push_back({{"idx", jidx}, {"poly", poly}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", terms}};
}

inline PolyForm form_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("form: expected object");
  for (const char* key : {"dim", "degree", "terms"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("form: missing field '") + key + "'");
  const auto dim = j.at("dim").get<std::size_t>();
  const auto degree = j.at("degree").get<std::size_t>();
  PolyForm::Terms terms;
  std::size_t t = 0;
  for (const auto& jt : j.at("terms")) {
    const std::string where = "form.terms[" + std::to_string(t++) + "]";
    std::vector<std::size_t> idx;
    for (const auto& v : jt.at("idx")) {
      auto i = v.get<std::size_t>();
      if (i < 1 || i > dim) throw std::invalid_argument(where + ".idx: index out of range 1.." + std::to_string(dim));
      idx.push_back(i - 1);
    }
    Polynomial p(dim);
    std::size_t q = 0;
    for (const auto& jm : jt.at("poly")) {
      const std::string mwhere = where + ".poly[" + std::to_string(q++) + "]";
      auto exps = jm.at("exps").get<Exponents>();
      if (exps.size() != dim) throw std::invalid_argument(mwhere + ".exps: length must equal dim");
      mpz_class num = detail::integer_from_json(jm.at("num"), mwhere + ".num");
      mpz_class den = jm.contains("den") ? detail::integer_from_json(jm.at("den"), mwhere + ".den") : mpz_class(1);
      if (den == 0) throw std::invalid_argument(mwhere + ".den: zero denominator");
      Rational c(num, den);
      c.canonicalize();
      p.add_term(exps, c);
    }
    MultiIndex key(idx);
    auto [it, inserted] = terms.try_emplace(key, p);
    if (!inserted) it->second += p;
  }
  return PolyForm(dim, degree, terms);
}

}  // namespace helicap
